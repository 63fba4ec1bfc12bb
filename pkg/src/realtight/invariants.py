"""Rational Thurston-Bennequin numbers of the real Legendrian parts.

Heegaard-side values come from gcd bookkeeping: with g = gcd(q-1, p) and
h = gcd(q+1, p) the real knot of a B-structure has tb = -1/p, while the
genus-1 candidates carry p/g^2 - 2p/(gh) (reflection gluing) and
p/h^2 - 2p/(gh) (its sign twin); the two expressions swap under g <-> h.

Singularity-side values for the links of +-x^p - y^2 + z^2 = 0 are read
off resolution data: the minimal resolution graph is the linear chain of
p-1 vertices of weight -2, a real form acts on it either fixing every
vertex or as the mirror symmetry, and the Euler characteristics of the
fixed surfafes plus one bracket-inverse correction term give the exact
rational twisting.  Matching the two sides is the cross-check that pins
the identification of the unique B-structure with the + singularity
link.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .slopes import cf_bracket_inverse

IDENTITY_INVOLUTION = "identity"
MIRROR_INVOLUTION = "mirror"


def gh(p: int, q: int) -> tuple:
    """(gcd(q-1, p), gcd(q+1, p)); gcd(0, p) is p."""
    if gcd(p, q) != 1:
        raise ValueError("p and q must be coprime")
    return gcd(q - 1, p), gcd(q + 1, p)


def _require_involutive_q(p: int, q: int):
    if (q * q - 1) % p:
        raise ValueError("q^2 must be 1 mod p")


def tb_type_B(p: int, q: int) -> Fraction:
    """tb of each real component of the unique B-structure: -1/p."""
    if q % p not in (1 % p, (p - 1) % p):
        raise ValueError("B-structures need q = 1 or q = p-1")
    return Fraction(-1, p)


def tb_type_Cprime(p: int, q: int) -> Fraction:
    """p/g^2 - 2p/(gh) for the reflection-type genus-1 real part."""
    _require_involutive_q(p, q)
    g, h = gh(p, q)
    return Fraction(p, g * g) - Fraction(2 * p, g * h)


def tb_type_C(p: int, q: int) -> Fraction:
    """p/h^2 - 2p/(gh); the g <-> h mirror of the C' value."""
    _require_involutive_q(p, q)
    g, h = gh(p, q)
    return Fraction(p, h * h) - Fraction(2 * p, g * h)


@dataclass(frozen=True)
class ResolutionGraph:
    """Linear plumbing chain with an involution acting on the vertices."""

    weights: tuple
    involution: str

    def __post_init__(self):
        object.__setattr__(self, "weights", tuple(int(w) for w in self.weights))
        if self.involution not in (IDENTITY_INVOLUTION, MIRROR_INVOLUTION):
            raise ValueError("involution must fix vertices or mirror the chain")

    @classmethod
    def a_chain(cls, p: int, involution: str) -> "ResolutionGraph":
        """The length-(p-1) chain of (-2)-vertices resolving +-x^p-y^2+z^2."""
        if p < 2:
            raise ValueError("chain needs p >= 2")
        return cls((-2,) * (p - 1), involution)

    def fixed_vertices(self) -> int:
        n = len(self.weights)
        if self.involution == IDENTITY_INVOLUTION:
            return n
        return n % 2  # mirror fixes only the middle vertex of an odd chain

    def is_automorphism(self) -> bool:
        return self.weights == tuple(reversed(self.weights))


def real_surface_genus(p: int, sign: str) -> int:
    """Genus of the fixed surface in the resolved A-chain for each sign.

    The minus form fixes the whole chain and carries genus (p-1)/2 for
    odd p, genus p/2 - 1 for even p; the plus form is mirror-symmetric
    with genus 0 (a sphere piece for odd p, an annulus for even p).
    """
    if sign == "-":
        return (p - 1) // 2 if p % 2 else p // 2 - 1
    if sign == "+":
        return 0
    raise ValueError("sign must be '+' or '-'")


def tb_singularity_link(p: int, sign: str) -> Fraction:
    """tb of one real component of the link of sign*x^p - y^2 + z^2 = 0.

    Odd p = 2k+1: the minus form gives -chi of a genus-(p-1)/2 surface
    with one boundary circle; the plus form needs one extra equivariant
    blow-up whose correction enters through a bracket inverse:

        tb(+) = -1 - 2 * [-3, -2, ..., -2]^{-1}   (k-1 copies of -2)

    which evaluates to -1/p exactly.  Even p = 2k: the minus form gives
    (k-1) - k/2 = p/4 - 1 per component and the plus form
    (1/4)(-2 + 2(k-1)/k) = -1/p.
    """
    if p < 2:
        raise ValueError("the chain singularity needs p >= 2")
    if sign not in ("+", "-"):
        raise ValueError("sign must be '+' or '-'")
    graph = ResolutionGraph.a_chain(
        p, MIRROR_INVOLUTION if sign == "+" else IDENTITY_INVOLUTION
    )
    assert graph.is_automorphism()
    genus = real_surface_genus(p, sign)
    if p % 2:
        k = (p - 1) // 2
        if sign == "-":
            # -chi(S) for one boundary component: 2*genus - 1.
            return Fraction(2 * genus - 1)
        correction = cf_bracket_inverse([-3] + [-2] * (k - 1)) if k >= 1 else None
        if correction is None:
            raise ValueError("p must be at least 3 for the plus form")
        value = Fraction(-1) - 2 * correction.as_fraction()
        assert value == Fraction(-1, p)
        return value
    k = p // 2
    if sign == "-":
        # Per real component: (k - 1) - k/2, with genus(S) = k - 1.
        return Fraction(genus) - Fraction(k, 2)
    value = Fraction(1, 4) * (-2 + 2 * Fraction(k - 1, k))
    assert value == Fraction(-1, p)
    return value


@dataclass(frozen=True)
class CrossCheckReport:
    p: int
    passed: bool
    plus_link: Fraction
    b_value: Fraction
    minus_link: Fraction
    cprime_value: Fraction

    def to_json(self) -> dict:
        return {
            "p": self.p,
            "passed": self.passed,
            "plus_link": str(self.plus_link),
            "b_value": str(self.b_value),
            "minus_link": str(self.minus_link),
            "cprime_value": str(self.cprime_value),
        }


def cross_check_eksEn(p: int) -> CrossCheckReport:
    """Match singularity-link tb values against the Heegaard-side ones.

    The plus link must reproduce the B-value -1/p and the minus link the
    C'-value at q = p-1 (p-2 for odd p, p/4-1 for even p).  A failure
    signals an implementation bug, not a mathematical possibility.
    """
    if p < 3:
        raise ValueError("cross-check needs p >= 3")
    plus = tb_singularity_link(p, "+")
    minus = tb_singularity_link(p, "-")
    b_val = tb_type_B(p, p - 1)
    cp_val = tb_type_Cprime(p, p - 1)
    return CrossCheckReport(p, plus == b_val and minus == cp_val, plus, b_val, minus, cp_val)


@dataclass(frozen=True)
class ObstructionReport:
    p: int
    q: int
    b_value: Fraction
    genus1_value: Fraction
    mismatch: bool

    @property
    def verdict(self) -> str:
        if self.mismatch:
            return "genus-1 real contact Heegaard impossible"
        return "no obstruction from twisting numbers"

    def to_json(self) -> dict:
        return {
            "p": self.p,
            "q": self.q,
            "b_value": str(self.b_value),
            "genus1_value": str(self.genus1_value),
            "mismatch": self.mismatch,
            "verdict": self.verdict,
        }


def genus1_obstruction(p: int, q: int) -> ObstructionReport:
    """Compare the B-structure tb with the hypothetical genus-1 value.

    A B-real L(p,1) would need a C'-type convex Heegaard torus and a
    B-real L(p,p-1) a C-type one; the twisting numbers disagree for all
    p > 2, so the invariant Heegaard torus can never be made convex
    equivariantly.
    """
    if p <= 2:
        raise ValueError("obstruction defined for p > 2")
    if q not in (1, p - 1):
        raise ValueError("q must be 1 or p-1")
    b_val = tb_type_B(p, q)
    hypothetical = tb_type_Cprime(p, q) if q == 1 else tb_type_C(p, q)
    return ObstructionReport(p, q, b_val, hypothetical, b_val != hypothetical)
