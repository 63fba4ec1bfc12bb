"""Exact arithmetic for curves on a torus: slopes, mapping classes,
negative continued fractions.

A curve class (x, y) on R^2/Z^2 means x times the meridian (1,0) plus
y times the longitude (0,1).  Its slope is y/x, an element of Q u {oo},
stored as a normalized integer pair: gcd(|num|,|den|) = 1, den >= 0,
infinity = (1,0), zero = (0,1).  This is the unique convention under
which the standard neighborhood of a curve with twisting k has boundary
slope 1/k and the projective matrix action reproduces the gluing
computations used throughout the census modules.

Mapping classes are integer 2x2 matrices of determinant +-1 acting on
column vectors (x, y), hence projectively on slopes.  Negative continued
fractions [a0, ..., ak] (all entries <= -2) expand each rational <= -1
uniquely; [-1] is admitted as a documented degenerate expansion of -1.

All arithmetic is exact (int / Fraction); floats never appear.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd


class Slope:
    """A normalized extended rational y/x with den >= 0 and gcd 1."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=1):
        if num == 0 and den == 0:
            raise ValueError("degenerate class")
        if den < 0:
            num, den = -num, -den
        if den == 0:
            num = 1
        else:
            g = gcd(abs(num), den)
            num //= g
            den //= g
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, name, value):
        raise AttributeError("Slope is immutable")

    @property
    def is_infinity(self):
        return self.den == 0

    def as_fraction(self) -> Fraction:
        if self.is_infinity:
            raise ValueError("infinite slope has no Fraction value")
        return Fraction(self.num, self.den)

    @classmethod
    def from_fraction(cls, f: Fraction) -> "Slope":
        return cls(f.numerator, f.denominator)

    INFINITY: "Slope"

    @classmethod
    def parse(cls, text: str) -> "Slope":
        """Parse 'num/den', an integer, or 'inf'/'oo' (exact, no floats)."""
        t = text.strip()
        if t in ("inf", "oo", "infinity", "Inf"):
            return cls(1, 0)
        if "/" in t:
            n, d = t.split("/", 1)
            return cls(int(n), int(d))
        return cls(int(t), 1)

    def reciprocal(self) -> "Slope":
        if self.num == 0:
            return Slope(1, 0)
        return Slope(self.den, self.num)

    def __eq__(self, other):
        return (
            isinstance(other, Slope)
            and self.num == other.num
            and self.den == other.den
        )

    def __hash__(self):
        return hash((self.num, self.den))

    def __lt__(self, other):
        # Linear order on Q u {oo} with oo greatest (the wrap-at-oo order).
        if self == other:
            return False
        if self.is_infinity:
            return False
        if other.is_infinity:
            return True
        return self.num * other.den < other.num * self.den

    def __le__(self, other):
        return self == other or self < other

    def __gt__(self, other):
        return not (self <= other)

    def __ge__(self, other):
        return not (self < other)

    def __repr__(self):
        return "Slope(%d, %d)" % (self.num, self.den)

    def __str__(self):
        if self.is_infinity:
            return "inf"
        if self.den == 1:
            return str(self.num)
        return "%d/%d" % (self.num, self.den)


Slope.INFINITY = Slope(1, 0)


@dataclass(frozen=True)
class CurveClass:
    """Integer homology class x*meridian + y*longitude on the torus."""

    x: int
    y: int

    def primitive(self) -> "CurveClass":
        if self.x == 0 and self.y == 0:
            raise ValueError("degenerate class")
        g = gcd(abs(self.x), abs(self.y))
        return CurveClass(self.x // g, self.y // g)

    def __neg__(self):
        return CurveClass(-self.x, -self.y)


MERIDIAN = CurveClass(1, 0)
LONGITUDE = CurveClass(0, 1)


def slope_of_class(c: CurveClass) -> Slope:
    """Slope y/x of the class x*mu + y*lambda; (1,0) -> 0, (0,1) -> oo."""
    if c.x == 0 and c.y == 0:
        raise ValueError("degenerate class")
    return Slope(c.y, c.x)


def class_of_slope(s: Slope) -> CurveClass:
    """A primitive lift of the slope; well defined up to overall sign."""
    return CurveClass(s.den, s.num)


@dataclass(frozen=True)
class MappingClass:
    """Integer 2x2 matrix [[a, b], [c, d]] acting on curve classes."""

    a: int
    b: int
    c: int
    d: int

    def det(self) -> int:
        return self.a * self.d - self.b * self.c

    def __mul__(self, other: "MappingClass") -> "MappingClass":
        return MappingClass(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    def inverse(self) -> "MappingClass":
        det = self.det()
        if det == 1:
            return MappingClass(self.d, -self.b, -self.c, self.a)
        if det == -1:
            return MappingClass(-self.d, self.b, self.c, -self.a)
        raise ValueError("not invertible over the integers")

    def apply(self, c: CurveClass) -> CurveClass:
        return CurveClass(self.a * c.x + self.b * c.y, self.c * c.x + self.d * c.y)

    def is_involution(self) -> bool:
        return self * self == identity()

    def __pow__(self, n: int) -> "MappingClass":
        if n < 0:
            return self.inverse() ** (-n)
        result = identity()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result


def identity() -> MappingClass:
    return MappingClass(1, 0, 0, 1)


def act(m: MappingClass, s: Slope) -> Slope:
    """Projective action on slopes: lift, multiply, renormalize."""
    if abs(m.det()) != 1:
        raise ValueError("mapping class must have determinant +-1")
    image = m.apply(class_of_slope(s))
    return slope_of_class(image)


MERIDIAN_TWIST = "meridian"
LONGITUDE_TWIST = "longitude"


def dehn_twist(kind: str, power: int = 1) -> MappingClass:
    """Twist matrix along the meridian or the longitude.

    The meridian twist sends slope s to s/(1 + n*s); the longitude twist
    sends s to s + n.  Compositions are ordinary matrix products.
    """
    if kind == MERIDIAN_TWIST:
        return MappingClass(1, power, 0, 1)
    if kind == LONGITUDE_TWIST:
        return MappingClass(1, 0, power, 1)
    raise ValueError("twist kind must be 'meridian' or 'longitude'")


def eigen_slope(m: MappingClass, eigenvalue: int) -> Slope:
    """Slope of an integral eigenvector of an involution with det -1.

    Such a matrix has trace 0 and eigenvalues +1, -1; both eigenspaces
    are spanned by primitive integer vectors.
    """
    if eigenvalue not in (1, -1):
        raise ValueError("eigenvalue must be +1 or -1")
    if m.det() != -1 or not m.is_involution():
        raise ValueError("not an involution")
    # (m - eigenvalue*I) v = 0 has kernel (b, eigenvalue - a) when nonzero.
    v = CurveClass(m.b, eigenvalue - m.a)
    if v.x == 0 and v.y == 0:
        v = CurveClass(eigenvalue - m.d, m.c)
    v = v.primitive()
    assert m.apply(v) == CurveClass(eigenvalue * v.x, eigenvalue * v.y)
    return slope_of_class(v)


@dataclass(frozen=True)
class NegCF:
    """Negative continued fraction [a0, ..., ak], all entries <= -2.

    The single degenerate expansion [-1] is admitted so that slope -1
    has a census key; every other admissible list has entries <= -2.
    """

    coeffs: tuple

    def __post_init__(self):
        cs = tuple(int(c) for c in self.coeffs)
        object.__setattr__(self, "coeffs", cs)
        if not cs:
            raise ValueError("empty coefficient list")
        if cs != (-1,) and any(c > -2 for c in cs):
            raise ValueError("coefficients must be <= -2")

    def __len__(self):
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __str__(self):
        return "[" + ",".join(str(c) for c in self.coeffs) + "]"


def _eval_chain(coeffs) -> Fraction:
    """a0 - 1/(a1 - 1/(... - 1/ak)) for an arbitrary integer list."""
    coeffs = list(coeffs)
    if not coeffs:
        raise ValueError("empty coefficient list")
    value = Fraction(coeffs[-1])
    for a in reversed(coeffs[:-1]):
        if value == 0:
            raise ValueError("continued fraction hits division by zero")
        value = a - 1 / value
    return value


def neg_cf_eval(cf) -> Slope:
    """Exact value of a negative continued fraction, as a Slope."""
    coeffs = cf.coeffs if isinstance(cf, NegCF) else tuple(cf)
    return Slope.from_fraction(_eval_chain(coeffs))


def neg_cf_expand(s: Slope) -> NegCF:
    """Expand a rational slope <= -1 with all coefficients <= -2.

    The expansion is the greedy one: a0 = floor(s), then recurse on
    1/(a0 - s).  It terminates because denominators strictly decrease,
    and it is the unique all-<=-2 expansion for s < -1.
    """
    if s.is_infinity or s > Slope(-1):
        raise ValueError("out of expansion domain")
    if s == Slope(-1):
        return NegCF((-1,))
    coeffs = []
    value = s.as_fraction()
    while True:
        if value.denominator == 1:
            coeffs.append(value.numerator)
            break
        a = value.numerator // value.denominator  # floor, exact
        coeffs.append(a)
        value = 1 / (a - value)
    result = NegCF(tuple(coeffs))
    assert neg_cf_eval(result) == s
    return result


def cf_bracket_inverse(coeffs) -> Slope:
    """Reciprocal of the continued-fraction value of an integer list."""
    value = neg_cf_eval(coeffs)
    if value.num == 0:
        raise ValueError("continued fraction evaluates to zero")
    return value.reciprocal()
