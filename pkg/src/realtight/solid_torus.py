"""Census of real tight solid tori and slices.

The four real structures on S^1 x D^2 restrict to the boundary torus as
affine involutions of R^2/Z^2 (coordinates: x along the meridian, y
along the longitude):

    c1: (x, y) -> (1/2 - x, -y)     hyperelliptic
    c2: (x, y) -> (x + 1/2, y)
    c3: (x, y) -> (x, y + 1/2)
    c4: (x, y) -> (x + 1/2, y + 1/2)

With the boundary convex and exactly two dividing curves, the c2-, c3-
and c4-real tight solid tori are precisely the standard equivariant
neighborhoods of real and Legendrian knots, so their boundary slopes
are the reciprocal integers 1/k with a parity constraint on k.  The c1
census is partial: an exact signed pair at slopes 1/k, a Catalan upper
bound at negative integer slopes, and the non-equivariant count as a
reference bound elsewhere.  Every answer is a CountResult carrying its
provenance note.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb

from .slopes import MappingClass, NegCF, Slope, identity, neg_cf_expand

C1, C2, C3, C4 = "c1", "c2", "c3", "c4"
SOLID_TORUS_KINDS = (C1, C2, C3, C4)

# Provenance tags used in census notes (stable strings for table output).
TAG_NEIGHBORHOOD = "standard equivariant neighborhood classification"
TAG_SLOPE_RULE = "reciprocal-integer slope rule"
TAG_SIGNED_PAIR = "signed pair at reciprocal-integer slopes"
TAG_DISK_CONFIGS = "horizontal-disk configuration bound"
TAG_NO_BASIC = "no equivariant basic slice (hyperelliptic)"
TAG_DOUBLE_PAIR = "signed pair of genuine double slices"
TAG_NO_DOUBLE = "no equivariant double slice (translation structures)"
TAG_NO_BASIC_TRANSLATION = "both candidate basic-slice shapes excluded"
TAG_REFERENCE = "non-equivariant reference count"


@dataclass(frozen=True)
class AffineTorusMap:
    """Affine map v -> linear*v + translation on R^2/Z^2."""

    linear: MappingClass
    translation: tuple  # pair of Fractions mod 1

    def __post_init__(self):
        tx, ty = self.translation
        object.__setattr__(
            self, "translation", (Fraction(tx) % 1, Fraction(ty) % 1)
        )

    def compose(self, other: "AffineTorusMap") -> "AffineTorusMap":
        ox, oy = other.translation
        tx, ty = self.translation
        lin = self.linear
        return AffineTorusMap(
            lin * other.linear,
            (lin.a * ox + lin.b * oy + tx, lin.c * ox + lin.d * oy + ty),
        )

    def is_involution(self) -> bool:
        square = self.compose(self)
        return square.linear == identity() and square.translation == (0, 0)

    def conjugate_by(self, m: MappingClass) -> "AffineTorusMap":
        tx, ty = self.translation
        minv = m.inverse()
        lin = m * self.linear * minv
        return AffineTorusMap(lin, (m.a * tx + m.b * ty, m.c * tx + m.d * ty))


@dataclass(frozen=True)
class SolidTorusRealStructure:
    kind: str
    boundary_action: AffineTorusMap
    model_label: str = ""

    def __post_init__(self):
        assert self.boundary_action.is_involution()


def real_structure(kind: str) -> SolidTorusRealStructure:
    """The standard real structure c1..c4 with its boundary action."""
    half = Fraction(1, 2)
    table = {
        C1: (MappingClass(-1, 0, 0, -1), (half, 0), "eta[k] with signs"),
        C2: (identity(), (half, 0), "eta[k], core real"),
        C3: (identity(), (0, half), "eta[k], k odd"),
        C4: (identity(), (half, half), "eta[k], k even"),
    }
    if kind not in table:
        raise ValueError("unknown real structure %r" % (kind,))
    linear, translation, label = table[kind]
    return SolidTorusRealStructure(kind, AffineTorusMap(linear, translation), label)


@dataclass(frozen=True)
class SolidTorusSpec:
    structure: SolidTorusRealStructure
    boundary_slope: Slope
    gamma_count: int = 2

    def __post_init__(self):
        if self.gamma_count < 2 or self.gamma_count % 2:
            raise ValueError("#dividing curves must be even and >= 2")


@dataclass(frozen=True)
class CountResult:
    """Census answer: bounds, exactness, and a provenance note."""

    lower: int
    upper: int | None  # None means no upper bound is known
    exact: bool
    note: str = ""

    def __post_init__(self):
        if self.lower < 0:
            raise ValueError("negative lower bound")
        if self.upper is not None and self.lower > self.upper:
            raise ValueError("lower bound exceeds upper bound")
        if self.exact and self.lower != self.upper:
            raise ValueError("exact count must have equal bounds")

    @classmethod
    def exactly(cls, n: int, note: str = "") -> "CountResult":
        return cls(n, n, True, note)

    def to_json(self) -> dict:
        return {
            "lower": self.lower,
            "upper": self.upper,
            "exact": self.exact,
            "note": self.note,
        }

    def __str__(self):
        if self.exact:
            return str(self.lower)
        hi = "?" if self.upper is None else str(self.upper)
        return "[%d, %s]" % (self.lower, hi)


def allowed_slopes(kind: str, s: Slope) -> bool:
    """Slope rule for the translation structures c2, c3, c4.

    All three force boundary slope 1/k (k = 0 means infinity); c3 needs
    k odd, c4 needs k even, c2 takes every integer k.
    """
    if kind not in (C2, C3, C4):
        raise ValueError("slope rule applies to c2, c3, c4 only")
    if abs(s.num) != 1:
        return False
    if kind == C2:
        return True
    k_parity = s.den % 2
    return k_parity == 1 if kind == C3 else k_parity == 0


def honda_count_solid_torus(s: Slope) -> int:
    """Non-equivariant tight count on the solid torus with slope s <= -1.

    With s = [r0, ..., rk] in negative continued fraction form the count
    is |(r0+1)(r1+1)...(r_{k-1}+1) * rk|; slope -1 gives 1.
    """
    if s.is_infinity or s > Slope(-1):
        raise ValueError("out of domain: need a rational slope <= -1")
    coeffs = neg_cf_expand(s).coeffs
    total = abs(coeffs[-1])
    for r in coeffs[:-1]:
        total *= abs(r + 1)
    return total


def meridian_twist_representative(s: Slope) -> Slope:
    """Canonical representative of s under meridian twists.

    Meridian twists move 1/s by integers, so every nonzero slope has a
    unique representative with 1/s in [-1, 0), i.e. a slope <= -1; the
    whole 1/k family lands on -1, and 0 is fixed.
    """
    if s.num == 0:
        return s
    r = Fraction(s.den, s.num)
    shifted = r - (r.numerator // r.denominator) - 1  # representative in [-1, 0)
    return Slope(shifted.denominator, shifted.numerator)


def count_real_tight(spec: SolidTorusSpec) -> CountResult:
    """Count real tight structures on the solid torus with this boundary."""
    kind = spec.structure.kind
    s = spec.boundary_slope
    if spec.gamma_count != 2:
        return CountResult(0, None, False, "outside classified range (#dividing > 2)")
    if kind in (C2, C3, C4):
        if allowed_slopes(kind, s):
            return CountResult.exactly(1, TAG_NEIGHBORHOOD)
        return CountResult.exactly(0, TAG_SLOPE_RULE)
    # c1: classify by the meridian-twist representative of the slope.
    if s.num == 0:
        return CountResult.exactly(0, "meridional boundary slope forces an overtwisted disk")
    rep = meridian_twist_representative(s)
    if rep == Slope(-1):
        return CountResult.exactly(2, TAG_SIGNED_PAIR)
    if rep.den == 1:
        m = -rep.num
        return CountResult(0, comb(2 * (m - 1), m - 1) // m, False, TAG_DISK_CONFIGS)
    return CountResult(0, honda_count_solid_torus(rep), False, TAG_REFERENCE)


BASIC = "basic"
GENUINE_DOUBLE = "genuine_double"


def count_slices(kind: str, slice_kind: str) -> CountResult:
    """Census of equivariant basic and genuine double slices."""
    if slice_kind in ("double", GENUINE_DOUBLE):
        slice_kind = GENUINE_DOUBLE
    elif slice_kind != BASIC:
        raise ValueError("slice kind must be 'basic' or 'genuine_double'")
    if kind == C1:
        if slice_kind == BASIC:
            return CountResult.exactly(0, TAG_NO_BASIC)
        return CountResult.exactly(2, TAG_DOUBLE_PAIR)
    if kind in (C2, C3):
        if slice_kind == BASIC:
            return CountResult.exactly(0, TAG_NO_BASIC_TRANSLATION)
        return CountResult.exactly(0, TAG_NO_DOUBLE)
    raise ValueError("slice census covers c1, c2, c3 only")
