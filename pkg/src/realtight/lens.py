"""Real-structure taxonomy on lens spaces and the classification bounds.

On L(p,q) with q = 1 or p-1 there are two isotopy classes of real
structures with nonempty real part.  On a genus-1 Heegaard splitting
they act either handlebody-preserving, as (c1, c1) (type A) or (c2, c3)
/ (c2, c4) (types B, B'), or handlebody-swapping (types C, C'), where
the swap is conjugate to the linear involution

    Phi = [[-q, q'], [p, q]],   q' = (1 - q^2)/p,

with sign +Phi for type C and -Phi for type C'.  This module computes
the type equivalences, the Heegaard slopes cut out by the eigenvectors
of the gluing involution, the counts l_A, l_B and the convex-Heegaard
counts l*_C, l*_C', the special cases S^3 and RP^3, and assembles the
whole bounds table with witness constructions and the non-equivariant
reference count.
"""

from __future__ import annotations

import csv as _csv
import io
import json as _json
from dataclasses import dataclass, field
from math import comb, gcd

from .slopes import MappingClass, NegCF, Slope, eigen_slope, neg_cf_expand
from .solid_torus import CountResult, honda_count_solid_torus

TYPE_A, TYPE_B, TYPE_B2, TYPE_C, TYPE_C2 = "A", "B", "B'", "C", "C'"
LENS_TYPES = (TYPE_A, TYPE_B, TYPE_B2, TYPE_C, TYPE_C2)

# Provenance tags carried by table entries.
TAG_B_COUNT = "B-structure count"
TAG_A_BOUNDS = "A-structure bounds"
TAG_GENUS1_OBSTRUCTION = "genus-1 Heegaard obstruction"
TAG_HEEGAARD_BOUND = "equivariant Heegaard torus bound"
TAG_UNIQUE_S3 = "unique real tight three-sphere"
TAG_UNIQUE_RP3 = "unique real tight projective space"


@dataclass(frozen=True)
class LensSpace:
    """L(p, q) with gcd(p, q) = 1; the marker (1, 0) stands for S^3."""

    p: int
    q: int

    def __post_init__(self):
        if self.p < 1:
            raise ValueError("p must be positive")
        if self.p == 1:
            object.__setattr__(self, "q", 0)
            return
        q = self.q % self.p
        if gcd(self.p, q) != 1:
            raise ValueError("p and q must be coprime")
        object.__setattr__(self, "q", q)

    @property
    def is_sphere(self) -> bool:
        return self.p == 1

    def __str__(self):
        return "S3" if self.is_sphere else "L(%d,%d)" % (self.p, self.q)


def type_equivalences(p: int, q: int):
    """Partition of {A, B, B', C, C'} into equivalence classes.

    For p = 2 all five types are isotopic.  For p > 2 the swap types
    merge into the handlebody-preserving ones: q = 1 gives {A, C} and
    {B, B', C'}; q = p-1 gives {A, C'} and {B, B', C}.
    """
    q = q % p if p > 1 else q
    if q not in (1 % p, (p - 1) % p):
        raise ValueError("not covered: q must be 1 or p-1")
    if p == 2:
        return [frozenset(LENS_TYPES)]
    if q == 1:
        return [frozenset({TYPE_A, TYPE_C}), frozenset({TYPE_B, TYPE_B2, TYPE_C2})]
    return [frozenset({TYPE_A, TYPE_C2}), frozenset({TYPE_B, TYPE_B2, TYPE_C})]


def gluing_involution(p: int, q: int, kind: str) -> MappingClass:
    """+Phi for type C, -Phi for type C'; an involution of determinant -1."""
    if kind not in (TYPE_C, TYPE_C2):
        raise ValueError("gluing involutions exist for types C and C' only")
    if (q * q - 1) % p:
        raise ValueError("no linear involutive gluing: q^2 != 1 mod p")
    q2 = (1 - q * q) // p
    phi = MappingClass(-q, q2, p, q)
    if kind == TYPE_C2:
        phi = MappingClass(q, -q2, -p, -q)
    assert phi.det() == -1 and phi.is_involution()
    return phi


@dataclass(frozen=True)
class HeegaardData:
    real_slope: Slope
    dividing_slope: Slope
    cf: NegCF
    solid_torus_count: int


def heegaard_data(p: int, q: int, kind: str) -> HeegaardData:
    """Slopes on a convex equivariant Heegaard torus and the tight count.

    The real part is the +1 eigenline of the gluing involution and the
    dividing set the -1 eigenline; with exactly two dividing curves the
    handlebody count is the non-equivariant one at the dividing slope.
    """
    phi = gluing_involution(p, q, kind)
    real_slope = eigen_slope(phi, 1)
    dividing_slope = eigen_slope(phi, -1)
    cf = neg_cf_expand(dividing_slope)
    return HeegaardData(real_slope, dividing_slope, cf, honda_count_solid_torus(dividing_slope))


def honda_count_lens(p: int, q: int) -> int:
    """Non-equivariant tight count on L(p, q): |(r0+1)...(rk+1)|."""
    if p < 2 or gcd(p, q % p) != 1:
        raise ValueError("need p >= 2 and q coprime to p")
    coeffs = neg_cf_expand(Slope(-p, q % p)).coeffs
    total = 1
    for r in coeffs:
        total *= abs(r + 1)
    return total


# Witness registry: named constructions justifying lower bounds.


@dataclass(frozen=True)
class Witness:
    kind: str  # "surgery" | "singularity" | "open-book"
    label: str

    def __str__(self):
        return "%s:%s" % (self.kind, self.label)


def witnesses_for(p: int, q: int, lens_type: str):
    """Construction tags registered for (p, q, type)."""
    out = []
    if q == p - 1:
        if lens_type == TYPE_A:
            out.append(Witness("singularity", "A-_%d link" % (p - 1)))
            out.append(Witness("surgery", "equivariant chain of %d (-2)-framed unknots" % (p - 1)))
            if p % 2 == 0:
                out.append(Witness("surgery", "modified middle-handle chain (undecided twin)"))
        if lens_type == TYPE_B:
            out.append(Witness("singularity", "A+_%d link" % (p - 1)))
    if q == 1:
        if lens_type == TYPE_A:
            out.append(
                Witness(
                    "surgery",
                    "%d equivariant Legendrian surgeries on the tb=%d unknot" % (p - 1, -(p - 1)),
                )
            )
            out.append(Witness("open-book", "planar real pages with %d holes" % (p - 1)))
        if lens_type == TYPE_B and p % 2 == 0:
            out.append(Witness("surgery", "equivariant pair diagram, even chain"))
    return out


def l_B(p: int, q: int) -> CountResult:
    """Count of B-real tight structures on L(p, q)."""
    if p <= 2:
        raise ValueError("counts defined for p > 2")
    q = q % p
    if q not in (1, p - 1):
        return CountResult.exactly(0, TAG_B_COUNT)
    if q == p - 1:
        return CountResult.exactly(1, TAG_B_COUNT)
    if p % 2 == 0:
        return CountResult.exactly(1, TAG_B_COUNT)
    lower = 1 if witnesses_for(p, 1, TYPE_B) else 0
    return CountResult(lower, 1, False, TAG_B_COUNT + " (existence open for odd p)")


def l_A(p: int, q: int) -> CountResult:
    """Bounds for A-real tight structures on L(p, q)."""
    if p <= 2:
        raise ValueError("counts defined for p > 2")
    q = q % p
    if q not in (1, p - 1):
        raise ValueError("A-bounds stated for q = 1 or p-1 only")
    if q == p - 1:
        lower = 1 if witnesses_for(p, q, TYPE_A) else 0
        return CountResult(lower, None, False, TAG_A_BOUNDS + " (no upper bound known)")
    upper = comb(2 * (p - 2), p - 2) // (p - 1) + 1  # Catalan(p-2) + 1
    return CountResult(p - 1, upper, p - 1 == upper, TAG_A_BOUNDS)


def l_star(p: int, q: int, kind: str) -> CountResult:
    """Counts with a genus-1 real contact Heegaard decomposition."""
    if p <= 2:
        raise ValueError("counts defined for p > 2")
    if kind not in (TYPE_C, TYPE_C2):
        raise ValueError("l* is defined for types C and C'")
    q = q % p
    if q not in (1, p - 1):
        raise ValueError("l* stated for q = 1 or p-1 only")
    if (kind == TYPE_C2 and q == 1) or (kind == TYPE_C and q == p - 1):
        return CountResult.exactly(0, TAG_GENUS1_OBSTRUCTION)
    # Two sign decorations on the convex Heegaard torus double the count.
    upper = 2 * heegaard_data(p, q, kind).solid_torus_count
    return CountResult(0, upper, False, TAG_HEEGAARD_BOUND)


def classify_special(which: str) -> CountResult:
    """The unique real tight S^3 and RP^3 (nonempty real part)."""
    if which.upper() in ("S3", "S^3"):
        return CountResult.exactly(1, TAG_UNIQUE_S3 + "; witness: link of a regular point")
    if which.upper() in ("RP3", "RP^3"):
        return CountResult.exactly(1, TAG_UNIQUE_RP3 + "; witness: A1 singularity link X1+")
    raise ValueError("special cases are S3 and RP3")


@dataclass(frozen=True)
class OpenBookVerdict:
    p: int
    monodromy_exponent: int
    supports_real: bool
    overtwisted: bool
    note: str


def genus1_openbook_check(p: int, exponent_sign: int = -1) -> OpenBookVerdict:
    """Annular-page real open books cannot give a tight real L(p, 1).

    The page is an annulus and the monodromy a power of the core twist;
    the real manifold L(p,1) needs exponent -p, whose supported contact
    structure is overtwisted, while +p supports a tight structure on the
    wrong manifold.
    """
    if p < 1:
        raise ValueError("p must be positive")
    if exponent_sign not in (1, -1):
        raise ValueError("exponent sign must be +1 or -1")
    if exponent_sign == -1:
        return OpenBookVerdict(
            p, -p, True, True,
            "annular page, core twist exponent -%d: supported structure overtwisted" % p,
        )
    return OpenBookVerdict(
        p, p, False, False,
        "annular page, core twist exponent +%d: tight but not a real L(%d,1)" % (p, p),
    )


@dataclass(frozen=True)
class BoundsRow:
    p: int
    q: int
    counts: dict  # type label -> CountResult
    honda: int
    witnesses: tuple

    def to_json(self) -> dict:
        return {
            "p": self.p,
            "q": self.q,
            "counts": {t: self.counts[t].to_json() for t in sorted(self.counts)},
            "honda": self.honda,
            "witnesses": [str(w) for w in self.witnesses],
        }


TABLE_COLUMNS = ("p", "q", "l_A", "l_B", "l*_C", "l*_C'", "honda", "witnesses")


def bounds_table(p_min: int, p_max: int):
    """One row per (p, q) with q in {1, p-1}, for p_min <= p <= p_max."""
    if not 2 < p_min <= p_max:
        raise ValueError("need 2 < p_min <= p_max")
    rows = []
    for p in range(p_min, p_max + 1):
        for q in (1, p - 1):
            counts = {
                TYPE_A: l_A(p, q),
                TYPE_B: l_B(p, q),
                TYPE_C: l_star(p, q, TYPE_C),
                TYPE_C2: l_star(p, q, TYPE_C2),
            }
            wits = tuple(
                w for t in (TYPE_A, TYPE_B) for w in witnesses_for(p, q, t)
            )
            rows.append(BoundsRow(p, q, counts, honda_count_lens(p, q), wits))
    return rows


def _row_cells(row: BoundsRow):
    return (
        str(row.p),
        str(row.q),
        str(row.counts[TYPE_A]),
        str(row.counts[TYPE_B]),
        str(row.counts[TYPE_C]),
        str(row.counts[TYPE_C2]),
        str(row.honda),
        "; ".join(str(w) for w in row.witnesses),
    )


def table_markdown(rows) -> str:
    lines = ["| " + " | ".join(TABLE_COLUMNS) + " |"]
    lines.append("|" + "|".join("---" for _ in TABLE_COLUMNS) + "|")
    for row in rows:
        lines.append("| " + " | ".join(_row_cells(row)) + " |")
    return "\n".join(lines)


def table_csv(rows) -> str:
    buf = io.StringIO()
    writer = _csv.writer(buf, lineterminator="\n")
    writer.writerow(TABLE_COLUMNS)
    for row in rows:
        writer.writerow(_row_cells(row))
    return buf.getvalue().rstrip("\n")


def table_json(rows) -> str:
    return _json.dumps([row.to_json() for row in rows], indent=2, sort_keys=True)
