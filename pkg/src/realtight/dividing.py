"""Dividing-set combinatorics on disks and annuli, edge rounding, and
the exhaustion arguments for equivariant slices.

Dividing sets are recorded combinatorially: a configuration on a disk
is a non-crossing perfect matching of marked boundary points, and a
configuration on an annulus is a collection of disjoint properly
embedded arcs, each either boundary-parallel (recorded with the side it
cuts off) or traversing (recorded with its exact winding, the lift of
its endpoint displacement).  Cut-open solid tori are rebuilt from a
cyclic sequence of annular faces; rounding a corner connects each arc
endpoint to the adjacent face's nearest endpoint in a fixed rotational
direction, and the homology classes of the resulting closed curves
decide tight versus overtwisted: a curve that does not wind along the
core of the solid torus bounds a disk there, which is fatal.
"""

from __future__ import annotations

import json as _json
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import comb

from .slopes import Slope

# ---------------------------------------------------------------------------
# Disk configurations


def catalan(n: int) -> int:
    """Closed-form Catalan number C(2n, n)/(n+1)."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return comb(2 * n, n) // (n + 1)


@dataclass(frozen=True)
class DiskMatching:
    """Non-crossing perfect matching of 2m cyclically ordered points."""

    m: int
    pairing: tuple  # sorted tuple of sorted pairs

    def __post_init__(self):
        pairs = tuple(sorted(tuple(sorted(p)) for p in self.pairing))
        object.__setattr__(self, "pairing", pairs)
        points = [x for p in pairs for x in p]
        if sorted(points) != list(range(2 * self.m)):
            raise ValueError("not a perfect matching of 2m points")
        for (a, b), (c, d) in combinations(pairs, 2):
            if (a < c < b) != (a < d < b):
                raise ValueError("matching has a crossing")

    def rotated(self, k: int) -> "DiskMatching":
        n = 2 * self.m
        return DiskMatching(
            self.m, tuple(((a + k) % n, (b + k) % n) for a, b in self.pairing)
        )

    def to_json(self) -> dict:
        return {"m": self.m, "pairs": [list(p) for p in self.pairing]}


def enumerate_disk_matchings(m: int):
    """All non-crossing perfect matchings of 2m marked points.

    Recursive split: point 0 pairs with an odd-offset point, separating
    the disk into two independent sub-disks.  The count is Catalan(m).
    """
    if m < 0:
        raise ValueError("m must be nonnegative")

    def rec(points):
        if not points:
            yield []
            return
        first = points[0]
        for j in range(1, len(points), 2):
            partner = points[j]
            inside, outside = points[1:j], points[j + 1 :]
            for left in rec(inside):
                for right in rec(outside):
                    yield [(first, partner)] + left + right

    return [DiskMatching(m, tuple(p)) for p in rec(list(range(2 * m)))]


def count_disk_classes_fixed_arc(m: int) -> int:
    """Configurations counted up to rotation by pinning one short arc.

    Every non-crossing matching has a boundary-parallel arc joining two
    neighboring points; fixing it at (0, 1) leaves a free non-crossing
    matching of the remaining 2(m-1) points, so the count is the
    (m-1)st Catalan number.  The enumeration cross-checks the formula.
    """
    if m < 1:
        raise ValueError("m must be positive")
    fixed = [mt for mt in enumerate_disk_matchings(m) if (0, 1) in mt.pairing]
    assert len(fixed) == catalan(m - 1)
    return len(fixed)


# ---------------------------------------------------------------------------
# Annulus arc systems

INNER = "inner"
OUTER = "outer"


def _mod1(x) -> Fraction:
    return Fraction(x) % 1


@dataclass(frozen=True)
class TraversingArc:
    """Arc from inner mark to outer mark with exact lift displacement."""

    inner: int
    outer: int
    shift: Fraction

    def __post_init__(self):
        object.__setattr__(self, "shift", Fraction(self.shift))


@dataclass(frozen=True)
class ParallelArc:
    """Boundary-parallel arc cutting off the ccw interval start -> end."""

    side: str
    start: int
    end: int

    def __post_init__(self):
        if self.side not in (INNER, OUTER):
            raise ValueError("side must be inner or outer")
        if self.start == self.end:
            raise ValueError("parallel arc needs two distinct marks")


@dataclass(frozen=True)
class AnnulusArcSystem:
    """Disjoint properly embedded arcs using every marked point once.

    The embedding certificate is checked on construction: traversing
    arcs must have order-compatible windings, no arc endpoint may sit
    inside the interval cut off by a boundary-parallel arc, and cut
    intervals on one boundary must be nested or disjoint.
    """

    inner_positions: tuple
    outer_positions: tuple
    arcs: tuple

    def __post_init__(self):
        inner = tuple(_mod1(x) for x in self.inner_positions)
        outer = tuple(_mod1(x) for x in self.outer_positions)
        if list(inner) != sorted(inner) or list(outer) != sorted(outer):
            raise ValueError("positions must be sorted in [0, 1)")
        object.__setattr__(self, "inner_positions", inner)
        object.__setattr__(self, "outer_positions", outer)
        object.__setattr__(self, "arcs", tuple(self.arcs))
        self._validate()

    @property
    def n_in(self) -> int:
        return len(self.inner_positions)

    @property
    def n_out(self) -> int:
        return len(self.outer_positions)

    def position(self, side: str, index: int) -> Fraction:
        marks = self.inner_positions if side == INNER else self.outer_positions
        return marks[index % len(marks)]

    def traversing(self):
        return [a for a in self.arcs if isinstance(a, TraversingArc)]

    def parallels(self, side=None):
        return [
            a
            for a in self.arcs
            if isinstance(a, ParallelArc) and (side is None or a.side == side)
        ]

    def _cut_contains(self, arc: ParallelArc, x: Fraction) -> bool:
        a = self.position(arc.side, arc.start)
        b = self.position(arc.side, arc.end)
        span = _mod1(b - a)
        off = _mod1(x - a)
        return 0 < off < span

    def _validate(self):
        used_in, used_out = [], []
        for arc in self.arcs:
            if isinstance(arc, TraversingArc):
                used_in.append(arc.inner)
                used_out.append(arc.outer)
                expected = _mod1(
                    self.position(OUTER, arc.outer) - self.position(INNER, arc.inner)
                )
                if _mod1(arc.shift) != expected:
                    raise ValueError("winding does not match the endpoints")
            else:
                (used_in if arc.side == INNER else used_out).extend(
                    [arc.start, arc.end]
                )
        if sorted(used_in) != list(range(self.n_in)) or sorted(used_out) != list(
            range(self.n_out)
        ):
            raise ValueError("every marked point must be used exactly once")
        for a1, a2 in combinations(self.arcs, 2):
            if not self._compatible(a1, a2):
                raise ValueError("arcs cross: %r / %r" % (a1, a2))

    def _compatible(self, a1, a2) -> bool:
        t1, t2 = isinstance(a1, TraversingArc), isinstance(a2, TraversingArc)
        if t1 and t2:
            u = _mod1(self.position(INNER, a2.inner) - self.position(INNER, a1.inner))
            v = u + a2.shift - a1.shift
            return 0 < v < 1
        if t1 != t2:
            trav, par = (a1, a2) if t1 else (a2, a1)
            x = self.position(
                INNER if par.side == INNER else OUTER,
                trav.inner if par.side == INNER else trav.outer,
            )
            return not self._cut_contains(par, x)
        if a1.side != a2.side:
            return True
        inside = sum(
            1
            for idx in (a2.start, a2.end)
            if self._cut_contains(a1, self.position(a2.side, idx))
        )
        return inside in (0, 2)

    def canonical_key(self):
        key = []
        for arc in self.arcs:
            if isinstance(arc, TraversingArc):
                key.append((0, arc.inner, arc.outer, arc.shift))
            else:
                key.append((1 if arc.side == INNER else 2, arc.start, arc.end, 0))
        return tuple(sorted(key))

    def to_json(self) -> dict:
        arcs = []
        for kind, a, b, extra in self.canonical_key():
            if kind == 0:
                arcs.append(
                    {"kind": "traversing", "inner": a, "outer": b, "shift": str(extra)}
                )
            else:
                arcs.append(
                    {
                        "kind": "parallel",
                        "side": INNER if kind == 1 else OUTER,
                        "start": a,
                        "end": b,
                    }
                )
        return {
            "inner_positions": [str(x) for x in self.inner_positions],
            "outer_positions": [str(x) for x in self.outer_positions],
            "arcs": arcs,
        }


def _default_positions(n: int):
    return tuple(Fraction(i, n) for i in range(n)) if n else ()


def _parallel_structures(n: int, excluded):
    """All laminar boundary-parallel pairings of marks not in `excluded`."""
    free = [i for i in range(n) if i not in excluded]

    def matchings(points):
        if not points:
            yield []
            return
        first, rest = points[0], points[1:]
        for j, partner in enumerate(rest):
            for tail in matchings(rest[:j] + rest[j + 1 :]):
                yield [(first, partner)] + tail

    seen = []
    for pairing in matchings(free):
        for sides in range(1 << len(pairing)):
            arcs = []
            for k, (a, b) in enumerate(pairing):
                if sides >> k & 1:
                    a, b = b, a
                arcs.append((a, b))
            seen.append(arcs)
    return seen


def enumerate_annulus_systems(
    n_in: int,
    n_out: int,
    inner_positions=None,
    outer_positions=None,
    winding_window: int = 1,
):
    """All embeddable arc systems on the annulus with the given marks.

    Traversing arcs are enumerated with windings in a bounded window:
    the base representative of the family plus winding_window full
    twists either way.  Isotopy classes beyond the window differ from
    enumerated ones by powers of the annulus twist.
    """
    if (n_in + n_out) % 2:
        raise ValueError("total number of marks must be even")
    inner = tuple(inner_positions) if inner_positions else _default_positions(n_in)
    outer = tuple(outer_positions) if outer_positions else _default_positions(n_out)
    systems = []
    t_start = n_in % 2
    for t in range(t_start, min(n_in, n_out) + 1, 2):
        if (n_out - t) % 2:
            continue
        for inner_trav in combinations(range(n_in), t):
            inner_par = _parallel_structures(n_in, set(inner_trav))
            for outer_trav in combinations(range(n_out), t):
                outer_par = _parallel_structures(n_out, set(outer_trav))
                for ip in inner_par:
                    for op in outer_par:
                        parallels = [ParallelArc(INNER, a, b) for a, b in ip]
                        parallels += [ParallelArc(OUTER, a, b) for a, b in op]
                        if t == 0:
                            candidate = _try_system(inner, outer, parallels)
                            if candidate is not None:
                                systems.append(candidate)
                            continue
                        for rotation in range(t):
                            for w in range(-winding_window, winding_window + 1):
                                arcs = parallels + _traversing_family(
                                    inner, outer, inner_trav, outer_trav, rotation, w
                                )
                                candidate = _try_system(inner, outer, arcs)
                                if candidate is not None:
                                    systems.append(candidate)
    systems.sort(key=lambda s: s.canonical_key())
    return systems


def _traversing_family(inner, outer, inner_trav, outer_trav, rotation, window):
    """Parallel family of traversing arcs: rotation r, global winding w."""
    t = len(inner_trav)
    arcs = []
    base_shift = None
    for k in range(t):
        i = inner_trav[k]
        o = outer_trav[(k + rotation) % t]
        rho = _mod1(outer[o] - inner[i])
        if base_shift is None:
            # Base representative in (-1/2, 1/2].
            delta = rho if rho <= Fraction(1, 2) else rho - 1
            base_shift = delta
            u0 = inner[i]
        else:
            u = _mod1(inner[i] - u0)
            frac = _mod1(u + rho - base_shift)
            delta = base_shift - u + frac
        arcs.append(TraversingArc(i, o, delta + window))
    return arcs


def _try_system(inner, outer, arcs):
    try:
        return AnnulusArcSystem(inner, outer, tuple(arcs))
    except ValueError:
        return None


# ---------------------------------------------------------------------------
# Involutions on marked points

ROTATION_BY_HALF = "rotation-by-half"
REFLECTION = "reflection"
BOUNDARY_SWAP = "boundary-swap"


@dataclass(frozen=True)
class InvolutionOnMarks:
    """Symmetry of the marked annulus acting on arc systems.

    rotation-by-half shifts every position by 1/2; reflection maps x to
    axis - x on both boundaries; boundary-swap exchanges the inner and
    outer boundaries (which must carry identical mark sets).
    """

    kind: str
    axis: Fraction = Fraction(1, 2)

    def __post_init__(self):
        if self.kind not in (ROTATION_BY_HALF, REFLECTION, BOUNDARY_SWAP):
            raise ValueError("unknown involution kind")
        object.__setattr__(self, "axis", Fraction(self.axis))

    def _image_position(self, x: Fraction) -> Fraction:
        if self.kind == ROTATION_BY_HALF:
            return _mod1(x + Fraction(1, 2))
        if self.kind == REFLECTION:
            return _mod1(self.axis - x)
        return x

    def _index_map(self, positions):
        lookup = {x: i for i, x in enumerate(positions)}
        mapping = []
        for x in positions:
            image = self._image_position(x)
            if image not in lookup:
                raise ValueError("involution does not preserve the marks")
        return [lookup[self._image_position(x)] for x in positions]

    def apply(self, system: AnnulusArcSystem) -> AnnulusArcSystem:
        inner_map = self._index_map(system.inner_positions)
        outer_map = self._index_map(system.outer_positions)
        if self.kind == BOUNDARY_SWAP and (
            system.inner_positions != system.outer_positions
        ):
            raise ValueError("boundary swap needs matching mark sets")
        arcs = []
        for arc in system.arcs:
            if isinstance(arc, TraversingArc):
                if self.kind == ROTATION_BY_HALF:
                    arcs.append(
                        TraversingArc(
                            inner_map[arc.inner], outer_map[arc.outer], arc.shift
                        )
                    )
                elif self.kind == REFLECTION:
                    arcs.append(
                        TraversingArc(
                            inner_map[arc.inner], outer_map[arc.outer], -arc.shift
                        )
                    )
                else:
                    arcs.append(
                        TraversingArc(arc.outer, arc.inner, -arc.shift)
                    )
            else:
                amap = inner_map if arc.side == INNER else outer_map
                side = arc.side
                if self.kind == BOUNDARY_SWAP:
                    side = OUTER if side == INNER else INNER
                if self.kind == REFLECTION:
                    arcs.append(ParallelArc(side, amap[arc.end], amap[arc.start]))
                else:
                    arcs.append(ParallelArc(side, amap[arc.start], amap[arc.end]))
        return AnnulusArcSystem(system.inner_positions, system.outer_positions, tuple(arcs))

    def is_involution_on(self, system: AnnulusArcSystem) -> bool:
        twice = self.apply(self.apply(system))
        return twice.canonical_key() == system.canonical_key()


def filter_symmetric(systems, involution: InvolutionOnMarks):
    """Systems invariant, as unoriented arc collections, under the action."""
    out = []
    for system in systems:
        if not involution.is_involution_on(system):
            raise ValueError("action is not an involution on these marks")
        if involution.apply(system).canonical_key() == system.canonical_key():
            out.append(system)
    return out


# ---------------------------------------------------------------------------
# Faces, edge rounding, and reassembled boundaries


@dataclass(frozen=True)
class FaceStrand:
    """One dividing arc on a face; sides are 0 (left) and 1 (right)."""

    start_side: int
    start: Fraction
    end_side: int
    end: Fraction
    shift: Fraction


@dataclass(frozen=True)
class Face:
    """Annular face of a cut-open boundary, dividing arcs included.

    left_marks live on the circle shared with the previous face in the
    cyclic order, right_marks on the circle shared with the next face.
    """

    name: str
    left_marks: tuple
    right_marks: tuple
    strands: tuple

    def __post_init__(self):
        object.__setattr__(self, "left_marks", tuple(_mod1(x) for x in self.left_marks))
        object.__setattr__(self, "right_marks", tuple(_mod1(x) for x in self.right_marks))
        endpoints = {0: [], 1: []}
        for s in self.strands:
            endpoints[s.start_side].append(_mod1(s.start))
            endpoints[s.end_side].append(_mod1(s.end))
        if sorted(endpoints[0]) != sorted(self.left_marks) or sorted(
            endpoints[1]
        ) != sorted(self.right_marks):
            raise ValueError("strand endpoints must use each mark exactly once")


def linear_face(name, n_strands, left_positions, shift) -> Face:
    """Face carrying a linear dividing family with a fixed turn."""
    lefts = [_mod1(x) for x in left_positions]
    strands = tuple(FaceStrand(0, x, 1, _mod1(x + shift), Fraction(shift)) for x in lefts)
    return Face(name, tuple(sorted(lefts)), tuple(sorted(_mod1(x + shift) for x in lefts)), strands)


def annulus_face(name, system: AnnulusArcSystem, left_side: str) -> Face:
    """Face built from an annulus arc system.

    left_side states which boundary of the annulus is glued to the
    previous face in the cyclic order.
    """
    if left_side not in (INNER, OUTER):
        raise ValueError("left_side must be inner or outer")
    sides = {left_side: 0, (OUTER if left_side == INNER else INNER): 1}
    strands = []
    for arc in system.arcs:
        if isinstance(arc, TraversingArc):
            pin = system.position(INNER, arc.inner)
            pout = system.position(OUTER, arc.outer)
            if left_side == INNER:
                strands.append(FaceStrand(0, pin, 1, pout, arc.shift))
            else:
                strands.append(FaceStrand(0, pout, 1, pin, -arc.shift))
        else:
            side = sides[arc.side]
            pa = system.position(arc.side, arc.start)
            pb = system.position(arc.side, arc.end)
            strands.append(FaceStrand(side, pa, side, pb, _mod1(pb - pa)))
    left_marks = system.inner_positions if left_side == INNER else system.outer_positions
    right_marks = system.outer_positions if left_side == INNER else system.inner_positions
    return Face(name, left_marks, right_marks, tuple(strands))


@dataclass(frozen=True)
class RoundedBoundary:
    """Verdict for a reassembled solid-torus boundary."""

    curves: tuple  # (core_winding, face_winding) per closed curve
    verdict: str  # "tight" or "overtwisted"
    slope: Slope | None
    curve_details: tuple = ()

    @property
    def separates(self) -> bool:
        """Whether the curves can divide the torus into signed regions.

        A dividing set separates its surface, so its total homology
        class must vanish mod 2; assembled data violating this cannot
        be the boundary of any convex piece.
        """
        core = sum(c for c, _ in self.curves)
        face = sum(f for _, f in self.curves)
        return core % 2 == 0 and face % 2 == 0

    @property
    def min_face_winding(self) -> int:
        return min((abs(f) for _, f in self.curves), default=0)

    def to_json(self) -> dict:
        return {
            "curves": [list(c) for c in self.curves],
            "verdict": self.verdict,
            "slope": None if self.slope is None else str(self.slope),
            "separates": self.separates,
        }


TIGHT = "tight"
OVERTWISTED = "overtwisted"

# Rounding direction: arc endpoints connect to the adjacent face's
# nearest endpoint stepping this way around the corner circle.
ROUNDING_DIRECTION = -1


def _pairing(left_marks, right_marks, direction):
    """Pair each left mark with the nearest right mark in `direction`.

    Identical mark sets glue smoothly (zero step); otherwise the two
    sets must interleave and each left mark takes the first right mark
    encountered in the rounding direction, a perfect matching.
    """
    if sorted(left_marks) == sorted(right_marks):
        return {x: (x, Fraction(0)) for x in left_marks}
    marks = sorted(set(left_marks) | set(right_marks))
    if len(marks) != len(left_marks) + len(right_marks):
        raise ValueError("corner marks must be disjoint or identical")
    tagged = [(x, x in set(left_marks)) for x in marks]
    for (x, is_left), (y, next_left) in zip(tagged, tagged[1:] + tagged[:1]):
        if is_left == next_left:
            raise ValueError("corner marks must alternate")
    pairing = {}
    n = len(marks)
    for idx, (x, is_left) in enumerate(tagged):
        if not is_left:
            continue
        partner_idx = (idx + direction) % n
        y = marks[partner_idx]
        step = _mod1(y - x)
        if direction < 0 and step != 0:
            step -= 1
        pairing[x] = (y, step)
    return pairing


def assemble_and_round(faces, direction: int = ROUNDING_DIRECTION) -> RoundedBoundary:
    """Glue the faces cyclically, round every corner, classify curves.

    The faces bound a solid torus whose core runs along the circle
    direction; a closed dividing curve with zero core winding bounds a
    disk in that solid torus, so its presence is the overtwisted
    verdict.  Otherwise all curves are parallel and essential and their
    common slope is reported in the coordinates of the reassembled
    torus (core winding over face winding).
    """
    faces = list(faces)
    m = len(faces)
    if m == 0:
        raise ValueError("need at least one face")
    pairings = []
    for i in range(m):
        lefts = faces[i].right_marks
        rights = faces[(i + 1) % m].left_marks
        if len(lefts) != len(rights):
            raise ValueError("incompatible endpoint counts at a corner")
        pairings.append(_pairing(lefts, rights, direction))

    # Node = (circle index, side, position); side 0 borders face i.
    strand_edge = {}
    for i, face in enumerate(faces):
        left_circle = (i - 1) % m
        for s in face.strands:
            a = (left_circle, 1, s.start) if s.start_side == 0 else (i, 0, s.start)
            b = (left_circle, 1, s.end) if s.end_side == 0 else (i, 0, s.end)
            strand_edge[a] = (b, s.shift, 0)
            strand_edge[b] = (a, -s.shift, 0)
    corner_edge = {}
    for i, pairing in enumerate(pairings):
        for x, (y, step) in pairing.items():
            corner_edge[(i, 0, x)] = ((i, 1, y), step, 1)
            corner_edge[(i, 1, y)] = ((i, 0, x), -step, -1)
    if set(strand_edge) != set(corner_edge):
        raise ValueError("corner marks do not match strand endpoints")

    curves = []
    details = []
    unvisited = set(strand_edge)
    while unvisited:
        start = next(iter(sorted(unvisited)))
        node = start
        winding = Fraction(0)
        crossings = [0] * m
        trail = []
        use_strand = True
        while True:
            edge = strand_edge if use_strand else corner_edge
            nxt, shift, crossing = edge[node]
            if use_strand:
                unvisited.discard(node)
                unvisited.discard(nxt)
                trail.append((node, nxt))
            winding += shift
            if crossing:
                crossings[node[0]] += crossing
            use_strand = not use_strand
            node = nxt
            if node == start and use_strand:
                break
        assert winding.denominator == 1, "closed curve must wind integrally"
        assert len(set(crossings)) == 1, "face winding must be circle independent"
        w_core, w_face = int(winding), crossings[0]
        assert (w_core, w_face) == (0, 0) or _coprime(w_core, w_face), (
            "embedded closed curve must be primitive or null"
        )
        curves.append((w_core, w_face))
        details.append(tuple(trail))

    if any(w_core == 0 for w_core, _ in curves):
        return RoundedBoundary(tuple(curves), OVERTWISTED, None, tuple(details))
    for (a1, b1), (a2, b2) in combinations(curves, 2):
        assert a1 * b2 - b1 * a2 == 0, "disjoint essential curves must be parallel"
    w_core, w_face = curves[0]
    return RoundedBoundary(
        tuple(curves), TIGHT, Slope(w_core, w_face), tuple(details)
    )


def _coprime(a: int, b: int) -> bool:
    from math import gcd

    return gcd(abs(a), abs(b)) == 1


# ---------------------------------------------------------------------------
# Slice exhaustions
#
# A slice is a thick torus T^2 x [0,1] with convex boundary tori of
# integer slopes and Legendrian rulings along the meridian direction.
# The hyperelliptic involution (x, y) -> (1/2 - x, -y) preserves the two
# vertical annuli at heights y = 0 and y = 1/2 (they contain the fixed
# arcs) and acts on each as a reflection; cutting along the pair leaves
# two solid-torus pieces exchanged by the involution, so one rounded
# boundary decides each candidate.  The translation involution
# (x, y) -> (x + 1/2, y) preserves every vertical annulus and acts as a
# half rotation.


def torus_dividing_positions(slope_int: int, y: Fraction):
    """Marks cut by the two equivariant dividing lines on a ruling circle.

    The dividing set of the invariant torus with integer slope n is the
    pair of lines n*x - y = n/4 and n/4 + 1/2, the unique invariant pair
    through the four fixed points.  On the ruling circle at height y the
    2|n| crossings sit at ((c + y)/n + k/n) mod 1.
    """
    n = slope_int
    if n == 0:
        raise ValueError("ruling-parallel dividing set")
    marks = set()
    for c in (Fraction(n, 4), Fraction(n, 4) + Fraction(1, 2)):
        base = (c + y) / n
        for k in range(abs(n)):
            marks.add(_mod1(base + Fraction(k, n)))
    return tuple(sorted(marks))


def _quarter_offset(marks):
    gaps = sorted(marks)
    spacing = _mod1(gaps[1] - gaps[0]) if len(gaps) > 1 else Fraction(1)
    return tuple(sorted(_mod1(x + spacing / 2) for x in gaps))


def torus_face(name, slope_int, y_from, y_to, t_side) -> Face:
    """Portion of an invariant boundary torus between two ruling circles.

    The dividing lines cross the face as parallel strands turning by
    (y_to - y_from)/slope.  For the t = 1 face the cyclic face order
    runs against y, so the strand data is reversed.
    """
    n = slope_int
    span = Fraction(y_to) - Fraction(y_from)
    shift = span / n
    starts = torus_dividing_positions(n, Fraction(y_from))
    if t_side == 0:
        return linear_face(name, len(starts), starts, shift)
    ends = tuple(_mod1(x + shift) for x in starts)
    strands = tuple(
        FaceStrand(0, _mod1(x + shift), 1, x, -shift) for x in starts
    )
    return Face(name, tuple(sorted(ends)), tuple(sorted(starts)), strands)


def slice_annulus_marks(inner_slope_int, outer_slope_int, y: Fraction):
    """Marked points of a vertical annulus at height y, quarter-offset
    from the torus dividing sets it meets."""
    inner = _quarter_offset(torus_dividing_positions(inner_slope_int, y))
    outer = _quarter_offset(torus_dividing_positions(outer_slope_int, y))
    return inner, outer


def reflect_system(system: AnnulusArcSystem, axis=Fraction(1, 2)) -> AnnulusArcSystem:
    """Image of an arc system under x -> axis - x (both boundaries)."""
    reflection = InvolutionOnMarks(REFLECTION, axis)
    return reflection.apply(system)


def slice_piece_faces(
    inner_slope_int,
    outer_slope_int,
    system_a: AnnulusArcSystem,
    system_b: AnnulusArcSystem,
    y_a: Fraction,
    y_b: Fraction,
):
    """Faces of the solid torus piece between vertical annuli at y_a, y_b.

    Cyclic order: annulus at y_a, bottom torus portion (t = 0), annulus
    at y_b, top torus portion (t = 1).  The first annulus is entered
    from its outer boundary, the second from its inner one.
    """
    return [
        annulus_face("A@%s" % y_a, system_a, left_side=OUTER),
        torus_face("T_in[%s,%s]" % (y_a, y_b), inner_slope_int, y_a, y_b, t_side=0),
        annulus_face("A@%s" % y_b, system_b, left_side=INNER),
        torus_face("T_out[%s,%s]" % (y_a, y_b), outer_slope_int, y_a, y_b, t_side=1),
    ]


def slice_candidate_systems(inner_slope_int, outer_slope_int, y, winding_window=1):
    """Candidate dividing sets on a vertical annulus of a minimally
    twisting slice: no inner-parallel arcs (each would feed a bypass to
    the thinner boundary), every mark used, windings within the window."""
    inner, outer = slice_annulus_marks(inner_slope_int, outer_slope_int, y)
    systems = enumerate_annulus_systems(
        len(inner), len(outer), inner, outer, winding_window=winding_window
    )
    return [s for s in systems if not s.parallels(INNER)]


def symmetric_slice_systems(inner_slope_int, outer_slope_int):
    """Reflection-symmetric candidates on an invariant vertical annulus.

    The hyperelliptic involution reflects the annuli at heights 0 and
    1/2 across the vertical fixed arcs; an invariant dividing set must
    be symmetric under x -> 1/2 - x, which also pins the windings of
    the traversing arcs (a shifted family is never symmetric).  Both
    invariant annuli carry the same marked points, so one enumeration
    serves both.
    """
    candidates = slice_candidate_systems(inner_slope_int, outer_slope_int, Fraction(0))
    return filter_symmetric(candidates, InvolutionOnMarks(REFLECTION, Fraction(1, 2)))


@dataclass(frozen=True)
class SliceVerdict:
    """One candidate pair of invariant-annulus configurations."""

    system_a: AnnulusArcSystem
    system_b: AnnulusArcSystem
    piece: RoundedBoundary

    @property
    def survives(self) -> bool:
        """Piece consistency: the rounded dividing set must separate,
        no curve may bound a disk in the piece, and no curve may run
        parallel to the core (its ruling curves would be meridional
        Legendrians of zero twisting, impossible in a tight slice)."""
        return (
            self.piece.verdict == TIGHT
            and self.piece.separates
            and self.piece.min_face_winding >= 1
        )


def exhaust_hyperelliptic_slice(inner_slope_int, outer_slope_int):
    """Run the cut-and-round exhaustion for the hyperelliptic symmetry.

    Every ordered pair of symmetric configurations on the two invariant
    annuli is assembled into the solid-torus piece between heights 0
    and 1/2; the involution exchanges the two pieces, so one rounded
    boundary decides each pair.
    """
    y_a, y_b = Fraction(0), Fraction(1, 2)
    symmetric = symmetric_slice_systems(inner_slope_int, outer_slope_int)
    verdicts = []
    for system_a in symmetric:
        for system_b in symmetric:
            piece = assemble_and_round(
                slice_piece_faces(
                    inner_slope_int, outer_slope_int, system_a, system_b, y_a, y_b
                )
            )
            verdicts.append(SliceVerdict(system_a, system_b, piece))
    return verdicts


def rotate_system_by_half(system: AnnulusArcSystem) -> AnnulusArcSystem:
    return InvolutionOnMarks(ROTATION_BY_HALF).apply(system)


def survivor_classes(verdicts):
    """Surviving configuration pairs up to the half-turn relabeling."""
    classes = []
    seen = set()
    for v in verdicts:
        if not v.survives:
            continue
        key = (v.system_a.canonical_key(), v.system_b.canonical_key())
        if key in seen:
            continue
        rotated = (
            rotate_system_by_half(v.system_a).canonical_key(),
            rotate_system_by_half(v.system_b).canonical_key(),
        )
        seen.update({key, rotated})
        classes.append(v)
    return classes


# ---------------------------------------------------------------------------
#}Named proof replays


@dataclass(frozen=True)
class ProofReport:
    name: str
    candidates: int
    tight_survivors: int
    survivor_classes: int
    sign_decorated_count: int
    slopes: tuple
    notes: str

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "candidates": self.candidates,
            "tight_survivors": self.tight_survivors,
            "survivor_classes": self.survivor_classes,
            "sign_decorated_count": self.sign_decorated_count,
            "slopes": [str(s) for s in self.slopes],
            "notes": self.notes,
        }


NOBASIC = "nobasic"
VARDOUBLE = "vardouble"
C2_SLICE = "c2_T_minus1_minus2"


def replay_proof(name: str) -> ProofReport:
    """Re-run one of the slice exhaustions and report the survivors.

    nobasic: hyperelliptic structure on the slice from slope -1 to -2;
    every candidate dies, so no equivariant basic slice exists.
    vardouble: slopes -1 to -3; exactly one configuration class
    survives and its pieces are tight solid tori of slope -1, giving
    the two sign-decorated genuine double slices.
    c2_T_minus1_minus2: the translation symmetry forces a symmetric
    dividing set with a traversing arc on the meridional annulus, and
    no such set exists.
    """
    if name == C2_SLICE:
        inner, outer = slice_annulus_marks(-1, -2, Fraction(1, 4))
        systems = enumerate_annulus_systems(2, 4, inner, outer)
        with_traversing = [s for s in systems if s.traversing()]
        symmetric = filter_symmetric(with_traversing, InvolutionOnMarks(ROTATION_BY_HALF))
        return ProofReport(
            name,
            len(with_traversing),
            len(symmetric),
            len(symmetric),
            len(symmetric),
            (),
            "half-turn symmetric dividing sets with a traversing arc: none exist",
        )
    if name == NOBASIC:
        verdicts = exhaust_hyperelliptic_slice(-1, -2)
        classes = survivor_classes(verdicts)
        return ProofReport(
            name,
            len(verdicts),
            len(classes),
            len(classes),
            2 * len(classes),
            tuple(str(v.piece.slope) for v in classes),
            "cut along the invariant annulus pair; matching dividing sets "
            "round to a disk-bounding curve and mixed ones are inconsistent",
        )
    if name == VARDOUBLE:
        verdicts = exhaust_hyperelliptic_slice(-1, -3)
        classes = survivor_classes(verdicts)
        return ProofReport(
            name,
            len(verdicts),
            len(classes),
            len(classes),
            2 * len(classes),
            tuple(str(v.piece.slope) for v in classes),
            "one configuration class survives; both pieces are tight "
            "solid tori of slope -1, distinguished only by signs",
        )
    raise ValueError("unknown replay %r" % (name,))
