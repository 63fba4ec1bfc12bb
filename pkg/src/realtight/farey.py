"""Farey-tessellation adjacency and the directional (counterclockwise)
distance between slopes.

Vertices are Q u {oo} on the circle; two slopes span an edge iff their
primitive lifts have determinant +-1.  The circle is ordered so that
finite slopes increase and wrap through oo (after oo come the very
negative slopes).  The distance from a to b counts greedy steps: from
the current slope, jump to the counterclockwise-farthest tessellation
neighbor not overshooting b.  A breadth-first search over a bounded
slope graph serves as the independent oracle.
"""

from __future__ import annotations

from collections import deque
from fractions import Fraction
from math import gcd

from .slopes import MappingClass, Slope, act


def is_farey_edge(a: Slope, b: Slope) -> bool:
    """True iff the primitive lifts satisfy |x_a*y_b - y_a*x_b| = 1."""
    return abs(a.den * b.num - a.num * b.den) == 1


def _linear_key(s: Slope):
    # Sort key for the wrap-at-oo order: finite slopes by value, oo last.
    if s.is_infinity:
        return (1, Fraction(0))
    return (0, Fraction(s.num, s.den))


def _cut_key(s: Slope, b: Slope):
    """Position of s in the circular order cut just after b.

    b itself is the maximum; y lies in the ccw interval (x, b] exactly
    when _cut_key(y, b) > _cut_key(x, b).
    """
    ls, lb = _linear_key(s), _linear_key(b)
    return (0 if ls > lb else 1, ls)


def in_ccw_interval(s: Slope, x: Slope, b: Slope) -> bool:
    """True iff s lies in the counterclockwise interval (x, b]."""
    return _cut_key(s, b) > _cut_key(x, b)


def _to_infinity(x: Slope) -> MappingClass:
    """A determinant +1 matrix sending x to oo (preserves the ccw order)."""
    x1, x2 = x.den, x.num
    # Bezout: r*x1 + t*x2 = 1; rows (x2, -x1), (r, t) have determinant +1.
    r, t = _bezout(x1, x2)
    return MappingClass(x2, -x1, r, t)


def _bezout(a: int, b: int):
    """(r, t) with r*a + t*b = 1 for coprime a, b."""
    old_r, r_ = a, b
    old_s, s_ = 1, 0
    old_t, t_ = 0, 1
    while r_:
        q = old_r // r_
        old_r, r_ = r_, old_r - q * r_
        old_s, s_ = s_, old_s - q * s_
        old_t, t_ = t_, old_t - q * t_
    if old_r == 1:
        return old_s, old_t
    if old_r == -1:
        return -old_s, -old_t
    raise ValueError("inputs are not coprime")


def farey_step(x: Slope, b: Slope) -> Slope:
    """The ccw-farthest Farey neighbor of x inside (x, b].

    Conjugate x to oo by an order-preserving integer matrix; neighbors
    of oo are the integers, and the farthest one toward the image of b
    is its floor.  The answer is unique, so greedy ties cannot occur.
    """
    if x == b:
        raise ValueError("already at the target")
    m = _to_infinity(x)
    image = act(m, b)
    assert not image.is_infinity
    n = image.num // image.den  # floor
    step = act(m.inverse(), Slope(n, 1))
    assert in_ccw_interval(step, x, b), "greedy step must progress ccw"
    return step


def farey_distance(a: Slope, b: Slope) -> int:
    """Number of longest counterclockwise steps from a to b.

    Runs the greedy walk on integer lifts.  The absolute determinant
    against the target strictly decreases at every step; that decrease
    is the recorded termination witness.
    """
    cx, cy = a.den, a.num
    bx, by = b.den, b.num
    steps = 0
    witness = abs(cy * bx - cx * by)
    while witness != 0:
        r, t = _bezout(cx, cy)
        b1 = cy * bx - cx * by
        b2 = r * bx + t * by
        if b1 < 0:
            b1, b2 = -b1, -b2
        n = b2 // b1
        cx, cy = t + cx * n, -r + cy * n
        steps += 1
        new_witness = abs(cy * bx - cx * by)
        assert new_witness < witness, "greedy walk failed to progress"
        witness = new_witness
    return steps


def slope_universe(bound: int):
    """All normalized slopes with |num| <= bound and 0 <= den <= bound."""
    seen = [Slope.INFINITY, Slope(0)]
    for den in range(1, bound + 1):
        for num in range(1, bound + 1):
            if gcd(num, den) == 1:
                seen.append(Slope(num, den))
                seen.append(Slope(-num, den))
    return seen

def farey_neighbors(s: Slope, bound: int):
    """Farey neighbors of s within slope_universe(bound).

    Neighbors of p/q are the two integer progressions (r + k*p)/(t + k*q)
    with p*t - q*r = +-1; only finitely many land inside the bound.
    """
    p, q = s.num, s.den
    r0, t0 = _bezout(q, -p)  # q*r0 - p*t0 = 1
    neighbors = set()
    for base_r, base_t in ((r0, t0), (-r0, -t0)):
        # k ranges where |k*p + base_r| <= bound and |k*q + base_t| <= bound.
        ks = set()
        for coeff, base in ((p, base_r), (q, base_t)):
            if coeff == 0:
                continue
            lo, hi = -bound - base, bound - base
            if coeff < 0:
                lo, hi, coeff = -hi, -lo, -coeff
            ks.update(range(-((-lo) // coeff), hi // coeff + 1))
        for k in ks:
            num = base_r + k * p
            den = base_t + k * q
            if num == 0 and den == 0:
                continue
            if abs(num) > bound or abs(den) > bound:
                continue
            neighbors.add(Slope(num, den))
    neighbors.discard(s)
    return sorted(neighbors, key=_linear_key)


def farey_distance_bfs(a: Slope, b: Slope, den_bound: int) -> int:
    """Independent oracle: BFS over bounded slopes, ccw-monotone moves only.

    Raises ValueError("increase bound") when no monotone path fits inside
    the bound.
    """
    if a == b:
        return 0
    if max(abs(a.num), a.den, abs(b.num), b.den) > den_bound:
        raise ValueError("increase bound")
    dist = {a: 0}
    queue = deque([a])
    while queue:
        current = queue.popleft()
        key_here = _cut_key(current, b)
        for nxt in farey_neighbors(current, den_bound):
            if _cut_key(nxt, b) <= key_here:
                continue
            if nxt in dist:
                continue
            dist[nxt] = dist[current] + 1
            if nxt == b:
                return dist[nxt]
            queue.append(nxt)
    raise ValueError("increase bound")


def _bounded_graph(den_bound: int):
    cached = _GRAPH_CACHE.get(den_bound)
    if cached is None:
        universe = sorted(slope_universe(den_bound), key=_linear_key)
        order = {s: i for i, s in enumerate(universe)}
        adjacency = {s: farey_neighbors(s, den_bound) for s in universe}
        cached = (order, adjacency)
        _GRAPH_CACHE[den_bound] = cached
    return cached


_GRAPH_CACHE: dict = {}


def bfs_distances_to(b: Slope, den_bound: int):
    """Monotone-path BFS distances to b from every bounded slope.

    Explores the reversed move graph once; used to sweep oracle checks
    over many sources without re-running per-pair searches.
    """
    order, adjacency = _bounded_graph(den_bound)
    n = len(order)
    ib = order[b]

    def cut_index(i):
        # Linear position in the circle cut just after b; b is maximal.
        return i - ib - 1 if i > ib else i + n - ib - 1

    dist = {b: 0}
    queue = deque([b])
    while queue:
        current = queue.popleft()
        key_here = cut_index(order[current])
        for prev in adjacency[current]:
            # Reversed edge prev -> current requires current ccw of prev.
            if cut_index(order[prev]) >= key_here:
                continue
            if prev in dist:
                continue
            dist[prev] = dist[current] + 1
            queue.append(prev)
    return dist
