"""Combinatorial model of a disc whose boundary carries marked vertices.

The boundary is split into two, three, or four open intervals separated by
accumulation points.  Each interval holds a copy of the integers; indices
ascend anticlockwise, and the intervals themselves are listed anticlockwise.
Accumulation points are never materialised: they exist only through the
interval ordering, and at finite scale an arc "closing" a gap between two
intervals plays their role.

Everything here is immutable and hashable, so values can be shared freely.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, NamedTuple, Sequence

from .errors import NoClosingArc, ValidationReport, VertexNotInFragment

INTERVAL_TAGS = ("I", "II", "III", "IV")
_TAG_RANK = {t: i for i, t in enumerate(INTERVAL_TAGS)}


class Vertex(NamedTuple):
    interval: str
    index: int

    def __repr__(self) -> str:  # matches the usual "3^I" notation
        return f"{self.index}^{self.interval}"


def vertex_neighbors(v: Vertex) -> tuple[Vertex, Vertex]:
    """Previous and next vertex along v's own interval."""
    return Vertex(v.interval, v.index - 1), Vertex(v.interval, v.index + 1)


def _global_key(v: Vertex) -> tuple[int, int]:
    return (_TAG_RANK[v.interval], v.index)


@dataclass(frozen=True)
class Arc:
    """Unordered pair of distinct, non-neighbouring vertices."""

    a: Vertex
    b: Vertex

    def __post_init__(self):
        if self.a == self.b:
            raise ValueError("arc endpoints must be distinct")
        if (self.a.interval == self.b.interval
                and abs(self.a.index - self.b.index) == 1):
            raise ValueError(f"{self.a}-{self.b} is an edge, not an arc")
        if _global_key(self.a) > _global_key(self.b):
            a, b = self.a, self.b
            object.__setattr__(self, "a", b)
            object.__setattr__(self, "b", a)

    def __repr__(self) -> str:
        return f"{{{self.a},{self.b}}}"

    @property
    def endpoints(self) -> tuple[Vertex, Vertex]:
        return (self.a, self.b)

    @property
    def is_internal(self) -> bool:
        return self.a.interval == self.b.interval

    def ends_at(self, v: Vertex) -> bool:
        return v == self.a or v == self.b

    def other_end(self, v: Vertex) -> Vertex:
        if v == self.a:
            return self.b
        if v == self.b:
            return self.a
        raise ValueError(f"{v} is not an endpoint of {self}")


def arc(u: Vertex, v: Vertex) -> Arc:
    return Arc(u, v)


_ALLOWED_SHAPES = {
    (2, ("I", "III")),
    (3, ("I", "II", "III")),
    (3, ("I", "III", "IV")),
    (4, ("I", "II", "III", "IV")),
}


@dataclass(frozen=True)
class DiscShape:
    """Number of accumulation points plus the anticlockwise interval list."""

    n: int
    intervals: tuple[str, ...]

    def __post_init__(self):
        object.__setattr__(self, "intervals", tuple(self.intervals))
        if (self.n, self.intervals) not in _ALLOWED_SHAPES:
            raise ValueError(f"no disc has {self.n} gaps and intervals {self.intervals}")

    def has(self, tag: str) -> bool:
        return tag in self.intervals

    def rank(self, tag: str) -> int:
        try:
            return self.intervals.index(tag)
        except ValueError:
            raise ValueError(f"interval {tag} is not on this disc") from None

    def key(self, v: Vertex) -> tuple[int, int]:
        return (self.rank(v.interval), v.index)


D2 = DiscShape(2, ("I", "III"))
D3_WITH_II = DiscShape(3, ("I", "II", "III"))
D3_WITH_IV = DiscShape(3, ("I", "III", "IV"))
D4 = DiscShape(4, ("I", "II", "III", "IV"))


def shape_for_tags(tags: Iterable[str]) -> DiscShape:
    """Smallest disc shape whose intervals cover the given tags."""
    s = set(tags)
    if "II" in s and "IV" in s:
        return D4
    if "II" in s:
        return D3_WITH_II
    if "IV" in s:
        return D3_WITH_IV
    return D2


def in_cyclic_order(shape: DiscShape, vs: Sequence[Vertex]) -> bool:
    """True iff one anticlockwise turn from vs[0] meets the vertices in order."""
    keys = [shape.key(v) for v in vs]
    if len(set(vs)) != len(vs):
        raise ValueError("vertices must be pairwise distinct")
    n = len(keys)
    if n <= 1:
        return True
    descents = sum(1 for i in range(n) if keys[i] > keys[(i + 1) % n])
    return descents <= 1


def arcs_cross(shape: DiscShape, x: Arc, y: Arc) -> bool:
    """Strict interleaving of endpoint pairs; sharing an endpoint never crosses."""
    a, b = x.endpoints
    c, d = y.endpoints
    if {a, b} & {c, d}:
        return False
    return in_cyclic_order(shape, [a, c, b, d]) or in_cyclic_order(shape, [a, d, b, c])


def chords_cross_positions(p: tuple[int, int], q: tuple[int, int]) -> bool:
    """Crossing test for chords given as position pairs on a cyclic boundary."""
    i, j = sorted(p)
    k, l = sorted(q)
    if len({i, j, k, l}) < 4:
        return False
    return (i < k < j < l) or (k < i < l < j)


@dataclass(frozen=True)
class DiscFragment:
    """A finite polygon inside the disc together with a set of diagonals.

    ``boundary`` lists the polygon's vertices in strict cyclic (anticlockwise)
    order.  Consecutive boundary vertices must either be neighbours on their
    interval or be joined by one of the declared ``closures`` -- the arcs that
    stand in for the accumulation points at finite scale.  ``diagonals`` are
    arcs strictly inside the polygon.
    """

    shape: DiscShape
    boundary: tuple[Vertex, ...]
    diagonals: frozenset[Arc] = frozenset()
    closures: frozenset[Arc] = frozenset()

    def __post_init__(self):
        object.__setattr__(self, "boundary", tuple(self.boundary))
        object.__setattr__(self, "diagonals", frozenset(self.diagonals))
        object.__setattr__(self, "closures", frozenset(self.closures))
        m = len(self.boundary)
        if m < 2:
            raise ValueError("a fragment needs at least two boundary vertices")
        if len(set(self.boundary)) != m:
            raise ValueError("boundary vertices must be pairwise distinct")
        for v in self.boundary:
            self.shape.rank(v.interval)
        if not in_cyclic_order(self.shape, self.boundary):
            raise ValueError("boundary is not in cyclic order")
        bset = set(self.boundary)
        for side in self._raw_sides():
            u, v = side
            if self._are_neighbors(u, v):
                continue
            if arc(u, v) not in self.closures:
                raise ValueError(f"boundary side {u}-{v} is not an edge and has no closing arc")
        for c in self.closures:
            if not (c.a in bset and c.b in bset):
                raise ValueError(f"closure {c} has an endpoint off the boundary")
        pos = {v: i for i, v in enumerate(self.boundary)}
        object.__setattr__(self, "_pos", pos)
        side_pairs = {frozenset(s) for s in self._raw_sides()}
        for d in self.diagonals:
            if d.a not in bset or d.b not in bset:
                raise ValueError(f"diagonal {d} has an endpoint off the boundary")
            if frozenset(d.endpoints) in side_pairs:
                raise ValueError(f"diagonal {d} coincides with a boundary side")

    @staticmethod
    def _are_neighbors(u: Vertex, v: Vertex) -> bool:
        return u.interval == v.interval and abs(u.index - v.index) == 1

    def _raw_sides(self):
        m = len(self.boundary)
        for i in range(m):
            yield self.boundary[i], self.boundary[(i + 1) % m]

    @property
    def m(self) -> int:
        return len(self.boundary)

    def position(self, v: Vertex) -> int:
        try:
            return self._pos[v]
        except KeyError:
            raise VertexNotInFragment(f"{v} is not on the fragment boundary") from None

    def __contains__(self, v: Vertex) -> bool:
        return v in self._pos

    @property
    def is_fully_triangulated(self) -> bool:
        if self.m == 2:
            return not self.diagonals
        return len(self.diagonals) == self.m - 3

    def sides(self) -> list[tuple[Vertex, Vertex]]:
        return list(self._raw_sides())

    def all_arcs(self) -> frozenset[Arc]:
        return self.diagonals | self.closures

    def diagonal_positions(self) -> list[tuple[int, int]]:
        out = []
        for d in self.diagonals:
            i, j = self.position(d.a), self.position(d.b)
            out.append((min(i, j), max(i, j)))
        return sorted(out)


def validate_fragment(frag: DiscFragment, ambient_arcs: Iterable[Arc] | None = None) -> ValidationReport:
    """Report every invariant violation; an empty report means the fragment is
    a fully triangulated compatible polygon."""
    violations: list[str] = []
    ambient = set(ambient_arcs) if ambient_arcs is not None else set(frag.closures)
    for u, v in frag.sides():
        if DiscFragment._are_neighbors(u, v):
            continue
        try:
            a = arc(u, v)
        except ValueError:
            violations.append(f"boundary side {u}-{v} is degenerate")
            continue
        if a not in ambient:
            violations.append(f"side {u}-{v} is neither an edge nor a declared ambient arc")
    dpos = frag.diagonal_positions()
    for i in range(len(dpos)):
        for j in range(i + 1, len(dpos)):
            if chords_cross_positions(dpos[i], dpos[j]):
                va = dpos[i]
                vb = dpos[j]
                violations.append(
                    f"diagonals {frag.boundary[va[0]]}-{frag.boundary[va[1]]} and "
                    f"{frag.boundary[vb[0]]}-{frag.boundary[vb[1]]} cross")
    if not frag.is_fully_triangulated:
        want = 0 if frag.m == 2 else frag.m - 3
        violations.append(
            f"not fully triangulated: {len(frag.diagonals)} diagonals, expected {want}")
    return ValidationReport(tuple(violations))


def _innermost(cands: list[Arc], hi_end: str, lo_end: str) -> Arc:
    # Candidates around one gap are pairwise non-crossing, hence nested; the
    # arc nearest the gap maximises the index on the high side and minimises
    # it on the low side.
    def key(a: Arc):
        ends = {v.interval: v for v in a.endpoints}
        return (ends[hi_end].index, -ends[lo_end].index)

    return max(cands, key=key)


def close_window(ambient_arcs: Iterable[Arc], required: Iterable[Vertex],
                 shape: DiscShape | None = None) -> DiscFragment:
    """Enclose the required vertices with boundary ranges and closing arcs.

    The closing side across each gap is chosen greedily as the ambient arc
    nearest that gap beyond the required vertices.  Diagonals are all ambient
    arcs lying among the chosen boundary vertices.
    """
    arcs = set(ambient_arcs)
    req = set(required)
    if not req:
        raise ValueError("need at least one required vertex")
    if shape is None:
        tags = {v.interval for v in req}
        for a in arcs:
            tags |= {v.interval for v in a.endpoints}
        shape = shape_for_tags(tags)
    ranges: dict[str, list[int]] = {}
    for v in req:
        shape.rank(v.interval)
        lo_hi = ranges.setdefault(v.interval, [v.index, v.index])
        lo_hi[0] = min(lo_hi[0], v.index)
        lo_hi[1] = max(lo_hi[1], v.index)
    used = [t for t in shape.intervals if t in ranges]
    closures: set[Arc] = set()
    if len(used) == 1:
        tag = used[0]
        lo, hi = ranges[tag]
        cands = [a for a in arcs
                 if a.is_internal and a.a.interval == tag
                 and a.a.index <= lo and a.b.index >= hi]
        if not cands:
            raise NoClosingArc(f"no internal arc encloses {tag} range [{lo},{hi}]")
        pick = max(cands, key=lambda a: (a.a.index, -a.b.index))
        closures.add(pick)
        ranges[tag] = [pick.a.index, pick.b.index]
    else:
        for i, j_tag in enumerate(used):
            k_tag = used[(i + 1) % len(used)]
            hi_j = ranges[j_tag][1]
            lo_k = ranges[k_tag][0]
            cands = []
            for a in arcs:
                ends = {v.interval: v for v in a.endpoints}
                if set(ends) != {j_tag, k_tag}:
                    continue
                if ends[j_tag].index >= hi_j and ends[k_tag].index <= lo_k:
                    cands.append(a)
            if not cands:
                raise NoClosingArc(f"no arc closes the gap between {j_tag} and {k_tag}")
            pick = _innermost(cands, j_tag, k_tag)
            ends = {v.interval: v for v in pick.endpoints}
            ranges[j_tag][1] = max(ranges[j_tag][1], ends[j_tag].index)
            ranges[k_tag][0] = min(ranges[k_tag][0], ends[k_tag].index)
            closures.add(pick)
    boundary: list[Vertex] = []
    for tag in used:
        lo, hi = ranges[tag]
        boundary.extend(Vertex(tag, i) for i in range(lo, hi + 1))
    bset = set(boundary)
    side_pairs = set()
    m = len(boundary)
    for i in range(m):
        side_pairs.add(frozenset((boundary[i], boundary[(i + 1) % m])))
    diagonals = {a for a in arcs
                 if a.a in bset and a.b in bset
                 and frozenset(a.endpoints) not in side_pairs}
    return DiscFragment(shape, tuple(boundary), frozenset(diagonals), frozenset(closures))
