"""Frieze windows: triangular arrays with the determinant-one diamond rule.

Entries are indexed matrix-style by pairs (a, d) with a <= d; the diagonal
(a, a) is 0 and the superdiagonal (a, a+1) is 1.  Finite Conway-Coxeter
friezes additionally carry a far border of ones and correspond to
triangulations of finite polygons.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping, Sequence

from .disc_model import D2, Arc, DiscFragment, Vertex, arc
from .errors import (NonPositiveEntry, NotAFundamentalDomain, OutOfRange,
                     ValidationReport)

KIND_INFINITE = "infinite"
KIND_FINITE_CC = "finite-cc"


@dataclass
class FriezeWindow:
    kind: str
    entries: dict[tuple[int, int], int]
    band: int | None = None

    def __post_init__(self):
        if self.kind not in (KIND_INFINITE, KIND_FINITE_CC):
            raise ValueError(f"unknown frieze kind {self.kind!r}")
        for (a, d) in self.entries:
            if a > d:
                raise ValueError("frieze entries live on pairs with a <= d")

    def get(self, a: int, d: int) -> int:
        return self.entries[(a, d)]

    def has(self, a: int, d: int) -> bool:
        return (a, d) in self.entries

    def items(self):
        return self.entries.items()


def validate_frieze(w: FriezeWindow) -> ValidationReport:
    """Report zero-diagonal, unit-superdiagonal, positivity, diamond-rule, and
    (for finite friezes) far-border violations."""
    v: list[str] = []
    e = w.entries
    for (a, d), val in sorted(e.items()):
        if a == d and val != 0:
            v.append(f"entry ({a},{d}) must be 0, found {val}")
        elif d == a + 1 and val != 1:
            v.append(f"entry ({a},{d}) must be 1, found {val}")
        elif d > a and val < 1:
            v.append(f"entry ({a},{d}) must be positive, found {val}")
    for (a, d), val in sorted(e.items()):
        corners = ((a, d), (a, d + 1), (a + 1, d), (a + 1, d + 1))
        if all(c in e for c in corners) and a + 1 <= d:
            det = e[(a, d)] * e[(a + 1, d + 1)] - e[(a, d + 1)] * e[(a + 1, d)]
            if det != 1:
                v.append(f"diamond at ({a},{d}) has determinant {det}")
    if w.kind == KIND_FINITE_CC:
        if w.band is None:
            v.append("finite frieze is missing its band width")
        else:
            for (a, d), val in sorted(e.items()):
                if d - a == w.band and val != 1:
                    v.append(f"far border entry ({a},{d}) must be 1, found {val}")
    return ValidationReport(tuple(v))


def frieze_from_quiddity(quiddity: Sequence[int], depth: int, start: int = 0) -> FriezeWindow:
    """Grow a frieze window from its second diagonal.

    ``quiddity[i]`` is the entry at (start+i-1, start+i+1).  Rows run from
    start-1 to start+len(quiddity); along each row the usual three-term
    recurrence fills entries out to offset ``depth`` (or as far as the given
    quiddity determines them).
    """
    if depth < 1:
        raise OutOfRange("depth must be positive")
    if depth > len(quiddity) + 1:
        # a quiddity of length n determines offsets up to n+1 (on its widest row)
        raise OutOfRange(f"depth {depth} exceeds what {len(quiddity)} quiddity values determine")
    if any(q < 1 for q in quiddity):
        raise NonPositiveEntry("quiddity values must be positive")
    q = {start + i: int(val) for i, val in enumerate(quiddity)}
    b0, b1 = start, start + len(quiddity) - 1
    entries: dict[tuple[int, int], int] = {}
    for a in range(b0 - 1, b1 + 2):
        entries[(a, a)] = 0
        if a + 1 <= b1 + 1:
            entries[(a, a + 1)] = 1
        for d in range(a + 2, min(a + depth, b1 + 1) + 1):
            val = q[d - 1] * entries[(a, d - 1)] - entries[(a, d - 2)]
            if val <= 0:
                raise NonPositiveEntry(
                    f"quiddity does not extend to a positive frieze: entry ({a},{d}) = {val}",
                    depth=d - a)
            entries[(a, d)] = val
    return FriezeWindow(KIND_INFINITE, entries)


def extract_quiddity(w: FriezeWindow) -> dict[int, int]:
    """The second diagonal, keyed by its middle position b."""
    return {a + 1: val for (a, d), val in w.entries.items() if d == a + 2}


def _single_interval_range(frag: DiscFragment) -> tuple[str, int, int]:
    tags = {v.interval for v in frag.boundary}
    if len(tags) != 1:
        raise ValueError("expected a fragment on a single interval")
    tag = tags.pop()
    idx = sorted(v.index for v in frag.boundary)
    if idx != list(range(idx[0], idx[-1] + 1)):
        raise ValueError("boundary indices must be contiguous")
    return tag, idx[0], idx[-1]


def cc_frieze_from_polygon(tri: DiscFragment) -> FriezeWindow:
    """Finite Conway-Coxeter frieze band of a triangulated m-gon.

    The fundamental triangle comes from counting on the polygon; the rest of
    the band is its translated/reflected tiling, realised here by letting the
    column index wrap around the polygon.
    """
    from .cc_counting import cc_labels

    tag, lo, hi = _single_interval_range(tri)
    m = hi - lo + 1
    maps = {i: cc_labels(tri, Vertex(tag, lo + i)) for i in range(m)}
    entries: dict[tuple[int, int], int] = {}
    for i in range(m):
        for k in range(m):
            entries[(lo + i, lo + i + k)] = maps[i][Vertex(tag, lo + (i + k) % m)]
    return FriezeWindow(KIND_FINITE_CC, entries, band=m - 1)


def triangulation_from_cc_frieze(fund: FriezeWindow) -> DiscFragment:
    """Rebuild the polygon triangulation from a fundamental domain.

    The domain must be the full triangle of entries over some range a..d with
    a 1 in its far corner; diagonals sit exactly at the interior 1-entries.
    """
    if not fund.entries:
        raise NotAFundamentalDomain("no entries")
    a0 = min(a for a, _ in fund.entries)
    d0 = max(d for _, d in fund.entries)
    for b in range(a0, d0 + 1):
        for c in range(b, d0 + 1):
            if not fund.has(b, c):
                raise NotAFundamentalDomain(f"missing entry ({b},{c})")
    if fund.get(a0, d0) != 1:
        raise NotAFundamentalDomain(f"corner entry ({a0},{d0}) is {fund.get(a0, d0)}, not 1")
    probe = FriezeWindow(KIND_INFINITE,
                         {k: v for k, v in fund.entries.items()
                          if a0 <= k[0] <= k[1] <= d0})
    rep = validate_frieze(probe)
    if not rep.ok:
        raise NotAFundamentalDomain("; ".join(rep.violations))
    if d0 - a0 < 2:
        boundary = tuple(Vertex("I", i) for i in range(a0, d0 + 1))
        return DiscFragment(D2, boundary, frozenset(), frozenset())
    diagonals = set()
    for b in range(a0, d0 + 1):
        for c in range(b + 2, d0 + 1):
            if (b, c) == (a0, d0):
                continue
            if fund.get(b, c) == 1:
                diagonals.add(arc(Vertex("I", b), Vertex("I", c)))
    boundary = tuple(Vertex("I", i) for i in range(a0, d0 + 1))
    closures = frozenset({arc(Vertex("I", a0), Vertex("I", d0))})
    frag = DiscFragment(D2, boundary, frozenset(diagonals), closures)
    if not frag.is_fully_triangulated:
        raise NotAFundamentalDomain(
            f"1-entries give {len(diagonals)} diagonals on a {frag.m}-gon, expected {frag.m - 3}")
    return frag
