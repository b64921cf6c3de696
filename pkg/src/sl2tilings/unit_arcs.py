"""The partial triangulation a window determines through its unit entries.

A unit entry t(b, v) = 1 corresponds to a connecting arc between b on
interval I and v on interval III; a unit entry of the derived row (column)
frieze at (a, d) with a + 2 <= d corresponds to an internal arc on interval
I (III).  These arcs never cross.  The defect of a vertex measures how many
arcs a full triangulation still has to add there; saturated vertices are the
ones with defect zero.
"""
from __future__ import annotations

from dataclasses import dataclass

from .disc_model import Arc, Vertex, arc, arcs_cross, shape_for_tags
from .errors import (CrossingDetected, InconsistentCertificate,
                     InsufficientMargin, OutOfScope)
from .tiling import OnesCertificate, TilingWindow


@dataclass(frozen=True)
class UnitArcSet:
    """Arcs read off a window's unit entries, plus certificate-supplied ones.

    With a certificate the listed families are complete for the scope the
    certificate covers; from a bare window they are complete only inside it.
    """

    connecting: frozenset[Arc]
    internal_I: frozenset[Arc]
    internal_III: frozenset[Arc]
    row_range: tuple[int, int]
    col_range: tuple[int, int]
    cert: OnesCertificate | None = None

    def all_arcs(self) -> frozenset[Arc]:
        return self.connecting | self.internal_I | self.internal_III

    def count_ending_at(self, v: Vertex) -> int:
        return sum(1 for a in self.all_arcs() if a.ends_at(v))

    def internal_partners(self, v: Vertex) -> list[int]:
        """Indices joined to v by an internal arc on v's own interval."""
        fam = self.internal_I if v.interval == "I" else self.internal_III
        return sorted(a.other_end(v).index for a in fam if a.ends_at(v))

    def connecting_partners(self, v: Vertex) -> list[int]:
        return sorted(a.other_end(v).index for a in self.connecting if a.ends_at(v))

    def _in_scope(self, v: Vertex) -> bool:
        if v.interval == "I":
            return self.row_range[0] <= v.index <= self.row_range[1]
        if v.interval == "III":
            return self.col_range[0] <= v.index <= self.col_range[1]
        return False


def unit_arc_set(w: TilingWindow, cert: OnesCertificate | None = None) -> UnitArcSet:
    """Collect the connecting and internal unit arcs of a window.

    When a certificate is given its data is merged in after being checked
    against the window; the arcs are verified to be pairwise non-crossing.
    """
    if cert is not None:
        cert.check_window(w)
        ones = set(map(tuple, cert.ones))
        row_ones = set(map(tuple, cert.row_frieze_ones))
        col_ones = set(map(tuple, cert.col_frieze_ones))
    else:
        ones = {(b, v) for (b, v), val in w.entries.items() if val == 1}
        row_ones = set()
        col_ones = set()
        if w.col_hi - w.col_lo >= 1:
            row_ones = {(a, d) for a in w.rows() for d in range(a + 2, w.row_hi + 1)
                        if w.p_value(a, d) == 1}
        if w.row_hi - w.row_lo >= 1:
            col_ones = {(u, x) for u in w.cols() for x in range(u + 2, w.col_hi + 1)
                        if w.q_value(u, x) == 1}
    connecting = frozenset(arc(Vertex("I", b), Vertex("III", v)) for b, v in ones)
    internal_i = frozenset(arc(Vertex("I", a), Vertex("I", d)) for a, d in row_ones)
    internal_iii = frozenset(arc(Vertex("III", u), Vertex("III", x)) for u, x in col_ones)
    arcs = sorted(connecting | internal_i | internal_iii,
                  key=lambda a: (a.a, a.b))
    shape = shape_for_tags(v.interval for a in arcs for v in a.endpoints) if arcs else None
    for i in range(len(arcs)):
        for j in range(i + 1, len(arcs)):
            if arcs_cross(shape, arcs[i], arcs[j]):
                raise CrossingDetected(
                    f"unit arcs {arcs[i]} and {arcs[j]} cross; the input is not a "
                    f"window of a valid tiling")
    return UnitArcSet(connecting, internal_i, internal_iii,
                      w.row_range, w.col_range, cert)


def is_saturated(arcs: UnitArcSet, v: Vertex) -> bool:
    """A vertex is saturated when it sits strictly below an internal arc or
    strictly between two connecting arcs."""
    if v.interval not in ("I", "III"):
        raise OutOfScope(f"{v} is not on interval I or III")
    if not arcs._in_scope(v):
        raise OutOfScope(f"{v} is outside the scope of this arc set")
    for a in (arcs.internal_I if v.interval == "I" else arcs.internal_III):
        lo, hi = a.a.index, a.b.index
        if lo < v.index < hi:
            return True
    if v.interval == "I":
        below = any(a.a.index < v.index for a in arcs.connecting)
        above = any(a.a.index > v.index for a in arcs.connecting)
        if arcs.cert is not None:
            below = below or arcs.cert.has_row_below(v.index)
            above = above or arcs.cert.has_row_above(v.index)
    else:
        below = any(a.b.index < v.index for a in arcs.connecting)
        above = any(a.b.index > v.index for a in arcs.connecting)
        if arcs.cert is not None:
            below = below or arcs.cert.has_col_below(v.index)
            above = above or arcs.cert.has_col_above(v.index)
    return below and above


def longest_arcs(arcs: UnitArcSet, v: Vertex, direction: str) -> tuple[Vertex, bool]:
    """Endpoint of the longest internal unit arc leaving v in the given
    direction, or the adjacent edge endpoint when there is none.

    Returns (partner vertex, is_edge).  Answers are relative to the declared
    scope: with a certificate the arc families are complete, while for a bare
    window they only cover what the window shows.
    """
    if direction not in ("clockwise", "anticlockwise"):
        raise ValueError("direction must be 'clockwise' or 'anticlockwise'")
    if v.interval not in ("I", "III"):
        raise OutOfScope(f"{v} is not on interval I or III")
    if not arcs._in_scope(v):
        raise OutOfScope(f"{v} is outside the scope of this arc set")
    partners = arcs.internal_partners(v)
    if direction == "anticlockwise":
        ups = [d for d in partners if d > v.index]
        if ups:
            return Vertex(v.interval, max(ups)), False
        return Vertex(v.interval, v.index + 1), True
    downs = [d for d in partners if d < v.index]
    if downs:
        return Vertex(v.interval, min(downs)), False
    return Vertex(v.interval, v.index - 1), True


def row_defect(w: TilingWindow, arcs: UnitArcSet, b: int) -> int:
    """Defect of b on interval I: quiddity value minus one minus arc count."""
    if not (w.row_lo < b < w.row_hi):
        raise InsufficientMargin(
            f"row {b} needs both neighbours inside the window rows "
            f"[{w.row_lo},{w.row_hi}]")
    quid = w.p_value(b - 1, b + 1)
    n = arcs.count_ending_at(Vertex("I", b))
    d = quid - 1 - n
    if d < 0:
        raise InconsistentCertificate(
            f"negative defect {d} at row {b}; unit-arc data is inconsistent")
    return d


def col_defect(w: TilingWindow, arcs: UnitArcSet, v: int) -> int:
    if not (w.col_lo < v < w.col_hi):
        raise InsufficientMargin(
            f"column {v} needs both neighbours inside the window columns "
            f"[{w.col_lo},{w.col_hi}]")
    quid = w.q_value(v - 1, v + 1)
    n = arcs.count_ending_at(Vertex("III", v))
    d = quid - 1 - n
    if d < 0:
        raise InconsistentCertificate(
            f"negative defect {d} at column {v}; unit-arc data is inconsistent")
    return d


@dataclass(frozen=True)
class DefectMap:
    row: dict[int, int]
    col: dict[int, int]


def _cross_check_row(w: TilingWindow, arcs: UnitArcSet, b: int, raw: int) -> None:
    vtx = Vertex("I", b)
    down, _ = longest_arcs(arcs, vtx, "clockwise")
    up, _ = longest_arcs(arcs, vtx, "anticlockwise")
    conn = arcs.connecting_partners(vtx)
    if arcs.cert is not None:
        conn = arcs.cert.row_ones(b)
    if conn:
        v1, vj = conn[0], conn[-1]
        if not (w.col_lo <= v1 <= w.col_hi and w.col_lo <= vj <= w.col_hi):
            return
        if not (w.row_lo <= down.index and up.index <= w.row_hi):
            return
        formula = w.get(down.index, vj) + w.get(up.index, v1) - 2
    else:
        if not (w.row_lo <= down.index and up.index <= w.row_hi):
            return
        formula = w.p_value(down.index, up.index) - 1
    if formula != raw:
        raise InconsistentCertificate(
            f"defect mismatch at row {b}: definition gives {raw}, closed formula {formula}")


def _cross_check_col(w: TilingWindow, arcs: UnitArcSet, v: int, raw: int) -> None:
    vtx = Vertex("III", v)
    down, _ = longest_arcs(arcs, vtx, "clockwise")
    up, _ = longest_arcs(arcs, vtx, "anticlockwise")
    conn = arcs.connecting_partners(vtx)
    if arcs.cert is not None:
        conn = arcs.cert.col_ones(v)
    if conn:
        b1, bj = conn[0], conn[-1]
        if not (w.row_lo <= b1 <= w.row_hi and w.row_lo <= bj <= w.row_hi):
            return
        if not (w.col_lo <= down.index and up.index <= w.col_hi):
            return
        formula = w.get(bj, down.index) + w.get(b1, up.index) - 2
    else:
        if not (w.col_lo <= down.index and up.index <= w.col_hi):
            return
        formula = w.q_value(down.index, up.index) - 1
    if formula != raw:
        raise InconsistentCertificate(
            f"defect mismatch at column {v}: definition gives {raw}, closed formula {formula}")


def defect_map(w: TilingWindow, cert: OnesCertificate | None = None) -> DefectMap:
    """Defects of all window-interior rows and columns.

    Each value is cross-checked against the applicable closed formula (via
    the longest internal arcs, or the extreme connecting arcs) whenever the
    landmarks it needs are visible in the window.
    """
    arcs = unit_arc_set(w, cert)
    row: dict[int, int] = {}
    col: dict[int, int] = {}
    for b in range(w.row_lo + 1, w.row_hi):
        raw = row_defect(w, arcs, b)
        _cross_check_row(w, arcs, b, raw)
        row[b] = raw
    for v in range(w.col_lo + 1, w.col_hi):
        raw = col_defect(w, arcs, v)
        _cross_check_col(w, arcs, v, raw)
        col[v] = raw
    return DefectMap(row, col)
