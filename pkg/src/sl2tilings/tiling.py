"""Rectangular windows of SL2-tilings and the machinery built on them.

A window stores positive integers on a finite rectangle, matrix-style: the
row index b increases downwards, the column index v to the right.  Every
adjacent 2x2 determinant equals one.  Windows know how to grow from a seed
row and column, derive their row/column friezes, locate their unit entries
on a zig-zag, and delete rows or columns at local maxima.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator, Mapping, Sequence

from .errors import (InconsistentCertificate, MinIsOne, NonIntegral,
                     NonPositive, NotLocalMax, ShapeViolation,
                     ValidationReport, WindowTooSmall)
from .frieze import KIND_INFINITE, FriezeWindow


@dataclass
class TilingWindow:
    row_range: tuple[int, int]
    col_range: tuple[int, int]
    entries: dict[tuple[int, int], int]

    def __post_init__(self):
        self.row_range = (int(self.row_range[0]), int(self.row_range[1]))
        self.col_range = (int(self.col_range[0]), int(self.col_range[1]))
        if self.row_range[0] > self.row_range[1] or self.col_range[0] > self.col_range[1]:
            raise ValueError("empty window range")
        for b in self.rows():
            for v in self.cols():
                if (b, v) not in self.entries:
                    raise ValueError(f"missing entry at ({b},{v})")

    @classmethod
    def from_rows(cls, row_lo: int, col_lo: int, rows: Sequence[Sequence[int]]) -> "TilingWindow":
        entries = {}
        width = len(rows[0])
        for i, row in enumerate(rows):
            if len(row) != width:
                raise ValueError("ragged rows")
            for j, val in enumerate(row):
                entries[(row_lo + i, col_lo + j)] = int(val)
        return cls((row_lo, row_lo + len(rows) - 1), (col_lo, col_lo + width - 1), entries)

    @property
    def row_lo(self) -> int:
        return self.row_range[0]

    @property
    def row_hi(self) -> int:
        return self.row_range[1]

    @property
    def col_lo(self) -> int:
        return self.col_range[0]

    @property
    def col_hi(self) -> int:
        return self.col_range[1]

    def rows(self) -> range:
        return range(self.row_lo, self.row_hi + 1)

    def cols(self) -> range:
        return range(self.col_lo, self.col_hi + 1)

    def get(self, b: int, v: int) -> int:
        try:
            return self.entries[(b, v)]
        except KeyError:
            raise KeyError(f"({b},{v}) is outside the window") from None

    def row_values(self, b: int) -> list[int]:
        return [self.get(b, v) for v in self.cols()]

    def as_rows(self) -> list[list[int]]:
        return [self.row_values(b) for b in self.rows()]

    def p_value(self, a: int, d: int) -> int:
        """Row-frieze entry from the leftmost adjacent column pair."""
        if a > d:
            raise ValueError("row-frieze entries need a <= d")
        if self.col_hi - self.col_lo < 1:
            raise WindowTooSmall("need at least two columns")
        c = self.col_lo
        return self.get(a, c) * self.get(d, c + 1) - self.get(a, c + 1) * self.get(d, c)

    def q_value(self, u: int, x: int) -> int:
        """Column-frieze entry from the topmost adjacent row pair."""
        if u > x:
            raise ValueError("column-frieze entries need u <= x")
        if self.row_hi - self.row_lo < 1:
            raise WindowTooSmall("need at least two rows")
        c = self.row_lo
        return self.get(c, u) * self.get(c + 1, x) - self.get(c, x) * self.get(c + 1, u)


def validate_window(w: TilingWindow) -> ValidationReport:
    violations: list[str] = []
    for b in w.rows():
        for v in w.cols():
            val = w.get(b, v)
            if not isinstance(val, int) or val < 1:
                violations.append(f"entry ({b},{v}) = {val} is not a positive integer")
    for b in range(w.row_lo, w.row_hi):
        for v in range(w.col_lo, w.col_hi):
            det = (w.get(b, v) * w.get(b + 1, v + 1)
                   - w.get(b, v + 1) * w.get(b + 1, v))
            if det != 1:
                violations.append(f"2x2 determinant at ({b},{v}) is {det}")
    return ValidationReport(tuple(violations))


def extend_from_seed(f: int, g: int, row: Mapping[int, int], col: Mapping[int, int]) -> TilingWindow:
    """Unique determinant-one window through a given row and column.

    ``row`` maps column indices to the values on row f; ``col`` maps row
    indices to the values on column g.  Both must contain the crossing cell
    (f, g) with the same value, and all values must be positive.
    """
    cols = sorted(row)
    rows = sorted(col)
    if cols != list(range(cols[0], cols[-1] + 1)) or rows != list(range(rows[0], rows[-1] + 1)):
        raise ValueError("seed row and column must cover contiguous ranges")
    if g not in row or f not in col:
        raise ValueError("seed row and column must contain the crossing cell")
    if row[g] != col[f]:
        raise ValueError("seed row and column disagree at the crossing cell")
    if any(x < 1 for x in row.values()) or any(x < 1 for x in col.values()):
        raise NonPositive("seed values must be positive")
    t: dict[tuple[int, int], int] = {}
    for v, val in row.items():
        t[(f, v)] = int(val)
    for b, val in col.items():
        t[(b, g)] = int(val)

    def solve(num: int, den: int, b: int, v: int) -> int:
        q, r = divmod(num, den)
        if r != 0:
            raise NonIntegral(f"cell ({b},{v}) would be {num}/{den}", row=b, col=v)
        if q < 1:
            raise NonPositive(f"cell ({b},{v}) would be {q}", row=b, col=v)
        return q

    for b in range(f + 1, rows[-1] + 1):          # south-east quadrant
        for v in range(g + 1, cols[-1] + 1):
            t[(b, v)] = solve(t[(b - 1, v)] * t[(b, v - 1)] + 1, t[(b - 1, v - 1)], b, v)
    for b in range(f + 1, rows[-1] + 1):          # south-west
        for v in range(g - 1, cols[0] - 1, -1):
            t[(b, v)] = solve(t[(b - 1, v)] * t[(b, v + 1)] - 1, t[(b - 1, v + 1)], b, v)
    for b in range(f - 1, rows[0] - 1, -1):       # north-east
        for v in range(g + 1, cols[-1] + 1):
            t[(b, v)] = solve(t[(b, v - 1)] * t[(b + 1, v)] - 1, t[(b + 1, v - 1)], b, v)
    for b in range(f - 1, rows[0] - 1, -1):       # north-west
        for v in range(g - 1, cols[0] - 1, -1):
            t[(b, v)] = solve(t[(b, v + 1)] * t[(b + 1, v)] + 1, t[(b + 1, v + 1)], b, v)
    return TilingWindow((rows[0], rows[-1]), (cols[0], cols[-1]), t)


def derived_friezes(w: TilingWindow) -> tuple[FriezeWindow, FriezeWindow]:
    """The row frieze and column frieze of a window.

    The defining 2x2 determinants may use any adjacent column (row) pair;
    the result does not depend on the choice, so the leftmost (topmost) pair
    is used.
    """
    if w.col_hi - w.col_lo < 1:
        raise WindowTooSmall("need at least two columns for the row frieze")
    if w.row_hi - w.row_lo < 1:
        raise WindowTooSmall("need at least two rows for the column frieze")
    p_entries = {(a, d): w.p_value(a, d)
                 for a in w.rows() for d in range(a, w.row_hi + 1)}
    q_entries = {(u, x): w.q_value(u, x)
                 for u in w.cols() for x in range(u, w.col_hi + 1)}
    return FriezeWindow(KIND_INFINITE, p_entries), FriezeWindow(KIND_INFINITE, q_entries)


@dataclass(frozen=True)
class ZigZag:
    """The unit entries of a window in staircase order.

    Between consecutive points either the row drops with the column fixed or
    the column grows with the row fixed.  Boundedness cannot be read off a
    finite window, so the flags are assertions supplied by a caller (None
    when unknown).
    """

    points: tuple[tuple[int, int], ...]
    left_bounded: bool | None = None
    right_bounded: bool | None = None


def _check_zigzag_steps(points: Sequence[tuple[int, int]], what: str) -> None:
    for i in range(len(points) - 1):
        b0, v0 = points[i]
        b1, v1 = points[i + 1]
        drop = b1 < b0 and v1 == v0
        grow = b1 == b0 and v1 > v0
        if not (drop or grow):
            raise ShapeViolation(
                f"{what}: step {points[i]} -> {points[i + 1]} is neither a row drop "
                f"nor a column growth")


def ones_zigzag(w: TilingWindow) -> ZigZag:
    """All unit entries of the window, sorted into zig-zag order."""
    pts = sorted(((b, v) for (b, v), val in w.entries.items() if val == 1),
                 key=lambda p: (-p[0], p[1]))
    _check_zigzag_steps(pts, "unit entries")
    return ZigZag(tuple(pts))


@dataclass(frozen=True)
class TieReport:
    """Returned by unique_min when the minimum is attained more than once."""

    value: int
    positions: tuple[tuple[int, int], ...]


def unique_min(w: TilingWindow):
    """Minimum entry and its position; a TieReport when it is not unique."""
    best = min(w.entries.values())
    if best == 1:
        raise MinIsOne("window contains a unit entry")
    positions = sorted(pos for pos, val in w.entries.items() if val == best)
    if len(positions) > 1:
        return TieReport(best, tuple(positions))
    return positions[0], best


def delete_at_local_max(w: TilingWindow, axis: str, idx: int) -> TilingWindow:
    """Remove a column (row) whose entries are local maxima along rows (columns).

    Requires a strict local maximum at the given index; before deletion every
    entry of the removed line equals the sum of its two neighbours, which is
    asserted.  Indices beyond the removed line shift towards it by one.
    """
    if axis == "column":
        if not (w.col_lo < idx < w.col_hi):
            raise NotLocalMax(f"column {idx} has no neighbours on both sides")
        if not any(w.get(b, idx - 1) < w.get(b, idx) > w.get(b, idx + 1) for b in w.rows()):
            raise NotLocalMax(f"no row has a strict local maximum in column {idx}")
        for b in w.rows():
            if w.get(b, idx) != w.get(b, idx - 1) + w.get(b, idx + 1):
                raise InconsistentCertificate(
                    f"entry ({b},{idx}) is not the sum of its horizontal neighbours; "
                    f"the window is not a valid tiling")
        entries = {}
        for b in w.rows():
            for v in w.cols():
                if v == idx:
                    continue
                entries[(b, v if v < idx else v - 1)] = w.get(b, v)
        return TilingWindow(w.row_range, (w.col_lo, w.col_hi - 1), entries)
    if axis == "row":
        if not (w.row_lo < idx < w.row_hi):
            raise NotLocalMax(f"row {idx} has no neighbours on both sides")
        if not any(w.get(idx - 1, v) < w.get(idx, v) > w.get(idx + 1, v) for v in w.cols()):
            raise NotLocalMax(f"no column has a strict local maximum in row {idx}")
        for v in w.cols():
            if w.get(idx, v) != w.get(idx - 1, v) + w.get(idx + 1, v):
                raise InconsistentCertificate(
                    f"entry ({idx},{v}) is not the sum of its vertical neighbours; "
                    f"the window is not a valid tiling")
        entries = {}
        for b in w.rows():
            for v in w.cols():
                if b == idx:
                    continue
                entries[(b if b < idx else b - 1, v)] = w.get(b, v)
        return TilingWindow((w.row_lo, w.row_hi - 1), w.col_range, entries)
    raise ValueError("axis must be 'row' or 'column'")


def _valid_right_step(db: int, dv: int) -> bool:
    return (db < 0 and dv == 0) or (db == 0 and dv > 0)


def _valid_left_step(db: int, dv: int) -> bool:
    return (db > 0 and dv == 0) or (db == 0 and dv < 0)


@dataclass(frozen=True)
class OnesCertificate:
    """Out-of-window knowledge about a tiling's unit entries.

    ``ones`` lists unit positions of the underlying tiling in zig-zag order
    (they may extend beyond any particular window).  For a bounded side the
    list is complete in that direction; an unbounded side continues past the
    listed end by repeating the periodic ``*_tail`` steps forever.
    ``row_frieze_ones`` and ``col_frieze_ones`` list the positions (a, d)
    with a + 2 <= d where the derived row/column frieze equals one, complete
    for the scope a consumer works in.
    """

    ones: tuple[tuple[int, int], ...]
    left_bounded: bool
    right_bounded: bool
    left_tail: tuple[tuple[int, int], ...] | None = None
    right_tail: tuple[tuple[int, int], ...] | None = None
    row_frieze_ones: tuple[tuple[int, int], ...] = ()
    col_frieze_ones: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "ones", tuple(tuple(p) for p in self.ones))
        if self.left_tail is not None:
            object.__setattr__(self, "left_tail", tuple(tuple(s) for s in self.left_tail))
        if self.right_tail is not None:
            object.__setattr__(self, "right_tail", tuple(tuple(s) for s in self.right_tail))
        object.__setattr__(self, "row_frieze_ones",
                           tuple(tuple(p) for p in self.row_frieze_ones))
        object.__setattr__(self, "col_frieze_ones",
                           tuple(tuple(p) for p in self.col_frieze_ones))

    def validate(self) -> None:
        if not self.ones and not (self.left_bounded and self.right_bounded):
            raise InconsistentCertificate("an unbounded side needs at least one listed point")
        try:
            _check_zigzag_steps(self.ones, "certificate")
        except ShapeViolation as exc:
            raise InconsistentCertificate(str(exc)) from exc
        if self.left_bounded and self.left_tail:
            raise InconsistentCertificate("bounded left side must not carry a tail")
        if self.right_bounded and self.right_tail:
            raise InconsistentCertificate("bounded right side must not carry a tail")
        for tail, ok, what in ((self.right_tail, _valid_right_step, "right"),
                               (self.left_tail, _valid_left_step, "left")):
            if tail is None:
                continue
            if not tail:
                raise InconsistentCertificate(f"{what} tail must not be empty")
            if not all(ok(db, dv) for db, dv in tail):
                raise InconsistentCertificate(f"{what} tail contains an invalid step")
            if len({db == 0 for db, dv in tail}) != 2:
                raise InconsistentCertificate(
                    f"{what} tail must shift between row and column steps")
        for a, d in self.row_frieze_ones:
            if a + 2 > d:
                raise InconsistentCertificate(f"row-frieze pair ({a},{d}) is too short")
        for u, x in self.col_frieze_ones:
            if u + 2 > x:
                raise InconsistentCertificate(f"column-frieze pair ({u},{x}) is too short")

    def iter_right(self) -> Iterator[tuple[int, int]]:
        """Listed points followed by the periodic right tail (possibly infinite)."""
        yield from self.ones
        if self.right_bounded or not self.ones:
            return
        if self.right_tail is None:
            return
        b, v = self.ones[-1]
        while True:
            for db, dv in self.right_tail:
                b, v = b + db, v + dv
                yield (b, v)

    def iter_left(self) -> Iterator[tuple[int, int]]:
        """Listed points in reverse followed by the periodic left tail."""
        yield from reversed(self.ones)
        if self.left_bounded or not self.ones:
            return
        if self.left_tail is None:
            return
        b, v = self.ones[0]
        while True:
            for db, dv in self.left_tail:
                b, v = b + db, v + dv
                yield (b, v)

    def ones_in_rect(self, rows: tuple[int, int], cols: tuple[int, int]) -> set[tuple[int, int]]:
        """Unit positions inside a rectangle, including tail-generated ones.

        Along the right tail the row only drops and the column only grows, so
        once a point leaves the rectangle on either side no later point can
        re-enter; the left tail is symmetric.
        """
        row_lo, row_hi = rows
        col_lo, col_hi = cols

        def inside(b: int, v: int) -> bool:
            return row_lo <= b <= row_hi and col_lo <= v <= col_hi

        found = {p for p in self.ones if inside(*p)}
        if not self.right_bounded and self.right_tail and self.ones:
            b, v = self.ones[-1]
            while not (b < row_lo or v > col_hi):
                for db, dv in self.right_tail:
                    b, v = b + db, v + dv
                    if inside(b, v):
                        found.add((b, v))
        if not self.left_bounded and self.left_tail and self.ones:
            b, v = self.ones[0]
            while not (b > row_hi or v < col_lo):
                for db, dv in self.left_tail:
                    b, v = b + db, v + dv
                    if inside(b, v):
                        found.add((b, v))
        return found

    def row_ones(self, b: int) -> list[int]:
        """All columns v with a unit entry at (b, v)."""
        cols: set[int] = set()
        for bb, vv in self.iter_right():
            if bb == b:
                cols.add(vv)
            if bb < b:
                break
        for bb, vv in self.iter_left():
            if bb == b:
                cols.add(vv)
            if bb > b:
                break
        return sorted(cols)

    def col_ones(self, v: int) -> list[int]:
        """All rows b with a unit entry at (b, v)."""
        rows: set[int] = set()
        for bb, vv in self.iter_right():
            if vv == v:
                rows.add(bb)
            if vv > v:
                break
        for bb, vv in self.iter_left():
            if vv == v:
                rows.add(bb)
            if vv < v:
                break
        return sorted(rows)

    def has_row_below(self, b: int) -> bool:
        """Is there a unit entry in some row strictly less than b?"""
        if any(bb < b for bb, _ in self.ones):
            return True
        return not self.right_bounded

    def has_row_above(self, b: int) -> bool:
        if any(bb > b for bb, _ in self.ones):
            return True
        return not self.left_bounded

    def has_col_above(self, v: int) -> bool:
        """Is there a unit entry in some column strictly greater than v?"""
        if any(vv > v for _, vv in self.ones):
            return True
        return not self.right_bounded

    def has_col_below(self, v: int) -> bool:
        if any(vv < v for _, vv in self.ones):
            return True
        return not self.left_bounded

    def check_window(self, w: TilingWindow) -> None:
        """Verify the certificate against a window's visible data."""
        self.validate()
        visible = {(b, v) for (b, v), val in w.entries.items() if val == 1}
        claimed = self.ones_in_rect(w.row_range, w.col_range)
        if visible != claimed:
            raise InconsistentCertificate(
                "certificate unit entries disagree with the window",
                missing=sorted(visible - claimed), extra=sorted(claimed - visible))
        if w.col_hi - w.col_lo >= 1:
            comp = {(a, d) for a in w.rows() for d in range(a + 2, w.row_hi + 1)
                    if w.p_value(a, d) == 1}
            claimed_p = {p for p in self.row_frieze_ones
                         if w.row_lo <= p[0] and p[1] <= w.row_hi}
            if comp != claimed_p:
                raise InconsistentCertificate(
                    "certificate row-frieze ones disagree with the window",
                    missing=sorted(comp - claimed_p), extra=sorted(claimed_p - comp))
        if w.row_hi - w.row_lo >= 1:
            comp = {(u, x) for u in w.cols() for x in range(u + 2, w.col_hi + 1)
                    if w.q_value(u, x) == 1}
            claimed_q = {p for p in self.col_frieze_ones
                         if w.col_lo <= p[0] and p[1] <= w.col_hi}
            if comp != claimed_q:
                raise InconsistentCertificate(
                    "certificate column-frieze ones disagree with the window",
                    missing=sorted(comp - claimed_q), extra=sorted(claimed_q - comp))
