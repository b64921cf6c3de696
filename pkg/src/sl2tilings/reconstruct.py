"""Inverse construction: build a triangulated fragment realising a window.

A window's unit pattern decides which disc the triangulation lives on and
how the missing arcs are added.  The classes below mirror the possible unit
patterns: a zig-zag unbounded on both sides needs only the unit arcs on a
two-gap disc; one-sided or bounded patterns route extra fans of arcs into
one or two auxiliary intervals; a window without units splits its fans at
the unique minimum and glues an ear-polygon bridging the two auxiliary
intervals.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from math import gcd

from .cc_counting import cc_value, counting_window
from .disc_model import (D2, D3_WITH_II, D3_WITH_IV, D4, Arc, DiscFragment,
                         DiscShape, Vertex, arc, validate_fragment)
from .errors import (AgreementFailure, InconsistentCertificate,
                     InsufficientMargin, InvalidWindow, NotCoprime,
                     NotFullyTriangulated, OutOfRange, VertexNotInFragment)
from .tiling import (OnesCertificate, TieReport, TilingWindow, unique_min,
                     validate_window)
from .unit_arcs import UnitArcSet, col_defect, longest_arcs, row_defect, unit_arc_set


class TilingClass(enum.Enum):
    """The mutually exclusive unit patterns a tiling can show."""

    BOTH_UNBOUNDED = "both-unbounded"
    RIGHT_UNBOUNDED = "right-unbounded"
    LEFT_UNBOUNDED = "left-unbounded"
    FINITE_RECTANGLE = "finite-rectangle"
    SINGLE_ROW = "single-row"
    SINGLE_COLUMN = "single-column"
    SINGLE_ONE = "single-one"
    NO_ONES = "no-ones"


def classify(cert: OnesCertificate) -> TilingClass:
    """The unique pattern class a certificate describes."""
    cert.validate()
    left_unbounded = not cert.left_bounded
    right_unbounded = not cert.right_bounded
    if left_unbounded and right_unbounded:
        return TilingClass.BOTH_UNBOUNDED
    if right_unbounded:
        return TilingClass.RIGHT_UNBOUNDED
    if left_unbounded:
        return TilingClass.LEFT_UNBOUNDED
    if not cert.ones:
        return TilingClass.NO_ONES
    if len(cert.ones) == 1:
        return TilingClass.SINGLE_ONE
    rows = {b for b, _ in cert.ones}
    cols = {v for _, v in cert.ones}
    if len(rows) == 1:
        return TilingClass.SINGLE_ROW
    if len(cols) == 1:
        return TilingClass.SINGLE_COLUMN
    return TilingClass.FINITE_RECTANGLE


# ---------------------------------------------------------------------------
# nonnegative SL2 matrices and their row/column addition words


class Move(enum.Enum):
    ADD_ROW1_TO_ROW2 = "r1+r2"
    ADD_ROW2_TO_ROW1 = "r2+r1"
    ADD_COL1_TO_COL2 = "c1+c2"
    ADD_COL2_TO_COL1 = "c2+c1"


@dataclass(frozen=True)
class NonnegSL2Matrix:
    i: int
    j: int
    k: int
    l: int

    def __post_init__(self):
        if min(self.i, self.j, self.k, self.l) < 0:
            raise ValueError("entries must be nonnegative")
        if self.i * self.l - self.j * self.k != 1:
            raise ValueError("determinant must be 1")

    @staticmethod
    def identity() -> "NonnegSL2Matrix":
        return NonnegSL2Matrix(1, 0, 0, 1)

    def apply(self, move: Move) -> "NonnegSL2Matrix":
        i, j, k, l = self.i, self.j, self.k, self.l
        if move is Move.ADD_ROW1_TO_ROW2:
            return NonnegSL2Matrix(i, j, k + i, l + j)
        if move is Move.ADD_ROW2_TO_ROW1:
            return NonnegSL2Matrix(i + k, j + l, k, l)
        if move is Move.ADD_COL1_TO_COL2:
            return NonnegSL2Matrix(i, j + i, k, l + k)
        return NonnegSL2Matrix(i + j, j, k + l, l)

    @property
    def is_identity(self) -> bool:
        return (self.i, self.j, self.k, self.l) == (1, 0, 0, 1)


def replay(word: tuple[Move, ...]) -> NonnegSL2Matrix:
    x = NonnegSL2Matrix.identity()
    for mv in word:
        x = x.apply(mv)
    return x


def matrix_word(x: NonnegSL2Matrix) -> tuple[Move, ...]:
    """A row/column addition word producing x from the identity.

    Greedy reverse Euclidean: repeatedly subtract the smaller row (column)
    from the larger until the identity remains, preferring row moves, then
    reverse the subtractions.
    """
    i, j, k, l = x.i, x.j, x.k, x.l
    undone: list[Move] = []
    while (i, j, k, l) != (1, 0, 0, 1):
        if i >= k and j >= l and (i - k, j - l) != (0, 0) and min(i - k, j - l) >= 0:
            i, j = i - k, j - l
            undone.append(Move.ADD_ROW2_TO_ROW1)
        elif k >= i and l >= j:
            k, l = k - i, l - j
            undone.append(Move.ADD_ROW1_TO_ROW2)
        elif i >= j and k >= l:
            i, k = i - j, k - l
            undone.append(Move.ADD_COL2_TO_COL1)
        elif j >= i and l >= k:
            j, l = j - i, l - k
            undone.append(Move.ADD_COL1_TO_COL2)
        else:  # unreachable for genuine members of the monoid
            raise ValueError(f"matrix ({i},{j};{k},{l}) admits no undo step")
        if min(i, j, k, l) < 0 or i * l - j * k != 1:
            raise ValueError("undo step left the monoid; input was invalid")
    return tuple(reversed(undone))


def matrix_with_sums(r: int, total: int) -> NonnegSL2Matrix:
    """A nonnegative SL2 matrix with first-row sum r and total entry sum.

    Built from the normalised Bezout pair of r and total - r.
    """
    if not (0 < r < total):
        raise OutOfRange(f"need 0 < r < total, got r={r}, total={total}")
    if gcd(r, total) != 1:
        raise NotCoprime(f"{r} and {total} are not coprime")
    n = total - r
    # s*r - p*n == 1 with 0 <= p < r
    if r == 1:
        s, p = 1, 0
    else:
        p = (-pow(n, -1, r)) % r
        s = (1 + p * n) // r
    return NonnegSL2Matrix(r - p, p, n - s, s)


# ---------------------------------------------------------------------------
# ear-glued polygons


@dataclass(frozen=True)
class EarPolygon:
    """Triangulated polygon across intervals II and IV with four marked
    vertices chi, beta = chi+, gamma, phi = gamma+."""

    fragment: DiscFragment
    chi: Vertex
    beta: Vertex
    gamma: Vertex
    phi: Vertex


def _replay_ears(word: tuple[Move, ...]):
    """Grow the marked polygon one ear per move.

    Each move inserts a fresh vertex between the currently adjacent marked
    pair it acts on and turns that pair into a chord.  Returns the final
    cyclic slot list, the chords, and the marked slots.
    """
    chi0, base0 = 0, 1
    cyc = [chi0, base0]
    chi, beta, gamma, phi = chi0, base0, base0, chi0
    chords: set[frozenset[int]] = set()
    fresh = 2
    for mv in word:
        n = fresh
        fresh += 1
        if mv in (Move.ADD_ROW1_TO_ROW2, Move.ADD_ROW2_TO_ROW1):
            pos = cyc.index(chi)
            assert cyc[(pos + 1) % len(cyc)] == beta
            cyc.insert(pos + 1, n)
            chords.add(frozenset((chi, beta)))
            if mv is Move.ADD_ROW1_TO_ROW2:
                beta = n
            else:
                chi = n
        else:
            pos = cyc.index(gamma)
            assert cyc[(pos + 1) % len(cyc)] == phi
            cyc.insert(pos + 1, n)
            chords.add(frozenset((gamma, phi)))
            if mv is Move.ADD_COL1_TO_COL2:
                phi = n
            else:
                gamma = n
    return cyc, chords, (chi, beta, gamma, phi)


def _ear_layout(word: tuple[Move, ...], beta_index: int = 0, chi_index: int = 0):
    """Map the abstract ear polygon onto intervals II and IV.

    The II side runs from beta upwards to gamma, the IV side from phi
    upwards to chi; beta and chi receive the given anchor indices.
    Returns (vertex_of_slot, chords as arcs, markers, ii_range, iv_range).
    """
    cyc, chords, (chi, beta, gamma, phi) = _replay_ears(word)
    start = cyc.index(beta)
    rot = cyc[start:] + cyc[:start]
    g = rot.index(gamma)
    ii_slots = rot[:g + 1]
    iv_slots = rot[g + 1:]
    assert iv_slots[0] == phi and iv_slots[-1] == chi
    vmap: dict[int, Vertex] = {}
    for off, slot in enumerate(ii_slots):
        vmap[slot] = Vertex("II", beta_index + off)
    for off, slot in enumerate(iv_slots):
        vmap[slot] = Vertex("IV", chi_index - (len(iv_slots) - 1) + off)
    adjacent = set()
    m = len(cyc)
    for i in range(m):
        adjacent.add(frozenset((cyc[i], cyc[(i + 1) % m])))
    diag_arcs = frozenset(arc(vmap[u], vmap[v])
                          for u, v in map(tuple, chords)
                          if frozenset((u, v)) not in adjacent)
    markers = (vmap[chi], vmap[beta], vmap[gamma], vmap[phi])
    ii_range = (beta_index, beta_index + len(ii_slots) - 1)
    iv_range = (chi_index - (len(iv_slots) - 1), chi_index)
    return vmap, diag_arcs, markers, ii_range, iv_range


def ear_polygon(r: int, total: int) -> EarPolygon:
    """A marked triangulated polygon whose counting realises (r, total).

    Counting from chi gives r = S(chi,gamma) + S(chi,phi) and
    total = S(chi,gamma) + S(chi,phi) + S(beta,gamma) + S(beta,phi).
    """
    word = matrix_word(matrix_with_sums(r, total))
    vmap, diags, (chi, beta, gamma, phi), ii_range, iv_range = _ear_layout(word)
    boundary = tuple(Vertex("II", i) for i in range(ii_range[0], ii_range[1] + 1)) + \
        tuple(Vertex("IV", i) for i in range(iv_range[0], iv_range[1] + 1))
    closures = {arc(chi, beta)}
    if gamma != beta or phi != chi:
        closures.add(arc(gamma, phi))
    frag = DiscFragment(D4, boundary, diags, frozenset(closures))
    return EarPolygon(frag, chi, beta, gamma, phi)


# ---------------------------------------------------------------------------
# division-with-remainder landmarks for windows without unit entries


@dataclass(frozen=True)
class DivisionParams:
    """Landmarks and division data around the unique minimum of a no-ones
    window: rows row_before < row_at < row_after on interval I, columns
    col_at < col_after on interval III, quotients and remainders of dividing
    t(row_before, col_at) and t(row_at, col_after) by the minimum."""

    row_before: int
    row_at: int
    row_after: int
    col_at: int
    col_after: int
    row_quotient: int
    col_quotient: int
    row_remainder: int
    col_remainder: int


def division_parameters(w: TilingWindow, cert: OnesCertificate | None = None) -> DivisionParams:
    um = unique_min(w)
    if isinstance(um, TieReport):
        raise InconsistentCertificate(
            f"window minimum {um.value} is attained at {len(um.positions)} cells")
    (b, v), tmin = um
    arcs = unit_arc_set(w, cert)
    down, _ = longest_arcs(arcs, Vertex("I", b), "clockwise")
    up, _ = longest_arcs(arcs, Vertex("I", b), "anticlockwise")
    col_up, _ = longest_arcs(arcs, Vertex("III", v), "anticlockwise")
    a, c, wcol = down.index, up.index, col_up.index
    if a < w.row_lo or c > w.row_hi or wcol > w.col_hi:
        raise InsufficientMargin(
            "a landmark of the minimum lies outside the window",
            row_before=a, row_after=c, col_after=wcol)
    ell, r = divmod(w.get(a, v), tmin)
    m, s = divmod(w.get(b, wcol), tmin)
    defp = row_defect(w, arcs, b)
    defq = col_defect(w, arcs, v)
    if not (0 < ell < defp and 0 < m < defq):
        raise InconsistentCertificate(
            f"division quotients out of range: ell={ell} (defect {defp}), "
            f"m={m} (defect {defq})")
    if (r * s) % tmin != 1:
        raise InconsistentCertificate(
            f"remainders {r}, {s} are not inverse modulo the minimum {tmin}")
    return DivisionParams(a, b, c, v, wcol, ell, m, r, s)


# ---------------------------------------------------------------------------
# fragment assembly


def _hop_up(arcs: UnitArcSet, tag: str, i: int) -> int:
    ups = [d for d in arcs.internal_partners(Vertex(tag, i)) if d > i]
    return max(ups) if ups else i + 1


def _hop_down(arcs: UnitArcSet, tag: str, i: int) -> int:
    downs = [d for d in arcs.internal_partners(Vertex(tag, i)) if d < i]
    return min(downs) if downs else i - 1


@dataclass
class _Chain:
    closure: Arc
    end_index: int       # index of the closure vertex on its own interval
    cursor_end: int      # extreme index reached on the target interval
    arcs: list[Arc]


def _run_chain(main_tag: str, start: int, first_size: int | None,
               defect_of, hop, past_limit, target_tag: str, anchor: int,
               step: int) -> _Chain:
    """Walk outward from a non-saturated vertex adding fans of arcs.

    Each chain vertex receives a block of consecutive target-interval
    vertices, sharing its first vertex with the previous block's last.  The
    first vertex past the limit contributes only the shared closing arc.
    """
    out: list[Arc] = []
    cursor = anchor
    i = start
    size = first_size
    while not past_limit(i):
        if size is None:
            size = defect_of(i)
        if size < 1:
            raise InconsistentCertificate(
                f"vertex {i}^{main_tag} would receive an empty block; "
                f"unit-arc data is inconsistent")
        block = [cursor + step * t for t in range(size)]
        out.extend(arc(Vertex(main_tag, i), Vertex(target_tag, ix)) for ix in block)
        cursor = block[-1]
        i = hop(i)
        size = None
    closure = arc(Vertex(main_tag, i), Vertex(target_tag, cursor))
    out.append(closure)
    return _Chain(closure, i, cursor, out)


def _internal_arcs_in(pairs, tag: str, lo: int, hi: int) -> set[Arc]:
    return {arc(Vertex(tag, a), Vertex(tag, d))
            for a, d in pairs if lo <= a and d <= hi}


def _known_row_pairs(w: TilingWindow, cert: OnesCertificate | None) -> set[tuple[int, int]]:
    if cert is not None:
        return set(map(tuple, cert.row_frieze_ones))
    if w.col_hi - w.col_lo < 1:
        return set()
    return {(a, d) for a in w.rows() for d in range(a + 2, w.row_hi + 1)
            if w.p_value(a, d) == 1}


def _known_col_pairs(w: TilingWindow, cert: OnesCertificate | None) -> set[tuple[int, int]]:
    if cert is not None:
        return set(map(tuple, cert.col_frieze_ones))
    if w.row_hi - w.row_lo < 1:
        return set()
    return {(u, x) for u in w.cols() for x in range(u + 2, w.col_hi + 1)
            if w.q_value(u, x) == 1}


def _assemble(shape: DiscShape, ranges: dict[str, tuple[int, int]],
              diagonals: set[Arc], closures: set[Arc]) -> DiscFragment:
    boundary: list[Vertex] = []
    for tag in shape.intervals:
        if tag not in ranges:
            continue
        lo, hi = ranges[tag]
        boundary.extend(Vertex(tag, i) for i in range(lo, hi + 1))
    bset = set(boundary)
    m = len(boundary)
    side_pairs = {frozenset((boundary[i], boundary[(i + 1) % m])) for i in range(m)}
    diags = {a for a in diagonals
             if a.a in bset and a.b in bset and frozenset(a.endpoints) not in side_pairs}
    return DiscFragment(shape, tuple(boundary), frozenset(diags), frozenset(closures))


def _finish(frag: DiscFragment, w: TilingWindow) -> DiscFragment:
    rep = validate_fragment(frag)
    if not rep.ok:
        raise InconsistentCertificate(
            "constructed fragment is not a valid triangulation; the unit-arc "
            "data must be incomplete or wrong", violations=rep.violations)
    agree = verify_agreement(frag, w)
    if not agree.ok:
        raise AgreementFailure(
            "constructed fragment does not reproduce the window",
            mismatches=agree.mismatches[:5], structural=agree.structural)
    return frag


def _find_right_closure(cert: OnesCertificate, w: TilingWindow) -> tuple[int, int]:
    for b, v in cert.iter_right():
        if b <= w.row_lo and v >= w.col_hi:
            return b, v
        if cert.right_bounded and (b, v) == cert.ones[-1]:
            break
    raise InsufficientMargin(
        "no unit entry at or beyond the window's north-east corner is available "
        "to close the fragment")


def _find_left_closure(cert: OnesCertificate, w: TilingWindow) -> tuple[int, int]:
    for b, v in cert.iter_left():
        if b >= w.row_hi and v <= w.col_lo:
            return b, v
        if cert.left_bounded and (b, v) == cert.ones[0]:
            break
    raise InsufficientMargin(
        "no unit entry at or beyond the window's south-west corner is available "
        "to close the fragment")


def _construct_both_unbounded(w: TilingWindow, cert: OnesCertificate) -> DiscFragment:
    b_ne, v_ne = _find_right_closure(cert, w)
    b_sw, v_sw = _find_left_closure(cert, w)
    rows = (min(b_ne, w.row_lo), max(b_sw, w.row_hi))
    cols = (min(v_sw, w.col_lo), max(v_ne, w.col_hi))
    ones = cert.ones_in_rect(rows, cols)
    diagonals = {arc(Vertex("I", b), Vertex("III", v)) for b, v in ones}
    diagonals |= _internal_arcs_in(_known_row_pairs(w, cert), "I", rows[0], rows[1])
    diagonals |= _internal_arcs_in(_known_col_pairs(w, cert), "III", cols[0], cols[1])
    closures = {arc(Vertex("I", b_ne), Vertex("III", v_ne)),
                arc(Vertex("I", b_sw), Vertex("III", v_sw))}
    frag = _assemble(D2, {"I": rows, "III": cols}, diagonals, closures)
    return _finish(frag, w)


def _defect_fns(w: TilingWindow, arcs: UnitArcSet):
    def defp(b: int) -> int:
        return row_defect(w, arcs, b)

    def defq(v: int) -> int:
        return col_defect(w, arcs, v)

    return defp, defq


def _construct_right_unbounded(w: TilingWindow, cert: OnesCertificate) -> DiscFragment:
    arcs = unit_arc_set(w, cert)
    defp, defq = _defect_fns(w, arcs)
    b0, v0 = cert.ones[0]
    if not (w.row_lo < b0 < w.row_hi and w.col_lo < v0 < w.col_hi):
        raise InsufficientMargin(
            f"the south-west unit entry ({b0},{v0}) needs margin inside the window")
    chain_i = _run_chain("I", b0, None, defp,
                         lambda i: _hop_up(arcs, "I", i),
                         lambda i: i >= w.row_hi, "II", 0, -1)
    chain_iii = _run_chain("III", v0, None, defq,
                           lambda i: _hop_down(arcs, "III", i),
                           lambda i: i <= w.col_lo, "II", 0, +1)
    b_ne, v_ne = _find_right_closure(cert, w)
    rows = (b_ne, chain_i.end_index)
    cols = (chain_iii.end_index, v_ne)
    ones = cert.ones_in_rect(rows, cols)
    diagonals = {arc(Vertex("I", b), Vertex("III", v)) for b, v in ones}
    diagonals |= _internal_arcs_in(_known_row_pairs(w, cert), "I", *rows)
    diagonals |= _internal_arcs_in(_known_col_pairs(w, cert), "III", *cols)
    diagonals.update(chain_i.arcs)
    diagonals.update(chain_iii.arcs)
    closures = {chain_i.closure, chain_iii.closure,
                arc(Vertex("I", b_ne), Vertex("III", v_ne))}
    ranges = {"I": rows, "III": cols,
              "II": (chain_i.cursor_end, chain_iii.cursor_end)}
    frag = _assemble(D3_WITH_II, ranges, diagonals, closures)
    return _finish(frag, w)


def _construct_four_chains(w: TilingWindow, cert: OnesCertificate,
                           split_row: tuple[int, int] | None,
                           split_col: tuple[int, int] | None,
                           extra_diagonals: set[Arc] | None = None,
                           ii_anchors: tuple[int, int] = (0, 0),
                           iv_anchors: tuple[int, int] = (0, 0)) -> DiscFragment:
    """Shared assembly for all bounded unit patterns on the four-gap disc.

    ``split_row`` is (row, arcs-to-IV) when the top chain's start vertex
    splits its block between the two auxiliary intervals; ``split_col``
    likewise for the column side.  Anchors position the first blocks on
    intervals II and IV (row side, column side).
    """
    arcs = unit_arc_set(w, cert)
    defp, defq = _defect_fns(w, arcs)
    if cert.ones:
        b_sw, v_sw = cert.ones[0]
        b_ne, v_ne = cert.ones[-1]
    else:
        assert split_row is not None and split_col is not None
        b_sw = b_ne = split_row[0]
        v_sw = v_ne = split_col[0]
    for b in (b_sw, b_ne):
        if not (w.row_lo < b < w.row_hi):
            raise InsufficientMargin(f"row {b} needs margin inside the window")
    for v in (v_sw, v_ne):
        if not (w.col_lo < v < w.col_hi):
            raise InsufficientMargin(f"column {v} needs margin inside the window")
    ii_row_anchor, ii_col_anchor = ii_anchors
    iv_row_anchor, iv_col_anchor = iv_anchors

    if split_row is not None:
        row0, to_iv = split_row
        assert row0 == b_sw == b_ne
        total = defp(row0)
        if not (0 < to_iv < total):
            raise InconsistentCertificate(
                f"row split {to_iv} of {total} at row {row0} is out of range")
        up = _run_chain("I", row0, total - to_iv, defp,
                        lambda i: _hop_up(arcs, "I", i),
                        lambda i: i >= w.row_hi, "II", ii_row_anchor, -1)
        down = _run_chain("I", row0, to_iv, defp,
                          lambda i: _hop_down(arcs, "I", i),
                          lambda i: i <= w.row_lo, "IV", iv_row_anchor, +1)
    else:
        up = _run_chain("I", b_sw, None, defp,
                        lambda i: _hop_up(arcs, "I", i),
                        lambda i: i >= w.row_hi, "II", ii_row_anchor, -1)
        down = _run_chain("I", b_ne, None, defp,
                          lambda i: _hop_down(arcs, "I", i),
                          lambda i: i <= w.row_lo, "IV", iv_row_anchor, +1)
    if split_col is not None:
        col0, to_iv = split_col
        assert col0 == v_sw == v_ne
        total = defq(col0)
        if not (0 < to_iv < total):
            raise InconsistentCertificate(
                f"column split {to_iv} of {total} at column {col0} is out of range")
        col_up = _run_chain("III", col0, to_iv, defq,
                            lambda i: _hop_up(arcs, "III", i),
                            lambda i: i >= w.col_hi, "IV", iv_col_anchor, -1)
        col_down = _run_chain("III", col0, total - to_iv, defq,
                              lambda i: _hop_down(arcs, "III", i),
                              lambda i: i <= w.col_lo, "II", ii_col_anchor, +1)
    else:
        col_up = _run_chain("III", v_ne, None, defq,
                            lambda i: _hop_up(arcs, "III", i),
                            lambda i: i >= w.col_hi, "IV", iv_col_anchor, -1)
        col_down = _run_chain("III", v_sw, None, defq,
                              lambda i: _hop_down(arcs, "III", i),
                              lambda i: i <= w.col_lo, "II", ii_col_anchor, +1)
    rows = (down.end_index, up.end_index)
    cols = (col_down.end_index, col_up.end_index)
    ones = cert.ones_in_rect(rows, cols)
    diagonals = {arc(Vertex("I", b), Vertex("III", v)) for b, v in ones}
    diagonals |= _internal_arcs_in(_known_row_pairs(w, cert), "I", *rows)
    diagonals |= _internal_arcs_in(_known_col_pairs(w, cert), "III", *cols)
    for chain in (up, down, col_up, col_down):
        diagonals.update(chain.arcs)
    if extra_diagonals:
        diagonals.update(extra_diagonals)
    closures = {up.closure, down.closure, col_up.closure, col_down.closure}
    ranges = {"I": rows, "III": cols,
              "II": (up.cursor_end, col_down.cursor_end),
              "IV": (col_up.cursor_end, down.cursor_end)}
    frag = _assemble(D4, ranges, diagonals, closures)
    return _finish(frag, w)


def _construct_rectangle(w: TilingWindow, cert: OnesCertificate) -> DiscFragment:
    return _construct_four_chains(w, cert, None, None)


def _construct_single_row(w: TilingWindow, cert: OnesCertificate) -> DiscFragment:
    arcs = unit_arc_set(w, cert)
    b0 = cert.ones[0][0]
    vj = cert.ones[-1][1]
    down, _ = longest_arcs(arcs, Vertex("I", b0), "clockwise")
    if down.index < w.row_lo:
        raise InsufficientMargin(f"landmark row {down.index} lies outside the window")
    to_iv = w.get(down.index, vj) - 1
    return _construct_four_chains(w, cert, (b0, to_iv), None)


def _construct_single_one(w: TilingWindow, cert: OnesCertificate) -> DiscFragment:
    arcs = unit_arc_set(w, cert)
    b0, v1 = cert.ones[0]
    down, _ = longest_arcs(arcs, Vertex("I", b0), "clockwise")
    col_up, _ = longest_arcs(arcs, Vertex("III", v1), "anticlockwise")
    if down.index < w.row_lo or col_up.index > w.col_hi:
        raise InsufficientMargin("a landmark of the unit entry lies outside the window")
    row_to_iv = w.get(down.index, v1) - 1
    col_to_iv = w.get(b0, col_up.index) - 1
    return _construct_four_chains(w, cert, (b0, row_to_iv), (v1, col_to_iv))


def _construct_no_ones(w: TilingWindow, cert: OnesCertificate) -> DiscFragment:
    dwr = division_parameters(w, cert)
    tmin = w.get(dwr.row_at, dwr.col_at)
    word = matrix_word(matrix_with_sums(dwr.row_remainder, tmin))
    _, ear_diags, (chi, beta, gamma, phi), ii_range, iv_range = _ear_layout(word)
    bridge = {arc(chi, beta)}
    if gamma != beta or phi != chi:
        bridge.add(arc(gamma, phi))
    extra = set(ear_diags) | bridge
    return _construct_four_chains(
        w, cert,
        (dwr.row_at, dwr.row_quotient),
        (dwr.col_at, dwr.col_quotient),
        extra_diagonals=extra,
        ii_anchors=(beta.index, gamma.index),
        iv_anchors=(chi.index, phi.index))


# ---------------------------------------------------------------------------
# transposition (mirror symmetry between the two one-sided / collinear cases)

_TAG_SWAP = {"I": "III", "II": "IV", "III": "I", "IV": "II"}
_SHAPE_SWAP = {D2: D2, D3_WITH_II: D3_WITH_IV, D3_WITH_IV: D3_WITH_II, D4: D4}


def transpose_window(w: TilingWindow) -> TilingWindow:
    entries = {(v, b): val for (b, v), val in w.entries.items()}
    return TilingWindow(w.col_range, w.row_range, entries)


def transpose_cert(cert: OnesCertificate) -> OnesCertificate:
    ones = tuple((v, b) for b, v in reversed(cert.ones))
    right_tail = None
    if cert.left_tail is not None:
        right_tail = tuple((dv, db) for db, dv in cert.left_tail)
    left_tail = None
    if cert.right_tail is not None:
        left_tail = tuple((dv, db) for db, dv in cert.right_tail)
    return OnesCertificate(
        ones=ones,
        left_bounded=cert.right_bounded,
        right_bounded=cert.left_bounded,
        left_tail=left_tail,
        right_tail=right_tail,
        row_frieze_ones=cert.col_frieze_ones,
        col_frieze_ones=cert.row_frieze_ones)


def transpose_fragment(frag: DiscFragment) -> DiscFragment:
    """Swap the roles of intervals I/III and II/IV.

    The swap is a rotation of the interval cycle, so cyclic order and
    crossing are preserved and counting values carry over unchanged.
    """
    def tv(v: Vertex) -> Vertex:
        return Vertex(_TAG_SWAP[v.interval], v.index)

    shape = _SHAPE_SWAP[frag.shape]
    boundary = tuple(tv(v) for v in frag.boundary)
    lo = min(range(len(boundary)), key=lambda i: shape.key(boundary[i]))
    boundary = boundary[lo:] + boundary[:lo]
    diagonals = frozenset(arc(tv(a.a), tv(a.b)) for a in frag.diagonals)
    closures = frozenset(arc(tv(a.a), tv(a.b)) for a in frag.closures)
    return DiscFragment(shape, boundary, diagonals, closures)


# ---------------------------------------------------------------------------
# agreement verification and the public entry point


@dataclass(frozen=True)
class AgreementReport:
    structural: tuple[str, ...] = ()
    quiddity_rows_ok: bool | None = None
    quiddity_cols_ok: bool | None = None
    corner_ok: bool | None = None
    mismatches: tuple[tuple[int, int, int, int], ...] = ()

    @property
    def ok(self) -> bool:
        return (not self.structural and not self.mismatches
                and self.quiddity_rows_ok is not False
                and self.quiddity_cols_ok is not False
                and self.corner_ok is not False)


def verify_agreement(frag: DiscFragment, w: TilingWindow) -> AgreementReport:
    """Compare a fragment's counting against a window.

    Reports the quiddity conditions along both intervals, a three-corner
    spot check, and the full entry-wise comparison.
    """
    try:
        t2, p2, q2 = counting_window(frag, w.row_range, w.col_range)
    except (NotFullyTriangulated, VertexNotInFragment) as exc:
        return AgreementReport(structural=(str(exc),))
    mismatches = tuple(
        (b, v, w.get(b, v), t2.get(b, v))
        for b in w.rows() for v in w.cols()
        if w.get(b, v) != t2.get(b, v))
    rows_ok = None
    if w.row_hi - w.row_lo >= 2 and w.col_hi - w.col_lo >= 1:
        rows_ok = all(w.p_value(b - 1, b + 1) == p2.get(b - 1, b + 1)
                      for b in range(w.row_lo + 1, w.row_hi))
    cols_ok = None
    if w.col_hi - w.col_lo >= 2 and w.row_hi - w.row_lo >= 1:
        cols_ok = all(w.q_value(v - 1, v + 1) == q2.get(v - 1, v + 1)
                      for v in range(w.col_lo + 1, w.col_hi))
    corner_ok = None
    if w.row_lo < w.row_hi and w.col_lo < w.col_hi:
        e, f, g, h = w.row_lo, w.row_hi, w.col_lo, w.col_hi
        corner_ok = (w.get(e, h) == t2.get(e, h)
                     and w.get(f, g) == t2.get(f, g)
                     and w.get(f, h) == t2.get(f, h))
    return AgreementReport((), rows_ok, cols_ok, corner_ok, mismatches)


def invert_window(w: TilingWindow, cert: OnesCertificate) -> tuple[TilingClass, DiscFragment]:
    """Build a triangulated fragment whose counting reproduces the window.

    The fragment covers the whole window; agreement is verified internally
    and a failure raises instead of returning a wrong fragment.
    """
    rep = validate_window(w)
    if not rep.ok:
        raise InvalidWindow("window is not a valid tiling window",
                            violations=rep.violations)
    cert.check_window(w)
    cls = classify(cert)
    if cls is TilingClass.BOTH_UNBOUNDED:
        return cls, _construct_both_unbounded(w, cert)
    if cls is TilingClass.RIGHT_UNBOUNDED:
        return cls, _construct_right_unbounded(w, cert)
    if cls is TilingClass.LEFT_UNBOUNDED:
        frag = _construct_right_unbounded(transpose_window(w), transpose_cert(cert))
        return cls, transpose_fragment(frag)
    if cls is TilingClass.FINITE_RECTANGLE:
        return cls, _construct_rectangle(w, cert)
    if cls is TilingClass.SINGLE_ROW:
        return cls, _construct_single_row(w, cert)
    if cls is TilingClass.SINGLE_COLUMN:
        frag = _construct_single_row(transpose_window(w), transpose_cert(cert))
        return cls, transpose_fragment(frag)
    if cls is TilingClass.SINGLE_ONE:
        return cls, _construct_single_one(w, cert)
    return cls, _construct_no_ones(w, cert)
