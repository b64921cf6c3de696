"""Shared fixtures, generators, and independent oracles for the test suite.

The reference fixtures are a pair of hand-checked triangulated fragments
(one on the two-gap disc, one on the four-gap disc) together with the 7x7
windows and counting labels they produce.  Fragment and window mutually
verify each other, so any transcription slip fails loudly.
"""
from __future__ import annotations

import random
from math import gcd

from sl2tilings import (D2, D4, Arc, DiscFragment, OnesCertificate,
                        TilingWindow, Vertex, arc, counting_window)

# ---------------------------------------------------------------------------
# tiny builders


def vi(i: int) -> Vertex:
    return Vertex("I", i)


def vii(i: int) -> Vertex:
    return Vertex("II", i)


def viii(i: int) -> Vertex:
    return Vertex("III", i)


def viv(i: int) -> Vertex:
    return Vertex("IV", i)


_MK = {"I": vi, "II": vii, "III": viii, "IV": viv}


def mkarc(spec_a, spec_b) -> Arc:
    (ia, ta), (ib, tb) = spec_a, spec_b
    return arc(_MK[ta](ia), _MK[tb](ib))


# ---------------------------------------------------------------------------
# reference fragment on the two-gap disc (14 vertices, 13 arcs)

_D2_ARCS = [
    ((-1, "I"), (3, "III")),
    ((-3, "I"), (3, "III")),
    ((-3, "I"), (-1, "I")),
    ((-1, "I"), (2, "III")),
    ((-1, "I"), (1, "III")),
    ((-1, "I"), (2, "I")),
    ((-1, "I"), (1, "I")),
    ((-2, "III"), (1, "III")),
    ((-2, "III"), (0, "III")),
    ((2, "I"), (1, "III")),
    ((3, "I"), (1, "III")),
    ((3, "I"), (-2, "III")),
    ((3, "I"), (-3, "III")),
]


def d2_reference_arcs() -> set[Arc]:
    return {mkarc(a, b) for a, b in _D2_ARCS}


def d2_reference_fragment() -> DiscFragment:
    closures = {mkarc(((-3, "I")), ((3, "III"))), mkarc(((3, "I")), ((-3, "III")))}
    diagonals = d2_reference_arcs() - closures
    boundary = tuple(vi(i) for i in range(-3, 4)) + tuple(viii(i) for i in range(-3, 4))
    return DiscFragment(D2, boundary, frozenset(diagonals), frozenset(closures))


# counting labels from -3^I on the reference fragment
D2_LABELS_I = {-3: 0, -2: 1, -1: 1, 0: 6, 1: 5, 2: 4, 3: 7}
D2_LABELS_III = {-3: 17, -2: 10, -1: 23, 0: 13, 1: 3, 2: 2, 3: 1}

# the 7x7 window the reference fragment generates (rows -3..3, cols -3..3)
LEFT_GRID_ROWS = [
    [17, 10, 23, 13, 3, 2, 1],
    [22, 13, 30, 17, 4, 3, 2],
    [5, 3, 7, 4, 1, 1, 1],
    [13, 8, 19, 11, 3, 4, 5],
    [8, 5, 12, 7, 2, 3, 4],
    [3, 2, 5, 3, 1, 2, 3],
    [1, 1, 3, 2, 1, 3, 5],
]


def left_grid() -> TilingWindow:
    return TilingWindow.from_rows(-3, -3, LEFT_GRID_ROWS)


def left_grid_certificate() -> OnesCertificate:
    return OnesCertificate(
        ones=((3, -3), (3, -2), (3, 1), (2, 1), (-1, 1), (-1, 2), (-1, 3), (-3, 3)),
        left_bounded=False,
        right_bounded=False,
        left_tail=((1, 0), (0, -1)),
        right_tail=((-1, 0), (0, 1)),
        row_frieze_ones=((-3, -1), (-1, 1), (-1, 2)),
        col_frieze_ones=((-2, 0), (-2, 1)))


# row frieze of the left grid (the triangular table read along interval I)
P_FRIEZE_ROWS = {
    -3: [0, 1, 1, 6, 5, 4, 7],
    -2: [0, 1, 7, 6, 5, 9],
    -1: [0, 1, 1, 1, 2],
    0: [0, 1, 2, 5],
    1: [0, 1, 3],
    2: [0, 1],
    3: [0],
}


# ---------------------------------------------------------------------------
# reference fragment on the four-gap disc (21 vertices, 22 arcs)

_D4_ARCS = [
    ((-3, "I"), (1, "IV")),
    ((-3, "I"), (0, "IV")),
    ((-2, "I"), (0, "IV")),
    ((-2, "I"), (0, "I")),
    ((0, "I"), (0, "IV")),
    ((0, "I"), (0, "II")),
    ((1, "I"), (0, "II")),
    ((1, "I"), (-1, "II")),
    ((2, "I"), (-1, "II")),
    ((2, "I"), (-2, "II")),
    ((3, "I"), (-2, "II")),
    ((0, "IV"), (0, "II")),
    ((0, "II"), (0, "III")),
    ((0, "IV"), (0, "III")),
    ((1, "II"), (0, "III")),
    ((1, "II"), (-1, "III")),
    ((1, "II"), (-2, "III")),
    ((1, "II"), (-3, "III")),
    ((0, "III"), (2, "III")),
    ((2, "III"), (0, "IV")),
    ((2, "III"), (-1, "IV")),
    ((3, "III"), (-1, "IV")),
]

_D4_CLOSURES = [
    ((-3, "I"), (1, "IV")),
    ((3, "I"), (-2, "II")),
    ((1, "II"), (-3, "III")),
    ((3, "III"), (-1, "IV")),
]


def d4_reference_fragment() -> DiscFragment:
    closures = {mkarc(a, b) for a, b in _D4_CLOSURES}
    diagonals = {mkarc(a, b) for a, b in _D4_ARCS} - closures
    boundary = (tuple(vi(i) for i in range(-3, 4))
                + tuple(vii(i) for i in range(-2, 2))
                + tuple(viii(i) for i in range(-3, 4))
                + tuple(viv(i) for i in range(-1, 2)))
    return DiscFragment(D4, boundary, frozenset(diagonals), frozenset(closures))


# counting labels from -3^I on the four-gap reference fragment
D4_LABELS = {
    "I": {-3: 0, -2: 1, -1: 3, 0: 2, 1: 5, 2: 13, 3: 34},
    "II": {-2: 21, -1: 8, 0: 3, 1: 7},
    "III": {-3: 25, -2: 18, -1: 11, 0: 4, 1: 9, 2: 5, 3: 11},
    "IV": {-1: 6, 0: 1, 1: 1},
}

# the 7x7 window the four-gap fragment generates; it has no unit entries
RIGHT_GRID_ROWS = [
    [25, 18, 11, 4, 9, 5, 11],
    [18, 13, 8, 3, 7, 4, 9],
    [29, 21, 13, 5, 12, 7, 16],
    [11, 8, 5, 2, 5, 3, 7],
    [15, 11, 7, 3, 8, 5, 12],
    [34, 25, 16, 7, 19, 12, 29],
    [87, 64, 41, 18, 49, 31, 75],
]


def right_grid() -> TilingWindow:
    return TilingWindow.from_rows(-3, -3, RIGHT_GRID_ROWS)


def right_grid_certificate() -> OnesCertificate:
    return OnesCertificate(
        ones=(),
        left_bounded=True,
        right_bounded=True,
        row_frieze_ones=((-2, 0),),
        col_frieze_ones=((0, 2),))


# ---------------------------------------------------------------------------
# classic width-6 frieze band with period-7 quiddity (2,1,3,2,2,1,4)

A4_QUIDDITY = (2, 1, 3, 2, 2, 1, 4)
A4_BAND_ROWS = {
    1: (1, 1, 1, 1, 1, 1, 1),
    2: (2, 1, 3, 2, 2, 1, 4),
    3: (1, 2, 5, 3, 1, 3, 7),
    4: (3, 1, 3, 7, 1, 2, 5),
    5: (2, 1, 4, 2, 1, 3, 2),
    6: (1, 1, 1, 1, 1, 1, 1),
}


def a4_heptagon() -> DiscFragment:
    diagonals = {mkarc((6, "I"), (2, "I")), mkarc((6, "I"), (3, "I")),
                 mkarc((6, "I"), (4, "I")), mkarc((0, "I"), (2, "I"))}
    boundary = tuple(vi(i) for i in range(0, 7))
    closures = {mkarc((0, "I"), (6, "I"))}
    return DiscFragment(D2, boundary, frozenset(diagonals), frozenset(closures))


def is_cyclic_rotation(a, b) -> bool:
    a, b = list(a), list(b)
    if len(a) != len(b):
        return False
    return any(a == b[k:] + b[:k] for k in range(len(b)))


# ---------------------------------------------------------------------------
# independent oracles


def oracle_labels(frag: DiscFragment, base: Vertex) -> dict[Vertex, int]:
    """Counting labels via vertex degrees and the three-term recurrence.

    Independent of the triangle-propagation implementation: it only uses the
    fact that the label sequence around the polygon obeys the continuant
    recurrence driven by 1 + (diagonal degree) at each vertex.
    """
    m = frag.m
    deg = [0] * m
    for i, j in frag.diagonal_positions():
        deg[i] += 1
        deg[j] += 1
    quid = [1 + d for d in deg]
    p0 = frag.position(base)
    lab = [None] * m
    lab[p0] = 0
    lab[(p0 + 1) % m] = 1
    for k in range(2, m):
        a = (p0 + k) % m
        b = (p0 + k - 1) % m
        c = (p0 + k - 2) % m
        lab[a] = quid[b] * lab[b] - lab[c]
    return {frag.boundary[i]: lab[i] for i in range(m)}


def oracle_frieze_rows(quiddity, start: int, depth: int) -> dict[tuple[int, int], int]:
    """Frieze entries via determinant propagation from the bottom row up.

    Rows are filled from a = start+len(quiddity) upwards; each new entry is
    solved from the 2x2 determinant against the row below, so only the
    second-diagonal values come from the quiddity itself.
    """
    b1 = start + len(quiddity) - 1
    q = {start + i: v for i, v in enumerate(quiddity)}
    rows: dict[int, dict[int, int]] = {}
    out: dict[tuple[int, int], int] = {}
    for a in range(b1 + 1, start - 2, -1):
        row = {a: 0}
        if a + 1 <= b1 + 1:
            row[a + 1] = 1
        if a + 2 <= min(a + depth, b1 + 1):
            row[a + 2] = q[a + 1]
        for d in range(a + 3, min(a + depth, b1 + 1) + 1):
            below = rows[a + 1]
            num = row[d - 1] * below[d] - 1
            den = below[d - 1]
            assert num % den == 0, "determinant propagation left the integers"
            row[d] = num // den
        rows[a] = row
        for d, val in row.items():
            out[(a, d)] = val
    return out


def brute_force_matrix_with_sums(r: int, total: int):
    """All nonnegative determinant-1 matrices with the requested sums."""
    hits = []
    for i in range(total + 1):
        for j in range(total + 1 - i):
            for k in range(total + 1 - i - j):
                l = total - i - j - k
                if i * l - j * k == 1 and i + j == r:
                    hits.append((i, j, k, l))
    return hits


# ---------------------------------------------------------------------------
# random generators

def rand_triangulation(rng: random.Random, verts: list[Vertex]) -> set[Arc]:
    """Random full triangulation of the polygon spanned by ``verts``."""
    chords: set[Arc] = set()

    def rec(ids: list[Vertex]):
        n = len(ids)
        if n <= 3:
            return
        j = rng.randrange(2, n - 1)
        chords.add(arc(ids[0], ids[j]))
        rec(ids[:j + 1])
        rec(ids[j:] + ids[:1])

    rec(list(verts))
    return chords


def full_window(frag: DiscFragment) -> TilingWindow:
    rows = (min(v.index for v in frag.boundary if v.interval == "I"),
            max(v.index for v in frag.boundary if v.interval == "I"))
    cols = (min(v.index for v in frag.boundary if v.interval == "III"),
            max(v.index for v in frag.boundary if v.interval == "III"))
    return counting_window(frag, rows, cols)[0]


def cert_from_fragment(frag: DiscFragment, *, left_bounded=True, right_bounded=True,
                       left_tail=None, right_tail=None) -> OnesCertificate:
    ones = []
    row_pairs = []
    col_pairs = []
    for a in sorted(frag.all_arcs(), key=lambda x: (x.a, x.b)):
        tags = {a.a.interval, a.b.interval}
        if tags == {"I", "III"}:
            ones.append((a.a.index, a.b.index))
        elif tags == {"I"}:
            row_pairs.append((a.a.index, a.b.index))
        elif tags == {"III"}:
            col_pairs.append((a.a.index, a.b.index))
    ones.sort(key=lambda p: (-p[0], p[1]))
    return OnesCertificate(
        ones=tuple(ones),
        left_bounded=left_bounded,
        right_bounded=right_bounded,
        left_tail=left_tail,
        right_tail=right_tail,
        row_frieze_ones=tuple(sorted(row_pairs)),
        col_frieze_ones=tuple(sorted(col_pairs)))


def rand_ladder_fragment(rng: random.Random, n_rungs: int | None = None) -> DiscFragment:
    """Two-interval fragment shaped like an unbounded-both-ways unit pattern:
    a ladder of connecting arcs with random fills in between."""
    if n_rungs is None:
        n_rungs = rng.randint(3, 6)
    b = rng.randint(-1, 2)
    v = rng.randint(-2, 1)
    rungs = [(b, v)]
    for _ in range(n_rungs - 1):
        b -= rng.randint(1, 2)
        v += rng.randint(1, 2)
        rungs.append((b, v))
    diagonals: set[Arc] = set()
    for (b1, v1), (b2, v2) in zip(rungs, rungs[1:]):
        poly = [vi(i) for i in range(b2, b1 + 1)] + [viii(j) for j in range(v1, v2 + 1)]
        diagonals |= rand_triangulation(rng, poly)
    for b1, v1 in rungs[1:-1]:
        diagonals.add(arc(vi(b1), viii(v1)))
    closures = {arc(vi(rungs[0][0]), viii(rungs[0][1])),
                arc(vi(rungs[-1][0]), viii(rungs[-1][1]))}
    boundary = (tuple(vi(i) for i in range(rungs[-1][0], rungs[0][0] + 1))
                + tuple(viii(j) for j in range(rungs[0][1], rungs[-1][1] + 1)))
    return DiscFragment(D2, boundary, frozenset(diagonals), frozenset(closures))


class _ChainGen:
    """Grow one chain of fans for the source-fragment generators."""

    def __init__(self, rng, tag, start, target_tag, anchor, step, n_verts,
                 first_size=None, max_block=3, max_gap=2):
        self.arcs: set[Arc] = set()
        self.fills: set[Arc] = set()
        cursor = anchor
        i = start
        self.direction = None
        for k in range(n_verts):
            if k == 0 and first_size is not None:
                size = first_size
            else:
                size = rng.randint(1, max_block)
            block = [cursor + step * t for t in range(size)]
            self.arcs |= {arc(_MK[tag](i), _MK[target_tag](ix)) for ix in block}
            cursor = block[-1]
            gap = rng.randint(1, max_gap)
            nxt = i + gap * self._main_dir(tag, target_tag, step)
            if gap >= 2:
                hop = arc(_MK[tag](i), _MK[tag](nxt))
                self.fills.add(hop)
                lo, hi = sorted((i, nxt))
                self.fills |= rand_triangulation(rng, [_MK[tag](x) for x in range(lo, hi + 1)])
            i = nxt
        self.closure = arc(_MK[tag](i), _MK[target_tag](cursor))
        self.end = i
        self.cursor_end = cursor

    @staticmethod
    def _main_dir(tag, target_tag, step) -> int:
        # chains on interval I ascend towards II and descend towards IV;
        # chains on interval III do the opposite
        if tag == "I":
            return 1 if target_tag == "II" else -1
        return -1 if target_tag == "II" else 1


def _assemble_source(shape, ranges, diagonals, closures) -> DiscFragment:
    boundary = []
    for tag in shape.intervals:
        if tag not in ranges:
            continue
        lo, hi = ranges[tag]
        boundary.extend(_MK[tag](i) for i in range(lo, hi + 1))
    bset = set(boundary)
    m = len(boundary)
    sides = {frozenset((boundary[i], boundary[(i + 1) % m])) for i in range(m)}
    diags = {a for a in diagonals
             if a.a in bset and a.b in bset and frozenset(a.endpoints) not in sides}
    return DiscFragment(shape, tuple(boundary), frozenset(diags), frozenset(closures))


def rand_one_sided_fragment(rng: random.Random) -> DiscFragment:
    """Three-interval fragment: ladder unbounded towards the north-east plus
    fans from the south-west ends of intervals I and III into interval II."""
    from sl2tilings import D3_WITH_II

    n_rungs = rng.randint(2, 4)
    b = rng.randint(-1, 1)
    v = rng.randint(-1, 1)
    rungs = [(b, v)]
    for _ in range(n_rungs - 1):
        b -= rng.randint(1, 2)
        v += rng.randint(1, 2)
        rungs.append((b, v))
    b0, v0 = rungs[0]
    # keep the outermost rung well past (b0, v0) so shaved windows retain margin
    while b0 - b < 2 or v - v0 < 2:
        b -= 1
        v += 1
        rungs.append((b, v))
    diagonals: set[Arc] = set()
    for (b1, v1), (b2, v2) in zip(rungs, rungs[1:]):
        poly = [vi(i) for i in range(b2, b1 + 1)] + [viii(j) for j in range(v1, v2 + 1)]
        diagonals |= rand_triangulation(rng, poly)
    for b1, v1 in rungs:
        diagonals.add(arc(vi(b1), viii(v1)))
    up = _ChainGen(rng, "I", b0, "II", 0, -1, rng.randint(2, 3))
    down = _ChainGen(rng, "III", v0, "II", 0, +1, rng.randint(2, 3))
    diagonals |= up.arcs | up.fills | down.arcs | down.fills
    closures = {arc(vi(rungs[-1][0]), viii(rungs[-1][1])), up.closure, down.closure}
    ranges = {"I": (rungs[-1][0], up.end),
              "II": (up.cursor_end, down.cursor_end),
              "III": (down.end, rungs[-1][1])}
    return _assemble_source(D3_WITH_II, ranges, diagonals, closures)


def rand_rectangle_fragment(rng: random.Random) -> DiscFragment:
    """Four-interval fragment whose unit pattern is a finite staircase with at
    least two rows and two columns."""
    pts = [(0, 0)]
    b, v = 0, 0
    moved_up = moved_right = False
    for _ in range(rng.randint(2, 4)):
        if rng.random() < 0.5:
            b -= 1
            moved_up = True
        else:
            v += 1
            moved_right = True
        pts.append((b, v))
    if not moved_up:
        pts.append((b - 1, v))
    if not moved_right:
        pts.append((b - 1, v + 1))
    diagonals = set()
    for (b1, v1), (b2, v2) in zip(pts, pts[1:]):
        poly = [vi(i) for i in range(b2, b1 + 1)] + [viii(j) for j in range(v1, v2 + 1)]
        if len(poly) >= 3:
            diagonals |= rand_triangulation(rng, poly)
    for bb, vv in pts:
        diagonals.add(arc(vi(bb), viii(vv)))
    b_sw, v_sw = pts[0]
    b_ne, v_ne = pts[-1]
    up = _ChainGen(rng, "I", b_sw, "II", 0, -1, rng.randint(2, 3))
    down = _ChainGen(rng, "I", b_ne, "IV", 0, +1, rng.randint(2, 3))
    col_down = _ChainGen(rng, "III", v_sw, "II", 0, +1, rng.randint(2, 3))
    col_up = _ChainGen(rng, "III", v_ne, "IV", 0, -1, rng.randint(2, 3))
    for c in (up, down, col_down, col_up):
        diagonals |= c.arcs | c.fills
    closures = {up.closure, down.closure, col_down.closure, col_up.closure}
    ranges = {"I": (down.end, up.end),
              "II": (up.cursor_end, col_down.cursor_end),
              "III": (col_down.end, col_up.end),
              "IV": (col_up.cursor_end, down.cursor_end)}
    return _assemble_source(D4, ranges, diagonals, closures)


def rand_single_row_fragment(rng: random.Random, n_ones: int | None = None) -> DiscFragment:
    """Four-interval fragment whose unit entries sit in one row (n_ones >= 2),
    or a single unit entry when n_ones == 1."""
    if n_ones is None:
        n_ones = rng.randint(2, 4)
    b0 = 0
    cols = [0]
    for _ in range(n_ones - 1):
        cols.append(cols[-1] + rng.randint(1, 2))
    diagonals = {arc(vi(b0), viii(v)) for v in cols}
    for v1, v2 in zip(cols, cols[1:]):
        poly = [vi(b0)] + [viii(j) for j in range(v1, v2 + 1)]
        if len(poly) >= 3:
            diagonals |= rand_triangulation(rng, poly)
    split_iv = rng.randint(1, 2)
    split_ii = rng.randint(1, 2)
    up = _ChainGen(rng, "I", b0, "II", 0, -1, rng.randint(2, 3), first_size=split_ii)
    down = _ChainGen(rng, "I", b0, "IV", 0, +1, rng.randint(2, 3), first_size=split_iv)
    if n_ones == 1:
        csplit_iv = rng.randint(1, 2)
        csplit_ii = rng.randint(1, 2)
        col_up = _ChainGen(rng, "III", cols[-1], "IV", 0, -1, rng.randint(2, 3),
                           first_size=csplit_iv)
        col_down = _ChainGen(rng, "III", cols[0], "II", 0, +1, rng.randint(2, 3),
                             first_size=csplit_ii)
    else:
        col_up = _ChainGen(rng, "III", cols[-1], "IV", 0, -1, rng.randint(2, 3))
        col_down = _ChainGen(rng, "III", cols[0], "II", 0, +1, rng.randint(2, 3))
    for c in (up, down, col_down, col_up):
        diagonals |= c.arcs | c.fills
    closures = {up.closure, down.closure, col_down.closure, col_up.closure}
    ranges = {"I": (down.end, up.end),
              "II": (up.cursor_end, col_down.cursor_end),
              "III": (col_down.end, col_up.end),
              "IV": (col_up.cursor_end, down.cursor_end)}
    return _assemble_source(D4, ranges, diagonals, closures)


def rand_no_ones_fragment(rng: random.Random) -> DiscFragment:
    """Four-interval fragment with no arcs between intervals I and III: fans
    split at a central vertex pair plus an ear-glued bridge polygon."""
    from sl2tilings import ear_polygon

    total = rng.randint(2, 6)
    r = rng.choice([x for x in range(1, total) if gcd(x, total) == 1])
    ear = ear_polygon(r, total)
    diagonals = set(ear.fragment.diagonals) | set(ear.fragment.closures)
    beta, gamma, chi, phi = ear.beta, ear.gamma, ear.chi, ear.phi
    b0, v0 = 0, 0
    up = _ChainGen(rng, "I", b0, "II", beta.index, -1, rng.randint(2, 3),
                   first_size=rng.randint(1, 2))
    down = _ChainGen(rng, "I", b0, "IV", chi.index, +1, rng.randint(2, 3),
                     first_size=rng.randint(1, 2))
    col_up = _ChainGen(rng, "III", v0, "IV", phi.index, -1, rng.randint(2, 3),
                       first_size=rng.randint(1, 2))
    col_down = _ChainGen(rng, "III", v0, "II", gamma.index, +1, rng.randint(2, 3),
                         first_size=rng.randint(1, 2))
    for c in (up, down, col_down, col_up):
        diagonals |= c.arcs | c.fills
    closures = {up.closure, down.closure, col_down.closure, col_up.closure}
    ranges = {"I": (down.end, up.end),
              "II": (up.cursor_end, col_down.cursor_end),
              "III": (col_down.end, col_up.end),
              "IV": (col_up.cursor_end, down.cursor_end)}
    return _assemble_source(D4, ranges, diagonals, closures)
