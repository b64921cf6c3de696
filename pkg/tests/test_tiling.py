import random

import pytest

from helpers import (P_FRIEZE_ROWS, cert_from_fragment, full_window,
                     left_grid, left_grid_certificate, rand_ladder_fragment,
                     rand_no_ones_fragment, right_grid, right_grid_certificate)
from sl2tilings import (OnesCertificate, TieReport, TilingWindow,
                        delete_at_local_max, derived_friezes, extend_from_seed,
                        ones_zigzag, unique_min, validate_window)
from sl2tilings.errors import (InconsistentCertificate, MinIsOne, NonIntegral,
                               NotLocalMax, ShapeViolation, WindowTooSmall)


def test_extend_from_seed_reproduces_reference_window():
    w = left_grid()
    row = {v: w.get(0, v) for v in w.cols()}
    col = {b: w.get(b, 0) for b in w.rows()}
    assert extend_from_seed(0, 0, row, col).entries == w.entries


def test_extend_from_seed_non_integral():
    with pytest.raises(NonIntegral):
        extend_from_seed(0, 0, {0: 2, 1: 2}, {0: 2, 1: 3})


def test_extend_from_seed_all_ones_seed():
    row = {v: 1 for v in range(0, 5)}
    col = {b: 1 for b in range(0, 5)}
    w = extend_from_seed(0, 0, row, col)
    assert validate_window(w).ok
    assert w.get(1, 1) == 2 and w.get(2, 2) == 5


def test_validate_window_examples():
    assert validate_window(left_grid()).ok
    bad = TilingWindow.from_rows(0, 0, [[1, 1], [1, 1]])
    assert any("determinant" in v for v in validate_window(bad).violations)
    assert validate_window(TilingWindow.from_rows(0, 0, [[1, 1], [1, 2]])).ok


def test_derived_friezes_reference():
    p, q = derived_friezes(left_grid())
    for a, row in P_FRIEZE_ROWS.items():
        assert [p.get(a, a + k) for k in range(len(row))] == row
    assert q.get(-3, -1) == 4


def test_column_frieze_independent_of_row_pair():
    w = left_grid()
    for u in w.cols():
        for x in range(u, w.col_hi + 1):
            vals = {w.get(c, u) * w.get(c + 1, x) - w.get(c, x) * w.get(c + 1, u)
                    for c in range(w.row_lo, w.row_hi)}
            assert len(vals) == 1


def test_row_frieze_independent_of_column_pair():
    w = left_grid()
    for a in w.rows():
        for d in range(a, w.row_hi + 1):
            vals = {w.get(a, c) * w.get(d, c + 1) - w.get(a, c + 1) * w.get(d, c)
                    for c in range(w.col_lo, w.col_hi)}
            assert len(vals) == 1


def test_derived_friezes_superdiagonal():
    p, q = derived_friezes(right_grid())
    for a in range(-3, 3):
        assert p.get(a, a + 1) == 1
        assert q.get(a, a + 1) == 1


def test_derived_friezes_window_too_small():
    w = TilingWindow.from_rows(0, 0, [[1], [1]])
    with pytest.raises(WindowTooSmall):
        derived_friezes(w)


def test_ptolemy_relations_on_windows():
    for w in (left_grid(), right_grid()):
        p, q = derived_friezes(w)
        rows = list(w.rows())
        cols = list(w.cols())
        for a in rows:
            for b in rows:
                for c in rows:
                    for d in rows:
                        if a < b < c < d:
                            assert (p.get(a, c) * p.get(b, d)
                                    == p.get(a, b) * p.get(c, d)
                                    + p.get(a, d) * p.get(b, c))
        for a in rows:
            for b in rows:
                for c in rows:
                    if not a < b < c:
                        continue
                    for v in cols:
                        assert (p.get(a, c) * w.get(b, v)
                                == p.get(b, c) * w.get(a, v)
                                + p.get(a, b) * w.get(c, v))
        for b in rows:
            for c in rows:
                if b >= c:
                    continue
                for v in cols:
                    for x in cols:
                        if v >= x:
                            continue
                        assert (w.get(b, v) * w.get(c, x)
                                == w.get(b, x) * w.get(c, v)
                                + p.get(b, c) * q.get(v, x))


def test_finiteness_witness():
    # equal row-frieze values in one row force strict descent one row up
    rng = random.Random(42)
    seen = 0
    for _ in range(30):
        w = full_window(rand_ladder_fragment(rng))
        p, _ = derived_friezes(w)
        for i in range(w.row_lo + 1, w.row_hi + 1):
            for j in range(i + 1, w.row_hi + 1):
                for k in range(j + 1, w.row_hi + 1):
                    if p.get(i, j) == p.get(i, k):
                        assert p.get(i - 1, j) > p.get(i - 1, k)
                        seen += 1
    assert seen > 0


def test_equal_neighbour_law():
    rng = random.Random(43)
    for _ in range(30):
        w = full_window(rand_ladder_fragment(rng))
        for b in w.rows():
            for v in w.cols():
                if v + 1 <= w.col_hi and w.get(b, v) == w.get(b, v + 1):
                    assert w.get(b, v) == 1
                if b + 1 <= w.row_hi and w.get(b, v) == w.get(b + 1, v):
                    assert w.get(b, v) == 1


def test_inequality_propagation():
    # in a 2x2 block of entries >= 2 with k < l and j > l, also i < j and i < k
    rng = random.Random(44)
    checked = 0
    for _ in range(40):
        w = full_window(rand_no_ones_fragment(rng))
        for b in range(w.row_lo, w.row_hi):
            for v in range(w.col_lo, w.col_hi):
                i, j = w.get(b, v), w.get(b, v + 1)
                k, l = w.get(b + 1, v), w.get(b + 1, v + 1)
                if min(i, j, k, l) >= 2 and k < l and j > l:
                    assert i < j and i < k
                    checked += 1
    assert checked > 0


def test_ones_zigzag_reference():
    z = ones_zigzag(left_grid())
    assert z.points == ((3, -3), (3, -2), (3, 1), (2, 1),
                        (-1, 1), (-1, 2), (-1, 3), (-3, 3))


def test_ones_zigzag_empty():
    assert ones_zigzag(right_grid()).points == ()


def test_ones_zigzag_shape_violation():
    w = TilingWindow.from_rows(0, 0, [[1, 2], [2, 1]])
    with pytest.raises(ShapeViolation):
        ones_zigzag(w)


def test_unique_min_reference():
    assert unique_min(right_grid()) == ((0, 0), 2)


def test_unique_min_single_cell():
    assert unique_min(TilingWindow.from_rows(0, 0, [[5]])) == ((0, 0), 5)


def test_unique_min_rejects_ones():
    with pytest.raises(MinIsOne):
        unique_min(left_grid())


def test_unique_min_tie_report():
    tie = unique_min(TilingWindow.from_rows(0, 0, [[2, 3], [3, 2]]))
    assert isinstance(tie, TieReport)
    assert tie.value == 2 and len(tie.positions) == 2


def test_delete_column_at_local_max():
    w = right_grid()
    assert w.get(0, 0) < w.get(0, 1) > w.get(0, 2)
    out = delete_at_local_max(w, "column", 1)
    assert validate_window(out).ok
    assert out.col_range == (-3, 2)
    # pre-deletion sum identity, spot value in row -1: 12 = 5 + 7
    for b in w.rows():
        assert w.get(b, 1) == w.get(b, 0) + w.get(b, 2)


def test_delete_row_at_local_max():
    w = right_grid()
    assert w.get(-2, -3) < w.get(-1, -3) > w.get(0, -3)
    out = delete_at_local_max(w, "row", -1)
    assert validate_window(out).ok


def test_delete_rejects_minimum_column():
    with pytest.raises(NotLocalMax):
        delete_at_local_max(right_grid(), "column", 0)


def test_certificate_validation():
    cert = left_grid_certificate()
    cert.validate()
    with pytest.raises(InconsistentCertificate):
        OnesCertificate(ones=((0, 0), (1, 1)), left_bounded=True,
                        right_bounded=True).validate()
    with pytest.raises(InconsistentCertificate):
        OnesCertificate(ones=(), left_bounded=False, right_bounded=True).validate()
    with pytest.raises(InconsistentCertificate):
        # a tail must shift between row and column steps
        OnesCertificate(ones=((0, 0),), left_bounded=True, right_bounded=False,
                        right_tail=((0, 1),)).validate()


def test_certificate_check_window():
    left_grid_certificate().check_window(left_grid())
    right_grid_certificate().check_window(right_grid())
    bad = OnesCertificate(ones=(), left_bounded=True, right_bounded=True)
    with pytest.raises(InconsistentCertificate):
        bad.check_window(left_grid())


def test_certificate_tail_enumeration():
    cert = left_grid_certificate()
    pts = cert.ones_in_rect((-6, 6), (-6, 6))
    assert (4, -4) in pts and (-4, 4) in pts  # tail-generated beyond the listed ones
    assert (3, -3) in pts
    rng = random.Random(3)
    frag = rand_ladder_fragment(rng)
    cert2 = cert_from_fragment(frag, left_bounded=False, right_bounded=False)
    w = full_window(frag)
    visible = {p for p, val in w.entries.items() if val == 1}
    assert cert2.ones_in_rect(w.row_range, w.col_range) == visible
