"""Conway-Coxeter counting on triangulated fragments.

Counting assigns 0 to a base vertex, 1 to everything the base is joined to,
and the sum of the other two corners to the third corner of any triangle.
On a fully triangulated polygon this labels every vertex, and the resulting
two-vertex values are symmetric and independent of the enclosing polygon.
"""
from __future__ import annotations

from .disc_model import Arc, DiscFragment, Vertex
from .errors import NotCrossing, NotFullyTriangulated


class LabelMap:
    """Counting labels for one base vertex."""

    def __init__(self, base: Vertex, labels: dict[Vertex, int]):
        self.base = base
        self.labels = labels

    def __getitem__(self, v: Vertex) -> int:
        return self.labels[v]

    def __iter__(self):
        return iter(self.labels)

    def __len__(self):
        return len(self.labels)

    def __repr__(self):
        return f"LabelMap(base={self.base}, {self.labels})"


def _face_triples(frag: DiscFragment) -> tuple[tuple[int, int, int], ...]:
    """Positions of the triangles cut out by the diagonals.

    Recursive splitting: the face over a side is the unique vertex joined to
    both of its ends; anything else means the diagonal set is not a full
    triangulation.
    """
    m = frag.m
    if m == 2:
        return ()
    if not frag.is_fully_triangulated:
        raise NotFullyTriangulated(
            f"{len(frag.diagonals)} diagonals on an {m}-gon, expected {m - 3}")
    chords = {frozenset(p) for p in frag.diagonal_positions()}

    def connected(i: int, j: int) -> bool:
        return (abs(i - j) % m) in (1, m - 1) or frozenset((i, j)) in chords

    faces: list[tuple[int, int, int]] = []

    def solve(poly: tuple[int, ...]) -> None:
        if len(poly) < 3:
            return
        if len(poly) == 3:
            faces.append(poly)
            return
        p0, p1 = poly[0], poly[1]
        hits = [k for k in range(2, len(poly))
                if connected(p0, poly[k]) and connected(p1, poly[k])]
        if len(hits) != 1:
            raise NotFullyTriangulated(
                f"side {frag.boundary[p0]}-{frag.boundary[p1]} does not bound a unique triangle")
        k = hits[0]
        faces.append((p0, p1, poly[k]))
        solve(poly[1:k + 1])
        solve((poly[0],) + poly[k:])

    solve(tuple(range(m)))
    if len(faces) != m - 2:
        raise NotFullyTriangulated("triangle decomposition is incomplete")
    return tuple(faces)


def cc_labels(frag: DiscFragment, base: Vertex) -> LabelMap:
    """Counting labels from ``base``; requires a fully triangulated fragment."""
    pos = frag.position(base)
    m = frag.m
    lab: list[int | None] = [None] * m
    lab[pos] = 0
    lab[(pos - 1) % m] = 1
    lab[(pos + 1) % m] = 1
    for i, j in frag.diagonal_positions():
        if i == pos:
            lab[j] = 1
        elif j == pos:
            lab[i] = 1
    lab[pos] = 0
    faces = _face_triples(frag)
    pending = True
    while pending:
        pending = False
        for i, j, k in faces:
            vals = (lab[i], lab[j], lab[k])
            missing = [t for t, v in enumerate(vals) if v is None]
            if len(missing) == 1:
                idx = (i, j, k)[missing[0]]
                others = [v for v in vals if v is not None]
                lab[idx] = others[0] + others[1]
                pending = True
    if any(v is None for v in lab):
        raise NotFullyTriangulated("counting did not reach every vertex")
    return LabelMap(base, {frag.boundary[i]: lab[i] for i in range(m)})


def cc_value(frag: DiscFragment, mu: Vertex, nu: Vertex) -> int:
    """The counting value between two boundary vertices (symmetric in mu, nu)."""
    return cc_labels(frag, mu)[nu]


def counting_window(frag: DiscFragment, rows: tuple[int, int], cols: tuple[int, int]):
    """Evaluate counting between intervals I and III over a rectangular window.

    Returns the window itself plus the two friezes read along interval I
    (rows) and interval III (columns).
    """
    from .frieze import FriezeWindow
    from .tiling import TilingWindow

    row_lo, row_hi = rows
    col_lo, col_hi = cols
    maps_i = {a: cc_labels(frag, Vertex("I", a)) for a in range(row_lo, row_hi + 1)}
    maps_iii = {u: cc_labels(frag, Vertex("III", u)) for u in range(col_lo, col_hi + 1)}
    t_entries = {(b, v): maps_i[b][Vertex("III", v)]
                 for b in range(row_lo, row_hi + 1)
                 for v in range(col_lo, col_hi + 1)}
    p_entries = {(a, d): maps_i[a][Vertex("I", d)]
                 for a in range(row_lo, row_hi + 1)
                 for d in range(a, row_hi + 1)}
    q_entries = {(u, x): maps_iii[u][Vertex("III", x)]
                 for u in range(col_lo, col_hi + 1)
                 for x in range(u, col_hi + 1)}
    window = TilingWindow((row_lo, row_hi), (col_lo, col_hi), t_entries)
    return window, FriezeWindow("infinite", p_entries), FriezeWindow("infinite", q_entries)


def _as_pair(x) -> tuple[Vertex, Vertex]:
    if isinstance(x, Arc):
        return x.endpoints
    u, v = x
    return (u, v)


def ptolemy_check(frag: DiscFragment, x, y) -> bool:
    """Exchange identity for two crossing chords between boundary vertices.

    ``x`` and ``y`` may be arcs or plain vertex pairs; they need not belong to
    the triangulation.
    """
    mu, nu = _as_pair(x)
    pi, rho = _as_pair(y)
    pm, pn = sorted((frag.position(mu), frag.position(nu)))
    pp, pr = sorted((frag.position(pi), frag.position(rho)))
    crossing = (pm < pp < pn < pr) or (pp < pm < pr < pn)
    if not crossing:
        raise NotCrossing(f"{mu}-{nu} and {pi}-{rho} do not cross")
    lm = cc_labels(frag, mu)
    ln = cc_labels(frag, nu)
    return lm[nu] * cc_labels(frag, pi)[rho] == lm[pi] * ln[rho] + lm[rho] * ln[pi]
