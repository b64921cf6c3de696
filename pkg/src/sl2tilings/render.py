"""Deterministic ASCII and SVG renderings of fragments and windows.

Layout is purely cosmetic: each interval owns a fixed angular sector
(I top, II left, III bottom, IV right), indices are squeezed towards the
interval ends by an arctangent so arbitrary index ranges fit, and the gaps
between sectors carry small circles marking the accumulation points.
"""
from __future__ import annotations

import math

from .disc_model import DiscFragment, DiscShape, Vertex
from .tiling import TilingWindow

_SECTORS = {
    ("I", "III"): {"I": (0.0, 180.0), "III": (180.0, 360.0)},
    ("I", "II", "III"): {"I": (0.0, 120.0), "II": (120.0, 240.0), "III": (240.0, 360.0)},
    ("I", "III", "IV"): {"I": (60.0, 180.0), "III": (180.0, 300.0), "IV": (300.0, 420.0)},
    ("I", "II", "III", "IV"): {"I": (45.0, 135.0), "II": (135.0, 225.0),
                               "III": (225.0, 315.0), "IV": (315.0, 405.0)},
}

_PAD = 0.08  # fraction of the sector kept clear next to each gap


def _angle(shape: DiscShape, v: Vertex) -> float:
    start, end = _SECTORS[shape.intervals][v.interval]
    span = (end - start) * (1 - 2 * _PAD)
    frac = 0.5 + math.atan(v.index / 3.0) / math.pi
    return start + (end - start) * _PAD + span * frac


def ascii_fragment(frag: DiscFragment) -> str:
    lines = [f"disc with {frag.shape.n} gaps; intervals {' '.join(frag.shape.intervals)}"]
    lines.append(f"vertices ({frag.m}, anticlockwise):")
    lines.append("  " + " ".join(str(v) for v in frag.boundary))
    arcs = sorted(frag.all_arcs(), key=lambda a: (a.a, a.b))
    lines.append(f"arcs ({len(arcs)}):")
    for a in arcs:
        role = "closing" if a in frag.closures else "diagonal"
        lines.append(f"  {a.a} -- {a.b}  [{role}]")
    return "\n".join(lines) + "\n"


def ascii_window(w: TilingWindow) -> str:
    rows = [[str(x) for x in w.row_values(b)] for b in w.rows()]
    width = max(len(s) for row in rows for s in row)
    lines = [f"rows {w.row_lo}..{w.row_hi}, cols {w.col_lo}..{w.col_hi}"]
    for row in rows:
        lines.append(" ".join(s.rjust(width) for s in row))
    return "\n".join(lines) + "\n"


def _xy(angle_deg: float, radius: float, cx: float = 250.0, cy: float = 250.0):
    rad = math.radians(angle_deg)
    return cx + radius * math.cos(rad), cy - radius * math.sin(rad)


def _fmt(x: float) -> str:
    return f"{x:.2f}"


def svg_fragment(frag: DiscFragment) -> str:
    r = 200.0
    parts = ['<svg xmlns="http://www.w3.org/2000/svg" width="500" height="500" '
             'viewBox="0 0 500 500">',
             f'<circle cx="250" cy="250" r="{_fmt(r)}" fill="none" stroke="black"/>']
    sectors = _SECTORS[frag.shape.intervals]
    for tag in frag.shape.intervals:
        gap_angle = sectors[tag][1] % 360.0
        gx, gy = _xy(gap_angle, r)
        parts.append(f'<circle cx="{_fmt(gx)}" cy="{_fmt(gy)}" r="6" '
                     'fill="white" stroke="black"/>')
    angles = {v: _angle(frag.shape, v) for v in frag.boundary}
    for a in sorted(frag.all_arcs(), key=lambda x: (x.a, x.b)):
        x1, y1 = _xy(angles[a.a], r)
        x2, y2 = _xy(angles[a.b], r)
        mx, my = (x1 + x2) / 2, (y1 + y2) / 2
        # pull the control point towards the centre, more for long chords
        chord = math.hypot(x2 - x1, y2 - y1)
        pull = min(0.9, chord / (2 * r))
        cx = mx + (250.0 - mx) * pull
        cy = my + (250.0 - my) * pull
        dash = "" if a in frag.diagonals else ' stroke-dasharray="6 3"'
        parts.append(f'<path d="M {_fmt(x1)} {_fmt(y1)} Q {_fmt(cx)} {_fmt(cy)} '
                     f'{_fmt(x2)} {_fmt(y2)}" fill="none" stroke="black"{dash}/>')
    for v in frag.boundary:
        ang = angles[v]
        x1, y1 = _xy(ang, r - 5)
        x2, y2 = _xy(ang, r + 5)
        parts.append(f'<line x1="{_fmt(x1)}" y1="{_fmt(y1)}" x2="{_fmt(x2)}" '
                     f'y2="{_fmt(y2)}" stroke="black"/>')
        tx, ty = _xy(ang, r + 22)
        parts.append(f'<text x="{_fmt(tx)}" y="{_fmt(ty)}" font-size="11" '
                     f'text-anchor="middle">{v.index}^{v.interval}</text>')
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def svg_window(w: TilingWindow) -> str:
    rows = [[str(x) for x in w.row_values(b)] for b in w.rows()]
    cell_w = 12 + 9 * max(len(s) for row in rows for s in row)
    cell_h = 24
    width = cell_w * len(rows[0]) + 20
    height = cell_h * len(rows) + 20
    parts = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" '
             f'height="{height}" viewBox="0 0 {width} {height}">']
    for i, row in enumerate(rows):
        for j, s in enumerate(row):
            x = 10 + cell_w * (j + 1) - 6
            y = 10 + cell_h * i + 16
            parts.append(f'<text x="{x}" y="{y}" font-size="14" '
                         f'font-family="monospace" text-anchor="end">{s}</text>')
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
