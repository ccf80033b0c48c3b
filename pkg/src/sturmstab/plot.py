"""Static SVG region plots of sweep results.

Stable cells are left white; possibly-unstable cells are filled with a colour
keyed to the smallest unstable mode difference.  The optional overlay traces
the zero sets of ``q(0, n)`` and ``q(-n^2/4, n)`` over the plane, the places
where a root can enter the interval through one of its ends.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Optional, Sequence
from xml.sax.saxutils import escape, quoteattr

from .exact import format_rational
from .reduce import build_reduced
from .sweep import DEGENERATE, CellResult, SweepGrid

WIDTH, HEIGHT = 640, 480
MARGIN_L, MARGIN_R, MARGIN_T, MARGIN_B = 70, 150, 30, 60

PALETTE = [
    "#d62728", "#ff7f0e", "#bcbd22", "#2ca02c", "#17becf", "#1f77b4",
    "#9467bd", "#e377c2", "#8c564b", "#7f7f7f",
]
ENTRY_ZERO_COLOR = "#cc0000"   # q(0, n) = 0
ENTRY_EDGE_COLOR = "#0033cc"   # q(-n^2/4, n) = 0


def colour_for(n: int) -> str:
    return PALETTE[(n - 1) % len(PALETTE)]


def _sorted_unique(vals):
    return sorted(set(vals))


def _spacing(vals: Sequence[Fraction]) -> Fraction:
    if len(vals) < 2:
        return Fraction(1)
    return min(b - a for a, b in zip(vals, vals[1:]))


class _Frame:
    """Maps data coordinates onto the plotting rectangle."""

    def __init__(self, xs: Sequence[Fraction], ys: Sequence[Fraction]):
        self.dx = _spacing(xs)
        self.dy = _spacing(ys)
        self.x0, self.x1 = xs[0] - self.dx / 2, xs[-1] + self.dx / 2
        self.y0, self.y1 = ys[0] - self.dy / 2, ys[-1] + self.dy / 2
        self.pw = WIDTH - MARGIN_L - MARGIN_R
        self.ph = HEIGHT - MARGIN_T - MARGIN_B

    def px(self, x) -> float:
        return MARGIN_L + float((Fraction(x) - self.x0) / (self.x1 - self.x0)) * self.pw

    def py(self, y) -> float:
        return MARGIN_T + float((self.y1 - Fraction(y)) / (self.y1 - self.y0)) * self.ph


def _contour_segments(xs, ys, values) -> list[tuple[tuple[Fraction, Fraction], tuple[Fraction, Fraction]]]:
    """Zero-level segments by linear interpolation along grid edges.

    ``values[j][i]`` is the function at ``(xs[i], ys[j])``.  Each grid square
    with a sign change contributes one or two segments.
    """
    segs = []

    def cross(p, q, fp, fq):
        t = fp / (fp - fq)
        return (p[0] + t * (q[0] - p[0]), p[1] + t * (q[1] - p[1]))

    for j in range(len(ys) - 1):
        for i in range(len(xs) - 1):
            corners = [
                ((xs[i], ys[j]), values[j][i]),
                ((xs[i + 1], ys[j]), values[j][i + 1]),
                ((xs[i + 1], ys[j + 1]), values[j + 1][i + 1]),
                ((xs[i], ys[j + 1]), values[j + 1][i]),
            ]
            pts = []
            for k in range(4):
                (p, fp), (q, fq) = corners[k], corners[(k + 1) % 4]
                if fp == 0:
                    pts.append(p)
                elif fp * fq < 0:
                    pts.append(cross(p, q, fp, fq))
            pts = list(dict.fromkeys(pts))
            for k in range(0, len(pts) - 1, 2):
                segs.append((pts[k], pts[k + 1]))
    return segs


def boundary_curves(grid: SweepGrid, n_values: Sequence[int]):
    """``{(n, 'zero'|'edge'): segments}`` for the candidate entry boundaries."""
    if grid.y is None:
        return {}
    xs, ys = grid.x.points(), grid.y.points()
    qgrid = []
    for y in ys:
        row = []
        for x in xs:
            try:
                row.append(build_reduced(grid.spec_at(x, y)))
            except ValueError:
                row.append(None)
        qgrid.append(row)
    out = {}
    for n in n_values:
        edge = Fraction(-n * n, 4)
        f_zero = [[q(0, n) if q is not None else Fraction(0) for q in row] for row in qgrid]
        f_edge = [[q(edge, n) if q is not None else Fraction(0) for q in row] for row in qgrid]
        out[(n, "zero")] = _contour_segments(xs, ys, f_zero)
        out[(n, "edge")] = _contour_segments(xs, ys, f_edge)
    return out


def render_svg(cells: Sequence[CellResult], grid: Optional[SweepGrid] = None,
               overlay: bool = False, title: str = "") -> str:
    """SVG text for a sweep.  ``grid`` (axis names, fixed values) is needed for
    axis labels and for the boundary overlay."""
    if not cells:
        raise ValueError("nothing to plot")
    xs = _sorted_unique(c.x for c in cells)
    one_d = all(c.y is None for c in cells)
    ys = [Fraction(0)] if one_d else _sorted_unique(c.y for c in cells if c.y is not None)
    fr = _Frame(xs, ys)
    xname = grid.x.name if grid else "x"
    yname = grid.y.name if grid and grid.y else "y"

    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" '
        f'viewBox="0 0 {WIDTH} {HEIGHT}">',
        f'<rect x="0" y="0" width="{WIDTH}" height="{HEIGHT}" fill="white"/>',
    ]
    if title:
        out.append(f'<text x="{WIDTH // 2}" y="18" text-anchor="middle" font-size="13">{escape(title)}</text>')

    present = set()
    w = fr.pw * float(fr.dx / (fr.x1 - fr.x0))
    h = fr.ph * float(fr.dy / (fr.y1 - fr.y0))
    out.append('<g id="cells">')
    for c in cells:
        if not c.unstable_n:
            if c.verdict == DEGENERATE:
                y = ys[0] if c.y is None else c.y
                out.append(f'<rect class="cell degenerate" x="{fr.px(c.x) - w / 2:.3f}" '
                           f'y="{fr.py(y) - h / 2:.3f}" width="{w:.3f}" height="{h:.3f}" fill="#dddddd"/>')
            continue
        n0 = c.unstable_n[0]
        present.add(n0)
        y = ys[0] if c.y is None else c.y
        attrs = {
            "class": "cell unstable",
            "data-x": format_rational(c.x),
            "data-y": "" if c.y is None else format_rational(c.y),
            "data-n": ";".join(map(str, c.unstable_n)),
        }
        attr_text = " ".join(f"{k}={quoteattr(v)}" for k, v in attrs.items())
        out.append(f'<rect {attr_text} x="{fr.px(c.x) - w / 2:.3f}" y="{fr.py(y) - h / 2:.3f}" '
                   f'width="{w:.3f}" height="{h:.3f}" fill="{colour_for(n0)}"/>')
    out.append("</g>")

    if overlay and grid is not None and grid.y is not None and not one_d:
        ns = sorted({n for c in cells for n in c.unstable_n}) or [1]
        out.append('<g id="boundaries" fill="none" stroke-width="1.2">')
        for (n, kind), segs in boundary_curves(grid, ns).items():
            colour = ENTRY_ZERO_COLOR if kind == "zero" else ENTRY_EDGE_COLOR
            for (p, q) in segs:
                out.append(f'<line class="boundary {kind}" data-n="{n}" x1="{fr.px(p[0]):.3f}" '
                           f'y1="{fr.py(p[1]):.3f}" x2="{fr.px(q[0]):.3f}" y2="{fr.py(q[1]):.3f}" '
                           f'stroke="{colour}"/>')
        out.append("</g>")

    # frame and ticks
    x_lo, x_hi = MARGIN_L, WIDTH - MARGIN_R
    y_lo, y_hi = MARGIN_T, HEIGHT - MARGIN_B
    out.append(f'<rect x="{x_lo}" y="{y_lo}" width="{x_hi - x_lo}" height="{y_hi - y_lo}" '
               'fill="none" stroke="black"/>')
    for v in (xs[0], xs[len(xs) // 2], xs[-1]):
        out.append(f'<text x="{fr.px(v):.1f}" y="{y_hi + 16}" text-anchor="middle" font-size="11">'
                   f'{float(v):g}</text>')
    out.append(f'<text x="{(x_lo + x_hi) / 2:.1f}" y="{y_hi + 38}" text-anchor="middle" '
               f'font-size="13">{escape(xname)}</text>')
    if not one_d:
        for v in (ys[0], ys[len(ys) // 2], ys[-1]):
            out.append(f'<text x="{x_lo - 6}" y="{fr.py(v) + 4:.1f}" text-anchor="end" font-size="11">'
                       f'{float(v):g}</text>')
        out.append(f'<text x="18" y="{(y_lo + y_hi) / 2:.1f}" text-anchor="middle" font-size="13" '
                   f'transform="rotate(-90 18 {(y_lo + y_hi) / 2:.1f})">{escape(yname)}</text>')

    # legend: one entry per minimum-unstable n actually drawn
    lx = WIDTH - MARGIN_R + 14
    ly = MARGIN_T + 6
    out.append('<g id="legend" font-size="11">')
    out.append(f'<text x="{lx}" y="{ly}">smallest unstable n</text>')
    for k, n in enumerate(sorted(present)):
        yy = ly + 14 * (k + 1)
        out.append(f'<rect class="legend-swatch" data-n="{n}" x="{lx}" y="{yy - 9}" width="10" height="10" '
                   f'fill="{colour_for(n)}"/>')
        out.append(f'<text x="{lx + 14}" y="{yy}">n = {n}</text>')
    if overlay:
        yy = ly + 14 * (len(present) + 2)
        out.append(f'<text x="{lx}" y="{yy}">candidate boundaries</text>')
        out.append(f'<line x1="{lx}" y1="{yy + 10}" x2="{lx + 12}" y2="{yy + 10}" stroke="{ENTRY_ZERO_COLOR}"/>')
        out.append(f'<text x="{lx + 16}" y="{yy + 14}">q(0, n) = 0</text>')
        out.append(f'<line x1="{lx}" y1="{yy + 24}" x2="{lx + 12}" y2="{yy + 24}" stroke="{ENTRY_EDGE_COLOR}"/>')
        out.append(f'<text x="{lx + 16}" y="{yy + 28}">q(-n^2/4, n) = 0</text>')
    out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"


__all__ = ["render_svg", "boundary_curves", "colour_for"]
