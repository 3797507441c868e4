"""SVG pictures of boundaries and fillings.

Lattice vertex (row y, position x) is drawn at (x - y/2, y * sqrt(3)/2) in
edge units, with the SVG y axis pointing down, so up triangles have their
apex on top.  One ``<polygon>`` is emitted per placement; the outline is a
``<path>`` so polygon counts stay equal to placement counts.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from xml.sax.saxutils import escape

from .pieces import LABEL_TEXT, ONE, ZERO, Piece, Shape, Tag, catalog
from .region import BoundarySpec, build_lattice
from .tiler import Filling

_H = math.sqrt(3) / 2

DEFAULT_PALETTE = {
    "zero": "#e8614d",  # all-0 pieces
    "one": "#4d7fe8",  # all-1 pieces
    "ten": "#ffffff",  # pieces carrying a 10 edge
    "equivariant": "#f5d742",
    "k": "#9bd18b",
}


@dataclass(frozen=True)
class RenderStyle:
    unit: float = 40.0
    margin: float = 20.0
    labels: bool = True
    palette: dict = field(default_factory=lambda: dict(DEFAULT_PALETTE))


def piece_class(p: Piece) -> str:
    if p.shape is Shape.RHOMBUS:
        return "equivariant"
    if p.tag is Tag.SIGN:
        return "k"
    if all(x == ZERO for x in p.labels):
        return "zero"
    if all(x == ONE for x in p.labels):
        return "one"
    return "ten"


def _fmt(v: float) -> str:
    s = f"{v:.2f}".rstrip("0").rstrip(".")
    return "0" if s in ("-0", "") else s


class _Canvas:
    def __init__(self, b: BoundarySpec, style: RenderStyle):
        self.b = b
        self.style = style
        n = max(b.N, 1)
        self.width = n * style.unit + 2 * style.margin
        self.height = n * _H * style.unit + 2 * style.margin

    def point(self, v) -> tuple[float, float]:
        y, x = v
        u, m = self.style.unit, self.style.margin
        return (m + (x - y / 2 + self.b.N / 2) * u, m + y * _H * u)

    def pts(self, vs) -> str:
        return " ".join(f"{_fmt(px)},{_fmt(py)}" for px, py in map(self.point, vs))


def _outline(b: BoundarySpec) -> list[tuple[int, int]]:
    N, a, c, e = b.N, b.cut_bl, b.cut_top, b.cut_br
    corners = [(N, a), (N - a, 0), (c, 0), (c, c), (N - e, N - e), (N, N - e)]
    out = []
    for v in corners:
        if not out or out[-1] != v:
            out.append(v)
    return out


def _edge_ends(edge) -> tuple[tuple[int, int], tuple[int, int]]:
    kind, r, i = edge
    if kind == "R":
        return (r - 1, i - 1), (r, i - 1)
    if kind == "F":
        return (r - 1, i - 1), (r, i)
    return (r, i - 1), (r, i)


def _cell_polygon(cell, piece: Piece):
    kind, r, i = cell
    if piece.shape is Shape.RHOMBUS:
        return [(r - 1, i - 1), (r, i), (r + 1, i), (r, i - 1)]
    if kind == "U":
        return [(r - 1, i - 1), (r, i), (r, i - 1)]
    return [(r - 1, i - 1), (r - 1, i), (r, i)]


def render_svg(obj, style: RenderStyle | None = None) -> str:
    """SVG text for a Filling or a bare BoundarySpec."""
    style = style or RenderStyle()
    if isinstance(obj, Filling):
        b, filling = obj.boundary, obj
    else:
        b, filling = obj, None
    cv = _Canvas(b, style)
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_fmt(cv.width)}" '
        f'height="{_fmt(cv.height)}" viewBox="0 0 {_fmt(cv.width)} {_fmt(cv.height)}">',
    ]
    edge_text: dict = {}
    if filling is not None:
        cat = catalog(filling.pieces)
        out.append('<g stroke="#333" stroke-width="1">')
        for cell, idx in filling.placements:
            p = cat[idx]
            colour = style.palette[piece_class(p)]
            out.append(
                f'<polygon class="{piece_class(p)}" points="{cv.pts(_cell_polygon(cell, p))}" fill="{colour}"/>'
            )
        out.append("</g>")
        if style.labels:
            edge_text = {e: LABEL_TEXT[lab] for e, lab in filling.edge_labels().items()}
    elif style.labels:
        lat = build_lattice(b)
        edge_text = {e: LABEL_TEXT[lab] for e, lab in lat.boundary_assignment.items() if lab is not None}
    ring = _outline(b)
    if len(ring) > 1:
        d = "M " + " L ".join(cv.pts([v]) for v in ring) + " Z"
        out.append(f'<path d="{d}" fill="none" stroke="#000" stroke-width="2"/>')
    if edge_text:
        out.append('<g font-family="monospace" font-size="10" text-anchor="middle">')
        for edge in sorted(edge_text):
            (p1, p2) = map(cv.point, _edge_ends(edge))
            mx, my = (p1[0] + p2[0]) / 2, (p1[1] + p2[1]) / 2 + 3
            out.append(f'<text x="{_fmt(mx)}" y="{_fmt(my)}">{escape(edge_text[edge])}</text>')
        out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"


__all__ = ["RenderStyle", "render_svg", "piece_class", "DEFAULT_PALETTE"]
