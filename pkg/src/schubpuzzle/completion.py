"""Completing polygonal puzzles to triangles.

A polygon here is the size-N triangle with its corners cut away, so
completing it means filling each cut corner back in.  Every corner has
exactly one filling (an identity filling), which makes gluing and cutting
a bijection between polygon fillings and fillings of the completed triangle.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import words
from .pieces import H, PieceSet, catalog
from .region import BoundarySpec, build_lattice, polygon_boundary, triangle_boundary
from .tiler import Filling, enumerate_fillings
from .words import reverse, sort_word

LAM_ON_NW = "lam-on-NW"  # NW = lam, NE = sort(lam); S comes out as reverse(lam)
LAM_ON_S = "lam-on-S"  # S = lam, NW = sort(lam); NE comes out as reverse(lam)


class InfeasibleCorner(ValueError):
    pass


class CornerMismatch(ValueError):
    pass


class UnsupportedPieceSet(ValueError):
    pass


def identity_boundary(lam: str, orientation: str = LAM_ON_NW) -> BoundarySpec:
    if orientation == LAM_ON_NW:
        return triangle_boundary(lam, sort_word(lam), reverse(lam))
    if orientation == LAM_ON_S:
        return triangle_boundary(sort_word(lam), reverse(lam), lam)
    raise ValueError(f"unknown orientation {orientation!r}")


def identity_filling(lam: str, orientation: str = LAM_ON_NW, pieces: PieceSet = H) -> Filling:
    """The one filling of the identity triangle for ``lam``."""
    words.check(lam)
    found = enumerate_fillings(identity_boundary(lam, orientation), pieces)
    if len(found) != 1:
        raise InfeasibleCorner(f"{len(found)} fillings of the {orientation} triangle for {lam!r}")
    return found[0]


@dataclass(frozen=True)
class Corner:
    name: str  # "bl", "top" or "br"
    filling: Filling  # filling of the small identity triangle
    row_offset: int
    col_offset: int

    def cells(self) -> list[tuple]:
        """Corner placements moved into the big triangle's coordinates."""
        out = []
        for (kind, r, i), idx in self.filling.placements:
            out.append(((kind, r + self.row_offset, i + self.col_offset), idx))
        return out


@dataclass(frozen=True)
class CompletionMap:
    polygon: BoundarySpec
    triangle: BoundarySpec
    corners: tuple[Corner, ...]

    def corner_labels(self) -> dict:
        return {c.name: c.filling.boundary.sides for c in self.corners}


def completed_sides(b: BoundarySpec) -> tuple[str, str, str]:
    """(NW, NE, S) of the completed triangle."""
    al, be, ga, de, ep, ze = b.sides
    return (
        sort_word(al) + be + ga,
        sort_word(ga) + de + sort_word(ep),
        ep + ze + al,
    )


def complete_to_triangle(b: BoundarySpec) -> CompletionMap:
    if b.has_free_edges():
        raise InfeasibleCorner("cannot complete a boundary with free edges")
    al, _, ga, _, ep, _ = b.sides
    N = b.N
    corners = []
    if al:
        corners.append(Corner("bl", identity_filling(al, LAM_ON_S), N - len(al), 0))
    if ga:
        corners.append(Corner("top", identity_filling(ga, LAM_ON_NW), 0, 0))
    if ep:
        corners.append(Corner("br", identity_filling(reverse(ep), LAM_ON_NW), N - len(ep), N - len(ep)))
    tri = triangle_boundary(*completed_sides(b))
    return CompletionMap(b, tri, tuple(corners))


def _reindex(placements, src: PieceSet, dst: PieceSet):
    index = {p: k for k, p in enumerate(catalog(dst))}
    src_cat = catalog(src)
    return [(cell, index[src_cat[idx]]) for cell, idx in placements]


def _check_pieces(pieces: PieceSet, cm: CompletionMap) -> None:
    if pieces.k_nabla:
        raise UnsupportedPieceSet("corner fillings are not unique once the nabla piece is allowed")
    if pieces.equivariant and cm.polygon.cut_top:
        # a vertical rhombus can straddle the horizontal cut under the top corner
        raise UnsupportedPieceSet("equivariant completion needs a boundary without a top cut")


def glue(f: Filling, cm: CompletionMap) -> Filling:
    """Attach the corner fillings to a polygon filling."""
    _check_pieces(f.pieces, cm)
    if f.boundary != cm.polygon:
        raise ValueError("filling does not belong to this completion")
    placed = list(f.placements)
    for corner in cm.corners:
        placed += _reindex(corner.cells(), corner.filling.pieces, f.pieces)
    order = {c: k for k, c in enumerate(build_lattice(cm.triangle).cells)}
    placed.sort(key=lambda ci: order[ci[0]])
    return Filling(cm.triangle, f.pieces, tuple(placed))


def truncate(f: Filling, cm: CompletionMap) -> Filling:
    """Cut the corners off a filling of the completed triangle."""
    _check_pieces(f.pieces, cm)
    if f.boundary != cm.triangle:
        raise ValueError("filling is not of the completed triangle")
    have = dict(f.placements)
    corner_cells = set()
    for corner in cm.corners:
        for cell, idx in _reindex(corner.cells(), corner.filling.pieces, f.pieces):
            if have.get(cell) != idx:
                raise CornerMismatch(f"corner {corner.name} differs from its identity filling at {cell}")
            corner_cells.add(cell)
    kept = tuple((cell, idx) for cell, idx in f.placements if cell not in corner_cells)
    return Filling(cm.polygon, f.pieces, kept)


# -- the partially labelled pentagon ---------------------------------------


def pentagon_boundary(a0: int, a1: int, c0: int, c1: int) -> BoundarySpec:
    """NW = 0^c0 1^c1 and NE = 0^a0 1^a1; SE, S and SW left free."""
    sw = max(0, a1 - c1) + max(0, a0 - c0)
    se = max(0, c1 - a1) + max(0, c0 - a0)
    c = c0 + c1
    s_len = c - se
    return BoundarySpec.from_sides(
        ("?" * sw, "0" * c0 + "1" * c1, "", "0" * a0 + "1" * a1, "?" * se, "?" * s_len),
        "pentagon",
    )


def pentagon_prediction(a0: int, a1: int, c0: int, c1: int) -> tuple[str, str, str] | None:
    """Predicted (SE, S, SW) labels, or None when no filling should exist."""
    if c0 > a0 and a1 > c1:
        return None
    return (
        "1" * max(0, c1 - a1) + "0" * max(0, c0 - a0),
        "1" * min(a1, c1) + "0" * min(a0, c0),
        "1" * max(0, a1 - c1) + "0" * max(0, a0 - c0),
    )


def unique_pentagon_fill(a0: int, a1: int, c0: int, c1: int, pieces: PieceSet | None = None):
    """The unique filling and its (SE, S, SW) labels, or None if there is none.

    Raises ValueError if the search finds more than one filling.
    """
    pieces = pieces or PieceSet(k_delta=True)
    found = enumerate_fillings(pentagon_boundary(a0, a1, c0, c1), pieces)
    if not found:
        return None
    if len(found) > 1:
        raise ValueError(f"{len(found)} fillings of the pentagon {(a0, a1, c0, c1)}")
    f = found[0]
    sw, _, _, _, se, s = f.side_labels()
    return f, se, s, sw


def parallelogram_completion(al: str, ga: str, be: str, de: str) -> CompletionMap:
    return complete_to_triangle(polygon_boundary("parallelogram", (al, ga, be, de)))
