"""Exact enumeration of Schubert puzzles on triangular-lattice polygons.

The usual entry points::

    from schubpuzzle import triangle_boundary, count, H
    count(triangle_boundary("1010", "0101", "0011"), H)   # 1
"""

from .lrcalc import lr_coeff, lr_coeff_padded
from .pieces import H, H_DELTA, H_EQVT, H_NABLA, Piece, PieceSet, catalog, dual_piece, rotate_piece
from .poly import Poly
from .region import (
    BoundarySpec,
    InfeasibleShape,
    build_lattice,
    content_feasible,
    dual_boundary,
    polygon_boundary,
    rotate_boundary,
    triangle_boundary,
)
from .tiler import Filling, count, dual_filling, enumerate_fillings, rotate_filling, weight_sum

__all__ = [
    "BoundarySpec", "Filling", "H", "H_DELTA", "H_EQVT", "H_NABLA", "InfeasibleShape", "Piece",
    "PieceSet", "Poly", "build_lattice", "catalog", "content_feasible", "count", "dual_boundary",
    "dual_filling", "dual_piece", "enumerate_fillings", "lr_coeff", "lr_coeff_padded",
    "polygon_boundary", "rotate_boundary", "rotate_filling", "rotate_piece", "triangle_boundary",
    "weight_sum",
]
