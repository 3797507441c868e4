"""Puzzle pieces and the selectable piece catalogs.

Triangle edges are named by lattice direction, so up and down triangles share
one vocabulary: ``rising`` is a "/" edge, ``falling`` a "\\" edge and
``horizontal`` the flat one.  On an up triangle these are its NW, NE and S
edges; on a down triangle they are its SE, SW and N edges.

The equivariant rhombus is an up triangle stacked on the down triangle below
it, labelled clockwise from its NW edge.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache

ZERO, ONE, TEN = 0, 1, 2
LABEL_TEXT = {ZERO: "0", ONE: "1", TEN: "10"}
TEXT_LABEL = {v: k for k, v in LABEL_TEXT.items()}


class Shape(enum.Enum):
    UP = "up"
    DOWN = "down"
    RHOMBUS = "rhombus"


class Tag(enum.Enum):
    UNIT = "unit"
    SIGN = "sign"  # weight -1
    EQUIVARIANT = "equivariant"


TRIANGLE_SLOTS = ("rising", "falling", "horizontal")
RHOMBUS_SLOTS = ("NW", "NE", "SE", "SW")


class Unrotatable(ValueError):
    pass


@dataclass(frozen=True)
class Piece:
    shape: Shape
    labels: tuple[int, ...]
    tag: Tag = Tag.UNIT

    @property
    def slots(self) -> tuple[str, ...]:
        return RHOMBUS_SLOTS if self.shape is Shape.RHOMBUS else TRIANGLE_SLOTS

    def label(self, slot: str) -> int:
        return self.labels[self.slots.index(slot)]

    def to_json(self) -> dict:
        return {
            "shape": self.shape.value,
            "labels": {s: LABEL_TEXT[x] for s, x in zip(self.slots, self.labels)},
            "weight_tag": self.tag.value,
        }

    def __str__(self) -> str:
        body = ",".join(LABEL_TEXT[x] for x in self.labels)
        return f"{self.shape.value}({body})"


BASE_TRIPLES = (
    (ZERO, ZERO, ZERO),
    (ONE, ONE, ONE),
    (ONE, ZERO, TEN),
    (TEN, ONE, ZERO),
    (ZERO, TEN, ONE),
)

EQUIVARIANT_RHOMBUS = Piece(Shape.RHOMBUS, (ZERO, ONE, ZERO, ONE), Tag.EQUIVARIANT)
K_DELTA = Piece(Shape.UP, (TEN, TEN, TEN), Tag.SIGN)
K_NABLA = Piece(Shape.DOWN, (TEN, TEN, TEN), Tag.SIGN)


@dataclass(frozen=True)
class PieceSet:
    equivariant: bool = False
    k_delta: bool = False
    k_nabla: bool = False

    @classmethod
    def parse(cls, text: str) -> "PieceSet":
        """Accept ``H``, ``H+eqvt``, ``H+delta``, ``H+nabla`` and combinations."""
        parts = [p.strip().lower() for p in text.split("+")]
        if not parts or parts[0] != "h":
            raise ValueError(f"piece set must start with H: {text!r}")
        flags = {"eqvt": "equivariant", "delta": "k_delta", "nabla": "k_nabla"}
        kw = {}
        for p in parts[1:]:
            if p not in flags:
                raise ValueError(f"unknown piece flag {p!r} in {text!r}")
            kw[flags[p]] = True
        return cls(**kw)

    def __str__(self) -> str:
        out = "H"
        if self.equivariant:
            out += "+eqvt"
        if self.k_delta:
            out += "+delta"
        if self.k_nabla:
            out += "+nabla"
        return out


H = PieceSet()
H_EQVT = PieceSet(equivariant=True)
H_DELTA = PieceSet(k_delta=True)
H_NABLA = PieceSet(k_nabla=True)


@lru_cache(maxsize=None)
def catalog(pieces: PieceSet) -> tuple[Piece, ...]:
    out = [Piece(Shape.UP, t) for t in BASE_TRIPLES]
    out += [Piece(Shape.DOWN, t) for t in BASE_TRIPLES]
    if pieces.equivariant:
        out.append(EQUIVARIANT_RHOMBUS)
    if pieces.k_delta:
        out.append(K_DELTA)
    if pieces.k_nabla:
        out.append(K_NABLA)
    return tuple(out)


def rotate_piece(p: Piece, sixths: int) -> Piece:
    """Turn a triangle clockwise by ``sixths`` * 60 degrees.

    A clockwise sixth carries the rising direction onto the horizontal one,
    the horizontal onto the falling one and the falling onto the rising one,
    and flips the triangle between up and down.
    """
    s = sixths % 6
    if p.shape is Shape.RHOMBUS:
        if s:
            raise Unrotatable("the equivariant rhombus is never rotated on its own")
        return p
    rising, falling, horizontal = p.labels
    shape = p.shape
    for _ in range(s):
        rising, falling, horizontal = falling, horizontal, rising
        shape = Shape.DOWN if shape is Shape.UP else Shape.UP
    return Piece(shape, (rising, falling, horizontal), p.tag)


def _swap01(x: int) -> int:
    return {ZERO: ONE, ONE: ZERO, TEN: TEN}[x]


def dual_piece(p: Piece) -> Piece:
    """Mirror across the vertical axis and exchange 0 with 1."""
    if p.shape is Shape.RHOMBUS:
        nw, ne, se, sw = p.labels
        return Piece(p.shape, tuple(map(_swap01, (ne, nw, sw, se))), p.tag)
    rising, falling, horizontal = p.labels
    return Piece(p.shape, tuple(map(_swap01, (falling, rising, horizontal))), p.tag)
