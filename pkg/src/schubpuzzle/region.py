"""Convex boundaries in the triangular lattice.

Every boundary is a size-N up triangle with three corner triangles cut away
(bottom-left, top, bottom-right).  Rows are numbered 1..N from the apex; row r
holds up cells U(r,1..r) and down cells D(r,1..r-1), interleaved as
U(r,1), D(r,1), U(r,2), ...

Every edge is named after the up cell that owns it: ``("R", r, i)`` is the
rising (left) edge of U(r,i), ``("F", r, i)`` its falling (right) edge and
``("H", r, i)`` its bottom edge.  D(r,i) therefore has left edge F(r,i), right
edge R(r,i+1) and top edge H(r-1,i).

Side labels are read clockwise starting at the SW side, one character per
edge: SW and NW upward, N left to right, NE and SE downward, S right to left.
A ``?`` in a side label leaves that edge free (0 or 1, never 10).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property, lru_cache

from . import words
from .pieces import ONE, ZERO

SIDE_NAMES = ("SW", "NW", "N", "NE", "SE", "S")

Cell = tuple  # ("U" | "D", r, i)
Edge = tuple  # ("R" | "F" | "H", r, i)


class InfeasibleShape(ValueError):
    pass


class LengthMismatch(InfeasibleShape):
    pass


def _check_label(s: str) -> str:
    if not isinstance(s, str) or s.strip("01?"):
        raise ValueError(f"bad side label {s!r}")
    return s


@dataclass(frozen=True)
class BoundarySpec:
    N: int
    cut_bl: int
    cut_top: int
    cut_br: int
    sides: tuple[str, str, str, str, str, str]
    kind: str = field(default="hexagon", compare=False)

    def __post_init__(self):
        a, c, e, N = self.cut_bl, self.cut_top, self.cut_br, self.N
        if min(a, c, e) < 0 or a + c > N or c + e > N or e + a > N:
            raise InfeasibleShape(f"cuts {(a, c, e)} do not fit in a size-{N} triangle")
        for name, s, n in zip(SIDE_NAMES, self.sides, self.side_lengths()):
            _check_label(s)
            if len(s) != n:
                raise InfeasibleShape(f"side {name} has length {len(s)}, expected {n}")

    def side_lengths(self) -> tuple[int, ...]:
        N, a, c, e = self.N, self.cut_bl, self.cut_top, self.cut_br
        return (a, N - a - c, c, N - c - e, e, N - e - a)

    @classmethod
    def from_sides(cls, sides, kind: str = "hexagon") -> "BoundarySpec":
        sides = tuple(_check_label(s) for s in sides)
        if len(sides) != 6:
            raise InfeasibleShape("need six sides")
        L = [len(s) for s in sides]
        N = L[0] + L[1] + L[2]
        a, c, e = L[0], L[2], L[4]
        if L[3] != N - c - e:
            raise InfeasibleShape(f"|SW|+|NW| = {L[0] + L[1]} but |NE|+|SE| = {L[3] + L[4]}")
        if L[5] != N - e - a:
            raise InfeasibleShape(f"|NW|+|N| = {L[1] + L[2]} but |SE|+|S| = {L[4] + L[5]}")
        return cls(N, a, c, e, sides, kind)

    @property
    def side(self) -> dict[str, str]:
        return dict(zip(SIDE_NAMES, self.sides))

    @property
    def is_triangle(self) -> bool:
        return self.cut_bl == self.cut_top == self.cut_br == 0

    def cell_count(self) -> int:
        return self.N**2 - self.cut_bl**2 - self.cut_top**2 - self.cut_br**2

    def has_free_edges(self) -> bool:
        return any("?" in s for s in self.sides)

    def compact(self) -> str:
        if self.is_triangle:
            return "tri:" + ",".join(s or "-" for s in (self.sides[1], self.sides[3], self.sides[5]))
        return "hex:" + ",".join(s or "-" for s in self.sides)

    def to_json(self) -> dict:
        return {"shape": self.kind, "N": self.N, "sides": self.side}

    def __str__(self) -> str:
        return self.compact()


def triangle_boundary(lam: str, mu: str, nu: str) -> BoundarySpec:
    """The triangle with NW = lam, NE = mu, S = nu."""
    if not len(lam) == len(mu) == len(nu):
        raise LengthMismatch(f"triangle sides have lengths {len(lam)}, {len(mu)}, {len(nu)}")
    return BoundarySpec.from_sides(("", lam, "", mu, "", nu), "triangle")


_KIND_LAYOUT = {
    # positions of the given labels among (SW, NW, N, NE, SE, S)
    "triangle": (1, 3, 5),
    "trapezoid": (0, 1, 3, 5),
    "parallelogram": (0, 1, 3, 4),
    "rhombus": (0, 1, 3, 4),
    "pentagon": (1, 2, 3, 4, 5),
    "hexagon": (0, 1, 2, 3, 4, 5),
}


def polygon_boundary(kind: str, labels) -> BoundarySpec:
    """Place labels clockwise on a degenerate hexagon.

    trapezoid(b, g, n, d): SW=b, NW=g, NE=n, S=d.
    parallelogram(a, g, b, d): SW=a, NW=g, NE=b, SE=d.
    pentagon(b, g, d, e, z): NW=b, N=g, NE=d, SE=e, S=z.
    """
    if kind not in _KIND_LAYOUT:
        raise ValueError(f"unknown boundary kind {kind!r}")
    slots = _KIND_LAYOUT[kind]
    labels = tuple(labels)
    if len(labels) != len(slots):
        raise ValueError(f"{kind} takes {len(slots)} labels, got {len(labels)}")
    sides = [""] * 6
    for pos, lab in zip(slots, labels):
        sides[pos] = lab
    return BoundarySpec.from_sides(sides, kind)


def content_feasible(b: BoundarySpec) -> tuple[bool, str]:
    """Necessary content conditions for a filling to exist.

    Around a filled region, each pair of adjacent sides must balance the
    opposite pair: |b|+|c| = |e|+|z|, |a|+|b| = |d|+|e|, |c|+|d| = |z|+|a|
    in content, sides named a..z clockwise from SW.  For a triangle these say
    all three sides share one content, for a trapezoid that the legs match
    and the long base carries the sum of the other two.
    """
    if b.has_free_edges():
        return True, "free edges present; not checked"
    a, bb, c, d, e, z = (words.content(s) for s in b.sides)
    checks = (
        ("NW+N = SE+S", bb + c, e + z),
        ("SW+NW = NE+SE", a + bb, d + e),
        ("N+NE = S+SW", c + d, z + a),
    )
    for name, lhs, rhs in checks:
        if lhs != rhs:
            return False, f"content identity {name} fails: {tuple(lhs)} != {tuple(rhs)}"
    return True, "ok"


def rotate_boundary(b: BoundarySpec, sixths: int) -> BoundarySpec:
    """Counterclockwise turn by ``sixths`` * 60 degrees (sides shift cyclically)."""
    s = sixths % 6
    sides = b.sides[s:] + b.sides[:s]
    kind = b.kind if s % 2 == 0 else "hexagon"
    return BoundarySpec.from_sides(sides, kind)


def dual_boundary(b: BoundarySpec) -> BoundarySpec:
    al, be, ga, de, ep, ze = b.sides
    d = _dual_free
    return BoundarySpec.from_sides((d(ep), d(de), d(ga), d(be), d(al), d(ze)), b.kind)


def _dual_free(s: str) -> str:
    return s[::-1].translate(str.maketrans("01", "10"))


# -- lattice --------------------------------------------------------------


def cell_in_region(b: BoundarySpec, cell: Cell) -> bool:
    kind, r, i = cell
    N, a, c, e = b.N, b.cut_bl, b.cut_top, b.cut_br
    if r <= c or r > N:
        return False
    last = r if kind == "U" else r - 1
    if i < 1 or i > last:
        return False
    # corner cuts: row r = N - a + j holds j up cells (and j-1 downs) of the cut
    j = r - (N - a)
    if j > 0 and i <= (j if kind == "U" else j - 1):
        return False
    j = r - (N - e)
    if j > 0 and i >= r - j + 1:
        return False
    return True


def cell_edges(cell: Cell) -> tuple[Edge, Edge, Edge]:
    """(rising, falling, horizontal) edges of a cell."""
    kind, r, i = cell
    if kind == "U":
        return ("R", r, i), ("F", r, i), ("H", r, i)
    return ("R", r, i + 1), ("F", r, i), ("H", r - 1, i)


def boundary_edges(b: BoundarySpec) -> list[tuple[str, int, Edge]]:
    """(side name, position in its label, edge) in clockwise reading order."""
    N, a, c, e = b.N, b.cut_bl, b.cut_top, b.cut_br
    lengths = b.side_lengths()
    out = []
    for p in range(lengths[0]):
        j = a - p
        out.append(("SW", p, ("F", N - a + j, j)))
    for p in range(lengths[1]):
        out.append(("NW", p, ("R", N - a - p, 1)))
    for p in range(lengths[2]):
        out.append(("N", p, ("H", c, p + 1)))
    for p in range(lengths[3]):
        r = c + 1 + p
        out.append(("NE", p, ("F", r, r)))
    for p in range(lengths[4]):
        j = p + 1
        r = N - e + j
        out.append(("SE", p, ("R", r, r - j + 1)))
    for p in range(lengths[5]):
        out.append(("S", p, ("H", N, N - e - p)))
    return out


_CHAR_LABEL = {"0": ZERO, "1": ONE, "?": None}


@dataclass(frozen=True)
class Lattice:
    boundary: BoundarySpec
    rows: tuple[tuple[Cell, ...], ...]
    boundary_assignment: dict  # Edge -> label, or None for a free edge
    # set when a zero-area region makes two sides share an edge with
    # different labels
    conflict: bool = False

    @cached_property
    def cells(self) -> tuple[Cell, ...]:
        return tuple(c for row in self.rows for c in row)

    @cached_property
    def incidence(self) -> dict:
        inc: dict = {}
        for cell in self.cells:
            for edge in cell_edges(cell):
                inc.setdefault(edge, []).append(cell)
        return inc

    @property
    def edges(self) -> tuple[Edge, ...]:
        return tuple(self.incidence)

    def interior_edges(self) -> list[Edge]:
        return [e for e, cs in self.incidence.items() if len(cs) == 2]

    def outer_edges(self) -> list[Edge]:
        return [e for e, cs in self.incidence.items() if len(cs) == 1]


@lru_cache(maxsize=4096)
def build_lattice(b: BoundarySpec) -> Lattice:
    rows = []
    for r in range(1, b.N + 1):
        row = []
        for i in range(1, r + 1):
            for cell in (("U", r, i), ("D", r, i)):
                if cell_in_region(b, cell):
                    row.append(cell)
        if row:
            rows.append(tuple(row))
    sides = b.side
    assignment: dict = {}
    conflict = False
    for name, p, edge in boundary_edges(b):
        lab = _CHAR_LABEL[sides[name][p]]
        old = assignment.get(edge)
        if edge in assignment and old is not None and lab is not None and old != lab:
            conflict = True
        if old is None:
            assignment[edge] = lab
    return Lattice(b, tuple(rows), assignment, conflict)
