"""Enumerate, count and weigh puzzle fillings.

The search runs one lattice row at a time.  Between rows the only thing
that matters is the label on each horizontal edge crossing the row gap, or
the fact that an equivariant rhombus reaches through it, so the rows below
are solved once per distinct state and memoized.  Enumeration walks the
same per-row search in canonical order and uses the memo only to skip dead
branches, so counts always equal ``len(enumerate(...))``.

The memo key includes the boundary labels of every remaining row, which
lets sweeps over many boundaries share the work for common lower parts.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from functools import cached_property
from typing import Iterator, NamedTuple, Union

from . import poly as _poly
from .pieces import (
    ONE,
    TEN,
    ZERO,
    Piece,
    PieceSet,
    Shape,
    Tag,
    Unrotatable,
    catalog,
    dual_piece,
)
from .region import (
    BoundarySpec,
    Lattice,
    build_lattice,
    cell_edges,
    dual_boundary,
    rotate_boundary,
)

Poly = _poly.Poly
Weight = Union[int, Poly]

CLAIMED = 3  # row-gap marker: the rhombus above owns the down cell below

# per-cell edge sources inside a compiled row
_FROM_LEFT = ("carry",)
_TO_RIGHT = ("carry",)


def _fixed(label):
    return ("fixed", label)


class EqIndexPair(NamedTuple):
    i: int
    j: int


def equivariant_indices(r: int, i: int, n: int) -> EqIndexPair:
    """Variable indices for a rhombus anchored at U(r,i) in a size-n triangle.

    The rays drawn down-left and down-right from the rhombus hit the bottom
    edge at positions i and i + (n - r).
    """
    return EqIndexPair(i, i + n - r)


def rhombus_weight(r: int, i: int, n: int) -> Poly:
    lo, hi = equivariant_indices(r, i, n)
    return Poly.diff(hi, lo)


# -- compiled rows ----------------------------------------------------------


class _RowProgram(NamedTuple):
    r: int
    n: int
    # one entry per cell in scan order:
    # ("U", i, rising_src, bottom, falling_sink) with bottom ("fixed", lab)
    #    or ("out", k) when the bottom edge continues into the next row
    # ("D", i, left_src, top, right_sink) with top ("fixed", lab) or ("in", k)
    cells: tuple
    out_width: int


def _compile_rows(lat: Lattice) -> tuple[_RowProgram, ...]:
    bnd = lat.boundary_assignment
    n = lat.boundary.N
    programs = []
    prev_out: dict[int, int] = {}
    for row in lat.rows:
        r = row[0][1]
        out_pos: dict[int, int] = {}
        entries = []
        for kind, _, i in row:
            rising, falling, horiz = cell_edges((kind, r, i))
            if kind == "U":
                rs = _fixed(bnd[rising]) if rising in bnd else _FROM_LEFT
                fs = _fixed(bnd[falling]) if falling in bnd else _TO_RIGHT
                if horiz in bnd:
                    hs = _fixed(bnd[horiz])
                else:
                    out_pos[i] = len(out_pos)
                    hs = ("out", out_pos[i])
                entries.append(("U", i, rs, hs, fs))
            else:
                ls = _fixed(bnd[falling]) if falling in bnd else _FROM_LEFT
                rt = _fixed(bnd[rising]) if rising in bnd else _TO_RIGHT
                ts = _fixed(bnd[horiz]) if horiz in bnd else ("in", prev_out[i])
                entries.append(("D", i, ls, ts, rt))
        programs.append(_RowProgram(r, n, tuple(entries), len(out_pos)))
        prev_out = out_pos
    return tuple(programs)


class _Tables:
    """Catalog lookups keyed by the labels the row search already knows."""

    def __init__(self, pieces: PieceSet):
        cat = catalog(pieces)
        self.catalog = cat
        self.up_by_rising: dict[int, list] = {ZERO: [], ONE: [], TEN: []}
        self.down_by_left_top: dict[tuple, list] = {}
        self.rhombus = None
        for idx, p in enumerate(cat):
            if p.shape is Shape.UP:
                rising, falling, horiz = p.labels
                self.up_by_rising[rising].append((idx, falling, horiz, p.tag is Tag.SIGN))
            elif p.shape is Shape.DOWN:
                rising, falling, horiz = p.labels
                self.down_by_left_top.setdefault((falling, horiz), []).append(
                    (idx, rising, p.tag is Tag.SIGN)
                )
            else:
                # the rhombus's up half: rising 0, falling 1, bottom claimed
                self.rhombus = idx
                self.up_by_rising[ZERO].append((idx, ONE, CLAIMED, False))


_TABLES: dict[PieceSet, _Tables] = {}


def _tables(pieces: PieceSet) -> _Tables:
    t = _TABLES.get(pieces)
    if t is None:
        t = _TABLES[pieces] = _Tables(pieces)
    return t


def _accepts(edge_label, piece_label) -> bool:
    if edge_label is None:
        return piece_label != TEN
    return edge_label == piece_label


class _Step(NamedTuple):
    out: tuple  # labels passed to the next row
    placements: tuple  # ((cell, piece index), ...) in scan order
    signs: int  # number of weight -1 pieces
    rhombi: tuple  # ((r, i), ...)


def _row_steps(prog: _RowProgram, state: tuple, tab: _Tables) -> list[_Step]:
    """All ways to fill one row given the labels coming down from above."""
    cells = prog.cells
    ncell = len(cells)
    r = prog.r
    steps: list[_Step] = []
    out = [None] * prog.out_width
    placed: list = []
    rhombi: list = []

    def go(k: int, carry, signs: int):
        if k == ncell:
            steps.append(_Step(tuple(out), tuple(placed), signs, tuple(rhombi)))
            return
        kind, i, src, mid, sink = cells[k]
        if kind == "U":
            if src is _FROM_LEFT:
                candidates = tab.up_by_rising[carry]
            elif src[1] is None:
                candidates = sorted(tab.up_by_rising[ZERO] + tab.up_by_rising[ONE])
            else:
                candidates = tab.up_by_rising[src[1]]
            for idx, falling, horiz, neg in candidates:
                if sink is not _TO_RIGHT and not _accepts(sink[1], falling):
                    continue
                if horiz == CLAIMED:
                    if mid[0] != "out":
                        continue
                    out[mid[1]] = CLAIMED
                    rhombi.append((r, i))
                elif mid[0] == "out":
                    out[mid[1]] = horiz
                elif not _accepts(mid[1], horiz):
                    continue
                placed.append((("U", r, i), idx))
                go(k + 1, falling, signs + neg)
                placed.pop()
                if horiz == CLAIMED:
                    rhombi.pop()
        else:
            if src is _FROM_LEFT:
                lefts = (carry,)
            elif src[1] is None:
                lefts = (ZERO, ONE)
            else:
                lefts = (src[1],)
            if mid[0] == "in":
                top = state[mid[1]]
                if top == CLAIMED:
                    # lower half of a rhombus: SW label 1, SE label 0
                    if ONE in lefts and (sink is _TO_RIGHT or _accepts(sink[1], ZERO)):
                        go(k + 1, ZERO, signs)
                    return
                tops = (top,)
            elif mid[1] is None:
                tops = (ZERO, ONE)
            else:
                tops = (mid[1],)
            candidates = []
            for left in lefts:
                for top in tops:
                    candidates.extend(tab.down_by_left_top.get((left, top), ()))
            if len(lefts) > 1 or len(tops) > 1:
                candidates.sort()
            for idx, rising, neg in candidates:
                if sink is not _TO_RIGHT and not _accepts(sink[1], rising):
                    continue
                placed.append((("D", r, i), idx))
                go(k + 1, rising, signs + neg)
                placed.pop()

    go(0, None, 0)
    return steps


# -- memo ------------------------------------------------------------------

_STEP_MEMO: dict = {}
_VALUE_MEMO: dict = {}
_PROGRAM_IDS: dict = {}
_SUFFIX_IDS: dict = {}


def clear_caches() -> None:
    _STEP_MEMO.clear()
    _VALUE_MEMO.clear()
    _PROGRAM_IDS.clear()
    _SUFFIX_IDS.clear()


def cache_size() -> int:
    return len(_STEP_MEMO) + len(_VALUE_MEMO)


class _Plan:
    """Compiled rows of one boundary, with interned suffix keys."""

    def __init__(self, b: BoundarySpec):
        self.boundary = b
        self.lattice = build_lattice(b)
        self.programs = _compile_rows(self.lattice)
        pids = []
        for prog in self.programs:
            pid = _PROGRAM_IDS.get(prog)
            if pid is None:
                pid = _PROGRAM_IDS[prog] = len(_PROGRAM_IDS)
            pids.append(pid)
        suffix = [None] * (len(pids) + 1)
        nxt = -1
        for k in range(len(pids) - 1, -1, -1):
            key = (pids[k], nxt)
            sid = _SUFFIX_IDS.get(key)
            if sid is None:
                sid = _SUFFIX_IDS[key] = len(_SUFFIX_IDS)
            suffix[k] = nxt = sid
        self.pids = pids
        self.suffix = suffix


def _steps(plan: _Plan, k: int, state: tuple, tab: _Tables, pieces: PieceSet) -> list[_Step]:
    key = (pieces, plan.pids[k], state)
    s = _STEP_MEMO.get(key)
    if s is None:
        s = _STEP_MEMO[key] = _row_steps(plan.programs[k], state, tab)
    return s


_MODES = ("count", "sign", "eqvt")


def _step_weight(step: _Step, mode: str, n: int):
    if mode == "count":
        return 1
    if mode == "sign":
        return -1 if step.signs % 2 else 1
    w = Poly.const(-1 if step.signs % 2 else 1)
    for r, i in step.rhombi:
        w = w * rhombus_weight(r, i, n)
    return w


def _value(plan: _Plan, k: int, state: tuple, tab: _Tables, pieces: PieceSet, mode: str):
    if plan.lattice.conflict:
        return 0
    if k == len(plan.programs):
        return 1
    key = (mode, pieces, plan.suffix[k], state)
    v = _VALUE_MEMO.get(key)
    if v is not None:
        return v
    total = 0
    n = plan.boundary.N
    for step in _steps(plan, k, state, tab, pieces):
        below = _value(plan, k + 1, step.out, tab, pieces, mode)
        if mode == "count":
            total += below
        elif below != 0:
            total = total + _step_weight(step, mode, n) * below
    _VALUE_MEMO[key] = total
    return total


def _prepare(b: BoundarySpec, pieces: PieceSet):
    return _Plan(b), _tables(pieces)


# -- public API --------------------------------------------------------------


@dataclass(frozen=True)
class Filling:
    boundary: BoundarySpec
    pieces: PieceSet
    placements: tuple  # ((cell, catalog index), ...) in scan order; rhombi at their up cell

    @cached_property
    def piece_map(self) -> dict:
        return dict(self.placements)

    def piece(self, cell) -> Piece:
        return catalog(self.pieces)[self.piece_map[cell]]

    def pieces_used(self) -> list[Piece]:
        cat = catalog(self.pieces)
        return [cat[idx] for _, idx in self.placements]

    def rhombus_anchors(self) -> list[tuple[int, int]]:
        return [
            (cell[1], cell[2])
            for cell, idx in self.placements
            if catalog(self.pieces)[idx].shape is Shape.RHOMBUS
        ]

    def only_base_pieces(self) -> bool:
        return all(p.tag is Tag.UNIT and p.shape is not Shape.RHOMBUS for p in self.pieces_used())

    def covered_cells(self) -> dict:
        """cell -> (anchor cell, piece) for every cell, rhombus halves included."""
        out = {}
        for cell, idx in self.placements:
            p = catalog(self.pieces)[idx]
            out[cell] = (cell, p)
            if p.shape is Shape.RHOMBUS:
                out[("D", cell[1] + 1, cell[2])] = (cell, p)
        return out

    def edge_labels(self) -> dict:
        """Labels on every edge; raises ValueError on a mismatch."""
        labels: dict = {}

        def put(edge, lab):
            old = labels.setdefault(edge, lab)
            if old != lab:
                raise ValueError(f"edge {edge} labelled {old} and {lab}")

        for cell, idx in self.placements:
            p = catalog(self.pieces)[idx]
            if p.shape is Shape.RHOMBUS:
                _, r, i = cell
                nw, ne, se, sw = p.labels
                put(("R", r, i), nw)
                put(("F", r, i), ne)
                put(("R", r + 1, i + 1), se)
                put(("F", r + 1, i), sw)
            else:
                for edge, lab in zip(cell_edges(cell), p.labels):
                    put(edge, lab)
        return labels

    def side_labels(self) -> tuple[str, ...]:
        """The six side strings read off the filling (useful with free edges)."""
        from .region import boundary_edges

        labels = self.edge_labels()
        fixed = build_lattice(self.boundary).boundary_assignment
        sides = {name: [] for name in ("SW", "NW", "N", "NE", "SE", "S")}
        for name, _, edge in boundary_edges(self.boundary):
            lab = labels.get(edge, fixed[edge])
            sides[name].append("01"[lab] if lab in (ZERO, ONE) else "?")
        return tuple("".join(sides[k]) for k in ("SW", "NW", "N", "NE", "SE", "S"))

    def validate(self) -> None:
        lat = build_lattice(self.boundary)
        cover = self.covered_cells()
        if set(cover) != set(lat.cells) or len(cover) != len(lat.cells):
            raise ValueError("placements do not tile the region")
        if len(cover) != sum(
            2 if catalog(self.pieces)[idx].shape is Shape.RHOMBUS else 1
            for _, idx in self.placements
        ):
            raise ValueError("overlapping placements")
        labels = self.edge_labels()
        if lat.conflict:
            raise ValueError("boundary sides that share edges disagree")
        for edge, want in lat.boundary_assignment.items():
            if edge not in labels:
                continue  # an edge of a zero-area region
            got = labels[edge]
            if got == TEN or (want is not None and got != want):
                raise ValueError(f"boundary edge {edge} has {got}, expected {want}")

    def weight(self, mode: str | None = None) -> Weight:
        mode = mode or _mode_for(self.pieces)
        signs = sum(p.tag is Tag.SIGN for p in self.pieces_used())
        if mode == "count":
            return 1
        if mode == "sign":
            return -1 if signs % 2 else 1
        w = Poly.const(-1 if signs % 2 else 1)
        for r, i in self.rhombus_anchors():
            w = w * rhombus_weight(r, i, self.boundary.N)
        return w

    def key(self) -> tuple:
        return tuple(idx for _, idx in self.placements)

    def to_json(self) -> list:
        cat = catalog(self.pieces)
        return [
            {"cell": f"{cell[0]}({cell[1]},{cell[2]})", "piece": cat[idx].to_json()}
            for cell, idx in self.placements
        ]


def _mode_for(pieces: PieceSet) -> str:
    if pieces.equivariant:
        return "eqvt"
    if pieces.k_delta or pieces.k_nabla:
        return "sign"
    return "count"


def _walk(plan: _Plan, k: int, state: tuple, tab: _Tables, pieces: PieceSet, prefix: tuple):
    if plan.lattice.conflict:
        return
    if k == len(plan.programs):
        yield prefix
        return
    for step in _steps(plan, k, state, tab, pieces):
        if _value(plan, k + 1, step.out, tab, pieces, "count") == 0:
            continue
        yield from _walk(plan, k + 1, step.out, tab, pieces, prefix + step.placements)


def iter_fillings(b: BoundarySpec, pieces: PieceSet) -> Iterator[Filling]:
    plan, tab = _prepare(b, pieces)
    for placements in _walk(plan, 0, (), tab, pieces, ()):
        yield Filling(b, pieces, placements)


def enumerate_fillings(b: BoundarySpec, pieces: PieceSet, threads: int = 1) -> list[Filling]:
    """All fillings in canonical order.

    With ``threads > 1`` the first row's branches are searched by a pool and
    concatenated back in branch order, so the result never depends on the
    thread count.
    """
    if threads <= 1:
        return list(iter_fillings(b, pieces))
    plan, tab = _prepare(b, pieces)
    if not plan.programs:
        return list(iter_fillings(b, pieces))
    first = _steps(plan, 0, (), tab, pieces)

    def branch(step):
        return [
            Filling(b, pieces, placements)
            for placements in _walk(plan, 1, step.out, tab, pieces, step.placements)
        ]

    with ThreadPoolExecutor(max_workers=threads) as pool:
        parts = list(pool.map(branch, first))
    return [f for part in parts for f in part]


def count(b: BoundarySpec, pieces: PieceSet) -> int:
    plan, tab = _prepare(b, pieces)
    return _value(plan, 0, (), tab, pieces, "count")


def count_naive(b: BoundarySpec, pieces: PieceSet) -> int:
    """Count by plain backtracking over cells, with no memo at all."""
    lat = build_lattice(b)
    if lat.conflict:
        return 0
    cat = catalog(pieces)
    bnd = lat.boundary_assignment
    cells = lat.cells
    labels: dict = {}
    claimed: set = set()

    def fits(edge, lab):
        if edge in bnd:
            return _accepts(bnd[edge], lab)
        have = labels.get(edge)
        return have is None or have == lab

    def go(k):
        if k == len(cells):
            return 1
        cell = cells[k]
        if cell in claimed:
            return go(k + 1)
        total = 0
        for p in cat:
            if p.shape is Shape.RHOMBUS:
                if cell[0] != "U":
                    continue
                _, r, i = cell
                below = ("D", r + 1, i)
                if below not in lat.incidence.get(("H", r, i), ()):
                    continue
                edges = (("R", r, i), ("F", r, i), ("R", r + 1, i + 1), ("F", r + 1, i))
                claim = below
            else:
                if (p.shape is Shape.UP) != (cell[0] == "U"):
                    continue
                edges = cell_edges(cell)
                claim = None
            if not all(fits(e, lab) for e, lab in zip(edges, p.labels)):
                continue
            added = [e for e in edges if e not in labels]
            for e, lab in zip(edges, p.labels):
                labels.setdefault(e, lab)
            if claim:
                claimed.add(claim)
            total += go(k + 1)
            if claim:
                claimed.discard(claim)
            for e in added:
                del labels[e]
        return total

    return go(0)


def weight_sum(b: BoundarySpec, pieces: PieceSet) -> Weight:
    """Sum of filling weights: a count, a signed count, or a polynomial."""
    plan, tab = _prepare(b, pieces)
    mode = _mode_for(pieces)
    total = _value(plan, 0, (), tab, pieces, mode)
    if mode == "eqvt" and isinstance(total, int):
        total = Poly.const(total)
    return total


# -- symmetries of fillings ---------------------------------------------------


def _vertices(cell) -> tuple:
    # vertex (row y, position x) of the size-N triangle, apex (0, 0)
    kind, r, i = cell
    if kind == "U":
        return ((r - 1, i - 1), (r, i - 1), (r, i))
    return ((r - 1, i - 1), (r - 1, i), (r, i))


def _cell_from_vertices(vs) -> tuple:
    ys = sorted(y for y, _ in vs)
    if ys[1] == ys[2]:
        r = ys[2]
        i = max(x for y, x in vs if y == r)
        return ("U", r, i)
    r = ys[2]
    i = next(x for y, x in vs if y == r)
    return ("D", r, i)


def _edge_direction(p, q) -> str:
    dy, dx = q[0] - p[0], q[1] - p[1]
    if dy == 0:
        return "horizontal"
    if dx == 0:
        return "rising"  # from (y, x) to (y+1, x): down-left, i.e. a "/" edge
    return "falling"


def _ccw(v):
    # Vertex (y, x) sits at x*A + y*B with A = (1, 0) and B = (-1/2, sqrt3/2)
    # on screen (y down).  A clockwise sixth sends A -> A+B and B -> -A; this
    # is its inverse.
    y, x = v
    return (y - x, y)


def _transform_filling(f: Filling, new_b: BoundarySpec, new_pieces: PieceSet, vmap) -> Filling:
    """Move every placement through a lattice symmetry ``vmap`` on vertices."""
    labels = f.edge_labels()
    cover = []
    for cell, idx in f.placements:
        p = catalog(f.pieces)[idx]
        halves = [cell]
        if p.shape is Shape.RHOMBUS:
            halves.append(("D", cell[1] + 1, cell[2]))
        cover.append((halves, p))
    # translation so the image lands on the new region
    moved = [vmap(v) for halves, _ in cover for h in halves for v in _vertices(h)]
    new_lat = build_lattice(new_b)
    target = [v for c in new_lat.cells for v in _vertices(c)]
    if not moved:
        return Filling(new_b, new_pieces, ())
    dy = min(y for y, _ in target) - min(y for y, _ in moved)
    dx = min(x for _, x in target) - min(x for _, x in moved)

    def place(v):
        y, x = vmap(v)
        return (y + dy, x + dx)

    new_cat = catalog(new_pieces)
    index = {p: k for k, p in enumerate(new_cat)}
    out = {}
    for halves, p in cover:
        new_cells = [_cell_from_vertices([place(v) for v in _vertices(h)]) for h in halves]
        if p.shape is Shape.RHOMBUS:
            anchor = next(c for c in new_cells if c[0] == "U")
            out[anchor] = index[p]
            continue
        (old,) = halves
        (new,) = new_cells
        by_dir = {}
        vs = _vertices(old)
        for a, b_ in ((0, 1), (1, 2), (0, 2)):
            edge = _edge_between(old, vs[a], vs[b_])
            by_dir[_edge_direction(place(vs[a]), place(vs[b_]))] = labels[edge]
        shape = Shape.UP if new[0] == "U" else Shape.DOWN
        newp = Piece(shape, (by_dir["rising"], by_dir["falling"], by_dir["horizontal"]), p.tag)
        if newp not in index:
            raise Unrotatable(f"{newp} is not in piece set {new_pieces}")
        out[new] = index[newp]
    order = {c: k for k, c in enumerate(new_lat.cells)}
    placements = tuple(sorted(out.items(), key=lambda ci: order[ci[0]]))
    g = Filling(new_b, new_pieces, placements)
    g.validate()
    return g


def _edge_between(cell, p, q):
    d = _edge_direction(*sorted((p, q)))
    rising, falling, horiz = cell_edges(cell)
    return {"rising": rising, "falling": falling, "horizontal": horiz}[d]


def rotated_pieces(pieces: PieceSet, sixths: int) -> PieceSet:
    s = sixths % 6
    if pieces.equivariant and s % 3:
        raise Unrotatable("equivariant fillings only turn by 180 degrees")
    if s % 2:
        return PieceSet(pieces.equivariant, pieces.k_nabla, pieces.k_delta)
    return pieces


def rotate_filling(f: Filling, sixths: int) -> Filling:
    """Counterclockwise turn, matching ``rotate_boundary``."""
    s = sixths % 6
    new_pieces = rotated_pieces(f.pieces, s)
    new_b = rotate_boundary(f.boundary, s)

    def vmap(v):
        for _ in range(s):
            v = _ccw(v)
        return v

    return _transform_filling(f, new_b, new_pieces, vmap)


def dual_filling(f: Filling) -> Filling:
    """Mirror left-right and exchange 0 with 1."""
    new_b = dual_boundary(f.boundary)
    new_pieces = PieceSet(f.pieces.equivariant, f.pieces.k_delta, f.pieces.k_nabla)
    cat = catalog(f.pieces)
    index = {p: k for k, p in enumerate(cat)}
    out = []
    for cell, idx in f.placements:
        kind, r, i = cell
        new_cell = (kind, r, r + 1 - i) if kind == "U" else (kind, r, r - i)
        out.append((new_cell, index[dual_piece(cat[idx])]))
    order = {c: k for k, c in enumerate(build_lattice(new_b).cells)}
    g = Filling(new_b, new_pieces, tuple(sorted(out, key=lambda ci: order[ci[0]])))
    g.validate()
    return g
