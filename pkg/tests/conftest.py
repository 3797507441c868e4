import json
from pathlib import Path

import pytest

from schubpuzzle.pieces import H_EQVT, TEXT_LABEL
from schubpuzzle.region import boundary_edges, triangle_boundary
from schubpuzzle.tiler import iter_fillings

FIXTURES = Path(__file__).parent / "fixtures"


def _edge(p, q):
    p, q = sorted((tuple(p), tuple(q)))
    if p[0] == q[0]:
        return ("H", p[0], q[1])
    return ("R" if p[1] == q[1] else "F", p[0] + 1, p[1] + 1)


def load_drawn_puzzle(name):
    """Edge labels and rhombus anchors of a puzzle stored as drawn polygons.

    The fixture lists polygons by lattice vertices (row, position) with the
    label written on each of their edges.
    """
    data = json.loads((FIXTURES / name).read_text())
    labels = {}
    anchors = []
    for poly in data["polygons"]:
        for e in poly["edges"]:
            labels[_edge(*e["ends"])] = TEXT_LABEL[e["label"]]
        if len(poly["vertices"]) == 4:
            top = min(map(tuple, poly["vertices"]))
            anchors.append((top[0] + 1, top[1] + 1))
    return data["size"], labels, sorted(anchors)


def drawn_filling(name):
    """Find the drawn puzzle among the enumerated fillings of its boundary."""
    n, labels, anchors = load_drawn_puzzle(name)
    probe = triangle_boundary("0" * n, "0" * n, "0" * n)
    sides = {"NW": [], "NE": [], "S": []}
    for side, _, edge in boundary_edges(probe):
        sides[side].append("01"[labels[edge]])
    b = triangle_boundary(*("".join(sides[k]) for k in ("NW", "NE", "S")))
    matches = [f for f in iter_fillings(b, H_EQVT) if f.edge_labels() == labels]
    assert len(matches) == 1
    assert sorted(matches[0].rhombus_anchors()) == anchors
    return matches[0]


@pytest.fixture(scope="session")
def equivariant_size6():
    return drawn_filling("equivariant_size6.json")


# criterion number -> PASS/FAIL line, filled in by test_acceptance.py
ACCEPTANCE: dict = {}


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for num in sorted(ACCEPTANCE):
            terminalreporter.write_line(ACCEPTANCE[num])
