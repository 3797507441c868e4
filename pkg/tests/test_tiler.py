import itertools
from collections import Counter

import pytest
from hypothesis import HealthCheck, given, settings, strategies as st

from schubpuzzle.pieces import H, H_DELTA, H_EQVT, H_NABLA, Shape, Tag, rotate_piece
from schubpuzzle.poly import Poly, product
from schubpuzzle.region import BoundarySpec, InfeasibleShape, dual_boundary, rotate_boundary, triangle_boundary
from schubpuzzle.tiler import (
    count,
    count_naive,
    dual_filling,
    enumerate_fillings,
    equivariant_indices,
    rhombus_weight,
    rotate_filling,
    weight_sum,
)
from schubpuzzle.words import words_of_length

PIECE_SETS = [H, H_EQVT, H_DELTA, H_NABLA]


def triangles(n):
    ws = [w for k in range(n + 1) for w in words_of_length(k) if len(w) == n]
    for lam, mu, nu in itertools.product(ws, repeat=3):
        yield triangle_boundary(lam, mu, nu)


def test_size_four_sample_has_one_filling():
    b = triangle_boundary("1010", "0101", "0011")
    (f,) = enumerate_fillings(b, H)
    assert len(f.placements) == 16
    assert f.only_base_pieces()


def test_identity_triangle():
    assert count(triangle_boundary("01", "01", "10"), H) == 1
    assert weight_sum(triangle_boundary("01", "01", "10"), H_DELTA) == 1


@pytest.mark.parametrize("nu", ["00", "01", "10", "11"])
@pytest.mark.parametrize("pieces", PIECE_SETS)
def test_mismatched_content_has_no_fillings(nu, pieces):
    assert count(triangle_boundary("00", "11", nu), pieces) == 0


def test_equivariant_example():
    b = triangle_boundary("10", "10", "01")
    assert weight_sum(b, H_EQVT) == Poly.diff(2, 1)
    assert count(b, H) == 0


def test_equivariant_indices():
    assert equivariant_indices(1, 1, 2) == (1, 2)
    for n in range(2, 8):
        assert equivariant_indices(n - 1, 1, n) == (1, 2)
    assert rhombus_weight(1, 1, 2) == Poly.diff(2, 1)


def test_drawn_equivariant_weight(equivariant_size6):
    pairs = sorted(equivariant_indices(r, i, 6) for r, i in equivariant_size6.rhombus_anchors())
    assert pairs == [(1, 2), (2, 5), (4, 6)]
    assert equivariant_size6.weight() == product(Poly.diff(j, i) for i, j in pairs)


@pytest.mark.parametrize("n", [1, 2, 3])
@pytest.mark.parametrize("pieces", PIECE_SETS)
def test_memoised_count_matches_naive_on_triangles(n, pieces):
    for b in triangles(n):
        assert count(b, pieces) == count_naive(b, pieces), b


side_words = st.lists(st.text(alphabet="01", max_size=3), min_size=6, max_size=6)


def hexagon_or_none(ws):
    try:
        return BoundarySpec.from_sides(tuple(ws))
    except InfeasibleShape:
        return None


@settings(max_examples=150, deadline=None, suppress_health_check=[HealthCheck.filter_too_much])
@given(side_words, st.sampled_from(PIECE_SETS))
def test_memoised_count_matches_naive_on_polygons(ws, pieces):
    b = hexagon_or_none(ws)
    if b is None:
        return
    assert count(b, pieces) == count_naive(b, pieces)


@settings(max_examples=100, deadline=None)
@given(side_words, st.sampled_from(PIECE_SETS))
def test_enumeration_agrees_with_weights(ws, pieces):
    b = hexagon_or_none(ws)
    if b is None:
        return
    fs = enumerate_fillings(b, pieces)
    assert len(fs) == count(b, pieces)
    assert len({f.key() for f in fs}) == len(fs)
    for f in fs:
        f.validate()
    if fs:
        total = sum((f.weight() for f in fs[1:]), fs[0].weight())
        assert total == weight_sum(b, pieces)


@settings(max_examples=100, deadline=None)
@given(side_words)
def test_equivariant_sum_specialises_to_count(ws):
    b = hexagon_or_none(ws)
    if b is None:
        return
    w = weight_sum(b, H_EQVT)
    assert w.evaluate(lambda v: 0) == count(b, H)


def test_threads_do_not_change_enumeration():
    b = BoundarySpec.from_sides(("01", "01", "01", "01", "01", "01"))
    for pieces in PIECE_SETS:
        one = [f.placements for f in enumerate_fillings(b, pieces)]
        four = [f.placements for f in enumerate_fillings(b, pieces, threads=4)]
        assert one == four


def test_regular_hexagon_count():
    assert count(BoundarySpec.from_sides(("01",) * 6), H) == 2


def test_zero_area_conflict_counts_zero():
    # cut_top = N: the NW and SE sides lie on the same edges
    clash = BoundarySpec.from_sides(("", "0", "", "", "1", ""))
    agree = BoundarySpec.from_sides(("", "0", "", "", "0", ""))
    assert count(clash, H) == count_naive(clash, H) == 0
    assert count(agree, H) == 1


@pytest.mark.parametrize("s", range(6))
def test_rotation_of_fillings(s):
    for b in triangles(3):
        for f in enumerate_fillings(b, H_DELTA):
            g = rotate_filling(f, s)
            assert g.boundary == rotate_boundary(b, s)
            expected = Counter(rotate_piece(p, -s) for p in f.pieces_used())
            assert Counter(g.pieces_used()) == expected
            assert count(g.boundary, g.pieces) == count(b, H_DELTA)


def test_equivariant_fillings_turn_half_way():
    b = triangle_boundary("010", "010", "010")
    fs = enumerate_fillings(b, H_EQVT)
    assert any(f.rhombus_anchors() for f in fs)
    for f in fs:
        g = rotate_filling(f, 3)
        g.validate()
        assert len(g.rhombus_anchors()) == len(f.rhombus_anchors())


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_duality_preserves_counts(n):
    for b in itertools.islice(triangles(n), 0, None, 7):
        assert count(dual_boundary(b), H) == count(b, H)
        for f in enumerate_fillings(b, H):
            g = dual_filling(f)
            assert dual_filling(g).placements == f.placements


def test_sign_weight_counts_delta_pieces():
    b = triangle_boundary("0101", "0101", "0101")
    fs = enumerate_fillings(b, H_DELTA)
    assert count(b, H) == 0
    signs = [(-1) ** sum(p.tag is Tag.SIGN for p in f.pieces_used()) for f in fs]
    assert sum(signs) == weight_sum(b, H_DELTA)
    assert any(p.shape is Shape.UP and p.tag is Tag.SIGN for f in fs for p in f.pieces_used())
    assert weight_sum(b, H_DELTA) == -1
