import pytest

from schubpuzzle.pieces import (
    EQUIVARIANT_RHOMBUS,
    H,
    H_EQVT,
    K_DELTA,
    K_NABLA,
    ONE,
    TEN,
    ZERO,
    Piece,
    PieceSet,
    Shape,
    Unrotatable,
    catalog,
    dual_piece,
    rotate_piece,
)


def up(*labels):
    return Piece(Shape.UP, labels)


def test_catalog_sizes():
    assert len(catalog(H)) == 10
    assert len(catalog(H_EQVT)) == 11
    assert len(catalog(PieceSet(k_delta=True, k_nabla=True))) == 12


def test_piece_set_parse_round_trip():
    for text in ("H", "H+eqvt", "H+delta", "H+nabla"):
        assert str(PieceSet.parse(text)) == text
    with pytest.raises(ValueError):
        PieceSet.parse("H+bogus")


def test_rotation_examples():
    assert rotate_piece(up(ONE, ZERO, TEN), 2) == up(TEN, ONE, ZERO)
    assert rotate_piece(up(ZERO, ZERO, ZERO), 1) == Piece(Shape.DOWN, (ZERO, ZERO, ZERO))
    assert rotate_piece(K_DELTA, 1) == K_NABLA


def test_rhombus_does_not_rotate():
    assert rotate_piece(EQUIVARIANT_RHOMBUS, 6) == EQUIVARIANT_RHOMBUS
    with pytest.raises(Unrotatable):
        rotate_piece(EQUIVARIANT_RHOMBUS, 3)


def test_dual_examples():
    assert dual_piece(up(ZERO, ZERO, ZERO)) == up(ONE, ONE, ONE)
    assert dual_piece(up(ONE, ZERO, TEN)) == up(ONE, ZERO, TEN)
    assert dual_piece(EQUIVARIANT_RHOMBUS) == EQUIVARIANT_RHOMBUS


@pytest.mark.parametrize("pieces", [H, PieceSet(k_delta=True, k_nabla=True)])
def test_catalog_closed_under_symmetries(pieces):
    cat = set(catalog(pieces))
    for p in cat:
        assert dual_piece(p) in cat
        assert dual_piece(dual_piece(p)) == p
        for s in range(6):
            assert rotate_piece(p, s) in cat
        assert rotate_piece(p, 6) == p
        assert rotate_piece(rotate_piece(p, 2), -2) == p
