import itertools
from collections import Counter

import pytest

from schubpuzzle.lrcalc import (
    ContentMismatch,
    equalityofLR_check,
    lr_coeff,
    lr_coeff_padded,
    lr_partitions,
    lr_via_puzzles,
)
from schubpuzzle.words import sort_word, words_with_content


def partitions(total, max_part=None):
    max_part = total if max_part is None else max_part
    if total == 0:
        yield ()
        return
    for first in range(min(total, max_part), 0, -1):
        for rest in partitions(total - first, first):
            yield (first,) + rest


def ssyt(shape, nvars):
    """All semistandard tableaux of a shape, as dicts cell -> entry."""
    cells = [(r, c) for r, n in enumerate(shape) for c in range(n)]

    def go(k, t):
        if k == len(cells):
            yield dict(t)
            return
        r, c = cells[k]
        lo = max(t.get((r, c - 1), 1), t.get((r - 1, c), 0) + 1)
        for v in range(lo, nvars + 1):
            t[(r, c)] = v
            yield from go(k + 1, t)
            del t[(r, c)]

    yield from go(0, {})


def schur(shape, nvars):
    """Schur polynomial as a Counter of exponent vectors."""
    out = Counter()
    for t in ssyt(shape, nvars):
        exps = [0] * nvars
        for v in t.values():
            exps[v - 1] += 1
        out[tuple(exps)] += 1
    return out


def schur_product_expansion(lam, mu):
    """c_{lam,mu}^nu for every nu by peeling off leading Schur terms."""
    nvars = len(lam) + len(mu)
    a, b = schur(lam, nvars), schur(mu, nvars)
    prod = Counter()
    for ea, ca in a.items():
        for eb, cb in b.items():
            prod[tuple(x + y for x, y in zip(ea, eb))] += ca * cb
    coeffs = {}
    while True:
        live = [e for e, c in prod.items() if c]
        if not live:
            return coeffs
        lead = max(live)
        c = prod[lead]
        nu = tuple(x for x in lead if x)
        coeffs[nu] = c
        for e, k in schur(nu, nvars).items():
            prod[e] -= c * k


@pytest.mark.parametrize("a,b", [(a, b) for a in range(4) for b in range(4) if a + b <= 5])
def test_tableau_rule_matches_schur_products(a, b):
    for lam in partitions(a):
        for mu in partitions(b):
            expected = schur_product_expansion(lam, mu)
            for nu in partitions(a + b):
                assert lr_partitions(lam, mu, nu) == expected.get(nu, 0), (lam, mu, nu)


def test_word_examples():
    assert lr_coeff("0101", "0101", "1001") == 1
    assert lr_coeff("1010", "0101", "1100") == 1
    # "01" has no inversions, so this is c_{0,0}^{0} = 1, the identity triangle
    assert lr_coeff("01", "01", "01") == 1 == lr_via_puzzles("01", "01", "01")
    assert lr_coeff("10", "10", "01") == 0


def test_identity_class():
    for mu, nu in itertools.product(words_with_content((2, 2)), repeat=2):
        assert lr_coeff("0011", mu, nu) == (1 if mu == nu else 0)


def test_padding():
    assert lr_coeff_padded("10", "10", "0101") == lr_coeff("0101", "0101", "0101")
    for nu in ("01", "10"):
        assert lr_coeff_padded("", "", nu) == (1 if nu == sort_word(nu) else 0)


def test_content_mismatch_raises():
    with pytest.raises(ContentMismatch):
        lr_coeff("01", "01", "0011")


def test_puzzles_agree_on_small_grassmannians():
    for n in range(1, 5):
        for k in range(1, n):
            ws = words_with_content((n - k, k))
            for lam, mu, nu in itertools.product(ws, repeat=3):
                assert lr_via_puzzles(lam, mu, nu) == lr_coeff(lam, mu, nu)


def test_equality_examples():
    assert equalityofLR_check("", "", "")
    assert equalityofLR_check("10", "10", "0101")
