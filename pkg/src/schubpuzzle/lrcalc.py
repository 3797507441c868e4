"""Littlewood-Richardson coefficients from skew tableaux.

This is the cross-check for the puzzle engine and shares no code with it.
c_{lam,mu}^{nu} counts semistandard fillings of the skew shape nu/lam with
content mu whose reverse reading word (rows top to bottom, each right to
left) is a ballot word.
"""

from __future__ import annotations

from functools import lru_cache

from . import words
from .words import WordError, content, pad, sort_word, to_partition


class ContentMismatch(WordError):
    pass


def _same_content(*ws: str) -> None:
    cs = {content(words.check(w)) for w in ws}
    if len(cs) > 1:
        raise ContentMismatch(f"strings {ws} do not share one content")


@lru_cache(maxsize=None)
def lr_partitions(lam: tuple, mu: tuple, nu: tuple) -> int:
    """c_{lam,mu}^{nu} for partitions given as weakly decreasing tuples."""
    lam = tuple(p for p in lam if p)
    mu = tuple(p for p in mu if p)
    nu = tuple(p for p in nu if p)
    if sum(lam) + sum(mu) != sum(nu):
        return 0
    if len(lam) > len(nu):
        return 0
    lam_full = lam + (0,) * (len(nu) - len(lam))
    if any(a > b for a, b in zip(lam_full, nu)):
        return 0
    if not mu:
        return 1

    rows = [(lam_full[r], nu[r]) for r in range(len(nu))]
    # cells in reverse reading order: row by row, right to left
    order = [(r, c) for r, (lo, hi) in enumerate(rows) for c in range(hi - 1, lo - 1, -1)]
    filled: dict = {}
    used = [0] * (len(mu) + 1)

    def go(k: int) -> int:
        if k == len(order):
            return 1
        r, c = order[k]
        lo, hi = rows[r]
        # weakly increasing along rows: bounded by the entry to the right
        top = filled.get((r, c + 1), len(mu))
        # strictly increasing down columns
        above = filled.get((r - 1, c), 0) if r > 0 and c >= rows[r - 1][0] else 0
        total = 0
        for v in range(above + 1, top + 1):
            if used[v] >= mu[v - 1]:
                continue
            if v > 1 and used[v] + 1 > used[v - 1]:
                continue
            used[v] += 1
            filled[(r, c)] = v
            total += go(k + 1)
            del filled[(r, c)]
            used[v] -= 1
        return total

    return go(0)


def lr_coeff(lam: str, mu: str, nu: str) -> int:
    """c_{lam,mu}^{nu} for three strings of one content."""
    _same_content(lam, mu, nu)
    if words.length(lam) + words.length(mu) != words.length(nu):
        return 0
    return lr_partitions(
        to_partition(lam).nonzero(), to_partition(mu).nonzero(), to_partition(nu).nonzero()
    )


def lr_coeff_padded(lam: str, mu: str, nu: str) -> int:
    """c_{lam!,mu!}^{nu}: pad lam and mu up to the content of nu first."""
    target = content(nu)
    return lr_coeff(pad(lam, target), pad(mu, target), nu)


def lr_via_puzzles(lam: str, mu: str, nu: str) -> int:
    """Number of triangle puzzles with sides lam, mu and the reverse of nu."""
    from .pieces import H
    from .region import triangle_boundary
    from .tiler import count

    _same_content(lam, mu, nu)
    return count(triangle_boundary(lam, mu, nu[::-1]), H)


def equalityofLR_check(lam: str, mu: str, nu: str) -> bool:
    """c_{sort(lam)sort(mu), nu}^{lam mu} == c_{lam!, mu!}^{nu}."""
    if content(nu) != content(lam) + content(mu):
        raise ContentMismatch(f"content of {nu!r} is not content({lam!r}) + content({mu!r})")
    left = lr_coeff(sort_word(lam) + sort_word(mu), nu, lam + mu)
    return left == lr_coeff_padded(lam, mu, nu)
