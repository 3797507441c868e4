"""Binary strings used as puzzle side labels and Schubert indices.

Strings are plain Python ``str`` objects over the alphabet ``"01"``, stored in
the order they are written (``"1010"`` means 1, 0, 1, 0).  The empty string is
a legal value everywhere.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations
from typing import Iterator, NamedTuple


class Content(NamedTuple):
    zeros: int
    ones: int

    def __add__(self, other):  # type: ignore[override]
        return Content(self.zeros + other.zeros, self.ones + other.ones)

    def __sub__(self, other):
        return Content(self.zeros - other.zeros, self.ones - other.ones)

    @property
    def size(self) -> int:
        return self.zeros + self.ones


class Partition(NamedTuple):
    parts: tuple[int, ...]
    rows: int
    cols: int

    @property
    def size(self) -> int:
        return sum(self.parts)

    def nonzero(self) -> tuple[int, ...]:
        return tuple(p for p in self.parts if p)


class WordError(ValueError):
    pass


class ContentTooSmall(WordError):
    pass


def check(s: str) -> str:
    if not isinstance(s, str) or s.strip("01"):
        raise WordError(f"not a binary string: {s!r}")
    return s


def content(s: str) -> Content:
    ones = s.count("1")
    return Content(len(s) - ones, ones)


def sort_word(s: str) -> str:
    z, o = content(s)
    return "0" * z + "1" * o


def reverse(s: str) -> str:
    return s[::-1]


def dual(s: str) -> str:
    """Reverse and exchange 0 with 1."""
    return s[::-1].translate(_SWAP)


_SWAP = str.maketrans("01", "10")


def pad(s: str, target: Content) -> str:
    """Prefix 0s and suffix 1s until ``s`` has the target content."""
    z, o = content(s)
    dz, do = target[0] - z, target[1] - o
    if dz < 0 or do < 0:
        raise ContentTooSmall(f"{s!r} has content {(z, o)}, larger than {tuple(target)}")
    return "0" * dz + s + "1" * do


def length(s: str) -> int:
    """Number of inversions: pairs i < j with s[i] = 1 and s[j] = 0."""
    total = ones = 0
    for ch in s:
        if ch == "1":
            ones += 1
        else:
            total += ones
    return total


def to_partition(s: str) -> Partition:
    # Walk from the NE corner of the k x (n-k) box: a 0 steps left, a 1 steps
    # down.  The row a 1 lands in has as many boxes as 0s remaining after it.
    z, k = content(s)
    parts = []
    zeros_left = z
    for ch in s:
        if ch == "0":
            zeros_left -= 1
        else:
            parts.append(zeros_left)
    return Partition(tuple(parts), k, z)


def from_partition(p: Partition) -> str:
    parts = tuple(p.parts) + (0,) * (p.rows - len(p.parts))
    if len(parts) != p.rows or any(x > p.cols or x < 0 for x in parts):
        raise WordError(f"partition {p} does not fit its box")
    if any(a < b for a, b in zip(parts, parts[1:])):
        raise WordError(f"parts not weakly decreasing: {parts}")
    out = []
    zeros_left = p.cols
    for part in parts:
        out.append("0" * (zeros_left - part))
        out.append("1")
        zeros_left = part
    out.append("0" * zeros_left)
    return "".join(out)


@lru_cache(maxsize=None)
def words_with_content(c: Content | tuple[int, int]) -> tuple[str, ...]:
    """All strings with the given content, in lexicographic order."""
    z, o = c
    if z < 0 or o < 0:
        return ()
    n = z + o
    out = []
    for ones in combinations(range(n), o):
        bits = ["0"] * n
        for i in ones:
            bits[i] = "1"
        out.append("".join(bits))
    return tuple(sorted(out))


def words_of_length(n: int) -> Iterator[str]:
    for i in range(2**n):
        yield format(i, f"0{n}b") if n else ""
