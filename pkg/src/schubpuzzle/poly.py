"""Sparse multivariate polynomials over the integers in y1, y2, ...

A monomial is a sorted tuple of ``(variable index, exponent)`` pairs, so the
constant monomial is ``()``.  Coefficients are Python ints (exact).
"""

from __future__ import annotations

from typing import Callable, Iterable, Mapping

Monomial = tuple[tuple[int, int], ...]


def _mono_mul(a: Monomial, b: Monomial) -> Monomial:
    if not a:
        return b
    if not b:
        return a
    exps = dict(a)
    for var, e in b:
        exps[var] = exps.get(var, 0) + e
    return tuple(sorted(exps.items()))


def _degree(m: Monomial) -> int:
    return sum(e for _, e in m)


def _order_key(m: Monomial):
    # graded, then lexicographic with y_n > ... > y_1: higher variables first
    return (-_degree(m), tuple((-var, -e) for var, e in reversed(m)))


class Poly:
    __slots__ = ("terms", "_hash")

    def __init__(self, terms: Mapping[Monomial, int] | None = None):
        self.terms: dict[Monomial, int] = {m: c for m, c in (terms or {}).items() if c}
        self._hash = None

    @classmethod
    def const(cls, c: int) -> "Poly":
        return cls({(): c})

    @classmethod
    def var(cls, i: int) -> "Poly":
        return cls({((i, 1),): 1})

    @classmethod
    def diff(cls, j: int, i: int) -> "Poly":
        """y_j - y_i"""
        return cls.var(j) - cls.var(i)

    def __add__(self, other):
        if isinstance(other, int):
            other = Poly.const(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, 0) + c
        return Poly(out)

    __radd__ = __add__

    def __neg__(self):
        return Poly({m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return Poly({m: c * other for m, c in self.terms.items()})
        out: dict[Monomial, int] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = _mono_mul(m1, m2)
                out[m] = out.get(m, 0) + c1 * c2
        return Poly(out)

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, int):
            other = Poly.const(other)
        if not isinstance(other, Poly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def is_zero(self) -> bool:
        return not self.terms

    def variables(self) -> set[int]:
        return {v for m in self.terms for v, _ in m}

    def substitute(self, mapping: Callable[[int], int]) -> "Poly":
        """Rename variables: y_i -> y_{mapping(i)}."""
        out: dict[Monomial, int] = {}
        for m, c in self.terms.items():
            exps: dict[int, int] = {}
            for v, e in m:
                w = mapping(v)
                exps[w] = exps.get(w, 0) + e
            key = tuple(sorted(exps.items()))
            out[key] = out.get(key, 0) + c
        return Poly(out)

    def evaluate(self, values: Callable[[int], int]) -> int:
        total = 0
        for m, c in self.terms.items():
            t = c
            for v, e in m:
                t *= values(v) ** e
            total += t
        return total

    def sorted_terms(self) -> list[tuple[Monomial, int]]:
        return sorted(self.terms.items(), key=lambda mc: _order_key(mc[0]))

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        pieces = []
        for k, (m, c) in enumerate(self.sorted_terms()):
            mono = "*".join(f"y{v}" if e == 1 else f"y{v}^{e}" for v, e in m)
            mag = abs(c)
            if mono:
                body = mono if mag == 1 else f"{mag}*{mono}"
            else:
                body = str(mag)
            if k == 0:
                pieces.append(body if c > 0 else f"-{body}")
            else:
                pieces.append((" + " if c > 0 else " - ") + body)
        return "".join(pieces)

    __repr__ = __str__

    def to_json(self) -> dict:
        return {
            "kind": "poly",
            "terms": [
                {"coeff": c, "exps": {str(v): e for v, e in m}}
                for m, c in self.sorted_terms()
            ],
        }


def product(factors: Iterable[Poly]) -> Poly:
    out = Poly.const(1)
    for f in factors:
        out = out * f
    return out
