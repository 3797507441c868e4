"""Executable checks of the commutativity theorems and closed formulas.

Every check computes puzzle counts (or weight sums) with the tiler and,
where a formula exists, evaluates it with the tableau oracle in lrcalc, so
the two sides never share code.

Sweep sizes: for triangle, trapezoid, parallelogram, rhombus and pentagon
families ``max_size`` bounds the side of the completed triangle; for the
hexagon families it bounds the perimeter; for the all-way count it bounds
the common side length; for EQUALITY_LR it bounds |lam| and |mu|; for the
unique pentagon check it bounds each of a0, a1, c0, c1; for the equivariant
parallelogram it bounds a and c.
"""

from __future__ import annotations

import itertools
import math
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Iterator

from . import completion, lrcalc
from .pieces import H, H_DELTA, H_EQVT, PieceSet
from .poly import Poly
from .region import BoundarySpec, content_feasible, polygon_boundary, triangle_boundary
from .tiler import count, weight_sum
from .words import Content, content, pad, reverse, sort_word, words_with_content

GREEK = ("alpha", "beta", "gamma", "delta", "epsilon", "zeta")


class HypothesisViolated(ValueError):
    pass


@dataclass
class VerificationReport:
    theorem: str
    params: dict
    values: list  # [(label, value)], value an int or a Poly
    passed: bool
    elapsed: float = 0.0
    note: str = ""

    def to_json(self) -> dict:
        def enc(v):
            return v.to_json() if isinstance(v, Poly) else v

        return {
            "theorem": self.theorem,
            "params": self.params,
            "values": [{"label": k, "value": enc(v)} for k, v in self.values],
            "pass": self.passed,
            "note": self.note,
        }

    def summary(self) -> str:
        ps = " ".join(f"{k}={v if v != '' else '-'}" for k, v in self.params.items())
        vs = ", ".join(f"{k}={v}" for k, v in self.values)
        flag = "PASS" if self.passed else "FAIL"
        note = f"  ({self.note})" if self.note else ""
        return f"{flag} {self.theorem} {ps}: {vs}{note}"


# -- cached counting ----------------------------------------------------------


@lru_cache(maxsize=None)
def _count(b: BoundarySpec, pieces: PieceSet) -> int:
    return count(b, pieces)


@lru_cache(maxsize=None)
def _weight(b: BoundarySpec, pieces: PieceSet):
    return weight_sum(b, pieces)


def clear_caches() -> None:
    _count.cache_clear()
    _weight.cache_clear()


def hexagon(*sides: str) -> BoundarySpec:
    return BoundarySpec.from_sides(sides)


# -- LR helpers that treat mismatched content as zero ----------------------


def c(lam: str, mu: str, nu: str) -> int:
    if not content(lam) == content(mu) == content(nu):
        return 0
    return lrcalc.lr_coeff(lam, mu, nu)


def c_pad(lam: str, mu: str, nu: str) -> int:
    """c_{lam!, mu!}^{nu}, zero when padding is impossible."""
    t = content(nu)
    cl, cm = content(lam), content(mu)
    if cl.zeros > t.zeros or cl.ones > t.ones or cm.zeros > t.zeros or cm.ones > t.ones:
        return 0
    return c(pad(lam, t), pad(mu, t), nu)


def _vee(s: str) -> str:
    return reverse(s)


# -- commutativity theorems -------------------------------------------------


@dataclass(frozen=True)
class Family:
    """A theorem: how params become boundaries and which swaps it allows."""

    name: str
    keys: tuple[str, ...]
    boundary: Callable[..., BoundarySpec]
    configs: Callable[[dict], list[dict]]
    hypothesis: Callable[[dict], str]  # "" ok, "vacuous", or raises
    pieces: PieceSet = H
    size_kind: str = "triangle"  # or "perimeter"


def _swap(p: dict, *pairs) -> dict:
    q = dict(p)
    for x, y in pairs:
        q[x], q[y] = p[y], p[x]
    return q


def _independent_swaps(p: dict, pairs) -> list[dict]:
    out = []
    for choice in itertools.product((False, True), repeat=len(pairs)):
        out.append(_swap(p, *[pr for pr, on in zip(pairs, choice) if on]))
    return out


def _need(cond: bool, msg: str) -> None:
    if not cond:
        raise HypothesisViolated(msg)


def _split_boundary(alpha, beta, gamma, delta, nu):
    return triangle_boundary(alpha + gamma, nu, delta + beta)


def _split_hyp(p):
    _need(content(p["alpha"]) == content(p["beta"]), "alpha and beta must share content")
    _need(content(p["gamma"]) == content(p["delta"]), "gamma and delta must share content")
    _need(content(p["nu"]) == content(p["alpha"]) + content(p["gamma"]), "nu must have the content of alpha gamma")
    return ""


def _trap_boundary(beta, gamma, nu, delta):
    return polygon_boundary("trapezoid", (beta, gamma, nu, delta))


def _trap_hyp(p):
    _need(len(p["gamma"]) == len(p["delta"]), "gamma and delta must have equal length")
    _need(len(p["nu"]) == len(p["beta"]) + len(p["gamma"]), "nu must have length |beta|+|gamma|")
    if content(p["gamma"]) != content(p["delta"]):
        return "vacuous"
    _need(content(p["nu"]) == content(p["beta"]) + content(p["gamma"]), "nu must have the content of beta gamma")
    return ""


def _par_boundary(alpha, gamma, beta, delta):
    return polygon_boundary("parallelogram", (alpha, gamma, beta, delta))


def _par_hyp(p):
    _need(len(p["alpha"]) == len(p["beta"]), "alpha and beta must have equal length")
    _need(len(p["gamma"]) == len(p["delta"]), "gamma and delta must have equal length")
    if content(p["alpha"]) != content(p["beta"]) or content(p["gamma"]) != content(p["delta"]):
        return "vacuous"
    return ""


def _rhombus_hyp(p):
    cs = {content(p[k]) for k in ("alpha", "gamma", "beta", "delta")}
    _need(len(cs) == 1, "all four labels must share content")
    return ""


def _all_perms(keys):
    def configs(p):
        seen, out = set(), []
        for perm in itertools.permutations([p[k] for k in keys]):
            if perm not in seen:
                seen.add(perm)
                out.append(dict(zip(keys, perm)))
        return out

    return configs


def _hex_boundary(alpha, beta, gamma, delta, epsilon, zeta):
    return hexagon(alpha, beta, gamma, delta, epsilon, zeta)


def _feasible_hex(p) -> None:
    ok, why = content_feasible(hexagon(*(p[k] for k in GREEK)))
    _need(ok, why)


def _hex180_hyp(p):
    _feasible_hex(p)
    return ""


def _hex180_configs(p):
    a, b, g, d, e, z = (p[k] for k in GREEK)
    return [p, dict(zip(GREEK, (d, e, z, a, b, g)))]


def _opposite_hyp(p):
    _need(sort_word(p["alpha"]) == sort_word(p["delta"]), "sort(alpha) must equal sort(delta)")
    _feasible_hex(p)
    return ""


def _twoway_hyp(p):
    _need(sort_word(p["beta"]) == sort_word(p["zeta"]), "sort(beta) must equal sort(zeta)")
    _feasible_hex(p)
    return ""


def _pent_boundary(beta, gamma, delta, epsilon, zeta):
    return hexagon("", beta, gamma, delta, epsilon, zeta)


def _pent_hyp(p):
    _need(sort_word(p["beta"]) == sort_word(p["zeta"]), "sort(beta) must equal sort(zeta)")
    _feasible_hex({"alpha": "", **p})
    return ""


def _threeway_hyp(p):
    s = {sort_word(p[k]) for k in ("alpha", "gamma", "epsilon")}
    _need(len(s) == 1, "sort(alpha), sort(gamma), sort(epsilon) must agree")
    _feasible_hex(p)
    return ""


def _threeway_configs(p):
    out = []
    odd = [p[k] for k in ("alpha", "gamma", "epsilon")]
    even = [p[k] for k in ("beta", "delta", "zeta")]
    seen = set()
    for o in itertools.permutations(odd):
        for e in itertools.permutations(even):
            t = (o[0], e[0], o[1], e[1], o[2], e[2])
            if t not in seen:
                seen.add(t)
                out.append(dict(zip(GREEK, t)))
    return out


def _allway_hyp(p):
    _need(len({sort_word(p[k]) for k in GREEK}) == 1, "all six sides must share content")
    return ""


FAMILIES: dict[str, Family] = {}


def _register(f: Family) -> None:
    FAMILIES[f.name] = f


_SPLIT_KEYS = ("alpha", "beta", "gamma", "delta", "nu")
_TRAP_KEYS = ("beta", "gamma", "nu", "delta")
_PAR_KEYS = ("alpha", "gamma", "beta", "delta")
_PENT_KEYS = ("beta", "gamma", "delta", "epsilon", "zeta")

for _suffix, _pieces in (("", H), ("_K", H_DELTA)):
    _register(Family("SPLIT" + _suffix, _SPLIT_KEYS, _split_boundary,
                     lambda p: _independent_swaps(p, [("alpha", "beta"), ("gamma", "delta")]),
                     _split_hyp, _pieces))
    _register(Family("TRAPEZOID" + _suffix, _TRAP_KEYS, _trap_boundary,
                     lambda p: _independent_swaps(p, [("gamma", "delta")]), _trap_hyp, _pieces))
    _register(Family("PARALLELOGRAM" + _suffix, _PAR_KEYS, _par_boundary,
                     lambda p: _independent_swaps(p, [("alpha", "beta"), ("gamma", "delta")]),
                     _par_hyp, _pieces))

_register(Family("RHOMBUS", _PAR_KEYS, _par_boundary, _all_perms(_PAR_KEYS), _rhombus_hyp))
_register(Family("HEX_180", GREEK, _hex_boundary, _hex180_configs, _hex180_hyp, size_kind="perimeter"))
_register(Family("HEX_OPPOSITE", GREEK, _hex_boundary,
                 lambda p: _independent_swaps(p, [("alpha", "delta"), ("beta", "epsilon"), ("gamma", "zeta")]),
                 _opposite_hyp, size_kind="perimeter"))
_register(Family("HEX_TWOWAY", GREEK, _hex_boundary,
                 lambda p: _independent_swaps(p, [("beta", "zeta"), ("gamma", "epsilon")]),
                 _twoway_hyp, size_kind="perimeter"))
_register(Family("PENTAGON", _PENT_KEYS, _pent_boundary,
                 lambda p: _independent_swaps(p, [("beta", "zeta"), ("gamma", "epsilon")]), _pent_hyp))
_register(Family("HEX_THREEWAY", GREEK, _hex_boundary, _threeway_configs, _threeway_hyp, size_kind="perimeter"))
_register(Family("HEX_ALLWAY", GREEK, _hex_boundary, _all_perms(GREEK), _allway_hyp, size_kind="perimeter"))

COMMUTATIVITY_IDS = tuple(FAMILIES)


def _config_label(p: dict, keys) -> str:
    return ",".join(p[k] or "-" for k in keys)


def verify_commutativity(theorem: str, params: dict) -> VerificationReport:
    fam = FAMILIES.get(theorem)
    if fam is None:
        raise KeyError(f"unknown commutativity theorem {theorem!r}")
    start = time.perf_counter()
    params = {k: params[k] for k in fam.keys}
    status = fam.hypothesis(params)
    values = []
    for cfg in fam.configs(params):
        b = fam.boundary(**cfg)
        if fam.pieces == H:
            v = _count(b, H)
        else:
            v = _weight(b, fam.pieces)
        values.append((_config_label(cfg, fam.keys), v))
    passed = len({v for _, v in values}) == 1
    note = ""
    if status == "vacuous":
        passed = passed and values[0][1] == 0
        note = "mismatched content: every count must be 0"
    if theorem == "HEX_180":
        extra = _hex180_lr(params)
        values += extra
        passed = passed and extra[0][1] == extra[1][1] == values[0][1]
    return VerificationReport(theorem, params, values, passed, time.perf_counter() - start, note)


def _hex180_lr(p: dict) -> list:
    # completion of the hexagon and of its 180 degree turn, read as LR numbers
    a, b, g, d, e, z = (p[k] for k in GREEK)
    left = c(sort_word(a) + b + g, sort_word(g) + d + sort_word(e), reverse(e + z + a))
    right = c(sort_word(d) + e + z, sort_word(z) + a + sort_word(b), reverse(b + g + d))
    return [("lr_left", left), ("lr_right", right)]


# -- closed formulas ----------------------------------------------------------


def _words(ct) -> tuple[str, ...]:
    return words_with_content(Content(*ct))


def _trace_chain(mats: list[list[list[int]]]) -> int:
    acc = mats[0]
    for m in mats[1:]:
        acc = [[sum(x * y for x, y in zip(row, col)) for col in zip(*m)] for row in acc]
    return sum(acc[i][i] for i in range(len(acc)))


def split_formula(alpha, beta, gamma, delta, nu) -> int:
    total = 0
    for lam in _words(content(alpha)):
        x = c(alpha, lam, _vee(beta))
        if not x:
            continue
        for mu in _words(content(gamma)):
            y = c(gamma, mu, _vee(delta))
            if y:
                total += c_pad(lam, mu, nu) * x * y
    return total


def trapezoid_formula(beta, gamma, nu, delta) -> int:
    total = 0
    for mu in _words(content(gamma)):
        y = c(gamma, mu, _vee(delta))
        if y:
            total += c_pad(_vee(beta), mu, nu) * y
    return total


def parallelogram_formula(alpha, gamma, beta, delta) -> int:
    a0, a1 = content(alpha)
    c0, c1 = content(gamma)
    total = 0
    if a0 >= c0 and a1 > c1:
        for mu in _words((c0, c1)):
            total += c(alpha, beta, mu + "1" * (a1 - c1) + "0" * (a0 - c0)) * c(gamma, delta, _vee(mu))
    elif c1 >= a1 and c0 > a0:
        for lam in _words((a0, a1)):
            total += c(alpha, beta, _vee(lam)) * c(gamma, delta, "1" * (c1 - a1) + "0" * (c0 - a0) + lam)
    elif a0 >= c0 and c1 >= a1:
        for eta in _words((c0, a1)):
            total += c(alpha, beta, _vee(eta) + "0" * (a0 - c0)) * c(gamma, delta, "1" * (c1 - a1) + eta)
    return total


def hexagon_formula(alpha, beta, gamma, delta, epsilon, zeta) -> int:
    a0, a1 = content(alpha)
    b0, _ = content(beta)
    c0, c1 = content(gamma)
    e0, e1 = content(epsilon)
    _, z1 = content(zeta)
    left_top = "0" * b0 + _vee(alpha) + "1" * z1
    upper = "1" * c1 + delta + "0" * e0
    total = 0
    for mu in _words(content(beta + gamma)):
        y = c(beta + gamma, mu, _vee(epsilon + zeta))
        if not y:
            continue
        x = "0" * a0 + mu + "1" * a1
        # theta solves 0^a0 mu 1^a1 = 0^c0 theta 1^e1
        if len(x) < c0 + e1 or x[:c0] != "0" * c0 or x[len(x) - e1:] != "1" * e1:
            continue
        theta = x[c0 : len(x) - e1]
        total += c(left_top, theta, upper) * y
    return total


def threeway_formula(alpha, beta, gamma, delta, epsilon, zeta) -> int:
    lams = _words(content(beta))
    mus = _words(content(alpha))
    bg, ez = beta + gamma, epsilon + zeta
    t1 = [[c_pad(l, m, bg) for m in mus] for l in lams]  # lam x mu
    t4 = [[c(m, s, _vee(alpha)) for s in mus] for m in mus]  # mu x sigma
    t2 = [[c_pad(r, s, ez) for r in lams] for s in mus]  # sigma x rho
    t3 = [[c(r, l, _vee(delta)) for l in lams] for r in lams]  # rho x lam
    return _trace_chain([t1, t4, t2, t3])


def allway_formula(alpha, beta, gamma, delta, epsilon, zeta) -> int:
    ws = _words(content(alpha))
    v = _vee
    m1 = [[c(beta, xi, mu) for xi in ws] for mu in ws]  # mu x xi
    m2 = [[c(v(lam), v(xi), v(gamma)) for lam in ws] for xi in ws]  # xi x lam
    m3 = [[c(rho, lam, v(delta)) for rho in ws] for lam in ws]  # lam x rho
    m4 = [[c(epsilon, tau, rho) for tau in ws] for rho in ws]  # rho x tau
    m5 = [[c(v(sig), v(tau), v(zeta)) for sig in ws] for tau in ws]  # tau x sigma
    m6 = [[c(mu, sig, v(alpha)) for mu in ws] for sig in ws]  # sigma x mu
    return _trace_chain([m1, m2, m3, m4, m5, m6])


def allway_count(alpha, beta, gamma, delta, epsilon, zeta) -> int:
    z, o = content(alpha)
    target = "0" * z + "1" * o
    if all(s == target for s in (alpha, beta, gamma, delta, epsilon, zeta)):
        return math.comb(z + o, o)
    return 0


@dataclass(frozen=True)
class Formula:
    name: str
    keys: tuple[str, ...]
    boundary: Callable[..., BoundarySpec]
    formula: Callable[..., int]
    hypothesis: Callable[[dict], str]
    size_kind: str = "triangle"


def _trapezoid_d_boundary(lam, mu, nu):
    return polygon_boundary("trapezoid", (_vee(lam), sort_word(mu), nu, _vee(mu)))


def _lr_pad_hyp(p):
    _need(content(p["nu"]) == content(p["lam"]) + content(p["mu"]), "nu must have the content of lam mu")
    return ""


def _equality_boundary(lam, mu, nu):
    return triangle_boundary(sort_word(lam) + sort_word(mu), nu, _vee(lam + mu))


def _threeway_formula_hyp(p):
    return _threeway_hyp(p)


FORMULAS: dict[str, Formula] = {}
for _f in (
    Formula("SPLIT_FORMULA", _SPLIT_KEYS, _split_boundary, split_formula, _split_hyp),
    Formula("TRAPEZOID_FORMULA", _TRAP_KEYS, _trap_boundary, trapezoid_formula, _trap_hyp),
    Formula("TRAPEZOID_D", ("lam", "mu", "nu"), _trapezoid_d_boundary,
            lambda lam, mu, nu: c_pad(lam, mu, nu), _lr_pad_hyp),
    Formula("PARA_FORMULA", _PAR_KEYS, _par_boundary, parallelogram_formula, _par_hyp),
    Formula("HEX_FORMULA", GREEK, _hex_boundary, hexagon_formula, _hex180_hyp, "perimeter"),
    Formula("HEX_THREEWAY_FORMULA", GREEK, _hex_boundary, threeway_formula, _threeway_formula_hyp, "perimeter"),
    Formula("HEX_ALLWAY_FORMULA", GREEK, _hex_boundary, allway_formula, _allway_hyp, "perimeter"),
    Formula("HEX_ALLWAY_COUNT", GREEK, _hex_boundary, allway_count, _allway_hyp, "side"),
    Formula("EQUALITY_LR", ("lam", "mu", "nu"), _equality_boundary,
            lambda lam, mu, nu: c_pad(lam, mu, nu), _lr_pad_hyp, "lr"),
):
    FORMULAS[_f.name] = _f

FORMULA_IDS = tuple(FORMULAS)


def verify_formula(theorem: str, params: dict) -> VerificationReport:
    f = FORMULAS.get(theorem)
    if f is None:
        raise KeyError(f"unknown formula {theorem!r}")
    start = time.perf_counter()
    params = {k: params[k] for k in f.keys}
    status = f.hypothesis(params)
    puzzles = _count(f.boundary(**params), H)
    formula = f.formula(**params)
    values = [("puzzles", puzzles), ("formula", formula)]
    if theorem == "EQUALITY_LR":
        lam, mu, nu = params["lam"], params["mu"], params["nu"]
        lr_left = c(sort_word(lam) + sort_word(mu), nu, lam + mu)
        values.append(("lr_left", lr_left))
        passed = puzzles == formula == lr_left
    else:
        passed = puzzles == formula
    note = "mismatched content: both sides must be 0" if status == "vacuous" else ""
    if status == "vacuous":
        passed = passed and puzzles == 0
    return VerificationReport(theorem, params, values, passed, time.perf_counter() - start, note)


# -- equivariant parallelograms ----------------------------------------------


def reverse_block(p: Poly, lo: int, hi: int) -> Poly:
    """Reverse the variables y_lo..y_hi."""
    return p.substitute(lambda v: lo + hi - v if lo <= v <= hi else v)


def verify_equivariant_parallelogram(alpha: str, gamma: str, beta: str, delta: str) -> VerificationReport:
    start = time.perf_counter()
    _need(content(alpha) == content(beta), "alpha and beta must share content")
    _need(content(gamma) == content(delta), "gamma and delta must share content")
    a, cc = len(alpha), len(gamma)
    phi_a = lambda p: reverse_block(p, 1, a)  # noqa: E731
    phi_c = lambda p: reverse_block(p, a + 1, a + cc)  # noqa: E731
    quads = [
        ("base", (alpha, gamma, beta, delta), lambda p: p),
        ("swap_ab", (beta, gamma, alpha, delta), phi_a),
        ("swap_gd", (alpha, delta, beta, gamma), phi_c),
        ("swap_both", (beta, delta, alpha, gamma), lambda p: phi_c(phi_a(p))),
    ]
    values = []
    polys = []
    counts = []
    degree_zero_ok = True
    for label, sides, phi in quads:
        b = _par_boundary(*sides)
        w = _weight(b, H_EQVT)
        if isinstance(w, int):
            w = Poly.const(w)
        polys.append(phi(w))
        n = _count(b, H_EQVT)
        counts.append(n)
        degree_zero_ok &= w.evaluate(lambda v: 0) == _count(b, H)
        values.append((label, w))
        values.append((label + "_count", n))
    passed = all(p == polys[0] for p in polys) and len(set(counts)) == 1 and degree_zero_ok
    params = {"alpha": alpha, "gamma": gamma, "beta": beta, "delta": delta}
    return VerificationReport("EQVT_PARALLELOGRAM", params, values, passed, time.perf_counter() - start)


# -- the uniquely filled pentagon ---------------------------------------------


def verify_unique_pentagon(a0: int, a1: int, c0: int, c1: int) -> VerificationReport:
    start = time.perf_counter()
    predicted = completion.pentagon_prediction(a0, a1, c0, c1)
    got = completion.unique_pentagon_fill(a0, a1, c0, c1)
    params = {"a0": a0, "a1": a1, "c0": c0, "c1": c1}
    if predicted is None:
        passed = got is None
        values = [("fillings", 0 if got is None else 1)]
    else:
        passed = got is not None and tuple(got[1:]) == predicted and got[0].only_base_pieces()
        labels = "none" if got is None else ",".join(x or "-" for x in got[1:])
        values = [("labels", labels), ("predicted", ",".join(x or "-" for x in predicted))]
    return VerificationReport("UNIQUE_PENTAGON", params, values, passed, time.perf_counter() - start)


# -- sweeps -------------------------------------------------------------------


def _hex_shapes(max_perimeter: int) -> Iterator[tuple[int, ...]]:
    """Side-length 6-tuples of every region with perimeter <= max_perimeter."""
    out = set()
    for n in range(0, max_perimeter + 1):
        for a in range(n + 1):
            for cc in range(n + 1 - a):
                for e in range(n + 1 - max(a, cc)):
                    if a + e > n or cc + e > n:
                        continue
                    lengths = (a, n - a - cc, cc, n - cc - e, e, n - e - a)
                    if sum(lengths) <= max_perimeter:
                        out.add(lengths)
    return iter(sorted(out))


def _labellings(lengths, ok_contents: Callable[[tuple], bool]) -> Iterator[tuple[str, ...]]:
    """Label tuples for given side lengths, filtered first on contents."""
    ranges = [range(n + 1) for n in lengths]
    for ones in itertools.product(*ranges):
        cts = tuple(Content(n - k, k) for n, k in zip(lengths, ones))
        if not ok_contents(cts):
            continue
        yield from itertools.product(*(words_with_content(ct) for ct in cts))


def _hex_contents_ok(cts) -> bool:
    a, b, cc, d, e, z = cts
    return b + cc == e + z and a + b == d + e and cc + d == z + a


def _hex_instances(max_perimeter: int, extra: Callable[[tuple], bool], fixed_alpha_empty=False):
    for lengths in _hex_shapes(max_perimeter):
        if fixed_alpha_empty and lengths[0] != 0:
            continue
        for labels in _labellings(lengths, lambda cts: _hex_contents_ok(cts) and extra(cts)):
            yield dict(zip(GREEK, labels))


def _split_instances(max_size: int):
    for n in range(max_size + 1):
        for a in range(n + 1):
            cc = n - a
            for a1, c1 in itertools.product(range(a + 1), range(cc + 1)):
                A, C = words_with_content((a - a1, a1)), words_with_content((cc - c1, c1))
                V = words_with_content((n - a1 - c1, a1 + c1))
                for al, be, ga, de, nu in itertools.product(A, A, C, C, V):
                    yield {"alpha": al, "beta": be, "gamma": ga, "delta": de, "nu": nu}


def _trap_instances(max_size: int):
    # gamma and delta may differ in content; those instances are the vacuous ones
    for n in range(max_size + 1):
        for a in range(n + 1):
            cc = n - a
            for be in _all_words(a):
                for ga, de in itertools.product(_all_words(cc), _all_words(cc)):
                    for nu in words_with_content(content(be) + content(ga)):
                        yield {"beta": be, "gamma": ga, "nu": nu, "delta": de}


def _par_instances(max_size: int, rhombus=False):
    for n in range(max_size + 1):
        for a in range(n + 1):
            cc = n - a
            if rhombus and a != cc:
                continue
            for al, be in itertools.product(_all_words(a), _all_words(a)):
                for ga, de in itertools.product(_all_words(cc), _all_words(cc)):
                    if rhombus and len({content(x) for x in (al, be, ga, de)}) != 1:
                        continue
                    yield {"alpha": al, "gamma": ga, "beta": be, "delta": de}


def _all_words(n: int) -> list[str]:
    return [format(i, f"0{n}b") if n else "" for i in range(2**n)]


def _pent_instances(max_size: int):
    # completed triangle side = |beta| + |gamma|
    for params in _hex_instances(3 * max_size, lambda cts: cts[1] == cts[5], fixed_alpha_empty=True):
        if len(params["beta"]) + len(params["gamma"]) <= max_size:
            yield {k: params[k] for k in _PENT_KEYS}


def _lr_instances(max_size: int):
    for ll in range(max_size + 1):
        for mm in range(max_size + 1):
            for lam in _all_words(ll):
                for mu in _all_words(mm):
                    for nu in words_with_content(content(lam) + content(mu)):
                        yield {"lam": lam, "mu": mu, "nu": nu}


def _allway_side_instances(max_side: int):
    for a in range(max_side + 1):
        for a1 in range(a + 1):
            ws = words_with_content((a - a1, a1))
            for labels in itertools.product(ws, repeat=6):
                yield dict(zip(GREEK, labels))


def instances(theorem: str, max_size: int) -> list[dict]:
    """All content-valid parameter tuples within the bound, in sweep order."""
    base = theorem[:-2] if theorem.endswith("_K") else theorem
    if base in ("SPLIT", "SPLIT_FORMULA"):
        gen = _split_instances(max_size)
    elif base in ("TRAPEZOID", "TRAPEZOID_FORMULA"):
        gen = _trap_instances(max_size)
    elif base == "TRAPEZOID_D":
        gen = (p for p in _lr_instances(max_size) if len(p["nu"]) <= max_size)
    elif base in ("PARALLELOGRAM", "PARA_FORMULA"):
        gen = _par_instances(max_size)
    elif base == "RHOMBUS":
        gen = _par_instances(max_size, rhombus=True)
    elif base in ("HEX_180", "HEX_FORMULA"):
        gen = _hex_instances(max_size, lambda cts: True)
    elif base == "HEX_OPPOSITE":
        gen = _hex_instances(max_size, lambda cts: cts[0] == cts[3])
    elif base == "HEX_TWOWAY":
        gen = _hex_instances(max_size, lambda cts: cts[1] == cts[5])
    elif base == "PENTAGON":
        gen = _pent_instances(max_size)
    elif base in ("HEX_THREEWAY", "HEX_THREEWAY_FORMULA"):
        gen = _hex_instances(max_size, lambda cts: cts[0] == cts[2] == cts[4])
    elif base in ("HEX_ALLWAY", "HEX_ALLWAY_FORMULA"):
        gen = _hex_instances(max_size, lambda cts: len(set(cts)) == 1)
    elif base == "HEX_ALLWAY_COUNT":
        gen = _allway_side_instances(max_size)
    elif base == "EQUALITY_LR":
        gen = _lr_instances(max_size)
    elif base == "EQVT_PARALLELOGRAM":
        gen = (
            p
            for p in _par_instances(2 * max_size)
            if len(p["alpha"]) <= max_size
            and len(p["gamma"]) <= max_size
            and content(p["alpha"]) == content(p["beta"])
            and content(p["gamma"]) == content(p["delta"])
        )
    elif base == "UNIQUE_PENTAGON":
        gen = (
            dict(zip(("a0", "a1", "c0", "c1"), t))
            for t in itertools.product(range(max_size + 1), repeat=4)
        )
    else:
        raise KeyError(f"unknown theorem {theorem!r}")
    items = list(gen)
    if base != "UNIQUE_PENTAGON":
        items.sort(key=lambda p: (tuple(len(v) for v in p.values()), "".join(p.values())))
    return items


ALL_IDS = COMMUTATIVITY_IDS + FORMULA_IDS + ("EQVT_PARALLELOGRAM", "UNIQUE_PENTAGON")


def verify(theorem: str, params: dict) -> VerificationReport:
    if theorem in FAMILIES:
        return verify_commutativity(theorem, params)
    if theorem in FORMULAS:
        return verify_formula(theorem, params)
    if theorem == "EQVT_PARALLELOGRAM":
        return verify_equivariant_parallelogram(params["alpha"], params["gamma"], params["beta"], params["delta"])
    if theorem == "UNIQUE_PENTAGON":
        return verify_unique_pentagon(*(int(params[k]) for k in ("a0", "a1", "c0", "c1")))
    raise KeyError(f"unknown theorem {theorem!r}")


def sweep(theorem: str, max_size: int, threads: int = 1) -> list[VerificationReport]:
    """Check every instance within the bound; reports come back in instance order."""
    todo = instances(theorem, max_size)
    if threads <= 1:
        return [verify(theorem, p) for p in todo]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(lambda p: verify(theorem, p), todo))


DEFAULT_SIZES = {
    "SPLIT": 6, "TRAPEZOID": 6, "PARALLELOGRAM": 6, "RHOMBUS": 6, "PENTAGON": 6,
    "HEX_180": 14, "HEX_OPPOSITE": 14, "HEX_TWOWAY": 14, "HEX_THREEWAY": 14, "HEX_ALLWAY": 14,
    "SPLIT_K": 5, "TRAPEZOID_K": 5, "PARALLELOGRAM_K": 5,
    "SPLIT_FORMULA": 6, "TRAPEZOID_FORMULA": 6, "TRAPEZOID_D": 6, "PARA_FORMULA": 6,
    "HEX_FORMULA": 14, "HEX_THREEWAY_FORMULA": 14, "HEX_ALLWAY_FORMULA": 14,
    "HEX_ALLWAY_COUNT": 4, "EQUALITY_LR": 3, "EQVT_PARALLELOGRAM": 3, "UNIQUE_PENTAGON": 3,
}
