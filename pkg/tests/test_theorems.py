import pytest

from schubpuzzle import theorems
from schubpuzzle.poly import Poly
from schubpuzzle.theorems import GREEK, HypothesisViolated, instances, sweep, verify

D = Poly.diff

SMALL = {
    "HEX_180": 9, "HEX_OPPOSITE": 9, "HEX_TWOWAY": 9, "HEX_THREEWAY": 9, "HEX_ALLWAY": 9,
    "HEX_FORMULA": 9, "HEX_THREEWAY_FORMULA": 9, "HEX_ALLWAY_FORMULA": 9, "HEX_ALLWAY_COUNT": 2,
    "EQUALITY_LR": 2, "EQVT_PARALLELOGRAM": 2, "UNIQUE_PENTAGON": 2,
}


@pytest.mark.parametrize("theorem", theorems.ALL_IDS)
def test_small_sweep_passes(theorem):
    reports = sweep(theorem, SMALL.get(theorem, 3))
    assert reports
    assert [r.summary() for r in reports if not r.passed] == []


def test_instances_are_deterministic():
    a = instances("HEX_OPPOSITE", 8)
    assert a == instances("HEX_OPPOSITE", 8)
    keys = [(tuple(len(p[k]) for k in GREEK), "".join(p[k] for k in GREEK)) for p in a]
    assert keys == sorted(keys)


def test_threads_keep_report_order():
    one = [r.to_json() for r in sweep("SPLIT", 3)]
    four = [r.to_json() for r in sweep("SPLIT", 3, threads=4)]
    assert one == four


def test_split_example():
    r = verify("SPLIT", dict(alpha="01", beta="10", gamma="1", delta="1", nu="011"))
    assert r.passed and len({v for _, v in r.values}) == 1


def test_split_rejects_bad_content():
    with pytest.raises(HypothesisViolated):
        verify("SPLIT", dict(alpha="01", beta="10", gamma="1", delta="1", nu="01011"))


def test_parallelogram_example():
    r = verify("PARALLELOGRAM", dict(alpha="101", gamma="0101", beta="011", delta="0011"))
    assert r.passed and len(r.values) == 4


def test_trapezoid_mismatch_is_vacuous():
    r = verify("TRAPEZOID", dict(beta="0", gamma="01", nu="001", delta="11"))
    assert r.passed and all(v == 0 for _, v in r.values)


def test_parallelogram_forced_zero_case():
    r = verify("PARA_FORMULA", dict(alpha="11", gamma="0", beta="11", delta="0"))
    assert r.passed and dict(r.values) == {"puzzles": 0, "formula": 0}


def test_allway_count_example():
    r = verify("HEX_ALLWAY_COUNT", {k: "01" for k in GREEK})
    assert dict(r.values) == {"puzzles": 2, "formula": 2}


def test_equivariant_parallelogram_weights():
    r = verify("EQVT_PARALLELOGRAM", dict(alpha="101", gamma="0011", beta="011", delta="1010"))
    v = dict(r.values)
    assert r.passed
    assert v["base"] == D(4, 1) * D(4, 3) + D(4, 3) * D(6, 3) + D(4, 3) * D(5, 2)
    assert v["swap_gd"] == D(7, 3) * D(6, 3) + D(5, 1) * D(7, 3) + D(7, 3) * D(7, 2)
    assert v["base_count"] == v["swap_gd_count"] == 3


def test_single_rhombus_parallelogram():
    r = verify("EQVT_PARALLELOGRAM", dict(alpha="1", gamma="0", beta="1", delta="0"))
    sums = [v for k, v in r.values if not k.endswith("count")]
    assert r.passed and all(s == D(2, 1) for s in sums)


@pytest.mark.parametrize(
    "params,passed,labels",
    [((1, 0, 0, 1), True, "1,-,0"), ((0, 1, 1, 0), True, None), ((0, 0, 0, 0), True, "-,-,-")],
)
def test_unique_pentagon_examples(params, passed, labels):
    r = verify("UNIQUE_PENTAGON", dict(zip(("a0", "a1", "c0", "c1"), params)))
    assert r.passed is passed
    if labels:
        assert dict(r.values)["labels"] == labels


def test_equality_large_instance():
    r = verify("EQUALITY_LR", dict(lam="10100", mu="0100110", nu="000101010101"))
    assert r.passed and dict(r.values)["puzzles"] == 2


def test_report_json_round_trip():
    r = verify("HEX_ALLWAY_COUNT", {k: "01" for k in GREEK})
    j = r.to_json()
    assert j["pass"] is True and j["theorem"] == "HEX_ALLWAY_COUNT"
    assert r.summary().startswith("PASS HEX_ALLWAY_COUNT alpha=01")


def test_unknown_id():
    with pytest.raises(KeyError):
        verify("NOPE", {})
