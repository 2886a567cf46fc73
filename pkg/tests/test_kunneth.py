"""Product predictions, comparison reports, and the bottleneck distance."""

import math
import random

import pytest

import corpus
import oracle
from sumrips import (
    Bar,
    Barcode,
    InputError,
    bottleneck,
    check_interleaving_bound,
    compare_product,
    diameter,
    hamming_cube,
    kunneth_predict,
    predict_graded,
    reduce,
    vietoris_rips,
)
from sumrips.kunneth import VERDICT_DOMINATED, VERDICT_EQUAL, VERDICT_VIOLATED

INF = math.inf
INTERVAL = hamming_cube(1)
SQUARE = hamming_cube(2)


def _ph(space, maxdim=3):
    return reduce(vietoris_rips(space, maxdim))


def test_predict_interval_squared():
    ph_i = _ph(INTERVAL)
    assert kunneth_predict(ph_i, ph_i, 0) == Barcode([Bar(0, 1)] * 3 + [Bar(0, INF)])
    assert kunneth_predict(ph_i, ph_i, 1) == Barcode([Bar(1, 2)])
    assert kunneth_predict(ph_i, ph_i, 2) == Barcode()
    with pytest.raises(InputError):
        kunneth_predict(ph_i, ph_i, -1)


def test_predict_interval_times_square():
    ph_i, ph_sq = _ph(INTERVAL), _ph(SQUARE)
    assert kunneth_predict(ph_i, ph_sq, 2) == Barcode([Bar(2, 3)])
    assert kunneth_predict(ph_i, ph_sq, 3) == Barcode()


def test_predict_graded_collects_all_degrees():
    graded = predict_graded(_ph(INTERVAL), _ph(SQUARE), 3)
    assert graded.dims() == (0, 1, 2, 3)
    assert [len(graded[n]) for n in range(4)] == [8, 5, 1, 0]


def test_compare_interval_squared_all_equal():
    report = compare_product(INTERVAL, INTERVAL, 2)
    assert [d.verdict for d in report.dims] == [VERDICT_EQUAL] * 3
    assert all(d.bottleneck == 0.0 for d in report.dims)
    assert report.diameter_bound == 1.0
    assert report.ok and report.verdicts_ok and report.bounds_ok


def test_compare_interval_times_square_degreewise():
    report = compare_product(INTERVAL, SQUARE, 3)
    assert [d.verdict for d in report.dims] == [
        VERDICT_EQUAL, VERDICT_EQUAL, VERDICT_DOMINATED, VERDICT_VIOLATED]
    two = report.dims[2]
    assert two.predicted == Barcode([Bar(2, 3)]) and two.actual == Barcode()
    assert two.bottleneck == 0.5 and two.diameter_bound == 1.0 and two.bound_ok
    three = report.dims[3]
    assert three.predicted == Barcode() and len(three.actual) == 1
    assert not three.asserted and three.verdict_ok  # recorded, not asserted
    assert report.ok  # a degree-3 violation does not fail the report


def test_compare_is_symmetric():
    x = corpus.random_space(random.Random(17), 3, 4)
    y = corpus.random_space(random.Random(18), 2, 3)
    a = compare_product(x, y, 2)
    b = compare_product(y, x, 2)
    for da, db in zip(a.dims, b.dims):
        assert da.verdict == db.verdict
        assert da.predicted == db.predicted
        assert da.actual == db.actual
        assert da.bottleneck == db.bottleneck


def test_compare_maxn_cap():
    with pytest.raises(InputError, match="cap"):
        compare_product(INTERVAL, INTERVAL, 8)
    report = compare_product(INTERVAL, INTERVAL, 8, maxn_cap=None)
    assert len(report.dims) == 9
    with pytest.raises(InputError):
        compare_product(INTERVAL, INTERVAL, -1)


def test_interleaving_bound_on_cube_pairs():
    report = check_interleaving_bound(INTERVAL, SQUARE, 3)
    assert report.bounds_ok
    assert report.diameter_bound == min(diameter(INTERVAL), diameter(SQUARE))


# ----------------------------------------------------------------- bottleneck

def test_bottleneck_frozen_examples():
    assert bottleneck(Barcode([Bar(2, 3)]), Barcode()) == 0.5
    assert bottleneck(Barcode([Bar(0, 2)]), Barcode([Bar(0, 3)])) == 1.0
    code = Barcode([Bar(0, 2), Bar(1, INF)])
    assert bottleneck(code, code) == 0.0
    assert bottleneck(Barcode(), Barcode()) == 0.0


def test_bottleneck_essentials():
    assert bottleneck(Barcode([Bar(0, INF)]), Barcode([Bar(2, INF)])) == 2.0
    # essential count mismatch is an infinite distance
    assert bottleneck(Barcode([Bar(0, INF)]), Barcode()) == INF
    assert bottleneck(Barcode([Bar(0, INF)]), Barcode([Bar(0, 5)])) == INF
    # sorted matching: crossing assignments are never better
    a = Barcode([Bar(0, INF), Bar(10, INF)])
    b = Barcode([Bar(1, INF), Bar(11, INF)])
    assert bottleneck(a, b) == 1.0


def test_bottleneck_prefers_diagonal_when_cheaper():
    # matching the two bars would cost 4; retiring both costs max(1, 0.5)
    a = Barcode([Bar(0, 2)])
    b = Barcode([Bar(4, 5)])
    assert bottleneck(a, b) == 1.0


def test_bottleneck_matches_bruteforce():
    rng = random.Random(515)
    for _ in range(120):
        a = corpus.random_barcode(rng, max_bars=3)
        b = corpus.random_barcode(rng, max_bars=3)
        assert bottleneck(a, b) == oracle.bottleneck_bruteforce(a, b), (a, b)


def test_bottleneck_is_a_pseudometric_on_samples():
    rng = random.Random(616)
    for _ in range(60):
        a, b, c = (corpus.random_barcode(rng, max_bars=3) for _ in range(3))
        dab, dbc, dac = bottleneck(a, b), bottleneck(b, c), bottleneck(a, c)
        assert dab == bottleneck(b, a)
        assert bottleneck(a, a) == 0.0
        if dab < INF and dbc < INF:
            assert dac <= dab + dbc
