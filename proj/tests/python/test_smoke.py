import cmath

import pytest

import mtcorr


def test_builtin_models_load():
    for name in ["freeshift", "catmap", "bernoulli", "singleton", "car"]:
        m = mtcorr.load_model(name)
        assert m.name == name
        assert m.observables


def test_free_shift_correlations():
    m = mtcorr.load_model("freeshift")
    assert m.phi("e0") == 0
    assert m.correlate([("e0", 0), ("e0", 0)]) == 1
    assert m.correlate([("e0", 0), ("e0", 1)]) == 0
    assert m.correlate([("e0", 2), ("e2", 0)]) == 1


def test_phi_infinity():
    m = mtcorr.load_model("freeshift")
    value, exact, _ = m.phi_infinity("e0@1 e0@1")
    assert exact
    assert value == 1
    value, exact, _ = m.phi_infinity("e0@1 e0@2 e0@1 e0@2")
    assert exact
    assert value == 0


def test_fluctuation_moments():
    m = mtcorr.load_model("freeshift")
    assert m.fluctuation_moment("e0", 2, 16) == 1
    assert m.fluctuation_moment("e0", 4, 4) == pytest.approx(1.75)
    assert m.asymptotic_moment("e0", 4) == pytest.approx(2.0)


def test_cluster_check_verdicts():
    fs = mtcorr.load_model("freeshift")
    assert fs.cluster_check("5")["verdict"] == "holds"
    assert fs.cluster_check("6.a")["verdict"] == "fails"
    sing = mtcorr.load_model("singleton")
    assert sing.cluster_check("5")["verdict"] == "fails"


def test_bernoulli_gaussian():
    m = mtcorr.load_model("bernoulli")
    v = m.asymptotic_moment("spin", 4)
    assert v == pytest.approx(3 * 0.25**2)


def test_combinatorics():
    assert mtcorr.catalan(4) == 14
    parts = mtcorr.pair_partitions(3)
    assert len(parts) == 15
    assert sum(1 for p in parts if mtcorr.crossing_number(p) == 0) == 5
    assert mtcorr.gaussian_moment(2) == pytest.approx(3.0)
    assert mtcorr.semicircle_moment(3) == pytest.approx(5.0)


def test_model_from_json():
    m = mtcorr.model_from_json("""{"model": "catmap", "theta": "1/3",
                                   "T": [[1, 1], [1, 2]]}""")
    assert m.name == "catmap"


def test_catmap_phase():
    m = mtcorr.load_model("catmap")
    z = m.correlate([("W10", 0), ("W01", 0), ("W-10", 0), ("W0-1", 0)])
    assert abs(z - cmath.exp(2j * cmath.pi / 3)) < 1e-12
