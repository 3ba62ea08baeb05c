import pytest

import pyweyl


@pytest.fixture
def alg():
    return pyweyl.Algebra(1, 1, [[1, 0], [0, 1]])


def test_parse_print_round_trip(alg):
    e = alg.parse("x[(1,0);(2)] * d1 - 1/2 * d2^2")
    assert alg.parse(str(e)) == e
    assert alg.element(__import__("json").loads(e.to_json())) == e


def test_commutator(alg):
    d1 = alg.d(0)
    x = alg.parse("x[(1,0);(0)]")
    assert pyweyl.bracket(d1, x) == x
    assert pyweyl.bracket(d1, x) == d1 * x - x * d1


def test_syntax_error_carries_code(alg):
    with pytest.raises(pyweyl.WeylError) as info:
        alg.parse("d1 * * d2")
    assert info.value.args[1] == "SyntaxError"


def test_sigma1_is_involution(alg):
    e = alg.parse("x[(1,1);(1)] * d1^2 + d2")
    assert pyweyl.sigma1(pyweyl.sigma1(e)) == e
    assert str(pyweyl.sigma1(alg.d(0, 2))) == "-d1^2"


def test_automorphism_round_trip(alg):
    e = alg.parse("x[(0,1);(0)] * d2")
    identity = {
        "tau": {"G": [["1", "0"], ["0", "1"]], "f": ["1", "1"]},
        "u": {"signature": alg.signature, "terms": [{"alpha": ["0", "0"], "i": [1, 0], "mu": [0, 0], "coeff": "1"}]},
        "v": ["0", "0"],
        "eps": 0,
        "mode": "lie",
    }
    image = pyweyl.apply_aut(identity, e)
    assert pyweyl.verify(identity, trials=10)["passed"]
    expanded = pyweyl.expand(identity)
    assert pyweyl.apply_aut(expanded, e) == image
    assert pyweyl.decompose(expanded)["eps"] == 0
    assert pyweyl.compose(identity, identity)["eps"] == 0


def test_iso_obstruction():
    a = pyweyl.Algebra(1, 1, [[1, 0], [0, 1]])
    b = pyweyl.Algebra(2, 0, [[1, 0], [0, 1]])
    r = pyweyl.iso_search(a, b)
    assert r["result"] == "Impossible"
    assert r["examined"] == 0


def test_classify_and_witness(alg):
    assert pyweyl.classify(alg.parse("x[(1,0);(0)]"))["tag"] == "in_A"
    wild = pyweyl.classify(alg.parse("d1^2"))
    assert wild["tag"] == "wild" and wild["growth"] == "level"
    w = pyweyl.witness(alg.parse("d1^2 - d1"))
    assert w == {"n": [2, 0], "alpha": ["2", "0"], "value": "2 * x[(2,0);(0,0)]"}


def test_selftest_suite():
    assert "parser" in pyweyl.suite_names()
    passed, line = pyweyl.selftest("binomial", 3)
    assert passed and line.startswith("PASS binomial")
