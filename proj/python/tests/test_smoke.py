import math
import random

import pytest

import prr


def test_parse_and_types():
    t = prr.parse("(iter succ)")
    assert t.dom == "(x N N)"
    assert t.cod == "N"
    assert str(t) == "(iter succ)"
    assert t.complexity == "[0,1]"
    with pytest.raises(prr.ParseError):
        prr.parse("(pair succ)")
    with pytest.raises(prr.TypeMismatch):
        prr.parse("(comp succ (bang N))")


def test_structural_and_iterative_agree():
    mul = prr.stdlib()["mul"]
    rng = random.Random(3)
    for _ in range(30):
        x, y = rng.randrange(20), rng.randrange(20)
        assert prr.eval(mul, (x, y)) == x * y
        assert prr.eval(mul, (x, y), intrinsics=False) == x * y
        out = prr.run(mul, (x, y))
        assert out["verdict"] == "Done"
        assert out["value"] == x * y
        assert out["descent_ok"]


def test_fuel():
    out = prr.run("(iter succ)", (0, 10**6), fuel=3)
    assert out["verdict"] == "FuelExhausted"
    assert out["message"] == "fuel exhausted at step 3"
    assert out["value"] is None


def test_values_cross_unbounded():
    big = 2**200 + 5
    assert prr.eval("succ", big) == big + 1
    assert prr.eval("swap", (1, 2)) == (2, 1)
    assert prr.eval("(bang N)", 4) == ()


def test_pairing():
    for x in range(30):
        for y in range(30):
            n = prr.cantor_pair(x, y)
            assert n == (x + y) * (x + y + 1) // 2 + y
            assert prr.cantor_unpair(n) == (x, y)


def test_codes():
    t = prr.parse("(comp succ (projl N N))")
    assert prr.from_num(prr.num(t)) == t
    assert prr.quote("succ") == "succ"
    for n in range(40):
        assert prr.pred_count_inverse(prr.pred_count_hash(n)) == n
    with pytest.raises(prr.NotAPredicateCode):
        prr.pred_count_inverse("succ")


def test_mu_and_choice():
    phi = prr.parse("(comp leq (pair (comp succ succ succ (zero N) (bang (x N N))) (projr N N)))")
    assert prr.mu(phi, 9, 10) == 3
    assert prr.mu(phi, 9, 2) is None
    inv, kind = prr.middle_inverse("succ")
    assert kind == "retraction"
    assert all(prr.eval("succ", prr.eval(inv, prr.eval("succ", n))) == n + 1 for n in range(50))


def test_gcd_cci():
    src = """(cci (x N N) (projr N N)
      (comp (cond (x N N))
            (pair (comp is_zero (projr N N))
                  (pair (id (x N N)) (pair (projr N N) mod)))))"""
    rng = random.Random(1)
    for _ in range(20):
        x, y = rng.randrange(1000), rng.randrange(1000)
        out = prr.cci(src, (x, y))
        assert out["verdict"] == "Done"
        assert out["value"] == (math.gcd(x, y), 0)


def test_liar_is_deterministic():
    a = prr.liar(2000)
    assert a == prr.liar(2000)
    assert "verdict=ContradictionValue" not in a
