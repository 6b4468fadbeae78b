import pytest

from selfref import syntax as sx
from selfref.oracle import bounded_quantifier, brute_force_eval, eval_term


def test_exact_on_bounded():
    s = sx.parse_formula("forall x < num(5). exists y < num(3). x < y + y + 1")
    assert tuple(brute_force_eval(s, 64)) == (True, True)


def test_inexact_on_unbounded():
    verdict, exact = brute_force_eval(sx.parse_formula("exists x. num(3) < x"), 64)
    assert verdict and not exact
    verdict, exact = brute_force_eval(sx.parse_formula("exists x. num(70) < x"), 64)
    assert not verdict and not exact


def test_bound_beyond_limit_is_inexact():
    s = sx.parse_formula("exists x < num(100). num(80) = x")
    verdict, exact = brute_force_eval(s, 64)
    assert not exact


def test_guard_detection():
    q = sx.parse_formula("exists z < y. z = z")
    assert bounded_quantifier(q) == sx.Var(1)
    assert bounded_quantifier(sx.parse_formula("exists z. z = z")) is None
    assert bounded_quantifier(sx.parse_formula("exists z. (z < z + 1 & z = z)")) is None


def test_eval_term():
    t = sx.parse("v(x) + num(3)")
    assert eval_term(t, {0: 1}) == 35
    with pytest.raises(TypeError):
        eval_term("x", {})
