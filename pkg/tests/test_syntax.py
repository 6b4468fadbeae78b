import pytest
from hypothesis import given, settings

from selfref import syntax as sx
from selfref.errors import LanguageError, NumeralTooLarge, ParseError

from strategies import formulas, sentences, terms

X, Y, Z = sx.Var(0), sx.Var(1), sx.Var(2)


@given(formulas(mul=False, nested_nu=True))
def test_show_parse_round_trip(f):
    assert sx.parse(sx.show(f)) == f


@given(formulas(nu=False, mul=True))
def test_show_parse_round_trip_arith(f):
    assert sx.parse(sx.show(f), sx.Language.ARITH) == f


@given(formulas(max_numeral=12, nested_nu=True))
def test_symbol_string_round_trip(f):
    assert sx.from_symbol_string(sx.to_symbol_string(f)) == f


@given(terms(nested_nu=True))
def test_term_symbol_string_round_trip(t):
    assert sx.from_symbol_string(sx.to_symbol_string(t)) == t


@given(sentences())
def test_sentences_are_closed(s):
    assert sx.is_sentence(s)
    assert sx.free_vars(s) == set()


def test_parse_basic_shapes():
    assert sx.parse("0 = 0") == sx.Eq(sx.ZERO, sx.ZERO)
    assert sx.parse("x + y * z", sx.Language.ARITH) == sx.Add(X, sx.Mul(Y, Z))
    assert sx.parse("x + y + z") == sx.Add(sx.Add(X, Y), Z)
    assert sx.parse("a -> b = b -> c = c".replace("a", "x = x")) == sx.Implies(
        sx.Eq(X, X), sx.Implies(sx.Eq(sx.var("b"), sx.var("b")), sx.Eq(sx.var("c"), sx.var("c"))))
    assert sx.parse("num(7)") == sx.Numeral(7)
    assert sx.parse("num(1)") == sx.ONE


def test_unicode_aliases():
    assert sx.parse("∀x. ¬(ν(x) = x)") == sx.parse("forall x. ~(v(x) = x)")
    assert sx.parse("x = x ∧ y = y") == sx.parse("x = x & y = y")


def test_bounded_sugar():
    assert sx.parse("exists z < y. z = z") == sx.Exists(2, sx.And(sx.Less(Z, Y), sx.Eq(Z, Z)))
    assert sx.parse("forall z < y. z = z") == sx.Forall(2, sx.Implies(sx.Less(Z, Y), sx.Eq(Z, Z)))
    f = sx.parse("exists z < y. (z = z & y = y)")
    assert sx.parse(sx.show(f)) == f


def test_quantifier_body_extends_right():
    f = sx.parse("forall x. x = x & 0 = 0")
    assert isinstance(f, sx.Forall) and isinstance(f.body, sx.And)


def test_xk_alias():
    assert sx.parse("x3 = x0") == sx.Eq(sx.Var(3), X)
    assert sx.var_name(3) == "w"
    assert sx.var_index("x") == 0


@pytest.mark.parametrize("text", ["", "0 =", "(0 = 0", "0 = 0)", "forall . x = x", "x = = x",
                                  "num(x)", "0 = 0 &"])
def test_parse_errors(text):
    with pytest.raises(ParseError):
        sx.parse(text)


def test_language_checks():
    with pytest.raises(LanguageError):
        sx.parse("x * x = x")
    with pytest.raises(LanguageError):
        sx.parse("v(x) = x", sx.Language.ARITH)


def test_free_vars_and_sentences():
    f = sx.parse("forall x. x < y + z")
    assert sx.free_vars(f) == {"y", "z"}
    assert not sx.is_sentence(f)
    assert sx.is_sentence(sx.parse("forall x. x = x"))


def test_substitution_is_capture_avoiding():
    f = sx.parse("exists y. x = y + y")
    g = sx.substitute(f, "x", Y)
    assert sx.free_vars(g) == {"y"}
    assert isinstance(g, sx.Exists) and g.var != 1
    # the bound variable is renamed, not the substituted one
    assert g.body == sx.Eq(Y, sx.Add(sx.Var(g.var), sx.Var(g.var)))


def test_substitution_leaves_bound_occurrences():
    f = sx.parse("x = 0 & forall x. x = x")
    g = sx.substitute(f, "x", sx.numeral(5))
    assert g == sx.And(sx.Eq(sx.Numeral(5), sx.ZERO), sx.Forall(0, sx.Eq(X, X)))


def test_simultaneous_substitution():
    f = sx.parse("x < y")
    assert sx.substitute_many(f, {0: Y, 1: X}) == sx.Less(Y, X)


@given(formulas(), terms(max_var=2))
@settings(max_examples=60)
def test_substitution_removes_variable(f, t):
    g = sx.substitute(f, 0, t)
    if 0 not in sx.free_indices(t):
        assert 0 not in sx.free_indices(g)
    assert sx.free_indices(g) <= (sx.free_indices(f) - {0}) | sx.free_indices(t)


def test_numeral_canonical_forms():
    assert sx.numeral(0) == sx.ZERO and sx.numeral(1) == sx.ONE
    with pytest.raises(ValueError):
        sx.Numeral(1)
    assert sx.to_symbol_string(sx.Numeral(3)) == ("1", "+", "1", "+", "1")
    with pytest.raises(NumeralTooLarge):
        sx.to_symbol_string(sx.Numeral(50), max_numeral=10)


def test_linearization_examples():
    assert sx.to_symbol_string(sx.parse("0 = 0")) == ("0", "=", "0")
    assert sx.to_symbol_string(sx.parse("~(0 = 0)")) == ("¬", "0", "=", "0")
    assert sx.to_symbol_string(sx.parse("forall x. x = x")) == ("∀", "x0", "x0", "=", "x0")


def test_big_connectives():
    assert sx.big_or([]) == sx.falsum()
    a, b, c = (sx.Eq(sx.numeral(i), sx.numeral(i)) for i in range(3))
    assert sx.big_or([a, b, c]) == sx.Or(a, sx.Or(b, c))
    assert sx.big_and([a]) == a


def test_negate():
    s = sx.parse("0 = 0")
    assert sx.negate(s) == sx.Not(s)
