import pytest
from hypothesis import given, settings, strategies as st

from selfref import syntax as sx
from selfref.coding import encode
from selfref.framework import (DEFAULT_CODING, StarCoding, axiom_instance, check_negation_mapping,
                               designated_formulas, star_code, star_numeral, verify_framework)
from selfref.presburger import decide, nu_star

from strategies import formulas, sentences

TRUE_EQ = sx.parse_formula("0 = 0")


def test_worked_star_codes():
    assert star_code(TRUE_EQ) == 136315008
    assert star_code(sx.Not(TRUE_EQ)) == 2181040161
    assert nu_star(136315008) == 2181040161
    assert star_code(("0", "=", "0")) == 136315008


@given(sentences(max_numeral=20))
@settings(max_examples=150, deadline=None)
def test_parity_encodes_truth(s):
    c = star_code(s)
    assert (c % 2 == 0) == decide(s)
    assert c // 2 == encode(sx.to_symbol_string(s))


@given(sentences(max_numeral=20))
@settings(max_examples=150, deadline=None)
def test_negation_mapping_on_sentences(s):
    assert nu_star(star_code(s)) == star_code(sx.Not(s))
    assert check_negation_mapping(s)


@given(formulas(max_numeral=20).filter(lambda f: sx.free_indices(f)))
@settings(max_examples=100, deadline=None)
def test_non_sentence_law_on_open_formulas(f):
    assert star_code(f) % 2 == 1
    assert nu_star(star_code(f)) + 1 == star_code(sx.Not(f))


@given(st.lists(st.sampled_from(["0", "1", "+", "=", "(", ")", "∀", "x1"]), min_size=1, max_size=8))
def test_non_sentence_law_on_strings(symbols):
    eta = tuple(symbols)
    if DEFAULT_CODING.is_true_sentence(eta) or sx.is_formula(_try_read(eta)):
        return
    assert nu_star(star_code(eta)) + 1 == star_code(("¬",) + eta)


def _try_read(symbols):
    try:
        e = sx.from_symbol_string(symbols)
    except Exception:
        return None
    return e if not sx.free_indices(e) else None


def test_star_numeral():
    assert star_numeral(TRUE_EQ) == sx.Numeral(136315008)
    with pytest.raises(ValueError):
        star_numeral(())


@pytest.mark.parametrize("n", [0, 1, 2, 7, 32])
def test_q_minus_a1_a2(n):
    assert decide(axiom_instance("A1", n).formula)
    assert decide(axiom_instance("A2", n).formula)


def test_a2_at_zero_is_empty_disjunction():
    f = axiom_instance("A2", 0).formula
    assert f == sx.Forall(0, sx.Iff(sx.Less(sx.Var(0), sx.ZERO), sx.falsum()))


@given(sentences(max_numeral=20))
@settings(max_examples=80, deadline=None)
def test_q_minus_a3(s):
    assert decide(axiom_instance("A3", s).formula)


def test_axiom_instance_errors():
    with pytest.raises(ValueError):
        axiom_instance("A3", sx.parse_formula("x = x"))
    with pytest.raises(ValueError):
        axiom_instance("A4", 0)


def test_designated_formula_shapes():
    d = designated_formulas()
    assert sx.free_vars(d.psi) == {"x"}
    assert sx.free_vars(d.upsilon) == {"x"}
    assert sx.free_vars(d.lam) == {"x"}
    assert sx.free_vars(d.theta) == {"x", "y"}
    assert d.lam == sx.Not(d.psi)


def test_custom_symbol_table_preserves_laws():
    from selfref.coding import DEFAULT_CODES, SymbolTable
    table = SymbolTable({**DEFAULT_CODES, "0": 7, "1": 5})
    coding = StarCoding(table)
    for s in (TRUE_EQ, sx.parse_formula("exists y. 1 = y + y")):
        assert coding.check_negation_mapping(s)
        assert decide(axiom_instance("A3", s, coding).formula)


def test_verify_framework_all_pass():
    reports = verify_framework(seed=3, corpus_size=40, bound=64)
    assert all(r.passed for r in reports), [r.summary() for r in reports if not r.passed]
    assert {r.claim.split(":")[0] for r in reports} >= {"parity law", "negation mapping"}
