import pytest
from hypothesis import given, settings

from selfref import syntax as sx
from selfref import theorems as th
from selfref.corpus import CorpusConfig, generate_families, generate_sentences, generate_unary
from selfref.errors import ArityError, AtomLimit
from selfref.framework import designated_formulas, star_numeral
from selfref.presburger import decide

from strategies import formulas

CORPUS = generate_sentences(CorpusConfig(seed=7, size=50))


def test_theta_from_psi_shape():
    psi = sx.parse_formula("exists y. x = y + y")
    theta = th.theta_from_psi(psi)
    assert sx.free_vars(theta) == {"x", "y"}
    assert theta == designated_formulas().theta


def test_rosser_lambda_shape():
    theta = sx.parse_formula("x < y")
    lam = th.rosser_lambda(theta)
    assert sx.free_vars(lam) == {"x"}
    assert isinstance(lam, sx.Forall) and isinstance(lam.body, sx.Implies)
    # the guard of the inner existential is z < y
    inner = lam.body.right
    assert isinstance(inner, sx.Exists) and inner.body.left == sx.Less(sx.Var(2), sx.Var(1))


@given(formulas(max_var=2).filter(lambda f: sx.free_indices(f) == {0, 1}))
@settings(max_examples=80, deadline=None)
def test_rosser_lambda_free_vars_property(theta):
    assert sx.free_vars(th.rosser_lambda(theta)) == {"x"}


@given(formulas(max_var=1).filter(lambda f: sx.free_indices(f) == {0}))
@settings(max_examples=80, deadline=None)
def test_theta_from_psi_free_vars_property(psi):
    assert sx.free_vars(th.theta_from_psi(psi)) == {"x", "y"}


def test_transformer_arity_errors():
    with pytest.raises(ArityError):
        th.rosser_lambda(sx.parse_formula("x < z"))
    with pytest.raises(ArityError):
        th.theta_from_psi(sx.parse_formula("x < y"))
    with pytest.raises(ArityError):
        th.carnap_disjunction(sx.parse_formula("0 = 0"), CORPUS[:2])


def test_carnap_disjunction_shape():
    lam = designated_formulas().lam
    a, b = CORPUS[:2]
    d = th.carnap_disjunction(lam, [a, b])
    assert d == sx.Or(sx.Iff(sx.substitute(lam, 0, star_numeral(a)), a),
                      sx.Iff(sx.substitute(lam, 0, star_numeral(b)), b))
    assert th.carnap_disjunction(lam, []) == sx.falsum()


@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_disjunction_tautology(k):
    assert th.tautology_valid(th.carnap_tautology(k))


def test_tautology_checker():
    p, q = th.letter(0), th.letter(1)
    assert th.tautology_valid(sx.Or(p, sx.Not(p)))
    assert not th.tautology_valid(sx.Or(p, q))
    assert th.tautology_valid(sx.Implies(sx.And(p, q), p))
    with pytest.raises(ValueError):
        th.tautology_valid(sx.Forall(0, p))
    with pytest.raises(AtomLimit):
        th.tautology_valid(sx.big_or(th.letter(i) for i in range(th.MAX_ATOMS + 1)))


def test_designated_formulas_refute_each_statement():
    families = generate_families(7, 20, 5, CORPUS)
    assert th.verify_not_godel(CORPUS).passed
    assert th.verify_not_tarski(CORPUS).passed
    assert th.verify_not_carnap(families).passed
    assert th.verify_not_rosser(CORPUS, range(8)).passed
    assert th.verify_consistency(CORPUS).passed


def test_carnap_refutation_is_a_real_check():
    # swap Lambda* for a formula with fixed points and the disjunction becomes provable
    lam = sx.parse_formula("x = x")
    true_s = sx.parse_formula("0 = 0")
    assert decide(th.carnap_disjunction(lam, [true_s]))


def test_verifier_detects_wrong_expectation():
    r = th.verify_not_godel([sx.parse_formula("0 = 0")])
    r.add("planted", True, False)
    assert not r.passed and len(r.failures) == 1


def test_skeleton_report():
    psis = generate_unary(1, 10)
    thetas = [th.theta_from_psi(p) for p in psis]
    assert th.verify_skeletons(thetas, psis).passed
