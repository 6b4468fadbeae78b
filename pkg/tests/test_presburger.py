import pytest
from hypothesis import assume, given, settings, strategies as st

from selfref import presburger as pb
from selfref import syntax as sx
from selfref.errors import NonPresburger, NotASentence
from selfref.oracle import brute_force_eval, eval_term

from strategies import formulas, sentences, terms

X, Y = sx.Var(0), sx.Var(1)


def _qf_formulas(max_var, nu=True):
    t = terms(max_var, nu=nu, max_numeral=20)
    atoms = st.one_of(st.builds(sx.Less, t, t), st.builds(sx.Eq, t, t))
    return st.recursive(atoms, lambda c: st.one_of(
        st.builds(sx.Not, c), st.builds(sx.And, c, c), st.builds(sx.Or, c, c),
        st.builds(sx.Implies, c, c), st.builds(sx.Iff, c, c)), max_leaves=4)


@st.composite
def bounded_sentences(draw, quantifiers: int = 3):
    """Sentences whose quantifiers are all guarded by numerals below 20."""
    f = draw(_qf_formulas(quantifiers))
    for v in reversed(range(quantifiers)):
        bound = sx.numeral(draw(st.integers(0, 19)))
        guard = sx.Less(sx.Var(v), bound)
        f = (sx.Exists(v, sx.And(guard, f)) if draw(st.booleans())
             else sx.Forall(v, sx.Implies(guard, f)))
    return f


def test_nu_star_values():
    assert pb.nu_star(0) == 33
    assert pb.nu_star(1) == 32
    assert pb.nu_star(2) == 65
    assert pb.nu_star(136315008) == 2181040161


@given(st.integers(0, 10**12))
def test_nu_star_parity_law(n):
    # even (true) codes go to odd (false) codes and back
    assert pb.nu_star(n) % 2 != n % 2
    c = n // 2
    assert pb.nu_star(2 * c) == 1 + 2 * (16 * (1 + c))
    assert pb.nu_star(1 + 2 * c) == 2 * (16 * (1 + c))


@pytest.mark.parametrize("text, verdict", [
    ("0 = 0", True),
    ("~(0 = 0)", False),
    ("exists y. num(4) = y + y", True),
    ("exists y. 1 = y + y", False),
    ("v(v(0)) = num(544)", True),
    ("forall x. exists y. (x = y + y | x = y + y + 1)", True),
    ("exists x. x < 0", False),
    ("forall x. exists y. x < y", True),
    ("exists x. forall y. y < x + 1", False),
    ("forall x. (v(x) = x -> 0 = 1)", True),
    ("forall x. exists y. (v(x) = y + y + y + y + y + y + y + y + y + y + y + y + y + y + y + y"
     " + num(33) | v(x) = y + y + y + y + y + y + y + y + y + y + y + y + y + y + y + y)", True),
])
def test_decide_examples(text, verdict):
    assert pb.decide(sx.parse_formula(text)) is verdict


@given(bounded_sentences())
@settings(max_examples=150, deadline=None)
def test_decide_matches_exhaustive(s):
    verdict, exact = brute_force_eval(s, 64)
    assert exact
    assert pb.decide(s) == verdict


@given(bounded_sentences(quantifiers=2))
@settings(max_examples=100, deadline=None)
def test_textbook_elimination_matches_exhaustive(s):
    pb.RANGE_EXPANSION = False
    try:
        assert pb.decide_pf(pb.to_presburger(s)) == brute_force_eval(s, 64).verdict
    finally:
        pb.RANGE_EXPANSION = True


@given(sentences(max_numeral=20))
@settings(max_examples=150, deadline=None)
def test_excluded_middle(s):
    assert pb.decide(sx.Not(s)) == (not pb.decide(s))
    assert pb.decide(sx.Iff(s, s))


@given(sentences(max_numeral=20))
@settings(max_examples=100, deadline=None)
def test_nu_elimination_preserves_truth(s):
    g = pb.eliminate_nu(s)
    assert not any(isinstance(t, sx.Nu) for t in sx.walk(g))
    assert pb.decide(g) == pb.decide(s)


@given(_qf_formulas(2), st.integers(0, 60))
@settings(max_examples=150, deadline=None)
def test_qe_step_matches_instances(body, a):
    f = sx.Exists(1, body)
    out = pb.qe_step(f)
    assert pb.is_quantifier_free(out)
    assert pb.eval_qf(out, {0: a}) == pb.decide(sx.substitute(f, 0, sx.numeral(a)))


@given(_qf_formulas(2, nu=False), st.integers(0, 30))
@settings(max_examples=150, deadline=None)
def test_qe_step_finds_small_witnesses(body, a):
    # a witness found by enumeration must be found by elimination
    f = sx.Exists(1, body)
    out = pb.qe_step(f)
    inst = sx.substitute(body, 0, sx.numeral(a))
    if any(brute_force_eval(sx.substitute(inst, 1, sx.numeral(b)), 0).verdict for b in range(80)):
        assert pb.eval_qf(out, {0: a})


@given(formulas(max_var=2, max_numeral=20), st.integers(0, 40), st.integers(0, 40))
@settings(max_examples=100, deadline=None)
def test_open_elimination_agrees_with_closed_decision(f, a, b):
    qf = pb.eliminate_quantifiers(f)
    env = {0: a, 1: b}
    closed = sx.substitute_many(f, {0: sx.numeral(a), 1: sx.numeral(b)})
    assert pb.eval_qf(qf, env) == pb.decide(closed)


@given(_qf_formulas(2), st.integers(0, 50), st.integers(0, 50))
@settings(max_examples=150, deadline=None)
def test_translation_is_faithful_on_qf(f, a, b):
    env = {0: a, 1: b}
    closed = sx.substitute_many(f, {0: sx.numeral(a), 1: sx.numeral(b)})
    assert pb.eval_qf(pb.to_presburger(f), env) == brute_force_eval(closed, 0).verdict


@given(_qf_formulas(2), st.integers(0, 50), st.integers(0, 50))
@settings(max_examples=100, deadline=None)
def test_negate_qf(f, a, b):
    g = pb.qe(pb.to_presburger(f))
    env = {0: a, 1: b}
    assert pb.eval_qf(pb.negate_qf(g), env) == (not pb.eval_qf(g, env))


@given(terms(max_var=0, max_numeral=50))
def test_eval_closed_term_matches_oracle(t):
    assert pb.eval_closed_term(t) == eval_term(t, {})


def test_progression_solver():
    for step in (-7, -1, 1, 3, 16):
        for const in range(-5, 6):
            for m in (2, 6, 34):
                prog = pb._progression(step, const, m)
                hits = [j for j in range(200) if (step * j + const) % m == 0]
                if prog is None:
                    assert not hits
                else:
                    a, n = prog
                    assert hits == [j for j in range(200) if j % n == a]


def test_worked_eliminations():
    assert pb.show_pf(pb.eliminate_quantifiers(sx.parse_formula("exists y. x = y + y"))) == "2 | x"
    assert pb.eliminate_quantifiers(sx.parse_formula("exists x. (y < x & x < y + num(2))")) == pb.TRUE


def test_step_innermost_walks_to_completion():
    f = pb.to_presburger(sx.parse_formula("forall x. exists y. (x = y + y | x = y + y + 1)"))
    f, done = pb.step_innermost(f)
    assert done and isinstance(f, pb.PForall) and pb.is_quantifier_free(f.body)
    f, done = pb.step_innermost(f)
    assert done and f == pb.TRUE
    assert pb.step_innermost(f) == (pb.TRUE, False)


def test_qe_step_rejects_nested_quantifier():
    with pytest.raises(ValueError):
        pb.qe_step(sx.parse_formula("exists y. forall x. x = y"))


def test_errors():
    with pytest.raises(NotASentence):
        pb.decide(sx.parse_formula("x = x"))
    with pytest.raises(NonPresburger):
        pb.decide(sx.parse_formula("0 * 1 = 0", sx.Language.ARITH))
    with pytest.raises(NonPresburger):
        pb.decide(sx.Sigma(sx.ZERO, sx.ZERO))


def test_lin_arithmetic():
    a = pb.Lin.of({0: 2, 1: -1}, 3)
    b = pb.Lin.var(1)
    assert (a + b).coeffs == ((0, 2),)
    assert (a - a) == pb.Lin()
    assert a.subst(0, pb.Lin.of({1: 1}, 1)).evaluate({1: 4}) == a.evaluate({0: 5, 1: 4})
    assert str(a) == "2x - y + 3"


@given(st.integers(-30, 30), st.integers(-30, 30), st.integers(1, 12), st.integers(-40, 40))
def test_literal_normalization(c0, c1, d, k):
    term = pb.Lin.of({0: c0, 1: c1}, k)
    for lit in (pb.Lt(term), pb.EqZ(term), pb.NeZ(term), pb.Dvd(d, term), pb.NDvd(d, term)):
        norm = pb.normalize_literal(lit)
        for a in range(6):
            for b in range(6):
                env = {0: a, 1: b}
                assert pb.eval_qf(norm, env) == pb.eval_qf(lit, env)


def test_times():
    assert pb.times(0, X) == sx.ZERO
    assert pb.times(3, X) == sx.Add(sx.Add(X, X), X)


def test_nested_nu():
    # v(v(2k)) = 256*2k + 544 and v(v(2k+1)) = 256*(2k+1) + 289
    vv = sx.Nu(sx.Nu(X))
    even = sx.Eq(vv, sx.Add(pb.times(256, X), sx.numeral(544)))
    odd = sx.Eq(vv, sx.Add(pb.times(256, X), sx.numeral(289)))
    assert pb.decide(sx.Forall(0, sx.Or(even, odd)))
    assert not pb.decide(sx.Forall(0, even))
    assert pb.decide(sx.parse_formula("exists y < num(18). (0 < v(y) & y < v(v(y)))"))
