"""Formula transformers linking the four statements, and their refutation in T*.

The transformers are the constructive steps that turn a witness for one
statement into a witness for the next:

* ``theta_from_psi``: a provability formula Psi(x) gives the proof formula
  Theta(x, y) = Psi(y) & x = x;
* ``rosser_lambda``: a proof formula Theta(x, y) gives the Rosser formula
  forall y. (Theta(y, x) -> exists z < y. Theta(z, v(x)));
* ``carnap_disjunction``: finitely many sentences A_i give the disjunction
  of the biconditionals Lambda(code(A_i)) <-> A_i.

T* is the theory of M*, so "T* proves s" is ``decide(s)``.  The verify_*
functions check the refutations sentence by sentence.
"""

from __future__ import annotations

import itertools
from typing import Iterable, Sequence

from selfref import syntax as sx
from selfref.errors import ArityError, AtomLimit
from selfref.framework import DEFAULT_CODING, StarCoding, designated_formulas
from selfref.presburger import decide
from selfref.report import ClaimReport

X, Y, Z = sx.Var(0), sx.Var(1), sx.Var(2)

MAX_ATOMS = 16


def rosser_lambda(theta: sx.Formula) -> sx.Formula:
    """forall y. (Theta(y, x) -> exists z < y. Theta(z, v(x))).

    The result has x as its only free variable whenever y is free in Theta.
    """
    if not sx.free_indices(theta) <= {0, 1}:
        raise ArityError(f"Theta may only have x and y free, has {sorted(sx.free_vars(theta))}")
    proves_x = sx.substitute_many(theta, {0: Y, 1: X})
    proves_neg = sx.substitute_many(theta, {0: Z, 1: sx.Nu(X)})
    return sx.Forall(1, sx.Implies(proves_x, sx.Exists(2, sx.And(sx.Less(Z, Y), proves_neg))))


def theta_from_psi(psi: sx.Formula) -> sx.Formula:
    if sx.free_indices(psi) != {0}:
        raise ArityError(f"Psi must have exactly x free, has {sorted(sx.free_vars(psi))}")
    return sx.And(sx.substitute_many(psi, {0: Y}), sx.Eq(X, X))


def _unary_var(lam: sx.Formula) -> int:
    free = sx.free_indices(lam)
    if len(free) != 1:
        raise ArityError(f"expected one free variable, found {sorted(sx.free_vars(lam))}")
    return next(iter(free))


def carnap_disjunction(lam: sx.Formula, sentences: Sequence[sx.Formula],
                       coding: StarCoding = DEFAULT_CODING) -> sx.Formula:
    """Right-nested disjunction of Lambda(code(A_i)) <-> A_i; empty gives ~(0 = 0)."""
    v = _unary_var(lam)
    parts = []
    for a in sentences:
        if not sx.is_sentence(a):
            raise ValueError(f"not a sentence: {sx.show(a)}")
        parts.append(sx.Iff(sx.substitute(lam, v, coding.numeral(a)), a))
    return sx.big_or(parts)


# ---------------------------------------------------------------------------
# Propositional validity
# ---------------------------------------------------------------------------

def _letters(f: sx.Formula, out: dict) -> None:
    if isinstance(f, sx.Not):
        _letters(f.body, out)
    elif isinstance(f, sx.BINARY_TYPES):
        _letters(f.left, out)
        _letters(f.right, out)
    elif isinstance(f, sx.ATOM_TYPES):
        out.setdefault(f, len(out))
    else:
        raise ValueError("propositional formulas have no quantifiers")


def prop_eval(f: sx.Formula, val) -> bool:
    """Evaluate connectives; ``val`` maps each atomic formula to a bool."""
    if isinstance(f, sx.Not):
        return not prop_eval(f.body, val)
    if isinstance(f, sx.And):
        return prop_eval(f.left, val) and prop_eval(f.right, val)
    if isinstance(f, sx.Or):
        return prop_eval(f.left, val) or prop_eval(f.right, val)
    if isinstance(f, sx.Implies):
        return (not prop_eval(f.left, val)) or prop_eval(f.right, val)
    if isinstance(f, sx.Iff):
        return prop_eval(f.left, val) == prop_eval(f.right, val)
    return val[f]


def tautology_valid(phi: sx.Formula) -> bool:
    """Truth-table validity, reading each distinct atomic formula as a letter."""
    atoms: dict = {}
    _letters(phi, atoms)
    if len(atoms) > MAX_ATOMS:
        raise AtomLimit(f"{len(atoms)} atoms exceed the limit of {MAX_ATOMS}")
    for row in itertools.product((False, True), repeat=len(atoms)):
        if not prop_eval(phi, dict(zip(atoms, row))):
            return False
    return True


def letter(i: int) -> sx.Formula:
    """The i-th propositional letter, written as the atom x_i = 0."""
    return sx.Eq(sx.Var(i), sx.ZERO)


def carnap_tautology(k: int) -> sx.Formula:
    """~AND_i (~p_i <-> q_i)  <->  OR_i (p_i <-> q_i) for i < k."""
    ps = [letter(2 * i) for i in range(k)]
    qs = [letter(2 * i + 1) for i in range(k)]
    lhs = sx.Not(sx.big_and(sx.Iff(sx.Not(p), q) for p, q in zip(ps, qs)))
    rhs = sx.big_or(sx.Iff(p, q) for p, q in zip(ps, qs))
    return sx.Iff(lhs, rhs)


# ---------------------------------------------------------------------------
# Refutations in T*
# ---------------------------------------------------------------------------

def _apply(f: sx.Formula, *args: sx.Term) -> sx.Formula:
    return sx.substitute_many(f, dict(enumerate(args)))


def verify_not_godel(corpus: Iterable[sx.Formula], coding: StarCoding = DEFAULT_CODING,
                     seed: int | None = None) -> ClaimReport:
    """T* proves s iff T* proves Psi*(code(s))."""
    psi = designated_formulas().psi
    report = ClaimReport("not-Goedel: T* |- s iff T* |- Psi*(code s)", seed=seed)
    for s in corpus:
        report.add(sx.show(s), decide(s), decide(_apply(psi, coding.numeral(s))))
    return report


def verify_not_tarski(corpus: Iterable[sx.Formula], coding: StarCoding = DEFAULT_CODING,
                      seed: int | None = None) -> ClaimReport:
    """T* proves Upsilon*(code(s)) <-> s."""
    upsilon = designated_formulas().upsilon
    report = ClaimReport("not-Tarski: T* |- Upsilon*(code s) <-> s", seed=seed)
    for s in corpus:
        report.add(sx.show(s), True, decide(sx.Iff(_apply(upsilon, coding.numeral(s)), s)))
    return report


def verify_not_carnap(families: Iterable[Sequence[sx.Formula]],
                      coding: StarCoding = DEFAULT_CODING,
                      seed: int | None = None) -> ClaimReport:
    """T* proves no disjunction OR_i (Lambda*(code A_i) <-> A_i)."""
    lam = designated_formulas().lam
    report = ClaimReport("not-Carnap: T* does not prove OR (Lambda*(code A) <-> A)", seed=seed)
    for fam in families:
        report.add([sx.show(a) for a in fam], False,
                   decide(carnap_disjunction(lam, fam, coding)))
    return report


def verify_not_rosser(corpus: Iterable[sx.Formula], witnesses: Sequence[int] = range(8),
                      coding: StarCoding = DEFAULT_CODING,
                      seed: int | None = None) -> ClaimReport:
    """Theta* bi-represents T*-provability on the sampled witnesses.

    True sentences s satisfy Theta*(m, code s) for every m; false ones
    satisfy ~Theta*(n, code s) for every n.
    """
    theta = designated_formulas().theta
    report = ClaimReport("not-Rosser: Theta* bi-represents T*-proofs", seed=seed,
                         params={"witnesses": list(witnesses)})
    for s in corpus:
        code = coding.numeral(s)
        proved = decide(s)
        for w in witnesses:
            instance = _apply(theta, sx.numeral(w), code)
            check = instance if proved else sx.Not(instance)
            report.add({"sentence": sx.show(s), "witness": w, "provable": proved},
                       True, decide(check))
    return report


def verify_consistency(corpus: Iterable[sx.Formula], seed: int | None = None) -> ClaimReport:
    report = ClaimReport("consistency: never both T* |- s and T* |- ~s", seed=seed)
    for s in corpus:
        report.add(sx.show(s), False, decide(s) and decide(sx.Not(s)))
    return report


def verify_skeletons(thetas: Sequence[sx.Formula], psis: Sequence[sx.Formula],
                     max_family: int = 4) -> ClaimReport:
    """Free-variable shapes of the transformers and the disjunction tautology."""
    report = ClaimReport("transformer shapes and the disjunction tautology",
                         params={"max_family": max_family})
    for t in thetas:
        report.add({"rosser_lambda": sx.show(t)}, ["x"], sorted(sx.free_vars(rosser_lambda(t))))
    for p in psis:
        report.add({"theta_from_psi": sx.show(p)}, ["x", "y"],
                   sorted(sx.free_vars(theta_from_psi(p))))
    for k in range(1, max_family + 1):
        report.add({"tautology_size": k}, True, tautology_valid(carnap_tautology(k)))
    return report
