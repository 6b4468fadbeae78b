"""The counterexample structure M* = <N; 0, 1, <, +, nu*> and its coding.

The truth-parity coding sends an expression eta to 2*c(eta) when eta is an
M*-true L* sentence and to 1 + 2*c(eta) otherwise, where c is Ackermann's
coding.  Under it nu* maps the code of every sentence to the code of its
negation, which is what makes the weak theory Q- hold in M*.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from typing import NamedTuple, Sequence, Union

from selfref import syntax as sx
from selfref.coding import DEFAULT_TABLE, SymbolTable, encode
from selfref.errors import ParseError
from selfref.presburger import decide, nu_star

__all__ = [
    "nu_star", "StarCoding", "star_code", "star_numeral", "check_negation_mapping",
    "QMinusInstance", "axiom_instance", "Designated", "designated_formulas",
    "verify_framework",
]

Expression = Union[sx.Formula, sx.Term, Sequence[str]]


def _as_sentence(eta: Expression):
    """The sentence eta denotes, or None when eta is not a sentence."""
    if isinstance(eta, (tuple, list)):
        try:
            eta = sx.from_symbol_string(eta)
        except ParseError:
            return None
    if sx.is_formula(eta) and not sx.free_indices(eta):
        sx.check_language(eta, sx.Language.LSTAR)
        return eta
    return None


def _symbols(eta: Expression, max_numeral: int) -> tuple[str, ...]:
    if isinstance(eta, (tuple, list)):
        return tuple(eta)
    return sx.to_symbol_string(eta, max_numeral=max_numeral)


class StarCoding:
    """Truth-parity coding over a symbol table.

    Sentence truth values are memoized through the decider's cache, which
    is keyed on immutable ASTs and safe under concurrent reads.
    """

    def __init__(self, table: SymbolTable = DEFAULT_TABLE,
                 max_numeral: int = sx.DEFAULT_MAX_NUMERAL):
        self.table = table
        self.max_numeral = max_numeral

    def ackermann(self, eta: Expression) -> int:
        return encode(_symbols(eta, self.max_numeral), self.table)

    def is_true_sentence(self, eta: Expression) -> bool:
        s = _as_sentence(eta)
        return s is not None and decide(s)

    def code(self, eta: Expression) -> int:
        c = self.ackermann(eta)
        return 2 * c if self.is_true_sentence(eta) else 1 + 2 * c

    def numeral(self, eta: Expression) -> sx.Term:
        if isinstance(eta, (tuple, list)) and not eta:
            raise ValueError("star numerals are taken of nonempty expressions only")
        return sx.numeral(self.code(eta))

    def negation(self, eta: Expression) -> Expression:
        if isinstance(eta, (tuple, list)):
            return ("¬",) + tuple(eta)
        return sx.negate(eta)

    def check_negation_mapping(self, eta: Expression) -> bool:
        """nu*(code(s)) = code(~s) for sentences; nu*(code) + 1 = code(~eta) otherwise."""
        lhs = nu_star(self.code(eta))
        if _as_sentence(eta) is None:
            lhs += 1
        return lhs == self.code(self.negation(eta))


DEFAULT_CODING = StarCoding()


def star_code(eta: Expression, coding: StarCoding = DEFAULT_CODING) -> int:
    return coding.code(eta)


def star_numeral(eta: Expression, coding: StarCoding = DEFAULT_CODING) -> sx.Term:
    return coding.numeral(eta)


def check_negation_mapping(eta: Expression, coding: StarCoding = DEFAULT_CODING) -> bool:
    return coding.check_negation_mapping(eta)


@dataclass(frozen=True)
class QMinusInstance:
    tag: str
    param: object
    formula: sx.Formula


def axiom_instance(tag: str, param, coding: StarCoding = DEFAULT_CODING) -> QMinusInstance:
    x = sx.Var(0)
    if tag == "A1":
        n = sx.numeral(param)
        f = sx.Forall(0, sx.Or(sx.Or(sx.Less(x, n), sx.Eq(x, n)), sx.Less(n, x)))
    elif tag == "A2":
        n = sx.numeral(param)
        f = sx.Forall(0, sx.Iff(sx.Less(x, n),
                                sx.big_or(sx.Eq(x, sx.numeral(i)) for i in range(param))))
    elif tag == "A3":
        if not sx.is_sentence(param):
            raise ValueError("A3 is instantiated with sentences only")
        f = sx.Eq(sx.Nu(coding.numeral(param)), coding.numeral(sx.negate(param)))
    else:
        raise ValueError(f"unknown axiom tag {tag!r}")
    return QMinusInstance(tag, param, f)


class Designated(NamedTuple):
    psi: sx.Formula
    upsilon: sx.Formula
    lam: sx.Formula
    theta: sx.Formula


@functools.lru_cache(maxsize=1)
def designated_formulas() -> Designated:
    x, y = sx.Var(0), sx.Var(1)
    psi = sx.Exists(1, sx.Eq(x, sx.Add(y, y)))
    theta = sx.And(sx.substitute_many(psi, {0: y}), sx.Eq(x, x))
    return Designated(psi, psi, sx.Not(psi), theta)


# ---------------------------------------------------------------------------
# Whole-framework verification
# ---------------------------------------------------------------------------

def verify_framework(seed: int = 0, corpus_size: int = 100, bound: int = 64,
                     coding: StarCoding = DEFAULT_CODING, max_axiom_n: int = 32) -> list:
    """Run every framework law over a seeded corpus; one report per law."""
    from selfref.corpus import CorpusConfig, generate_non_sentences, generate_sentences
    from selfref.oracle import brute_force_eval
    from selfref.presburger import eliminate_nu
    from selfref.report import ClaimReport

    params = {"corpus_size": corpus_size, "bound": bound}
    corpus = generate_sentences(CorpusConfig(seed=seed, size=corpus_size))
    reports = []

    r = ClaimReport("nu* worked values", seed=seed, params=params)
    for n, want in ((0, 33), (1, 32), (136315008, 2181040161)):
        r.add(n, want, nu_star(n))
    reports.append(r)

    r = ClaimReport("parity law: code(s) even iff M* |= s", seed=seed, params=params)
    for s in corpus:
        r.add(sx.show(s), decide(s), coding.code(s) % 2 == 0)
    reports.append(r)

    r = ClaimReport("negation mapping: nu*(code s) = code(~s)", seed=seed, params=params)
    for s in corpus:
        r.add(sx.show(s), True, coding.check_negation_mapping(s))
    reports.append(r)

    r = ClaimReport("non-sentences: nu*(code e) + 1 = code(~e)", seed=seed, params=params)
    for e in generate_non_sentences(seed, corpus_size):
        shown = sx.show(e) if sx.is_formula(e) else " ".join(e)
        r.add(shown, True, nu_star(coding.code(e)) + 1 == coding.code(coding.negation(e)))
    reports.append(r)

    r = ClaimReport("Q- contained in T*", seed=seed, params={**params, "max_n": max_axiom_n})
    for n in range(max_axiom_n + 1):
        for tag in ("A1", "A2"):
            r.add(f"{tag}({n})", True, decide(axiom_instance(tag, n, coding).formula))
    for s in corpus:
        r.add(f"A3({sx.show(s)})", True, decide(axiom_instance("A3", s, coding).formula))
    reports.append(r)

    r = ClaimReport("truth-parity coding is injective on the corpus", seed=seed, params=params)
    codes = [coding.code(s) for s in corpus]
    r.add("distinct codes", len(corpus), len(set(codes)))
    reports.append(r)

    r = ClaimReport("decider agrees with exhaustive evaluation", seed=seed, params=params)
    bounded = generate_sentences(CorpusConfig(seed=seed, size=corpus_size, bounded=True),
                                 with_edge_cases=False)
    for s in bounded:
        verdict, exact = brute_force_eval(s, bound)
        if exact:
            r.add(sx.show(s), verdict, decide(s))
    reports.append(r)

    r = ClaimReport("nu elimination preserves verdicts", seed=seed, params=params)
    for s in corpus:
        r.add(sx.show(s), decide(s), decide(eliminate_nu(s)))
    reports.append(r)
    return reports
