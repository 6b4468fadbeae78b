"""Seeded generators for sentences, non-sentences and unary formulas."""

from __future__ import annotations

import random
from dataclasses import dataclass

from selfref import syntax as sx
from selfref.errors import SelfRefError


@dataclass(frozen=True)
class CorpusConfig:
    seed: int = 0
    size: int = 100
    quantifier_depth: int = 2
    term_depth: int = 3
    max_numeral: int = 8
    formula_depth: int = 3
    bounded: bool = False
    allow_nu: bool = True


EDGE_CASES = (
    "0 = 0",
    "~(0 = 0)",
    "~(~(0 = 0))",
    "exists y. num(4) = y + y",
    "exists y. 1 = y + y",
    "v(0) = num(33)",
    "v(1) = num(32)",
    "v(v(0)) = num(544)",
    "forall x. exists y. (x = y + y | x = y + y + 1)",
    "forall x. x < x + 1",
    "exists x. x < 0",
    "0 = 0 | ~(0 = 0)",
    "0 = 0 & ~(0 = 0)",
    "forall x. (v(x) = x -> 0 = 1)",
    "forall x. exists y. v(x) < y",
)


def edge_cases() -> list[sx.Formula]:
    return [sx.parse_formula(t) for t in EDGE_CASES]


class _Gen:
    def __init__(self, cfg: CorpusConfig, rng: random.Random):
        self.cfg = cfg
        self.rng = rng

    def term(self, scope: list[int], depth: int) -> sx.Term:
        r = self.rng
        if depth <= 1 or r.random() < 0.45:
            choices = ["0", "1", "num"] + ["var"] * (2 * bool(scope))
            kind = r.choice(choices)
            if kind == "0":
                return sx.ZERO
            if kind == "1":
                return sx.ONE
            if kind == "num":
                return sx.numeral(r.randint(2, self.cfg.max_numeral))
            return sx.Var(r.choice(scope))
        if self.cfg.allow_nu and r.random() < 0.3:
            return sx.Nu(self.term(scope, depth - 1))
        return sx.Add(self.term(scope, depth - 1), self.term(scope, depth - 1))

    def atom(self, scope: list[int]) -> sx.Formula:
        a = self.term(scope, self.cfg.term_depth)
        b = self.term(scope, self.cfg.term_depth)
        return sx.Less(a, b) if self.rng.random() < 0.5 else sx.Eq(a, b)

    def formula(self, scope: list[int], depth: int, qdepth: int) -> sx.Formula:
        r = self.rng
        roll = r.random()
        if depth <= 0 or roll < 0.25:
            return self.atom(scope)
        if qdepth > 0 and roll < 0.55:
            v = len(scope)
            inner = self.formula(scope + [v], depth - 1, qdepth - 1)
            existential = r.random() < 0.5
            if self.cfg.bounded:
                guard = sx.Less(sx.Var(v), sx.numeral(r.randint(0, self.cfg.max_numeral)))
                if existential:
                    return sx.Exists(v, sx.And(guard, inner))
                return sx.Forall(v, sx.Implies(guard, inner))
            return sx.Exists(v, inner) if existential else sx.Forall(v, inner)
        if roll < 0.65:
            return sx.Not(self.formula(scope, depth - 1, qdepth))
        kind = r.choice([sx.And, sx.Or, sx.Implies, sx.Iff])
        return kind(self.formula(scope, depth - 1, qdepth),
                    self.formula(scope, depth - 1, qdepth))


def generate_sentences(cfg: CorpusConfig = CorpusConfig(), with_edge_cases: bool = True
                       ) -> list[sx.Formula]:
    """Deterministic L* sentences; distinct, edge cases first."""
    rng = random.Random(cfg.seed)
    gen = _Gen(cfg, rng)
    out: dict[sx.Formula, None] = {}
    if with_edge_cases:
        for f in edge_cases():
            if len(out) < cfg.size:
                out[f] = None
    while len(out) < cfg.size:
        out[gen.formula([], cfg.formula_depth, cfg.quantifier_depth)] = None
    return list(out)


def _reads_as_sentence(symbols: tuple[str, ...]) -> bool:
    try:
        e = sx.from_symbol_string(symbols)
    except SelfRefError:
        return False
    return sx.is_formula(e) and not sx.free_indices(e)


def generate_non_sentences(seed: int, count: int) -> list:
    """Half open formulas (a free variable), half raw symbol strings."""
    rng = random.Random(seed)
    gen = _Gen(CorpusConfig(seed=seed), rng)
    alphabet = ["0", "1", "+", "<", "=", "ν", "∧", "∨", "→", "↔", "∀", "∃",
                "(", ")", ",", "¬", "x0", "x1", "x2"]
    out: list = []
    seen = set()
    while len(out) < count:
        if len(out) % 2 == 0:
            f = gen.formula([0], 2, 1)
            if 0 not in sx.free_indices(f) or f in seen:
                continue
            item = f
        else:
            item = tuple(rng.choice(alphabet) for _ in range(rng.randint(1, 12)))
            if item in seen or _reads_as_sentence(item):
                continue
        seen.add(item)
        out.append(item)
    return out


def generate_unary(seed: int, count: int, lang: sx.Language = sx.Language.LSTAR,
                   allow_nu: bool | None = None, quantifier_depth: int = 2) -> list[sx.Formula]:
    """Formulas whose only free variable is x."""
    if allow_nu is None:
        allow_nu = lang is sx.Language.LSTAR
    cfg = CorpusConfig(seed=seed, allow_nu=allow_nu, quantifier_depth=quantifier_depth)
    gen = _Gen(cfg, random.Random(seed))
    out: dict[sx.Formula, None] = {}
    while len(out) < count:
        # variable 0 is x; generated quantifiers take indices from 1 upward
        f = gen.formula([0], cfg.formula_depth, quantifier_depth)
        if sx.free_indices(f) == {0}:
            out[f] = None
    return list(out)


def generate_families(seed: int, count: int, max_size: int, pool: list[sx.Formula]
                      ) -> list[list[sx.Formula]]:
    rng = random.Random(seed)
    return [rng.sample(pool, rng.randint(1, min(max_size, len(pool)))) for _ in range(count)]
