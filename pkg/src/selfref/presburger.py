"""Decision procedure for the theory of <N; 0, 1, <, +, nu*>.

nu*(n) is 33 + 16n for even n and 16 + 16n for odd n.  Because nu* is
definable from 1 and +, every L* sentence reduces to a Presburger sentence,
which Cooper-style quantifier elimination decides.

Internally formulas are built from linear terms over variable indices and
five literal kinds: ``0 < t``, ``t = 0``, ``t != 0``, ``d | t`` and its
negation.  All quantifiers range over the naturals.
"""

from __future__ import annotations

import functools
import itertools
import math
from dataclasses import dataclass
from typing import Iterable, Mapping, Union

from selfref import syntax as sx
from selfref.errors import NonPresburger, NotASentence


def nu_star(n: int) -> int:
    return 33 + 16 * n if n % 2 == 0 else 16 + 16 * n


# ---------------------------------------------------------------------------
# Linear terms
# ---------------------------------------------------------------------------

@dataclass(frozen=True, slots=True)
class Lin:
    """sum(c * x_v for v, c in coeffs) + const, with coeffs sorted and nonzero."""

    coeffs: tuple[tuple[int, int], ...] = ()
    const: int = 0

    @staticmethod
    def of(coeffs: Mapping[int, int], const: int = 0) -> "Lin":
        return Lin(tuple(sorted((v, c) for v, c in coeffs.items() if c)), const)

    @staticmethod
    def var(v: int) -> "Lin":
        return Lin(((v, 1),), 0)

    def coeff(self, v: int) -> int:
        for w, c in self.coeffs:
            if w == v:
                return c
        return 0

    def vars(self) -> set[int]:
        return {v for v, _ in self.coeffs}

    def __add__(self, other: "Lin") -> "Lin":
        d = dict(self.coeffs)
        for v, c in other.coeffs:
            d[v] = d.get(v, 0) + c
        return Lin.of(d, self.const + other.const)

    def __neg__(self) -> "Lin":
        return Lin(tuple((v, -c) for v, c in self.coeffs), -self.const)

    def __sub__(self, other: "Lin") -> "Lin":
        return self + (-other)

    def scale(self, k: int) -> "Lin":
        if k == 0:
            return Lin((), 0)
        return Lin(tuple((v, c * k) for v, c in self.coeffs), self.const * k)

    def shift(self, k: int) -> "Lin":
        return Lin(self.coeffs, self.const + k)

    def drop(self, v: int) -> "Lin":
        return Lin(tuple((w, c) for w, c in self.coeffs if w != v), self.const)

    def subst(self, v: int, t: "Lin") -> "Lin":
        c = self.coeff(v)
        if not c:
            return self
        return self.drop(v) + t.scale(c)

    def evaluate(self, env: Mapping[int, int]) -> int:
        return self.const + sum(c * env[v] for v, c in self.coeffs)

    def __str__(self) -> str:
        parts = []
        for v, c in self.coeffs:
            name = sx.var_name(v)
            parts.append(name if c == 1 else f"-{name}" if c == -1 else f"{c}{name}")
        if self.const or not parts:
            parts.append(str(self.const))
        return " + ".join(parts).replace("+ -", "- ")


# ---------------------------------------------------------------------------
# Internal formulas
# ---------------------------------------------------------------------------

@dataclass(frozen=True, slots=True)
class Lt:
    """0 < term"""
    term: Lin


@dataclass(frozen=True, slots=True)
class EqZ:
    """term = 0"""
    term: Lin


@dataclass(frozen=True, slots=True)
class NeZ:
    """term != 0"""
    term: Lin


@dataclass(frozen=True, slots=True)
class Dvd:
    d: int
    term: Lin


@dataclass(frozen=True, slots=True)
class NDvd:
    d: int
    term: Lin


@dataclass(frozen=True, slots=True)
class Const:
    value: bool


TRUE = Const(True)
FALSE = Const(False)


@dataclass(frozen=True, slots=True)
class PNot:
    body: "PF"


@dataclass(frozen=True, slots=True)
class PAnd:
    parts: tuple


@dataclass(frozen=True, slots=True)
class POr:
    parts: tuple


@dataclass(frozen=True, slots=True)
class PIff:
    left: "PF"
    right: "PF"


@dataclass(frozen=True, slots=True)
class PExists:
    var: int
    body: "PF"


@dataclass(frozen=True, slots=True)
class PForall:
    var: int
    body: "PF"


LinearAtom = Union[Lt, EqZ, NeZ, Dvd, NDvd]
LITERALS = (Lt, EqZ, NeZ, Dvd, NDvd)
PF = Union[Lt, EqZ, NeZ, Dvd, NDvd, Const, PNot, PAnd, POr, PIff, PExists, PForall]


def pf_vars(f: PF) -> set[int]:
    """Free variables of an internal formula."""
    if isinstance(f, LITERALS):
        return f.term.vars()
    if isinstance(f, Const):
        return set()
    if isinstance(f, PNot):
        return pf_vars(f.body)
    if isinstance(f, (PAnd, POr)):
        return set().union(*(pf_vars(p) for p in f.parts))
    if isinstance(f, PIff):
        return pf_vars(f.left) | pf_vars(f.right)
    return pf_vars(f.body) - {f.var}


def is_quantifier_free(f: PF) -> bool:
    if isinstance(f, (PExists, PForall)):
        return False
    if isinstance(f, (PAnd, POr)):
        return all(is_quantifier_free(p) for p in f.parts)
    if isinstance(f, PNot):
        return is_quantifier_free(f.body)
    if isinstance(f, PIff):
        return is_quantifier_free(f.left) and is_quantifier_free(f.right)
    return True


# ---------------------------------------------------------------------------
# Normalization
# ---------------------------------------------------------------------------

def _gcd_coeffs(t: Lin) -> int:
    return math.gcd(*(c for _, c in t.coeffs)) if t.coeffs else 0


def _norm_lt(t: Lin) -> PF:
    if not t.coeffs:
        return Const(t.const > 0)
    g = _gcd_coeffs(t)
    if g > 1:
        t = Lin(tuple((v, c // g) for v, c in t.coeffs), -((-t.const) // g))
    cs = [c for _, c in t.coeffs]
    # every variable is a natural
    if all(c > 0 for c in cs) and t.const >= 1:
        return TRUE
    if all(c < 0 for c in cs) and t.const <= 0:
        return FALSE
    return Lt(t)


def _norm_eq(t: Lin) -> PF:
    if not t.coeffs:
        return Const(t.const == 0)
    g = _gcd_coeffs(t)
    if t.const % g:
        return FALSE
    t = Lin(tuple((v, c // g) for v, c in t.coeffs), t.const // g)
    if t.coeffs[0][1] < 0:
        t = -t
    cs = [c for _, c in t.coeffs]
    if all(c > 0 for c in cs) and t.const > 0:
        return FALSE
    return EqZ(t)


def _norm_dvd(d: int, t: Lin) -> PF:
    if d < 0:
        d = -d
    if d == 0:
        return _norm_eq(t)
    if d == 1:
        return TRUE
    coeffs = tuple((v, c % d) for v, c in t.coeffs if c % d)
    const = t.const % d
    if not coeffs:
        return Const(const == 0)
    g = math.gcd(d, *(c for _, c in coeffs))
    if const % g:
        return FALSE
    if g > 1:
        d //= g
        coeffs = tuple((v, c // g) for v, c in coeffs)
        const //= g
    if d == 1:
        return TRUE
    return Dvd(d, Lin(coeffs, const))


def _negate_const(f: PF) -> PF:
    return FALSE if f is TRUE or f == TRUE else TRUE


def normalize_literal(lit: PF) -> PF:
    if isinstance(lit, Lt):
        return _norm_lt(lit.term)
    if isinstance(lit, EqZ):
        return _norm_eq(lit.term)
    if isinstance(lit, NeZ):
        out = _norm_eq(lit.term)
        return NeZ(out.term) if isinstance(out, EqZ) else _negate_const(out)
    if isinstance(lit, Dvd):
        return _norm_dvd(lit.d, lit.term)
    if isinstance(lit, NDvd):
        out = _norm_dvd(lit.d, lit.term)
        return NDvd(out.d, out.term) if isinstance(out, Dvd) else (
            NeZ(out.term) if isinstance(out, EqZ) else _negate_const(out))
    return lit


def _complement(lit: PF):
    if isinstance(lit, EqZ):
        return NeZ(lit.term)
    if isinstance(lit, Dvd):
        return NDvd(lit.d, lit.term)
    return None


def mk_and(parts: Iterable[PF]) -> PF:
    out: dict[PF, None] = {}
    for p in parts:
        if isinstance(p, PAnd):
            for q in p.parts:
                out[q] = None
        elif isinstance(p, Const):
            if not p.value:
                return FALSE
        else:
            out[p] = None
    if not out:
        return TRUE
    if len(out) == 1:
        return next(iter(out))
    if any(_complement(p) in out for p in out):
        return FALSE
    return PAnd(tuple(out))


def mk_or(parts: Iterable[PF]) -> PF:
    out: dict[PF, None] = {}
    for p in parts:
        if isinstance(p, POr):
            for q in p.parts:
                out[q] = None
        elif isinstance(p, Const):
            if p.value:
                return TRUE
        else:
            out[p] = None
    if not out:
        return FALSE
    if len(out) == 1:
        return next(iter(out))
    return POr(tuple(out))


def negate_qf(f: PF) -> PF:
    """Negation of a quantifier-free NNF formula, kept in NNF."""
    if isinstance(f, Const):
        return Const(not f.value)
    if isinstance(f, Lt):
        return normalize_literal(Lt(Lin((), 1) - f.term))
    if isinstance(f, EqZ):
        return NeZ(f.term)
    if isinstance(f, NeZ):
        return EqZ(f.term)
    if isinstance(f, Dvd):
        return NDvd(f.d, f.term)
    if isinstance(f, NDvd):
        return Dvd(f.d, f.term)
    if isinstance(f, PAnd):
        return mk_or(negate_qf(p) for p in f.parts)
    if isinstance(f, POr):
        return mk_and(negate_qf(p) for p in f.parts)
    raise TypeError(f"not a quantifier-free NNF formula: {f!r}")


def _map_literals(f: PF, fn) -> PF:
    if isinstance(f, PAnd):
        return mk_and(_map_literals(p, fn) for p in f.parts)
    if isinstance(f, POr):
        return mk_or(_map_literals(p, fn) for p in f.parts)
    if isinstance(f, Const):
        return f
    return fn(f)


def subst_qf(f: PF, v: int, t: Lin) -> PF:
    """Substitute the linear term t for variable v and renormalize."""
    def fn(lit):
        if not lit.term.coeff(v):
            return lit
        if isinstance(lit, (Dvd, NDvd)):
            return normalize_literal(type(lit)(lit.d, lit.term.subst(v, t)))
        return normalize_literal(type(lit)(lit.term.subst(v, t)))
    return _map_literals(f, fn)


def _literals(f: PF):
    if isinstance(f, (PAnd, POr)):
        for p in f.parts:
            yield from _literals(p)
    elif not isinstance(f, Const):
        yield f


# ---------------------------------------------------------------------------
# Quantifier elimination
# ---------------------------------------------------------------------------

def _lcm(values: Iterable[int]) -> int:
    out = 1
    for v in values:
        out = out * v // math.gcd(out, v)
    return out


def _unit_coefficient(lit: PF, x: int, l: int) -> PF:
    """Scale lit so that x has coefficient +-l, then read l*x as x itself."""
    c = lit.term.coeff(x)
    if not c:
        return lit
    k = l // abs(c)
    term = lit.term.scale(k)
    term = Lin(tuple((v, (1 if c > 0 else -1) if v == x else cc) for v, cc in term.coeffs),
               term.const)
    if isinstance(lit, (Dvd, NDvd)):
        return type(lit)(lit.d * k, term)
    return type(lit)(term)


def _project(f: PF, x: int, plus: bool) -> PF:
    """Behaviour of f for x -> +infinity (plus) or -infinity."""
    def fn(lit):
        c = lit.term.coeff(x)
        if not c or isinstance(lit, (Dvd, NDvd)):
            return lit
        if isinstance(lit, Lt):
            return Const((c > 0) == plus)
        return Const(isinstance(lit, NeZ))
    return _map_literals(f, fn)


def _gate_condition(g: PF, x: int, point: Lin, sign: int):
    """Condition on j for g to survive x := point + sign*j, or None if always.

    Only the constant of the substituted term depends on j, so the literal
    normalizes to false exactly when that constant misses a residue class.
    Returns (wanted, step, const, modulus): wanted says whether
    step*j + const must be divisible by modulus or must not be.
    """
    base = g.term.subst(x, point)
    step = g.term.coeff(x) * sign
    rest = [c % g.d for _, c in base.coeffs if c % g.d]
    if isinstance(g, Dvd):
        modulus = math.gcd(g.d, *rest) if rest else g.d
        return None if modulus == 1 else (True, step, base.const, modulus)
    if rest:
        return None
    return (False, step, base.const, g.d)


def _progression(step: int, const: int, m: int):
    """(a, n) with step*j + const = 0 (mod m) iff j = a (mod n); None if unsolvable."""
    g = math.gcd(step, m)
    if const % g:
        return None
    n = m // g
    return ((-const // g) * pow(step // g, -1, n) % n if n > 1 else 0), n


def _crt(a1: int, n1: int, a2: int, n2: int):
    g = math.gcd(n1, n2)
    if (a2 - a1) % g:
        return None
    lcm = n1 // g * n2
    k = ((a2 - a1) // g * pow(n1 // g, -1, n2 // g)) % (n2 // g) if n2 // g > 1 else 0
    return (a1 + n1 * k) % lcm, lcm


def _admissible_offsets(conditions, limit: int):
    """The j in 1..limit meeting every gate condition, as (candidates, exclusions).

    candidates is a range holding the j that pass the divisibility gates;
    the exclusions still have to be filtered out with _passes.
    """
    a, n = 0, 1
    excluded = []
    for cond in conditions:
        if cond is None:
            continue
        wanted, step, const, m = cond
        if not wanted:
            excluded.append((step, const, m))
            continue
        prog = _progression(step, const, m)
        merged = prog and _crt(a, n, *prog)
        if merged is None:
            return range(0), []
        a, n = merged
    first = a if a >= 1 else a + n * ((1 - a + n - 1) // n)
    return range(first, limit + 1, n), excluded


def _size(r: range) -> int:
    # len() overflows past sys.maxsize, and bounds here can be huge numerals
    return max(0, (r.stop - r.start + r.step - 1) // r.step)


def _passes(j: int, excluded) -> bool:
    return all((step * j + const) % m for step, const, m in excluded)


def _cooper(x: int, phi: PF) -> PF:
    nonneg = Lt(Lin(((x, 1),), 1))
    phi = PAnd((nonneg,) + (phi.parts if isinstance(phi, PAnd) else (phi,)))
    lits = list(_literals(phi))
    l = _lcm(abs(lit.term.coeff(x)) for lit in lits if lit.term.coeff(x))
    phi = _map_literals(phi, lambda lit: _unit_coefficient(lit, x, l))
    if l > 1:
        phi = mk_and([phi, Dvd(l, Lin.var(x))])

    if isinstance(phi, PAnd):
        for p in phi.parts:
            if isinstance(p, EqZ) and p.term.coeff(x):
                c = p.term.coeff(x)
                solution = -p.term.drop(x) if c == 1 else p.term.drop(x)
                return subst_qf(phi, x, solution)

    lower: dict[Lin, None] = {}
    upper: dict[Lin, None] = {}
    divisors = []
    for lit in _literals(phi):
        c = lit.term.coeff(x)
        if not c:
            continue
        if isinstance(lit, (Dvd, NDvd)):
            divisors.append(lit.d)
            continue
        rest = lit.term.drop(x)
        # with c = +1 the literal mentions x + rest, with c = -1 it mentions -x + rest
        point = -rest if c == 1 else rest
        if isinstance(lit, Lt):
            (lower if c == 1 else upper)[point] = None
        elif isinstance(lit, EqZ):
            lower[point.shift(-1)] = None
            upper[point.shift(1)] = None
        else:
            lower[point] = None
            upper[point] = None
    big_d = _lcm(divisors)
    # top-level divisibility conjuncts rule out most candidate points cheaply
    gates = [p for p in (phi.parts if isinstance(phi, PAnd) else (phi,))
             if isinstance(p, (Dvd, NDvd)) and p.term.coeff(x)]

    def offsets(point: Lin, sign: int, limit: int = big_d):
        return _admissible_offsets([_gate_condition(g, x, point, sign) for g in gates], limit)

    # every plan is exact; pick the one with the fewest candidate substitutions
    plans = []
    for plus, points in ((False, lower), (True, upper)):
        sign = -1 if plus else 1
        inf = _project(phi, x, plus)
        parts = [] if inf == FALSE else [(inf, Lin(), sign, offsets(Lin(), sign))]
        parts += [(phi, p, sign, offsets(p, sign)) for p in points]
        plans.append(parts)
    cap = _constant_upper_bound(phi, x)
    if RANGE_EXPANSION and cap is not None:
        # 0 <= x < cap: try every value (offsets start at 1, hence the -1)
        plans.append([(phi, Lin((), -1), 1, offsets(Lin((), -1), 1, cap))])
    best = min(plans, key=lambda parts: sum(_size(c) for *_, (c, _) in parts))

    out = []
    for f, point, sign, (candidates, excluded) in best:
        for j in candidates:
            if not _passes(j, excluded):
                continue
            out.append(subst_qf(f, x, point.shift(sign * j)))
            if out[-1] == TRUE:
                return TRUE
    return mk_or(out)


def _constant_upper_bound(phi: PF, x: int) -> int | None:
    """c when phi has a top-level conjunct x < c with c a constant."""
    caps = [p.term.const for p in (phi.parts if isinstance(phi, PAnd) else (phi,))
            if isinstance(p, Lt) and p.term.coeffs == ((x, -1),)]
    return min(caps) if caps else None


# Bounded variables may be eliminated by trying each value when that is the
# smaller exact expansion.  Set False to force the textbook elimination sets.
RANGE_EXPANSION = True


# distribute a conjunction of disjunctions when it has at most this many cases
DNF_LIMIT = 64


def _eliminate(x: int, phi: PF) -> PF:
    if x not in pf_vars(phi):
        return phi
    if isinstance(phi, POr):
        return mk_or(_eliminate(x, p) for p in phi.parts)
    if isinstance(phi, PAnd):
        rest = [p for p in phi.parts if x not in pf_vars(p)]
        inner = [p for p in phi.parts if x in pf_vars(p)]
        if len(inner) == 1 and isinstance(inner[0], POr):
            return mk_and(rest + [_eliminate(x, inner[0])])
        ors = [p for p in inner if isinstance(p, POr)]
        if ors and math.prod(len(p.parts) for p in ors) <= DNF_LIMIT:
            plain = [p for p in inner if not isinstance(p, POr)]
            cases = (mk_and(plain + list(c)) for c in itertools.product(*(p.parts for p in ors)))
            return mk_and(rest + [mk_or(_eliminate(x, c) for c in cases)])
        if rest:
            return mk_and(rest + [_cooper(x, mk_and(inner))])
    return _cooper(x, phi)


def qe_step(f) -> PF:
    """Eliminate a single existential over a quantifier-free body.

    Accepts an internal ``PExists`` or a syntax-level ``Exists`` whose body is
    quantifier free.  The result is quantifier free and equivalent over N.
    """
    if isinstance(f, sx.Exists):
        f = to_presburger(f)
    if not isinstance(f, PExists) or not is_quantifier_free(f.body):
        raise ValueError("qe_step expects an existential over a quantifier-free body")
    return _eliminate(f.var, qe(f.body))


def qe(f: PF) -> PF:
    """Eliminate every quantifier, innermost first.  Result is NNF."""
    if isinstance(f, LITERALS):
        return normalize_literal(f)
    if isinstance(f, Const):
        return f
    if isinstance(f, PNot):
        return negate_qf(qe(f.body))
    if isinstance(f, PAnd):
        return mk_and(qe(p) for p in f.parts)
    if isinstance(f, POr):
        return mk_or(qe(p) for p in f.parts)
    if isinstance(f, PIff):
        a, b = qe(f.left), qe(f.right)
        return mk_or([mk_and([a, b]), mk_and([negate_qf(a), negate_qf(b)])])
    if isinstance(f, PExists):
        return _eliminate(f.var, qe(f.body))
    if isinstance(f, PForall):
        return negate_qf(_eliminate(f.var, negate_qf(qe(f.body))))
    raise TypeError(f"not an internal formula: {f!r}")


def step_innermost(f: PF) -> tuple[PF, bool]:
    """Replace the leftmost innermost quantifier by its elimination.

    Returns the new formula and whether a quantifier was found.
    """
    if isinstance(f, (PExists, PForall)):
        if is_quantifier_free(f.body):
            if isinstance(f, PExists):
                return qe_step(f), True
            return negate_qf(qe_step(PExists(f.var, PNot(f.body)))), True
        body, done = step_innermost(f.body)
        return type(f)(f.var, body), done
    if isinstance(f, PNot):
        body, done = step_innermost(f.body)
        return PNot(body), done
    if isinstance(f, PIff):
        left, done = step_innermost(f.left)
        if done:
            return PIff(left, f.right), True
        right, done = step_innermost(f.right)
        return PIff(f.left, right), done
    if isinstance(f, (PAnd, POr)):
        parts = list(f.parts)
        for i, p in enumerate(parts):
            q, done = step_innermost(p)
            if done:
                parts[i] = q
                return type(f)(tuple(parts)), True
    return f, False


def eval_qf(f: PF, env: Mapping[int, int]) -> bool:
    """Truth of a quantifier-free internal formula under an assignment."""
    if isinstance(f, Const):
        return f.value
    if isinstance(f, Lt):
        return f.term.evaluate(env) > 0
    if isinstance(f, EqZ):
        return f.term.evaluate(env) == 0
    if isinstance(f, NeZ):
        return f.term.evaluate(env) != 0
    if isinstance(f, Dvd):
        return f.term.evaluate(env) % f.d == 0
    if isinstance(f, NDvd):
        return f.term.evaluate(env) % f.d != 0
    if isinstance(f, PAnd):
        return all(eval_qf(p, env) for p in f.parts)
    if isinstance(f, POr):
        return any(eval_qf(p, env) for p in f.parts)
    if isinstance(f, PNot):
        return not eval_qf(f.body, env)
    if isinstance(f, PIff):
        return eval_qf(f.left, env) == eval_qf(f.right, env)
    raise TypeError(f"not quantifier free: {f!r}")


def show_pf(f: PF) -> str:
    """Display form; divisibility literals use ``d | t``."""
    if isinstance(f, Const):
        return "true" if f.value else "false"
    if isinstance(f, Lt):
        neg = Lin(tuple((v, -c) for v, c in f.term.coeffs if c < 0), max(-f.term.const, 0))
        pos = Lin(tuple((v, c) for v, c in f.term.coeffs if c > 0), max(f.term.const, 0))
        return f"{neg} < {pos}"
    if isinstance(f, (EqZ, NeZ)):
        neg = Lin(tuple((v, -c) for v, c in f.term.coeffs if c < 0), max(-f.term.const, 0))
        pos = Lin(tuple((v, c) for v, c in f.term.coeffs if c > 0), max(f.term.const, 0))
        return f"{neg} {'=' if isinstance(f, EqZ) else '!='} {pos}"
    if isinstance(f, Dvd):
        return f"{f.d} | {f.term}"
    if isinstance(f, NDvd):
        return f"~({f.d} | {f.term})"
    if isinstance(f, (PAnd, POr)):
        sep = " & " if isinstance(f, PAnd) else " | "
        return sep.join(
            f"({show_pf(p)})" if isinstance(p, (PAnd, POr)) else show_pf(p) for p in f.parts)
    if isinstance(f, PNot):
        return f"~({show_pf(f.body)})"
    if isinstance(f, PIff):
        return f"({show_pf(f.left)}) <-> ({show_pf(f.right)})"
    kw = "exists" if isinstance(f, PExists) else "forall"
    return f"{kw} {sx.var_name(f.var)}. ({show_pf(f.body)})"


# ---------------------------------------------------------------------------
# Translation from syntax
# ---------------------------------------------------------------------------

def _term_cases(t: sx.Term) -> list[tuple[tuple[PF, ...], Lin]]:
    """Linear forms of t, one per parity case of its nu-subterms."""
    if isinstance(t, sx.Zero):
        return [((), Lin())]
    if isinstance(t, sx.One):
        return [((), Lin((), 1))]
    if isinstance(t, sx.Numeral):
        return [((), Lin((), t.value))]
    if isinstance(t, sx.Var):
        return [((), Lin.var(t.index))]
    if isinstance(t, sx.Add):
        return [(ca + cb, la + lb)
                for (ca, la), (cb, lb) in itertools.product(_term_cases(t.left),
                                                            _term_cases(t.right))]
    if isinstance(t, sx.Nu):
        out = []
        for conds, arg in _term_cases(t.arg):
            out.append((conds + (Dvd(2, arg),), arg.scale(16).shift(33)))
            out.append((conds + (NDvd(2, arg),), arg.scale(16).shift(16)))
        return out
    if isinstance(t, sx.Mul):
        raise NonPresburger("multiplication is outside Presburger arithmetic")
    raise TypeError(f"not a term: {t!r}")


def to_presburger(f: sx.Formula) -> PF:
    """Translate an L* formula, case-splitting each nu application on parity."""
    if isinstance(f, (sx.Less, sx.Eq)):
        kind = Lt if isinstance(f, sx.Less) else EqZ
        cases = []
        for (ca, la), (cb, lb) in itertools.product(_term_cases(f.left), _term_cases(f.right)):
            lit = kind(lb - la) if kind is Lt else kind(la - lb)
            cases.append(PAnd(ca + cb + (lit,)) if ca or cb else lit)
        return cases[0] if len(cases) == 1 else POr(tuple(cases))
    if isinstance(f, sx.Sigma):
        raise NonPresburger("the oracle atom sigma cannot be decided")
    if isinstance(f, sx.Not):
        return PNot(to_presburger(f.body))
    if isinstance(f, sx.And):
        return PAnd((to_presburger(f.left), to_presburger(f.right)))
    if isinstance(f, sx.Or):
        return POr((to_presburger(f.left), to_presburger(f.right)))
    if isinstance(f, sx.Implies):
        return POr((PNot(to_presburger(f.left)), to_presburger(f.right)))
    if isinstance(f, sx.Iff):
        return PIff(to_presburger(f.left), to_presburger(f.right))
    if isinstance(f, sx.Forall):
        return PForall(f.var, to_presburger(f.body))
    if isinstance(f, sx.Exists):
        return PExists(f.var, to_presburger(f.body))
    raise TypeError(f"not a formula: {f!r}")


def decide_pf(f: PF) -> bool:
    result = qe(f)
    if not isinstance(result, Const):
        raise NotASentence(f"free variables remain: {sorted(pf_vars(result))}")
    return result.value


@functools.lru_cache(maxsize=4096)
def decide(s: sx.Formula) -> bool:
    """Truth of a closed L* sentence in <N; 0, 1, <, +, nu*>."""
    if not sx.is_formula(s):
        raise TypeError("decide expects a formula")
    free = sx.free_indices(s)
    if free:
        names = ", ".join(sorted(sx.var_name(i) for i in free))
        raise NotASentence(f"free variables remain: {names}")
    return decide_pf(to_presburger(s))


def eliminate_quantifiers(f: sx.Formula) -> PF:
    """Quantifier-free equivalent of f; free variables range over N."""
    return qe(to_presburger(f))


def eval_closed_term(t: sx.Term) -> int:
    if isinstance(t, sx.Zero):
        return 0
    if isinstance(t, sx.One):
        return 1
    if isinstance(t, sx.Numeral):
        return t.value
    if isinstance(t, sx.Add):
        return eval_closed_term(t.left) + eval_closed_term(t.right)
    if isinstance(t, sx.Mul):
        return eval_closed_term(t.left) * eval_closed_term(t.right)
    if isinstance(t, sx.Nu):
        return nu_star(eval_closed_term(t.arg))
    raise ValueError(f"term is not closed: {sx.show(t)}")


# ---------------------------------------------------------------------------
# Syntactic elimination of nu
# ---------------------------------------------------------------------------

def times(k: int, t: sx.Term) -> sx.Term:
    """t + t + ... + t (k copies, left nested); 0 when k = 0."""
    if k == 0:
        return sx.ZERO
    out = t
    for _ in range(k - 1):
        out = sx.Add(out, t)
    return out


def _innermost_nu(t: sx.Term):
    if isinstance(t, sx.Nu):
        return _innermost_nu(t.arg) or t
    if isinstance(t, (sx.Add, sx.Mul)):
        return _innermost_nu(t.left) or _innermost_nu(t.right)
    return None


def _replace_term(t: sx.Term, old: sx.Term, new: sx.Term) -> sx.Term:
    if t == old:
        return new
    if isinstance(t, (sx.Add, sx.Mul)):
        return type(t)(_replace_term(t.left, old, new), _replace_term(t.right, old, new))
    if isinstance(t, sx.Nu):
        return sx.Nu(_replace_term(t.arg, old, new))
    return t


def eliminate_nu(f: sx.Formula) -> sx.Formula:
    """Rewrite every nu application into {0, 1, <, +, =}.

    An atom A[v(t)] becomes
    exists w. ((even(t) & w = 16t + 33) | (odd(t) & w = 16t + 16)) & A[w]
    with even(t) = exists u. t = u + u and odd(t) = exists u. t = u + u + 1,
    innermost applications first.
    """
    counter = itertools.count(max(sx.all_indices(f), default=-1) + 1)

    def atom(a):
        target = _innermost_nu(a.left) or _innermost_nu(a.right)
        if target is None:
            return a
        t = target.arg
        w, u = sx.Var(next(counter)), sx.Var(next(counter))
        even = sx.Exists(u.index, sx.Eq(t, sx.Add(u, u)))
        odd = sx.Exists(u.index, sx.Eq(t, sx.Add(sx.Add(u, u), sx.ONE)))
        definition = sx.Or(
            sx.And(even, sx.Eq(w, sx.Add(times(16, t), sx.numeral(33)))),
            sx.And(odd, sx.Eq(w, sx.Add(times(16, t), sx.numeral(16)))),
        )
        rest = type(a)(_replace_term(a.left, target, w), _replace_term(a.right, target, w))
        return sx.Exists(w.index, sx.And(definition, atom(rest)))

    def walk(g):
        if isinstance(g, (sx.Less, sx.Eq)):
            return atom(g)
        if isinstance(g, sx.Sigma):
            return g
        if isinstance(g, sx.Not):
            return sx.Not(walk(g.body))
        if isinstance(g, sx.BINARY_TYPES):
            return type(g)(walk(g.left), walk(g.right))
        return type(g)(g.var, walk(g.body))

    return walk(f)
