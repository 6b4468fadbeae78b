"""Exhaustive evaluation with quantifiers cut off at a bound.

This is the independent check on the quantifier-elimination path: it only
walks the syntax tree and does integer arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass

from selfref import syntax as sx


@dataclass(frozen=True)
class BruteForceResult:
    verdict: bool
    exact: bool

    def __iter__(self):
        return iter((self.verdict, self.exact))


def _nu(n: int) -> int:
    return 16 * n + (33 if n % 2 == 0 else 16)


def eval_term(t: sx.Term, env: dict[int, int]) -> int:
    if isinstance(t, sx.Zero):
        return 0
    if isinstance(t, sx.One):
        return 1
    if isinstance(t, sx.Numeral):
        return t.value
    if isinstance(t, sx.Var):
        return env[t.index]
    if isinstance(t, sx.Add):
        return eval_term(t.left, env) + eval_term(t.right, env)
    if isinstance(t, sx.Mul):
        return eval_term(t.left, env) * eval_term(t.right, env)
    if isinstance(t, sx.Nu):
        return _nu(eval_term(t.arg, env))
    raise TypeError(f"not a term: {t!r}")


def bounded_quantifier(q: sx.Formula):
    """Bound term of a syntactically bounded quantifier, or None."""
    if isinstance(q, sx.Exists) and isinstance(q.body, sx.And):
        g = q.body.left
    elif isinstance(q, sx.Forall) and isinstance(q.body, sx.Implies):
        g = q.body.left
    else:
        return None
    if isinstance(g, sx.Less) and g.left == sx.Var(q.var) and q.var not in sx.free_indices(g.right):
        return g.right
    return None


def brute_force_eval(s: sx.Formula, bound: int) -> BruteForceResult:
    """Evaluate s with every quantifier ranging over 0..bound.

    The verdict is flagged exact when every quantifier is bounded by a term
    whose value never exceeds ``bound``; such quantifiers then range over
    exactly the values below their bound term.
    """
    exact = [all(bounded_quantifier(q) is not None
                 for q in sx.walk(s) if isinstance(q, (sx.Forall, sx.Exists)))]

    def ev(f, env) -> bool:
        if isinstance(f, sx.Less):
            return eval_term(f.left, env) < eval_term(f.right, env)
        if isinstance(f, sx.Eq):
            return eval_term(f.left, env) == eval_term(f.right, env)
        if isinstance(f, sx.Not):
            return not ev(f.body, env)
        if isinstance(f, sx.And):
            return ev(f.left, env) and ev(f.right, env)
        if isinstance(f, sx.Or):
            return ev(f.left, env) or ev(f.right, env)
        if isinstance(f, sx.Implies):
            return (not ev(f.left, env)) or ev(f.right, env)
        if isinstance(f, sx.Iff):
            return ev(f.left, env) == ev(f.right, env)
        if isinstance(f, (sx.Forall, sx.Exists)):
            g = bounded_quantifier(f)
            top = bound + 1
            if g is None:
                exact[0] = False
            else:
                limit = eval_term(g, env)
                if limit <= bound:
                    top = limit
                else:
                    exact[0] = False
            values = range(top)
            if isinstance(f, sx.Exists):
                return any(ev(f.body, {**env, f.var: k}) for k in values)
            return all(ev(f.body, {**env, f.var: k}) for k in values)
        raise TypeError(f"cannot evaluate {f!r}")

    verdict = ev(s, {})
    return BruteForceResult(verdict, exact[0])
