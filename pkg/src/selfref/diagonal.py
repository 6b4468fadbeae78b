"""Effective strong diagonal lemma: given Lambda(x), find m, n and delta.

With sigma(x, y) standing for "y is the code of the diagonal of the formula
coded by x":

    zeta(x, y)  = (sigma(y, x) -> Lambda(x)) <-> x = y
    tau(y)      = forall x. (zeta(x, y) <-> x = y)
    n           = code(tau)
    kappa(x)    = zeta(x, n)
    m           = code(kappa)
    delta(m, n) = forall x. (kappa(x) <-> x = n) = tau(n)

Codes here come from a compact tree coding.  Ackermann's string coding is
unusable: kappa contains the numeral n, so its Ackermann code would be
astronomically large.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional

from selfref import syntax as sx
from selfref.errors import ArityError, EvaluatorMissing, NotACode, SelfRefError
from selfref.oracle import brute_force_eval, bounded_quantifier
from selfref.presburger import decide

CODING_NAME = "efficient-v1"

_TAGS = [sx.Zero, sx.One, sx.Var, sx.Add, sx.Mul, sx.Nu, sx.Numeral,
         sx.Less, sx.Eq, sx.Sigma, sx.Not, sx.And, sx.Or, sx.Implies, sx.Iff,
         sx.Forall, sx.Exists]
_TAG_OF = {cls: i for i, cls in enumerate(_TAGS)}
_TAG_BITS = 5


# ---------------------------------------------------------------------------
# Tree coding
# ---------------------------------------------------------------------------

def _gamma(n: int) -> str:
    """Elias gamma code of n + 1 (so 0 is codable)."""
    b = bin(n + 1)[2:]
    return "0" * (len(b) - 1) + b


def _bits(e, out: list) -> None:
    out.append(format(_TAG_OF[type(e)], f"0{_TAG_BITS}b"))
    if isinstance(e, sx.Var):
        out.append(_gamma(e.index))
    elif isinstance(e, sx.Numeral):
        out.append(_gamma(e.value))
    elif isinstance(e, sx.Nu):
        _bits(e.arg, out)
    elif isinstance(e, sx.Not):
        _bits(e.body, out)
    elif isinstance(e, sx.QUANTIFIER_TYPES):
        out.append(_gamma(e.var))
        _bits(e.body, out)
    elif isinstance(e, (sx.Add, sx.Mul) + sx.ATOM_TYPES + sx.BINARY_TYPES):
        _bits(e.left, out)
        _bits(e.right, out)


def encode(e: sx.Formula | sx.Term) -> int:
    """Prefix serialization of the tree, read as a binary numeral behind a leading 1.

    Integers inside the tree are self-delimiting, so the serialization pairs
    subtrees injectively and its length is linear in the tree size plus
    the bit lengths of numerals and variable indices.
    """
    out = ["1"]
    _bits(e, out)
    return int("".join(out), 2)


class _Reader:
    def __init__(self, bits: str):
        self.bits = bits
        self.i = 0

    def read(self, k: int) -> str:
        if self.i + k > len(self.bits):
            raise NotACode("truncated tree code")
        chunk = self.bits[self.i:self.i + k]
        self.i += k
        return chunk

    def gamma(self) -> int:
        zeros = 0
        while self.read(1) == "0":
            zeros += 1
        return int("1" + self.read(zeros), 2) - 1

    def node(self):
        tag = int(self.read(_TAG_BITS), 2)
        if tag >= len(_TAGS):
            raise NotACode(f"unknown tag {tag}")
        cls = _TAGS[tag]
        if cls in (sx.Zero, sx.One):
            return cls()
        if cls is sx.Var:
            return sx.Var(self.gamma())
        if cls is sx.Numeral:
            value = self.gamma()
            if value < 2:
                raise NotACode("numerals below 2 are coded as 0 and 1")
            return sx.Numeral(value)
        if cls is sx.Nu:
            return sx.Nu(self.term())
        if cls is sx.Not:
            return sx.Not(self.formula())
        if cls in (sx.Forall, sx.Exists):
            v = self.gamma()
            return cls(v, self.formula())
        if cls in (sx.Add, sx.Mul) + sx.ATOM_TYPES:
            return cls(self.term(), self.term())
        return cls(self.formula(), self.formula())

    def term(self):
        t = self.node()
        if not sx.is_term(t):
            raise NotACode("expected a term")
        return t

    def formula(self):
        f = self.node()
        if not sx.is_formula(f):
            raise NotACode("expected a formula")
        return f


def decode(c: int) -> sx.Formula | sx.Term:
    if c < 2:
        raise NotACode(f"{c} is not a tree code")
    bits = bin(c)[3:]
    r = _Reader(bits)
    out = r.node()
    if r.i != len(bits):
        raise NotACode("trailing bits after a complete tree")
    return out


def diag(a: int) -> int:
    """Code of alpha(a) when a codes a formula alpha with exactly one free variable; else 0."""
    try:
        alpha = decode(a)
    except NotACode:
        return 0
    if not sx.is_formula(alpha):
        return 0
    free = sx.free_indices(alpha)
    if len(free) != 1:
        return 0
    return encode(sx.substitute(alpha, next(iter(free)), sx.numeral(a)))


# ---------------------------------------------------------------------------
# Construction
# ---------------------------------------------------------------------------

X, Y = sx.Var(0), sx.Var(1)


@dataclass(frozen=True)
class DiagonalResult:
    m: int
    n: int
    zeta: sx.Formula
    tau: sx.Formula
    kappa: sx.Formula
    delta: sx.Formula
    lam: sx.Formula


def construct(lam: sx.Formula) -> DiagonalResult:
    if sx.free_indices(lam) != {0}:
        raise ArityError(f"Lambda must have exactly x free, has {sorted(sx.free_vars(lam))}")
    zeta = sx.Iff(sx.Implies(sx.Sigma(Y, X), lam), sx.Eq(X, Y))
    tau = sx.Forall(0, sx.Iff(zeta, sx.Eq(X, Y)))
    n = encode(tau)
    n_bar = sx.numeral(n)
    kappa = sx.substitute(zeta, 1, n_bar)
    m = encode(kappa)
    delta = sx.substitute(tau, 1, n_bar)
    if delta != sx.Forall(0, sx.Iff(kappa, sx.Eq(X, n_bar))):
        raise AssertionError("delta differs from forall x. (kappa(x) <-> x = n)")
    return DiagonalResult(m, n, zeta, tau, kappa, delta, lam)


# ---------------------------------------------------------------------------
# Semantic verification
# ---------------------------------------------------------------------------

Evaluator = Callable[[int], bool]

BOUNDED_LIMIT = 10**5


def default_evaluator(lam: sx.Formula) -> Evaluator:
    """Truth of Lambda(k) in N, when Lambda lies in a fragment we can decide."""
    nodes = list(sx.walk(lam))
    if any(isinstance(t, sx.Sigma) for t in nodes):
        raise EvaluatorMissing("Lambda mentions the oracle atom")
    has_mul = any(isinstance(t, sx.Mul) for t in nodes)
    has_nu = any(isinstance(t, sx.Nu) for t in nodes)
    if not has_mul and not has_nu:
        return lambda k: decide(sx.substitute(lam, 0, sx.numeral(k)))
    if has_nu:
        raise EvaluatorMissing("nu has no standard meaning in the language of arithmetic")
    if not all(bounded_quantifier(q) is not None for q in nodes if isinstance(q, sx.QUANTIFIER_TYPES)):
        raise EvaluatorMissing("Lambda uses multiplication under an unbounded quantifier")

    def bounded(k: int) -> bool:
        verdict, exact = brute_force_eval(sx.substitute(lam, 0, sx.numeral(k)), BOUNDED_LIMIT)
        if not exact:
            raise EvaluatorMissing(
                "Lambda has unbounded quantifiers or bounds beyond the enumeration limit")
        return verdict

    return bounded


def _eval_body(f: sx.Formula, result: DiagonalResult, sigma: bool, lam: bool, eq_n: bool) -> bool:
    """Evaluate the matrix of delta given truth values for its three components."""
    if f == result.lam:
        return lam
    if isinstance(f, sx.Sigma):
        return sigma
    if isinstance(f, sx.Eq) and f == sx.Eq(X, sx.numeral(result.n)):
        return eq_n
    if isinstance(f, sx.Not):
        return not _eval_body(f.body, result, sigma, lam, eq_n)
    if isinstance(f, sx.BINARY_TYPES):
        a = _eval_body(f.left, result, sigma, lam, eq_n)
        b = _eval_body(f.right, result, sigma, lam, eq_n)
        if isinstance(f, sx.And):
            return a and b
        if isinstance(f, sx.Or):
            return a or b
        if isinstance(f, sx.Implies):
            return (not a) or b
        return a == b
    raise SelfRefError(f"unexpected component in delta: {sx.show(f)}")


def delta_truth(result: DiagonalResult, evaluator: Evaluator) -> bool:
    """Truth of delta in N, reading sigma(n, x) as x = diag(n).

    For x other than d = diag(n) the oracle atom is false and the matrix
    must hold whatever Lambda(x) and x = n are; at x = d it reduces to
    a fixed combination of Lambda(d) and d = n.
    """
    d = diag(result.n)
    body = result.delta.body
    off_diagonal = all(_eval_body(body, result, False, lam, eq_n)
                       for lam in (False, True) for eq_n in (False, True))
    if not off_diagonal:
        raise SelfRefError("delta is not settled off the diagonal")
    return _eval_body(body, result, True, evaluator(d), d == result.n)


def verify(result: DiagonalResult, evaluator: Optional[Evaluator] = None) -> bool:
    """Whether delta <-> Lambda(code(delta)) holds in N under the oracle reading."""
    if evaluator is None:
        evaluator = default_evaluator(result.lam)
    d = diag(result.n)
    if d != encode(result.delta) or d == result.n:
        return False
    return delta_truth(result, evaluator) == evaluator(encode(result.delta))


def to_json(result: DiagonalResult, verified: bool) -> dict:
    return {
        "m": result.m,
        "n": result.n,
        "delta": sx.show(result.delta),
        "verified": verified,
        "coding": CODING_NAME,
    }
