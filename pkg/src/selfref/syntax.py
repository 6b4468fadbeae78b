"""First-order terms and formulas over L* = {0, 1, <, +, nu} and {0, 1, <, +, *}.

ASTs are frozen dataclasses; every operation here is pure.  Variables are
indexed naturals.  The first 25 indices also have single-letter names
(``x, y, z, w, u, a, b, ...``, skipping ``v`` which spells the nu symbol);
every index can be written ``x<k>``.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping, Union

from selfref.errors import LanguageError, NumeralTooLarge, ParseError


class Language(enum.Enum):
    LSTAR = "lstar"
    ARITH = "arith"


# ---------------------------------------------------------------------------
# AST
# ---------------------------------------------------------------------------

@dataclass(frozen=True, slots=True)
class Zero:
    pass


@dataclass(frozen=True, slots=True)
class One:
    pass


@dataclass(frozen=True, slots=True)
class Var:
    index: int

    @property
    def name(self) -> str:
        return var_name(self.index)


@dataclass(frozen=True, slots=True)
class Add:
    left: "Term"
    right: "Term"


@dataclass(frozen=True, slots=True)
class Mul:
    left: "Term"
    right: "Term"


@dataclass(frozen=True, slots=True)
class Nu:
    arg: "Term"


@dataclass(frozen=True, slots=True)
class Numeral:
    """Compact form of the closed term 1+...+1; 0 and 1 are Zero and One."""

    value: int

    def __post_init__(self):
        if self.value < 2:
            raise ValueError("Numeral holds values >= 2; use numeral() for 0 and 1")


Term = Union[Zero, One, Var, Add, Mul, Nu, Numeral]


@dataclass(frozen=True, slots=True)
class Less:
    left: Term
    right: Term


@dataclass(frozen=True, slots=True)
class Eq:
    left: Term
    right: Term


@dataclass(frozen=True, slots=True)
class Sigma:
    """Opaque oracle atom sigma(a, b) used by the diagonal construction."""

    left: Term
    right: Term


@dataclass(frozen=True, slots=True)
class Not:
    body: "Formula"


@dataclass(frozen=True, slots=True)
class And:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True, slots=True)
class Or:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True, slots=True)
class Implies:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True, slots=True)
class Iff:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True, slots=True)
class Forall:
    var: int
    body: "Formula"


@dataclass(frozen=True, slots=True)
class Exists:
    var: int
    body: "Formula"


Formula = Union[Less, Eq, Sigma, Not, And, Or, Implies, Iff, Forall, Exists]

TERM_TYPES = (Zero, One, Var, Add, Mul, Nu, Numeral)
ATOM_TYPES = (Less, Eq, Sigma)
BINARY_TYPES = (And, Or, Implies, Iff)
QUANTIFIER_TYPES = (Forall, Exists)
FORMULA_TYPES = ATOM_TYPES + (Not,) + BINARY_TYPES + QUANTIFIER_TYPES

ZERO = Zero()
ONE = One()

_LETTERS = "xyzwuabcdefghijklmnopqrst"


def var_name(index: int) -> str:
    return _LETTERS[index] if index < len(_LETTERS) else f"x{index}"


def var_index(name: str) -> int:
    if len(name) == 1 and name in _LETTERS:
        return _LETTERS.index(name)
    m = re.fullmatch(r"x(0|[1-9][0-9]*)", name)
    if m:
        return int(m.group(1))
    raise ValueError(f"not a variable name: {name!r}")


def var(name: str | int) -> Var:
    return Var(name if isinstance(name, int) else var_index(name))


def numeral(n: int) -> Term:
    if n < 0:
        raise ValueError("numerals denote naturals")
    if n == 0:
        return ZERO
    if n == 1:
        return ONE
    return Numeral(n)


def falsum() -> Formula:
    """The canonical false sentence ~(0 = 0)."""
    return Not(Eq(ZERO, ZERO))


def big_or(parts: Iterable[Formula]) -> Formula:
    """Right-nested disjunction; the empty disjunction is ~(0 = 0)."""
    parts = list(parts)
    if not parts:
        return falsum()
    out = parts[-1]
    for p in reversed(parts[:-1]):
        out = Or(p, out)
    return out


def big_and(parts: Iterable[Formula]) -> Formula:
    parts = list(parts)
    if not parts:
        return Eq(ZERO, ZERO)
    out = parts[-1]
    for p in reversed(parts[:-1]):
        out = And(p, out)
    return out


def is_term(e) -> bool:
    return isinstance(e, TERM_TYPES)


def is_formula(e) -> bool:
    return isinstance(e, FORMULA_TYPES)


# ---------------------------------------------------------------------------
# Variables and substitution
# ---------------------------------------------------------------------------

def _term_vars(t: Term) -> set[int]:
    if isinstance(t, Var):
        return {t.index}
    if isinstance(t, (Add, Mul)):
        return _term_vars(t.left) | _term_vars(t.right)
    if isinstance(t, Nu):
        return _term_vars(t.arg)
    return set()


def free_indices(e: Formula | Term) -> set[int]:
    if is_term(e):
        return _term_vars(e)
    if isinstance(e, ATOM_TYPES):
        return _term_vars(e.left) | _term_vars(e.right)
    if isinstance(e, Not):
        return free_indices(e.body)
    if isinstance(e, BINARY_TYPES):
        return free_indices(e.left) | free_indices(e.right)
    if isinstance(e, QUANTIFIER_TYPES):
        return free_indices(e.body) - {e.var}
    raise TypeError(f"not an AST node: {e!r}")


def free_vars(e: Formula | Term) -> set[str]:
    return {var_name(i) for i in free_indices(e)}


def is_sentence(f: Formula) -> bool:
    return is_formula(f) and not free_indices(f)


def all_indices(e: Formula | Term) -> set[int]:
    """Every variable index occurring in e, free or bound."""
    if is_term(e):
        return _term_vars(e)
    if isinstance(e, ATOM_TYPES):
        return _term_vars(e.left) | _term_vars(e.right)
    if isinstance(e, Not):
        return all_indices(e.body)
    if isinstance(e, BINARY_TYPES):
        return all_indices(e.left) | all_indices(e.right)
    return all_indices(e.body) | {e.var}


def fresh_index(avoid: Iterable[int]) -> int:
    avoid = set(avoid)
    i = 0
    while i in avoid:
        i += 1
    return i


def _subst_term(t: Term, mapping: Mapping[int, Term]) -> Term:
    if isinstance(t, Var):
        return mapping.get(t.index, t)
    if isinstance(t, Add):
        return Add(_subst_term(t.left, mapping), _subst_term(t.right, mapping))
    if isinstance(t, Mul):
        return Mul(_subst_term(t.left, mapping), _subst_term(t.right, mapping))
    if isinstance(t, Nu):
        return Nu(_subst_term(t.arg, mapping))
    return t


def substitute_many(e: Formula | Term, mapping: Mapping[int, Term]) -> Formula | Term:
    """Simultaneous capture-avoiding substitution of terms for free variables.

    A bound variable that would capture a variable of an inserted term is
    renamed to the least index unused anywhere in sight.
    """
    if is_term(e):
        return _subst_term(e, mapping)
    mapping = {k: v for k, v in mapping.items() if k in free_indices(e)}
    if not mapping:
        return e
    if isinstance(e, ATOM_TYPES):
        return type(e)(_subst_term(e.left, mapping), _subst_term(e.right, mapping))
    if isinstance(e, Not):
        return Not(substitute_many(e.body, mapping))
    if isinstance(e, BINARY_TYPES):
        return type(e)(substitute_many(e.left, mapping), substitute_many(e.right, mapping))
    v, body = e.var, e.body
    incoming = set().union(*(_term_vars(t) for t in mapping.values()))
    if v in incoming:
        nv = fresh_index(incoming | all_indices(body) | set(mapping))
        body = substitute_many(body, {v: Var(nv)})
        v = nv
    return type(e)(v, substitute_many(body, mapping))


def substitute(f: Formula, var: str | int, t: Term) -> Formula:
    """Replace the free occurrences of ``var`` in ``f`` by ``t``."""
    index = var if isinstance(var, int) else var_index(var)
    return substitute_many(f, {index: t})


def negate(s: Formula) -> Formula:
    """Prepend exactly one negation; nothing is simplified."""
    return Not(s)


def check_language(e: Formula | Term, lang: Language) -> None:
    """Raise LanguageError when e uses a symbol outside ``lang``."""
    for node in walk(e):
        if isinstance(node, Mul) and lang is Language.LSTAR:
            raise LanguageError("'*' is not a symbol of L*")
        if isinstance(node, Sigma) and lang is Language.LSTAR:
            raise LanguageError("the oracle atom sigma is not a symbol of L*")
        if isinstance(node, Nu) and lang is Language.ARITH:
            raise LanguageError("'v' (nu) is not a symbol of the language of arithmetic")


def walk(e) -> Iterator:
    """Pre-order traversal over every term and formula node."""
    stack = [e]
    while stack:
        node = stack.pop()
        yield node
        if isinstance(node, (Add, Mul) + ATOM_TYPES + BINARY_TYPES):
            stack.append(node.right)
            stack.append(node.left)
        elif isinstance(node, Nu):
            stack.append(node.arg)
        elif isinstance(node, (Not,) + QUANTIFIER_TYPES):
            stack.append(node.body)


# ---------------------------------------------------------------------------
# Printing
# ---------------------------------------------------------------------------

def _show_term(t: Term, ctx: int = 0) -> str:
    if isinstance(t, Zero):
        return "0"
    if isinstance(t, One):
        return "1"
    if isinstance(t, Var):
        return t.name
    if isinstance(t, Numeral):
        return f"num({t.value})"
    if isinstance(t, Nu):
        return f"v({_show_term(t.arg)})"
    if isinstance(t, Add):
        s = f"{_show_term(t.left, 1)} + {_show_term(t.right, 2)}"
        return f"({s})" if ctx > 1 else s
    if isinstance(t, Mul):
        s = f"{_show_term(t.left, 2)} * {_show_term(t.right, 3)}"
        return f"({s})" if ctx > 2 else s
    raise TypeError(f"not a term: {t!r}")


_CONNECTIVES = {And: "&", Or: "|", Implies: "->", Iff: "<->"}


def _bounded_parts(f: Formula):
    """Return (bound term, body) when f is bounded-quantifier sugar, else None."""
    if isinstance(f, Exists) and isinstance(f.body, And):
        guard, body = f.body.left, f.body.right
    elif isinstance(f, Forall) and isinstance(f.body, Implies):
        guard, body = f.body.left, f.body.right
    else:
        return None
    if isinstance(guard, Less) and guard.left == Var(f.var):
        return guard.right, body
    return None


def _show_child(f: Formula) -> str:
    s = show(f)
    return f"({s})" if isinstance(f, BINARY_TYPES + QUANTIFIER_TYPES) else s


def show(e: Formula | Term) -> str:
    """Render an AST in the concrete grammar accepted by parse()."""
    if is_term(e):
        return _show_term(e)
    if isinstance(e, Less):
        return f"{_show_term(e.left)} < {_show_term(e.right)}"
    if isinstance(e, Eq):
        return f"{_show_term(e.left)} = {_show_term(e.right)}"
    if isinstance(e, Sigma):
        return f"sigma({_show_term(e.left)}, {_show_term(e.right)})"
    if isinstance(e, Not):
        return f"~({show(e.body)})"
    if isinstance(e, BINARY_TYPES):
        return f"{_show_child(e.left)} {_CONNECTIVES[type(e)]} {_show_child(e.right)}"
    if isinstance(e, QUANTIFIER_TYPES):
        kw = "forall" if isinstance(e, Forall) else "exists"
        head = f"{kw} {var_name(e.var)}"
        bounded = _bounded_parts(e)
        body = e.body
        if bounded is not None:
            head += f" < {_show_term(bounded[0])}"
            body = bounded[1]
        inner = show(body)
        if isinstance(body, BINARY_TYPES):
            inner = f"({inner})"
        return f"{head}. {inner}"
    raise TypeError(f"not an AST node: {e!r}")


# ---------------------------------------------------------------------------
# Parsing
# ---------------------------------------------------------------------------

_TOKEN_RE = re.compile(
    r"\s*(?:(<->|->|[()~&|<=+*.,])|([A-Za-z_][A-Za-z0-9_]*)|([0-9]+)|(\S))"
)
_UNICODE = {"¬": "~", "∧": "&", "∨": "|", "→": "->", "↔": "<->", "×": "*", "ν": "v",
            "∀": "forall", "∃": "exists", "σ": "sigma"}
_KEYWORDS = {"forall", "exists", "num", "v", "sigma"}


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    while True:
        m = _TOKEN_RE.match(text, pos)
        if m is None or m.end() == pos:
            break
        sym, ident, number, other = m.groups()
        start = m.start(m.lastindex)
        pos = m.end()
        if other is not None:
            if other in _UNICODE:
                mapped = _UNICODE[other]
                kind = "kw" if mapped in _KEYWORDS else "sym"
                tokens.append((kind, mapped, start))
                continue
            raise ParseError(f"unexpected character {other!r}", start)
        if sym is not None:
            tokens.append(("sym", sym, start))
        elif ident is not None:
            tokens.append(("kw" if ident in _KEYWORDS else "ident", ident, start))
        else:
            tokens.append(("int", number, start))
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.toks = _tokenize(text)
        self.i = 0

    def peek(self) -> tuple[str, str, int]:
        return self.toks[self.i]

    def at(self, value: str) -> bool:
        kind, val, _ = self.toks[self.i]
        return val == value and kind in ("sym", "kw")

    def expect(self, value: str) -> None:
        if not self.at(value):
            kind, val, pos = self.peek()
            raise ParseError(f"expected {value!r}, found {val or 'end of input'!r}", pos)
        self.i += 1

    def fail(self, what: str):
        kind, val, pos = self.peek()
        raise ParseError(f"expected {what}, found {val or 'end of input'!r}", pos)

    # formulas
    def formula(self) -> Formula:
        left = self.implication()
        while self.at("<->"):
            self.i += 1
            left = Iff(left, self.implication())
        return left

    def implication(self) -> Formula:
        left = self.disjunction()
        if self.at("->"):
            self.i += 1
            return Implies(left, self.implication())
        return left

    def disjunction(self) -> Formula:
        left = self.conjunction()
        while self.at("|"):
            self.i += 1
            left = Or(left, self.conjunction())
        return left

    def conjunction(self) -> Formula:
        left = self.unary()
        while self.at("&"):
            self.i += 1
            left = And(left, self.unary())
        return left

    def unary(self) -> Formula:
        if self.at("~"):
            self.i += 1
            return Not(self.unary())
        if self.at("forall") or self.at("exists"):
            return self.quantifier()
        if self.at("("):
            start = self.i
            try:
                return self.atom()
            except ParseError as atom_err:
                self.i = start
                self.expect("(")
                try:
                    inner = self.formula()
                    self.expect(")")
                except ParseError as err:
                    raise (err if err.position >= atom_err.position else atom_err)
                return inner
        return self.atom()

    def quantifier(self) -> Formula:
        kw = self.peek()[1]
        self.i += 1
        kind, name, pos = self.peek()
        if kind != "ident":
            self.fail("a variable after the quantifier")
        self.i += 1
        v = _ident_index(name, pos)
        bound = None
        if self.at("<"):
            self.i += 1
            bound = self.term()
        self.expect(".")
        body = self.formula()
        if kw == "forall":
            return Forall(v, body if bound is None else Implies(Less(Var(v), bound), body))
        return Exists(v, body if bound is None else And(Less(Var(v), bound), body))

    def atom(self) -> Formula:
        if self.at("sigma"):
            self.i += 1
            self.expect("(")
            a = self.term()
            self.expect(",")
            b = self.term()
            self.expect(")")
            return Sigma(a, b)
        left = self.term()
        if self.at("<"):
            self.i += 1
            return Less(left, self.term())
        if self.at("="):
            self.i += 1
            return Eq(left, self.term())
        self.fail("'<' or '='")

    # terms
    def term(self) -> Term:
        left = self.product()
        while self.at("+"):
            self.i += 1
            left = Add(left, self.product())
        return left

    def product(self) -> Term:
        left = self.primary()
        while self.at("*"):
            self.i += 1
            left = Mul(left, self.primary())
        return left

    def primary(self) -> Term:
        kind, val, pos = self.peek()
        if kind == "int":
            self.i += 1
            if val == "0":
                return ZERO
            if val == "1":
                return ONE
            raise ParseError(f"bare literal {val}; write num({val})", pos)
        if kind == "ident":
            self.i += 1
            return Var(_ident_index(val, pos))
        if self.at("num"):
            self.i += 1
            self.expect("(")
            kind, val, pos = self.peek()
            if kind != "int":
                self.fail("a decimal literal")
            self.i += 1
            self.expect(")")
            return numeral(int(val))
        if self.at("v"):
            self.i += 1
            self.expect("(")
            arg = self.term()
            self.expect(")")
            return Nu(arg)
        if self.at("("):
            self.i += 1
            inner = self.term()
            self.expect(")")
            return inner
        self.fail("a term")


def _ident_index(name: str, pos: int) -> int:
    try:
        return var_index(name)
    except ValueError:
        raise ParseError(
            f"unknown variable name {name!r}; use a single letter other than v, or x<k>", pos
        ) from None


def parse(text: str, lang: Language = Language.LSTAR) -> Formula | Term:
    """Parse a formula, or a term when the whole input is a term."""
    p = _Parser(text)
    try:
        result = p.formula()
        if p.peek()[0] != "end":
            p.fail("end of input")
    except ParseError as formula_err:
        p = _Parser(text)
        try:
            result = p.term()
            if p.peek()[0] != "end":
                p.fail("end of input")
        except ParseError:
            raise formula_err from None
    check_language(result, lang)
    return result


def parse_formula(text: str, lang: Language = Language.LSTAR) -> Formula:
    result = parse(text, lang)
    if not is_formula(result):
        raise ParseError("expected a formula, got a term", 0)
    return result


# ---------------------------------------------------------------------------
# Linearization to symbol strings
# ---------------------------------------------------------------------------

DEFAULT_MAX_NUMERAL = 10_000


def _linear_term(t: Term, out: list, max_numeral: int) -> None:
    if isinstance(t, Zero):
        out.append("0")
    elif isinstance(t, One):
        out.append("1")
    elif isinstance(t, Var):
        out.append(f"x{t.index}")
    elif isinstance(t, Numeral):
        if t.value > max_numeral:
            raise NumeralTooLarge(
                f"numeral {t.value} exceeds the expansion bound {max_numeral}"
            )
        out.append("1")
        out.extend(["+", "1"] * (t.value - 1))
    elif isinstance(t, Nu):
        out.extend(["ν", "("])
        _linear_term(t.arg, out, max_numeral)
        out.append(")")
    else:
        out.extend(["+" if isinstance(t, Add) else "×", "("])
        _linear_term(t.left, out, max_numeral)
        out.append(",")
        _linear_term(t.right, out, max_numeral)
        out.append(")")


_LINEAR_CONNECTIVES = {And: "∧", Or: "∨", Implies: "→", Iff: "↔"}


def _linear(e, out: list, max_numeral: int) -> None:
    if is_term(e):
        _linear_term(e, out, max_numeral)
    elif isinstance(e, Sigma):
        out.extend(["σ", "("])
        _linear_term(e.left, out, max_numeral)
        out.append(",")
        _linear_term(e.right, out, max_numeral)
        out.append(")")
    elif isinstance(e, (Less, Eq)):
        _linear_term(e.left, out, max_numeral)
        out.append("<" if isinstance(e, Less) else "=")
        _linear_term(e.right, out, max_numeral)
    elif isinstance(e, Not):
        out.append("¬")
        _linear(e.body, out, max_numeral)
    elif isinstance(e, BINARY_TYPES):
        out.append("(")
        _linear(e.left, out, max_numeral)
        out.append(_LINEAR_CONNECTIVES[type(e)])
        _linear(e.right, out, max_numeral)
        out.append(")")
    else:
        out.extend(["∀" if isinstance(e, Forall) else "∃", f"x{e.var}"])
        _linear(e.body, out, max_numeral)


def to_symbol_string(e: Formula | Term, max_numeral: int = DEFAULT_MAX_NUMERAL) -> tuple[str, ...]:
    """Flatten an AST into the symbol string consumed by Goedel codings.

    Atoms are infix, function applications are prefix with explicit
    parentheses and commas, binary connectives are parenthesized infix.
    Numeral(n) expands to ``1 + 1 + ... + 1``, which no other term
    produces, so the map is injective.
    """
    out: list[str] = []
    _linear(e, out, max_numeral)
    return tuple(out)


class _SymbolReader:
    def __init__(self, symbols):
        self.s = list(symbols)
        self.i = 0

    def peek(self):
        return self.s[self.i] if self.i < len(self.s) else None

    def take(self, expected=None):
        sym = self.peek()
        if sym is None or (expected is not None and sym != expected):
            raise ParseError(f"expected {expected or 'a symbol'}, found {sym!r}", self.i)
        self.i += 1
        return sym

    def term(self) -> Term:
        sym = self.take()
        if sym == "0":
            return ZERO
        if sym == "1":
            count = 1
            while self.peek() == "+" and self.i + 1 < len(self.s) and self.s[self.i + 1] == "1":
                self.i += 2
                count += 1
            return numeral(count)
        if sym == "ν":
            self.take("(")
            arg = self.term()
            self.take(")")
            return Nu(arg)
        if sym in ("+", "×"):
            self.take("(")
            a = self.term()
            self.take(",")
            b = self.term()
            self.take(")")
            return Add(a, b) if sym == "+" else Mul(a, b)
        m = re.fullmatch(r"x(0|[1-9][0-9]*)", sym)
        if m:
            return Var(int(m.group(1)))
        raise ParseError(f"unexpected symbol {sym!r}", self.i - 1)

    def formula(self) -> Formula:
        sym = self.peek()
        if sym == "¬":
            self.i += 1
            return Not(self.formula())
        if sym in ("∀", "∃"):
            self.i += 1
            v = self.term()
            if not isinstance(v, Var):
                raise ParseError("expected a variable after a quantifier", self.i)
            body = self.formula()
            return Forall(v.index, body) if sym == "∀" else Exists(v.index, body)
        if sym == "(":
            self.i += 1
            left = self.formula()
            conn = self.take()
            kinds = {v: k for k, v in _LINEAR_CONNECTIVES.items()}
            if conn not in kinds:
                raise ParseError(f"expected a connective, found {conn!r}", self.i - 1)
            right = self.formula()
            self.take(")")
            return kinds[conn](left, right)
        if sym == "σ":
            self.i += 1
            self.take("(")
            a = self.term()
            self.take(",")
            b = self.term()
            self.take(")")
            return Sigma(a, b)
        left = self.term()
        rel = self.take()
        if rel not in ("<", "="):
            raise ParseError(f"expected '<' or '=', found {rel!r}", self.i - 1)
        right = self.term()
        return Less(left, right) if rel == "<" else Eq(left, right)


def from_symbol_string(symbols: Iterable[str]) -> Formula | Term:
    """Inverse of to_symbol_string; raises ParseError on malformed strings."""
    symbols = list(symbols)
    errors = []
    for start in ("formula", "term"):
        r = _SymbolReader(symbols)
        try:
            out = getattr(r, start)()
            if r.i != len(symbols):
                raise ParseError("trailing symbols", r.i)
            return out
        except ParseError as err:
            errors.append(err)
    raise errors[0]
