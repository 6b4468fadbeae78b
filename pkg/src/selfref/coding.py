"""Ackermann's Goedel coding of symbol strings.

A string <a_1, ..., a_l> of odd symbol codes is sent to

    2^(a_1+1) + 2^(a_1+1 + a_2+1) + ... + 2^(a_1+1 + ... + a_l+1)

so the gaps between consecutive set bits spell out the symbol codes.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from pathlib import Path
from typing import Mapping, Sequence

from selfref.errors import NotACode, UnknownSymbol
from selfref.syntax import Formula, Term, to_symbol_string

DEFAULT_CODES = {
    "¬": 3, "0": 5, "1": 7, "+": 9, "<": 11, "=": 13, "ν": 15, "×": 17,
    "∧": 19, "∨": 21, "→": 23, "↔": 25, "∀": 27, "∃": 29,
    "(": 31, ")": 33, ",": 35,
}
VARIABLE_BASE = 37

_VAR_RE = re.compile(r"x(0|[1-9][0-9]*)")


@dataclass(frozen=True)
class SymbolTable:
    """Odd codes for the fixed symbols; variable x_i gets var_base + 2i."""

    codes: Mapping[str, int] = field(default_factory=lambda: dict(DEFAULT_CODES))
    var_base: int = VARIABLE_BASE

    def __post_init__(self):
        values = list(self.codes.values())
        if any(c % 2 == 0 or c < 1 for c in values) or self.var_base % 2 == 0:
            raise ValueError("every symbol code must be a positive odd number")
        if len(set(values)) != len(values):
            raise ValueError("symbol codes must be distinct")
        if any(c >= self.var_base for c in values):
            raise ValueError("fixed symbol codes must lie below the variable base")
        if self.codes.get("¬") != 3:
            raise ValueError("the negation symbol must have code 3")
        object.__setattr__(self, "_inverse", {c: s for s, c in self.codes.items()})

    def code(self, symbol: str) -> int:
        if symbol in self.codes:
            return self.codes[symbol]
        m = _VAR_RE.fullmatch(symbol)
        if m:
            return self.var_base + 2 * int(m.group(1))
        raise UnknownSymbol(f"no code for symbol {symbol!r}")

    def symbol(self, code: int) -> str:
        if code in self._inverse:
            return self._inverse[code]
        if code >= self.var_base and (code - self.var_base) % 2 == 0:
            return f"x{(code - self.var_base) // 2}"
        raise NotACode(f"{code} is not a symbol code")

    def to_json(self) -> dict:
        return {"codes": dict(self.codes), "var_base": self.var_base}

    @classmethod
    def load(cls, path: str | Path) -> "SymbolTable":
        data = json.loads(Path(path).read_text(encoding="utf-8"))
        codes = dict(DEFAULT_CODES)
        codes.update(data.get("codes", {}))
        return cls(codes, data.get("var_base", VARIABLE_BASE))


DEFAULT_TABLE = SymbolTable()


def encode(symbols: Sequence[str], table: SymbolTable = DEFAULT_TABLE) -> int:
    if not symbols:
        return 1
    total = 0
    exponent = 0
    for s in symbols:
        exponent += table.code(s) + 1
        total |= 1 << exponent
    return total


def decode(c: int, table: SymbolTable = DEFAULT_TABLE) -> tuple[str, ...]:
    if c == 1:
        return ()
    if c <= 0:
        raise NotACode(f"{c} is not the code of anything")
    out = []
    prev = 0
    n = c
    while n:
        low = n & -n
        exponent = low.bit_length() - 1
        gap = exponent - prev
        if gap % 2 or gap < 2:
            raise NotACode(f"{c} is not the code of anything")
        out.append(table.symbol(gap - 1))
        prev = exponent
        n ^= low
    return tuple(out)


def is_code(c: int, table: SymbolTable = DEFAULT_TABLE) -> bool:
    try:
        decode(c, table)
    except NotACode:
        return False
    return True


def negation_code(c: int, table: SymbolTable = DEFAULT_TABLE) -> int:
    """Code of the negation of the nonempty string coded by c: 16(1 + c)."""
    if not decode(c, table):
        raise NotACode("negation_code is defined for codes of nonempty strings only")
    return 16 * (1 + c)


def code_of(e: Formula | Term, table: SymbolTable = DEFAULT_TABLE, **kw) -> int:
    return encode(to_symbol_string(e, **kw), table)
