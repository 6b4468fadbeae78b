"""Goedel codings, a decidable counterexample to the incompleteness schemas, and
an effective diagonal construction, all checked by exact computation."""

from selfref.syntax import Language, parse, show, free_vars, substitute, negate, to_symbol_string
from selfref.coding import encode, decode, negation_code
from selfref.presburger import decide, eval_closed_term, eliminate_nu, qe_step, nu_star
from selfref.oracle import brute_force_eval

__all__ = [
    "Language", "parse", "show", "free_vars", "substitute", "negate", "to_symbol_string",
    "encode", "decode", "negation_code",
    "decide", "eval_closed_term", "eliminate_nu", "qe_step", "nu_star", "brute_force_eval",
]
