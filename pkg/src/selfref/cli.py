"""Command-line entry point: ``python -m selfref <subcommand> ...``.

Exit codes: 0 on success or when every claim passes, 1 when a claim fails,
2 on usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import asdict, dataclass
from typing import Optional, Sequence

from selfref import coding, diagonal, presburger
from selfref import syntax as sx
from selfref.corpus import CorpusConfig, generate_families, generate_sentences, generate_unary
from selfref.errors import SelfRefError
from selfref.framework import StarCoding, verify_framework
from selfref.report import REPORT_VERSION
from selfref import theorems

SUBCOMMANDS = ("parse", "encode", "decode", "decide", "qe",
               "verify-framework", "verify-theorems", "diagonal")


@dataclass(frozen=True)
class RunConfig:
    subcommand: str
    seed: int = 0
    corpus_size: int = 100
    bound: int = 64
    format: str = "text"
    symbols: Optional[str] = None


def _natural(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError("expected a natural number")
    return value


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=_natural, default=0)
    common.add_argument("--corpus-size", type=_natural, default=100)
    common.add_argument("--bound", type=_natural, default=64)
    common.add_argument("--format", choices=("json", "text"), default="text")
    common.add_argument("--symbols", metavar="PATH",
                        help="JSON symbol-table override: {\"codes\": {...}, \"var_base\": n}")

    parser = argparse.ArgumentParser(prog="selfref", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="subcommand", required=True)
    sub.add_parser("parse", parents=[common], help="parse and pretty-print").add_argument("text")
    sub.add_parser("encode", parents=[common],
                   help="Ackermann code of a formula or term").add_argument("text")
    sub.add_parser("decode", parents=[common],
                   help="symbol string of an Ackermann code").add_argument("code")
    sub.add_parser("decide", parents=[common], help="truth of an L* sentence in M*"
                   ).add_argument("text")
    sub.add_parser("qe", parents=[common], help="eliminate all quantifiers").add_argument("text")
    sub.add_parser("verify-framework", parents=[common], help="check the framework laws")
    sub.add_parser("verify-theorems", parents=[common], help="check the four refutations")
    sub.add_parser("diagonal", parents=[common], help="build a diagonal fixed point"
                   ).add_argument("--lambda", dest="lam", required=True, metavar="FORMULA")
    return parser


def _parse_any(text: str):
    try:
        return sx.parse(text, sx.Language.LSTAR)
    except SelfRefError as err:
        if "not a symbol of L*" not in str(err):
            raise
        return sx.parse(text, sx.Language.ARITH)


def _emit(cfg: RunConfig, text_out: str, json_out) -> None:
    if cfg.format == "json":
        print(json.dumps(json_out, ensure_ascii=False, sort_keys=True))
    else:
        print(text_out)


def _emit_reports(cfg: RunConfig, reports, table: coding.SymbolTable) -> int:
    passed = all(r.passed for r in reports)
    if cfg.format == "json":
        doc = {
            "version": REPORT_VERSION,
            "config": asdict(cfg),
            "symbol_table": table.to_json(),
            "reports": [r.to_json() for r in reports],
            "pass": passed,
        }
        print(json.dumps(doc, ensure_ascii=False, sort_keys=True))
    else:
        for r in reports:
            print(r.summary())
            for bad in r.failures[:5]:
                print(f"    input={bad.input!r} expected={bad.expected!r} got={bad.got!r}")
        print("ALL PASS" if passed else "FAILURES")
    return 0 if passed else 1


def theorem_reports(seed: int, corpus_size: int, star: StarCoding) -> list:
    corpus = generate_sentences(CorpusConfig(seed=seed, size=corpus_size))
    families = generate_families(seed, 20, 5, corpus)
    psis = generate_unary(seed, 50)
    thetas = [theorems.theta_from_psi(p) for p in psis]
    return [
        theorems.verify_not_godel(corpus, star, seed),
        theorems.verify_not_tarski(corpus, star, seed),
        theorems.verify_not_carnap(families, star, seed),
        theorems.verify_not_rosser(corpus, range(8), star, seed),
        theorems.verify_consistency(corpus, seed),
        theorems.verify_skeletons(thetas, psis),
    ]


def _run(cfg: RunConfig, args) -> int:
    table = coding.SymbolTable.load(cfg.symbols) if cfg.symbols else coding.DEFAULT_TABLE
    star = StarCoding(table)
    cmd = cfg.subcommand

    if cmd == "parse":
        ast = _parse_any(args.text)
        _emit(cfg, sx.show(ast), {"text": sx.show(ast), "repr": repr(ast)})
    elif cmd == "encode":
        symbols = sx.to_symbol_string(_parse_any(args.text))
        c = coding.encode(symbols, table)
        _emit(cfg, str(c), {"code": str(c), "symbols": list(symbols)})
    elif cmd == "decode":
        try:
            c = int(args.code)
        except ValueError:
            raise SelfRefError(f"not a decimal number: {args.code!r}") from None
        symbols = coding.decode(c, table)
        try:
            shown = sx.show(sx.from_symbol_string(symbols)) if symbols else ""
        except SelfRefError:
            shown = None
        _emit(cfg, " ".join(symbols) if shown is None else shown,
              {"symbols": list(symbols), "expression": shown})
    elif cmd == "decide":
        verdict = presburger.decide(sx.parse_formula(args.text))
        _emit(cfg, "true" if verdict else "false", {"verdict": verdict})
    elif cmd == "qe":
        out = presburger.show_pf(presburger.eliminate_quantifiers(sx.parse_formula(args.text)))
        _emit(cfg, out, {"formula": out})
    elif cmd == "verify-framework":
        return _emit_reports(cfg, verify_framework(cfg.seed, cfg.corpus_size, cfg.bound, star),
                             table)
    elif cmd == "verify-theorems":
        return _emit_reports(cfg, theorem_reports(cfg.seed, cfg.corpus_size, star), table)
    elif cmd == "diagonal":
        lam = sx.parse_formula(args.lam, sx.Language.ARITH)
        result = diagonal.construct(lam)
        verified = diagonal.verify(result)
        doc = diagonal.to_json(result, verified)
        if cfg.format == "json":
            print(json.dumps(doc, ensure_ascii=False, sort_keys=True))
        else:
            print(f"m = {result.m}\nn = {result.n}\ndelta = {doc['delta']}\n"
                  f"verified = {str(verified).lower()}\ncoding = {doc['coding']}")
        return 0 if verified else 1
    return 0


def run(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    cfg = RunConfig(args.subcommand, args.seed, args.corpus_size, args.bound,
                    args.format, args.symbols)
    try:
        return _run(cfg, args)
    except (SelfRefError, ValueError, OSError) as err:
        message = str(err)
        if isinstance(err, coding.NotACode):
            message = f"not a code: {message}"
        print(f"selfref: error: {message}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())
