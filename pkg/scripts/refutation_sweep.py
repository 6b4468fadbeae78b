"""Run the four refutations and the framework laws over several seeds.

Writes one JSON report per seed and prints a pass/fail table.

    python scripts/refutation_sweep.py --seeds 0 1 2 --corpus-size 100 --out results/
"""

import argparse
import json
import time
from dataclasses import asdict, dataclass, field
from pathlib import Path

from selfref.cli import theorem_reports
from selfref.framework import StarCoding, verify_framework
from selfref.report import REPORT_VERSION


@dataclass
class SweepConfig:
    seeds: list[int] = field(default_factory=lambda: [0, 1, 2])
    corpus_size: int = 100
    bound: int = 64
    out: str | None = None


def run_seed(cfg: SweepConfig, seed: int) -> dict:
    star = StarCoding()
    start = time.perf_counter()
    reports = verify_framework(seed, cfg.corpus_size, cfg.bound, star)
    reports += theorem_reports(seed, cfg.corpus_size, star)
    return {
        "version": REPORT_VERSION,
        "seed": seed,
        "seconds": round(time.perf_counter() - start, 3),
        "reports": [r.to_json() for r in reports],
        "pass": all(r.passed for r in reports),
    }


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--seeds", type=int, nargs="+", default=[0, 1, 2])
    p.add_argument("--corpus-size", type=int, default=100)
    p.add_argument("--bound", type=int, default=64)
    p.add_argument("--out", help="directory for per-seed JSON reports")
    cfg = SweepConfig(**vars(p.parse_args()))

    ok = True
    for seed in cfg.seeds:
        doc = run_seed(cfg, seed)
        ok &= doc["pass"]
        n = sum(len(r["instances"]) for r in doc["reports"])
        print(f"seed {seed:>4}  {'PASS' if doc['pass'] else 'FAIL'}  "
              f"{len(doc['reports'])} claims  {n} instances  {doc['seconds']:.2f}s")
        for r in doc["reports"]:
            if not r["pass"]:
                print(f"    failed: {r['claim']}")
        if cfg.out:
            out = Path(cfg.out)
            out.mkdir(parents=True, exist_ok=True)
            doc["config"] = asdict(cfg)
            (out / f"seed_{seed}.json").write_text(json.dumps(doc, ensure_ascii=False, sort_keys=True))
    raise SystemExit(0 if ok else 1)


if __name__ == "__main__":
    main()
