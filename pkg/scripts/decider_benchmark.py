"""Time the decider against exhaustive evaluation on generated bounded sentences.

Reports agreement counts and timing for the shipped decider and for the
textbook elimination (bounded-range expansion off).
"""

import argparse
import statistics
import time
from dataclasses import dataclass

from selfref import presburger
from selfref.corpus import CorpusConfig, generate_sentences
from selfref.oracle import brute_force_eval


@dataclass
class BenchConfig:
    seed: int = 0
    size: int = 500
    bound: int = 64
    quantifier_depth: int = 2
    formula_depth: int = 3


def timed(fn, s):
    start = time.perf_counter()
    out = fn(s)
    return out, time.perf_counter() - start


def textbook(s) -> bool:
    presburger.RANGE_EXPANSION = False
    try:
        return presburger.decide_pf(presburger.to_presburger(s))
    finally:
        presburger.RANGE_EXPANSION = True


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    for name, default in vars(BenchConfig()).items():
        p.add_argument(f"--{name.replace('_', '-')}", type=int, default=default)
    cfg = BenchConfig(**vars(p.parse_args()))

    corpus = generate_sentences(CorpusConfig(seed=cfg.seed, size=cfg.size, bounded=True,
                                             quantifier_depth=cfg.quantifier_depth,
                                             formula_depth=cfg.formula_depth),
                                with_edge_cases=False)
    rows = {"decide": [], "textbook": [], "exhaustive": []}
    exact = disagree = 0
    for s in corpus:
        (verdict, is_exact), t_bf = timed(lambda f: brute_force_eval(f, cfg.bound), s)
        if not is_exact:
            continue
        exact += 1
        presburger.decide.cache_clear()
        v1, t1 = timed(presburger.decide, s)
        v2, t2 = timed(textbook, s)
        disagree += (v1 != verdict) + (v2 != verdict)
        rows["decide"].append(t1)
        rows["textbook"].append(t2)
        rows["exhaustive"].append(t_bf)

    print(f"{exact} exact sentences of {len(corpus)}, {disagree} disagreements")
    for name, ts in rows.items():
        if ts:
            print(f"{name:>10}: total {sum(ts):7.3f}s  median {statistics.median(ts) * 1e3:7.3f}ms"
                  f"  max {max(ts) * 1e3:8.2f}ms")
    raise SystemExit(1 if disagree else 0)


if __name__ == "__main__":
    main()
