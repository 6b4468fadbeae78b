"""Build diagonal fixed points for a few formulas and show that they check out.

For each Lambda(x) the script prints the codes m and n, the size of delta,
and the truth of delta next to the truth of Lambda at delta's own code.
"""

import argparse

from selfref import diagonal, syntax as sx
from selfref.corpus import generate_unary

DEFAULT_LAMBDAS = [
    "x = x",
    "~(x = x)",
    "exists y. x = y + y",
    "exists y. x = y + y + y",
    "forall y. (x < y | y < num(10))",
    "exists y < num(4). x = y * y * y",
]


def describe(lam: sx.Formula) -> str:
    r = diagonal.construct(lam)
    evaluator = diagonal.default_evaluator(lam)
    d = diagonal.encode(r.delta)
    truth = diagonal.delta_truth(r, evaluator)
    return (f"Lambda = {sx.show(lam)}\n"
            f"  n has {r.n.bit_length()} bits, m has {r.m.bit_length()} bits, "
            f"code(delta) has {d.bit_length()} bits\n"
            f"  delta true: {truth}   Lambda(code delta) true: {evaluator(d)}   "
            f"verified: {diagonal.verify(r, evaluator)}")


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("lambdas", nargs="*", help="formulas with x free (arithmetic syntax)")
    p.add_argument("--random", type=int, default=0, help="also try this many generated formulas")
    p.add_argument("--seed", type=int, default=0)
    args = p.parse_args()

    lams = [sx.parse_formula(t, sx.Language.ARITH) for t in (args.lambdas or DEFAULT_LAMBDAS)]
    lams += generate_unary(args.seed, args.random, allow_nu=False)
    for lam in lams:
        print(describe(lam))


if __name__ == "__main__":
    main()
