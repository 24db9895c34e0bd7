"""Tabulate Gamma block determinants against the closed form 1 - 2(n + C).

For every weight with |k| <= max_deg and more than one basis vector, prints
the class, block size, both determinants, and the closed-form value.
"""

import argparse
from collections import Counter

from ospkit.intertwiner import restrict
from ospkit.linalg import det
from ospkit.weights import LambdaC, enumerate_weights, format_weight


def main() -> None:
    p = argparse.ArgumentParser()
    p.add_argument("--n", type=int, default=2)
    p.add_argument("--max-deg", type=int, default=3)
    p.add_argument("--all", action="store_true", help="also list 1x1 blocks")
    a = p.parse_args()

    tally = Counter()
    print(f"{'weight':24} {'class':10} {'size':>4} {'det w1':>8} {'det w2':>8} {'1-2(n+C)':>9}")
    for lam in enumerate_weights(a.n, a.max_deg):
        block = restrict(None, lam)
        size = len(block.basis)
        if size == 1 and not a.all:
            continue
        d1, d2 = det(block.matrix_w1), det(block.matrix_w2)
        want = block.expected_det()
        cls = f"C={block.cls.C}" if isinstance(block.cls, LambdaC) else type(block.cls).__name__
        print(f"{format_weight(lam):24} {cls:10} {size:>4} {d1.pretty():>8} {d2.pretty():>8} {want.pretty():>9}")
        tally[(d1 == want, d2 == want)] += 1
    print()
    for (m1, m2), c in sorted(tally.items()):
        print(f"w1 matches: {m1!s:5}  w2 matches: {m2!s:5}  blocks: {c}")


if __name__ == "__main__":
    main()
