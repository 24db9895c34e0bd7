"""Show which odd lowering operators kill the vectors w_{3,j}, and the minus-delta scan.

For n = 1 the vector w_3 is annihilated by X_{-d_1}.  For n >= 2 the term
-sqrt2 x_j (x) v_0 is sent by X_{-d_i} (i != j) to a multiple of
x_j (x) v_{n+i} that no other term of w_{3,j} can cancel.
"""

import argparse

from ospkit.action import odd_lower, tensor_apply
from ospkit.singular import MINUS_DELTA, scan_singular, total_dimension, w3


def main() -> None:
    p = argparse.ArgumentParser()
    p.add_argument("--n", type=int, nargs="+", default=[1, 2, 3])
    p.add_argument("--max-deg", type=int, default=6)
    a = p.parse_args()
    for n in a.n:
        print(f"n = {n}")
        for j in range(1, n + 1):
            v = w3(n, j)
            print(f"  w3,{j} = {v.pretty()}")
            for i in range(1, n + 1):
                print(f"    X-d{i} w3,{j} = {tensor_apply(odd_lower(i), v).pretty()}")
        reports = scan_singular(n, a.max_deg, MINUS_DELTA)
        print(f"  minus-delta total up to degree {a.max_deg}: {total_dimension(reports)}"
              f" (2n+1 = {2 * n + 1})")
        for r in reports:
            for v in r.basis:
                print(f"    {v.pretty()}")


if __name__ == "__main__":
    main()
