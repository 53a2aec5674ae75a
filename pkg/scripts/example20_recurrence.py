"""Test f_{k+1}(x, y) = f_k(x^2 y, 1/x) / (1 - x) for ordinary partitions.

f_k is the odd/even generating function of lambda_1 >= ... >= lambda_k >= 0.
Both sides come from enumeration, so no closed form is involved.  The
identity holds for even k only: the substitution (o, e) -> (2o - e, o) sends
each factor (i, i-1) to (i+1, i) and fixes (i, i), so for odd k the extra
(i, i) factor that f_{k+1} needs never appears.

    python scripts/example20_recurrence.py [--kmax K] [--degree D]
"""

import argparse

from gfkit.exactmat import ConstraintMatrix
from gfkit.oracle import count_bivariate
from gfkit.systems import ConstraintSystem


def f(k, N):
    A = ConstraintMatrix.from_entries(k, {(i, i + 1): 1 for i in range(1, k)})
    return count_bivariate(ConstraintSystem.integer_matrix(A), N)


def rhs(fk, bound):
    moved = {}
    for (o, e), c in fk.items():
        key = (2 * o - e, o)
        if sum(key) <= bound:
            moved[key] = moved.get(key, 0) + c
    out = {}
    for (o, e), c in moved.items():
        for t in range(bound - o - e + 1):
            out[(o + t, e)] = out.get((o + t, e), 0) + c
    return out


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--kmax", type=int, default=6)
    parser.add_argument("--degree", type=int, default=15)
    args = parser.parse_args()
    D = args.degree
    for k in range(1, args.kmax + 1):
        lhs, right = f(k + 1, D), rhs(f(k, 2 * D), D)
        keys = sorted(set(lhs) | set(right), key=lambda m: (sum(m), m[1]))
        diff = next((m for m in keys if lhs.get(m, 0) != right.get(m, 0)), None)
        if diff is None:
            print(f"k={k}: holds to total degree {D}")
        else:
            print(f"k={k}: fails, first at x^{diff[0]} y^{diff[1]}: "
                  f"f_{k + 1} has {lhs.get(diff, 0)}, transported f_{k} has {right.get(diff, 0)}")


if __name__ == "__main__":
    main()
