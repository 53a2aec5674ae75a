"""Print the closed form for each worked example and check it against enumeration.

    python scripts/reproduce_examples.py [--trunc N]
"""

import argparse

from gfkit import gfengine as gfe
from gfkit.exactmat import ConstraintMatrix
from gfkit.oracle import verify
from gfkit.series import render
from gfkit.systems import ConstraintSystem, EqualitySpec, RationalSystem


def chain(k):
    return ConstraintMatrix.from_entries(k, {(i, i + 1): 1 for i in range(1, k)})


def integer_cases(k=5):
    yield "lambda_i >= 2 lambda_{i+1} - lambda_{i+2}", ConstraintMatrix(
        ((0, 2, -1, 0), (0, 0, 2, -1), (0, 0, 0, 2), (0, 0, 0, 0))), EqualitySpec()
    yield "lambda_1 >= sum of the rest, then a chain", ConstraintMatrix.from_entries(
        k, {**{(1, j): 1 for j in range(2, k + 1)}, **{(i, i + 1): 1 for i in range(2, k)}}), EqualitySpec()
    yield "lambda_i >= 2 lambda_{i+1}", ConstraintMatrix.from_entries(
        k, {(i, i + 1): 2 for i in range(1, k)}), EqualitySpec()
    yield "lambda_i >= lambda_{i+1} + lambda_{i+2}", ConstraintMatrix.from_entries(
        k, {**{(i, i + 1): 1 for i in range(1, k)}, **{(i, i + 2): 1 for i in range(1, k - 1)}}), EqualitySpec()
    yield "lambda_i >= i * (sum of later parts)", ConstraintMatrix.from_entries(
        k, {(i, j): i for i in range(1, k + 1) for j in range(i + 1, k + 1)}), EqualitySpec()


def rational_cases():
    yield "ratios 4,3,2,1", RationalSystem((4, 3, 2, 1))
    yield "ratios 1,3,2,3,1", RationalSystem((1, 3, 2, 3, 1))
    yield "ratios 1,2,1,2,1 with c=(1,0,0,0,3)", RationalSystem((1, 2, 1, 2, 1), (1, 0, 0, 0, 3))
    yield "ratios 7,3,2,1 with c=(2,3,1,5)", RationalSystem((7, 3, 2, 1), (2, 3, 1, 5))


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--trunc", type=int, default=25)
    N = parser.parse_args().trunc

    for label, A, spec in integer_cases():
        form = gfe.gf_integer(A, spec)
        rep = verify(form, ConstraintSystem.integer_matrix(A, spec), N)
        print(f"{label}\n  {render(form)}\n  {rep.describe()}")
    for label, r in rational_cases():
        form = gfe.gf_rational(r)
        rep = verify(form, ConstraintSystem.from_rational(r), N)
        print(f"{label}\n  b = {gfe.rational_b_sequence(r)}\n  {render(form)}\n  {rep.describe()}")
    for k in (2, 4):
        form = gfe.gf_two_variable(chain(k))
        rep = verify(form, ConstraintSystem.integer_matrix(chain(k)), N, bivariate=True)
        print(f"ordinary partitions, k={k}, odd/even weights\n  {render(form)}\n  {rep.describe()}")


if __name__ == "__main__":
    main()
