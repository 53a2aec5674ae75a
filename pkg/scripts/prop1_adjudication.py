"""Compare the printed matrix-count formula with direct enumeration.

For each target c the script lists every unit upper-triangular B with column
sums c, verifies each resulting family against prod 1/(1-q^c_i), and prints
both counts side by side.

    python scripts/prop1_adjudication.py [c1,c2,... ...]
"""

import sys

from gfkit.construct import count_matrices_formula, enumerate_matrices
from gfkit.exactmat import constraint_from_unit
from gfkit.oracle import verify
from gfkit.series import ProductForm
from gfkit.systems import ConstraintSystem

DEFAULT = [(1, 2), (1, 2, 3), (1, 3, 6), (1, 2, 2), (1, 2, 4, 8)]


def main(argv):
    targets = [tuple(int(v) for v in s.split(",")) for s in argv] or DEFAULT
    print(f"{'c':<16}{'formula':>8}{'enumerated':>12}{'verified':>10}")
    for c in targets:
        mats = enumerate_matrices(c)
        target = ProductForm.univariate(c)
        ok = sum(
            verify(target, ConstraintSystem.integer_matrix(constraint_from_unit(B)), 20).passed
            for B in mats
        )
        print(f"{str(c):<16}{count_matrices_formula(c):>8}{len(mats):>12}{ok:>10}")


if __name__ == "__main__":
    main(sys.argv[1:])
