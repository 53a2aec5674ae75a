"""Brute-force enumeration of constrained compositions.

This is the ground truth every closed form is checked against, so it is kept
deliberately naive: parts are chosen from index k down to 1, each part's
constraint only mentions parts already chosen, and the only pruning is the
remaining weight budget.  Nothing here looks at (I - A)^-1 or any b-sequence.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterator

from .errors import NotACompositionFamily
from .series import ProductForm, expand
from .systems import ConstraintSystem

# lower(i, lam) -> (bound, exact); i is 0-based and lam[i+1:] is filled in
LowerFn = Callable[[int, list], tuple[int, bool]]


def _ceil_div(p: int, q: int) -> int:
    return -(-p // q)


def _integer_matrix_rule(sys: ConstraintSystem) -> LowerFn:
    rows = sys.matrix.entries
    d = sys.equality.offsets(sys.k)
    S = {i - 1 for i in sys.equality.S}

    def lower(i, lam):
        row = rows[i]
        rhs = sum(row[j] * lam[j] for j in range(i + 1, len(lam))) + d[i]
        return rhs, i in S

    return lower


def _smallest_ratio_ok(lam_next: int, a_i: int, a_next: int) -> int:
    # least v >= 0 with v * a_next >= lam_next * a_i, found by scanning
    v = 0
    while v * a_next < lam_next * a_i:
        v += 1
    return v


def _rational_rule(sys: ConstraintSystem) -> LowerFn:
    r = sys.rational
    a, c = r.a, r.c

    def lower(i, lam):
        if i == 0:
            lam2 = lam[1] if len(lam) > 1 else 0
            first = c[0] * _ceil_div(a[0] * lam2, a[1]) if len(lam) > 1 else 0
            return first + sum(c[t] * lam[t] for t in range(1, len(lam))), r.first_equality
        if i == len(lam) - 1:
            return 0, False
        return _smallest_ratio_ok(lam[i + 1], a[i], a[i + 1]), False

    return lower


def _lecture_hall_rule(sys: ConstraintSystem) -> LowerFn:
    k, l, j = sys.k, sys.l, sys.j

    def lower(i, lam):
        if k == 1:
            return 0, sys.first_equality
        if i == 0:
            # 1-based position p: even p gets (j-1), odd p >= 3 gets (l-1)
            rhs = l * _ceil_div(k * lam[1], k - 1)
            for t in range(1, k):
                rhs += (j - 1 if (t + 1) % 2 == 0 else l - 1) * lam[t]
            return rhs, sys.first_equality
        if i == k - 1:
            return 0, False
        # lam_i/(k-i+1) >= lam_{i+1}/(k-i) in 1-based terms
        return _smallest_ratio_ok(lam[i + 1], k - i, k - i - 1), False

    return lower


def _alpha_beta_rule(sys: ConstraintSystem) -> LowerFn:
    alpha, beta = sys.alpha, sys.beta

    def lower(i, lam):
        rhs = 0
        for t in range(i + 1, len(lam)):
            rhs += alpha * lam[t] if (t - i) % 2 == 1 else -beta * lam[t]
        return rhs, False

    return lower


_RULES = {
    "integer_matrix": _integer_matrix_rule,
    "rational": _rational_rule,
    "lecture_hall_variant": _lecture_hall_rule,
    "alpha_beta": _alpha_beta_rule,
}


def enumerate_family(sys: ConstraintSystem, N: int) -> Iterator[tuple[int, ...]]:
    """Every admissible composition of weight <= N."""
    k = sys.k
    lower = _RULES[sys.kind](sys)
    lam = [0] * k

    def descend(i: int, budget: int):
        lo, exact = lower(i, lam)
        if lo < 0:
            raise NotACompositionFamily(
                f"part {i + 1} may be negative (lower bound {lo}) given parts "
                f"{tuple(lam[i + 1:])}"
            )
        top = lo if exact else budget
        for v in range(lo, min(top, budget) + 1):
            lam[i] = v
            if i == 0:
                yield tuple(lam)
            else:
                yield from descend(i - 1, budget - v)
        lam[i] = 0

    yield from descend(k - 1, N)


def count_by_weight(sys: ConstraintSystem, N: int) -> list[int]:
    counts = [0] * (N + 1)
    for lam in enumerate_family(sys, N):
        counts[sum(lam)] += 1
    return counts


def count_bivariate(sys: ConstraintSystem, N: int) -> dict[tuple[int, int], int]:
    """Counts keyed by (odd-position weight, even-position weight), 1-based positions."""
    counts: dict[tuple[int, int], int] = {}
    for lam in enumerate_family(sys, N):
        key = (sum(lam[0::2]), sum(lam[1::2]))
        counts[key] = counts.get(key, 0) + 1
    return counts


@dataclass(frozen=True)
class VerifyReport:
    passed: bool
    N: int
    first_mismatch: tuple[tuple[int, int], int, int] | None = None  # (exp, expected, actual)
    univariate: bool = False

    def __bool__(self):
        return self.passed

    def describe(self) -> str:
        if self.passed:
            return f"pass (N={self.N})"
        (dx, dy), expected, actual = self.first_mismatch
        where = f"q^{dx}" if self.univariate else f"x^{dx} y^{dy}"
        return (
            f"mismatch at {where}: closed form gives {actual}, "
            f"enumeration gives {expected}"
        )


def verify(
    form: ProductForm, sys: ConstraintSystem, N: int, bivariate: bool | None = None
) -> VerifyReport:
    """Compare expand(form, N) with the enumerated counts.

    Mismatches are reported at the earliest differing coefficient, ordered by
    total degree and then by y-degree.
    """
    if bivariate is None:
        bivariate = not form.is_univariate()
    series = expand(form, N)
    if bivariate:
        expected = count_bivariate(sys, N)
    else:
        expected = {(n, 0): v for n, v in enumerate(count_by_weight(sys, N)) if v}
        series = series.diagonal()
    keys = set(expected) | set(series.coefficients)
    for key in sorted(keys, key=lambda e: (e[0] + e[1], e[1])):
        want, got = expected.get(key, 0), series[key]
        if want != got:
            return VerifyReport(False, N, (key, want, got), not bivariate)
    return VerifyReport(True, N, univariate=not bivariate)
