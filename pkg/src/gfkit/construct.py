"""From a target product prod 1/(1 - q^c_i) back to a constraint matrix."""

from __future__ import annotations

from dataclasses import dataclass
from math import comb, prod
from typing import Iterator, Sequence

from .errors import InfeasibleSequence, PreconditionViolated, TooMany
from .exactmat import ConstraintMatrix, UnitMatrix

ENUMERATION_LIMIT = 10**6


@dataclass(frozen=True)
class Construction:
    A: ConstraintMatrix
    equality_first: bool

    @property
    def k(self) -> int:
        return self.A.k


def _first_row_construction(c: Sequence[int]) -> ConstraintMatrix:
    k = len(c)
    # B[1,i] = c_i - (i - 1) must stay nonnegative
    for i, ci in enumerate(c, start=1):
        if ci < i - 1:
            raise InfeasibleSequence(f"c_{i} = {ci} < {i - 1}; no first-row construction exists")
    entries = {(i, i + 1): 1 for i in range(2, k)}
    if k >= 2:
        entries[(1, 2)] = c[1] - 1
    for j in range(3, k + 1):
        entries[(1, j)] = c[j - 1] - c[j - 2] - 1
    return ConstraintMatrix.from_entries(k, entries)


def matrix_from_sequence(c: Sequence[int]) -> Construction:
    """A whose family has weight generating function prod 1/(1 - q^c_i).

    With c_1 = 1 the family is P_A itself.  Otherwise the construction runs on
    (1, c_1, ..., c_k) and the first constraint must hold with equality, which
    removes the extra 1/(1-q).
    """
    c = tuple(int(v) for v in c)
    if not c or any(v < 1 for v in c):
        raise InfeasibleSequence(f"c must be a nonempty sequence of positive integers, got {c}")
    if c[0] == 1:
        return Construction(_first_row_construction(c), False)
    try:
        A = _first_row_construction((1,) + c)
    except InfeasibleSequence as exc:
        raise InfeasibleSequence(f"{exc} (after prepending 1 to {c})") from None
    return Construction(A, True)


def count_matrices_formula(c: Sequence[int]) -> int:
    """prod_{i=2}^k C(c_i - 1, i - 2), exactly as printed for the count."""
    if not c or c[0] != 1:
        raise PreconditionViolated(f"c_1 must be 1, got {tuple(c)}")
    return prod(comb(ci - 1, i - 2) for i, ci in enumerate(c, start=1) if i >= 2)


def count_matrices_enumerative(c: Sequence[int]) -> int:
    """Closed count of the matrices enumerate_matrices produces:
    one weak composition of c_j - 1 into j - 1 parts per column."""
    if not c or c[0] != 1:
        raise PreconditionViolated(f"c_1 must be 1, got {tuple(c)}")
    return prod(comb(cj + j - 3, j - 2) for j, cj in enumerate(c, start=1) if j >= 2)


def weak_compositions(n: int, parts: int) -> Iterator[tuple[int, ...]]:
    """Lexicographic weak compositions of n into ``parts`` parts."""
    if parts == 0:
        if n == 0:
            yield ()
        return
    if parts == 1:
        yield (n,)
        return
    for first in range(n + 1):
        for rest in weak_compositions(n - first, parts - 1):
            yield (first,) + rest


def enumerate_matrices(c: Sequence[int], limit: int = ENUMERATION_LIMIT) -> list[UnitMatrix]:
    """All unit upper-triangular nonnegative B whose column j sums to c_j."""
    c = tuple(int(v) for v in c)
    if not c or c[0] != 1:
        raise PreconditionViolated(f"c_1 must be 1, got {c}")
    if any(v < 1 for v in c):
        raise PreconditionViolated(f"c must be positive, got {c}")
    total = count_matrices_enumerative(c)
    if total > limit:
        raise TooMany(f"{total} matrices exceeds the limit {limit}")
    k = len(c)
    columns = [list(weak_compositions(c[j] - 1, j)) for j in range(k)]
    out = []

    def build(j: int, cols: list):
        if j == k:
            rows = [[0] * k for _ in range(k)]
            for col, above in enumerate(cols):
                for r, v in enumerate(above):
                    rows[r][col] = v
                rows[col][col] = 1
            out.append(UnitMatrix(tuple(map(tuple, rows))))
            return
        for choice in columns[j]:
            build(j + 1, cols + [choice])

    build(0, [])
    return out
