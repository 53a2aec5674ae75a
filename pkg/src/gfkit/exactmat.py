"""Exact integer algebra for strictly upper-triangular constraint matrices.

Storage is 0-based tuples of Python ints; everything user-facing (DSL, CLI,
error messages) talks about 1-based indices.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

Matrix = tuple[tuple[int, ...], ...]


def _freeze(rows: Sequence[Sequence[int]]) -> Matrix:
    return tuple(tuple(int(v) for v in row) for row in rows)


def identity(k: int) -> Matrix:
    return tuple(tuple(int(i == j) for j in range(k)) for i in range(k))


def matmul(x: Matrix, y: Matrix) -> Matrix:
    n, m, p = len(x), len(y), len(y[0]) if y else 0
    return tuple(
        tuple(sum(x[i][t] * y[t][j] for t in range(m)) for j in range(p))
        for i in range(n)
    )


def matadd(x: Matrix, y: Matrix) -> Matrix:
    return tuple(tuple(a + b for a, b in zip(rx, ry)) for rx, ry in zip(x, y))


def matsub(x: Matrix, y: Matrix) -> Matrix:
    return tuple(tuple(a - b for a, b in zip(rx, ry)) for rx, ry in zip(x, y))


@dataclass(frozen=True)
class ConstraintMatrix:
    """Strictly upper-triangular integer matrix A of the system lambda >= A lambda."""

    entries: Matrix

    def __post_init__(self):
        rows = _freeze(self.entries)
        object.__setattr__(self, "entries", rows)
        k = len(rows)
        if k < 1:
            raise ValueError("constraint matrix needs k >= 1")
        for i, row in enumerate(rows):
            if len(row) != k:
                raise ValueError(f"row {i + 1} has length {len(row)}, expected {k}")
            for j in range(i + 1):
                if row[j] != 0:
                    raise ValueError(
                        f"entry ({i + 1},{j + 1}) = {row[j]} is on or below the diagonal"
                    )

    @property
    def k(self) -> int:
        return len(self.entries)

    @classmethod
    def zero(cls, k: int) -> "ConstraintMatrix":
        return cls(tuple((0,) * k for _ in range(k)))

    @classmethod
    def from_entries(cls, k: int, entries: dict[tuple[int, int], int]) -> "ConstraintMatrix":
        """Build from a sparse dict keyed by 1-based (i, j)."""
        rows = [[0] * k for _ in range(k)]
        for (i, j), v in entries.items():
            rows[i - 1][j - 1] = v
        return cls(_freeze(rows))

    def row(self, i: int) -> tuple[int, ...]:
        """Row i, 1-based."""
        return self.entries[i - 1]


@dataclass(frozen=True)
class UnitMatrix:
    """Unit upper-triangular B together with its column and parity column sums."""

    entries: Matrix
    column_sums: tuple[int, ...] = field(init=False)
    odd_sums: tuple[int, ...] = field(init=False)
    even_sums: tuple[int, ...] = field(init=False)

    def __post_init__(self):
        rows = _freeze(self.entries)
        object.__setattr__(self, "entries", rows)
        k = len(rows)
        for i, row in enumerate(rows):
            if len(row) != k:
                raise ValueError("unit matrix must be square")
            if row[i] != 1:
                raise ValueError(f"diagonal entry ({i + 1},{i + 1}) is {row[i]}, not 1")
            if any(row[j] != 0 for j in range(i)):
                raise ValueError(f"row {i + 1} has a nonzero entry below the diagonal")
        # row index r (0-based) is the 1-based row r+1, so even r means odd position
        odd = tuple(sum(rows[r][c] for r in range(0, k, 2)) for c in range(k))
        even = tuple(sum(rows[r][c] for r in range(1, k, 2)) for c in range(k))
        object.__setattr__(self, "odd_sums", odd)
        object.__setattr__(self, "even_sums", even)
        object.__setattr__(self, "column_sums", tuple(o + e for o, e in zip(odd, even)))

    @property
    def k(self) -> int:
        return len(self.entries)

    def column(self, j: int) -> tuple[int, ...]:
        """Column j, 1-based."""
        return tuple(row[j - 1] for row in self.entries)


def nilpotent_inverse(A: ConstraintMatrix) -> UnitMatrix:
    """B = (I - A)^-1 = I + A + A^2 + ... + A^(k-1).

    >>> nilpotent_inverse(ConstraintMatrix(((0, 2), (0, 0)))).entries
    ((1, 2), (0, 1))
    """
    k = A.k
    total = identity(k)
    power = identity(k)
    for _ in range(k - 1):
        power = matmul(power, A.entries)
        if not any(any(row) for row in power):
            break
        total = matadd(total, power)
    return UnitMatrix(total)


def unit_inverse(B: UnitMatrix) -> Matrix:
    """Inverse of a unit upper-triangular integer matrix, again integer.

    Uses B = I + N with N nilpotent, so B^-1 = I - N + N^2 - ...
    """
    k = B.k
    N = matsub(B.entries, identity(k))
    total = identity(k)
    power = identity(k)
    sign = 1
    for _ in range(k - 1):
        power = matmul(power, N)
        sign = -sign
        total = tuple(
            tuple(t + sign * p for t, p in zip(rt, rp)) for rt, rp in zip(total, power)
        )
    return total


def constraint_from_unit(B: UnitMatrix) -> ConstraintMatrix:
    """A = I - B^-1, the constraint matrix whose family B parametrises."""
    return ConstraintMatrix(matsub(identity(B.k), unit_inverse(B)))


def is_nonnegative(B: UnitMatrix) -> bool:
    return all(v >= 0 for row in B.entries for v in row)


def apply(B: UnitMatrix, s: Sequence[int]) -> tuple[int, ...]:
    """lambda = B s."""
    if len(s) != B.k:
        raise ValueError(f"vector has length {len(s)}, matrix has k={B.k}")
    return tuple(sum(b * x for b, x in zip(row, s)) for row in B.entries)


def slacks(A: ConstraintMatrix, lam: Sequence[int]) -> tuple[int, ...]:
    """s_i = lambda_i - sum_j A[i,j] lambda_j."""
    if len(lam) != A.k:
        raise ValueError(f"sequence has length {len(lam)}, matrix has k={A.k}")
    return tuple(
        lam[i] - sum(a * x for a, x in zip(A.entries[i], lam)) for i in range(A.k)
    )
