"""Plain data describing constraint systems.

These carry parameters only; no generating-function logic lives here, so the
enumeration oracle can share them without sharing any formulas.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence

from .errors import NonPositiveRatio, ParameterViolation
from .exactmat import ConstraintMatrix


@dataclass(frozen=True)
class EqualitySpec:
    """Constraints held with equality (1-based set S) and additive offsets d."""

    S: frozenset[int] = frozenset()
    d: tuple[int, ...] | None = None

    def __post_init__(self):
        object.__setattr__(self, "S", frozenset(int(i) for i in self.S))
        if self.d is not None:
            d = tuple(int(v) for v in self.d)
            if any(v < 0 for v in d):
                raise ValueError(f"offsets must be nonnegative, got {d}")
            object.__setattr__(self, "d", d)

    def offsets(self, k: int) -> tuple[int, ...]:
        if self.d is None:
            return (0,) * k
        if len(self.d) != k:
            raise ValueError(f"{len(self.d)} offsets given for k={k}")
        return self.d

    def check(self, k: int) -> None:
        bad = sorted(i for i in self.S if not 1 <= i <= k)
        if bad:
            raise ValueError(f"equality indices {bad} outside 1..{k}")
        self.offsets(k)


@dataclass(frozen=True)
class RationalSystem:
    """lambda_1 >= c_1 ceil(a_1 lambda_2 / a_2) + sum_{i>=2} c_i lambda_i,
    lambda_2/a_2 >= ... >= lambda_k/a_k >= 0.

    ``first_equality`` turns the first constraint into an equation.
    """

    a: tuple[int, ...]
    c: tuple[int, ...] = ()
    first_equality: bool = False

    def __post_init__(self):
        a = tuple(int(v) for v in self.a)
        if not a:
            raise ParameterViolation("rational system needs at least one part")
        if any(v < 1 for v in a):
            raise NonPositiveRatio(f"all a_i must be >= 1, got {a}")
        c = tuple(int(v) for v in self.c) if self.c else (1,) + (0,) * (len(a) - 1)
        if len(c) != len(a):
            raise ParameterViolation(f"{len(c)} coefficients c for k={len(a)}")
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "c", c)

    @property
    def k(self) -> int:
        return len(self.a)

    @classmethod
    def from_ratios(
        cls,
        ratios: Iterable[Fraction | tuple[int, int]],
        first: Sequence[int] | None = None,
        first_equality: bool = False,
    ) -> "RationalSystem":
        """Build from lambda_i >= (n_i/d_i) lambda_{i+1}; a is reduced by its gcd."""
        pairs = []
        for r in ratios:
            n, d = (r.numerator, r.denominator) if isinstance(r, Fraction) else r
            if n < 1 or d < 1:
                raise NonPositiveRatio(f"ratio {n}/{d} is not positive")
            pairs.append((n, d))
        k = len(pairs) + 1
        a = []
        for i in range(k):
            v = 1
            for d in (p[1] for p in pairs[:i]):
                v *= d
            for n in (p[0] for p in pairs[i:]):
                v *= n
            a.append(v)
        g = 0
        for v in a:
            g = gcd(g, v)
        return cls(tuple(v // g for v in a), tuple(first) if first else (), first_equality)

    def ratios(self) -> list[Fraction]:
        return [Fraction(self.a[i], self.a[i + 1]) for i in range(self.k - 1)]

    def is_plain(self) -> bool:
        """True for c = (1, 0, ..., 0), the pure ratio chain."""
        return self.c == (1,) + (0,) * (self.k - 1)


KINDS = ("integer_matrix", "rational", "lecture_hall_variant", "alpha_beta")


@dataclass(frozen=True)
class ConstraintSystem:
    kind: str
    k: int
    matrix: ConstraintMatrix | None = None
    equality: EqualitySpec = field(default_factory=EqualitySpec)
    rational: RationalSystem | None = None
    l: int = 0
    j: int = 0
    alpha: int = 0
    beta: int = 0
    first_equality: bool = False

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown system kind {self.kind!r}")

    @classmethod
    def integer_matrix(cls, A: ConstraintMatrix, spec: EqualitySpec | None = None):
        spec = spec or EqualitySpec()
        spec.check(A.k)
        return cls("integer_matrix", A.k, matrix=A, equality=spec)

    @classmethod
    def from_rational(cls, sys: RationalSystem):
        return cls("rational", sys.k, rational=sys)

    @classmethod
    def lecture_hall_variant(cls, k: int, l: int, j: int, first_equality: bool = False):
        check_lecture_hall_params(k, l, j)
        return cls("lecture_hall_variant", k, l=l, j=j, first_equality=first_equality)

    @classmethod
    def alpha_beta(cls, alpha: int, beta: int, k: int):
        check_alpha_beta_params(alpha, beta, k)
        return cls("alpha_beta", k, alpha=alpha, beta=beta)


def check_alpha_beta_params(alpha: int, beta: int, k: int) -> None:
    if k < 1:
        raise ParameterViolation(f"k must be positive, got {k}")
    if alpha < 1:
        raise ParameterViolation(f"alpha must be >= 1, got {alpha}")
    if beta > alpha:
        raise ParameterViolation(f"beta must be <= alpha, got beta={beta} > alpha={alpha}")


def check_lecture_hall_params(k: int, l: int, j: int) -> None:
    if k < 1:
        raise ParameterViolation(f"k must be positive, got {k}")
    if l <= 0:
        raise ParameterViolation(f"l must be positive, got {l}")
    if j < 2 - l:
        raise ParameterViolation(f"j must be >= 2 - l = {2 - l}, got {j}")
