"""Exact polynomials, truncated power series and product forms in x (and y).

Univariate objects are the special case where every y-exponent is zero; the
variable is then printed as ``q``.  Truncation is by total degree dx + dy.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .errors import NegativeExponent

Exp = tuple[int, int]


class Polynomial:
    """Sparse bivariate polynomial with integer coefficients and no zero terms."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Exp, int] | Iterable[tuple[Exp, int]] = ()):
        acc: dict[Exp, int] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for (dx, dy), c in items:
            if dx < 0 or dy < 0:
                raise NegativeExponent(f"term x^{dx} y^{dy} has a negative exponent")
            acc[(dx, dy)] = acc.get((dx, dy), 0) + c
        self._terms = {e: c for e, c in acc.items() if c != 0}

    @classmethod
    def one(cls) -> "Polynomial":
        return cls({(0, 0): 1})

    @classmethod
    def monomial(cls, dx: int, dy: int = 0, coeff: int = 1) -> "Polynomial":
        return cls({(dx, dy): coeff})

    @classmethod
    def from_exponents(cls, exponents: Iterable[int | Exp]) -> "Polynomial":
        """Sum of monomials, one per listed exponent (repeats add up)."""
        return cls((e if isinstance(e, tuple) else (e, 0), 1) for e in exponents)

    @property
    def terms(self) -> dict[Exp, int]:
        return dict(self._terms)

    def items(self):
        return sorted(self._terms.items(), key=lambda t: (t[0][0] + t[0][1], t[0][1]))

    def is_univariate(self) -> bool:
        return all(dy == 0 for _, dy in self._terms)

    def coefficient_list(self) -> list[int]:
        """Dense univariate coefficients, constant term first."""
        if not self.is_univariate():
            raise ValueError("polynomial has y terms")
        if not self._terms:
            return []
        top = max(dx for dx, _ in self._terms)
        out = [0] * (top + 1)
        for (dx, _), c in self._terms.items():
            out[dx] = c
        return out

    def __add__(self, other: "Polynomial") -> "Polynomial":
        return Polynomial(list(self._terms.items()) + list(other._terms.items()))

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        acc: dict[Exp, int] = {}
        for (a, b), c in self._terms.items():
            for (u, v), d in other._terms.items():
                key = (a + u, b + v)
                acc[key] = acc.get(key, 0) + c * d
        return Polynomial(acc)

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __repr__(self):
        return f"Polynomial({dict(self.items())!r})"

    def __bool__(self):
        return bool(self._terms)


@dataclass(frozen=True)
class TruncatedSeries:
    """Coefficients of a power series for all (dx, dy) with dx + dy <= bound."""

    bound: int
    coefficients: Mapping[Exp, int]

    def __post_init__(self):
        clean = {}
        for (dx, dy), c in dict(self.coefficients).items():
            if dx + dy > self.bound:
                raise ValueError(f"term ({dx},{dy}) exceeds bound {self.bound}")
            if c:
                clean[(dx, dy)] = c
        object.__setattr__(self, "coefficients", clean)

    @classmethod
    def from_list(cls, coeffs: Sequence[int]) -> "TruncatedSeries":
        return cls(len(coeffs) - 1, {(n, 0): c for n, c in enumerate(coeffs)})

    def __getitem__(self, key: int | Exp) -> int:
        if isinstance(key, int):
            key = (key, 0)
        return self.coefficients.get(key, 0)

    def is_univariate(self) -> bool:
        return all(dy == 0 for _, dy in self.coefficients)

    def as_list(self) -> list[int]:
        if not self.is_univariate():
            raise ValueError("series has y terms")
        return [self[n] for n in range(self.bound + 1)]

    def truncate(self, bound: int) -> "TruncatedSeries":
        return TruncatedSeries(
            bound, {e: c for e, c in self.coefficients.items() if sum(e) <= bound}
        )

    def diagonal(self) -> "TruncatedSeries":
        """Set y := x."""
        acc: dict[Exp, int] = {}
        for (dx, dy), c in self.coefficients.items():
            acc[(dx + dy, 0)] = acc.get((dx + dy, 0), 0) + c
        return TruncatedSeries(self.bound, acc)

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.bound == other.bound and self.coefficients == other.coefficients

    def __hash__(self):
        return hash((self.bound, frozenset(self.coefficients.items())))


def _dense(bound: int) -> list[list[int]]:
    return [[0] * (bound + 1 - dx) for dx in range(bound + 1)]


def _divide_in_place(c: list[list[int]], o: int, e: int, times: int = 1) -> None:
    """Multiply a dense truncated series by (1 - x^o y^e)^-times."""
    bound = len(c) - 1
    for _ in range(times):
        for dx in range(o, bound + 1):
            row, src = c[dx], c[dx - o]
            for dy in range(e, bound + 1 - dx):
                row[dy] += src[dy - e]


def _from_dense(c: list[list[int]]) -> TruncatedSeries:
    bound = len(c) - 1
    return TruncatedSeries(
        bound,
        {(dx, dy): v for dx, row in enumerate(c) for dy, v in enumerate(row) if v},
    )


@dataclass(frozen=True)
class ProductForm:
    """numerator * prod 1/(1 - x^o y^e) over a multiset of (o, e) factors."""

    numerator: Polynomial
    factors: tuple[Exp, ...]

    def __post_init__(self):
        fs = tuple(sorted((int(o), int(e)) for o, e in self.factors))
        for o, e in fs:
            if o < 0 or e < 0:
                raise NegativeExponent(f"factor (1 - x^{o} y^{e}) has a negative exponent")
            if (o, e) == (0, 0):
                raise ValueError("factor (1 - 1) is not invertible")
        object.__setattr__(self, "factors", fs)

    @classmethod
    def univariate(cls, exponents: Iterable[int], numerator: Polynomial | None = None):
        return cls(numerator or Polynomial.one(), tuple((b, 0) for b in exponents))

    def is_univariate(self) -> bool:
        return self.numerator.is_univariate() and all(e == 0 for _, e in self.factors)

    def factor_counts(self) -> Counter:
        return Counter(self.factors)

    def exponents(self) -> list[int]:
        """Univariate denominator exponents, sorted."""
        if any(e for _, e in self.factors):
            raise ValueError("product form is bivariate")
        return [o for o, _ in self.factors]

    def with_factors(self, extra: Iterable[Exp]) -> "ProductForm":
        return ProductForm(self.numerator, self.factors + tuple(extra))


def expand(f: ProductForm, N: int) -> TruncatedSeries:
    """Series of f up to total degree N."""
    if N < 0:
        raise ValueError("truncation bound must be nonnegative")
    c = _dense(N)
    for (dx, dy), coeff in f.numerator.terms.items():
        if dx + dy <= N:
            c[dx][dy] += coeff
    for (o, e), mult in sorted(f.factor_counts().items()):
        if o + e <= N:
            _divide_in_place(c, o, e, mult)
    return _from_dense(c)


def series_product(s: TruncatedSeries, t: TruncatedSeries) -> TruncatedSeries:
    bound = min(s.bound, t.bound)
    acc: dict[Exp, int] = {}
    for (a, b), c in s.coefficients.items():
        if a + b > bound:
            continue
        for (u, v), d in t.coefficients.items():
            if a + b + u + v <= bound:
                acc[(a + u, b + v)] = acc.get((a + u, b + v), 0) + c * d
    return TruncatedSeries(bound, acc)


def _transform(o: int, e: int, M: Sequence[Sequence[int]]) -> Exp:
    # x -> x^M[0][0] y^M[1][0],  y -> x^M[0][1] y^M[1][1]
    return (M[0][0] * o + M[0][1] * e, M[1][0] * o + M[1][1] * e)


def substitute_monomial(
    f: ProductForm, M: Sequence[Sequence[int]], div_x_allowed: bool = False
) -> ProductForm:
    """Substitute x -> x^m11 y^m21, y -> x^m12 y^m22 into f.

    An exponent pair (o, e) goes to (m11 o + m12 e, m21 o + m22 e).  With
    ``div_x_allowed`` false any negative entry in M is rejected up front; with
    it true only the transformed exponents of this particular f must stay
    nonnegative (needed for x -> x^a y, y -> x^(1-b) with b > 1).
    """
    if not div_x_allowed and any(v < 0 for row in M for v in row):
        raise NegativeExponent(f"substitution matrix {M} has a negative entry")
    factors = []
    for o, e in f.factors:
        no, ne = _transform(o, e, M)
        if no < 0 or ne < 0 or (no, ne) == (0, 0):
            raise NegativeExponent(
                f"factor (1 - x^{o} y^{e}) maps to exponent ({no}, {ne})"
            )
        factors.append((no, ne))
    terms = {}
    for (dx, dy), c in f.numerator.terms.items():
        nx, ny = _transform(dx, dy, M)
        if nx < 0 or ny < 0:
            raise NegativeExponent(f"numerator term x^{dx} y^{dy} maps to ({nx}, {ny})")
        terms[(nx, ny)] = terms.get((nx, ny), 0) + c
    return ProductForm(Polynomial(terms), tuple(factors))


def specialize_diagonal(f: ProductForm) -> ProductForm:
    """Set y := x."""
    return substitute_monomial(f, ((1, 1), (0, 0)))


def _power_of_one_minus(c: list[int], m: int, exponent: int) -> None:
    """Multiply c in place by (1 - q^m)^exponent, exponent of either sign.

    Uses the binomial series, so the cost does not grow with |exponent|.
    """
    if exponent == 0:
        return
    terms = (len(c) - 1) // m
    # coefficient of q^(m j) in (1 - q^m)^exponent is (-1)^j C(exponent, j)
    coeffs = [1]
    for j in range(1, terms + 1):
        coeffs.append(-coeffs[-1] * (exponent - j + 1) // j)
    for n in range(len(c) - 1, -1, -1):
        c[n] = sum(coeffs[j] * c[n - m * j] for j in range(n // m + 1))


def _udivide(c: list[int], m: int, times: int) -> None:
    _power_of_one_minus(c, m, -times)


def _umultiply(c: list[int], m: int, times: int) -> None:
    _power_of_one_minus(c, m, times)


def infer_product_form(s: TruncatedSeries, N: int | None = None) -> dict[int, int]:
    """Inverse Euler transform: c_m with s = prod (1 - q^m)^(-c_m) up to degree N.

    Greedy by degree; the result is unique.  Multiplicities can be negative.
    """
    if not s.is_univariate():
        raise ValueError("inverse Euler transform needs a univariate series")
    if N is None:
        N = s.bound
    if N > s.bound:
        raise ValueError(f"series only known to degree {s.bound}")
    if s[0] != 1:
        raise ValueError("series must have constant term 1")
    c = [s[n] for n in range(N + 1)]
    result = {}
    for m in range(1, N + 1):
        cm = c[m]
        if cm > 0:
            _umultiply(c, m, cm)
        elif cm < 0:
            _udivide(c, m, -cm)
        if cm:
            result[m] = cm
    return result


def product_from_multiplicities(mults: Mapping[int, int], N: int) -> TruncatedSeries:
    """Series of prod (1 - q^m)^(-c_m) up to degree N."""
    c = [1] + [0] * N
    for m, cm in sorted(mults.items()):
        if m > N:
            continue
        if cm > 0:
            _udivide(c, m, cm)
        elif cm < 0:
            _umultiply(c, m, -cm)
    return TruncatedSeries.from_list(c)


def _monomial_text(dx: int, dy: int, univariate: bool) -> str:
    if univariate:
        return f"q^{dx}"
    parts = []
    if dx:
        parts.append(f"x^{dx}")
    if dy:
        parts.append(f"y^{dy}")
    return "*".join(parts)


def render_polynomial(p: Polynomial, univariate: bool | None = None) -> str:
    if univariate is None:
        univariate = p.is_univariate()
    if not p:
        return "0"
    out = []
    for (dx, dy), c in p.items():
        mono = "" if dx == dy == 0 else _monomial_text(dx, dy, univariate)
        mag = abs(c)
        if not mono:
            body = str(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{mag}*{mono}"
        if not out:
            out.append(body if c > 0 else f"-{body}")
        else:
            out.append(f" + {body}" if c > 0 else f" - {body}")
    return "".join(out)


def render(f: ProductForm) -> str:
    """Text form ``(numerator) / [(1-q^b1)(1-q^b2)...]``."""
    uni = f.is_univariate()
    num = render_polynomial(f.numerator, uni)
    if not f.factors:
        return f"({num})"
    ordered = sorted(f.factors, key=lambda p: (p[0] + p[1], p[1]))
    den = "".join(f"(1-{_monomial_text(o, e, uni)})" for o, e in ordered)
    return f"({num}) / [{den}]"
