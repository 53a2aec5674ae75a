"""Closed-form product generating functions for linear constraint systems.

Integer systems go through B = (I - A)^-1: the weight of lambda = B s is
b . s with b the column sums of B, so each slack s_i contributes a factor
1/(1 - q^b_i).  Rational ratio chains are reduced to integer systems by
writing lambda_i = a_i x_i + z_i with 0 <= z_i < a_i and summing over the
residues z, which is where the numerator comes from.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Sequence

from .errors import (
    CompositionConditionViolated,
    DegenerateFactor,
    FirstPartNotGuaranteed,
    NonPositiveRatio,
    NotInFamily,
    ParameterViolation,
    PreconditionViolated,
)
from .exactmat import (
    ConstraintMatrix,
    UnitMatrix,
    apply,
    is_nonnegative,
    nilpotent_inverse,
    slacks,
)
from .series import Polynomial, ProductForm, substitute_monomial, specialize_diagonal
from .systems import (
    EqualitySpec,
    RationalSystem,
    check_alpha_beta_params,
    check_lecture_hall_params,
)


def ceil_div(p: int, q: int) -> int:
    """Exact ceiling of p/q for q > 0."""
    return -(-p // q)


def _nonnegative_inverse(A: ConstraintMatrix) -> UnitMatrix:
    B = nilpotent_inverse(A)
    if not is_nonnegative(B):
        i, j = next(
            (i + 1, j + 1)
            for i, row in enumerate(B.entries)
            for j, v in enumerate(row)
            if v < 0
        )
        raise CompositionConditionViolated(
            f"(I-A)^-1 has entry ({i},{j}) = {B.entries[i - 1][j - 1]} < 0; "
            "the family contains sequences with negative parts"
        )
    return B


# -- integer coefficients ---------------------------------------------------


def b_sequence(A: ConstraintMatrix) -> tuple[int, ...]:
    return _nonnegative_inverse(A).column_sums


def gf_integer(A: ConstraintMatrix, spec: EqualitySpec | None = None) -> ProductForm:
    """prod_{i not in S} 1/(1 - q^b_i), times q^(sum d_i b_i)."""
    spec = spec or EqualitySpec()
    spec.check(A.k)
    b = _nonnegative_inverse(A).column_sums
    d = spec.offsets(A.k)
    factors = []
    for i, bi in enumerate(b, start=1):
        if i in spec.S:
            continue
        if bi < 1:
            raise DegenerateFactor(f"b_{i} = {bi} is not positive")
        factors.append((bi, 0))
    shift = sum(di * bi for di, bi in zip(d, b))
    return ProductForm(Polynomial.monomial(shift), tuple(factors))


def theta_map(A: ConstraintMatrix, lam: Sequence[int]) -> tuple[int, ...]:
    """lambda -> (b_1 s_1, ..., b_k s_k); weight preserving."""
    s = slacks(A, lam)
    bad = [i + 1 for i, v in enumerate(s) if v < 0]
    if bad:
        raise NotInFamily(f"{tuple(lam)} violates constraint(s) {bad}")
    b = b_sequence(A)
    return tuple(bi * si for bi, si in zip(b, s))


def theta_inverse(A: ConstraintMatrix, parts: Sequence[int]) -> tuple[int, ...]:
    B = _nonnegative_inverse(A)
    if len(parts) != A.k:
        raise ValueError(f"expected {A.k} parts, got {len(parts)}")
    s = []
    for i, (r, bi) in enumerate(zip(parts, B.column_sums), start=1):
        if r < 0 or r % bi:
            raise NotInFamily(f"part {i} = {r} is not a nonnegative multiple of b_{i} = {bi}")
        s.append(r // bi)
    return apply(B, s)


def first_row_matrix(a: Sequence[int]) -> ConstraintMatrix:
    """lambda_1 >= sum_i a_i lambda_{i+1}, lambda_i >= lambda_{i+1} for i >= 2."""
    k = len(a) + 1
    entries = {(1, j + 2): v for j, v in enumerate(a)}
    entries.update({(i, i + 1): 1 for i in range(2, k)})
    return ConstraintMatrix.from_entries(k, entries)


def gf_first_row(a: Sequence[int]) -> ProductForm:
    """1/(1-q) prod_i 1/(1 - q^(i + a_1 + ... + a_i))."""
    exps = [1]
    partial = 0
    for i, ai in enumerate(a, start=1):
        partial += ai
        if partial < 0:
            raise CompositionConditionViolated(
                f"a_1 + ... + a_{i} = {partial} < 0, so (I-A)^-1 has a negative entry"
            )
        exps.append(i + partial)
    return ProductForm.univariate(exps)


# -- rational coefficients --------------------------------------------------


def rational_b_sequence(sys: RationalSystem) -> tuple[int, ...]:
    """b_1 = 1, b_i = c_1 a_1 + sum_{t=2..i} (c_t + 1) a_t."""
    a, c = sys.a, sys.c
    b = [1]
    acc = c[0] * a[0]
    for t in range(1, sys.k):
        acc += (c[t] + 1) * a[t]
        b.append(acc)
    return tuple(b)


def _ratio_tails(a: Sequence[int], W: int):
    """(lambda_2, ..., lambda_k) with lambda_i/a_i >= lambda_{i+1}/a_{i+1}, weight <= W."""
    k = len(a)
    tail = [0] * k

    def rec(i, budget):
        if i == 0:
            yield tail
            return
        lo = 0 if i == k - 1 else ceil_div(tail[i + 1] * a[i], a[i + 1])
        for v in range(lo, budget + 1):
            tail[i] = v
            yield from rec(i - 1, budget - v)
        tail[i] = 0

    yield from rec(k - 1, W)


def first_constraint_rhs(sys: RationalSystem, lam: Sequence[int]) -> int:
    a, c = sys.a, sys.c
    if sys.k == 1:
        return 0
    return c[0] * ceil_div(a[0] * lam[1], a[1]) + sum(
        c[t] * lam[t] for t in range(1, sys.k)
    )


def check_first_part_guarantee(sys: RationalSystem, weight: int | None = None) -> None:
    """Empirically confirm the first constraint never lets lambda_1 go negative."""
    if weight is None:
        weight = 2 * max(sys.a) * sys.k
    for tail in _ratio_tails(sys.a, weight):
        rhs = first_constraint_rhs(sys, tail)
        if rhs < 0:
            raise FirstPartNotGuaranteed(
                f"tail {tuple(tail[1:])} gives first-part bound {rhs} < 0"
            )


def _residues(a: Sequence[int]):
    """All (z_1, ..., z_k) with z_1 = 0 and 0 <= z_i < a_i for i >= 2."""
    return itertools.product((0,), *(range(ai) for ai in a[1:]))


def _step(z: Sequence[int], a: Sequence[int], i: int) -> int:
    """ceil(z_{i+1}/a_{i+1} - z_i/a_i) for 0-based i; always 0 or 1."""
    v = ceil_div(z[i + 1] * a[i] - z[i] * a[i + 1], a[i] * a[i + 1])
    assert v in (0, 1), (z, a, i, v)
    return v


def rational_numerator(sys: RationalSystem, b: Sequence[int]) -> Polynomial:
    a, c, k = sys.a, sys.c, sys.k
    if k == 1:
        return Polynomial.one()
    terms: dict[tuple[int, int], int] = {}
    for z in _residues(a):
        e = c[0] * ceil_div(a[0] * z[1], a[1])
        e += sum((c[i] + 1) * z[i] for i in range(1, k))
        e += sum(b[i] * _step(z, a, i) for i in range(1, k - 1))
        terms[(e, 0)] = terms.get((e, 0), 0) + 1
    return Polynomial(terms)


def gf_rational(
    sys: RationalSystem, guard: bool = True, guard_weight: int | None = None
) -> ProductForm:
    """Numerator summed over residues z, denominator prod 1/(1 - q^b_i).

    With ``sys.first_equality`` the first constraint is an equation and the
    1/(1-q) factor carried by lambda_1's free slack disappears.
    """
    if any(v < 1 for v in sys.a):
        raise NonPositiveRatio(f"all a_i must be >= 1, got {sys.a}")
    b = rational_b_sequence(sys)
    bad = [(i, bi) for i, bi in enumerate(b, start=1) if bi < 1]
    if bad:
        raise DegenerateFactor(f"nonpositive denominator exponents b_i: {bad}")
    if guard:
        check_first_part_guarantee(sys, guard_weight)
    factors = [(bi, 0) for bi in b]
    if sys.first_equality:
        factors = factors[1:]
    return ProductForm(rational_numerator(sys, b), tuple(factors))


@dataclass(frozen=True)
class AlternatingDescription:
    """Partitions into parts b_1..b_k (any multiplicity) plus at most one part
    from each run."""

    b: tuple[int, ...]
    runs: tuple[tuple[int, ...], ...]
    form: ProductForm

    @property
    def parts(self) -> tuple[int, ...]:
        return tuple(sorted(set(self.b).union(*self.runs)))

    def allows(self, partition: Sequence[int]) -> bool:
        allowed = set(self.b)
        for run in self.runs:
            hits = [p for p in partition if p in run]
            if len(hits) > 1:
                return False
            allowed.update(hits)
        return all(p in allowed for p in partition)


def gf_special_alternating(a: Sequence[int]) -> AlternatingDescription:
    """Ratio chains in which no two consecutive a_i exceed 1.

    Each residue z_{i+1} then contributes independently, so the numerator
    splits into (1 + q^(b_i+1) + ... + q^(b_i + a_{i+1} - 1)) per a_{i+1} > 1.
    """
    a = tuple(a)
    if any(v < 1 for v in a):
        raise NonPositiveRatio(f"all a_i must be >= 1, got {a}")
    for i in range(len(a) - 1):
        if a[i] > 1 and a[i + 1] > 1:
            raise PreconditionViolated(
                f"a_{i + 1} = {a[i]} and a_{i + 2} = {a[i + 1]} both exceed 1"
            )
    b = rational_b_sequence(RationalSystem(a))
    runs = []
    numerator = Polynomial.one()
    for i in range(len(a) - 1):
        if a[i + 1] > 1:
            run = tuple(range(b[i] + 1, b[i] + a[i + 1]))
            runs.append(run)
            numerator = numerator * Polynomial.from_exponents((0,) + run)
    return AlternatingDescription(
        b, tuple(runs), ProductForm.univariate(b, numerator)
    )


# -- two variables -----------------------------------------------------------


def gf_two_variable(
    A: ConstraintMatrix,
    spec: EqualitySpec | None = None,
    row_variables: Sequence[int] | None = None,
) -> ProductForm:
    """Odd/even weighted form: factor (o_i, e_i) per column of B.

    ``row_variables`` generalises the parity split: entry r is 0 if part r+1 is
    counted by x and 1 if by y.  The default is x for odd positions.
    """
    spec = spec or EqualitySpec()
    spec.check(A.k)
    B = _nonnegative_inverse(A)
    if row_variables is None:
        o, e = B.odd_sums, B.even_sums
    else:
        if len(row_variables) != A.k:
            raise ValueError("row_variables must have one entry per part")
        o = tuple(
            sum(B.entries[r][col] for r in range(A.k) if row_variables[r] == 0)
            for col in range(A.k)
        )
        e = tuple(
            sum(B.entries[r][col] for r in range(A.k) if row_variables[r] == 1)
            for col in range(A.k)
        )
    d = spec.offsets(A.k)
    factors = [(o[i], e[i]) for i in range(A.k) if i + 1 not in spec.S]
    shift = (sum(di * oi for di, oi in zip(d, o)), sum(di * ei for di, ei in zip(d, e)))
    return ProductForm(Polynomial.monomial(*shift), tuple(factors))


def alpha_beta_exponents(alpha: int, beta: int, k: int) -> list[tuple[int, int]]:
    o = [1, alpha][:k]
    while len(o) < k:
        o.append(alpha * o[-1] + (1 - beta) * o[-2])
    e = [0, 1][:k] + o[1 : k - 1]
    return list(zip(o, e))


def gf_alpha_beta(alpha: int, beta: int, k: int) -> ProductForm:
    """lambda_i >= alpha(lambda_{i+1} + lambda_{i+3} + ...) - beta(lambda_{i+2} + ...)."""
    check_alpha_beta_params(alpha, beta, k)
    return ProductForm(Polynomial.one(), tuple(alpha_beta_exponents(alpha, beta, k)))


def alpha_beta_matrix(alpha: int, beta: int, k: int) -> ConstraintMatrix:
    check_alpha_beta_params(alpha, beta, k)
    return ConstraintMatrix.from_entries(
        k,
        {
            (i, j): alpha if (j - i) % 2 else -beta
            for i in range(1, k + 1)
            for j in range(i + 1, k + 1)
        },
    )


def gf_prepend_constraint(G: ProductForm, alpha: int, beta: int) -> ProductForm:
    """G(x^alpha y, x^(1-beta)): prepend lambda_0 = alpha|lambda_o| - beta|lambda_e|."""
    if alpha < 1 or beta > alpha:
        raise ParameterViolation(f"need alpha >= 1 and beta <= alpha, got {alpha}, {beta}")
    return substitute_monomial(G, ((alpha, 1 - beta), (1, 0)), div_x_allowed=True)


def two_variable_rational_exponents(a: Sequence[int]) -> list[tuple[int, int]]:
    """(o_i, e_i): o_i = a_1 + a_3 + ... over odd t <= i, e_i = a_2 + a_4 + ... over even t <= i."""
    out = [(1, 0)]
    for i in range(2, len(a) + 1):
        o = sum(a[t - 1] for t in range(1, i + 1, 2))
        e = sum(a[t - 1] for t in range(2, i + 1, 2))
        out.append((o, e))
    return out


def gf_two_variable_rational(a: Sequence[int], first_equality: bool = False) -> ProductForm:
    """Odd/even weighted form of lambda_1/a_1 >= ... >= lambda_k/a_k >= 0."""
    a = tuple(a)
    if not a or any(v < 1 for v in a):
        raise NonPositiveRatio(f"all a_i must be >= 1, got {a}")
    k = len(a)
    oe = two_variable_rational_exponents(a)
    terms: dict[tuple[int, int], int] = {}
    if k == 1:
        terms[(0, 0)] = 1
    for z in _residues(a) if k > 1 else ():
        x = ceil_div(a[0] * z[1], a[1]) + sum(z[2::2])
        y = sum(z[1::2])
        for i in range(1, k - 1):
            if _step(z, a, i):
                x += oe[i][0]
                y += oe[i][1]
        terms[(x, y)] = terms.get((x, y), 0) + 1
    factors = oe[1:] if first_equality else oe
    return ProductForm(Polynomial(terms), tuple(factors))


def gf_lecture_hall_generalized(a: Sequence[int], l: int, j: int) -> ProductForm:
    """H(x^l, x^(j-1) y) with H = G (1 - x), G the two-variable ratio-chain form.

    Counts lambda_1 = l ceil(a_1 lambda_2/a_2) + sum((j-1) lambda_2i + (l-1) lambda_2i+1)
    with the ratio chain on lambda_2..lambda_k.  Needs a non-increasing, or
    l and j both positive.
    """
    a = tuple(a)
    if l <= 0 or j < 2 - l:
        raise ParameterViolation(f"need l > 0 and j >= 2 - l, got l={l}, j={j}")
    monotone = all(x >= y for x, y in zip(a, a[1:]))
    if not monotone and j <= 0:
        raise PreconditionViolated(
            "a is not non-increasing, which requires both l and j positive"
        )
    H = gf_two_variable_rational(a, first_equality=True)
    return substitute_monomial(H, ((l, j - 1), (0, 1)), div_x_allowed=True)


def lecture_hall_exponents(k: int, l: int, j: int) -> list[int]:
    return [i * l + i * j + l for i in range(1, k)]


def gf_lecture_hall_variant_2var(
    k: int, l: int, j: int, first_equality: bool = False
) -> ProductForm:
    """Lecture hall factorisation prod_{i=0}^{k-1} 1/(1 - x^(i+1) y^i) pushed
    through x -> x^l, y -> x^(j-1) y."""
    check_lecture_hall_params(k, l, j)
    H = ProductForm(Polynomial.one(), tuple((i + 1, i) for i in range(1, k)))
    out = substitute_monomial(H, ((l, j - 1), (0, 1)), div_x_allowed=True)
    return out if first_equality else out.with_factors([(1, 0)])


def gf_lecture_hall_variant(k: int, l: int, j: int, first_equality: bool = False) -> ProductForm:
    """1/(1-q) prod_{i=1}^{k-1} 1/(1 - q^(il + ij + l)); no 1/(1-q) under equality."""
    check_lecture_hall_params(k, l, j)
    exps = lecture_hall_exponents(k, l, j)
    if not first_equality:
        exps = [1] + exps
    return ProductForm.univariate(exps)


def diagonal(f: ProductForm) -> ProductForm:
    return specialize_diagonal(f)
