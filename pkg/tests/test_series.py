import pytest
from hypothesis import given
from hypothesis import strategies as st

from gfkit.errors import NegativeExponent
from gfkit.series import (
    Polynomial,
    ProductForm,
    TruncatedSeries,
    expand,
    infer_product_form,
    product_from_multiplicities,
    render,
    series_product,
    specialize_diagonal,
    substitute_monomial,
)


def count_partitions(n, parts):
    """Partitions of n with parts drawn from ``parts``, by recursion."""
    parts = sorted(set(parts), reverse=True)

    def go(n, i):
        if n == 0:
            return 1
        if i == len(parts):
            return 0
        return sum(go(n - m * parts[i], i + 1) for m in range(n // parts[i] + 1))

    return go(n, 0)


def test_expand_example0():
    f = ProductForm.univariate([1, 3, 6, 10])
    assert expand(f, 6).as_list() == [1, 1, 1, 2, 2, 2, 4]
    assert expand(f, 30).as_list() == [count_partitions(n, [1, 3, 6, 10]) for n in range(31)]


def test_expand_constant():
    assert expand(ProductForm(Polynomial.one(), ()), 7).as_list() == [1] + [0] * 7


def test_expand_odd_parts():
    assert expand(ProductForm.univariate([1, 3, 5]), 5).as_list() == [1, 1, 1, 2, 2, 3]


def test_expand_bivariate_by_total_degree():
    s = expand(ProductForm(Polynomial.one(), ((1, 0), (1, 1))), 4)
    # x^a (xy)^b with a + 2b <= 4
    assert s.coefficients == {(a + b, b): 1 for a in range(5) for b in range(3) if a + 2 * b <= 4}


def test_polynomial_drops_zero_terms():
    p = Polynomial({(1, 0): 2}) + Polynomial({(1, 0): -2})
    assert p.terms == {}
    assert not p


def test_polynomial_rejects_negative_exponent():
    with pytest.raises(NegativeExponent):
        Polynomial({(-1, 0): 1})


def test_product_form_rejects_zero_factor():
    with pytest.raises(ValueError):
        ProductForm(Polynomial.one(), ((0, 0),))


def test_substitute_alpha_beta_example():
    f = ProductForm(Polynomial.one(), ((1, 0), (1, 1)))
    g = substitute_monomial(f, ((1, 2), (1, 0)))
    assert sorted(g.factors) == [(1, 1), (3, 1)]


def test_substitute_identity():
    f = ProductForm(Polynomial({(0, 0): 1, (2, 1): 3}), ((1, 0), (2, 1), (3, 2)))
    assert substitute_monomial(f, ((1, 0), (0, 1))) == f


def test_substitute_refuses_negative():
    f = ProductForm(Polynomial.one(), ((1, 1),))
    with pytest.raises(NegativeExponent):
        substitute_monomial(f, ((1, -2), (0, 1)))


def test_substitute_negative_entry_allowed_when_results_nonnegative():
    f = ProductForm(Polynomial.one(), ((2, 1),))
    g = substitute_monomial(f, ((1, -1), (0, 1)), div_x_allowed=True)
    assert g.factors == ((1, 1),)
    with pytest.raises(NegativeExponent):
        substitute_monomial(f, ((1, -3), (0, 1)), div_x_allowed=True)


def test_specialize_diagonal_examples():
    f = ProductForm(Polynomial.one(), ((1, 0), (1, 1), (3, 1)))
    assert specialize_diagonal(f).exponents() == [1, 2, 4]
    c = ProductForm(Polynomial.monomial(2, 3), ())
    assert specialize_diagonal(c) == ProductForm(Polynomial.monomial(5, 0), ())


def test_infer_examples():
    num = Polynomial.from_exponents([0, 3, 5, 6, 8, 11])
    f = ProductForm.univariate([1, 7, 9, 10], num)
    assert infer_product_form(expand(f, 15), 15) == {1: 1, 3: 1, 5: 1, 7: 1}
    assert infer_product_form(TruncatedSeries.from_list([1, 0, 0]), 2) == {}
    assert infer_product_form(expand(ProductForm.univariate([2, 3]), 10), 10) == {2: 1, 3: 1}


def test_infer_negative_multiplicity():
    # 1 + q = (1 - q^2)/(1 - q)
    s = TruncatedSeries.from_list([1, 1] + [0] * 8)
    assert infer_product_form(s) == {1: 1, 2: -1}


def test_infer_requires_unit():
    with pytest.raises(ValueError):
        infer_product_form(TruncatedSeries.from_list([2, 1]))


def test_render():
    f = ProductForm.univariate([1, 3], Polynomial.from_exponents([0, 2]))
    assert render(f) == "(1 + q^2) / [(1-q^1)(1-q^3)]"
    g = ProductForm(Polynomial({(0, 0): 1, (1, 2): 2}), ((1, 0), (0, 1), (2, 1)))
    assert render(g) == "(1 + 2*x^1*y^2) / [(1-x^1)(1-y^1)(1-x^2*y^1)]"


polys = st.dictionaries(
    st.tuples(st.integers(0, 4), st.integers(0, 4)), st.integers(-5, 5), max_size=5
).map(Polynomial)


@given(polys, polys, polys)
def test_polynomial_ring_laws(p, q, r):
    assert p * q == q * p
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r
    assert all(c != 0 for c in (p * q).terms.values())


unit_series = st.lists(st.integers(-4, 6), min_size=0, max_size=14).map(
    lambda t: TruncatedSeries.from_list([1] + t)
)


@given(unit_series)
def test_infer_then_expand_is_identity(s):
    mults = infer_product_form(s)
    assert product_from_multiplicities(mults, s.bound) == s


small_forms = st.builds(
    ProductForm,
    st.dictionaries(
        st.tuples(st.integers(0, 3), st.integers(0, 3)), st.integers(1, 3), min_size=1, max_size=3
    ).map(Polynomial),
    st.lists(
        st.tuples(st.integers(0, 3), st.integers(0, 3)).filter(lambda p: p != (0, 0)),
        max_size=4,
    ).map(tuple),
)
substitutions = st.tuples(
    st.tuples(st.integers(0, 2), st.integers(0, 2)), st.tuples(st.integers(0, 2), st.integers(0, 2))
).filter(lambda M: (M[0][0] or M[1][0]) and (M[0][1] or M[1][1]))


@given(small_forms, substitutions)
def test_substitution_commutes_with_expansion(f, M):
    N = 8
    direct = expand(substitute_monomial(f, M), N)
    big = N * max(max(row) for row in M) + N
    acc = {}
    for (dx, dy), c in expand(f, big).coefficients.items():
        key = (M[0][0] * dx + M[0][1] * dy, M[1][0] * dx + M[1][1] * dy)
        if sum(key) <= N:
            acc[key] = acc.get(key, 0) + c
    assert direct == TruncatedSeries(N, acc)


@given(small_forms, st.integers(0, 10))
def test_diagonal_commutes_with_expansion(f, N):
    assert expand(specialize_diagonal(f), N) == expand(f, N).diagonal()


@given(small_forms, small_forms)
def test_series_product_matches_form_product(f, g):
    N = 9
    fg = ProductForm(f.numerator * g.numerator, f.factors + g.factors)
    assert series_product(expand(f, N), expand(g, N)) == expand(fg, N)
