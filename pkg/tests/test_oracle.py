from hypothesis import given
from hypothesis import strategies as st

from conftest import composition_matrices
from gfkit.exactmat import ConstraintMatrix
from gfkit.oracle import count_bivariate, count_by_weight, enumerate_family, verify
from gfkit.series import Polynomial, ProductForm, expand
from gfkit.systems import ConstraintSystem, RationalSystem

EX0 = ConstraintMatrix(((0, 2, -1, 0), (0, 0, 2, -1), (0, 0, 0, 2), (0, 0, 0, 0)))


def chain(k):
    return ConstraintMatrix.from_entries(k, {(i, i + 1): 1 for i in range(1, k)})


def test_example0_counts():
    assert count_by_weight(ConstraintSystem.integer_matrix(EX0), 6) == [1, 1, 1, 2, 2, 2, 4]


def test_lecture_hall_two_parts():
    # lambda_1 / 2 >= lambda_2, generating function 1/((1-q)(1-q^3))
    counts = count_by_weight(ConstraintSystem.lecture_hall_variant(2, 1, 1), 5)
    assert counts == [1, 1, 1, 2, 2, 2]
    assert counts == expand(ProductForm.univariate([1, 3]), 5).as_list()


def test_weight_zero():
    for sys in (
        ConstraintSystem.integer_matrix(EX0),
        ConstraintSystem.from_rational(RationalSystem((3, 2, 1))),
        ConstraintSystem.alpha_beta(2, 1, 3),
    ):
        assert count_by_weight(sys, 0) == [1]


def test_bivariate_small_partitions():
    counts = count_bivariate(ConstraintSystem.integer_matrix(chain(2)), 3)
    assert counts == {(0, 0): 1, (1, 0): 1, (2, 0): 1, (3, 0): 1, (1, 1): 1, (2, 1): 1}


def test_bivariate_single_part():
    counts = count_bivariate(ConstraintSystem.integer_matrix(ConstraintMatrix.zero(1)), 5)
    assert counts == {(n, 0): 1 for n in range(6)}


def test_bivariate_sum_to_tail():
    A = ConstraintMatrix.from_entries(3, {(1, 2): 1, (1, 3): 1, (2, 3): 1})
    f = ProductForm(Polynomial.one(), ((1, 0), (1, 1), (3, 1)))
    got = count_bivariate(ConstraintSystem.integer_matrix(A), 6)
    assert got == expand(f, 6).coefficients


def test_verify_pass_and_negative_control():
    sys = ConstraintSystem.integer_matrix(EX0)
    assert verify(ProductForm.univariate([1, 3, 6, 10]), sys, 25).passed
    trivial = ConstraintSystem.integer_matrix(ConstraintMatrix.zero(1))
    assert verify(ProductForm.univariate([1]), trivial, 10).passed
    bad = verify(ProductForm.univariate([2]), trivial, 3)
    assert not bad.passed
    assert bad.first_mismatch == ((1, 0), 1, 0)
    assert "q^1" in bad.describe()


def test_rational_cross_multiplication():
    # lambda_1/3 >= lambda_2/2: (3, 2) is allowed, (2, 2) is not
    fam = set(enumerate_family(ConstraintSystem.from_rational(RationalSystem((3, 2))), 5))
    assert (3, 2) in fam and (2, 2) not in fam


@given(composition_matrices(max_k=4), st.integers(0, 12))
def test_bivariate_marginal(A, N):
    sys = ConstraintSystem.integer_matrix(A)
    uni = count_by_weight(sys, N)
    biv = count_bivariate(sys, N)
    for n in range(N + 1):
        assert sum(v for (l, m), v in biv.items() if l + m == n) == uni[n]


@given(composition_matrices(max_k=4), st.integers(0, 10), st.integers(0, 6))
def test_truncation_is_monotone(A, N, extra):
    sys = ConstraintSystem.integer_matrix(A)
    assert count_by_weight(sys, N + extra)[: N + 1] == count_by_weight(sys, N)


@given(st.lists(st.integers(1, 5), min_size=1, max_size=4), st.integers(0, 12))
def test_rational_members_satisfy_chain(a, N):
    sys = ConstraintSystem.from_rational(RationalSystem(tuple(a)))
    for lam in enumerate_family(sys, N):
        assert all(lam[i] * a[i + 1] >= lam[i + 1] * a[i] for i in range(len(a) - 1))
        assert sum(lam) <= N
