import pytest
from hypothesis import given
from hypothesis import strategies as st

from gfkit.construct import (
    count_matrices_enumerative,
    count_matrices_formula,
    enumerate_matrices,
    matrix_from_sequence,
    weak_compositions,
)
from gfkit.errors import InfeasibleSequence, PreconditionViolated, TooMany
from gfkit.exactmat import constraint_from_unit, is_nonnegative, nilpotent_inverse, unit_inverse
from gfkit.gfengine import b_sequence, gf_integer
from gfkit.oracle import verify
from gfkit.series import ProductForm
from gfkit.systems import ConstraintSystem, EqualitySpec


def family_of(con):
    spec = EqualitySpec(frozenset({1})) if con.equality_first else EqualitySpec()
    return ConstraintSystem.integer_matrix(con.A, spec), spec


def test_odd_sequence():
    con = matrix_from_sequence((1, 3, 5, 7))
    assert not con.equality_first
    assert con.A.row(1) == (0, 2, 1, 1)
    assert gf_integer(con.A).exponents() == [1, 3, 5, 7]


def test_consecutive_sequence_is_ordinary_partitions():
    con = matrix_from_sequence((1, 2, 3, 4, 5))
    assert con.A.entries == tuple(
        tuple(1 if j == i + 1 else 0 for j in range(5)) for i in range(5)
    )


def test_doubled_even_sequence_uses_equality():
    con = matrix_from_sequence((2, 2, 4, 4))
    assert con.equality_first and con.k == 5
    assert con.A.row(1) == (0, 1, -1, 1, -1)
    sys, spec = family_of(con)
    f = gf_integer(con.A, spec)
    assert sorted(f.exponents()) == [2, 2, 4, 4]
    assert verify(f, sys, 25)


def test_infeasible_sequence():
    with pytest.raises(InfeasibleSequence):
        matrix_from_sequence((1, 1, 1))
    with pytest.raises(InfeasibleSequence):
        matrix_from_sequence(())
    # c_i >= i - 1 holds, but (1, 2, 1) fails it once 1 is prepended
    with pytest.raises(InfeasibleSequence):
        matrix_from_sequence((2, 1))


def test_formula_examples():
    assert count_matrices_formula((1, 2)) == 1
    assert count_matrices_formula((1, 3, 6)) == 5
    assert count_matrices_formula((1, 1, 1)) == 0
    with pytest.raises(PreconditionViolated):
        count_matrices_formula((2, 3))


def test_enumeration_examples():
    assert [B.entries for B in enumerate_matrices((1, 2))] == [((1, 1), (0, 1))]
    three = enumerate_matrices((1, 2, 3))
    assert len(three) == 3
    assert [B.column(3)[:2] for B in three] == [(0, 2), (1, 1), (2, 0)]
    assert len(enumerate_matrices((1, 3, 6))) == count_matrices_enumerative((1, 3, 6)) == 6
    assert len(enumerate_matrices((1, 1, 1))) == 1


def test_enumeration_guard():
    with pytest.raises(TooMany):
        enumerate_matrices((1, 20, 40, 60), limit=1000)


def test_weak_compositions_order():
    assert list(weak_compositions(2, 2)) == [(0, 2), (1, 1), (2, 0)]
    assert list(weak_compositions(0, 0)) == [()]
    assert list(weak_compositions(1, 0)) == []


def test_enumerated_matrices_have_integer_inverse():
    for B in enumerate_matrices((1, 2, 4, 5)):
        inv = unit_inverse(B)
        assert all(inv[i][i] == 1 for i in range(B.k))
        assert B.column_sums == (1, 2, 4, 5)


@st.composite
def feasible(draw):
    # c_1 = 1 needs c_i >= i - 1; c_1 > 1 needs c_i >= i after prepending 1
    ex = draw(st.lists(st.integers(0, 5), min_size=1, max_size=5))
    if draw(st.booleans()):
        return (1,) + tuple(i + e for i, e in enumerate(ex[1:], start=1))
    return tuple(i + e + (1 if i == 1 else 0) for i, e in enumerate(ex, start=1))


@given(feasible())
def test_construction_is_nonnegative_and_exact(c):
    con = matrix_from_sequence(c)
    assert is_nonnegative(nilpotent_inverse(con.A))
    sys, spec = family_of(con)
    f = gf_integer(con.A, spec)
    assert sorted(f.exponents()) == sorted(c)
    assert verify(ProductForm.univariate(c), sys, 20)


@given(st.lists(st.integers(1, 4), min_size=0, max_size=3).map(lambda t: (1,) + tuple(t)))
def test_enumerated_families_reproduce_product(c):
    for B in enumerate_matrices(c):
        A = constraint_from_unit(B)
        assert b_sequence(A) == c
        assert nilpotent_inverse(A) == B
