from math import comb

import pytest
from hypothesis import given, strategies as st

from detlinks.partitions import (
    IntPolynomial,
    as_partition,
    box_complement,
    conjugate,
    gaussian_binomial,
    partitions_in_box,
    weight,
)

from conftest import partition_tuples


def test_as_partition_strips_zeros():
    assert as_partition([3, 1, 0]) == (3, 1)
    assert as_partition([]) == ()


@pytest.mark.parametrize("bad", [[1, 2], [2, -1], [0, 3]])
def test_as_partition_rejects(bad):
    with pytest.raises(ValueError):
        as_partition(bad)


def test_partitions_in_single_row_box():
    assert partitions_in_box(1, 2) == [(), (1,), (2,)]


def test_partitions_weight_filter():
    assert partitions_in_box(2, 2, 2) == [(2,), (1, 1)]


def test_partitions_box_count():
    assert len(partitions_in_box(2, 3)) == comb(5, 2)


def test_order_is_graded_then_lex_descending():
    got = partitions_in_box(2, 2)
    assert got == [(), (1,), (2,), (1, 1), (2, 1), (2, 2)]


def test_conjugate_examples():
    assert conjugate(()) == ()
    assert conjugate((2, 1)) == (2, 1)
    assert conjugate((3, 1)) == (2, 1, 1)


@given(partition_tuples())
def test_conjugate_is_involutive(p):
    assert conjugate(conjugate(p)) == p


@given(partition_tuples())
def test_conjugate_preserves_weight(p):
    assert weight(conjugate(p)) == weight(p)


@given(st.integers(0, 8), st.integers(0, 8))
def test_box_count_is_binomial(m, r):
    if r > m:
        r = m
    assert len(partitions_in_box(r, m - r)) == comb(m, r)


def test_box_complement():
    assert box_complement((2, 1), 2, 3) == (2, 1)
    assert box_complement((), 2, 2) == (2, 2)
    with pytest.raises(ValueError):
        box_complement((4,), 1, 3)


def test_gaussian_examples():
    assert gaussian_binomial(3, 1).coefficients_list() == [1, 1, 1]
    assert gaussian_binomial(4, 2).coefficients_list() == [1, 1, 2, 1, 1]
    assert gaussian_binomial(5, 0).coefficients_list() == [1]


def test_gaussian_rejects_bad_args():
    with pytest.raises(ValueError):
        gaussian_binomial(2, 3)


@given(st.integers(0, 8), st.integers(0, 8))
def test_gaussian_palindromic_and_counts(m, r):
    if r > m:
        r = m
    g = gaussian_binomial(m, r)
    assert g.is_palindromic()
    assert g(1) == comb(m, r)


def test_intpolynomial_arithmetic():
    p = IntPolynomial({0: 1, 2: 3})
    q = IntPolynomial({1: -1})
    assert (p + q).coefficients_list() == [1, -1, 3]
    assert (p * q).coefficients_list() == [0, -1, 0, -3]
    assert (p - p) == 0
    assert p(2) == 1 + 3 * 4
    assert p.stretched(2).coefficients_list() == [1, 0, 0, 0, 3]
    assert str(IntPolynomial({0: 1, 1: -1, 3: 2})) == "1 - t + 2*t^3"


def test_intpolynomial_drops_zero_coefficients():
    p = IntPolynomial({5: 0, 1: 2})
    assert p.coeffs == {1: 2}
