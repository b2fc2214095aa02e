"""Arithmetic primitives: conventions, exactness, and algebraic laws."""

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from supercatalan.exactnum import (
    InexactDivisionError,
    Integer,
    Rational,
    binomial,
    binomial_cached,
    central_binomial,
    exact_div,
    factorial,
)

import _oracle


def test_factorial_small_values():
    assert [factorial(n) for n in range(8)] == [1, 1, 2, 6, 24, 120, 720, 5040]


def test_factorial_rejects_negative():
    with pytest.raises(ValueError):
        factorial(-1)


def test_binomial_known_values():
    assert binomial(0, 0) == 1
    assert binomial(6, 3) == 20
    assert binomial(8, 4) == 70
    assert binomial(60, 30) == 118264581564861424


def test_binomial_out_of_range_is_zero():
    assert binomial(5, -1) == 0
    assert binomial(5, 6) == 0
    assert binomial(0, 1) == 0


def test_binomial_rejects_negative_upper_index():
    with pytest.raises(ValueError):
        binomial(-2, 0)


def test_central_binomial_values():
    assert [central_binomial(n) for n in range(6)] == [1, 2, 6, 20, 70, 252]


def test_central_binomial_ratio_recurrence_exhaustive():
    # (l+1) cb(l+1) = 2 (2l+1) cb(l) across the whole working range
    for l in range(65):
        assert (l + 1) * central_binomial(l + 1) == 2 * (2 * l + 1) * central_binomial(l)


@given(st.integers(min_value=1, max_value=64), st.integers(min_value=-2, max_value=66))
def test_binomial_pascal_recurrence(n, k):
    assert binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k)


@given(st.integers(min_value=0, max_value=64), st.integers(min_value=0, max_value=64))
def test_binomial_symmetry(n, k):
    if k <= n:
        assert binomial(n, k) == binomial(n, n - k)


@given(st.integers(min_value=0, max_value=40),
       st.integers(min_value=0, max_value=40),
       st.integers(min_value=0, max_value=40))
def test_binomial_subcommittee_identity(n, k, j):
    if j <= k <= n:
        assert binomial(n, k) * binomial(k, j) == binomial(n, j) * binomial(n - j, k - j)


@given(st.integers(min_value=0, max_value=48))
def test_binomial_row_sum(n):
    assert sum(binomial(n, k) for k in range(n + 1)) == 2 ** n


def test_binomial_matches_pascal_oracle():
    for n in range(30):
        for k in range(n + 1):
            assert binomial(n, k) == _oracle.binom(n, k)


def test_binomial_cached_agrees():
    for n in range(20):
        for k in range(-1, n + 2):
            assert binomial_cached(n, k) == binomial(n, k)


def test_exact_div():
    assert exact_div(84, 6) == 14
    assert exact_div(-20, 2) == -10
    with pytest.raises(InexactDivisionError):
        exact_div(7, 2)


def test_integer_alias_is_arbitrary_precision():
    assert Integer is int
    assert factorial(60) == _oracle.fact(60)  # 82 digits, no overflow


def test_rational_alias_invariants():
    assert Rational is Fraction
    x = Rational(4, 2)
    assert x == 2 and x.denominator == 1
    y = Rational(3, -9)
    assert y.denominator > 0 and y == Rational(-1, 3)


@given(st.integers(-10**6, 10**6), st.integers(1, 10**4),
       st.integers(-10**6, 10**6), st.integers(1, 10**4))
def test_rational_round_trip(a, b, c, d):
    x, y = Rational(a, b), Rational(c, d)
    assert (x + y) - y == x
    assert x * y == y * x
