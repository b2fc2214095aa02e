"""Alternating convolution sums: frozen values, vanishing, cross-relations."""

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from supercatalan.sums import (
    p_sum,
    psi,
    psi_t,
    r_dprime_sum,
    r_prime_sum,
    r_sum,
    t_sum,
)
from supercatalan.supercat import super_catalan

import _oracle


def test_psi_frozen_values():
    assert psi(2, 1, 0) == 4          # 6 - 8 + 6
    assert psi(2, 3, 0) == -20        # 6 - 32 + 6
    assert psi(3, 2, 5) == 0
    assert psi(8, 1, 2) == 8624


def test_psi_t_frozen_values():
    assert psi_t(4, 1, 0) == -8
    assert psi_t(2, 1, 0) == -4
    assert psi_t(2, 0, 0) == 4


def test_p_sum_frozen_values():
    assert p_sum(2, 0, 0) == 4        # 12 - 8 + 0
    assert p_sum(4, 0, 0) == 72
    assert p_sum(2, 1, 0) == 0        # single term with zero weight


def test_r_sum_frozen_values():
    assert r_sum(2, 0, 0) == 4        # 6 - 4 + 2
    assert r_sum(1, 0, 0) == 1        # 2 - 1
    assert r_sum(0, 0, 0) == 1
    assert isinstance(r_sum(2, 0, 0), Fraction)


def test_r_prime_sum_frozen_values():
    assert r_prime_sum(2, 0, 0) == 2
    assert r_prime_sum(0, 0, 0) == 1
    # 3 - 8/3 + 3, and also r_sum(2,0,1)/(n+l+1) = 10/3
    assert r_prime_sum(2, 0, 1) == Fraction(10, 3)
    assert r_prime_sum(2, 0, 1) == r_sum(2, 0, 1) / 3


def test_r_dprime_sum_frozen_values():
    assert r_dprime_sum(2, 0, 0) == 2
    assert r_dprime_sum(0, 0, 0) == 0
    assert r_dprime_sum(4, 1, 0) == 2 * r_prime_sum(4, 1, 0)


def test_t_sum_frozen_values():
    assert t_sum(2, 0, 0) == 8        # 12 - 4 + 0
    assert t_sum(2, 1, 0) == 0


def test_matches_oracle_on_grid():
    for n in range(9):
        for l in range(4):
            for m in range(1, 4):
                assert psi(n, m, l) == _oracle.psi(n, m, l)
            for t in range(n // 2 + 1):
                assert psi_t(n, t, l) == _oracle.psi_t(n, t, l)
                assert p_sum(n, t, l) == _oracle.p_sum(n, t, l)
                assert r_sum(n, t, l) == _oracle.r_sum(n, t, l)
                assert r_prime_sum(n, t, l) == _oracle.r_prime_sum(n, t, l)
                assert r_dprime_sum(n, t, l) == _oracle.r_dprime_sum(n, t, l)
                assert t_sum(n, t, l) == _oracle.t_sum(n, t, l)


def test_odd_length_vanishing():
    for n in range(1, 16, 2):
        for l in range(4):
            for m in range(1, 5):
                assert psi(n, m, l) == 0
            for t in range(n // 2 + 1):
                assert psi_t(n, t, l) == 0


@given(st.integers(min_value=0, max_value=20), st.integers(min_value=0, max_value=12))
def test_psi_product_form(n, l):
    assert psi(2 * n, 1, l) == super_catalan(n, l) * super_catalan(n + l, n)


@given(st.integers(min_value=0, max_value=12), st.integers(min_value=0, max_value=6),
       st.integers(min_value=0, max_value=12))
def test_weighted_sums_recombine(n, l, t):
    # (n+l+1-t) r - (2l+1) psi_t reproduces the combined weight of t_sum
    if 2 * t <= n:
        assert t_sum(n, t, l) == (n + l + 1 - t) * r_sum(n, t, l) - (2 * l + 1) * psi_t(n, t, l)


def test_domain_validation():
    with pytest.raises(ValueError):
        psi(-1, 1, 0)
    with pytest.raises(ValueError):
        psi(2, 0, 0)
    with pytest.raises(ValueError):
        psi(2, 1, -1)
    with pytest.raises(ValueError):
        psi_t(4, 3, 0)
    with pytest.raises(ValueError):
        r_sum(4, -1, 0)
