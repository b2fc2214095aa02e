"""Alternating convolution sums of super Catalan numbers.

The basic objects are

    psi(n, m, l)   = sum_k (-1)^k binomial(n,k)^m S(k,l) S(n-k,l)
    psi_t(n, t, l) = sum_{k=t}^{n-t} (-1)^k binomial(n-2t, k-t) S(k,l) S(n-k,l)

together with the weighted variants p_sum, r_sum, r_prime_sum,
r_dprime_sum and t_sum that the recurrence arguments run on. Sums whose
weights carry a 1/(k+l+1)-style factor return Fraction, everything else
returns int. The unweighted sums vanish whenever the length n is odd; the
weighted ones in general do not.
"""

from __future__ import annotations

from fractions import Fraction

from .exactnum import binomial
from .supercat import super_catalan

__all__ = [
    "psi",
    "psi_t",
    "p_sum",
    "r_sum",
    "r_prime_sum",
    "r_dprime_sum",
    "t_sum",
]


def _window(n: int, t: int) -> range:
    # shared validation for the [t, n-t] windowed sums
    if n < 0:
        raise ValueError(f"sum length must be non-negative, got {n}")
    if t < 0 or 2 * t > n:
        raise ValueError(f"window offset requires 0 <= 2t <= n, got t={t}, n={n}")
    return range(t, n - t + 1)


def _require_l(l: int) -> None:
    if l < 0:
        raise ValueError(f"second super Catalan index must be non-negative, got {l}")


def psi(n: int, m: int, l: int) -> int:
    """Alternating convolution with the binomial weight raised to the m-th power."""
    if n < 0:
        raise ValueError(f"sum length must be non-negative, got {n}")
    if m < 1:
        raise ValueError(f"binomial power must be positive, got {m}")
    _require_l(l)
    S = super_catalan
    return sum((-1) ** k * binomial(n, k) ** m * S(k, l) * S(n - k, l)
               for k in range(n + 1))


def psi_t(n: int, t: int, l: int) -> int:
    """Window-t truncation of the alternating convolution."""
    _require_l(l)
    S = super_catalan
    return sum((-1) ** k * binomial(n - 2 * t, k - t) * S(k, l) * S(n - k, l)
               for k in _window(n, t))


def p_sum(n: int, t: int, l: int) -> int:
    """psi_t with the extra linear weight (n - t - k)."""
    _require_l(l)
    S = super_catalan
    return sum((-1) ** k * (n - t - k) * binomial(n - 2 * t, k - t) * S(k, l) * S(n - k, l)
               for k in _window(n, t))


def r_sum(n: int, t: int, l: int) -> Fraction:
    """psi_t with the weight (2l+1)/(k+l+1). Exact rational."""
    _require_l(l)
    S = super_catalan
    Fr = Fraction
    return sum((Fr((-1) ** k * (2 * l + 1) * binomial(n - 2 * t, k - t)
                   * S(k, l) * S(n - k, l), k + l + 1)
                for k in _window(n, t)), Fr(0))


def r_prime_sum(n: int, t: int, l: int) -> Fraction:
    """psi_t with the symmetric weight (2l+1)/((k+l+1)(n-k+l+1))."""
    _require_l(l)
    S = super_catalan
    Fr = Fraction
    return sum((Fr((-1) ** k * (2 * l + 1) * binomial(n - 2 * t, k - t)
                   * S(k, l) * S(n - k, l), (k + l + 1) * (n - k + l + 1))
                for k in _window(n, t)), Fr(0))


def r_dprime_sum(n: int, t: int, l: int) -> Fraction:
    """r_prime_sum with the extra weight (n - k) on each term."""
    _require_l(l)
    S = super_catalan
    Fr = Fraction
    return sum((Fr((-1) ** k * (2 * l + 1) * (n - k) * binomial(n - 2 * t, k - t)
                   * S(k, l) * S(n - k, l), (k + l + 1) * (n - k + l + 1))
                for k in _window(n, t)), Fr(0))


def t_sum(n: int, t: int, l: int) -> Fraction:
    """psi_t with the combined weight (n-t-k)(2l+1)/(k+l+1)."""
    _require_l(l)
    S = super_catalan
    Fr = Fraction
    return sum((Fr((-1) ** k * (n - t - k) * (2 * l + 1) * binomial(n - 2 * t, k - t)
                   * S(k, l) * S(n - k, l), k + l + 1)
                for k in _window(n, t)), Fr(0))
