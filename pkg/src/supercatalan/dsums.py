"""Window-truncated convolution engine and the divisibility pipeline.

d_sum_direct evaluates, for an arbitrary integer-valued summand f(n, k, l),

    D(n, j, t) = sum_u binomial(n-j, u) binomial(n-j, j+u) binomial(n, j+u)^t f(n, j+u, l)

with 0 <= j <= floor(n/2) and t >= 0. d_sum_step lowers the level through

    D(n, j, t+1) = sum_u binomial(n, j+u) binomial(n-j, u) D(n, j+u, t)

and d_sum_base expresses the t = 0 layer through the windowed sums

    a_t(n) = sum_{k=t}^{n-t} binomial(n-2t, k-t) f(n, k, l).

Two summands are provided: psi_summand, whose D values reproduce the
alternating super Catalan convolutions (psi(n, m, l) = D(n, 0, m-2) for
m >= 2), and the constant unit_summand for engine self-tests.

For psi_summand the level-0 and level-1 layers of D(2n, j, t) admit closed
forms that factor S(n, l) out in front: d_psi_base_closed carries a rational
cofactor, d_psi_level1 an integer one built from q_scaled. Propagating the
integer cofactors upward through the level recurrence gives a constructive
quotient psi(2n, m, l) / S(n, l) that never performs the division; that is
what psi_quotient_witness returns and what psi_divisibility_check is
validated against.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable

from .exactnum import IntegrityError, binomial, central_binomial
from .sums import psi
from .supercat import super_catalan

__all__ = [
    "Summand",
    "psi_summand",
    "unit_summand",
    "d_sum_direct",
    "d_sum_step",
    "a_t",
    "d_sum_base",
    "q_sum",
    "q_scaled",
    "d_psi_base_closed",
    "d_psi_level1",
    "psi_quotient_witness",
    "DivisionCheck",
    "division_check",
    "psi_divisibility_check",
]

# A summand maps (n, k, l) to an integer and must be pure: the engine may
# re-evaluate it freely and memoizes nothing on its behalf.
Summand = Callable[[int, int, int], int]


def psi_summand(n: int, k: int, l: int) -> int:
    """(-1)^k S(k, l) S(n-k, l), the alternating super Catalan summand."""
    return (-1) ** k * super_catalan(k, l) * super_catalan(n - k, l)


def unit_summand(n: int, k: int, l: int) -> int:
    """Constant 1; turns D(n, 0, m-2) into the sum of binomial(n,k)^m."""
    return 1


def _check_window(n: int, j: int) -> None:
    if n < 0:
        raise ValueError(f"sum length must be non-negative, got {n}")
    if j < 0 or 2 * j > n:
        raise ValueError(f"window offset requires 0 <= 2j <= n, got j={j}, n={n}")


def d_sum_direct(f: Summand, n: int, j: int, t: int, l: int) -> int:
    """Evaluate D(n, j, t) for summand f by its defining single sum."""
    _check_window(n, j)
    if t < 0:
        raise ValueError(f"level must be non-negative, got {t}")
    return sum(binomial(n - j, u) * binomial(n - j, j + u)
               * binomial(n, j + u) ** t * f(n, j + u, l)
               for u in range(n - 2 * j + 1))


def d_sum_step(f: Summand, n: int, j: int, t: int, l: int) -> int:
    """Evaluate D(n, j, t) through the level recurrence, one step down.

    Only defined for t >= 1; the t = 0 layer has no level below it and is
    covered by d_sum_direct and d_sum_base instead.
    """
    _check_window(n, j)
    if t < 1:
        raise ValueError(f"level recurrence needs t >= 1, got {t}")
    return sum(binomial(n, j + u) * binomial(n - j, u)
               * d_sum_direct(f, n, j + u, t - 1, l)
               for u in range((n - 2 * j) // 2 + 1))


def a_t(f: Summand, n: int, t: int, l: int) -> int:
    """Windowed sum a_t(n) = sum_{k=t}^{n-t} binomial(n-2t, k-t) f(n, k, l)."""
    _check_window(n, t)
    return sum(binomial(n - 2 * t, k - t) * f(n, k, l)
               for k in range(t, n - t + 1))


def _base_windowed(f: Summand, n: int, j: int, l: int) -> int:
    return sum(binomial(n - j, u) * binomial(n - j - u, j + u) * a_t(f, n, j + u, l)
               for u in range((n - 2 * j) // 2 + 1))


def _base_expanded(f: Summand, n: int, j: int, l: int) -> int:
    out = 0
    for u in range((n - 2 * j) // 2 + 1):
        inner = sum(binomial(n - 2 * j - 2 * u, v) * f(n, j + u + v, l)
                    for v in range(n - 2 * j - 2 * u + 1))
        out += binomial(n - j, j + u) * binomial(n - 2 * j - u, u) * inner
    return out


def d_sum_base(f: Summand, n: int, j: int, l: int) -> int:
    """The t = 0 layer written over the a_t windows.

    Two equivalent regroupings of the same double sum exist; both are
    evaluated and compared on every call so a drift in either one is caught
    immediately.
    """
    _check_window(n, j)
    windowed = _base_windowed(f, n, j, l)
    expanded = _base_expanded(f, n, j, l)
    if windowed != expanded:
        raise IntegrityError(
            f"base-layer regroupings disagree at n={n}, j={j}, l={l}: "
            f"{windowed} vs {expanded}")
    return windowed


def q_sum(n: int, s: int, l: int) -> Fraction:
    """Rational kernel of the level-1 closed form.

    q_sum(n, s, l) = sum_v (-1)^v binomial(2(s+v), s+v)
                     binomial(2(n+l-s-v), n+l-s-v) binomial(n-s, v)
                     / binomial(2n+l-s-v, n)
    """
    if n < 0 or l < 0 or not 0 <= s <= n:
        raise ValueError(f"q_sum requires n, l >= 0 and 0 <= s <= n, "
                         f"got n={n}, s={s}, l={l}")
    Fr = Fraction
    return sum((Fr((-1) ** v * central_binomial(s + v)
                   * central_binomial(n + l - s - v) * binomial(n - s, v),
                   binomial(2 * n + l - s - v, n))
                for v in range(n - s + 1)), Fr(0))


@lru_cache(maxsize=None)
def q_scaled(n: int, s: int, l: int) -> int:
    """binomial(2n, n) * q_sum(n, s, l), assembled without any division.

    q_scaled(n, s, l) = sum_v (-1)^v binomial(2(s+v), s+v) binomial(n-s, v)
                        S(n, n+l-s-v)

    Always an integer, and even whenever l >= 1, which is what makes the
    constructive divisibility quotients below integral.
    """
    if n < 0 or l < 0 or not 0 <= s <= n:
        raise ValueError(f"q_scaled requires n, l >= 0 and 0 <= s <= n, "
                         f"got n={n}, s={s}, l={l}")
    return sum((-1) ** v * central_binomial(s + v) * binomial(n - s, v)
               * super_catalan(n, n + l - s - v)
               for v in range(n - s + 1))


def d_psi_base_closed(n: int, j: int, l: int) -> tuple[int, Fraction]:
    """Closed level-0 evaluation D(2n, j, 0) = S(n, l) * cofactor.

    Returns the integer value together with the factored rational cofactor

        cofactor = sum_u (-1)^(j+u) binomial(2(j+u), j+u)
                   binomial(2(n+l-j-u), n+l-j-u) binomial(2n-j, n)
                   binomial(n-j, u) / binomial(2n+l-j-u, n)

    so divisibility by S(n, l) is witnessed constructively whenever the
    cofactor happens to be integral (it is rational in general, only the
    product is guaranteed integer). The product is cross-checked against
    the direct evaluation on every call.
    """
    if n < 0 or l < 0 or not 0 <= j <= n:
        raise ValueError(f"requires n, l >= 0 and 0 <= j <= n, got n={n}, j={j}, l={l}")
    Fr = Fraction
    cofactor = sum((Fr((-1) ** (j + u) * central_binomial(j + u)
                       * central_binomial(n + l - j - u)
                       * binomial(2 * n - j, n) * binomial(n - j, u),
                       binomial(2 * n + l - j - u, n))
                    for u in range(n - j + 1)), Fr(0))
    product = super_catalan(n, l) * cofactor
    direct = d_sum_direct(psi_summand, 2 * n, j, 0, l)
    if product.denominator != 1 or int(product) != direct:
        raise IntegrityError(
            f"closed level-0 form disagrees at n={n}, j={j}, l={l}: "
            f"{product} vs direct {direct}")
    return direct, cofactor


@lru_cache(maxsize=None)
def _level1_cofactor(n: int, j: int, l: int) -> int:
    return sum((-1) ** u * binomial(2 * n - j, u) * binomial(n, j + u)
               * q_scaled(n, j + u, l)
               for u in range(n - j + 1))


def d_psi_level1(n: int, j: int, l: int) -> tuple[int, int]:
    """Closed level-1 evaluation D(2n, j, 1) = (-1)^j S(n, l) * cofactor.

    The cofactor sum_u (-1)^u binomial(2n-j, u) binomial(n, j+u)
    q_scaled(n, j+u, l) is an integer built without dividing, so it is a
    constructive witness that S(n, l) divides the level-1 layer. The
    reconstructed value is cross-checked against the direct evaluation on
    every call.
    """
    if n < 0 or l < 0 or not 0 <= j <= n:
        raise ValueError(f"requires n, l >= 0 and 0 <= j <= n, got n={n}, j={j}, l={l}")
    cofactor = _level1_cofactor(n, j, l)
    value = (-1) ** j * super_catalan(n, l) * cofactor
    direct = d_sum_direct(psi_summand, 2 * n, j, 1, l)
    if value != direct:
        raise IntegrityError(
            f"closed level-1 form disagrees at n={n}, j={j}, l={l}: "
            f"{value} vs direct {direct}")
    return value, cofactor


@lru_cache(maxsize=None)
def _witness_row(n: int, l: int, level: int) -> tuple[int, ...]:
    # Quotients D(2n, j, level) / S(n, l) for j = 0..n, built by pushing the
    # level-1 cofactors up through the level recurrence. Signs ride along.
    if level == 1:
        return tuple((-1) ** j * _level1_cofactor(n, j, l) for j in range(n + 1))
    below = _witness_row(n, l, level - 1)
    return tuple(sum(binomial(2 * n, j + u) * binomial(2 * n - j, u) * below[j + u]
                     for u in range(n - j + 1))
                 for j in range(n + 1))


def psi_quotient_witness(n: int, m: int, l: int) -> int:
    """Constructive quotient psi(2n, m, l) / S(n, l), no division performed.

    m = 1 comes from the product form of the full alternating convolution,
    m = 2 from the level-0 closed form at j = 0, and m >= 3 from the
    level-(m-2) witness row.
    """
    if n < 0 or l < 0:
        raise ValueError(f"indices must be non-negative, got n={n}, l={l}")
    if m < 1:
        raise ValueError(f"binomial power must be positive, got {m}")
    if m == 1:
        return super_catalan(n + l, n)
    if m == 2:
        return sum((-1) ** u * central_binomial(u) * super_catalan(n, n + l - u)
                   * binomial(n, u)
                   for u in range(n + 1))
    return _witness_row(n, l, m - 2)[0]


@dataclass(frozen=True)
class DivisionCheck:
    """Outcome of an integer divisibility test; failure is data, not an error."""

    dividend: int
    divisor: int
    quotient: int
    remainder: int

    @property
    def exact(self) -> bool:
        return self.remainder == 0


def division_check(dividend: int, divisor: int) -> DivisionCheck:
    q, r = divmod(dividend, divisor)
    return DivisionCheck(dividend, divisor, q, r)


def psi_divisibility_check(n: int, m: int, l: int) -> DivisionCheck:
    """Does S(n, l) divide psi(2n, m, l)? Returns quotient or remainder.

    A non-exact outcome is a first-class result rather than an exception;
    the same mechanism serves checks against other divisors, where failure
    is sometimes the expected answer.
    """
    return division_check(psi(2 * n, m, l), super_catalan(n, l))
