"""Exact integer q-expansions of theta-family series on the upper half-plane.

All series are in the nome q = exp(pi*i*z).  Working with exact integer
coefficients keeps the kernel Fourier-coefficient recursion in the basis
builder free of any quadrature noise in the tau variable.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache


def _convolve(a: list[int], b: list[int], n_max: int) -> list[int]:
    out = [0] * (n_max + 1)
    for i, ai in enumerate(a[: n_max + 1]):
        if ai == 0:
            continue
        for j, bj in enumerate(b[: n_max + 1 - i]):
            out[i + j] += ai * bj
    return out


@lru_cache(maxsize=None)
def theta3_coeffs(n_max: int) -> tuple[int, ...]:
    """Coefficients of theta(z) = sum_n q^(n^2): 1 at 0, 2 at positive squares."""
    if n_max < 0:
        raise ValueError("n_max must be nonnegative")
    c = [0] * (n_max + 1)
    c[0] = 1
    n = 1
    while n * n <= n_max:
        c[n * n] = 2
        n += 1
    return tuple(c)


@lru_cache(maxsize=None)
def theta2_pow4_coeffs(n_max: int) -> tuple[int, ...]:
    """Coefficients of theta_2(z)^4 = 16 q (sum_{k>=0} q^(k(k+1)))^4."""
    if n_max < 0:
        raise ValueError("n_max must be nonnegative")
    s = [0] * (n_max + 1)
    k = 0
    while k * (k + 1) <= n_max:
        s[k * (k + 1)] = 1
        k += 1
    p2 = _convolve(s, s, n_max)
    p4 = _convolve(p2, p2, n_max)
    out = [0] * (n_max + 1)
    for m in range(n_max):
        out[m + 1] = 16 * p4[m]
    return tuple(out)


@lru_cache(maxsize=None)
def theta3_pow4_coeffs(n_max: int) -> tuple[int, ...]:
    t = list(theta3_coeffs(n_max))
    p2 = _convolve(t, t, n_max)
    return tuple(_convolve(p2, p2, n_max))


@lru_cache(maxsize=None)
def lambda_coeffs(n_max: int) -> tuple[int, ...]:
    """Coefficients of the modular lambda function, lambda = theta_2^4 / theta_3^4.

    The quotient has integer coefficients (16, -128, 704, ...); the division is
    done over the rationals and integrality is asserted.
    """
    num = theta2_pow4_coeffs(n_max)
    den = theta3_pow4_coeffs(n_max)
    c: list[Fraction] = []
    for n in range(n_max + 1):
        acc = Fraction(num[n])
        for m in range(1, n + 1):
            acc -= den[m] * c[n - m]
        c.append(acc / den[0])
    out = []
    for x in c:
        if x.denominator != 1:
            raise AssertionError("lambda q-expansion is not integral")
        out.append(int(x))
    return tuple(out)


@lru_cache(maxsize=None)
def h_coeffs(n_max: int) -> tuple[int, ...]:
    """Coefficients of h = 1 - 2*lambda."""
    lam = lambda_coeffs(n_max)
    out = [-2 * x for x in lam]
    out[0] += 1
    return tuple(out)


@lru_cache(maxsize=None)
def theta_h_coeffs(n_max: int) -> tuple[int, ...]:
    """Coefficients of theta(z) * h(z)."""
    return tuple(
        _convolve(list(theta3_coeffs(n_max)), list(h_coeffs(n_max)), n_max)
    )


@lru_cache(maxsize=None)
def theta_cubed_coefficients(max_m: int) -> tuple[int, ...]:
    """Coefficient of q^m in theta(z)^3: the number of representations of m
    as an ordered sum of three squares of (signed) integers."""
    t = list(theta3_coeffs(max_m))
    p2 = _convolve(t, t, max_m)
    return tuple(_convolve(p2, t, max_m))
