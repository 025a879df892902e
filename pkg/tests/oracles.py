"""Independent oracles for the test suite.

Everything here is computed by a route different from the library under test:
mpmath's jtheta for theta functions, brute-force integer enumeration for
sum-of-squares counts, and mpmath quadrature for Fourier transforms.
"""

from __future__ import annotations

import itertools
import math

import mpmath

# Frozen reference constants.
THETA_AT_I = 1.0864348112133080  # pi^(1/4) / Gamma(3/4)
E8_DENSITY_8TH_ROOT = 0.84242944
HEX_DENSITY_SQRT = 0.95231281
SINC_SQ_AT_HALF = 4.0 / math.pi**2  # value of (sin(pi x)/(pi x))^2 at x = 1/2


def theta3_mp(z: complex, dps: int = 30) -> complex:
    """theta_3 via mpmath.jtheta with nome q = exp(pi i z)."""
    with mpmath.workdps(dps):
        q = mpmath.exp(1j * mpmath.pi * mpmath.mpc(z))
        return complex(mpmath.jtheta(3, 0, q))


def theta2_mp(z: complex, dps: int = 30) -> complex:
    """theta_2 in the z-convention sum_n exp(pi i (n+1/2)^2 z).

    Computed as 2 exp(pi i z/4) sum_{n>=0} q^{n(n+1)} rather than through
    mpmath's jtheta, whose q^{1/4} uses the principal branch of the nome and
    disagrees off the strip |Re z| < 1."""
    with mpmath.workdps(dps):
        zz = mpmath.mpc(z)
        q = mpmath.exp(1j * mpmath.pi * zz)
        pref = 2 * mpmath.exp(1j * mpmath.pi * zz / 4)
        acc = mpmath.mpc(0)
        n = 0
        while True:
            term = q ** (n * (n + 1))
            acc += term
            if abs(term) < mpmath.mpf(10) ** (-dps - 5):
                break
            n += 1
        return complex(pref * acc)


def theta4_mp(z: complex, dps: int = 30) -> complex:
    with mpmath.workdps(dps):
        q = mpmath.exp(1j * mpmath.pi * mpmath.mpc(z))
        return complex(mpmath.jtheta(4, 0, q))


def lambda_mp(z: complex, dps: int = 30) -> complex:
    return (theta2_mp(z, dps) / theta3_mp(z, dps)) ** 4


def sum_of_squares_count(n: int, k: int) -> int:
    """Number of representations of n as an ordered sum of k integer squares,
    by direct enumeration."""
    if n < 0:
        return 0
    bound = int(math.isqrt(n))
    count = 0
    for combo in itertools.product(range(-bound, bound + 1), repeat=k):
        if sum(c * c for c in combo) == n:
            count += 1
    return count


def cosine_transform_mp(f, y: float, x_max: float, dps: int = 25) -> float:
    """2 * integral_0^{x_max} f(x) cos(2 pi x y) dx via mpmath quadrature."""
    with mpmath.workdps(dps):
        val = mpmath.quad(
            lambda x: 2 * f(float(x)) * mpmath.cos(2 * mpmath.pi * x * y),
            [0, x_max],
        )
        return float(val)
