"""Theta series, the modular lambda function, the Hauptmodul J, and the
geometry of the theta group on the upper half-plane.

All evaluators work in double precision with compensated q-series summation.
Evaluation refuses points whose imaginary part is below a configurable floor
(default 0.05), where double-precision truncated series lose accuracy.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

DEFAULT_IM_FLOOR = 0.05


class ToleranceUnreachableError(ArithmeticError):
    """Raised when a series or quadrature cannot meet the requested tolerance."""


@dataclass(frozen=True)
class UpperHalfPoint:
    """A point of the upper half-plane, Im > 0 strictly."""

    re: float
    im: float

    def __post_init__(self) -> None:
        if not (self.im > 0.0) or not math.isfinite(self.im) or not math.isfinite(self.re):
            raise ValueError(f"point {self.re}+{self.im}j is not in the upper half-plane")

    @classmethod
    def of(cls, z: complex) -> "UpperHalfPoint":
        return cls(float(z.real), float(z.imag))

    def __complex__(self) -> complex:
        return complex(self.re, self.im)


def as_upper_half(z, im_floor: float = 0.0) -> complex:
    """Coerce a complex number or UpperHalfPoint to complex, checking Im > 0."""
    w = complex(z)
    if not (w.imag > 0.0):
        raise ValueError(f"{w} is not in the upper half-plane")
    if w.imag < im_floor:
        raise ValueError(
            f"Im z = {w.imag} is below the evaluation floor {im_floor}; "
            "double-precision q-series are not reliable this close to the real axis"
        )
    return w


@dataclass(frozen=True)
class SeriesTolerance:
    """Truncation control for q-series: stop once the geometric tail bound of
    the remaining terms falls below abs_tol."""

    abs_tol: float = 1e-14
    max_terms: int = 512

    def __post_init__(self) -> None:
        if not self.abs_tol > 0:
            raise ValueError("abs_tol must be positive")
        if self.max_terms < 8:
            raise ValueError("max_terms must be at least 8")


DEFAULT_TOL = SeriesTolerance()


def _csum(terms: list[complex]) -> complex:
    # compensated accumulation: fsum over real and imaginary parts
    return complex(math.fsum(t.real for t in terms), math.fsum(t.imag for t in terms))


def theta3(z, tol: SeriesTolerance = DEFAULT_TOL, im_floor: float = DEFAULT_IM_FLOOR) -> complex:
    """theta(z) = sum_{n in Z} exp(pi i n^2 z)."""
    w = as_upper_half(z, im_floor)
    q = cmath.exp(1j * math.pi * w)
    aq = abs(q)
    terms = [complex(1.0)]
    qsq = q * q
    power = 1.0 + 0j  # q^((n-1)^2)
    odd = q  # q^(2n-1)
    for n in range(1, tol.max_terms + 1):
        power = power * odd
        odd = odd * qsq
        terms.append(2.0 * power)
        # tail bound: 2 |q|^((n+1)^2) / (1 - |q|)
        tail = 2.0 * aq ** ((n + 1) * (n + 1)) / (1.0 - aq)
        if tail < tol.abs_tol:
            return _csum(terms)
    raise ToleranceUnreachableError(
        f"theta series did not reach {tol.abs_tol} within {tol.max_terms} terms at z={w}"
    )


def theta4(z, tol: SeriesTolerance = DEFAULT_TOL, im_floor: float = DEFAULT_IM_FLOOR) -> complex:
    """theta_4(z) = sum_{n in Z} (-1)^n exp(pi i n^2 z)."""
    w = as_upper_half(z, im_floor)
    q = cmath.exp(1j * math.pi * w)
    aq = abs(q)
    terms = [complex(1.0)]
    qsq = q * q
    power = 1.0 + 0j
    odd = q
    sign = -1.0
    for n in range(1, tol.max_terms + 1):
        power = power * odd
        odd = odd * qsq
        terms.append(2.0 * sign * power)
        sign = -sign
        tail = 2.0 * aq ** ((n + 1) * (n + 1)) / (1.0 - aq)
        if tail < tol.abs_tol:
            return _csum(terms)
    raise ToleranceUnreachableError(
        f"theta_4 series did not reach {tol.abs_tol} within {tol.max_terms} terms at z={w}"
    )


def theta2(z, tol: SeriesTolerance = DEFAULT_TOL, im_floor: float = DEFAULT_IM_FLOOR) -> complex:
    """theta_2(z) = sum_{n in Z} exp(pi i (n+1/2)^2 z) = 2 q^{1/4} sum_{n>=0} q^{n(n+1)}."""
    w = as_upper_half(z, im_floor)
    q = cmath.exp(1j * math.pi * w)
    aq = abs(q)
    prefactor = 2.0 * cmath.exp(1j * math.pi * w / 4.0)
    terms = [complex(1.0)]
    power = 1.0 + 0j  # q^(n(n+1))
    for n in range(1, tol.max_terms + 1):
        power = power * q ** (2 * n)
        terms.append(power)
        tail = abs(prefactor) * aq ** ((n + 1) * (n + 2)) / (1.0 - aq)
        if tail < tol.abs_tol:
            return prefactor * _csum(terms)
    raise ToleranceUnreachableError(
        f"theta_2 series did not reach {tol.abs_tol} within {tol.max_terms} terms at z={w}"
    )


def lambda_modular(z, tol: SeriesTolerance = DEFAULT_TOL, im_floor: float = DEFAULT_IM_FLOOR) -> complex:
    """The modular lambda function, computed as theta_2(z)^4 / theta_3(z)^4.

    Satisfies lambda(z+2) = lambda(z) and lambda(-1/z) = 1 - lambda(z).
    """
    t2 = theta2(z, tol, im_floor)
    t3 = theta3(z, tol, im_floor)
    return (t2 / t3) ** 4


def h_function(z, tol: SeriesTolerance = DEFAULT_TOL, im_floor: float = DEFAULT_IM_FLOOR) -> complex:
    """h = 1 - 2*lambda; anti-invariant under z -> -1/z: h(-1/z) = -h(z)."""
    return 1.0 - 2.0 * lambda_modular(z, tol, im_floor)


def hauptmodul_J(z, tol: SeriesTolerance = DEFAULT_TOL, im_floor: float = DEFAULT_IM_FLOOR) -> complex:
    """J = lambda (1 - lambda) / 16, invariant under z -> z+2 and z -> -1/z."""
    lam = lambda_modular(z, tol, im_floor)
    return lam * (1.0 - lam) / 16.0


def sqrt_neg_iz(z) -> complex:
    """(-iz)^(1/2) with the branch that is positive on the upper imaginary axis
    and continuous on the upper half-plane.

    For Im z > 0 the number -iz has positive real part, so the principal
    square root realizes exactly this branch.
    """
    w = as_upper_half(z)
    return cmath.sqrt(-1j * w)


def in_region_S(tau) -> bool:
    """True iff tau has distance strictly greater than 1 from every even integer."""
    w = as_upper_half(tau)
    n0 = math.floor(w.real / 2.0)
    return all(abs(w - 2.0 * n) > 1.0 for n in (n0, n0 + 1))


def gamma_theta_orbit(tau, depth: int, dedup_tol: float = 1e-12, max_points: int = 10_000) -> list[complex]:
    """All distinct points of the theta-group orbit of tau reachable by words of
    length <= depth in the generators z -> z+2, z -> z-2, z -> -1/z."""
    w = as_upper_half(tau)
    if depth < 0:
        raise ValueError("depth must be nonnegative")
    points: list[complex] = [w]
    frontier = [w]
    for _ in range(depth):
        new_frontier = []
        for p in frontier:
            for img in (p + 2.0, p - 2.0, -1.0 / p):
                if all(abs(img - q) > dedup_tol for q in points):
                    points.append(img)
                    new_frontier.append(img)
                    if len(points) >= max_points:
                        return points
        frontier = new_frontier
    return points
