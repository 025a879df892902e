"""The two-variable interpolation kernels K and K-hat, their transformation
laws, residues, and Fourier coefficients in tau.

Both kernels are built from theta, lambda and the Hauptmodul J.  The h-form
(h = 1 - 2 lambda) is the production formula; the J-form is kept as an
independent cross-check.  "hat" is mnemonic only: the hat kernel is not the
Fourier transform of the plain one.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Literal

from . import contours
from .modular import (
    DEFAULT_TOL,
    SeriesTolerance,
    as_upper_half,
    h_function,
    hauptmodul_J,
    sqrt_neg_iz,
    theta3,
)

KernelKind = Literal["plain", "hat"]

DEFAULT_DENOMINATOR_FLOOR = 1e-10
DEFAULT_LINE_HEIGHT = 2.5


class NearPoleError(ArithmeticError):
    """The evaluation point is on (or too near) the kernel's pole set."""


def _check_kind(kind: str) -> None:
    if kind not in ("plain", "hat"):
        raise ValueError(f"kernel kind must be 'plain' or 'hat', got {kind!r}")


def kernel(
    kind: KernelKind,
    tau,
    z,
    tol: SeriesTolerance = DEFAULT_TOL,
    denominator_floor: float = DEFAULT_DENOMINATOR_FLOOR,
) -> complex:
    """K(tau, z) resp. K-hat(tau, z) via the h-form:

        K    = theta(tau) theta(z)^3 (1 - h(tau) h(z)) / (4 (h(tau) - h(z)))
        Khat = theta(tau) theta(z)^3 (1 + h(tau) h(z)) / (4 (h(tau) + h(z)))
    """
    _check_kind(kind)
    t = as_upper_half(tau)
    w = as_upper_half(z)
    ht = h_function(t, tol)
    hz = h_function(w, tol)
    if kind == "plain":
        den = 4.0 * (ht - hz)
        num = 1.0 - ht * hz
    else:
        den = 4.0 * (ht + hz)
        num = 1.0 + ht * hz
    if abs(den) < denominator_floor:
        raise NearPoleError(
            f"kernel denominator {abs(den):.3e} below floor at tau={t}, z={w}"
        )
    return theta3(t, tol) * theta3(w, tol) ** 3 * num / den


def kernel_j_form(
    kind: KernelKind,
    tau,
    z,
    tol: SeriesTolerance = DEFAULT_TOL,
    denominator_floor: float = DEFAULT_DENOMINATOR_FLOOR,
) -> complex:
    """The J-form of the kernels,

        theta(tau) theta(z)^3 (J(z)(1-2 lambda(tau)) +- J(tau)(1-2 lambda(z)))
            / (4 (J(z) - J(tau))),

    kept as an independent cross-check of the h-form."""
    _check_kind(kind)
    t = as_upper_half(tau)
    w = as_upper_half(z)
    jt = hauptmodul_J(t, tol)
    jz = hauptmodul_J(w, tol)
    ht = h_function(t, tol)
    hz = h_function(w, tol)
    den = 4.0 * (jz - jt)
    if abs(den) < denominator_floor:
        raise NearPoleError(f"J-form denominator {abs(den):.3e} below floor")
    sign = 1.0 if kind == "plain" else -1.0
    return theta3(t, tol) * theta3(w, tol) ** 3 * (jz * ht + sign * jt * hz) / den


def verify_z_transformations(kind: KernelKind, tau, z) -> tuple[float, float]:
    """Residuals of the two z-laws: |K(tau,z+2) - K(tau,z)| and
    |K(tau,-1/z) - (-iz)^{3/2} Khat(tau,z)| (with the roles of the kernels
    swapped for kind='hat')."""
    _check_kind(kind)
    t = as_upper_half(tau)
    w = as_upper_half(z)
    other: KernelKind = "hat" if kind == "plain" else "plain"
    periodic = abs(kernel(kind, t, w + 2.0) - kernel(kind, t, w))
    factor = sqrt_neg_iz(w) ** 3
    if kind == "plain":
        inversion = abs(kernel(kind, t, -1.0 / w) - factor * kernel("hat", t, w))
    else:
        # Khat(tau,-1/z) = (-iz)^{3/2} K(tau,z) follows from items (3)-(4)
        inversion = abs(kernel(kind, t, -1.0 / w) - factor * kernel(other, t, w))
    return periodic, inversion


@dataclass(frozen=True)
class ResidueReport:
    location: complex
    residue: complex
    circle_radius: float
    error_estimate: float

    def __post_init__(self) -> None:
        if self.circle_radius <= 0 or self.error_estimate < 0:
            raise ValueError("invalid residue report")


def residue_at(
    kind: KernelKind,
    tau,
    location,
    radius: float,
    abs_tol: float = 1e-11,
) -> ResidueReport:
    """Residue of z -> kernel(kind, tau, z) at the given location, computed as
    a small positively oriented circle integral divided by 2 pi i."""
    t = as_upper_half(tau)
    p = as_upper_half(location)
    circle = contours.circle_around(p, radius)
    res = contours.integrate(lambda w: kernel(kind, t, w), circle, abs_tol)
    two_pi_i = 2j * math.pi
    return ResidueReport(
        location=p,
        residue=res.value / two_pi_i,
        circle_radius=radius,
        error_estimate=res.error_estimate / (2.0 * math.pi),
    )


def fourier_coefficient(
    kind: KernelKind,
    n: int,
    z,
    line_height: float = DEFAULT_LINE_HEIGHT,
    num_nodes: int | None = None,
) -> complex:
    """phi_n(z): coefficient of exp(n pi i tau) in the kernel's tau-Fourier
    series, as (1/2) * integral of K(tau, z) exp(-n pi i tau) over the
    horizontal line Im tau = line_height, Re tau in [-1, 1].

    The integrand is 2-periodic and analytic on the line, so the integral is
    evaluated with the uniform (trapezoidal) rule, which converges geometrically
    there.  Noise in the kernel values is amplified by exp(n pi line_height);
    callers wanting many coefficients should prefer a lower line and more nodes.
    Negative n is allowed as a diagnostic (the true series has no such terms).
    """
    _check_kind(kind)
    w = as_upper_half(z)
    if line_height <= 1.0:
        raise ValueError("line_height must exceed 1 to clear the kernel pole set")
    if num_nodes is None:
        num_nodes = max(64, 2 * abs(n) + 32)
    acc = 0.0 + 0.0j
    for j in range(num_nodes):
        tau = complex(-1.0 + 2.0 * j / num_nodes, line_height)
        acc += kernel(kind, tau, w) * cmath.exp(-1j * math.pi * n * tau)
    return acc / num_nodes
