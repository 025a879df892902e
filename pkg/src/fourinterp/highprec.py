"""Arbitrary-precision evaluation grid for the interpolation-basis builder.

Extracting the n-th tau-Fourier coefficient of the kernels amplifies any
evaluation noise exponentially in n, so double precision cannot reach the
interesting truncation orders.  This module instead expands the kernels as
power series in the nome exp(pi*i*tau) with exact integer coefficients
(see qseries) and performs the remaining series division and contour
quadrature in gmpy2 multiple-precision arithmetic.  Working precision and
quadrature orders scale with the requested maximum coefficient index.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import gmpy2
from gmpy2 import mpc, mpfr

from . import qseries


def precision_for(max_n: int) -> int:
    """Bits of working precision: enough to keep roundoff, amplified by the
    exp(pi n Im z) growth of the coefficient functions, far below the target
    accuracy of the basis values."""
    return 160 + math.ceil(4.6 * max_n)


def gl_order_for(max_n: int) -> int:
    """Gauss-Legendre order per panel; the coefficient functions oscillate with
    frequency up to pi*max_n along the contour."""
    return max(28, max_n + 24)


@lru_cache(maxsize=None)
def gauss_legendre(order: int, prec: int) -> tuple[tuple, tuple]:
    """Nodes and weights of the Gauss-Legendre rule on [-1, 1] at `prec` bits,
    refined by Newton iteration from double-precision seeds."""
    with gmpy2.context(precision=prec + 32):
        one = mpfr(1)
        nodes = []
        weights = []
        for i in range(1, order + 1):
            x = mpfr(math.cos(math.pi * (i - 0.25) / (order + 0.5)))
            for _ in range(64):
                p0, p1 = one, x
                for k in range(2, order + 1):
                    p0, p1 = p1, ((2 * k - 1) * x * p1 - (k - 1) * p0) / k
                dp = order * (x * p1 - p0) / (x * x - 1)
                dx = p1 / dp
                x = x - dx
                if abs(dx) < mpfr(2) ** (-prec - 16):
                    break
            p0, p1 = one, x
            for k in range(2, order + 1):
                p0, p1 = p1, ((2 * k - 1) * x * p1 - (k - 1) * p0) / k
            dp = order * (x * p1 - p0) / (x * x - 1)
            nodes.append(x)
            weights.append(2 / ((1 - x * x) * dp * dp))
        return tuple(nodes), tuple(weights)


def theta_series(z: mpc, which: int, prec: int) -> mpc:
    """theta_2 or theta_3 at a point of H by direct q-series summation, with
    the truncation chosen from the current precision."""
    ctx = gmpy2.get_context()
    pi = gmpy2.const_pi()
    q = gmpy2.exp(1j * pi * z)
    aq = abs(q)
    cutoff = mpfr(2) ** (-prec - 16)
    if which == 3:
        acc = mpc(1)
        qsq = q * q
        power = mpc(1)
        odd = q
        n = 0
        while True:
            n += 1
            power = power * odd
            odd = odd * qsq
            term = 2 * power
            acc += term
            if abs(term) < cutoff:
                break
            if n > 100000:
                raise ArithmeticError("theta series failed to converge")
        return acc
    if which == 2:
        pref = 2 * gmpy2.exp(1j * pi * z / 4)
        acc = mpc(1)
        power = mpc(1)
        n = 0
        while True:
            n += 1
            power = power * q ** (2 * n)
            acc += power
            if abs(power) < cutoff:
                break
            if n > 100000:
                raise ArithmeticError("theta_2 series failed to converge")
        return pref * acc
    raise ValueError("which must be 2 or 3")


@dataclass(frozen=True)
class ContourSpec:
    """Panel layout for one integration contour; cusp_clip is where the path is
    truncated near the cusps +-1 (the integrands vanish there like
    exp(-3 pi / (4 d)) in the distance d)."""

    name: str
    cusp_clip: float = 0.012
    panel_max: float = 0.2


def _graded_breakpoints(lo: float, hi: float, panel_max: float) -> list[float]:
    """Breakpoints from lo to hi, geometric (ratio 2.5) while panels are short,
    then capped at panel_max."""
    pts = [lo]
    x = lo
    while x < hi:
        step = min(panel_max, max(1.5 * x, 1e-6))
        x = min(hi, x + step)
        pts.append(x)
    return pts


def _uniform_breakpoints(lo: float, hi: float, panel_max: float) -> list[float]:
    count = max(1, math.ceil((hi - lo) / panel_max))
    return [lo + (hi - lo) * k / count for k in range(count + 1)]


def contour_panels(spec: ContourSpec) -> list[tuple[str, float, float]]:
    """List of (kind, a, b) panels; kind 'arc' integrates over the angle of
    exp(i theta), kind 'vl'/'vr' over the height of the left/right vertical
    side, kind 'top' over the real part on Im = 1."""
    clip = spec.cusp_clip
    if spec.name == "semicircle":
        # grade toward both cusps, symmetric about pi/2
        half = _graded_breakpoints(clip, math.pi / 2, spec.panel_max)
        panels = []
        for a, b in zip(half, half[1:]):
            panels.append(("arc", a, b))
            panels.append(("arc", math.pi - b, math.pi - a))
        return panels
    if spec.name == "polygon":
        heights = _graded_breakpoints(clip, 1.0, 1.6 * spec.panel_max)
        panels = [("vl", a, b) for a, b in zip(heights, heights[1:])]
        xs = _uniform_breakpoints(0.0, 2.0, spec.panel_max)
        panels += [("top", a - 1.0, b - 1.0) for a, b in zip(xs, xs[1:])]
        panels += [("vr", a, b) for a, b in zip(heights, heights[1:])]
        return panels
    raise ValueError(f"unknown contour {spec.name!r}")


def contour_nodes(spec: ContourSpec, order: int, prec: int) -> tuple[list[mpc], list[mpc]]:
    """Quadrature nodes z_j and complex weights w_j such that
    integral f(z) dz over the (cusp-clipped) contour = sum_j w_j f(z_j),
    oriented from -1 to 1."""
    xs, ws = gauss_legendre(order, prec)
    pi = gmpy2.const_pi()
    nodes: list[mpc] = []
    weights: list[mpc] = []
    for kind, a, b in contour_panels(spec):
        mid = (mpfr(a) + mpfr(b)) / 2
        half = (mpfr(b) - mpfr(a)) / 2
        for x, w in zip(xs, ws):
            t = mid + half * x
            if kind == "arc":
                z = gmpy2.exp(1j * t)
                # path runs from angle pi to 0: dz = -i e^{i theta} d(theta)
                dz = -1j * z
            elif kind == "vl":
                z = mpc(-1, 0) + 1j * t
                dz = mpc(0, 1)
            elif kind == "vr":
                z = mpc(1, 0) + 1j * t
                dz = mpc(0, -1)  # traversed downward
            else:  # top
                z = t + mpc(0, 1)
                dz = mpc(1, 0)
            nodes.append(z)
            weights.append(w * half * dz)
    return nodes, weights


def kernel_coefficient_columns(
    z: mpc, n_max: int, theta_coeffs, h_cf, th_conv
) -> tuple[list[mpc], list[mpc]]:
    """phi_n(z) and phihat_n(z) for n = 0..n_max: the tau-Fourier coefficients
    of the two kernels at fixed z, by power-series division with exact integer
    series for theta(tau) and h(tau)."""
    t3 = theta_series(z, 3, gmpy2.get_context().precision)
    t2 = theta_series(z, 2, gmpy2.get_context().precision)
    lam = (t2 / t3) ** 4
    hz = 1 - 2 * lam
    t3cubed = t3 * t3 * t3
    out = []
    for sign in (+1, -1):
        # numerator theta(tau) (1 -+ h(z) h(tau)); denominator 4 (h(tau) -+ h(z))
        d0 = 4 * (1 - sign * hz)
        c: list[mpc] = []
        for n in range(n_max + 1):
            acc = mpc(theta_coeffs[n]) - sign * hz * th_conv[n]
            for m in range(1, n + 1):
                hm = h_cf[m]
                if hm:
                    acc -= 4 * hm * c[n - m]
            c.append(acc / d0)
        out.append([t3cubed * cn for cn in c])
    phi, phihat = out
    return phi, phihat


class BasisGrid:
    """Precomputed kernel-coefficient columns on one contour's quadrature grid.

    basis_sums(x) integrates phi_n(z) exp(pi i z x^2) over the contour for all
    n at once, reusing the cached columns across x values.
    """

    def __init__(self, spec: ContourSpec, n_max: int, prec: int, order: int | None = None):
        self.spec = spec
        self.n_max = n_max
        self.prec = prec
        order = order or gl_order_for(n_max)
        with gmpy2.context(precision=prec):
            self.nodes, self.weights = contour_nodes(spec, order, prec)
            tc = qseries.theta3_coeffs(n_max)
            hc = qseries.h_coeffs(n_max)
            uc = qseries.theta_h_coeffs(n_max)
            self.phi: list[list[mpc]] = []
            self.phihat: list[list[mpc]] = []
            for z in self.nodes:
                p, ph = kernel_coefficient_columns(z, n_max, tc, hc, uc)
                self.phi.append(p)
                self.phihat.append(ph)

    def basis_sums(self, x) -> tuple[list[mpc], list[mpc]]:
        """(a_n(x))_n and (ahat_n(x))_n as complex mp values (imaginary parts
        are quadrature noise diagnostics)."""
        with gmpy2.context(precision=self.prec):
            pi = gmpy2.const_pi()
            xsq = mpfr(x) * mpfr(x)
            acc_a = [mpc(0)] * (self.n_max + 1)
            acc_b = [mpc(0)] * (self.n_max + 1)
            for z, w, col_a, col_b in zip(self.nodes, self.weights, self.phi, self.phihat):
                e = w * gmpy2.exp(1j * pi * z * xsq)
                for n in range(self.n_max + 1):
                    acc_a[n] += col_a[n] * e
                    acc_b[n] += col_b[n] * e
            return acc_a, acc_b
