"""Oriented paths in the upper half-plane and contour integration.

A contour is a connected chain of straight segments and circular arcs whose
interiors stay strictly inside the upper half-plane; endpoints on the real
axis (the cusps +-1 of the semicircle) are allowed as limits.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Callable, Union

from . import _quad
from ._quad import NonfiniteIntegrandError, ToleranceUnreachableError
from .modular import as_upper_half

__all__ = [
    "LineSegment",
    "ArcSegment",
    "Contour",
    "QuadratureResult",
    "CannotDeformError",
    "NonfiniteIntegrandError",
    "ToleranceUnreachableError",
    "semicircle",
    "polygon_contour",
    "horizontal_line",
    "circle_around",
    "pole_avoiding_contour",
    "integrate",
]


class CannotDeformError(ValueError):
    pass


@dataclass(frozen=True)
class LineSegment:
    start: complex
    end: complex

    def point(self, t: float) -> complex:
        return self.start + t * (self.end - self.start)

    def derivative(self, t: float) -> complex:
        return self.end - self.start


@dataclass(frozen=True)
class ArcSegment:
    center: complex
    radius: float
    angle_start: float
    angle_end: float

    def point(self, t: float) -> complex:
        a = self.angle_start + t * (self.angle_end - self.angle_start)
        return self.center + self.radius * cmath.exp(1j * a)

    def derivative(self, t: float) -> complex:
        a = self.angle_start + t * (self.angle_end - self.angle_start)
        return 1j * (self.angle_end - self.angle_start) * self.radius * cmath.exp(1j * a)

    @property
    def start(self) -> complex:
        return self.point(0.0)

    @property
    def end(self) -> complex:
        return self.point(1.0)


Segment = Union[LineSegment, ArcSegment]


@dataclass(frozen=True)
class Contour:
    segments: tuple[Segment, ...]

    def __post_init__(self) -> None:
        if not self.segments:
            raise ValueError("contour needs at least one segment")
        for prev, nxt in zip(self.segments, self.segments[1:]):
            if abs(prev.end - nxt.start) > 1e-12:
                raise ValueError("contour segments are not connected end-to-start")
        for seg in self.segments:
            # interior points must be in H; endpoints may touch the real axis
            for t in (0.25, 0.5, 0.75):
                if seg.point(t).imag <= 0.0:
                    raise ValueError("contour leaves the upper half-plane")

    @property
    def start(self) -> complex:
        return self.segments[0].start

    @property
    def end(self) -> complex:
        return self.segments[-1].end

    def reversed(self) -> "Contour":
        rev: list[Segment] = []
        for seg in reversed(self.segments):
            if isinstance(seg, LineSegment):
                rev.append(LineSegment(seg.end, seg.start))
            else:
                rev.append(ArcSegment(seg.center, seg.radius, seg.angle_end, seg.angle_start))
        return Contour(tuple(rev))

    def min_distance_to(self, p: complex, samples_per_segment: int = 200) -> float:
        d = math.inf
        for seg in self.segments:
            for k in range(samples_per_segment + 1):
                d = min(d, abs(seg.point(k / samples_per_segment) - p))
        return d


@dataclass(frozen=True)
class QuadratureResult:
    value: complex
    error_estimate: float
    nodes_used: int

    def __post_init__(self) -> None:
        if self.error_estimate < 0 or self.nodes_used <= 0:
            raise ValueError("invalid quadrature result")


def semicircle() -> Contour:
    """The unit semicircle from -1 to 1 through i."""
    return Contour((ArcSegment(0.0 + 0.0j, 1.0, math.pi, 0.0),))


def polygon_contour() -> Contour:
    """The polygonal deformation of the semicircle: -1 -> -1+i -> 1+i -> 1."""
    return Contour(
        (
            LineSegment(-1.0 + 0.0j, -1.0 + 1.0j),
            LineSegment(-1.0 + 1.0j, 1.0 + 1.0j),
            LineSegment(1.0 + 1.0j, 1.0 + 0.0j),
        )
    )


def horizontal_line(height: float, from_re: float, to_re: float) -> Contour:
    if not height > 0:
        raise ValueError("height must be positive")
    return Contour((LineSegment(complex(from_re, height), complex(to_re, height)),))


def circle_around(center, radius: float) -> Contour:
    """Positively oriented circle, required to stay inside the upper half-plane."""
    c = as_upper_half(center)
    if not 0 < radius < c.imag:
        raise ValueError(f"radius {radius} does not keep the circle around {c} inside H")
    return Contour((ArcSegment(c, radius, 0.0, 2.0 * math.pi),))


def clipped_semicircle(cusp_angle: float) -> Contour:
    """Unit semicircle with small arcs of angular width cusp_angle removed at
    both cusps; used for integrands that vanish at the cusps."""
    if not 0 < cusp_angle < math.pi / 4:
        raise ValueError("cusp_angle out of range")
    return Contour((ArcSegment(0.0 + 0.0j, 1.0, math.pi - cusp_angle, cusp_angle),))


def clipped_polygon(cusp_height: float) -> Contour:
    """Fig.-5 style polygon with the vertical sides truncated at Im = cusp_height."""
    if not 0 < cusp_height < 1:
        raise ValueError("cusp_height out of range")
    return Contour(
        (
            LineSegment(complex(-1.0, cusp_height), -1.0 + 1.0j),
            LineSegment(-1.0 + 1.0j, 1.0 + 1.0j),
            LineSegment(1.0 + 1.0j, complex(1.0, cusp_height)),
        )
    )


_CLEARANCE = 0.05


def pole_avoiding_contour(tau, which: str = "below_tau") -> Contour:
    """A deformation of the semicircle that avoids a pole near the contour.

    which = "below_tau": path from -1 to 1 passing below tau (the pole at z=tau
    stays above the path).  which = "above_neg_inv_tau": path staying above the
    point -1/tau.  If the relevant point is not near the semicircle, the plain
    semicircle is returned.
    """
    t = as_upper_half(tau)
    if which == "below_tau":
        p = t
        side = "inside"
    elif which == "above_neg_inv_tau":
        p = -1.0 / t
        side = "outside"
    else:
        raise ValueError(f"unknown deformation side {which!r}")

    r = abs(p)
    if not (0.7 <= abs(t) <= 1.3 and abs(t.real) < 1.0):
        return semicircle()
    if abs(p - 1.0) < _CLEARANCE or abs(p + 1.0) < _CLEARANCE:
        raise CannotDeformError(f"pole {p} is too close to a cusp to deform around")

    # the semicircle itself already passes on the requested side only when the
    # point is at least one clearance away on the other side of the arc
    if side == "inside" and r >= 1.0 + _CLEARANCE:
        return semicircle()
    if side == "outside" and r <= 1.0 - _CLEARANCE:
        return semicircle()

    phi = cmath.phase(p)
    if side == "inside":
        rho = r - 1.4 * _CLEARANCE
    else:
        rho = r + 1.4 * _CLEARANCE
    # angular window of the radial detour, kept away from the real axis
    delta = 0.35
    lo = max(phi - delta, 0.08)
    hi = min(phi + delta, math.pi - 0.08)
    if not lo < phi < hi:
        raise CannotDeformError(f"pole {p} is too close to the real axis to deform around")
    outer_hi = cmath.exp(1j * hi)
    outer_lo = cmath.exp(1j * lo)
    return Contour(
        (
            ArcSegment(0.0 + 0.0j, 1.0, math.pi, hi),
            LineSegment(outer_hi, rho * outer_hi),
            ArcSegment(0.0 + 0.0j, rho, hi, lo),
            LineSegment(rho * outer_lo, outer_lo),
            ArcSegment(0.0 + 0.0j, 1.0, lo, 0.0),
        )
    )


def integrate(
    f: Callable[[complex], complex],
    path: Contour,
    abs_tol: float = 1e-10,
    min_panel: float = 1e-4,
) -> QuadratureResult:
    """Integrate f along the contour with adaptive Gauss-Legendre panels.

    The result's error_estimate is the accumulated order-16-vs-32 discrepancy;
    a ToleranceUnreachableError is raised if a panel cannot meet its budget at
    the refinement floor, NonfiniteIntegrandError if f blows up at a node.
    """
    per_segment = abs_tol / len(path.segments)
    value = 0.0 + 0.0j
    err = 0.0
    nodes = 0
    for seg in path.segments:
        res = _quad.adaptive_gl(
            lambda t, s=seg: f(s.point(t)) * s.derivative(t),
            0.0,
            1.0,
            per_segment,
            min_panel=min_panel,
        )
        value += res.value
        err += res.error_estimate
        nodes += res.nodes_used
    return QuadratureResult(value, err, nodes)
