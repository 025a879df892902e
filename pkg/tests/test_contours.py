import cmath
import math

import pytest

from fourinterp import contours
from fourinterp._quad import (
    NonfiniteIntegrandError,
    ToleranceUnreachableError,
    adaptive_gl,
)


def test_adaptive_gl_polynomial():
    res = adaptive_gl(lambda x: x * x, 0.0, 1.0, 1e-12)
    assert abs(res.value - 1.0 / 3.0) < 1e-14


def test_adaptive_gl_oscillatory():
    res = adaptive_gl(lambda x: math.cos(40.0 * x), 0.0, 1.0, 1e-12)
    assert abs(res.value - math.sin(40.0) / 40.0) < 1e-11


def test_adaptive_gl_kink():
    # C0 kink forces the panels to the refinement floor; total must still meet
    # the budget
    res = adaptive_gl(lambda x: abs(x - 1.0 / 3.0), 0.0, 1.0, 1e-8)
    exact = (1.0 / 3.0) ** 2 / 2.0 + (2.0 / 3.0) ** 2 / 2.0
    assert abs(res.value - exact) < 1e-8


def test_adaptive_gl_nonfinite():
    with pytest.raises(NonfiniteIntegrandError):
        adaptive_gl(lambda x: math.inf if x > 0.5 else 1.0, 0.0, 1.0, 1e-10)


def test_adaptive_gl_unreachable():
    with pytest.raises(ToleranceUnreachableError):
        adaptive_gl(lambda x: math.sqrt(abs(x)), -1.0, 1.0, 1e-16, min_panel=0.2)


def test_contour_connectivity_enforced():
    with pytest.raises(ValueError):
        contours.Contour(
            (
                contours.LineSegment(0 + 1j, 1 + 1j),
                contours.LineSegment(2 + 1j, 3 + 1j),
            )
        )


def test_contour_stays_in_upper_half_plane():
    with pytest.raises(ValueError):
        contours.Contour((contours.LineSegment(-1 - 1j, 1 - 1j),))


def test_semicircle_and_polygon_endpoints():
    sc = contours.semicircle()
    assert abs(sc.start + 1.0) < 1e-15 and abs(sc.end - 1.0) < 1e-15
    pg = contours.polygon_contour()
    assert abs(pg.start + 1.0) < 1e-15 and abs(pg.end - 1.0) < 1e-15


def test_reversed_contour():
    sc = contours.semicircle()
    rev = sc.reversed()
    assert abs(rev.start - sc.end) < 1e-15
    res = contours.integrate(lambda z: z * z, sc)
    res_rev = contours.integrate(lambda z: z * z, rev)
    assert abs(res.value + res_rev.value) < 1e-12


def test_cauchy_independence_semicircle_vs_polygon():
    # entire integrand: same endpoints -> same integral
    f = lambda z: cmath.exp(1j * math.pi * z)
    a = contours.integrate(f, contours.semicircle(), 1e-12)
    b = contours.integrate(f, contours.polygon_contour(), 1e-12)
    assert abs(a.value - b.value) < 1e-11


def test_circle_residue():
    tau = 0.3 + 1.1j
    loop = contours.circle_around(tau, 0.2)
    res = contours.integrate(lambda z: 1.0 / (z - tau), loop, 1e-12)
    assert abs(res.value - 2j * math.pi) < 1e-11


def test_circle_around_validation():
    with pytest.raises(ValueError):
        contours.circle_around(0.5j, 0.6)  # dips below the real axis


def test_clipped_contours():
    c = contours.clipped_semicircle(0.05)
    assert c.start.imag > 0 and c.end.imag > 0
    p = contours.clipped_polygon(0.1)
    assert abs(p.start - (-1 + 0.1j)) < 1e-15
    with pytest.raises(ValueError):
        contours.clipped_semicircle(2.0)
    with pytest.raises(ValueError):
        contours.clipped_polygon(0.0)


def test_pole_avoiding_contour_clearance():
    tau = 0.92j
    below = contours.pole_avoiding_contour(tau, "below_tau")
    assert below.min_distance_to(tau) > 0.05
    # far poles leave the plain semicircle in place
    assert contours.pole_avoiding_contour(2.5j, "below_tau") == contours.semicircle()


def test_pole_avoiding_contour_residue():
    # difference between the path below the pole and the path above it picks
    # up the full residue
    tau = 0.92j
    below = contours.pole_avoiding_contour(tau, "below_tau")
    above = contours.semicircle()
    f = lambda z: 1.0 / (z - tau)
    d = (
        contours.integrate(f, below, 1e-12).value
        - contours.integrate(f, above, 1e-12).value
    )
    assert abs(d - 2j * math.pi) < 1e-10


def test_pole_avoiding_contour_cusp_rejection():
    with pytest.raises(contours.CannotDeformError):
        contours.pole_avoiding_contour(-0.99 + 0.03j, "below_tau")


def test_quadrature_result_validation():
    with pytest.raises(ValueError):
        contours.QuadratureResult(0.0, -1.0, 10)
