import math

import numpy as np
import pytest

from fourinterp import modular

from oracles import THETA_AT_I, lambda_mp, theta2_mp, theta3_mp, theta4_mp

SAMPLES = [1.0j, 0.3 + 0.7j, -1.2 + 2.5j, 0.05 + 0.21j, 1.999 + 0.4j]


def test_theta3_against_mpmath():
    for z in SAMPLES:
        assert abs(modular.theta3(z) - theta3_mp(z)) < 1e-13


def test_theta2_theta4_against_mpmath():
    for z in SAMPLES:
        assert abs(modular.theta2(z) - theta2_mp(z)) < 1e-13
        assert abs(modular.theta4(z) - theta4_mp(z)) < 1e-13


def test_theta_at_i_frozen_constant():
    assert abs(modular.theta3(1j) - THETA_AT_I) < 1e-13


def test_jacobi_identity():
    # theta_2^4 + theta_4^4 = theta_3^4
    for z in SAMPLES:
        lhs = modular.theta2(z) ** 4 + modular.theta4(z) ** 4
        assert abs(lhs - modular.theta3(z) ** 4) < 1e-12


def test_theta_periodicity_and_inversion():
    rng = np.random.default_rng(7)
    for _ in range(50):
        z = complex(rng.uniform(-2, 2), rng.uniform(0.2, 4.0))
        t = modular.theta3(z)
        assert abs(modular.theta3(z + 2) - t) < 1e-13 * abs(t)
        assert abs(modular.theta3(-1 / z) - modular.sqrt_neg_iz(z) * t) < 1e-12


def test_lambda_values_and_laws():
    assert abs(modular.lambda_modular(1j) - 0.5) < 1e-14
    for z in SAMPLES:
        lam = modular.lambda_modular(z)
        assert abs(lam - lambda_mp(z)) < 1e-13
        assert abs(modular.lambda_modular(-1 / z) - (1 - lam)) < 1e-12
        assert abs(modular.lambda_modular(z + 2) - lam) < 1e-13


def test_h_antisymmetry_and_J_invariance():
    for z in SAMPLES:
        assert abs(modular.h_function(-1 / z) + modular.h_function(z)) < 1e-12
        assert abs(modular.hauptmodul_J(-1 / z) - modular.hauptmodul_J(z)) < 1e-13
    assert abs(modular.h_function(1j)) < 1e-14  # lambda(i) = 1/2


def test_sqrt_neg_iz_branch():
    assert abs(modular.sqrt_neg_iz(1j) - 1.0) < 1e-15
    assert abs(modular.sqrt_neg_iz(4j) - 2.0) < 1e-15
    # cocycle: sqrt(-i w) continuous, positive real part on H
    for z in SAMPLES:
        assert modular.sqrt_neg_iz(z).real > 0


def test_im_floor_refusal():
    with pytest.raises(ValueError):
        modular.theta3(0.5 + 0.01j)
    # explicit override below the default floor still works
    val = modular.theta3(0.5 + 0.01j, im_floor=0.0)
    assert np.isfinite(val.real)


def test_upper_half_point_validation():
    with pytest.raises(ValueError):
        modular.UpperHalfPoint(0.0, -1.0)
    with pytest.raises(ValueError):
        modular.as_upper_half(1.0 - 0.2j)
    p = modular.UpperHalfPoint.of(0.5 + 2.0j)
    assert complex(p) == 0.5 + 2.0j


def test_series_tolerance_validation():
    with pytest.raises(ValueError):
        modular.SeriesTolerance(abs_tol=0.0)
    with pytest.raises(ValueError):
        modular.SeriesTolerance(max_terms=2)


def test_tolerance_unreachable_near_axis():
    with pytest.raises(modular.ToleranceUnreachableError):
        modular.theta3(0.001j, modular.SeriesTolerance(max_terms=8), im_floor=0.0)


def test_region_S():
    assert modular.in_region_S(0.0 + 1.5j)
    assert modular.in_region_S(1.0 + 0.2j)
    assert not modular.in_region_S(0.0 + 0.9j)
    assert not modular.in_region_S(2.0 + 0.5j)


def test_gamma_theta_orbit():
    pts = modular.gamma_theta_orbit(1.5j, depth=2)
    assert any(abs(p - 1.5j) < 1e-12 for p in pts)
    assert any(abs(p - (2 + 1.5j)) < 1e-12 for p in pts)
    assert any(abs(p - (-1 / 1.5j)) < 1e-12 for p in pts)
    # orbit points all lie in H
    assert all(p.imag > 0 for p in pts)
    # deeper orbit is a superset
    deeper = modular.gamma_theta_orbit(1.5j, depth=3)
    assert len(deeper) > len(pts)
