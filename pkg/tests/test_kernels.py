import math

import numpy as np
import pytest

from fourinterp import kernels, modular


def test_h_form_and_j_form_agree():
    rng = np.random.default_rng(3)
    for _ in range(30):
        tau = complex(rng.uniform(-0.8, 0.8), rng.uniform(0.9, 1.9))
        z = complex(rng.uniform(-0.8, 0.8), rng.uniform(0.6, 1.6))
        for kind in ("plain", "hat"):
            try:
                a = kernels.kernel(kind, tau, z)
                b = kernels.kernel_j_form(kind, tau, z)
            except kernels.NearPoleError:
                continue
            assert abs(a - b) <= 1e-9 * max(1.0, abs(a))


def test_kernel_at_h_zero():
    # h(i) = 0, so K(i, z) = -theta(i) theta(z)^3 / (4 h(z))
    z = 2j
    expected = -modular.theta3(1j) * modular.theta3(z) ** 3 / (4.0 * modular.h_function(z))
    assert abs(kernels.kernel("plain", 1j, z) - expected) < 1e-12


def test_tau_periodicity():
    tau, z = 0.3 + 1.5j, 0.1 + 0.8j
    d = kernels.kernel("plain", tau + 2, z) - kernels.kernel("plain", tau, z)
    assert abs(d) < 1e-10


def test_tau_inversion_law():
    tau, z = 0.2 + 1.4j, 0.5 + 0.9j
    lhs = kernels.kernel("plain", -1.0 / tau, z)
    rhs = -modular.sqrt_neg_iz(tau) * kernels.kernel("hat", tau, z)
    assert abs(lhs - rhs) < 1e-9


def test_z_transformations():
    for kind in ("plain", "hat"):
        periodic, inversion = kernels.verify_z_transformations(kind, 1.7j, 0.4 + 1.1j)
        assert periodic < 1e-9
        assert inversion < 1e-9


def test_self_dual_point():
    # z = i is fixed by z -> -1/z and (-iz)^{3/2} = 1 there, so K = Khat at z=i
    tau = 2.3j
    d = kernels.kernel("plain", tau, 1j) - kernels.kernel("hat", tau, 1j)
    assert abs(d) < 1e-10


def test_near_pole_detection():
    tau = 0.4 + 1.2j
    with pytest.raises(kernels.NearPoleError):
        kernels.kernel("plain", tau, tau)


def test_residue_at_tau():
    tau = 1.3j
    rep = kernels.residue_at("plain", tau, tau, 0.1)
    assert abs(rep.residue - 1.0 / (2j * math.pi)) < 1e-8
    rep2 = kernels.residue_at("plain", tau, tau, 0.05)
    assert abs(rep.residue - rep2.residue) < 1e-7


def test_residue_zero_cases():
    tau = 1.3j
    assert abs(kernels.residue_at("plain", tau, -1.0 / tau, 0.05).residue) < 1e-8
    assert abs(kernels.residue_at("hat", tau, tau, 0.1).residue) < 1e-8


def test_pole_locations_on_orbit():
    # off-orbit points are finite; orbit points make the denominator collapse
    tau = 0.3 + 1.2j
    rng = np.random.default_rng(11)
    orbit = modular.gamma_theta_orbit(tau, depth=3)
    for _ in range(20):
        z = complex(rng.uniform(-1, 1), rng.uniform(0.3, 2.0))
        if min(abs(z - p) for p in orbit) < 0.05:
            continue
        assert np.isfinite(abs(kernels.kernel("plain", tau, z)))
    assert abs(modular.h_function(tau) - modular.h_function(tau + 2)) < 1e-8


def test_fourier_coefficient_line_independence():
    z = 1.1j
    a = kernels.fourier_coefficient("plain", 0, z, line_height=2.5)
    b = kernels.fourier_coefficient("plain", 0, z, line_height=3.5)
    assert abs(a - b) < 1e-9


def test_fourier_coefficient_phi0():
    # the constant tau-coefficient of both kernels is theta(z)^3 / 4
    z = 1.1j
    expected = modular.theta3(z) ** 3 / 4.0
    for kind in ("plain", "hat"):
        c = kernels.fourier_coefficient(kind, 0, z)
        assert abs(c - expected) < 1e-10


def test_negative_coefficients_vanish():
    z = 1.1j
    for n in (-1, -2):
        c = kernels.fourier_coefficient("plain", n, z)
        assert abs(c) < 1e-8


def test_residue_report_validation():
    with pytest.raises(ValueError):
        kernels.ResidueReport(
            location=modular.UpperHalfPoint(0.0, 1.0),
            residue=0.0,
            circle_radius=-0.1,
            error_estimate=0.0,
        )


def test_unknown_kind_rejected():
    with pytest.raises(ValueError):
        kernels.kernel("weird", 1.5j, 0.8j)
