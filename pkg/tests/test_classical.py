import math

import numpy as np
import pytest

from fourinterp import classical

from oracles import SINC_SQ_AT_HALF


def test_nodeset_validation():
    with pytest.raises(ValueError):
        classical.NodeSet((1.0, 0.0), (0, 0))
    with pytest.raises(ValueError):
        classical.NodeSet((0.0, 1.0), (0,))
    with pytest.raises(ValueError):
        classical.NodeSet((0.0, 1.0), (0, -1))
    ns = classical.NodeSet((0.0, 1.0), (1, 0))
    assert ns.total_conditions == 3


def test_lagrange_cardinal_property():
    ns = classical.lagrange_nodes([0.0, 1.0, 2.5, 4.0])
    for k, xk in enumerate(ns.points):
        for j, xj in enumerate(ns.points):
            expected = 1.0 if j == k else 0.0
            assert abs(classical.lagrange_basis(ns, k, xj) - expected) < 1e-14


def test_lagrange_partition_of_unity():
    ns = classical.lagrange_nodes([-1.0, 0.3, 1.1, 2.0, 2.7])
    for x in np.linspace(-2, 4, 31):
        s = sum(classical.lagrange_basis(ns, k, x) for k in range(5))
        assert abs(s - 1.0) < 1e-12


def test_lagrange_basis_requires_value_only_nodes():
    ns = classical.NodeSet((0.0, 1.0), (1, 0))
    with pytest.raises(ValueError):
        classical.lagrange_basis(ns, 0, 0.5)


def test_hermite_reproduces_cubic():
    # f(x) = x^3 from values and derivatives at 0 and 1
    ns = classical.NodeSet((0.0, 1.0), (1, 1))
    coeffs = classical.hermite_interpolate(ns, [[0.0, 0.0], [1.0, 3.0]])
    assert np.allclose(coeffs, [0.0, 0.0, 0.0, 1.0], atol=1e-13)


def test_hermite_matches_derivative_data():
    # interpolate sin with two derivatives at 0 and a value at 1.5
    ns = classical.NodeSet((0.0, 1.5), (2, 0))
    coeffs = classical.hermite_interpolate(ns, [[0.0, 1.0, 0.0], [math.sin(1.5)]])
    p = np.polynomial.polynomial.Polynomial(coeffs)
    assert abs(p(0.0)) < 1e-14
    assert abs(p.deriv()(0.0) - 1.0) < 1e-13
    assert abs(p.deriv(2)(0.0)) < 1e-13
    assert abs(p(1.5) - math.sin(1.5)) < 1e-13


def test_hermite_with_value_only_data_equals_lagrange():
    ns = classical.lagrange_nodes([0.0, 0.5, 1.25, 2.0])
    f = lambda x: 1.0 + x - 0.3 * x**2 + 0.07 * x**3
    coeffs = classical.hermite_interpolate(ns, [[f(p)] for p in ns.points])
    for x in (0.2, 0.9, 1.8):
        lag = sum(
            f(p) * classical.lagrange_basis(ns, k, x) for k, p in enumerate(ns.points)
        )
        assert abs(classical.polyval_ascending(coeffs, x) - lag) < 1e-12


def test_hermite_rejects_wrong_data_shape():
    ns = classical.NodeSet((0.0, 1.0), (1, 0))
    with pytest.raises(ValueError):
        classical.hermite_interpolate(ns, [[0.0], [1.0]])


def test_shannon_exact_at_nodes():
    rng = np.random.default_rng(5)
    samples = rng.standard_normal(21)
    for n in range(-10, 11):
        v = classical.shannon_reconstruct(samples, 2.0, n / 2.0)
        assert abs(v - samples[n + 10]) < 1e-12


def test_shannon_band_limited_reconstruction():
    # f = sinc^2 is band-limited to [-1, 1]; sampling at rate 2 reconstructs it
    big_n = 60
    samples = [float(np.sinc(n / 2.0)) ** 2 for n in range(-big_n, big_n + 1)]
    for x in (0.13, 0.77, 1.9, 2.41):
        v = classical.shannon_reconstruct(samples, 2.0, x)
        assert abs(v - float(np.sinc(x)) ** 2) < 1e-4


def test_shannon_validation():
    with pytest.raises(ValueError):
        classical.shannon_reconstruct([1.0, 2.0], 1.0, 0.0)
    with pytest.raises(ValueError):
        classical.shannon_reconstruct([1.0], 0.0, 0.0)


def test_sinc_product():
    assert classical.sinc_product_partial(0.0, 50) == 1.0
    assert abs(classical.sinc_product_partial(0.5, 10_000) - SINC_SQ_AT_HALF**0.5) < 1e-4
    # converges to sin(pi x)/(pi x)
    x = 0.3
    target = math.sin(math.pi * x) / (math.pi * x)
    assert abs(classical.sinc_product_partial(x, 200_000) - target) < 1e-5
    # exact zero once the product includes the vanishing factor
    assert classical.sinc_product_partial(2.0, 5) == 0.0
    with pytest.raises(ValueError):
        classical.sinc_product_partial(1.0, -1)
