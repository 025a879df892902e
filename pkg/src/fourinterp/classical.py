"""Classical interpolation baselines: Lagrange, Hermite with derivative data,
and Shannon-Whittaker sinc reconstruction of band-limited samples."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np


@dataclass(frozen=True)
class NodeSet:
    """Strictly increasing interpolation nodes; derivative_orders[i] is the
    number of derivatives prescribed at node i in addition to the value (0 for
    plain Lagrange data)."""

    points: tuple[float, ...]
    derivative_orders: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.points) != len(self.derivative_orders):
            raise ValueError("points and derivative_orders must have equal length")
        if not self.points:
            raise ValueError("at least one node required")
        if any(b <= a for a, b in zip(self.points, self.points[1:])):
            raise ValueError("nodes must be strictly increasing")
        if any(d < 0 for d in self.derivative_orders):
            raise ValueError("derivative orders must be nonnegative")

    @property
    def total_conditions(self) -> int:
        return sum(d + 1 for d in self.derivative_orders)


def lagrange_nodes(points: Sequence[float]) -> NodeSet:
    pts = tuple(float(p) for p in points)
    return NodeSet(pts, (0,) * len(pts))


def lagrange_basis(nodes: NodeSet, k: int, x: float) -> float:
    """The k-th Lagrange cardinal polynomial ell_k(x): 1 at node k, 0 at the
    others.  Requires value-only data."""
    if any(d != 0 for d in nodes.derivative_orders):
        raise ValueError("lagrange_basis requires value-only nodes")
    if not 0 <= k < len(nodes.points):
        raise IndexError("basis index out of range")
    xk = nodes.points[k]
    prod = 1.0
    for j, xj in enumerate(nodes.points):
        if j != k:
            prod *= (x - xj) / (xk - xj)
    return prod


def hermite_interpolate(nodes: NodeSet, data: Sequence[Sequence[float]]) -> np.ndarray:
    """Coefficients (ascending powers) of the unique polynomial matching the
    prescribed values and derivatives.

    data[i] lists (f(x_i), f'(x_i), ..., f^(d_i)(x_i)) for node i.  Uses the
    Newton divided-difference tableau with repeated abscissae, where a
    difference over a zero span equals the derivative divided by the
    factorial of the repetition count.
    """
    if len(data) != len(nodes.points):
        raise ValueError("one data row per node required")
    zs: list[float] = []
    vals: list[list[float]] = []
    for x, d, row in zip(nodes.points, nodes.derivative_orders, data):
        if len(row) != d + 1:
            raise ValueError(f"node {x} needs {d + 1} data values, got {len(row)}")
        zs.extend([x] * (d + 1))
        vals.append([float(v) for v in row])
    m = len(zs)
    table = np.zeros((m, m))
    # column 0: function values, repeated per confluent node
    idx = 0
    for row in vals:
        for _ in row:
            table[idx, 0] = row[0]
            idx += 1
    node_start = {}
    idx = 0
    for i, row in enumerate(vals):
        node_start[i] = idx
        idx += len(row)
    for col in range(1, m):
        for r in range(m - col):
            if zs[r + col] == zs[r]:
                # confluent entry: derivative order `col` at the repeated node
                node_i = next(i for i, x in enumerate(nodes.points) if x == zs[r])
                table[r, col] = vals[node_i][col] / math.factorial(col)
            else:
                table[r, col] = (table[r + 1, col - 1] - table[r, col - 1]) / (
                    zs[r + col] - zs[r]
                )
    # expand the Newton form sum_k table[0,k] prod_{j<k} (x - z_j)
    coeffs = np.zeros(m)
    basis = np.zeros(m)
    basis[0] = 1.0
    deg = 0
    for k in range(m):
        coeffs[: deg + 1] += table[0, k] * basis[: deg + 1]
        if k < m - 1:
            shifted = np.zeros(m)
            shifted[1 : deg + 2] = basis[: deg + 1]
            basis = shifted - zs[k] * basis
            deg += 1
    return coeffs


def polyval_ascending(coeffs: np.ndarray, x: float) -> float:
    return float(np.polynomial.polynomial.polyval(x, coeffs))


def shannon_reconstruct(samples: Sequence[float], rate: float, x: float) -> float:
    """Whittaker interpolation sum_{n=-N..N} f(n/rate) sinc(rate*x - n) from
    samples listed in order n = -N, ..., N (odd length)."""
    m = len(samples)
    if m % 2 != 1:
        raise ValueError("samples must cover n = -N..N (odd length)")
    if rate <= 0:
        raise ValueError("rate must be positive")
    big_n = m // 2
    u = rate * x
    args = u - np.arange(-big_n, big_n + 1, dtype=float)
    return float(np.dot(np.asarray(samples, dtype=float), np.sinc(args)))


def sinc_product_partial(x: float, terms: int) -> float:
    """Partial product prod_{j=1..terms} (1 - x^2/j^2), converging to
    sinc(x) = sin(pi x)/(pi x)."""
    if terms < 0:
        raise ValueError("terms must be nonnegative")
    prod = 1.0
    for j in range(1, terms + 1):
        prod *= 1.0 - (x * x) / (j * j)
    return prod
