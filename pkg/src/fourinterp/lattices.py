"""Lattices, dual lattices, Poisson summation, and Cohn-Elkies linear
programming certificates for sphere packing bounds.

Short-vector enumeration is exact (Fincke-Pohst over a provably sufficient
integer box via the Cholesky factor of the Gram matrix).  Poisson sums use
separable products of one-dimensional transform pairs, which covers all the
Gaussian-type fixtures.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Optional, Sequence

import numpy as np

from .transforms import TransformPair


class EnumerationBudgetError(RuntimeError):
    """Short-vector enumeration would visit too many lattice points."""


@dataclass(frozen=True, eq=False)
class Lattice:
    """A full-rank lattice given by a basis matrix whose rows are the basis
    vectors."""

    basis: np.ndarray
    label: str = ""

    def __post_init__(self) -> None:
        b = np.asarray(self.basis, dtype=float)
        if b.ndim != 2 or b.shape[0] != b.shape[1] or b.shape[0] < 1:
            raise ValueError("basis must be a square matrix")
        if abs(np.linalg.det(b)) <= 1e-12:
            raise ValueError("basis is singular")
        object.__setattr__(self, "basis", b)

    @property
    def dimension(self) -> int:
        return self.basis.shape[0]

    @property
    def covolume(self) -> float:
        return abs(np.linalg.det(self.basis))

    def gram(self) -> np.ndarray:
        return self.basis @ self.basis.T


def dual_lattice(L: Lattice) -> Lattice:
    """The dual lattice, spanned by the dual basis with <v_i*, v_j> = delta_ij
    (rows of the inverse-transpose)."""
    return Lattice(np.linalg.inv(L.basis).T, label=f"{L.label}*" if L.label else "dual")


def short_vectors(L: Lattice, radius: float, budget: int = 5_000_000) -> list[np.ndarray]:
    """All lattice vectors of norm <= radius (including the origin), by
    depth-first enumeration over the Cholesky factorization of the Gram matrix.

    Deterministic output order: lexicographic in the integer coordinates."""
    if radius <= 0:
        raise ValueError("radius must be positive")
    n = L.dimension
    gram = L.gram()
    # R upper triangular with gram = R^T R; |x B|^2 = |R c|^2 for coords c
    R = np.linalg.cholesky(gram).T
    r2 = radius * radius
    found: list[tuple[tuple[int, ...], np.ndarray]] = []
    visited = 0
    coords = np.zeros(n, dtype=int)

    def descend(i: int, remaining: float, partial: np.ndarray) -> None:
        nonlocal visited
        # solve for coordinate i given fixed coordinates i+1..n-1
        rii = R[i, i]
        center = -partial[i] / rii
        half_width = math.sqrt(max(remaining, 0.0)) / rii
        lo = math.ceil(center - half_width - 1e-12)
        hi = math.floor(center + half_width + 1e-12)
        if hi < lo:
            return
        visited += hi - lo + 1
        if visited > budget:
            raise EnumerationBudgetError(
                f"enumeration exceeded {budget} nodes at radius {radius}"
            )
        if i == 0:
            # vectorized innermost level: all candidate c_0 at once
            cis = np.arange(lo, hi + 1)
            rest = coords[1:] @ L.basis[1:] if n > 1 else np.zeros(n)
            vs = rest + np.outer(cis, L.basis[0])
            norms = np.einsum("ij,ij->i", vs, vs)
            tail = tuple(int(c) for c in coords[1:])
            for ci, v, nrm in zip(cis, vs, norms):
                if nrm <= r2 + 1e-9:
                    found.append(((int(ci),) + tail, v))
            return
        for ci in range(lo, hi + 1):
            t = partial[i] + ci * rii
            used = t * t
            if used > remaining + 1e-9:
                continue
            coords[i] = ci
            descend(i - 1, remaining - used, partial + ci * R[:, i])
        coords[i] = 0

    descend(n - 1, r2, np.zeros(n))
    found.sort(key=lambda cv: cv[0])
    return [v for _, v in found]


def minimal_norm(L: Lattice) -> float:
    """Length of the shortest nonzero vector."""
    guess = 0.5 * L.covolume ** (1.0 / L.dimension)
    for _ in range(12):
        vecs = [v for v in short_vectors(L, guess) if float(v @ v) > 1e-18]
        if vecs:
            return min(math.sqrt(float(v @ v)) for v in vecs)
        guess *= 2.0
    raise EnumerationBudgetError("no nonzero vector found within the search budget")


# ---------------------------------------------------------------------------
# fixtures


def integer_lattice(n: int) -> Lattice:
    return Lattice(np.eye(n), label=f"z{n}")


def hexagonal_lattice() -> Lattice:
    return Lattice(np.array([[1.0, 0.0], [0.5, math.sqrt(3.0) / 2.0]]), label="hex")


def e8_lattice() -> Lattice:
    """The E8 root lattice in the even coordinate system: integer vectors or
    half-integer vectors (all coordinates simultaneously), with even
    coordinate sum."""
    b = np.zeros((8, 8))
    for i in range(6):
        b[i, i] = 1.0
        b[i, i + 1] = -1.0
    b[6, 5] = 1.0
    b[6, 6] = 1.0
    b[7, :] = -0.5
    return Lattice(b, label="e8")


_FIXTURES: dict[str, Callable[[], Lattice]] = {
    "z1": lambda: integer_lattice(1),
    "z2": lambda: integer_lattice(2),
    "hex": hexagonal_lattice,
    "e8": e8_lattice,
}


def lattice_by_label(label: str) -> Lattice:
    try:
        return _FIXTURES[label]()
    except KeyError:
        raise KeyError(f"unknown lattice fixture {label!r}") from None


def load_lattice(path: str, label: str = "") -> Lattice:
    """Plain-text format: first line the dimension n, then n rows of n
    decimal numbers (each row one basis vector)."""
    with open(path) as fh:
        tokens = fh.read().split()
    if not tokens:
        raise ValueError(f"empty lattice file {path}")
    n = int(tokens[0])
    vals = [float(t) for t in tokens[1:]]
    if len(vals) != n * n:
        raise ValueError(f"expected {n}x{n} entries in {path}, got {len(vals)}")
    return Lattice(np.array(vals).reshape(n, n), label=label or path)


# ---------------------------------------------------------------------------
# Poisson summation


@dataclass(frozen=True)
class PoissonReport:
    lhs: complex
    rhs: complex
    residual: float
    lhs_tail_bound: float
    rhs_tail_bound: float
    lhs_terms: int
    rhs_terms: int


def _separable_sum(pair_value, vectors: Sequence[np.ndarray]):
    cache: dict[float, complex] = {}
    total = 0.0 + 0.0j
    for v in vectors:
        term = 1.0 + 0.0j
        for coord in v:
            c = float(coord)
            val = cache.get(c)
            if val is None:
                val = cache[c] = pair_value(c)
            term *= val
        total += term
    return total


def poisson_check(
    f: TransformPair,
    L: Lattice,
    radius_budget: float,
    shell: float = 1.0,
) -> PoissonReport:
    """Verify sum_{x in L} prod_i f(x_i) = covolume^{-1} sum_{y in L*}
    prod_i fhat(y_i), truncating both sums at the given vector-norm radius.

    The tail bound for each side is twice the contribution of the shell
    (radius, radius + shell], an empirical proxy consistent with Gaussian
    decay; narrow the shell in high dimensions where enumeration is the cost.
    """
    dual = dual_lattice(L)
    primal = short_vectors(L, radius_budget + shell)
    recip = short_vectors(dual, radius_budget + shell)

    def split(vectors):
        inner = [v for v in vectors if float(v @ v) <= radius_budget * radius_budget]
        shell = [v for v in vectors if float(v @ v) > radius_budget * radius_budget]
        return inner, shell

    p_in, p_shell = split(primal)
    r_in, r_shell = split(recip)
    lhs = _separable_sum(lambda c: complex(f.f(c)), p_in)
    rhs = _separable_sum(lambda c: complex(f.f_hat(c)), r_in) / L.covolume
    lhs_tail = 2.0 * abs(_separable_sum(lambda c: complex(f.f(c)), p_shell))
    rhs_tail = 2.0 * abs(_separable_sum(lambda c: complex(f.f_hat(c)), r_shell)) / L.covolume
    return PoissonReport(
        lhs=lhs,
        rhs=rhs,
        residual=abs(lhs - rhs),
        lhs_tail_bound=lhs_tail,
        rhs_tail_bound=rhs_tail,
        lhs_terms=len(p_in),
        rhs_terms=len(r_in),
    )


# ---------------------------------------------------------------------------
# sphere packing arithmetic


def ball_volume(n: int, radius: float) -> float:
    """Volume of the n-ball: pi^(n/2) radius^n / Gamma(n/2 + 1)."""
    if n < 1:
        raise ValueError("dimension must be positive")
    if radius <= 0:
        raise ValueError("radius must be positive")
    return math.pi ** (n / 2.0) * radius ** n / math.gamma(n / 2.0 + 1.0)


def lattice_packing_density(L: Lattice) -> float:
    """vol(B_{r/2}) / covolume with r the minimal vector length: one sphere of
    radius r/2 per fundamental cell."""
    r = minimal_norm(L)
    return ball_volume(L.dimension, r / 2.0) / L.covolume


# ---------------------------------------------------------------------------
# LP certificates


@dataclass(frozen=True)
class LPCertificate:
    """A sampled Cohn-Elkies certificate: f(x) <= 0 for |x| >= r, fhat >= 0
    everywhere, f(0) = fhat(0) = 1; all radial."""

    f: Callable[[float], float]
    f_hat: Callable[[float], float]
    r: float
    dimension: int
    sign_grid: tuple[float, ...]
    positivity_grid: tuple[float, ...]

    def __post_init__(self) -> None:
        if self.r <= 0 or self.dimension < 1:
            raise ValueError("invalid certificate geometry")
        if abs(self.f(0.0) - 1.0) > 1e-9 or abs(self.f_hat(0.0) - 1.0) > 1e-9:
            raise ValueError("certificate normalization f(0) = fhat(0) = 1 violated")


@dataclass(frozen=True)
class LPCheckResult:
    passed: bool
    bound: Optional[float]
    condition: Optional[int] = None
    radius: Optional[float] = None
    value: Optional[float] = None


def lp_certificate_check(c: LPCertificate, slack: float = 1e-9) -> LPCheckResult:
    """Sampled check of the Cohn-Elkies conditions; on success the packing
    density in dimension n is at most vol(B^n_{r/2}).  This is a grid check,
    not a proof."""
    for s in c.sign_grid:
        if s < c.r:
            continue
        v = c.f(s)
        if v > slack:
            return LPCheckResult(False, None, condition=1, radius=s, value=v)
    for s in c.positivity_grid:
        v = c.f_hat(s)
        if v < -slack:
            return LPCheckResult(False, None, condition=2, radius=s, value=v)
    return LPCheckResult(True, ball_volume(c.dimension, c.r / 2.0))


@dataclass(frozen=True)
class SharpnessGap:
    dropped_primal: float
    dropped_dual: float
    covolume_slack: float

    @property
    def total(self) -> float:
        return self.dropped_primal + self.dropped_dual + abs(self.covolume_slack)


def lp_bound_sharpness_gap(L: Lattice, c: LPCertificate, radius: float = 6.0) -> SharpnessGap:
    """The Poisson terms dropped in the LP bound proof: sum of |f| over nonzero
    lattice vectors, sum of fhat over nonzero dual vectors, and the slack
    1 - 1/covolume; the bound is sharp iff all vanish."""
    if L.dimension != c.dimension:
        raise ValueError("lattice and certificate dimensions differ")
    dual = dual_lattice(L)
    dropped_primal = math.fsum(
        abs(c.f(math.sqrt(float(v @ v))))
        for v in short_vectors(L, radius)
        if float(v @ v) > 1e-18
    )
    dropped_dual = math.fsum(
        c.f_hat(math.sqrt(float(v @ v)))
        for v in short_vectors(dual, radius)
        if float(v @ v) > 1e-18
    )
    return SharpnessGap(
        dropped_primal=dropped_primal,
        dropped_dual=dropped_dual,
        covolume_slack=1.0 - 1.0 / L.covolume,
    )


def triangle_certificate(grid_step: float = 1e-3, grid_max: float = 8.0) -> LPCertificate:
    """The n = 1 sharp certificate: the triangle (1-|x|)+ with transform
    sinc^2; yields bound vol(B^1_{1/2}) = 1."""
    def tri(s: float) -> float:
        return max(0.0, 1.0 - abs(s))

    def sinc_sq(s: float) -> float:
        if s == 0.0:
            return 1.0
        u = math.sin(math.pi * s) / (math.pi * s)
        return u * u

    count = int(round(grid_max / grid_step))
    grid = tuple(k * grid_step for k in range(count + 1))
    return LPCertificate(
        f=tri,
        f_hat=sinc_sq,
        r=1.0,
        dimension=1,
        sign_grid=grid,
        positivity_grid=grid,
    )
