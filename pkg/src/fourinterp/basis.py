"""The Fourier interpolation basis a_n, a-hat_n: contour-integral construction,
generating functions on region S, the truncated interpolation formula, and the
residue mechanism behind the Gaussian functional equation.

Two evaluation routes coexist.  The double-precision route (a0, basis_value,
generating_F) computes everything directly from kernel contour integrals and is
good to roughly 1e-6 for small n.  The table route (BasisEvaluator) evaluates
the kernel coefficient functions once on fixed high-precision quadrature grids
(see highprec) and then gets every a_n(x) by a weighted sum, which is the only
way to reach large n: extracting the n-th coefficient amplifies noise like
exp(pi n), far beyond double precision.
"""

from __future__ import annotations

import cmath
import csv
import json
import math
from dataclasses import dataclass
from typing import Optional

import gmpy2
import numpy as np

from . import contours, highprec, kernels, qseries
from .contours import ArcSegment, Contour
from .modular import as_upper_half, in_region_S, theta3
from .qseries import theta_cubed_coefficients  # noqa: F401  (re-export)
from .transforms import TransformPair

DEFAULT_CUSP_CLIP = 0.06  # double-precision contour clip near the cusps +-1
CONTOUR_SPLIT_X = 1.5  # semicircle for x below, polygon above
DEFAULT_X_CAP = 3.0
CROSS_CONTOUR_ABORT = 1e-8  # semicircle/polygon disagreement => abort
IMAG_PART_LIMIT = 1e-8


class OutsideRegionSError(ValueError):
    """The direct kernel integral for F is only defined on region S."""


def _z_contour(x: float) -> Contour:
    """Contour policy: unit semicircle for x <= 1.5, the polygonal deformation
    for larger x (the top edge gains the decay factor exp(-pi x^2)).  Both are
    clipped near the cusps, where theta^3 vanishes like exp(-3 pi / (4 d))."""
    if x <= CONTOUR_SPLIT_X:
        return contours.clipped_semicircle(DEFAULT_CUSP_CLIP)
    return contours.clipped_polygon(DEFAULT_CUSP_CLIP)


def _real_part(value: complex, what: str) -> float:
    if abs(value.imag) > IMAG_PART_LIMIT * (1.0 + abs(value.real)):
        raise ArithmeticError(
            f"{what} has imaginary part {value.imag:.3e}; the basis is real-valued"
        )
    return value.real


def a0(x: float, abs_tol: float = 1e-9, contour: Optional[Contour] = None) -> float:
    """a_0(x) = (1/4) * integral over the contour of theta(z)^3 exp(pi i z x^2) dz;
    a_0(0) = 1/2 and a_0(sqrt(m)) = 0 for positive integers m."""
    if x < 0:
        raise ValueError("x must be nonnegative")
    path = contour if contour is not None else _z_contour(x)
    res = contours.integrate(
        lambda z: 0.25 * theta3(z) ** 3 * cmath.exp(1j * math.pi * z * x * x),
        path,
        abs_tol,
    )
    return _real_part(res.value, f"a0({x})")


_LINE_HEIGHT_FAR = 2.5  # comfortable pole clearance, fine for small n
_LINE_HEIGHT_NEAR = 1.15  # keeps exp(n pi H) noise amplification tame


def basis_value(
    n: int,
    hat: bool,
    x: float,
    abs_tol: float = 1e-7,
    line_height: Optional[float] = None,
) -> float:
    """a_n(x) (or a-hat_n(x)) as a double integral in doubles: the outer
    z-integral over the contour policy of _z_contour, the inner tau-integral
    giving phi_n(z) via kernels.fourier_coefficient.

    Noise in the inner integral is amplified by exp(n pi line_height), so for
    n > 4 the tau-line drops to just above the pole set.  Even so the result
    degrades with n; large n belongs to BasisEvaluator.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    if x < 0:
        raise ValueError("x must be nonnegative")
    if line_height is None:
        line_height = _LINE_HEIGHT_FAR if n <= 4 else _LINE_HEIGHT_NEAR
    kind = "hat" if hat else "plain"
    path = _z_contour(x)
    res = contours.integrate(
        lambda z: kernels.fourier_coefficient(kind, n, z, line_height)
        * cmath.exp(1j * math.pi * z * x * x),
        path,
        abs_tol,
    )
    value = _real_part(res.value, f"basis_value({n}, {hat}, {x})")
    if n == 0 and not hat:
        direct = a0(x, abs_tol)
        if abs(value - direct) > 10.0 * max(abs_tol, 1e-9):
            raise ArithmeticError(
                f"basis_value(0, ...) = {value} disagrees with the theta^3 route {direct}"
            )
    return value


def generating_F(hat: bool, tau, x: float, abs_tol: float = 1e-9) -> complex:
    """F(tau, x) (or F-hat) as the direct contour integral of the kernel
    against exp(pi i z x^2); defined for tau in region S only."""
    t = as_upper_half(tau)
    if not in_region_S(t):
        raise OutsideRegionSError(f"tau = {t} is not in region S")
    kind = "hat" if hat else "plain"
    path = _z_contour(x)
    res = contours.integrate(
        lambda z: kernels.kernel(kind, t, z) * cmath.exp(1j * math.pi * z * x * x),
        path,
        abs_tol,
    )
    return res.value


# ---------------------------------------------------------------------------
# high-precision table route


class BasisEvaluator:
    """Shared access point to the high-precision basis grids.

    Builds the semicircle and polygon quadrature grids lazily, caches
    per-x coefficient sums, and enforces the cross-contour consistency and
    reality checks on everything it hands out.
    """

    def __init__(self, max_n: int = 60):
        if max_n < 0:
            raise ValueError("max_n must be nonnegative")
        self.max_n = max_n
        self.precision = highprec.precision_for(max_n)
        self._grids: dict[str, highprec.BasisGrid] = {}
        self._sums: dict[tuple[float, str], tuple[list, list]] = {}

    def _grid(self, name: str) -> highprec.BasisGrid:
        if name not in self._grids:
            self._grids[name] = highprec.BasisGrid(
                highprec.ContourSpec(name), self.max_n, self.precision
            )
        return self._grids[name]

    def _contour_for(self, x: float) -> str:
        return "semicircle" if x <= CONTOUR_SPLIT_X else "polygon"

    def sums_hp(self, x: float, contour: Optional[str] = None):
        """Raw complex high-precision sums (a_n(x))_n, (ahat_n(x))_n."""
        name = contour or self._contour_for(x)
        key = (float(x), name)
        if key not in self._sums:
            self._sums[key] = self._grid(name).basis_sums(float(x))
        return self._sums[key]

    def values_hp(self, x: float):
        """(a_n(x))_n and (ahat_n(x))_n as real mpfr values on the policy
        contour, after the reality check."""
        a, b = self.sums_hp(x)
        for n in range(self.max_n + 1):
            for v in (a[n], b[n]):
                if abs(v.imag) > IMAG_PART_LIMIT * (1 + abs(v.real)):
                    raise ArithmeticError(
                        f"basis value n={n}, x={x} has imaginary part {v.imag}"
                    )
        return [v.real for v in a], [v.real for v in b]

    def values(self, x: float):
        """Float arrays (a, ahat, err_a, err_ahat) at one x; the error estimate
        is the semicircle-vs-polygon discrepancy plus the residual imaginary
        part.  Disagreement beyond CROSS_CONTOUR_ABORT aborts: the two contours
        are equivalent by deformation, so disagreement means a broken build."""
        a1, b1 = self.sums_hp(x, "semicircle")
        a2, b2 = self.sums_hp(x, "polygon")
        pick_first = self._contour_for(x) == "semicircle"
        a = np.empty(self.max_n + 1)
        b = np.empty(self.max_n + 1)
        err_a = np.empty(self.max_n + 1)
        err_b = np.empty(self.max_n + 1)
        for n in range(self.max_n + 1):
            da = abs(a1[n] - a2[n])
            db = abs(b1[n] - b2[n])
            if da > CROSS_CONTOUR_ABORT or db > CROSS_CONTOUR_ABORT:
                raise ArithmeticError(
                    f"contour routes disagree at n={n}, x={x}: "
                    f"|da|={float(da):.3e}, |db|={float(db):.3e}"
                )
            va = a1[n] if pick_first else a2[n]
            vb = b1[n] if pick_first else b2[n]
            a[n] = float(va.real)
            b[n] = float(vb.real)
            err_a[n] = float(da + abs(va.imag))
            err_b[n] = float(db + abs(vb.imag))
        return a, b, err_a, err_b

    def value(self, n: int, hat: bool, x: float) -> float:
        if not 0 <= n <= self.max_n:
            raise ValueError(f"n={n} outside table range 0..{self.max_n}")
        a, b = self.values_hp(x)
        return float((b if hat else a)[n])

    def node_matrix_deviation(self, n_limit: Optional[int] = None) -> float:
        """max over 1 <= n, m <= n_limit of |a_n(sqrt m) - delta_nm| and
        |ahat_n(sqrt m)|."""
        limit = min(n_limit or self.max_n, self.max_n)
        worst = 0.0
        for m in range(1, limit + 1):
            a, b = self.values_hp(math.sqrt(m))
            for n in range(1, limit + 1):
                target = 1.0 if n == m else 0.0
                worst = max(worst, abs(float(a[n]) - target), abs(float(b[n])))
            worst = max(worst, abs(float(a[0])))  # a_0 vanishes at sqrt(m), m >= 1
        return worst


_default_evaluator: Optional[BasisEvaluator] = None


def default_evaluator(min_n: int = 60) -> BasisEvaluator:
    """Module-level shared evaluator, grown on demand."""
    global _default_evaluator
    if _default_evaluator is None or _default_evaluator.max_n < min_n:
        _default_evaluator = BasisEvaluator(max_n=min_n)
    return _default_evaluator


# ---------------------------------------------------------------------------
# basis table


@dataclass(frozen=True)
class BasisTable:
    """Cached basis values on a grid: values_a[n][j] = a_n(x_grid[j])."""

    max_n: int
    x_grid: tuple[float, ...]
    values_a: tuple[tuple[float, ...], ...]
    values_ahat: tuple[tuple[float, ...], ...]
    err_a: tuple[tuple[float, ...], ...]
    err_ahat: tuple[tuple[float, ...], ...]

    def __post_init__(self) -> None:
        rows = self.max_n + 1
        cols = len(self.x_grid)
        for mat in (self.values_a, self.values_ahat, self.err_a, self.err_ahat):
            if len(mat) != rows or any(len(r) != cols for r in mat):
                raise ValueError("table matrices do not match max_n / x_grid shape")
        if any(b < a for a, b in zip(self.x_grid, self.x_grid[1:])):
            raise ValueError("x_grid must be nondecreasing")

    @property
    def error_estimates(self) -> tuple[tuple[float, ...], ...]:
        return tuple(
            tuple(max(ea, eb) for ea, eb in zip(ra, rb))
            for ra, rb in zip(self.err_a, self.err_ahat)
        )

    def row0_self_duality(self) -> float:
        return max(
            abs(a - b) for a, b in zip(self.values_a[0], self.values_ahat[0])
        )

    def to_csv(self, path: str) -> None:
        with open(path, "w", newline="\n") as fh:
            fh.write("n,x,a,a_hat,err_a,err_ahat\n")
            for n in range(self.max_n + 1):
                for j, x in enumerate(self.x_grid):
                    fh.write(
                        f"{n},{x:.17g},{self.values_a[n][j]:.17g},"
                        f"{self.values_ahat[n][j]:.17g},{self.err_a[n][j]:.17g},"
                        f"{self.err_ahat[n][j]:.17g}\n"
                    )

    @classmethod
    def from_csv(cls, path: str) -> "BasisTable":
        rows: dict[int, dict[float, tuple[float, float, float, float]]] = {}
        with open(path, newline="") as fh:
            reader = csv.DictReader(fh)
            for rec in reader:
                n = int(rec["n"])
                x = float(rec["x"])
                rows.setdefault(n, {})[x] = (
                    float(rec["a"]),
                    float(rec["a_hat"]),
                    float(rec["err_a"]),
                    float(rec["err_ahat"]),
                )
        max_n = max(rows)
        x_grid = tuple(sorted(rows[0]))
        def mat(i):
            return tuple(
                tuple(rows[n][x][i] for x in x_grid) for n in range(max_n + 1)
            )
        return cls(max_n, x_grid, mat(0), mat(1), mat(2), mat(3))

    def to_json(self, path: str) -> None:
        doc = {
            "max_n": self.max_n,
            "x_grid": list(self.x_grid),
            "values_a": [list(r) for r in self.values_a],
            "values_ahat": [list(r) for r in self.values_ahat],
            "err_a": [list(r) for r in self.err_a],
            "err_ahat": [list(r) for r in self.err_ahat],
        }
        with open(path, "w", newline="\n") as fh:
            json.dump(doc, fh, indent=1)
            fh.write("\n")

    @classmethod
    def from_json(cls, path: str) -> "BasisTable":
        with open(path) as fh:
            doc = json.load(fh)
        return cls(
            doc["max_n"],
            tuple(doc["x_grid"]),
            tuple(tuple(r) for r in doc["values_a"]),
            tuple(tuple(r) for r in doc["values_ahat"]),
            tuple(tuple(r) for r in doc["err_a"]),
            tuple(tuple(r) for r in doc["err_ahat"]),
        )


def default_x_grid(start: float = 0.0, stop: float = 2.5, step: float = 0.1) -> tuple[float, ...]:
    if step <= 0:
        raise ValueError("step must be positive")
    count = int(round((stop - start) / step))
    return tuple(start + k * step for k in range(count + 1))


def build_table(evaluator: BasisEvaluator, x_grid: Optional[tuple[float, ...]] = None) -> BasisTable:
    grid = tuple(x_grid) if x_grid is not None else default_x_grid()
    cols = [evaluator.values(x) for x in grid]
    def mat(i):
        return tuple(
            tuple(cols[j][i][n] for j in range(len(grid)))
            for n in range(evaluator.max_n + 1)
        )
    return BasisTable(evaluator.max_n, grid, mat(0), mat(1), mat(2), mat(3))


# ---------------------------------------------------------------------------
# interpolation formula


@dataclass(frozen=True)
class ReconstructionReport:
    x: float
    truncation_N: int
    reconstructed: float
    reference: float
    abs_error: float
    term_tail_bound: float

    def __post_init__(self) -> None:
        if self.abs_error != abs(self.reconstructed - self.reference):
            raise ValueError("abs_error must equal |reconstructed - reference| exactly")


def _tail_envelope(evaluator: BasisEvaluator) -> tuple[float, float]:
    """Least-squares fit max_x |a_n(x)| ~= C (1+n)^p over n <= 12 on the
    default grid; a reporting aid for the omitted interpolation tail."""
    cache = getattr(evaluator, "_tail_envelope", None)
    if cache is not None:
        return cache
    n_fit = min(12, evaluator.max_n)
    grid = default_x_grid()
    peaks = np.zeros(n_fit + 1)
    for x in grid:
        a, b = evaluator.values_hp(x)
        for n in range(n_fit + 1):
            peaks[n] = max(peaks[n], abs(float(a[n])), abs(float(b[n])))
    ns = np.arange(n_fit + 1)
    coeffs = np.polyfit(np.log1p(ns), np.log(peaks), 1)
    envelope = (float(np.exp(coeffs[1])), float(coeffs[0]))
    evaluator._tail_envelope = envelope
    return envelope


def reconstruct(
    f: TransformPair,
    x: float,
    truncation_N: int = 40,
    evaluator: Optional[BasisEvaluator] = None,
) -> ReconstructionReport:
    """Truncated interpolation formula
    sum_{n<=N} f(sqrt n) a_n(x) + sum_{n<=N} fhat(sqrt n) ahat_n(x)."""
    if truncation_N < 1:
        raise ValueError("truncation_N must be positive")
    if x < 0:
        raise ValueError("x must be nonnegative")
    ev = evaluator or default_evaluator(truncation_N)
    if truncation_N > ev.max_n:
        raise ValueError(f"truncation_N={truncation_N} exceeds table max_n={ev.max_n}")
    a, b = ev.values_hp(x)
    terms = []
    for n in range(truncation_N + 1):
        r = math.sqrt(n)
        terms.append(complex(f.f(r)).real * float(a[n]))
        terms.append(complex(f.f_hat(r)).real * float(b[n]))
    reconstructed = math.fsum(terms)
    reference = complex(f.f(x)).real
    c, p = _tail_envelope(ev)
    tail_terms = []
    for n in range(truncation_N + 1, truncation_N + 400):
        r = math.sqrt(n)
        weight = abs(complex(f.f(r)).real) + abs(complex(f.f_hat(r)).real)
        t = weight * c * (1.0 + n) ** p
        if t < 1e-300:
            break
        tail_terms.append(t)
    return ReconstructionReport(
        x=x,
        truncation_N=truncation_N,
        reconstructed=reconstructed,
        reference=reference,
        abs_error=abs(reconstructed - reference),
        term_tail_bound=math.fsum(tail_terms),
    )


def reconstruction_error(
    f: TransformPair,
    x: float,
    truncation_N: int,
    evaluator: Optional[BasisEvaluator] = None,
) -> float:
    """|truncated interpolation sum - f(x)| evaluated end-to-end in high
    precision, so the returned error is the genuine truncation error rather
    than double-precision roundoff.  Requires the fixture to carry
    hp_evaluator callables (the Gaussian fixtures do)."""
    ev = evaluator or default_evaluator(truncation_N)
    if truncation_N > ev.max_n:
        raise ValueError(f"truncation_N={truncation_N} exceeds table max_n={ev.max_n}")
    if f.f.hp_evaluator is None or f.f_hat.hp_evaluator is None:
        raise ValueError(f"fixture {f.f.label!r} has no high-precision evaluators")
    with gmpy2.context(precision=ev.precision):
        a, b = ev.values_hp(x)
        acc = gmpy2.mpfr(0)
        for n in range(truncation_N + 1):
            r = gmpy2.sqrt(gmpy2.mpfr(n))
            acc += f.f.hp_evaluator(r) * a[n]
            acc += f.f_hat.hp_evaluator(r) * b[n]
        ref = f.f.hp_evaluator(gmpy2.mpfr(x))
        return float(abs(acc - ref))


def gaussian_functional_equation_residual(
    tau,
    x: float,
    truncation_N: int = 30,
    abs_tol: float = 1e-9,
    evaluator: Optional[BasisEvaluator] = None,
) -> float:
    """Residual of F(tau,x) + (-i tau)^{-1/2} Fhat(-1/tau, x) = exp(pi i tau x^2).

    F is the direct kernel integral (tau must be in region S); Fhat at -1/tau,
    which generally leaves region S, is evaluated through the absolutely
    convergent basis sum sum_n ahat_n(x) exp(n pi i (-1/tau)) -- the analytic
    continuation without contour surgery."""
    t = as_upper_half(tau)
    if truncation_N < 1:
        raise ValueError("truncation_N must be positive")
    ev = evaluator or default_evaluator(truncation_N)
    if truncation_N > ev.max_n:
        raise ValueError(f"truncation_N={truncation_N} exceeds table max_n={ev.max_n}")
    direct = generating_F(False, t, x, abs_tol)
    _, b = ev.values_hp(x)
    w = -1.0 / t
    fhat = sum(float(b[n]) * cmath.exp(1j * math.pi * n * w) for n in range(truncation_N + 1))
    from .modular import sqrt_neg_iz

    lhs = direct + fhat / sqrt_neg_iz(t)
    return abs(lhs - cmath.exp(1j * math.pi * t * x * x))


def poisson_redundancy_residual(f: TransformPair, cutoff: int, hat_cutoff: int = 2048) -> float:
    """|f(0) + 2 f(1) + ... - (fhat(0) + 2 fhat(1) + ...)|, the one linear
    relation (Poisson summation over Z) satisfied by every even Schwartz
    function.  The hat side is summed further out because fixtures like the
    triangle have a slowly decaying transform."""
    if cutoff < 1:
        raise ValueError("cutoff must be positive")
    lhs = [complex(f.f(0)).real]
    lhs += [2.0 * complex(f.f(n)).real for n in range(1, cutoff + 1)]
    rhs = [complex(f.f_hat(0)).real]
    for n in range(1, max(cutoff, hat_cutoff) + 1):
        term = 2.0 * complex(f.f_hat(n)).real
        rhs.append(term)
        if n > cutoff and abs(term) < 1e-16:
            break
    return abs(math.fsum(lhs) - math.fsum(rhs))


# ---------------------------------------------------------------------------
# residue demonstration


@dataclass(frozen=True)
class ContourDifferenceReport:
    tau: complex
    x: float
    below_value: complex
    above_value: complex
    expected: complex

    @property
    def difference(self) -> complex:
        return self.below_value - self.above_value

    @property
    def residual(self) -> float:
        return abs(self.difference - self.expected)


def _clipped_dip_contour(tau: complex, clip: float) -> Contour:
    """The cusp-clipped version of pole_avoiding_contour(tau, below_tau) for
    tau just below the unit semicircle: same dip geometry, arcs truncated at
    angle `clip` from the cusps (the kernel integrand vanishes there)."""
    full = contours.pole_avoiding_contour(tau, "below_tau")
    if len(full.segments) == 1:
        raise ValueError(f"tau = {tau} needs no deformation; pick it closer to the arc")
    first = full.segments[0]
    last = full.segments[-1]
    clipped_first = ArcSegment(first.center, first.radius, math.pi - clip, first.angle_end)
    clipped_last = ArcSegment(last.center, last.radius, last.angle_start, clip)
    return Contour((clipped_first,) + full.segments[1:-1] + (clipped_last,))


def residue_demonstration(tau=0.92j, x: float = 0.6, abs_tol: float = 1e-9) -> ContourDifferenceReport:
    """Integrate K(tau, z) exp(pi i z x^2) over a contour passing below tau and
    over the plain (above-tau) semicircle; the difference picks up exactly
    2 pi i times the kernel residue at z = tau, which is exp(pi i tau x^2)."""
    t = as_upper_half(tau)
    below = _clipped_dip_contour(t, DEFAULT_CUSP_CLIP)
    above = contours.clipped_semicircle(DEFAULT_CUSP_CLIP)
    if above.min_distance_to(t) < 0.04:
        raise ValueError(f"tau = {t} is too close to the semicircle itself")

    def integrand(z: complex) -> complex:
        return kernels.kernel("plain", t, z) * cmath.exp(1j * math.pi * z * x * x)

    below_val = contours.integrate(integrand, below, abs_tol).value
    above_val = contours.integrate(integrand, above, abs_tol).value
    return ContourDifferenceReport(
        tau=t,
        x=x,
        below_value=below_val,
        above_value=above_val,
        expected=cmath.exp(1j * math.pi * t * x * x),
    )
