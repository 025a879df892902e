"""Even test functions on the real line and their Fourier transforms.

Normalization: fhat(y) = integral f(x) exp(-2 pi i x y) dx, which for even f
reduces to the cosine transform 2 * integral_0^inf f(x) cos(2 pi x y) dx.
Transforms are computed by truncated adaptive quadrature (not FFT) so that
values at irrational points come out directly; the truncation point is read
off the function's recorded Gaussian-type decay envelope.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Callable, Optional

from ._quad import adaptive_gl
from .modular import as_upper_half, sqrt_neg_iz


@dataclass(frozen=True)
class EvenTestFunction:
    """An even rapid-decay function.

    decay_rate and decay_coeff record an envelope |f(x)| <= C exp(-a x^2)
    used to choose quadrature truncation points.  hp_evaluator, when given,
    evaluates the same function in arbitrary precision (takes and returns
    gmpy2 numbers); the basis-reconstruction acceptance path uses it.
    """

    evaluator: Callable[[float], complex]
    decay_rate: float
    label: str
    exact_transform: Optional[Callable[[float], complex]] = None
    decay_coeff: float = 1.0
    hp_evaluator: Optional[Callable] = None

    def __call__(self, x: float) -> complex:
        return self.evaluator(x)


@dataclass(frozen=True)
class TransformPair:
    f: EvenTestFunction
    f_hat: EvenTestFunction


def truncation_point(f: EvenTestFunction, abs_tol: float) -> float:
    """Where the recorded decay envelope falls below abs_tol/10."""
    target = abs_tol / 10.0
    arg = max(10.0, f.decay_coeff / target)
    return math.sqrt(math.log(arg) / f.decay_rate)


def numeric_transform(f: EvenTestFunction, y: float, abs_tol: float = 1e-10) -> complex:
    """fhat(y) = 2 * integral_0^X f(x) cos(2 pi x y) dx with X from the decay
    envelope."""
    x_max = truncation_point(f, abs_tol)
    res = adaptive_gl(
        lambda x: 2.0 * f.evaluator(x) * math.cos(2.0 * math.pi * x * y),
        0.0,
        x_max,
        abs_tol,
    )
    v = complex(res.value)
    if abs(v.imag) < 1e-14 * (1.0 + abs(v.real)):
        return v.real
    return v


def complex_gaussian_transform(tau, y: float) -> complex:
    """Exact transform of x -> exp(pi i tau x^2):
    (-i tau)^{-1/2} exp(pi i (-1/tau) y^2)."""
    t = as_upper_half(tau)
    return cmath.exp(1j * math.pi * (-1.0 / t) * y * y) / sqrt_neg_iz(t)


def _gmpy_gaussian(t: float):
    def hp(x):
        import gmpy2

        return gmpy2.exp(-gmpy2.const_pi() * t * x * x)

    return hp


def gaussian(t: float = 1.0) -> TransformPair:
    """Dilated Gaussian exp(-pi t x^2) with transform t^{-1/2} exp(-pi y^2 / t);
    t = 1 is the self-dual case."""
    if t <= 0:
        raise ValueError("t must be positive")
    label = "gauss" if t == 1.0 else f"gauss-t{t:g}"
    f = EvenTestFunction(
        evaluator=lambda x: math.exp(-math.pi * t * x * x),
        decay_rate=math.pi * t,
        label=label,
        exact_transform=lambda y: math.exp(-math.pi * y * y / t) / math.sqrt(t),
        hp_evaluator=_gmpy_gaussian(t),
    )
    f_hat = EvenTestFunction(
        evaluator=lambda y: math.exp(-math.pi * y * y / t) / math.sqrt(t),
        decay_rate=math.pi / t,
        decay_coeff=1.0 / math.sqrt(t),
        label=label + "-hat",
        exact_transform=lambda x: math.exp(-math.pi * t * x * x),
        hp_evaluator=_hp_gaussian_hat(t),
    )
    return TransformPair(f, f_hat)


def _hp_gaussian_hat(t: float):
    def hp(y):
        import gmpy2

        return gmpy2.exp(-gmpy2.const_pi() * y * y / t) / gmpy2.sqrt(gmpy2.mpfr(t))

    return hp


def hermite_gaussian() -> TransformPair:
    """x^2 exp(-pi x^2), whose transform is (1/(2 pi) - y^2) exp(-pi y^2)."""
    f = EvenTestFunction(
        evaluator=lambda x: x * x * math.exp(-math.pi * x * x),
        decay_rate=math.pi * 0.8,  # envelope absorbs the x^2 prefactor on [0, 6]
        decay_coeff=1.0,
        label="hermite2",
        exact_transform=lambda y: (1.0 / (2.0 * math.pi) - y * y) * math.exp(-math.pi * y * y),
    )
    f_hat = EvenTestFunction(
        evaluator=lambda y: (1.0 / (2.0 * math.pi) - y * y) * math.exp(-math.pi * y * y),
        decay_rate=math.pi * 0.8,
        decay_coeff=1.0,
        label="hermite2-hat",
        exact_transform=lambda x: x * x * math.exp(-math.pi * x * x),
    )
    return TransformPair(f, f_hat)


def _sinc_sq(y: float) -> float:
    if y == 0.0:
        return 1.0
    s = math.sin(math.pi * y) / (math.pi * y)
    return s * s


def triangle() -> TransformPair:
    """The triangle (1-|x|)+ on [-1,1], whose transform is sinc^2.

    The transform side decays only algebraically; its decay metadata is an
    envelope valid on the sampled window [0, 6], not a truncation guarantee.
    """
    f = EvenTestFunction(
        evaluator=lambda x: max(0.0, 1.0 - abs(x)),
        decay_rate=2.0,
        label="triangle",
        exact_transform=_sinc_sq,
    )
    f_hat = EvenTestFunction(
        evaluator=_sinc_sq,
        decay_rate=0.12,
        label="triangle-hat",
        exact_transform=lambda x: max(0.0, 1.0 - abs(x)),
    )
    return TransformPair(f, f_hat)


def complex_gaussian(z) -> TransformPair:
    """The modular Gaussian x -> exp(pi i z x^2) for z in the upper half-plane;
    its transform is the same family at -1/z up to the (-iz)^{-1/2} factor."""
    t = complex(as_upper_half(z))
    s = -1.0 / t

    def fwd(x: float) -> complex:
        return cmath.exp(1j * math.pi * t * x * x)

    def bwd(y: float) -> complex:
        return complex_gaussian_transform(t, y)

    f = EvenTestFunction(
        evaluator=fwd,
        decay_rate=math.pi * t.imag,
        label=f"cgauss({t.real:g}+{t.imag:g}j)",
        exact_transform=bwd,
    )
    f_hat = EvenTestFunction(
        evaluator=bwd,
        decay_rate=math.pi * s.imag,
        decay_coeff=abs(1.0 / sqrt_neg_iz(t)),
        label=f.label + "-hat",
        exact_transform=fwd,
    )
    return TransformPair(f, f_hat)


def builtin_fixtures() -> list[TransformPair]:
    return [gaussian(1.0), gaussian(2.0), hermite_gaussian(), triangle()]


def fixture_by_label(label: str) -> TransformPair:
    for pair in builtin_fixtures():
        if pair.f.label == label:
            return pair
    if label.startswith("gauss-t"):
        return gaussian(float(label[len("gauss-t"):]))
    raise KeyError(f"unknown fixture {label!r}")
