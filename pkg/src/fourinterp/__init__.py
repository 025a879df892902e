"""Fourier interpolation basis from modular forms, with lattice Poisson
summation and linear-programming sphere-packing checks.

Subpackages by topic: modular (theta/lambda/J evaluation), contours and
kernels (the two-variable generating kernels and their contour integrals),
basis (the interpolation basis a_n, ahat_n and reconstruction), transforms
(even test functions and their Fourier transforms), lattices (enumeration,
Poisson summation, LP certificates), classical (Lagrange/Hermite/Shannon
baselines), cli (the command-line surface).
"""

__version__ = "1.0.0"

from . import (  # noqa: F401
    basis,
    classical,
    contours,
    kernels,
    lattices,
    modular,
    qseries,
    transforms,
)
