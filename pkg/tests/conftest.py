import pytest

from fourinterp import basis


@pytest.fixture(scope="session")
def ev6():
    """Small shared evaluator: enough for the node matrix n, m <= 6."""
    return basis.BasisEvaluator(max_n=6)


@pytest.fixture(scope="session")
def ev60():
    """Full-depth shared evaluator for reconstruction and functional-equation
    tests (builds both contour grids lazily on first use)."""
    return basis.BasisEvaluator(max_n=60)
