import numpy as np
import pytest

from blochbohr import TruncatedSeries, builtin_weight


@pytest.fixture
def std():
    return builtin_weight("standard")


@pytest.fixture
def const():
    return builtin_weight("constant")


def random_polynomial(rng, max_degree=16, scale=1.0):
    degree = int(rng.integers(1, max_degree + 1))
    coeffs = scale * (rng.normal(size=degree + 1) + 1j * rng.normal(size=degree + 1))
    return TruncatedSeries.polynomial(coeffs)


def trig_quadrature_l2(coeffs, r, n_angles=512):
    """Independent L2 oracle: direct Horner on a uniform angle grid, then
    the periodic trapezoid rule (exact for trigonometric polynomials)."""
    theta = np.linspace(0.0, 2.0 * np.pi, n_angles, endpoint=False)
    z = r * np.exp(1j * theta)
    vals = np.zeros_like(z)
    for c in coeffs[::-1]:
        vals = vals * z + c
    return float(np.sqrt(np.mean(np.abs(vals) ** 2)))
