import numpy as np
import pytest

from asedf import GasModel


@pytest.fixture
def gas():
    return GasModel()


def poly_cell_averages(coeffs, edges):
    """Exact cell averages of sum(coeffs[d] * z**d) between consecutive edges."""
    edges = np.asarray(edges, dtype=float)
    anti = np.zeros(len(edges))
    for d, c in enumerate(coeffs):
        anti += c * edges ** (d + 1) / (d + 1)
    return np.diff(anti) / np.diff(edges)


def poly_value(coeffs, z):
    out = np.zeros_like(np.asarray(z, dtype=float))
    for d, c in enumerate(coeffs):
        out += c * np.asarray(z, dtype=float) ** d
    return out
