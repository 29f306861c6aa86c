"""Stencil coefficient tables: exact reproduction and frozen face weights.

The monomial test covers every rung of the extension ladder: the three
3-cell sub-stencils, the 5-cell, the 7-cell and the 9-cell windows each
reproduce polynomials of their design degree to rounding error.
"""
import numpy as np
import pytest

from asedf.basis import eval_value, eval_deriv
from asedf.stencils import STENCIL_OFFSETS, modal_coefficients

from conftest import poly_cell_averages, poly_value

DESIGN_DEGREE = {"r3m": 2, "r3c": 2, "r3p": 2, "r5": 4, "r7": 6, "r9": 8}

# classic upwind-biased face-value weights, right edge of the center cell
FACE_WEIGHTS = {
    "r3m": np.array([2.0, -7.0, 11.0]) / 6.0,
    "r3c": np.array([-1.0, 5.0, 2.0]) / 6.0,
    "r3p": np.array([2.0, 5.0, -1.0]) / 6.0,
    "r5": np.array([2.0, -13.0, 47.0, 27.0, -3.0]) / 60.0,
}


def _window_for(coeffs, offsets):
    edges = np.arange(offsets[0] - 1, offsets[-1] + 1, dtype=float)
    return poly_cell_averages(coeffs, edges)


@pytest.mark.parametrize("stencil", list(DESIGN_DEGREE))
def test_monomial_reproduction(stencil):
    rng = np.random.default_rng(hash(stencil) % 2**32)
    offsets = STENCIL_OFFSETS[stencil]
    deg = DESIGN_DEGREE[stencil]
    coeffs = rng.uniform(-2.0, 2.0, deg + 1)
    window = _window_for(coeffs, offsets)
    cf = modal_coefficients(window, stencil)
    assert len(cf) == deg
    w0 = window[offsets.index(0)]
    for z in np.linspace(-1.0, 0.0, 11):
        got = eval_value(w0, cf, len(cf), z)
        assert got == pytest.approx(poly_value(coeffs, z), abs=2e-12)


@pytest.mark.parametrize("stencil", list(DESIGN_DEGREE))
def test_derivative_reproduction(stencil):
    offsets = STENCIL_OFFSETS[stencil]
    deg = DESIGN_DEGREE[stencil]
    coeffs = np.linspace(0.5, -0.5, deg + 1)
    window = _window_for(coeffs, offsets)
    cf = modal_coefficients(window, stencil)
    w0 = window[offsets.index(0)]
    dcoeffs = coeffs[1:] * np.arange(1, deg + 1)
    dx = 0.05
    for z in (-1.0, -0.5, 0.0):
        got = eval_deriv(w0, cf, len(cf), z, dx)
        assert got == pytest.approx(poly_value(dcoeffs, z) / dx, abs=1e-10)


@pytest.mark.parametrize("stencil", list(FACE_WEIGHTS))
def test_right_edge_weights_match_classic_tables(stencil):
    offsets = STENCIL_OFFSETS[stencil]
    n = len(offsets)
    got = np.empty(n)
    for j in range(n):
        window = np.zeros(n)
        window[j] = 1.0
        cf = modal_coefficients(window, stencil)
        got[j] = eval_value(window[offsets.index(0)], cf, len(cf), 0.0)
    assert np.allclose(got, FACE_WEIGHTS[stencil], atol=1e-13)


def test_r5_left_edge_weights_are_mirrored():
    offsets = STENCIL_OFFSETS["r5"]
    got = np.empty(5)
    for j in range(5):
        window = np.zeros(5)
        window[j] = 1.0
        cf = modal_coefficients(window, "r5")
        got[j] = eval_value(window[2], cf, len(cf), -1.0)
    assert np.allclose(got, FACE_WEIGHTS["r5"][::-1], atol=1e-13)


def test_windows_accept_batched_input():
    rng = np.random.default_rng(1)
    batch = rng.standard_normal((12, 5))
    cf = modal_coefficients(batch, "r5")
    assert cf.shape == (12, 4)
    one = modal_coefficients(batch[4], "r5")
    assert np.allclose(cf[4], one)
