"""Zero-mean polynomial basis used by the modal reconstruction."""
from fractions import Fraction

import numpy as np
import pytest

from asedf.basis import (MAX_DEGREE, ZMEAN_CONST, ZeroMeanBasis, eval_value,
                         eval_deriv)

from conftest import poly_cell_averages, poly_value


def _exact_const(degree):
    # c chosen so the basis function z^d + c averages to zero on [-1, 0]
    integral = Fraction(0 - (-1) ** (degree + 1), degree + 1)
    return -integral


def test_zmean_constants_match_exact_fractions():
    # table entry n holds the constant for degree n + 1
    for n in range(MAX_DEGREE):
        assert ZMEAN_CONST[n] == pytest.approx(float(_exact_const(n + 1)),
                                               abs=1e-16)


def test_basis_is_zero_mean_on_home_cell():
    zb = ZeroMeanBasis()
    for degree in range(MAX_DEGREE + 1):
        assert zb.cell_average(degree, 0) == 0


def test_basis_cell_averages_are_exact_integrals():
    zb = ZeroMeanBasis()
    for degree in range(MAX_DEGREE + 1):
        c = _exact_const(degree)
        for k in range(-4, 6):
            integral = Fraction(k ** (degree + 1) - (k - 1) ** (degree + 1),
                                degree + 1)
            assert zb.cell_average(degree, k) == integral + c


def test_basis_point_values():
    zb = ZeroMeanBasis()
    for degree in range(MAX_DEGREE + 1):
        for z in (Fraction(-1), Fraction(-1, 2), Fraction(0), Fraction(3, 4)):
            assert zb.value(degree, z) == z ** degree + _exact_const(degree)


def test_eval_value_reproduces_linear():
    # p(z) = 3 + 2z has mean 2 on [-1, 0] and slope coefficient 2
    cf = np.array([2.0])
    for z in (-1.0, -0.5, 0.0):
        assert eval_value(2.0, cf, 1, z) == pytest.approx(3.0 + 2.0 * z)
    assert eval_deriv(2.0, cf, 1, -0.3, 0.25) == pytest.approx(2.0 / 0.25)


def test_eval_value_reproduces_general_polynomial():
    rng = np.random.default_rng(5)
    coeffs = rng.standard_normal(6)  # degree 5
    w0 = poly_cell_averages(coeffs, [-1.0, 0.0])[0]
    # modal coefficient for degree d is just the monomial coefficient;
    # the zero-mean constants fold the mean shift into w0
    cf = coeffs[1:].copy()
    zs = np.linspace(-1.0, 0.0, 9)
    for z in zs:
        got = eval_value(w0, cf, len(cf), z)
        assert got == pytest.approx(poly_value(coeffs, z), abs=1e-13)
    # derivative against the analytic one, with physical scaling
    dcoeffs = coeffs[1:] * np.arange(1, 6)
    dx = 0.7
    for z in zs:
        got = eval_deriv(w0, cf, len(cf), z, dx)
        assert got == pytest.approx(poly_value(dcoeffs, z) / dx, abs=1e-12)
