"""Error norms, observed orders, and the flow probes."""
import numpy as np
import pytest

from asedf import (GasModel, Mesh, Field, prim_to_cons, l1_density_error,
                   observed_orders, mass_flux_streamfunction, vortex_height,
                   build, make_field)


def test_observed_orders_on_clean_halving():
    assert observed_orders([8.0, 1.0]) == [pytest.approx(3.0)]
    got = observed_orders([1.0, 1.0 / 32.0, 1.0 / 1024.0])
    assert got == [pytest.approx(5.0), pytest.approx(5.0)]


def test_l1_error_zero_when_exact(gas):
    setup = build("sine1d", nx=32)
    fld = make_field(setup)
    assert l1_density_error(fld, setup.exact_rho) < 1e-14


def test_l1_error_measures_offset(gas):
    setup = build("sine1d", nx=32)
    fld = make_field(setup)
    fld.interior[..., 0] += 0.01
    assert l1_density_error(fld, setup.exact_rho) == pytest.approx(0.01,
                                                                   rel=1e-10)


def _channel(gas, u_of_y, ny=50):
    m = Mesh(20, (0.0, 1.0), ny=ny, ylim=(0.0, 0.5))
    fld = Field(m)
    q = np.ones((20, ny, 4))
    yc = m.y_centers()
    q[..., 1] = u_of_y(yc)[None, :]
    q[..., 2] = 0.0
    fld.set_interior(prim_to_cons(q, gas))
    return m, fld


def test_streamfunction_linear_for_uniform_flow(gas):
    m, fld = _channel(gas, lambda y: np.full_like(y, 0.7))
    psi = mass_flux_streamfunction(fld)
    assert psi.shape == (20, m.ny + 1)
    expect = 0.7 * (m.y_faces() - m.y_faces()[0])
    assert np.allclose(psi[4], expect, atol=1e-14)


def test_streamfunction_needs_2d(gas):
    fld = Field(Mesh(8, (0.0, 1.0)))
    with pytest.raises(ValueError):
        mass_flux_streamfunction(fld)


def test_vortex_height_finds_separating_streamline(gas):
    # reversed flow below y = 0.1, forward flow above: the column
    # streamfunction returns to zero at exactly y = 0.2
    def u_of_y(y):
        return np.where(y < 0.1, -1.0, 1.0)

    m, fld = _channel(gas, u_of_y)
    h = vortex_height(fld, x_window=(0.0, 1.0))
    assert h == pytest.approx(0.2, abs=1e-12)


def test_vortex_height_none_without_reversal(gas):
    m, fld = _channel(gas, lambda y: np.full_like(y, 1.0))
    assert vortex_height(fld, x_window=(0.0, 1.0)) is None


def test_vortex_height_caps_at_channel_top(gas):
    # reversal never recovers: the bubble fills the column
    m, fld = _channel(gas, lambda y: np.full_like(y, -1.0))
    h = vortex_height(fld, x_window=(0.0, 1.0))
    assert h == pytest.approx(0.5)
