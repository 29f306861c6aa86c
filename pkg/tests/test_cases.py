"""Benchmark case registry: construction, initial data, overrides."""
import numpy as np
import pytest

from asedf import (build, case_names, make_field, make_solver, cons_to_prim,
                   GasModel)

ALL_CASES = ["sine1d", "sine2d", "shu_osher", "blast", "config3", "dmr",
             "viscous_tube", "jet_ma80", "jet_ma20000"]

# small meshes that keep initialization cheap
SMALL = {"sine1d": (24, None), "sine2d": (12, 12), "shu_osher": (40, None),
         "blast": (40, None), "config3": (16, 16), "dmr": (24, 8),
         "viscous_tube": (16, 8), "jet_ma80": (16, 8), "jet_ma20000": (16, 8)}


def test_registry_is_complete():
    assert sorted(case_names()) == sorted(ALL_CASES)


def test_unknown_case_raises():
    with pytest.raises((KeyError, ValueError)):
        build("vortex_street")


@pytest.mark.parametrize("name", ALL_CASES)
def test_initial_data_is_positive(name):
    nx, ny = SMALL[name]
    setup = build(name, nx=nx, ny=ny)
    fld = make_field(setup)
    q = cons_to_prim(fld.interior, setup.gas)
    assert q[..., 0].min() > 0.0
    assert q[..., 3].min() > 0.0
    assert fld.time == 0.0


def test_mesh_overrides(gas):
    setup = build("config3", nx=20, ny=24)
    assert setup.mesh.nx == 20
    assert setup.mesh.ny == 24
    setup = build("sine1d", nx=80)
    assert setup.mesh.nx == 80
    assert setup.mesh.ndim == 1


def test_blast_initial_pressure_plateaus():
    setup = build("blast", nx=100)
    fld = make_field(setup)
    q = cons_to_prim(fld.interior, setup.gas)
    p = q[:, 0, 3]
    x = setup.mesh.x_centers()
    assert np.allclose(p[x < 0.1], 1000.0)
    assert np.allclose(p[(x > 0.1) & (x < 0.9)], 0.01)
    assert np.allclose(p[x > 0.9], 100.0)
    assert np.allclose(q[:, 0, 0], 1.0)
    # strong-interaction tuning travels with the case
    assert setup.c1 == pytest.approx(0.05)
    assert setup.c2 == pytest.approx(5.0)
    assert setup.t_end == pytest.approx(3.8)


def test_config3_corner_states():
    setup = build("config3", nx=40, ny=40)
    fld = make_field(setup)
    q = cons_to_prim(fld.interior, setup.gas)
    # sample one cell inside each quadrant around the 0.7 corner
    def at(x, y):
        i = int(x * 40)
        j = int(y * 40)
        return q[i, j]

    assert np.allclose(at(0.9, 0.9), [1.5, 0.0, 0.0, 1.5], atol=1e-12)
    assert np.allclose(at(0.3, 0.9), [0.5323, 1.206, 0.0, 0.3], atol=1e-12)
    assert np.allclose(at(0.3, 0.3), [0.138, 1.206, 1.206, 0.129], atol=1e-12)
    assert np.allclose(at(0.9, 0.3), [0.5323, 0.0, 1.206, 0.3], atol=1e-12)
    assert setup.t_end == pytest.approx(0.6)


def test_jet_cases_use_dissipative_flux_and_light_gas():
    for name, uin in (("jet_ma80", 30.0), ("jet_ma20000", 8000.0)):
        # ny must resolve the inlet band around mid-height
        setup = build(name, nx=40, ny=20)
        assert setup.flux == "lf"
        assert setup.gas.gamma == pytest.approx(5.0 / 3.0)
        fld = make_field(setup)
        q = cons_to_prim(fld.interior, setup.gas)
        assert np.allclose(q[..., 0], 0.5)
        assert np.allclose(q[..., 3], 0.4127)
        # the inlet band lives in the ghost layers
        g = 5
        qg = cons_to_prim(fld.w[g - 1, :, :], setup.gas)
        assert qg[:, 1].max() == pytest.approx(uin)


def test_viscous_tube_setup():
    setup = build("viscous_tube", nx=20, ny=10)
    assert setup.viscous
    assert setup.mu == pytest.approx(1.0 / 200.0)
    assert setup.flux == "gks"
    fld = make_field(setup)
    q = cons_to_prim(fld.interior, setup.gas)
    x = setup.mesh.x_centers()
    left = x < 0.5
    assert np.allclose(q[left, :, 0], 120.0)
    assert np.allclose(q[~left, :, 0], 1.2)
    assert np.allclose(q[left, :, 3], 120.0 / 1.4)


def test_sine_cases_expose_exact_solutions():
    for name, nx, ny in (("sine1d", 32, None), ("sine2d", 12, 12)):
        setup = build(name, nx=nx, ny=ny)
        assert setup.exact_rho is not None
        assert setup.accuracy_cap
        rho0 = setup.exact_rho(setup.mesh, 0.0)
        fld = make_field(setup)
        assert np.allclose(fld.interior[..., 0], rho0, atol=1e-13)


def test_make_solver_honors_case_tuning():
    setup = build("blast", nx=32)
    sol = make_solver(setup, order=7)
    assert sol.c1 == pytest.approx(0.05)
    assert sol.c2 == pytest.approx(5.0)
    assert sol.scheme.max_order == 7
    sol = make_solver(setup, order=5, flux="lf")
    assert sol.flux == "lf"
    assert sol.time_scheme == "ssp-rk3"
