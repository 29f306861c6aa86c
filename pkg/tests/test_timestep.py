"""Temporal convergence of both integrators on scalar problems, plus the
step-size rule."""
import numpy as np
import pytest

from asedf import (GasModel, Mesh, Field, prim_to_cons, compute_dt,
                   ssp_rk3_step, s2o4_step, observed_orders)


def _march(stepper, y0, t_end, n):
    y = np.array([y0])
    dt = t_end / n
    for _ in range(n):
        y = stepper(y, dt)
    return y[0]


def test_ssp_rk3_is_third_order():
    # y' = -y + cos(t), y(0) = 0, exact y = (sin t + cos t - e^-t)/2
    def rhs(y, t_base):
        def f(w, t_off):
            return -w + np.cos(t_base[0] + t_off)
        return f

    errors = []
    for n in (8, 16, 32, 64):
        t = [0.0]
        y = np.array([0.0])
        dt = 2.0 / n
        for _ in range(n):
            y = ssp_rk3_step(y, dt, rhs(y, t))
            t[0] += dt
        exact = 0.5 * (np.sin(2.0) + np.cos(2.0) - np.exp(-2.0))
        errors.append(abs(y[0] - exact))
    slopes = observed_orders(errors)
    assert slopes[-1] == pytest.approx(3.0, abs=0.1)


def test_s2o4_is_fourth_order():
    # y' = y^2 on [0, 1/2], y(0) = 1, exact 1/(1 - t); Lt = dL/dt = 2 y^3
    def rhs_pair(w, t_off):
        return w * w, 2.0 * w ** 3

    errors = []
    for n in (4, 8, 16, 32):
        y = _march(lambda w, dt: s2o4_step(w, dt, rhs_pair), 1.0, 0.5, n)
        errors.append(abs(y - 2.0))
    slopes = observed_orders(errors)
    assert slopes[-1] == pytest.approx(4.0, abs=0.1)


def test_s2o4_exact_on_cubic_in_time():
    # L depends on t only, integrand cubic: the two-stage rule is exact
    def rhs_pair_factory(t0):
        def rhs_pair(w, t_off):
            t = t0 + t_off
            return np.array([t ** 3]), np.array([3.0 * t * t])
        return rhs_pair

    y = np.array([0.0])
    t = 0.0
    dt = 0.25
    for _ in range(4):
        y = s2o4_step(y, dt, rhs_pair_factory(t))
        t += dt
    assert y[0] == pytest.approx(1.0 ** 4 / 4.0, rel=1e-13)


def _uniform_field(gas, speed, p=1.0, rho=1.4, ndim=1):
    if ndim == 1:
        m = Mesh(10, (0.0, 1.0))
    else:
        m = Mesh(10, (0.0, 1.0), ny=20, ylim=(0.0, 1.0))
    fld = Field(m)
    q = np.ones(m.shape_padded + (4,))
    q[..., 0] = rho
    q[..., 1] = speed
    q[..., 2] = 0.0
    q[..., 3] = p
    fld.w[...] = prim_to_cons(q, gas)
    return fld


def test_compute_dt_acoustic_bound(gas):
    fld = _uniform_field(gas, 0.5)  # c = 1, max signal 1.5
    dt = compute_dt(fld, gas, 0.5, 5, "s2o4")
    assert dt == pytest.approx(0.5 * 0.1 / 1.5)


def test_compute_dt_uses_both_directions(gas):
    fld = _uniform_field(gas, 0.5, ndim=2)  # dy = 0.05 limits
    dt = compute_dt(fld, gas, 0.5, 5, "s2o4")
    assert dt == pytest.approx(0.5 * 0.05 / 1.0)


def test_compute_dt_scans_ghost_cells(gas):
    fld = _uniform_field(gas, 0.5)
    # fast inflow state only present in a ghost cell
    q = np.array([1.4, 30.0, 0.0, 1.0])
    fld.w[0, 0] = prim_to_cons(q, gas)
    dt = compute_dt(fld, gas, 0.5, 5, "s2o4")
    assert dt == pytest.approx(0.5 * 0.1 / 31.0)


def test_compute_dt_accuracy_cap(gas):
    fld = _uniform_field(gas, 0.0)
    capped = compute_dt(fld, gas, 0.5, 9, "s2o4", accuracy_cap=True)
    assert capped == pytest.approx(0.1 ** (9.0 / 4.0))
    loose = compute_dt(fld, gas, 0.5, 9, "s2o4", accuracy_cap=False)
    assert loose > capped


def test_compute_dt_viscous_bound(gas):
    fld = _uniform_field(gas, 0.0)
    mu = 0.5
    dt = compute_dt(fld, gas, 0.5, 5, "s2o4", mu=mu)
    assert dt == pytest.approx(0.25 * 0.1 * 0.1 * 1.4 / mu)


def test_compute_dt_clips_to_t_end(gas):
    fld = _uniform_field(gas, 0.5)
    fld.time = 0.99
    dt = compute_dt(fld, gas, 0.5, 5, "s2o4", t_end=1.0)
    assert dt == pytest.approx(0.01)
    fld.time = 1.0
    assert compute_dt(fld, gas, 0.5, 5, "s2o4", t_end=1.0) == 0.0


def test_compute_dt_rejects_unknown_scheme(gas):
    fld = _uniform_field(gas, 0.5)
    with pytest.raises(ValueError):
        compute_dt(fld, gas, 0.5, 5, "rk4")
