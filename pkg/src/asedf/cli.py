"""Command-line front end: run, converge, bench."""
from __future__ import annotations

import argparse
import math
import os
import sys

import numpy as np

from .cases import build, make_field, make_solver
from .config_io import load_case_config
from .mesh import conserved_total
from .norms import l1_density_error, observed_orders
from .output import write_csv_1d, write_report, write_vtk_2d
from .probes import vortex_height
from .state import StateInvalid

__all__ = ["main"]


def _parse_mesh(spec: str):
    if spec is None:
        return None, None
    parts = spec.lower().split("x")
    if len(parts) == 1:
        return int(parts[0]), None
    if len(parts) == 2:
        return int(parts[0]), int(parts[1])
    raise ValueError(f"bad mesh spec {spec!r}; use NX or NXxNY")


def _drift(before, after):
    scale = np.maximum(np.abs(before), 1.0)
    return float(np.max(np.abs(after - before) / scale))


def _run_one(setup, order, sigma_thres, flux, cfl, max_steps=None,
             t_end=None):
    fld = make_field(setup)
    solver = make_solver(setup, order=order, sigma_thres=sigma_thres,
                         flux=flux, cfl=cfl)
    before = conserved_total(fld)
    stats = solver.advance(fld, setup.t_end if t_end is None else t_end,
                           max_steps=max_steps)
    return fld, solver, stats, _drift(before, conserved_total(fld))


def cmd_run(args) -> int:
    overrides = {"order": args.order, "flux": args.flux,
                 "sigma_thres": args.sigma_thres}
    nx, ny = _parse_mesh(args.mesh)
    overrides["nx"] = nx
    overrides["ny"] = ny
    setup, opts = load_case_config(args.config, overrides)
    order = opts.get("order", 5)
    sigma_thres = opts.get("sigma_thres", 2.0)
    flux = opts.get("flux")
    cfl = opts.get("cfl")
    mesh_desc = f"{setup.mesh.nx}" if setup.mesh.ndim == 1 \
        else f"{setup.mesh.nx}x{setup.mesh.ny}"
    print(f"case {setup.name}: order {order}, flux {flux or setup.flux}, "
          f"mesh {mesh_desc}, t_end {setup.t_end:g}")
    try:
        fld, solver, stats, drift = _run_one(setup, order, sigma_thres,
                                             flux, cfl)
    except StateInvalid as e:
        print(f"FAILED: {e}", file=sys.stderr)
        return 1
    print(f"steps {stats.steps}, wall {stats.wall_time:.3f} s, "
          f"min rho {stats.min_rho:.6e}, min p {stats.min_p:.6e}, "
          f"df_events {stats.df_events}")
    print(f"conserved drift {drift:.3e}")

    tag = f"{setup.name}_o{order}"
    report = {
        "case": setup.name, "mesh": mesh_desc, "order": order,
        "flux": flux or setup.flux, "sigma_thres": sigma_thres,
        "t_end": setup.t_end, "t_final": fld.time, "steps": stats.steps,
        "wall_time": stats.wall_time, "min_rho": stats.min_rho,
        "min_p": stats.min_p, "df_events": stats.df_events,
        "conserved_drift": drift,
    }
    if setup.exact_rho is not None:
        err = l1_density_error(fld, setup.exact_rho)
        report["l1_error"] = err
        print(f"L1 density error {err:.6e}")
    if setup.name == "viscous_tube":
        h = vortex_height(fld)
        report["vortex_height"] = "absent" if h is None else h
        print(f"vortex height {report['vortex_height']}")
    os.makedirs(args.out, exist_ok=True)
    if setup.mesh.ndim == 1:
        data_path = write_csv_1d(os.path.join(args.out, tag + ".csv"),
                                 fld, setup.gas)
    else:
        data_path = write_vtk_2d(os.path.join(args.out, tag + ".vtk"),
                                 fld, setup.gas, title=tag)
    report["output"] = data_path
    report_path = write_report(os.path.join(args.out, tag + "_report.txt"),
                               report)
    print(f"wrote {data_path}")
    print(f"wrote {report_path}")
    return 0


def cmd_converge(args) -> int:
    overrides = {"order": args.order, "flux": args.flux,
                 "sigma_thres": args.sigma_thres}
    setup0, opts = load_case_config(args.config, overrides)
    order = opts.get("order", 5)
    sigma_thres = opts.get("sigma_thres", 2.0)
    flux = opts.get("flux")
    cfl = opts.get("cfl")
    if setup0.exact_rho is None:
        print(f"case {setup0.name} has no exact solution; cannot converge",
              file=sys.stderr)
        return 1
    levels = [int(s) for s in args.levels.split(",")]
    errors = []
    for n in levels:
        setup = build(setup0.name, nx=n,
                      ny=n if setup0.mesh.ndim == 2 else None)
        fld, _, stats, _ = _run_one(setup, order, sigma_thres, flux, cfl)
        errors.append(l1_density_error(fld, setup.exact_rho))
    orders = observed_orders(errors)
    print(f"case {setup0.name}, order {order}, flux {flux or setup0.flux}")
    print(f"{'N':>6}  {'L1':>14}  {'order':>6}")
    rows = []
    for i, (n, e) in enumerate(zip(levels, errors)):
        o = "-" if i == 0 else (f"{orders[i - 1]:.2f}"
                                if math.isfinite(orders[i - 1]) else "n/a")
        print(f"{n:>6}  {e:>14.6e}  {o:>6}")
        rows.append((n, e, o))
    os.makedirs(args.out, exist_ok=True)
    report = {"case": setup0.name, "order": order,
              "levels": ",".join(str(n) for n in levels),
              "errors": ",".join("%.17g" % e for e in errors),
              "orders": ",".join("-" if r[2] == "-" else r[2] for r in rows)}
    path = write_report(os.path.join(
        args.out, f"{setup0.name}_o{order}_converge_report.txt"), report)
    print(f"wrote {path}")
    return 0


def cmd_bench(args) -> int:
    overrides = {"sigma_thres": args.sigma_thres, "flux": args.flux}
    nx, ny = _parse_mesh(args.mesh)
    overrides["nx"] = nx
    overrides["ny"] = ny
    setup, opts = load_case_config(args.config, overrides)
    sigma_thres = opts.get("sigma_thres", 2.0)
    flux = opts.get("flux")
    cfl = opts.get("cfl")
    orders = [int(s) for s in args.orders.split(",")]

    # warm the compiled kernels on a small copy of the case
    warm = build(setup.name, nx=24, ny=24 if setup.mesh.ndim == 2 else None)
    _run_one(warm, max(orders), sigma_thres, flux, cfl, max_steps=2,
             t_end=math.inf)

    seconds = {}
    for order in orders:
        _, _, stats, _ = _run_one(setup, order, sigma_thres, flux, cfl,
                                  max_steps=args.steps, t_end=math.inf)
        seconds[order] = stats.wall_time
        base = seconds[orders[0]]
        ratio = "" if order == orders[0] else f"  (ratio {stats.wall_time / base:.3f})"
        print(f"order {order}: {stats.wall_time:.3f} s over {stats.steps} steps{ratio}")
    os.makedirs(args.out, exist_ok=True)
    report = {"case": setup.name,
              "mesh": f"{setup.mesh.nx}x{setup.mesh.ny}"
              if setup.mesh.ndim == 2 else str(setup.mesh.nx),
              "steps": args.steps,
              "orders": ",".join(str(o) for o in orders)}
    for o in orders:
        report[f"seconds_o{o}"] = seconds[o]
    for o in orders[1:]:
        report[f"ratio_o{o}"] = seconds[o] / seconds[orders[0]]
    path = write_report(os.path.join(args.out,
                                     f"{setup.name}_bench_report.txt"), report)
    print(f"wrote {path}")
    return 0


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(
        prog="asedf",
        description="Adaptive-stencil finite-volume compressible-flow bench")
    sub = ap.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("config", help="case config file (key = value)")
    common.add_argument("--order", type=int, choices=(5, 7, 9), default=None)
    common.add_argument("--flux", choices=("lf", "gks"), default=None)
    common.add_argument("--sigma-thres", dest="sigma_thres", type=float,
                        default=None)
    common.add_argument("--out", default="asedf_out",
                        help="output directory (default asedf_out)")

    p_run = sub.add_parser("run", parents=[common],
                           help="run one case to its terminal time")
    p_run.add_argument("--mesh", default=None, help="NX or NXxNY override")
    p_run.set_defaults(fn=cmd_run)

    p_conv = sub.add_parser("converge", parents=[common],
                            help="refinement study on a smooth case")
    p_conv.add_argument("--levels", default="20,40,80,160",
                        help="comma list of mesh sizes")
    p_conv.set_defaults(fn=cmd_converge)

    p_bench = sub.add_parser("bench", parents=[common],
                             help="fixed-step timing comparison across orders")
    p_bench.add_argument("--mesh", default=None, help="NX or NXxNY override")
    p_bench.add_argument("--steps", type=int, default=20)
    p_bench.add_argument("--orders", default="5,7,9")
    p_bench.set_defaults(fn=cmd_bench)

    args = ap.parse_args(argv)
    return args.fn(args)


if __name__ == "__main__":
    raise SystemExit(main())
