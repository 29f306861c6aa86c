"""File output: 1-D CSV lines, 2-D legacy structured-points text, reports.

The 2-D writer emits the classic visualization-tool text layout
(DATASET STRUCTURED_POINTS with POINT_DATA), mapping cell averages to
the (nx+1) x (ny+1) grid points by edge-clamped 4-neighbor averaging.
A reader for the same layout backs the write/read roundtrip check.
"""
from __future__ import annotations

import os

import numpy as np

from .state import GasModel, cons_to_prim

__all__ = [
    "IOFailure",
    "cell_to_point",
    "write_csv_1d",
    "read_csv_1d",
    "write_vtk_2d",
    "read_vtk",
    "write_report",
    "read_report",
]

_FMT = "%.17g"


class IOFailure(RuntimeError):
    pass


def _ensure_dir(path):
    d = os.path.dirname(os.path.abspath(path))
    os.makedirs(d, exist_ok=True)


def cell_to_point(arr: np.ndarray) -> np.ndarray:
    """Edge-clamped 4-neighbor average from (nx, ny) cells to grid points."""
    a = np.pad(arr, 1, mode="edge")
    return 0.25 * (a[:-1, :-1] + a[1:, :-1] + a[:-1, 1:] + a[1:, 1:])


def write_csv_1d(path, field, gas: GasModel) -> str:
    """Cell-center line data: x, rho, U, p; one row per cell."""
    mesh = field.mesh
    if mesh.ndim != 1:
        raise IOFailure("csv writer is for 1-D fields")
    q = cons_to_prim(field.interior, gas)
    rho, U, p = q[..., 0], q[..., 1], q[..., 3]
    x = mesh.x_centers()
    _ensure_dir(path)
    with open(path, "w") as f:
        f.write("x,rho,U,p\n")
        for i in range(mesh.nx):
            f.write(",".join(_FMT % v for v in
                             (x[i], rho[i, 0], U[i, 0], p[i, 0])) + "\n")
    return path


def read_csv_1d(path):
    data = np.loadtxt(path, delimiter=",", skiprows=1, ndmin=2)
    return {"x": data[:, 0], "rho": data[:, 1], "U": data[:, 2],
            "p": data[:, 3]}


def write_vtk_2d(path, field, gas: GasModel, title="asedf field") -> str:
    """Structured-points text output of rho, U, V, p at grid points."""
    mesh = field.mesh
    if mesh.ndim != 2:
        raise IOFailure("structured-points writer is for 2-D fields")
    q = cons_to_prim(field.interior, gas)
    rho, U, V, p = (q[..., i] for i in range(4))
    _ensure_dir(path)
    npts = (mesh.nx + 1) * (mesh.ny + 1)
    with open(path, "w") as f:
        f.write("# vtk DataFile Version 3.0\n")
        f.write(title + "\n")
        f.write("ASCII\n")
        f.write("DATASET STRUCTURED_POINTS\n")
        f.write(f"DIMENSIONS {mesh.nx + 1} {mesh.ny + 1} 1\n")
        f.write(f"ORIGIN {_FMT % mesh.xlim[0]} {_FMT % mesh.ylim[0]} 0\n")
        f.write(f"SPACING {_FMT % mesh.dx} {_FMT % mesh.dy} 1\n")
        f.write(f"POINT_DATA {npts}\n")
        for name, q in (("rho", rho), ("U", U), ("V", V), ("p", p)):
            f.write(f"SCALARS {name} double 1\n")
            f.write("LOOKUP_TABLE default\n")
            pts = cell_to_point(q)
            # x varies fastest in the point ordering
            for v in pts.flatten(order="F"):
                f.write(_FMT % v + "\n")
    return path


def read_vtk(path):
    """Parse the structured-points layout written by write_vtk_2d."""
    with open(path) as f:
        lines = [ln.rstrip("\n") for ln in f]
    out = {}
    i = 0
    dims = None
    while i < len(lines):
        ln = lines[i]
        if ln.startswith("DIMENSIONS"):
            dims = tuple(int(v) for v in ln.split()[1:])
            out["dimensions"] = dims
        elif ln.startswith("ORIGIN"):
            out["origin"] = tuple(float(v) for v in ln.split()[1:])
        elif ln.startswith("SPACING"):
            out["spacing"] = tuple(float(v) for v in ln.split()[1:])
        elif ln.startswith("SCALARS"):
            name = ln.split()[1]
            if dims is None:
                raise IOFailure("SCALARS before DIMENSIONS")
            npts = dims[0] * dims[1] * dims[2]
            vals = np.array([float(v) for v in lines[i + 2:i + 2 + npts]])
            out[name] = vals.reshape((dims[0], dims[1]), order="F")
            i += 1 + npts
        i += 1
    return out


def write_report(path, mapping) -> str:
    """key: value lines, one entry per line, insertion order kept."""
    _ensure_dir(path)
    with open(path, "w") as f:
        for k, v in mapping.items():
            if isinstance(v, float):
                v = _FMT % v
            f.write(f"{k}: {v}\n")
    return path


def read_report(path) -> dict[str, str]:
    out = {}
    with open(path) as f:
        for ln in f:
            ln = ln.strip()
            if not ln or ":" not in ln:
                continue
            k, v = ln.split(":", 1)
            out[k.strip()] = v.strip()
    return out
