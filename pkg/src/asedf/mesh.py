"""Structured mesh, padded field storage, and boundary handling.

Cells are uniform rectangles.  Arrays are padded with GHOST layers on
every side; interior cell (i, j) lives at array index (i + GHOST,
j + GHOST).  One-dimensional meshes keep the same layout with a single
row and no y padding, so sweep kernels never branch on dimensionality.

The discontinuity-strength tables ride along with the field: sigma_x[s, j]
belongs to the x-interface between cells s-1 and s of row j (array
indices), sigma_y likewise with the roles of the axes swapped.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from .state import GasModel, prim_to_cons

__all__ = [
    "GHOST",
    "Mesh",
    "Field",
    "BoundarySpec",
    "Periodic",
    "Reflective",
    "SymmetryWall",
    "NoSlipAdiabaticWall",
    "Outflow",
    "DirichletProfile",
    "PiecewiseSide",
    "fill_ghosts",
    "conserved_total",
]

# Wide enough for the 9-point stencil applied one cell outside the domain,
# which is what the boundary-interface reconstruction needs.
GHOST = 5


@dataclass(frozen=True)
class Mesh:
    """Uniform rectangular mesh; ny=None selects a 1-D mesh."""

    nx: int
    xlim: tuple[float, float]
    ny: int | None = None
    ylim: tuple[float, float] | None = None

    def __post_init__(self):
        if self.nx < 1:
            raise ValueError("nx must be positive")
        if (self.ny is None) != (self.ylim is None):
            raise ValueError("ny and ylim must be given together")
        if self.ny is not None and self.ny < 1:
            raise ValueError("ny must be positive")

    @property
    def ndim(self) -> int:
        return 1 if self.ny is None else 2

    @property
    def dx(self) -> float:
        return (self.xlim[1] - self.xlim[0]) / self.nx

    @property
    def dy(self) -> float:
        if self.ny is None:
            return 1.0
        return (self.ylim[1] - self.ylim[0]) / self.ny

    @property
    def ny_cells(self) -> int:
        """Row count of the stored array (1 for 1-D meshes)."""
        return 1 if self.ny is None else self.ny

    @property
    def gy(self) -> int:
        """Ghost width in y; zero for 1-D meshes."""
        return 0 if self.ny is None else GHOST

    @property
    def shape_padded(self) -> tuple[int, int]:
        return (self.nx + 2 * GHOST, self.ny_cells + 2 * self.gy)

    def x_centers(self) -> np.ndarray:
        return self.xlim[0] + (np.arange(self.nx) + 0.5) * self.dx

    def y_centers(self) -> np.ndarray:
        if self.ny is None:
            return np.zeros(1)
        return self.ylim[0] + (np.arange(self.ny) + 0.5) * self.dy

    def x_faces(self) -> np.ndarray:
        return self.xlim[0] + np.arange(self.nx + 1) * self.dx

    def y_faces(self) -> np.ndarray:
        if self.ny is None:
            return np.array([0.0, 1.0])
        return self.ylim[0] + np.arange(self.ny + 1) * self.dy


class Field:
    """Padded conserved-variable storage plus the interface sigma tables."""

    def __init__(self, mesh: Mesh):
        self.mesh = mesh
        nxt, nyt = mesh.shape_padded
        self.w = np.zeros((nxt, nyt, 4))
        self.sigma_x = np.zeros((nxt + 1, nyt))
        # sigma_y exists only when there is a y direction to sweep
        self.sigma_y = np.zeros((nxt, nyt + 1)) if mesh.ndim == 2 else None
        self.time = 0.0

    @property
    def interior(self) -> np.ndarray:
        """View of the interior cells, shape (nx, ny_cells, 4)."""
        m = self.mesh
        return self.w[GHOST:GHOST + m.nx, m.gy:m.gy + m.ny_cells]

    def set_interior(self, values: np.ndarray) -> None:
        self.interior[...] = values

    def copy(self) -> "Field":
        out = Field(self.mesh)
        out.w[...] = self.w
        out.sigma_x[...] = self.sigma_x
        if self.sigma_y is not None:
            out.sigma_y[...] = self.sigma_y
        out.time = self.time
        return out


# ---------------------------------------------------------------------------
# boundary side specifications

class SideSpec:
    """Base class; subclasses fill one side's ghost block."""


class Periodic(SideSpec):
    pass


class Reflective(SideSpec):
    """Mirror the interior; the wall-normal momentum changes sign."""


class SymmetryWall(Reflective):
    """Symmetry plane; identical ghost construction to Reflective."""


class NoSlipAdiabaticWall(SideSpec):
    """Mirror the interior with both momentum components negated."""


class Outflow(SideSpec):
    """Zero-gradient: copy the nearest interior layer outward."""


class DirichletProfile(SideSpec):
    """Pin ghosts to a supplied primitive profile.

    Args:
        profile: callable (x, y, t) -> (rho, U, V, p); must broadcast over
            numpy coordinate arrays.
    """

    def __init__(self, profile: Callable):
        self.profile = profile


class PiecewiseSide(SideSpec):
    """Different side behaviour over ranges of the along-side coordinate.

    segments: sequence of (lo, hi, spec); cells whose center falls in
    [lo, hi) follow spec, everything else follows default.
    """

    def __init__(self, segments: Sequence[tuple[float, float, SideSpec]],
                 default: SideSpec | None = None):
        self.segments = list(segments)
        self.default = default if default is not None else Outflow()
        for _, _, s in self.segments:
            if isinstance(s, (Periodic, PiecewiseSide)):
                raise ValueError("segment spec must be a plain side type")


@dataclass(frozen=True)
class BoundarySpec:
    left: SideSpec
    right: SideSpec
    bottom: SideSpec | None = None
    top: SideSpec | None = None

    def __post_init__(self):
        if isinstance(self.left, Periodic) != isinstance(self.right, Periodic):
            raise ValueError("periodic sides must be paired (left/right)")
        if isinstance(self.bottom, Periodic) != isinstance(self.top, Periodic):
            raise ValueError("periodic sides must be paired (bottom/top)")


# ---------------------------------------------------------------------------
# ghost filling

def _side_fill(w, mesh, side, spec, gas, t, mask=None):
    """Fill one side's ghost block.  mask restricts the along-side index."""
    g = GHOST
    nx, nyc, gy = mesh.nx, mesh.ny_cells, mesh.gy
    sl_all = slice(None) if mask is None else mask

    if side in ("left", "right"):
        mom = 1
        if side == "left":
            ghost = w[:g]
            inner = w[g:2 * g]
            per_src = w[nx:nx + g]
            edge = w[g:g + 1]
        else:
            ghost = w[g + nx:]
            inner = w[nx:g + nx]
            per_src = w[g:2 * g]
            edge = w[g + nx - 1:g + nx]
    else:
        mom = 2
        if side == "bottom":
            ghost = w[:, :gy]
            inner = w[:, gy:2 * gy]
            per_src = w[:, nyc:nyc + gy]
            edge = w[:, gy:gy + 1]
        else:
            ghost = w[:, gy + nyc:]
            inner = w[:, nyc:gy + nyc]
            per_src = w[:, gy:2 * gy]
            edge = w[:, gy + nyc - 1:gy + nyc]
        # reorient so the fill logic below always sees axis 0 as the
        # side-normal direction
        ghost = ghost.transpose(1, 0, 2)
        inner = inner.transpose(1, 0, 2)
        per_src = per_src.transpose(1, 0, 2)
        edge = edge.transpose(1, 0, 2)

    if isinstance(spec, Periodic):
        ghost[:, sl_all] = per_src[:, sl_all]
    elif isinstance(spec, NoSlipAdiabaticWall):
        m = inner[::-1][:, sl_all].copy()
        m[..., 1] *= -1.0
        m[..., 2] *= -1.0
        ghost[:, sl_all] = m
    elif isinstance(spec, Reflective):
        m = inner[::-1][:, sl_all].copy()
        m[..., mom] *= -1.0
        ghost[:, sl_all] = m
    elif isinstance(spec, Outflow):
        ghost[:, sl_all] = edge[:, sl_all]
    elif isinstance(spec, DirichletProfile):
        xg, yg = _ghost_centers(mesh, side)
        # _ghost_centers already returns axis 0 as side-normal, matching
        # the reoriented ghost block
        rho, U, V, p = spec.profile(xg, yg, t)
        q = np.empty(xg.shape + (4,))
        q[..., 0], q[..., 1], q[..., 2], q[..., 3] = rho, U, V, p
        vals = prim_to_cons(q, gas)
        ghost[:, sl_all] = vals[:, sl_all]
    else:
        raise TypeError(f"unsupported side spec {type(spec).__name__}")


def _ghost_centers(mesh, side):
    """Cell-center coordinates of one side's ghost block.

    Returns (x, y) arrays shaped like the block with axis 0 the
    side-normal direction (outward-to-inward storage order, matching the
    array slices used by _side_fill).
    """
    g = GHOST
    xc_all = mesh.xlim[0] + (np.arange(-g, mesh.nx + g) + 0.5) * mesh.dx
    if mesh.ndim == 2:
        yc_all = mesh.ylim[0] + (np.arange(-g, mesh.ny + g) + 0.5) * mesh.dy
    else:
        yc_all = np.zeros(1)
    if side == "left":
        x = xc_all[:g]
        return x[:, None] + 0 * yc_all[None, :], 0 * x[:, None] + yc_all[None, :]
    if side == "right":
        x = xc_all[g + mesh.nx:]
        return x[:, None] + 0 * yc_all[None, :], 0 * x[:, None] + yc_all[None, :]
    gy = mesh.gy
    if side == "bottom":
        y = yc_all[:gy]
    else:
        y = yc_all[gy + mesh.ny_cells:]
    return 0 * y[:, None] + xc_all[None, :], y[:, None] + 0 * xc_all[None, :]


def _apply_side(w, mesh, side, spec, gas, t):
    if isinstance(spec, PiecewiseSide):
        coords = mesh.y_centers() if side in ("left", "right") else mesh.x_centers()
        # along-side storage index includes ghost layers
        pad = mesh.gy if side in ("left", "right") else GHOST
        lo = coords[0] - pad * (coords[1] - coords[0]) if coords.size > 1 else coords[0]
        step = (coords[1] - coords[0]) if coords.size > 1 else 1.0
        n_all = coords.size + 2 * pad
        cc = lo + np.arange(n_all) * step
        taken = np.zeros(n_all, dtype=bool)
        for a, b, sub in spec.segments:
            m = (cc >= a) & (cc < b) & ~taken
            taken |= m
            if m.any():
                _side_fill(w, mesh, side, sub, gas, t, mask=m)
        rest = ~taken
        if rest.any():
            _side_fill(w, mesh, side, spec.default, gas, t, mask=rest)
    else:
        _side_fill(w, mesh, side, spec, gas, t)


def fill_ghosts(field: Field, bc: BoundarySpec, gas: GasModel, t: float | None = None) -> None:
    """Populate every ghost layer, corners included.

    The x sides are filled first, then the y sides over the full padded
    width, which gives the corner blocks a consistent two-pass value.
    """
    if t is None:
        t = field.time
    mesh = field.mesh
    _apply_side(field.w, mesh, "left", bc.left, gas, t)
    _apply_side(field.w, mesh, "right", bc.right, gas, t)
    if mesh.ndim == 2:
        if bc.bottom is None or bc.top is None:
            raise ValueError("2-D mesh requires bottom and top side specs")
        _apply_side(field.w, mesh, "bottom", bc.bottom, gas, t)
        _apply_side(field.w, mesh, "top", bc.top, gas, t)


# ---------------------------------------------------------------------------
# sigma-table ghost filling

def conserved_total(field: Field) -> np.ndarray:
    """Volume integral of the conserved vector over the interior."""
    m = field.mesh
    vol = m.dx * (m.dy if m.ndim == 2 else 1.0)
    return field.interior.sum(axis=(0, 1)) * vol
