"""Adaptive-stencil-extension finite-volume solver for compressible flow.

High-order (5th/7th/9th) WENO-style reconstruction whose stencil grows
only while the interface neighborhood looks smooth, with a
discontinuity-feedback factor damping the polynomial near shocks.
Interface fluxes come from either a gas-kinetic BGK solver (with an
analytic flux time derivative, enabling two-stage fourth-order time
marching) or a Lax-Friedrichs solver paired with SSP-RK3.
"""

from .state import (GasModel, StateInvalid, cons_to_prim, prim_to_cons,
                    pressure, sound_speed, euler_flux_x)
from .mesh import (GHOST, Mesh, Field, BoundarySpec, Periodic, Reflective,
                   SymmetryWall, NoSlipAdiabaticWall, Outflow,
                   DirichletProfile, PiecewiseSide, fill_ghosts,
                   conserved_total)
from .reconstruct import SchemeConfig, gauss_nodes, reconstruct_direction, update_sigmas
from .feedback import (SIGMA_THRES_DEFAULT, averaged_sigma, bootstrap_sigma,
                       sigma_point, df_alpha)
from .flux_lf import lf_flux, lf_flux_patch
from .gks import (collision_time, equilibrium_merge, gks_flux_patch,
                  gks_flux_point, gks_time_integrated_flux, micro_slope,
                  moment_matrix)
from .moments import psi_moment, slope_psi_moment, velocity_moments
from .timestep import CFL_DEFAULT, compute_dt, s2o4_step, ssp_rk3_step
from .solver import Solver, SolverStats
from .cases import CaseSetup, build, case_names, make_field, make_solver
from .norms import l1_density_error, observed_orders
from .probes import mass_flux_streamfunction, vortex_height
from .output import (IOFailure, read_csv_1d, read_report, read_vtk,
                     write_csv_1d, write_report, write_vtk_2d)
from .config_io import load_case_config, parse_config

__version__ = "0.1.0"

__all__ = [
    "GasModel", "StateInvalid", "cons_to_prim", "prim_to_cons", "pressure",
    "sound_speed", "euler_flux_x",
    "GHOST", "Mesh", "Field", "BoundarySpec", "Periodic", "Reflective",
    "SymmetryWall", "NoSlipAdiabaticWall", "Outflow", "DirichletProfile",
    "PiecewiseSide", "fill_ghosts", "conserved_total",
    "SchemeConfig", "gauss_nodes", "reconstruct_direction", "update_sigmas",
    "SIGMA_THRES_DEFAULT", "averaged_sigma", "bootstrap_sigma", "sigma_point",
    "df_alpha",
    "lf_flux", "lf_flux_patch",
    "collision_time", "equilibrium_merge", "gks_flux_patch",
    "gks_flux_point", "gks_time_integrated_flux", "micro_slope",
    "moment_matrix", "psi_moment", "slope_psi_moment", "velocity_moments",
    "CFL_DEFAULT", "compute_dt", "s2o4_step", "ssp_rk3_step",
    "Solver", "SolverStats",
    "CaseSetup", "build", "case_names", "make_field", "make_solver",
    "l1_density_error", "observed_orders",
    "mass_flux_streamfunction", "vortex_height",
    "IOFailure", "read_csv_1d", "read_report", "read_vtk", "write_csv_1d",
    "write_report", "write_vtk_2d",
    "load_case_config", "parse_config",
    "__version__",
]
