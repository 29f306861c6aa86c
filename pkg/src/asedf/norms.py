"""Error norms and convergence-order bookkeeping."""
from __future__ import annotations

import math

import numpy as np

__all__ = ["l1_density_error", "observed_orders"]


def l1_density_error(field, exact_rho) -> float:
    """Mean absolute cell-average density error against an exact profile.

    exact_rho(mesh, t) must return exact cell averages on the interior
    shape, so the comparison is projection-consistent.
    """
    ex = np.asarray(exact_rho(field.mesh, field.time))
    if ex.ndim == 1:
        ex = ex[:, None]
    return float(np.mean(np.abs(field.interior[..., 0] - ex)))


def observed_orders(errors) -> list[float]:
    """Pairwise orders log2(e_N / e_2N) for a doubling refinement chain.

    Nonpositive or zero errors give nan entries (order undefined).
    """
    out = []
    for a, b in zip(errors[:-1], errors[1:]):
        if a > 0.0 and b > 0.0:
            out.append(math.log2(a / b))
        else:
            out.append(float("nan"))
    return out
