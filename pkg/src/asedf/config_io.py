"""Plain key = value case configuration files.

A config names a registered case and may override mesh size, terminal
time, flux choice and scheme numerics, so parameter studies are just
config sweeps.  Unknown keys are rejected to catch typos early.
"""
from __future__ import annotations

from dataclasses import replace

from .cases import CaseSetup, build

__all__ = ["parse_config", "load_case_config", "CONFIG_KEYS"]

# keys that travel to the solver rather than the case definition
SOLVER_KEYS = ("order", "sigma_thres", "flux", "cfl")
CASE_KEYS = ("case", "nx", "ny", "t_end", "c1", "c2")
CONFIG_KEYS = CASE_KEYS + SOLVER_KEYS

_INT_KEYS = ("nx", "ny", "order")
_FLOAT_KEYS = ("t_end", "c1", "c2", "sigma_thres", "cfl")


def parse_config(path) -> dict[str, str]:
    """Read key = value lines; # starts a comment, blanks are skipped."""
    out = {}
    with open(path) as f:
        for ln_no, raw in enumerate(f, 1):
            ln = raw.split("#", 1)[0].strip()
            if not ln:
                continue
            if "=" not in ln:
                raise ValueError(f"{path}:{ln_no}: expected key = value")
            k, v = (s.strip() for s in ln.split("=", 1))
            if k not in CONFIG_KEYS:
                raise ValueError(f"{path}:{ln_no}: unknown key {k!r}")
            out[k] = v
    if "case" not in out:
        raise ValueError(f"{path}: missing required key 'case'")
    return out


def _coerce(key, val):
    if key in _INT_KEYS:
        return int(val)
    if key in _FLOAT_KEYS:
        return float(val)
    return val


def load_case_config(path, overrides=None) -> tuple[CaseSetup, dict]:
    """Build the configured case; returns (setup, solver options).

    overrides (e.g. CLI flags) win over file values; None entries are
    ignored.
    """
    raw = parse_config(path)
    opts = {k: _coerce(k, v) for k, v in raw.items()}
    if overrides:
        for k, v in overrides.items():
            if v is None:
                continue
            if k not in CONFIG_KEYS:
                raise ValueError(f"unknown override {k!r}")
            opts[k] = _coerce(k, v)
    setup = build(opts["case"], opts.get("nx"), opts.get("ny"))
    for k in ("t_end", "c1", "c2"):
        if k in opts:
            setup = replace(setup, **{k: opts[k]})
    solver_opts = {k: opts[k] for k in SOLVER_KEYS if k in opts}
    return setup, solver_opts
