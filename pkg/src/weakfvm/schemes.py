"""Interface fluxes and the conservative finite-volume update.

Two interface fluxes are provided:

* ``fdsj``: the upwind flux difference splitting built on the Jordan-chain
  wave basis. With all eigenvalues equal the dissipation collapses to
  |lambda_bar| DU, so the flux is

      F_I = (F_L + F_R)/2 - fix(lambda_bar, eps) (U_R - U_L)/2

  with ``fix`` Harten's entropy fix on the averaged speed.
* ``llf``: local Lax-Friedrichs with coefficient max(|u_L|, |u_R|).

Time integration is first-order forward Euler on a uniform grid, matching
the update U_j^{n+1} = U_j^n - dt/dx (F_{j+1/2} - F_{j-1/2}).
"""

from __future__ import annotations

from dataclasses import dataclass, replace

import numpy as np

from . import jordan
from .errors import BlowUpError, InvalidInputError, PreconditionError
from .models import PressurelessGas, SystemModel

SPEED_FLOOR = 1e-8

BOUNDARY_KINDS = ("periodic", "transmissive")


@dataclass(frozen=True)
class SchemeConfig:
    scheme: str = "fdsj"
    entropy_fix_epsilon: float = 0.0
    cfl: float = 0.45

    def __post_init__(self):
        if self.scheme not in ("fdsj", "llf"):
            raise InvalidInputError(f"unknown scheme {self.scheme!r}")
        if self.entropy_fix_epsilon < 0.0:
            raise InvalidInputError("entropy_fix_epsilon must be nonnegative")
        if not 0.0 < self.cfl <= 1.0:
            raise InvalidInputError("cfl must lie in (0, 1]")


@dataclass(frozen=True)
class GridSolution:
    """Uniform 1-D field of cell averages."""

    x_min: float
    x_max: float
    n_cells: int
    time: float
    cells: np.ndarray
    boundary_kind: str = "transmissive"

    def __post_init__(self):
        if self.x_max <= self.x_min:
            raise InvalidInputError("x_max must exceed x_min")
        if self.n_cells < 1 or self.cells.shape[0] != self.n_cells:
            raise InvalidInputError("cells array does not match n_cells")
        if self.boundary_kind not in BOUNDARY_KINDS:
            raise InvalidInputError(f"unknown boundary kind {self.boundary_kind!r}")
        if self.time < 0.0:
            raise InvalidInputError("time must be nonnegative")

    @property
    def dx(self) -> float:
        return (self.x_max - self.x_min) / self.n_cells

    @property
    def cell_centers(self) -> np.ndarray:
        return self.x_min + (np.arange(self.n_cells) + 0.5) * self.dx


def harten_fix(lam, epsilon: float):
    """|lam|, smoothed below epsilon to (lam^2/eps + eps)/2; eps = 0 disables."""
    lam = np.asarray(lam, dtype=float)
    a = np.abs(lam)
    if epsilon == 0.0:
        return a if a.ndim else float(a)
    out = np.where(a >= epsilon, a, 0.5 * (lam * lam / epsilon + epsilon))
    return out if out.ndim else float(out)


def fdsj_flux(model: SystemModel, UL, UR, cfg: SchemeConfig):
    """Jordan-chain FDS interface flux for one state pair."""
    UL = np.asarray(UL, dtype=float)
    UR = np.asarray(UR, dtype=float)
    if np.array_equal(UL, UR):
        return model.flux(UL)
    if isinstance(model, PressurelessGas):
        lam_bar = model.average_state(UL, UR, clamp=True).lambda_bar
    else:
        lam_bar = model.average_state(UL, UR).lambda_bar
    a = harten_fix(lam_bar, cfg.entropy_fix_epsilon)
    return 0.5 * (model.flux(UL) + model.flux(UR)) - 0.5 * a * (UR - UL)


def llf_flux(model: SystemModel, UL, UR):
    """Local Lax-Friedrichs interface flux for one state pair."""
    UL = np.asarray(UL, dtype=float)
    UR = np.asarray(UR, dtype=float)
    if np.array_equal(UL, UR):
        return model.flux(UL)
    a = max(abs(float(model.eigenvalue(UL))), abs(float(model.eigenvalue(UR))))
    return 0.5 * (model.flux(UL) + model.flux(UR)) - 0.5 * a * (UR - UL)


def _ghosted(sol: GridSolution) -> np.ndarray:
    if sol.boundary_kind == "periodic":
        return np.concatenate([sol.cells[-1:], sol.cells, sol.cells[:1]])
    return np.concatenate([sol.cells[:1], sol.cells, sol.cells[-1:]])


def interface_fluxes(model: SystemModel, sol: GridSolution, cfg: SchemeConfig) -> np.ndarray:
    """All n_cells + 1 interface fluxes from the frozen solution."""
    ext = _ghosted(sol)
    UL, UR = ext[:-1], ext[1:]
    FL, FR = model.flux(UL), model.flux(UR)
    if cfg.scheme == "fdsj":
        a = harten_fix(model.interface_lambda(UL, UR), cfg.entropy_fix_epsilon)
    else:
        a = np.maximum(np.abs(model.eigenvalue(UL)), np.abs(model.eigenvalue(UR)))
    return 0.5 * (FL + FR) - 0.5 * a[:, None] * (UR - UL)


def max_stable_dt(model: SystemModel, sol: GridSolution, cfl: float) -> float:
    """CFL-limited time step; a small speed floor guards the all-zero state."""
    speed = float(np.abs(model.eigenvalue(sol.cells)).max())
    return cfl * sol.dx / max(speed, SPEED_FLOOR)


def step(model: SystemModel, sol: GridSolution, cfg: SchemeConfig, dt: float) -> GridSolution:
    """One conservative forward-Euler update by dt."""
    if dt <= 0.0:
        raise InvalidInputError("dt must be positive")
    # Overflow en route to blow-up is expected; the finite check below reports it.
    with np.errstate(over="ignore", invalid="ignore"):
        F = interface_fluxes(model, sol, cfg)
        new_cells = sol.cells - (dt / sol.dx) * (F[1:] - F[:-1])
    bad = ~np.all(np.isfinite(new_cells), axis=1)
    if np.any(bad):
        raise BlowUpError(int(np.argmax(bad)), sol.time + dt)
    return replace(sol, cells=new_cells, time=sol.time + dt)


def run(model: SystemModel, sol: GridSolution, cfg: SchemeConfig, t_final: float) -> GridSolution:
    """Advance to exactly t_final, truncating the last step."""
    if t_final < sol.time:
        raise PreconditionError(f"t_final {t_final} precedes current time {sol.time}")
    eps = 1e-13 * (1.0 + abs(t_final))
    while sol.time < t_final - eps:
        dt = min(max_stable_dt(model, sol, cfg.cfl), t_final - sol.time)
        sol = step(model, sol, cfg, dt)
    if sol.time != t_final and abs(sol.time - t_final) <= eps:
        sol = replace(sol, time=t_final)
    return sol


def wave_strengths(model: SystemModel, UL, UR, tol: float = jordan.DEFAULT_TOL) -> np.ndarray:
    """Diagnostic decomposition DU = P alpha over the Jordan-chain basis of
    the linearized Jacobian. Plays no role in the update (the dissipation
    collapses to |lambda_bar| DU); exposed for inspection only."""
    UL = np.asarray(UL, dtype=float)
    UR = np.asarray(UR, dtype=float)
    if isinstance(model, PressurelessGas):
        lam_bar = model.average_state(UL, UR, clamp=True).lambda_bar
        A = model.jacobian_at_lambda(lam_bar)
    else:
        # Off-u rows of the linearization are unconstrained by the scheme;
        # use the midpoint state, which is exact in the u-row.
        A = model.jacobian(0.5 * (UL + UR))
        lam_bar = model.average_state(UL, UR).lambda_bar
    s = jordan.block_size(A, lam_bar, tol)
    chain = jordan.build_chain(A, lam_bar, s, tol=tol)
    return np.linalg.solve(chain.matrix(), UR - UL)
