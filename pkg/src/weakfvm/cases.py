"""Named experiment catalog: initial data, boundary kinds, final times, and
the reference solutions / structure metrics the acceptance checks use.

Case names (stable external strings):
    pressureless-riemann, pressureless-positivity, modburgers-smooth,
    modburgers-sonic, further-modburgers-smooth
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np

from .errors import InvalidInputError, MetricError, NotCompressiveError, OracleError
from .models import FurtherModifiedBurgers, ModifiedBurgers, PressurelessGas, SystemModel
from .schemes import GridSolution

SHOCK_TIME = 3.0 / (2.0 * np.pi)  # smooth sine data steepens into a shock near here
ORACLE_T_MAX = 0.3  # strictly before characteristic crossing at 1/pi


@dataclass(frozen=True)
class CaseSpec:
    name: str
    model: SystemModel
    x_min: float
    x_max: float
    initial: Callable[[np.ndarray], np.ndarray]
    boundary_kind: str
    t_final: float
    epsilon: float  # recommended entropy-fix epsilon (0 = off)


def _riemann(left: np.ndarray, right: np.ndarray, x0: float):
    def ic(x: np.ndarray) -> np.ndarray:
        x = np.asarray(x, dtype=float)
        return np.where(x[:, None] < x0, left[None, :], right[None, :])

    return ic


def _sine_ic(dim: int):
    # u = 1/2 + sin(pi x) and its successive x-derivatives.
    def ic(x: np.ndarray) -> np.ndarray:
        x = np.asarray(x, dtype=float)
        comps = [
            0.5 + np.sin(np.pi * x),
            np.pi * np.cos(np.pi * x),
            -np.pi**2 * np.sin(np.pi * x),
            -np.pi**3 * np.cos(np.pi * x),
        ]
        return np.stack(comps[:dim], axis=-1)

    return ic


def make_positivity_case(
    rho_l: float = 1.0,
    u_l: float = -0.5,
    rho_r: float = 1.0,
    u_r: float = 0.5,
    x0: float = 0.0,
    t_final: float = 0.1,
    epsilon: float | None = None,
) -> CaseSpec:
    """Vacuum-forming two-rarefaction stressor for density positivity and the
    velocity maximum principle. States are configurable; the defaults are an
    implementer choice, not published data.

    The entropy-fix default is 2 max(|u_L|, |u_R|): the fix floors the
    dissipation at epsilon/2, and the vacuum region needs that floor at or
    above the local wave speed or the velocity overshoots its bounds and
    the run diverges."""
    if epsilon is None:
        epsilon = 2.0 * max(abs(u_l), abs(u_r))
    left = np.array([rho_l, rho_l * u_l])
    right = np.array([rho_r, rho_r * u_r])
    return CaseSpec(
        "pressureless-positivity",
        PressurelessGas(),
        -0.5,
        0.5,
        _riemann(left, right, x0),
        "transmissive",
        t_final,
        epsilon,
    )


def catalog() -> list[CaseSpec]:
    """The five canonical experiments."""
    return [
        CaseSpec(
            "pressureless-riemann",
            PressurelessGas(),
            -0.5,
            0.5,
            _riemann(np.array([1.0, 1.5]), np.array([0.2, 0.0]), 0.0),
            "transmissive",
            0.2,
            0.0,
        ),
        make_positivity_case(),
        CaseSpec(
            "modburgers-smooth",
            ModifiedBurgers(),
            0.0,
            2.0,
            _sine_ic(2),
            "periodic",
            SHOCK_TIME,
            0.0,
        ),
        CaseSpec(
            "modburgers-sonic",
            ModifiedBurgers(),
            0.0,
            2.0,
            _riemann(np.array([-2.0, 1.0]), np.array([4.0, -2.0]), 1.0),
            "transmissive",
            0.125,
            0.4,  # 0.1 * max wave speed
        ),
        CaseSpec(
            "further-modburgers-smooth",
            FurtherModifiedBurgers(),
            0.0,
            2.0,
            _sine_ic(4),
            "periodic",
            SHOCK_TIME,
            0.0,
        ),
    ]


def get_case(name: str) -> CaseSpec:
    for case in catalog():
        if case.name == name:
            return case
    raise InvalidInputError(
        f"unknown case {name!r}; valid: {[c.name for c in catalog()]}"
    )


def initial_solution(case: CaseSpec, n_cells: int) -> GridSolution:
    """Cell-average field sampled at cell centers (first-order consistent)."""
    if n_cells < 4:
        raise InvalidInputError("need at least 4 cells")
    dx = (case.x_max - case.x_min) / n_cells
    x = case.x_min + (np.arange(n_cells) + 0.5) * dx
    cells = np.asarray(case.initial(x), dtype=float)
    if not np.all(np.isfinite(cells)):
        raise InvalidInputError(f"case {case.name}: non-finite initial data")
    return GridSolution(case.x_min, case.x_max, n_cells, 0.0, cells, case.boundary_kind)


def burgers_oracle(x, t: float, tol: float = 1e-12):
    """Pre-shock exact solution of u_t + (u^2/2)_x = 0 with u0 = 1/2 + sin(pi x),
    by Newton iteration on the characteristic relation u = u0(x - u t)."""
    if t > ORACLE_T_MAX:
        raise InvalidInputError(f"oracle valid only for t <= {ORACLE_T_MAX} (pre-shock)")
    x = np.asarray(x, dtype=float)
    scalar = x.ndim == 0
    x = np.atleast_1d(x)
    u = 0.5 + np.sin(np.pi * x)
    for _ in range(200):
        g = u - 0.5 - np.sin(np.pi * (x - u * t))
        if np.all(np.abs(g) <= tol):
            return float(u[0]) if scalar else u
        gp = 1.0 + np.pi * t * np.cos(np.pi * (x - u * t))
        # gp >= 1 - pi t > 0 pre-shock; the clip only guards roundoff
        u = u - g / np.clip(gp, 1e-3, None)
    raise OracleError("characteristic iteration did not converge (post-shock query?)")


def burgers_oracle_slope(x, t: float, tol: float = 1e-12):
    """v = u_x of the oracle, from implicit differentiation of the
    characteristic relation."""
    u = burgers_oracle(x, t, tol)
    c = np.pi * np.cos(np.pi * (np.asarray(x, dtype=float) - u * t))
    return c / (1.0 + t * c)


def delta_shock_reference(UL, UR) -> float:
    """Singular-shock speed for compressive pressureless Riemann data: the
    sqrt(rho)-weighted velocity mean. Location at time t is x0 + s t."""
    UL = np.asarray(UL, dtype=float)
    UR = np.asarray(UR, dtype=float)
    rho_l, rho_r = float(UL[0]), float(UR[0])
    if rho_l <= 0.0 or rho_r <= 0.0:
        raise InvalidInputError("densities must be positive")
    u_l, u_r = float(UL[1]) / rho_l, float(UR[1]) / rho_r
    if u_l <= u_r:
        raise NotCompressiveError(f"u_L = {u_l} must exceed u_R = {u_r}")
    sl, sr = np.sqrt(rho_l), np.sqrt(rho_r)
    return (sl * u_l + sr * u_r) / (sl + sr)


def spike_centroid(sol: GridSolution, component: int = 0, frac: float = 0.5) -> float:
    """Mass-weighted centroid of the cells whose ``component`` value is at
    least ``frac`` of its maximum; locates a delta-type spike robustly."""
    vals = sol.cells[:, component]
    mask = vals >= frac * vals.max()
    if not np.any(mask):
        raise MetricError("no cells above the spike threshold")
    x = sol.cell_centers[mask]
    w = vals[mask]
    return float((x * w).sum() / w.sum())


def _locate_jump(vals: np.ndarray) -> int:
    return int(np.argmax(np.abs(np.diff(vals))))


def shock_width(sol: GridSolution, component: int, lo: float, hi: float) -> int:
    """Number of transitional cells across the steepest jump of a component:
    cells contiguous with the jump whose values lie strictly inside
    (lo + d, hi - d), d = 0.05 (hi - lo)."""
    if not lo < hi:
        raise MetricError("need lo < hi")
    vals = sol.cells[:, component]
    d = 0.05 * (hi - lo)
    if vals.max() < hi - d or vals.min() > lo + d:
        raise MetricError("jump bracket (lo, hi) not found in the data")
    inner = (vals > lo + d) & (vals < hi - d)
    j = _locate_jump(vals)
    count = 0
    i = j
    while i >= 0 and inner[i]:
        count += 1
        i -= 1
    i = j + 1
    while i < sol.n_cells and inner[i]:
        count += 1
        i += 1
    return count


def jump_midpoint(sol: GridSolution, component: int, lo: float, hi: float) -> float:
    """x-position where the component crosses (lo + hi)/2 at its steepest jump,
    by linear interpolation between the bracketing cells."""
    vals = sol.cells[:, component]
    mid = 0.5 * (lo + hi)
    j = _locate_jump(vals)
    x = sol.cell_centers
    # Scan outward from the jump for the crossing interval.
    order = sorted(range(sol.n_cells - 1), key=lambda i: abs(i - j))
    for i in order:
        a, b = vals[i], vals[i + 1]
        if (a - mid) * (b - mid) <= 0.0 and a != b:
            return float(x[i] + (mid - a) / (b - a) * (x[i + 1] - x[i]))
    raise MetricError("no crossing of the jump midpoint found")
