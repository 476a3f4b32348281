"""Built-in invariant suite behind the ``verify`` CLI subcommand.

A quick, self-contained subset of the library's invariants; the full pytest
suite is the authoritative check.
"""

from __future__ import annotations

import numpy as np

from . import jordan
from .cases import catalog, initial_solution
from .models import FurtherModifiedBurgers, ModifiedBurgers, PressurelessGas
from .schemes import SchemeConfig, harten_fix, interface_fluxes, max_stable_dt, step


def _check_roe_property(rng) -> tuple[bool, str]:
    model = PressurelessGas()
    worst = 0.0
    for _ in range(200):
        rho = rng.uniform(1e-3, 10.0, size=2)
        u = rng.uniform(-5.0, 5.0, size=2)
        UL = np.array([rho[0], rho[0] * u[0]])
        UR = np.array([rho[1], rho[1] * u[1]])
        dF = np.abs(model.flux(UR) - model.flux(UL)).max()
        worst = max(worst, model.roe_property_residual(UL, UR) / (1.0 + dF))
    return worst <= 1e-10, f"max scaled residual {worst:.2e}"


def _check_jordan_blocks(rng) -> tuple[bool, str]:
    sizes = []
    for model, expected in (
        (PressurelessGas(), 2),
        (ModifiedBurgers(), 2),
        (FurtherModifiedBurgers(), 4),
    ):
        for _ in range(20):
            if isinstance(model, PressurelessGas):
                rho = rng.uniform(0.1, 5.0)
                u = rng.uniform(-3.0, 3.0)
                U = np.array([rho, rho * u])
                lam = u
            else:
                U = rng.uniform(0.3, 3.0, size=model.dim) * rng.choice([-1.0, 1.0], model.dim)
                lam = U[0]
            A = model.jacobian(U)
            s = jordan.block_size(A, lam)
            sizes.append(s == expected)
            chain = jordan.build_chain(A, lam, s)
            sizes.append(chain.residual <= 1e-10 * (1.0 + np.abs(A).sum(axis=1).max()))
    return all(sizes), f"{sum(sizes)}/{len(sizes)} checks"


def _check_entropy_fix() -> tuple[bool, str]:
    lams = np.linspace(-2.0, 2.0, 401)
    ok = True
    for eps in (0.05, 0.1, 0.5):
        fixed = harten_fix(lams, eps)
        ok &= bool(np.all(fixed >= np.abs(lams) - 1e-15))
        ok &= bool(np.all(fixed >= eps / 2 - 1e-15))
        ok &= abs(harten_fix(eps, eps) - eps) <= 1e-14
        ok &= abs(harten_fix(-eps, eps) - eps) <= 1e-14
    return ok, "monotone bound and continuity at |lam| = eps"


def _check_conservation() -> tuple[bool, str]:
    worst = 0.0
    for case in catalog():
        sol = initial_solution(case, 64)
        cfg = SchemeConfig("fdsj", case.epsilon, 0.45)
        dt = max_stable_dt(case.model, sol, cfg.cfl)
        F = interface_fluxes(case.model, sol, cfg)
        new = step(case.model, sol, cfg, dt)
        change = (new.cells - sol.cells).sum(axis=0) * sol.dx
        expected = -dt * (F[-1] - F[0])
        scale = 1.0 + np.abs(sol.cells).sum()
        worst = max(worst, float(np.abs(change - expected).max()) / scale)
    return worst <= 1e-12, f"max scaled defect {worst:.2e}"


def run_verification() -> list[tuple[str, bool, str]]:
    rng = np.random.default_rng(1234)
    return [
        ("roe-property", *_check_roe_property(rng)),
        ("jordan-blocks", *_check_jordan_blocks(rng)),
        ("entropy-fix", *_check_entropy_fix()),
        ("conservation", *_check_conservation()),
    ]
