"""Finite-volume solvers for 1-D weakly hyperbolic conservation-law systems.

Upwind flux difference splitting built on Jordan-chain wave bases (the
``fdsj`` scheme) plus a Local Lax-Friedrichs baseline, with the pressureless
gas dynamics and derivative-augmented Burgers systems and their canonical
delta-shock experiments.
"""

from .cases import (
    CaseSpec,
    burgers_oracle,
    burgers_oracle_slope,
    catalog,
    delta_shock_reference,
    get_case,
    initial_solution,
    jump_midpoint,
    shock_width,
    spike_centroid,
)
from .jordan import (
    JordanChain,
    block_size,
    build_chain,
    chain_defect,
    chain_determinant,
    jordan_matrix,
    numeric_rank,
)
from .models import (
    AveragedState,
    FurtherModifiedBurgers,
    ModifiedBurgers,
    PressurelessGas,
    SystemModel,
    get_model,
)
from .schemes import (
    GridSolution,
    SchemeConfig,
    fdsj_flux,
    harten_fix,
    interface_fluxes,
    llf_flux,
    max_stable_dt,
    run,
    step,
    wave_strengths,
)

__version__ = "0.1.0"

__all__ = [
    "AveragedState",
    "CaseSpec",
    "FurtherModifiedBurgers",
    "GridSolution",
    "JordanChain",
    "ModifiedBurgers",
    "PressurelessGas",
    "SchemeConfig",
    "SystemModel",
    "block_size",
    "build_chain",
    "burgers_oracle",
    "burgers_oracle_slope",
    "catalog",
    "chain_defect",
    "chain_determinant",
    "delta_shock_reference",
    "fdsj_flux",
    "get_case",
    "get_model",
    "harten_fix",
    "initial_solution",
    "interface_fluxes",
    "jordan_matrix",
    "jump_midpoint",
    "llf_flux",
    "max_stable_dt",
    "numeric_rank",
    "run",
    "shock_width",
    "spike_centroid",
    "step",
    "wave_strengths",
]
