"""Command-line entry point: case runner with CSV output.

Exit statuses: 0 success, 2 usage error, 3 runtime blow-up, 4 IO error.
"""

from __future__ import annotations

import argparse
import csv
import sys
import time as _time
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from .cases import catalog, get_case, initial_solution
from .errors import BlowUpError
from .models import VACUUM_FLOOR, PressurelessGas, SystemModel
from .schemes import GridSolution, SchemeConfig, run
from .verify import run_verification

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_BLOWUP = 3
EXIT_IO = 4


@dataclass
class RunConfig:
    command: str = "run"
    case: str = ""
    scheme: str = "fdsj"
    n_cells: int = 400
    cfl: float = 0.45
    epsilon: float | None = None  # None = case default
    t_final: float | None = None  # None = case default
    output_path: str = "out.csv"
    snapshot_times: tuple[float, ...] = field(default_factory=tuple)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="weakfvm",
        description="Finite-volume runs for 1-D weakly hyperbolic systems",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_run = sub.add_parser("run", help="run one case and write CSV output")
    p_run.add_argument("case", help="case name (see list-cases)")
    p_run.add_argument("--scheme", choices=("fdsj", "llf"), default="fdsj")
    p_run.add_argument("--cells", type=int, default=400)
    p_run.add_argument("--cfl", type=float, default=0.45)
    p_run.add_argument("--eps", type=float, default=None,
                       help="entropy-fix epsilon (default: case recommendation)")
    p_run.add_argument("--t-final", type=float, default=None,
                       help="final time (default: case value)")
    p_run.add_argument("--out", default="out.csv")
    p_run.add_argument("--snapshots", default=None,
                       help="comma-separated intermediate output times")

    sub.add_parser("list-cases", help="print the case catalog")
    sub.add_parser("verify", help="run the built-in invariant suite")
    return parser


def parse_args(argv: list[str]) -> RunConfig:
    """Parse and validate argv; exits with status 2 on usage errors."""
    parser = _build_parser()
    ns = parser.parse_args(argv)
    if ns.command != "run":
        return RunConfig(command=ns.command)

    names = [c.name for c in catalog()]
    if ns.case not in names:
        parser.error(f"unknown case {ns.case!r}; valid cases: {', '.join(names)}")
    if ns.cells < 4:
        parser.error("--cells must be at least 4")
    if not 0.0 < ns.cfl <= 1.0:
        parser.error("--cfl must lie in (0, 1]")
    if ns.eps is not None and ns.eps < 0.0:
        parser.error("--eps must be nonnegative")
    snapshots: tuple[float, ...] = ()
    if ns.snapshots:
        try:
            snapshots = tuple(float(s) for s in ns.snapshots.split(","))
        except ValueError:
            parser.error(f"bad --snapshots value {ns.snapshots!r}")
        if any(t <= 0.0 for t in snapshots):
            parser.error("snapshot times must be positive")
    return RunConfig(
        command="run",
        case=ns.case,
        scheme=ns.scheme,
        n_cells=ns.cells,
        cfl=ns.cfl,
        epsilon=ns.eps,
        t_final=ns.t_final,
        output_path=ns.out,
        snapshot_times=snapshots,
    )


def write_csv(sol: GridSolution, model: SystemModel, path) -> None:
    """One row per cell, ascending x, 17 significant digits (round-trip safe).

    Header is ``x,<primitive names>`` (pressureless exports rho and u, with
    the near-vacuum density clamp applied to the velocity)."""
    prim = model.primitive(sol.cells)
    with open(path, "w", newline="") as f:
        w = csv.writer(f)
        w.writerow(["x", *model.primitive_names])
        for xi, row in zip(sol.cell_centers, prim):
            w.writerow([f"{xi:.17g}", *(f"{v:.17g}" for v in row)])


def _snapshot_path(base: str, t: float) -> str:
    p = Path(base)
    return str(p.with_name(f"{p.stem}_t{t:g}{p.suffix or '.csv'}"))


def main(argv: list[str] | None = None) -> int:
    try:
        cfg = parse_args(sys.argv[1:] if argv is None else argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_USAGE

    if cfg.command == "list-cases":
        for case in catalog():
            print(case.name)
        return EXIT_OK
    if cfg.command == "verify":
        results = run_verification()
        for name, ok, detail in results:
            print(f"{'PASS' if ok else 'FAIL'}  {name}: {detail}")
        return EXIT_OK if all(ok for _, ok, _ in results) else 1

    case = get_case(cfg.case)
    model = case.model
    epsilon = case.epsilon if cfg.epsilon is None else cfg.epsilon
    t_final = case.t_final if cfg.t_final is None else cfg.t_final
    scheme_cfg = SchemeConfig(cfg.scheme, epsilon, cfg.cfl)

    sol = initial_solution(case, cfg.n_cells)
    t0 = _time.perf_counter()
    try:
        for t_snap in sorted(set(cfg.snapshot_times)):
            if sol.time < t_snap <= t_final:
                sol = run(model, sol, scheme_cfg, t_snap)
                write_csv(sol, model, _snapshot_path(cfg.output_path, t_snap))
        sol = run(model, sol, scheme_cfg, t_final)
        write_csv(sol, model, cfg.output_path)
    except BlowUpError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_BLOWUP
    except OSError as e:
        print(f"error: cannot write output: {e}", file=sys.stderr)
        return EXIT_IO
    wall = _time.perf_counter() - t0

    prim = model.primitive(sol.cells)
    ranges = " ".join(
        f"{name}:[{prim[:, i].min():.17g},{prim[:, i].max():.17g}]"
        for i, name in enumerate(model.primitive_names)
    )
    extra = ""
    if isinstance(model, PressurelessGas):
        n_vac = int(np.count_nonzero(sol.cells[:, 0] < VACUUM_FLOOR))
        extra = f" vacuum_cells={n_vac}"
    print(
        f"{case.name} scheme={cfg.scheme} cells={cfg.n_cells} t={sol.time:g} "
        f"wall={wall:.3f}s {ranges}{extra}"
    )
    return EXIT_OK


def console_main() -> None:
    sys.exit(main())
