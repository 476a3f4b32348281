"""FDS-J versus local Lax-Friedrichs at a formed shock.

Both schemes put the shock in the same place; the upwind flux smears it over
fewer cells. Run this after installing the package, then render the overlay
figure with the plotting script:

    python3 demos/03_scheme_comparison.py
    python3 plots/plot.py --in /tmp/fdsj.csv --in2 /tmp/llf.csv --col u \
        --out /tmp/comparison.png --label1 FDS-J --label2 LLF
"""

import numpy as np

from weakfvm import SchemeConfig, get_case, initial_solution, run, shock_width
from weakfvm.cli import write_csv

SHOCK_TIME = 3.0 / (2.0 * np.pi)

case = get_case("modburgers-smooth")
outs = {}
for scheme in ("fdsj", "llf"):
    sol = run(
        case.model,
        initial_solution(case, 500),
        SchemeConfig(scheme, 0.0, 0.45),
        SHOCK_TIME,
    )
    write_csv(sol, case.model, f"/tmp/{scheme}.csv")
    outs[scheme] = sol

for scheme, sol in outs.items():
    u = sol.cells[:, 0]
    j = int(np.argmax(np.abs(np.diff(u))))
    hi = float(u[max(0, j - 10) : j + 1].max())
    lo = float(u[j + 1 : j + 12].min())
    w = shock_width(sol, 0, lo, hi)
    print(f"{scheme:>5}: shock spans {w} interior cell(s), jump {hi:.3f} -> {lo:.3f}")

print("\nCSV profiles written to /tmp/fdsj.csv and /tmp/llf.csv")
