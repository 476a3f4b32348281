"""Tests for the plotting script.

The solver is exercised only through its command line and CSV output, never
imported, so these tests double as a check of the published interface.
"""

import subprocess
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))
from plot import PlotError, PlotSpec, main, parse_args, plot, read_series  # noqa: E402

PNG_MAGIC = b"\x89PNG\r\n\x1a\n"
SHOCK_TIME = 3.0 / (2.0 * 3.141592653589793)

CASES = [
    "pressureless-riemann",
    "pressureless-positivity",
    "modburgers-smooth",
    "modburgers-sonic",
    "further-modburgers-smooth",
]


def solver(*args):
    cmd = [sys.executable, "-m", "weakfvm", *args]
    return subprocess.run(cmd, capture_output=True, text=True)


@pytest.fixture(scope="session")
def case_csvs(tmp_path_factory):
    """One CLI run per case, all at modest resolution."""
    d = tmp_path_factory.mktemp("csvs")
    paths = {}
    for name in CASES:
        out = d / f"{name}.csv"
        proc = solver("run", name, "--cells", "200", "--out", str(out))
        assert proc.returncode == 0, proc.stderr
        paths[name] = out
    return paths


@pytest.fixture(scope="session")
def comparison_pair(tmp_path_factory):
    """FDS-J and LLF runs of the same shocked case on the same grid."""
    d = tmp_path_factory.mktemp("pair")
    paths = {}
    for scheme in ("fdsj", "llf"):
        out = d / f"{scheme}.csv"
        proc = solver(
            "run", "modburgers-smooth", "--scheme", scheme, "--cells", "500",
            "--t-final", f"{SHOCK_TIME:.17g}", "--out", str(out),
        )
        assert proc.returncode == 0, proc.stderr
        paths[scheme] = out
    return paths


def write_toy_csv(path, header="x,rho,u", rows=("0.1,1,2", "0.3,1.5,2.5")):
    path.write_text("\n".join([header, *rows]) + "\n")
    return path


class TestReadSeries:
    def test_values_and_columns(self, tmp_path):
        p = write_toy_csv(tmp_path / "a.csv")
        s = read_series(str(p), "rho")
        assert s.x == [0.1, 0.3]
        assert s.y == [1.0, 1.5]
        assert s.columns == ("x", "rho", "u")

    def test_missing_column_lists_available(self, tmp_path):
        p = write_toy_csv(tmp_path / "a.csv")
        with pytest.raises(PlotError, match="x,rho,u"):
            read_series(str(p), "q")

    def test_empty_file(self, tmp_path):
        p = tmp_path / "e.csv"
        p.write_text("")
        with pytest.raises(PlotError, match="empty"):
            read_series(str(p), "u")

    def test_malformed_row(self, tmp_path):
        p = write_toy_csv(tmp_path / "m.csv", rows=("0.1,oops,2",))
        with pytest.raises(PlotError, match="malformed"):
            read_series(str(p), "rho")


class TestParseArgs:
    def test_single_input(self):
        spec = parse_args(["--in", "a.csv", "--col", "u", "--out", "f.png"])
        assert spec == PlotSpec(("a.csv",), "u", ("run 1",), "f.png")

    def test_overlay_with_labels_and_logy(self):
        spec = parse_args(
            ["--in", "a.csv", "--in2", "b.csv", "--col", "rho", "--out", "f.png",
             "--label1", "FDS-J", "--label2", "LLF", "--logy"]
        )
        assert spec.inputs == ("a.csv", "b.csv")
        assert spec.labels == ("FDS-J", "LLF")
        assert spec.logy

    def test_required_flags(self):
        with pytest.raises(SystemExit) as exc:
            parse_args(["--in", "a.csv", "--out", "f.png"])
        assert exc.value.code == 2


class TestPlotFunction:
    def test_single_curve_png(self, tmp_path):
        p = write_toy_csv(tmp_path / "a.csv")
        out = tmp_path / "f.png"
        plot(PlotSpec((str(p),), "u", ("run 1",), str(out)))
        data = out.read_bytes()
        assert data[:8] == PNG_MAGIC and len(data) > 0

    def test_logy_with_title(self, tmp_path):
        p = write_toy_csv(tmp_path / "a.csv")
        out = tmp_path / "f.png"
        plot(PlotSpec((str(p),), "rho", ("r",), str(out), title="density", logy=True))
        assert out.read_bytes()[:8] == PNG_MAGIC


class TestMainExitCodes:
    def test_missing_column_exit_2(self, tmp_path, capsys):
        p = write_toy_csv(tmp_path / "a.csv")
        rc = main(["--in", str(p), "--col", "q", "--out", str(tmp_path / "f.png")])
        assert rc == 2
        assert "x,rho,u" in capsys.readouterr().err

    def test_unreadable_input_exit_4(self, tmp_path):
        rc = main(
            ["--in", str(tmp_path / "nope.csv"), "--col", "u",
             "--out", str(tmp_path / "f.png")]
        )
        assert rc == 4

    def test_happy_path_exit_0(self, tmp_path):
        p = write_toy_csv(tmp_path / "a.csv")
        out = tmp_path / "f.png"
        assert main(["--in", str(p), "--col", "u", "--out", str(out)]) == 0
        assert out.exists()


def test_criterion_12_plot_pipeline(case_csvs, comparison_pair, tmp_path):
    ok = True
    details = []
    for name, csv_path in case_csvs.items():
        col = "rho" if name.startswith("pressureless") else "u"
        out = tmp_path / f"{name}.png"
        rc = main(["--in", str(csv_path), "--col", col, "--out", str(out)])
        good = rc == 0 and out.read_bytes()[:8] == PNG_MAGIC and out.stat().st_size > 0
        ok &= good
        details.append(f"{name}:{'ok' if good else 'FAIL'}")
    overlay = tmp_path / "comparison.png"
    rc = main(
        ["--in", str(comparison_pair["fdsj"]), "--in2", str(comparison_pair["llf"]),
         "--col", "u", "--out", str(overlay),
         "--label1", "FDS-J", "--label2", "LLF"]
    )
    good = rc == 0 and overlay.read_bytes()[:8] == PNG_MAGIC
    ok &= good
    details.append(f"overlay:{'ok' if good else 'FAIL'}")
    print(f"criterion 12: {'PASS' if ok else 'FAIL'}  {'; '.join(details)}")
    assert ok, "; ".join(details)
