"""Acceptance for the plotting component (criterion 10).

Consumes the experiment CSVs through the public schema only: the frozen
desk-scale LLN records file (produced by the seeded criterion-6 run,
``groupvc sample --group C --sizes 64,128,256,512 --p 0.5 --trials 100
--seed 1729``) plus CSVs generated live through the groupvc CLI.
"""

import subprocess
import sys
from pathlib import Path

import pytest

from groupvc_plots import load_rows, mean_sd, plot_histogram, plot_lln_trend, plot_residue_ratio

DATA = Path(__file__).parent / "data"
CRITERION6_CSV = DATA / "criterion6.csv"


def _run_groupvc(*argv):
    proc = subprocess.run(
        [sys.executable, "-m", "groupvc.cli", *argv], capture_output=True, text=True
    )
    assert proc.returncode == 0, proc.stderr
    return proc


def test_criterion6_csv_renders_trend_and_histogram(tmp_path):
    trend = tmp_path / "trend.png"
    hist = tmp_path / "hist.png"
    plot_lln_trend(CRITERION6_CSV, trend)
    plot_histogram(CRITERION6_CSV, hist)
    assert trend.stat().st_size > 0
    assert hist.stat().st_size > 0
    print("\nACCEPTANCE 10 (trend/histogram from criterion-6 CSV) PASS")


def test_trend_means_match_summary_exactly(tmp_path):
    records_csv = tmp_path / "records.csv"
    summary_csv = tmp_path / "summary.csv"
    _run_groupvc(
        "sample", "--group", "C", "--sizes", "16,32,64", "--p", "0.5",
        "--trials", "25", "--seed", "5", "--out", str(records_csv),
        "--summary-out", str(summary_csv),
    )
    plot_lln_trend(records_csv, tmp_path / "live_trend.png")
    assert (tmp_path / "live_trend.png").stat().st_size > 0

    # The plotting layer's recomputed mean/sd must equal the Summary values
    # exactly, not approximately.
    summary_lines = [
        ln for ln in summary_csv.read_text().splitlines() if not ln.startswith("#")
    ]
    header = summary_lines[0].split(",")
    idx = {name: i for i, name in enumerate(header)}
    by_n = {}
    for ln in summary_lines[1:]:
        parts = ln.split(",")
        by_n[int(parts[idx["N"]])] = (
            float(parts[idx["mean_vcdim"]]),
            float(parts[idx["sd_vcdim"]]),
        )
    rows = load_rows(records_csv)
    for n in (16, 32, 64):
        values = [r.vcdim for r in rows if r.N == n and r.vcdim is not None]
        mean, sd = mean_sd(values)
        assert (mean, sd) == by_n[n], f"N={n}: plot stats differ from Summary"
    print("\nACCEPTANCE 10 (plot means equal Summary exactly) PASS")


def test_residue_csv_renders_ratio_plot(tmp_path):
    residue_csv = tmp_path / "residues.csv"
    _run_groupvc(
        "residue", "--r", "2", "--primes", "5..127", "--out", str(residue_csv)
    )
    out = tmp_path / "ratio.png"
    plot_residue_ratio(residue_csv, out)
    assert out.stat().st_size > 0
    import math

    for row in load_rows(residue_csv):
        if row.vcdim is not None:
            assert row.vcdim / math.log2(row.N) <= 1.0
    print("\nACCEPTANCE 10 (residue ratio plot) PASS")


def test_primary_package_has_no_import_coupling():
    import groupvc

    src_dir = Path(groupvc.__file__).parent
    for path in src_dir.glob("*.py"):
        assert "groupvc_plots" not in path.read_text(), path
    print("\nACCEPTANCE 10 (primary runs with this component absent) PASS")
