import os
import subprocess
import sys
from pathlib import Path

import pytest

from groupvc.cli import main
from groupvc.experiments import parse_csv

HELP_DIR = Path(__file__).parent / "data" / "help"


def run_cli(*argv, check=False):
    env = dict(os.environ, COLUMNS="80")
    proc = subprocess.run(
        [sys.executable, "-m", "groupvc.cli", *argv],
        capture_output=True,
        text=True,
        env=env,
    )
    if check:
        assert proc.returncode == 0, proc.stderr
    return proc


def test_vcdim_explicit_set(capsys):
    assert main(["vcdim", "--group", "C5", "--set", "03"]) == 0
    assert capsys.readouterr().out.strip() == "2"


def test_vcdim_requires_set_or_p():
    with pytest.raises(SystemExit):
        main(["vcdim", "--group", "C5"])
    with pytest.raises(SystemExit):
        main(["vcdim", "--group", "C5", "--set", "03", "--p", "0.5"])


def test_vcdim_rejects_bad_probability():
    proc = run_cli("vcdim", "--group", "C5", "--p", "1.5")
    assert proc.returncode != 0


def test_unknown_flag_rejected():
    proc = run_cli("vcdim", "--group", "C5", "--set", "03", "--bogus")
    assert proc.returncode != 0


def test_sample_row_count(tmp_path):
    out = tmp_path / "r.csv"
    proc = run_cli(
        "sample", "--group", "C", "--sizes", "16,32", "--p", "0.5",
        "--trials", "10", "--seed", "7", "--out", str(out), check=True,
    )
    assert proc.returncode == 0
    records = parse_csv(out)
    assert len(records) == 20
    assert {r.N for r in records} == {16, 32}


def test_sample_deterministic_bytes(tmp_path):
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    args = ["sample", "--sizes", "16", "--p", "0.5", "--trials", "8", "--seed", "3"]
    run_cli(*args, "--out", str(a), check=True)
    run_cli(*args, "--out", str(b), check=True)
    assert a.read_bytes() == b.read_bytes()


def test_sample_seed_changes_results(tmp_path):
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    run_cli("sample", "--sizes", "32", "--p", "0.5", "--trials", "10",
            "--seed", "1", "--out", str(a), check=True)
    run_cli("sample", "--sizes", "32", "--p", "0.5", "--trials", "10",
            "--seed", "2", "--out", str(b), check=True)
    va = [r.vcdim for r in parse_csv(a)]
    vb = [r.vcdim for r in parse_csv(b)]
    assert va != vb


def test_sample_json_output(tmp_path):
    out = tmp_path / "r.json"
    run_cli("sample", "--sizes", "8", "--p", "0.5", "--trials", "3",
            "--format", "json", "--out", str(out), check=True)
    assert out.read_text().startswith("[")


def test_cutout_command():
    proc = run_cli(
        "cutout", "--group", "C8", "--u", "01", "--k", "01", "--p", "0.5",
        "--trials", "2000", "--seed", "5", check=True,
    )
    assert "subfamily bound" in proc.stdout


def test_paley_command():
    proc = run_cli("paley", "--n", "13", check=True)
    assert "vcdim=3" in proc.stdout
    assert run_cli("paley", "--n", "12").returncode != 0


def test_residue_command(tmp_path):
    out = tmp_path / "res.csv"
    proc = run_cli(
        "residue", "--r", "2", "--primes", "5,13", "--out", str(out), check=True
    )
    assert "ratio_log2" in proc.stdout
    records = parse_csv(out)
    assert [r.N for r in records] == [5, 13]


def test_residue_range_syntax():
    proc = run_cli("residue", "--r", "2", "--primes", "5..13", check=True)
    lines = [ln for ln in proc.stdout.splitlines() if ln and ln[0].isdigit()]
    assert [int(ln.split(",")[0]) for ln in lines] == [5, 7, 11, 13]


def test_tile_and_cover_commands():
    proc = run_cli("tile", "--group", "C6", "--u", "03", check=True)
    assert proc.stdout.splitlines()[0] == "reps: 0 2 4"
    proc = run_cli("cover", "--group", "C6", "--s", "15", check=True)
    assert proc.stdout.splitlines()[0] == "reps: 0 1"


@pytest.mark.parametrize(
    "command", ["main", "vcdim", "sample", "cutout", "paley", "residue", "tile", "cover"]
)
def test_help_golden_files(command):
    argv = ["--help"] if command == "main" else [command, "--help"]
    proc = run_cli(*argv)
    assert proc.returncode == 0
    expected = (HELP_DIR / f"{command}.txt").read_text()
    assert proc.stdout == expected
