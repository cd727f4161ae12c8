import os
import subprocess
import sys

import pytest

ROOT = os.path.abspath(os.path.join(os.path.dirname(__file__), os.pardir))
SRC = os.path.join(ROOT, "src")


def run_cli(*args, **kwargs):
    env = dict(os.environ)
    env["PYTHONPATH"] = SRC + os.pathsep + env.get("PYTHONPATH", "")
    return subprocess.run(
        [sys.executable, "-m", "heaviforge", *args],
        capture_output=True, text=True, env=env, **kwargs,
    )


def parse_kv(line):
    return dict(part.split("=", 1) for part in line.split() if "=" in part)


# ---------------------------------------------------------------------------
# eval

def test_eval_h2_at_origin():
    proc = run_cli("eval", "H2", "0")
    assert proc.returncode == 0
    kv = parse_kv(proc.stdout.splitlines()[0])
    assert float(kv["raw"]) == 0.5
    assert float(kv["snapped"]) == 0.5
    assert "cutoffs" in proc.stdout


def test_eval_rt_at_origin():
    proc = run_cli("eval", "rt", "0")
    assert proc.returncode == 0
    assert float(parse_kv(proc.stdout.splitlines()[0])["raw"]) == 1.0


def test_eval_delta_peak():
    proc = run_cli("eval", "delta", "0", "--T", "100")
    assert proc.returncode == 0
    assert float(parse_kv(proc.stdout.splitlines()[0])["raw"]) == 25.0


def test_eval_unknown_function_exits_2():
    proc = run_cli("eval", "nope", "1")
    assert proc.returncode == 2
    assert proc.stderr != ""


def test_eval_unparseable_x_exits_2():
    proc = run_cli("eval", "H2", "zero")
    assert proc.returncode == 2


def test_conflicting_scale_flags_exit_2():
    proc = run_cli("eval", "H2", "0", "--U", "50", "--eps", "0.01")
    assert proc.returncode == 2


# ---------------------------------------------------------------------------
# table

def test_table_step_values():
    proc = run_cli("table", "H1", "-1", "1", "1")
    assert proc.returncode == 0
    lines = proc.stdout.strip().split("\n")
    assert lines[0] == "x,raw,snapped,backend_delta"
    rows = [line.split(",") for line in lines[1:]]
    assert [r[0] for r in rows] == ["-1", "0", "1"]
    assert [float(r[2]) for r in rows] == [0.0, 1.0, 1.0]


def test_table_single_row_when_start_equals_stop():
    proc = run_cli("table", "f", "2", "2", "0.5")
    assert proc.returncode == 0
    assert len(proc.stdout.strip().split("\n")) == 2  # header + one row


def test_table_antisymmetric_ramp():
    proc = run_cli("table", "f", "-2", "2", "0.5")
    rows = [line.split(",") for line in proc.stdout.strip().split("\n")[1:]]
    raw = {float(r[0]): float(r[1]) for r in rows}
    for x in (0.5, 1.0, 1.5, 2.0):
        assert raw[-x] == -raw[x]


def test_table_is_byte_stable():
    first = run_cli("table", "delta", "-1", "1", "0.125")
    second = run_cli("table", "delta", "-1", "1", "0.125")
    assert first.returncode == second.returncode == 0
    assert first.stdout == second.stdout


def test_table_rejects_bad_grids():
    assert run_cli("table", "H1", "2", "1", "1").returncode == 2
    assert run_cli("table", "H1", "0", "1", "-1").returncode == 2
    assert run_cli("table", "H1", "0", "1", "0").returncode == 2


def test_table_rejects_svg_format():
    proc = run_cli("table", "H1", "0", "1", "1", "--format", "svg")
    assert proc.returncode == 2


def test_table_writes_output_file(tmp_path):
    out = tmp_path / "h2.csv"
    proc = run_cli("table", "H2", "-1", "1", "0.5", "--out", str(out))
    assert proc.returncode == 0
    text = out.read_text()
    assert text.startswith("x,raw,snapped,backend_delta\n")
    assert text.endswith("\n")


# ---------------------------------------------------------------------------
# plot

def test_plot_emits_svg(tmp_path):
    out = tmp_path / "h2.svg"
    proc = run_cli("plot", "H2", "-0.2", "0.2", "0.01", "--out", str(out))
    assert proc.returncode == 0
    text = out.read_text()
    assert text.startswith("<svg")
    assert "<polyline" in text
    assert "</svg>" in text


def test_plot_csv_format_lists_the_grid():
    proc = run_cli("plot", "rt", "-1", "1", "0.5", "--format", "csv")
    assert proc.returncode == 0
    lines = proc.stdout.strip().split("\n")
    assert lines[0] == "x,raw"
    assert len(lines) == 6


# ---------------------------------------------------------------------------
# primes

def test_primes_small_run():
    proc = run_cli("primes", "10")
    assert proc.returncode == 0
    lines = proc.stdout.strip().split("\n")
    assert lines[0] == "n,sigma0_analytic,sigma0_exact,fes_snapped,pi_analytic,pi_sieve,match"
    last = lines[-1].split(",")
    assert last[0] == "10"
    assert float(last[4]) == pytest.approx(4.0, abs=0.25)
    assert last[5] == "4"
    assert "mismatches=0" in proc.stderr


def test_primes_trivial_run():
    proc = run_cli("primes", "1")
    assert proc.returncode == 0
    row = proc.stdout.strip().split("\n")[1].split(",")
    assert float(row[4]) == pytest.approx(0.0, abs=0.25)
    assert row[5] == "0"


def test_primes_full_range_has_no_mismatches():
    proc = run_cli("primes", "200")
    assert proc.returncode == 0
    assert "mismatches=0 of 200" in proc.stderr
    assert all(line.endswith(",1") for line in proc.stdout.strip().split("\n")[1:])


def test_primes_inadequate_scale_exits_1():
    proc = run_cli("primes", "200", "--U", "2")
    assert proc.returncode == 1
    assert "mismatches=0" not in proc.stderr


def test_primes_rejects_out_of_range():
    assert run_cli("primes", "0").returncode == 2
    assert run_cli("primes", "10001").returncode == 2


# ---------------------------------------------------------------------------
# xiset / grandi

def test_xiset_expression():
    proc = run_cli("xiset", "{1}||{1,2} | {3}||0")
    assert proc.returncode == 0
    lines = proc.stdout.strip().split("\n")
    assert lines[0] == "xi_class 4"
    assert lines[1] == "components {1,3} || {1} || {1,2,3} || {1,2}"
    assert "atom 1: mode=all T={1,2,3,4}" in lines
    assert "atom 2: mode=some T={3,4}" in lines


def test_xiset_intersection():
    proc = run_cli("xiset", "{1} & {1}")
    assert proc.returncode == 0
    assert proc.stdout.splitlines()[0] == "xi_class 1"


def test_xiset_chain_reports_dangling_tail():
    proc = run_cli("xiset", "chain", "{1,2}", "0", "6", "shifted")
    assert proc.returncode == 0
    lines = proc.stdout.strip().split("\n")
    assert lines[0] == "result {1,2}"
    assert "dangling-tail 0" in lines


def test_xiset_parse_error_exits_2():
    proc = run_cli("xiset", "{1} &")
    assert proc.returncode == 2
    assert "position" in proc.stderr


def test_grandi_output():
    proc = run_cli("grandi", "4")
    assert proc.returncode == 0
    lines = proc.stdout.strip().split("\n")
    assert lines[0] == "partial_sums 1,0,1,0"
    assert lines[1] == "cesaro_mean 1/2"


def test_grandi_odd():
    proc = run_cli("grandi", "101")
    assert "cesaro_mean 51/101" in proc.stdout


def test_grandi_rejects_zero():
    assert run_cli("grandi", "0").returncode == 2
