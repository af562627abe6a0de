"""Command line surface: byte-level output contracts, exit codes, report
schemas, and precision resolution."""

import csv
import io
import json

import mpmath as mp
import pytest

from legmellin.cli import PRECISION_ENV_VAR, run_command


def _run(capsys, argv):
    code = run_command(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


# ---------------------------------------------------------------------------
# scalar subcommands

def test_poly_is_byte_exact(capsys):
    code, out, err = _run(capsys, ["poly", "--n", "4"])
    assert code == 0
    assert out == '{"n":4,"m":0,"coeffs":["9/2","-4","4"]}\n'
    assert err == ""


def test_poly_with_order(capsys):
    code, out, _ = _run(capsys, ["poly", "--n", "4", "--m", "2"])
    assert code == 0
    assert json.loads(out)["coeffs"] == ["-45", "90"]


def test_mellin_value(capsys):
    code, out, _ = _run(capsys, ["mellin", "--n", "2", "--s", "1",
                                 "--precision", "128"])
    assert code == 0
    payload = json.loads(out)
    with mp.workprec(192):
        assert abs(mp.mpf(payload["value"]) - mp.pi / 8) < mp.mpf(10) ** -30


def test_mellin_complex_argument(capsys):
    code, out, _ = _run(capsys, ["mellin", "--n", "3", "--s", "2+3i",
                                 "--precision", "128"])
    assert code == 0
    payload = json.loads(out)
    assert payload["s"] == "2+3i"
    assert "i" in payload["value"]


def test_zeros_payload(capsys):
    code, out, _ = _run(capsys, ["zeros", "--n", "4", "--precision", "128"])
    assert code == 0
    payload = json.loads(out)
    assert set(payload) == {"n", "m", "precision_bits", "roots",
                            "newton_residuals", "max_deviation",
                            "shift_deviation", "certificate_tolerance"}
    assert len(payload["roots"]) == 2
    assert all(r.startswith("0.5") for r in payload["roots"])
    assert float(payload["max_deviation"]) < 1e-25


def test_genfun_payload(capsys):
    code, out, _ = _run(capsys, ["genfun", "--t", "1/10", "--s", "2",
                                 "--terms", "60", "--precision", "128"])
    assert code == 0
    payload = json.loads(out)
    assert float(payload["difference"]) <= float(payload["tail_bound"])
    assert float(payload["even_difference"]) < 1e-25
    assert float(payload["odd_difference"]) < 1e-25


def test_fracpart_payload(capsys):
    code, out, _ = _run(capsys, ["fracpart", "--s", "2", "--precision", "128"])
    assert code == 0
    payload = json.loads(out)
    with mp.workprec(192):
        want = 1 - mp.zeta(2) / 2
        assert abs(mp.mpf(payload["value"]) - want) < mp.mpf(10) ** -30


# ---------------------------------------------------------------------------
# exit codes

def test_usage_error_exits_two(capsys):
    assert run_command(["poly"]) == 2
    capsys.readouterr()


def test_domain_error_exits_two(capsys):
    code, _, err = _run(capsys, ["mellin", "--n", "2", "--s", "-3"])
    assert code == 2
    assert "domain error" in err


def test_verify_pass_exits_zero(capsys):
    code, out, _ = _run(capsys, ["verify", "--suite", "hahn",
                                 "--precision", "128", "--max-n", "4"])
    assert code == 0
    assert "PASS" in out and "FAIL" not in out


def test_verify_failure_exits_one(capsys):
    code, out, _ = _run(capsys, ["verify", "--suite", "reps",
                                 "--precision", "96", "--max-n", "4"])
    assert code == 1
    assert "FAIL" in out
    assert "L2e" in out


def test_unknown_suite_exits_two(capsys):
    code, _, err = _run(capsys, ["verify", "--suite", "bogus"])
    assert code == 2
    capsys.readouterr()


# ---------------------------------------------------------------------------
# report formats

def test_verify_json_schema_and_determinism(capsys):
    argv = ["verify", "--suite", "diffeq", "--precision", "96",
            "--max-n", "4", "--format", "json"]
    code, first, _ = _run(capsys, argv)
    assert code == 0
    payload = json.loads(first)
    assert set(payload) == {"suite", "config", "cases", "summary"}
    assert set(payload["config"]) == {"precision_bits", "tolerance_exponent",
                                      "seed"}
    assert set(payload["summary"]) == {"run", "passed", "worst_residual",
                                       "elapsed_ms"}
    assert payload["summary"]["elapsed_ms"] == 0
    for case in payload["cases"]:
        assert set(case) == {"id", "inputs", "expected", "got", "abs_err",
                             "tol", "pass"}
    _, second, _ = _run(capsys, argv)
    assert first == second


def test_verify_csv_layout(capsys):
    code, out, _ = _run(capsys, ["verify", "--suite", "hahn",
                                 "--precision", "96", "--max-n", "4",
                                 "--format", "csv"])
    assert code == 0
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["suite", "id", "inputs", "expected", "got",
                       "abs_err", "tol", "pass"]
    assert rows[-1][0] == "#summary"
    body = rows[1:-1]
    assert body and all(r[0] == "hahn" for r in body)


def test_timing_flag_fills_elapsed(capsys):
    code, out, _ = _run(capsys, ["verify", "--suite", "hahn",
                                 "--precision", "128", "--max-n", "6",
                                 "--format", "json", "--timing"])
    assert code == 0
    assert json.loads(out)["summary"]["elapsed_ms"] > 0


# ---------------------------------------------------------------------------
# precision resolution

def test_env_var_sets_precision(capsys, monkeypatch):
    monkeypatch.setenv(PRECISION_ENV_VAR, "96")
    _, out, _ = _run(capsys, ["mellin", "--n", "2", "--s", "1"])
    assert json.loads(out)["precision_bits"] == 96


def test_flag_beats_env_var(capsys, monkeypatch):
    monkeypatch.setenv(PRECISION_ENV_VAR, "96")
    _, out, _ = _run(capsys, ["mellin", "--n", "2", "--s", "1",
                              "--precision", "160"])
    assert json.loads(out)["precision_bits"] == 160


def test_bad_env_var_exits_two(capsys, monkeypatch):
    monkeypatch.setenv(PRECISION_ENV_VAR, "potato")
    code, _, err = _run(capsys, ["mellin", "--n", "2", "--s", "1"])
    assert code == 2
    assert "domain error" in err


# ---------------------------------------------------------------------------
# tables and file output

def test_table_polys_json(capsys):
    code, out, _ = _run(capsys, ["table", "--what", "polys", "--stop", "4",
                                 "--format", "json"])
    assert code == 0
    rows = json.loads(out)
    assert rows[2] == {"n": 2, "m": 0, "coeffs": ["-1", "2"]}
    assert rows[4]["coeffs"] == ["9/2", "-4", "4"]


def test_table_zeros_deviations(capsys):
    code, out, _ = _run(capsys, ["table", "--what", "zeros", "--start", "2",
                                 "--stop", "8", "--format", "json",
                                 "--precision", "128"])
    assert code == 0
    for row in json.loads(out):
        assert float(row["deviation"]) < 1e-25
        assert float(row["newton_residual"]) < 1e-25


def test_table_transforms_csv(capsys):
    code, out, _ = _run(capsys, ["table", "--what", "transforms", "--start",
                                 "0", "--stop", "2", "--s", "1",
                                 "--precision", "96"])
    assert code == 0
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["n", "m", "s", "value"]
    with mp.workprec(160):
        assert abs(mp.mpf(rows[1][3]) - mp.pi / 2) < mp.mpf(10) ** -20
        assert abs(mp.mpf(rows[2][3]) - 1) < mp.mpf(10) ** -20
        assert abs(mp.mpf(rows[3][3]) - mp.pi / 8) < mp.mpf(10) ** -20


def test_table_range_validation(capsys):
    code, _, err = _run(capsys, ["table", "--what", "polys", "--start", "5",
                                 "--stop", "2"])
    assert code == 2
    assert "start" in err


def test_out_file_matches_stdout(capsys, tmp_path):
    _, streamed, _ = _run(capsys, ["poly", "--n", "6"])
    target = tmp_path / "poly.json"
    code, out, _ = _run(capsys, ["poly", "--n", "6", "--out", str(target)])
    assert code == 0
    assert out == ""
    assert target.read_text() == streamed


def test_out_io_error_names_path(capsys, tmp_path):
    target = tmp_path / "missing" / "poly.json"
    code, _, err = _run(capsys, ["poly", "--n", "6", "--out", str(target)])
    assert code == 2
    assert str(target) in err
