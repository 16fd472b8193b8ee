import json
import subprocess
import sys

import pytest

from itertor import cli
from itertor.errors import SeriesFormatError
from itertor.oracle import MAX_NNZ_ENV
from itertor.render import latex_generator, load_series, parse_series
from itertor.algebra import gen


def run(argv, capsys):
    code = cli.main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def test_list(capsys):
    code, out, _ = run(["list"], capsys)
    assert code == 0
    assert "thh_n_zpm_zp" in out and "thh_function_field" in out
    code, out, _ = run(["list", "--format", "json"], capsys)
    assert {e["entry"] for e in json.loads(out)} == set(cli.ENTRIES)


def test_compute_json(capsys):
    code, out, _ = run(["compute", "thh_n_zpm_zp", "--n", "1", "--p", "2", "--m", "3",
                        "--cap", "10", "--format", "json"], capsys)
    assert code == 0
    d = json.loads(out)
    assert d["series"]["coefficients"] == [1, 0, 1, 1, 2, 1, 2, 2, 3, 2, 3]
    assert d["algebra"]["characteristic"] == 2


def test_compute_table(capsys):
    code, out, _ = run(["compute", "hh_n_truncated", "--n", "1", "--p", "2", "--m", "4"], capsys)
    assert code == 0
    assert "phi^0(x)" in out and "multiplicity: F_2[x]/x^4" in out


def test_series_and_generators(capsys):
    code, out, _ = run(["series", "thh_function_field", "--d", "2", "--p", "5", "--cap", "4"], capsys)
    assert (code, out) == (0, "1,2,2,2,2\n")
    code, out, _ = run(["generators", "shukla_n", "--n", "2", "--p", "3", "--cap", "8"], capsys)
    assert code == 0 and "eps(rho^0(tau_1))" in out
    code, out, _ = run(["generators", "shukla_n", "--n", "1", "--p", "3", "--cap", "6",
                        "--format", "latex"], capsys)
    assert r"\varrho^{0}\tau_1" in out


def test_verify_exit_zero(capsys):
    code, out, _ = run(["verify", "shukla_n", "--n", "2", "--p", "3", "--cap", "10"], capsys)
    assert code == 0
    assert out.rstrip().endswith("MATCH at all degrees <= 10")


def test_verify_json(capsys):
    code, out, _ = run(["verify", "tate_tor", "--d", "1", "--r", "1", "--p", "2", "--m", "3",
                        "--cap", "6", "--format", "json"], capsys)
    assert code == 0 and json.loads(out)["match"] is True


def test_verify_mismatch_exit_two(capsys, monkeypatch):
    from itertor import verify as verify_mod
    real = verify_mod.OracleStep.run

    def skewed(self, total_cap):
        s = real(self, total_cap)
        return type(s)(s.cap, (s.coefficients[0],) + tuple(c + 1 for c in s.coefficients[1:]))

    monkeypatch.setattr(verify_mod.OracleStep, "run", skewed)
    code, out, _ = run(["verify", "shukla_n", "--n", "1", "--p", "2", "--cap", "6"], capsys)
    assert code == 2
    assert "MISMATCH at degrees" in out


@pytest.mark.parametrize("argv", [
    [],
    ["compute"],
    ["compute", "no_such_entry"],
    ["compute", "thh_n_fp", "--p", "3"],
    ["compute", "thh_n_fp", "--n", "1", "--p", "4"],
    ["compute", "thh_n_fp", "--n", "1", "--p", "3", "--cap", "0"],
    ["compute", "thh_n_fp", "--n", "x"],
    ["compute", "hh_n_truncated", "--n", "1", "--p", "3", "--m", "2"],
    ["compute", "thh_weak_split", "--r", "1"],
    ["generators", "thh_weak_split", "--r", "1", "--series-file", "/nonexistent.json"],
    ["verify", "thh_function_field", "--d", "1", "--p", "2"],
])
def test_usage_errors_exit_one(argv, capsys):
    code, out, err = run(argv, capsys)
    assert code == 1
    assert out == ""
    assert err.startswith("itertor: error:")


def test_series_file_entries(tmp_path, capsys):
    f = tmp_path / "thh.json"
    f.write_text(json.dumps({"cap": 6, "coefficients": [1, 0, 0, 1, 1, 0, 0]}))
    code, out, _ = run(["series", "thh_weak_split", "--r", "1", "--cap", "6",
                        "--series-file", str(f)], capsys)
    assert (code, out) == (0, "1,0,1,1,2,1,2\n")
    code, out, _ = run(["verify", "thh_number_ring_quotient", "--n", "1", "--p", "3", "--e", "2",
                        "--cap", "6", "--series-file", str(f)], capsys)
    assert code == 0


def test_load_series_round_trip(tmp_path):
    f = tmp_path / "s.json"
    f.write_text(cli.emit_json(load_series_from([1, 2, 3])))
    assert load_series(f).coefficients == (1, 2, 3)


def load_series_from(coeffs):
    return parse_series(json.dumps({"coefficients": coeffs}))


def test_parse_series_errors():
    with pytest.raises(SeriesFormatError, match="missing 'coefficients'"):
        parse_series('{"cap": 2}')
    with pytest.raises(SeriesFormatError, match="does not match"):
        parse_series('{"cap": 5, "coefficients": [1, 0]}')
    with pytest.raises(SeriesFormatError, match="nonnegative"):
        parse_series('{"coefficients": [1, -1]}')
    with pytest.raises(SeriesFormatError) as exc:
        parse_series('{\n  "cap": 2,\n  "coefficients": [1, 0 0]\n}', "s.json")
    msg = str(exc.value)
    assert msg.startswith("s.json:3:")
    assert '"coefficients": [1, 0 0]' in msg and "^" in msg


def test_json_output_is_deterministic(capsys):
    argv = ["compute", "shukla_over_zpm", "--m", "2", "--p", "3", "--cap", "20", "--format", "json"]
    _, a, _ = run(argv, capsys)
    _, b, _ = run(argv, capsys)
    assert a == b


def test_memory_guard_reported_as_error(monkeypatch, capsys):
    monkeypatch.setenv(MAX_NNZ_ENV, "3")
    code, _, err = run(["verify", "shukla_n", "--n", "2", "--p", "2", "--cap", "10"], capsys)
    assert code == 1 and "nonzeros" in err


def test_latex_generator_names():
    g = gen("tau_1^(3)", 1).rho0(3).phi0(3, 3)
    assert latex_generator(g) == r"\varphi^{0}\varrho^{0}\tau_1^{(3)}"


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "itertor", "series", "thh_n_fp", "--n", "2",
                           "--p", "3", "--cap", "6"], capture_output=True, text=True)
    assert proc.returncode == 0
    assert proc.stdout == "1,0,0,1,0,0,0\n"
