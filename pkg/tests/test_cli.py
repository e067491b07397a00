"""Command-line behavior: exit codes, output shapes, reproducibility."""

import json
import shutil
import subprocess

import pytest

from circunits.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


# ---------------------------------------------------------------------- #
# verify


def test_verify_single_level(capsys):
    code, out, err = run(capsys, "verify", "--n", "4")
    assert code == 0
    data = json.loads(out)
    assert data["n"] == 4
    assert data["verdict"] == "trivial_only"
    assert data["elapsed_ms"] == 0
    assert "n=4" in err


def test_verify_default_walk(capsys):
    code, out, err = run(capsys, "verify")
    assert code == 0
    data = json.loads(out)
    assert [cert["n"] for cert in data] == [4, 5, 6, 7]
    assert all(cert["verdict"] == "trivial_only" for cert in data)


def test_verify_rejects_small_level(capsys):
    code, _, err = run(capsys, "verify", "--n", "3")
    assert code == 1
    assert "usage error" in err


def test_verify_large_level_needs_explore(capsys):
    code, _, err = run(capsys, "verify", "--n", "8")
    assert code == 1
    assert "--explore" in err


def test_verify_explore(capsys):
    code, out, _ = run(capsys, "verify", "--n", "8", "--explore")
    assert code == 0
    data = json.loads(out)
    assert data["exploratory"] is True
    assert data["method"] == "linearized+spotcheck"
    assert data["spot_checks"] == 1000


def test_verify_out_of_range_level(capsys):
    code, _, err = run(capsys, "verify", "--n", "13")
    assert code == 1
    assert "usage error" in err


def test_verify_json_file_reproducible(tmp_path, capsys):
    target = tmp_path / "cert.json"
    assert main(["verify", "--n", "5", "--json", str(target)]) == 0
    first = target.read_bytes()
    assert main(["verify", "--n", "5", "--json", str(target)]) == 0
    assert target.read_bytes() == first
    capsys.readouterr()
    data = json.loads(first)
    assert data["rank"] == 4
    assert data["odd_r_subsystem"]["full_rank"] is True


def test_verify_timing_flag(capsys):
    code, out, _ = run(capsys, "verify", "--n", "4", "--timing")
    assert code == 0
    assert json.loads(out)["elapsed_ms"] > 0


# ---------------------------------------------------------------------- #
# tables


def test_tables_32_golden_row(capsys):
    code, out, _ = run(capsys, "tables", "--n", "5")
    assert code == 0
    assert "0 r_1 r_2 r_3 0 r_3 r_2 r_1" in out
    assert "0 s_1 s_2 s_3 s_4 s_5 s_6 s_7 0 s_7 s_6 s_5 s_4 s_3 s_2 s_1" in out


def test_tables_json(tmp_path, capsys):
    target = tmp_path / "tables.json"
    code, out, _ = run(capsys, "tables", "--n", "4", "--json", str(target))
    assert code == 0
    data = json.loads(target.read_text())
    assert data["r_table"] == ["0", "r_1", "0", "r_1"]
    assert len(data["s_table"]) == 8


# ---------------------------------------------------------------------- #
# funnel


def test_funnel_output(capsys):
    code, out, _ = run(capsys, "funnel", "--n", "5")
    assert code == 0
    data = json.loads(out)
    assert data["partition"]["A"] == [[1, 3, 5, 7], [1, 3], [1]]
    assert data["partition"]["B"] == [[9, 11, 13], [5, 7], [3]]
    labels = [g["label"] for g in data["f_generators"]]
    assert labels[0] == "d_1^8"
    assert len(data["sqrt_over_f_generators"]) == 4
    assert data["sqrt_over_f_generators"][0]["word_text"] == "d1^4"


def test_funnel_small_level(capsys):
    code, _, err = run(capsys, "funnel", "--n", "3")
    assert code == 1
    assert "usage error" in err


# ---------------------------------------------------------------------- #
# unit


def test_unit_gamma_vector(capsys):
    code, out, _ = run(capsys, "unit", "--n", "4", "--word", "d1^4")
    assert code == 0
    data = json.loads(out)
    assert data["word"] == "d1^4"
    assert data["gammas"][0] == "10"
    assert len(data["gammas"]) == 16


def test_unit_non_integral(capsys):
    code, out, _ = run(capsys, "unit", "--n", "4", "--word", "d1")
    assert code == 2
    data = json.loads(out)
    assert data["integral"] is False
    assert data["error"] == "NotIntegral"


def test_unit_bad_word(capsys):
    code, _, err = run(capsys, "unit", "--n", "4", "--word", "zebra")
    assert code == 1
    assert "usage error" in err


def test_unit_out_of_set_index(capsys):
    code, _, err = run(capsys, "unit", "--n", "4", "--word", "d7")
    assert code == 1


# ---------------------------------------------------------------------- #
# identities


def test_identities_single_level(capsys):
    code, out, _ = run(capsys, "identities", "--n", "5")
    assert code == 0
    assert "PASS head_inverse_power" in out
    assert "PASS transport q(1,3)" in out
    assert "FAIL" not in out


def test_identities_level_four_skips_transport(capsys):
    code, out, _ = run(capsys, "identities", "--n", "4")
    assert code == 0
    assert "transport" not in out


def test_identities_json(tmp_path, capsys):
    target = tmp_path / "ident.json"
    code, _, _ = run(capsys, "identities", "--n", "5", "--json", str(target))
    assert code == 0
    data = json.loads(target.read_text())
    assert data["q_power"]["all_passed"] is True
    assert data["transport"]["all_passed"] is True


# ---------------------------------------------------------------------- #
# plumbing


def test_no_subcommand_is_usage_error(capsys):
    code, _, err = run(capsys)
    assert code == 1
    assert "usage error" in err


def test_console_script_installed():
    exe = shutil.which("circunits")
    if exe is None:
        pytest.skip("console script not on PATH")
    result = subprocess.run(
        [exe, "tables", "--n", "5"], capture_output=True, text=True
    )
    assert result.returncode == 0
    assert "0 r_1 r_2 r_3 0 r_3 r_2 r_1" in result.stdout
