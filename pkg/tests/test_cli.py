"""
End-to-end tests of the command line through application.main
"""

import argparse
import io
import json
import math
from pathlib import Path

import pandas as pd
from pytest import approx, mark, raises

from tripod_qpg.application import main
from tripod_qpg.controllers.cli_controller import parse_angle
from tripod_qpg.services.search import SWEEP_COLUMNS

DATA = Path(__file__).resolve().parents[1] / "data"


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv, "--format", "json")
    assert code == 0, err
    return json.loads(out)


# =============================================================================
# ARGUMENTS
# =============================================================================

@mark.parametrize("text,value", [
    ("pi", math.pi),
    ("2pi", 2 * math.pi),
    ("pi/2", math.pi / 2),
    ("0.5*pi", math.pi / 2),
    ("-pi", -math.pi),
    ("1.25", 1.25),
])
def test_parse_angle(text, value):
    assert parse_angle(text) == approx(value, rel=1e-15)


def test_parse_angle_rejects_words():
    with raises(argparse.ArgumentTypeError):
        parse_angle("half a turn")
    with raises(argparse.ArgumentTypeError):
        parse_angle("pi/0")


def test_usage_errors_exit_with_config_code(capsys):
    code, out, err = run(capsys, "susceptibility", "--format", "yaml")
    assert code == 1
    assert out == ""
    assert "tripod-qpg: error" in err


# =============================================================================
# CONFIGURATION
# =============================================================================

def test_susceptibility_values(capsys):
    document = run_json(capsys, "susceptibility")
    assert document["chi1_p_re"] == approx(1.038154186492e-02, rel=1e-10, abs=0)
    assert document["chi1_p_im"] == approx(7.266041299540e-03, rel=1e-10, abs=0)
    assert document["chi3_t_re"] == approx(2.817189750739e-06, rel=1e-10, abs=0)
    assert document["chi3_t_im"] == approx(6.737849201322e-06, rel=1e-10, abs=0)
    assert document["chi1_unit"] == "dimensionless"
    assert document["chi3_unit"] == "m^2/V^2"


def test_preset_and_config_file_agree(capsys):
    _, from_preset, _ = run(capsys, "phases", "--preset", "quantum")
    _, from_file, _ = run(capsys, "phases", "--config", str(DATA / "quantum.json"))
    assert from_preset == from_file


@mark.parametrize("name", ["classical", "gas_cell"])
def test_shipped_configs_match_presets(capsys, name):
    _, from_preset, _ = run(capsys, "truth-table", "--preset", name)
    _, from_file, _ = run(capsys, "truth-table", "--config", str(DATA / f"{name}.json"))
    assert from_preset == from_file


def test_output_is_deterministic(capsys):
    first = run(capsys, "truth-table", "--format", "json")
    second = run(capsys, "truth-table", "--format", "json")
    assert first == second


def test_empty_medium(capsys, write_config):
    path = write_config({"density": 0.0})
    document = run_json(capsys, "susceptibility", "--config", str(path))
    assert {key: value for key, value in document.items() if not key.endswith("_unit")} == dict.fromkeys(
        ["chi1_p_re", "chi1_p_im", "chi1_t_re", "chi1_t_im", "chi3_p_re", "chi3_p_im", "chi3_t_re", "chi3_t_im"], 0.0
    )
    report = run_json(capsys, "truth-table", "--config", str(path))
    assert report["phi_conditional"] == 0.0
    assert report["universal"] is False
    assert report["witness"] == 0.0


def test_zero_length(capsys, write_config):
    path = write_config({"length": 0.0})
    document = run_json(capsys, "phases", "--config", str(path))
    assert set(document.values()) == {0.0}


def test_malformed_config(capsys, write_config):
    path = write_config('{"density": 3e19,,}')
    code, out, err = run(capsys, "phases", "--config", str(path))
    assert code == 1
    assert out == ""
    assert "line 1" in err


@mark.parametrize("document,field", [
    ({"colour": "blue"}, "colour"),
    ({"density": -1.0}, "density"),
    ({"gamma_j0": [1.0, 0.0, 1.0]}, "gamma_j0"),
])
def test_invalid_fields_are_named(capsys, write_config, document, field):
    code, _, err = run(capsys, "phases", "--config", str(write_config(document)))
    assert code == 1
    assert field in err


def test_missing_config(capsys, tmp_path):
    code, _, err = run(capsys, "phases", "--config", str(tmp_path / "absent.json"))
    assert code == 1
    assert "absent.json" in err


def test_pole_exits_with_physics_code(capsys, write_config):
    path = write_config({"omega_c": 0.0, "delta1": 20.0, "gamma_kj": [0.0, 0.01, 0.01]})
    code, out, err = run(capsys, "susceptibility", "--config", str(path))
    assert code == 2
    assert out == ""
    assert "D10*D12" in err


# =============================================================================
# COMMANDS
# =============================================================================

def test_truth_table(capsys):
    document = run_json(capsys, "truth-table")
    assert document["phi_conditional"] == approx(0.5271963078769, rel=1e-9)
    assert document["universal"] is True
    assert document["witness"] == approx(abs(math.sin(document["phi_conditional"] / 2)), abs=1e-9)


def test_dispersive_overlap_rejects_quantum_probe(capsys):
    code, _, err = run(capsys, "phases", "--overlap", "dispersive")
    assert code == 2
    assert "probe" in err


def test_window(capsys):
    document = run_json(capsys, "window")
    assert document["window"] == approx(0.199, abs=1e-9)
    assert document["valid"] is True
    assert document["ratio"] >= 100


@mark.parametrize("argv,field,expected", [
    (["find-length"], "length", 9.534490607468e-3),
    (["find-length", "--target", "pi"], "length", 9.534490607468e-3),
    (["find-density", "--preset", "classical"], "density", 1.537763292300e20),
])
def test_find(capsys, argv, field, expected):
    document = run_json(capsys, *argv)
    assert document[field] == approx(expected, rel=1e-9)
    assert document["phi_conditional"] == approx(math.pi, abs=1e-9)
    assert document["monotone"] is True


def test_find_zero_target(capsys):
    document = run_json(capsys, "find-length", "--target", "0")
    assert document["length"] == 0.0


@mark.parametrize("target", ["pi/0", "nan", "inf"])
def test_find_rejects_unusable_targets(capsys, target):
    code, out, err = run(capsys, "find-length", "--target", target)
    assert code == 1
    assert out == ""
    assert "Traceback" not in err


def test_find_unreachable(capsys):
    code, out, err = run(capsys, "find-length", "--target", "1000")
    assert code == 3
    assert out == ""
    assert "not reachable" in err


def test_sweep_csv(capsys):
    code, out, _ = run(
        capsys, "sweep", "--param", "length", "--start", "1e-3", "--stop", "3e-3", "--points", "3"
    )
    assert code == 0
    frame = pd.read_csv(io.StringIO(out))
    assert list(frame.columns) == SWEEP_COLUMNS
    assert list(frame["status"]) == ["ok"] * 3
    assert frame["phi_conditional"].iloc[2] == approx(3 * frame["phi_conditional"].iloc[0], rel=1e-10)


def test_sweep_with_pole(capsys, write_config):
    path = write_config({"gamma_kj": [0.01, 0.0, 0.01]})
    code, out, _ = run(
        capsys, "sweep", "--config", str(path), "--param", "delta3",
        "--start", "20.0", "--stop", "20.02", "--points", "3",
    )
    assert code == 0
    assert list(pd.read_csv(io.StringIO(out))["status"]) == ["ok", "pole_error", "ok"]


def test_invalid_sweep(capsys):
    code, _, err = run(
        capsys, "sweep", "--param", "length", "--start", "1", "--stop", "1", "--points", "3"
    )
    assert code == 1
    assert "invalid sweep" in err


def test_oracle_check(capsys):
    rows = run_json(capsys, "oracle-check", "--scan-max", "0")
    assert [row["beam"] for row in rows] == ["probe"] * 3 + ["trigger"] * 3
    assert all(row["chi3_oracle_re"] == 0.0 for row in rows)
    assert all(row["fit_residual"] == 0.0 for row in rows)


def test_oracle_check_rejects_strong_fields(capsys):
    code, _, err = run(capsys, "oracle-check", "--weak-field", "0.1")
    assert code == 2
    assert "weak field" in err


def test_out_file(capsys, tmp_path):
    target = tmp_path / "phases.json"
    code, out, _ = run(capsys, "phases", "--format", "json", "--out", str(target))
    assert code == 0
    assert out == ""
    assert json.loads(target.read_text(encoding="utf-8"))["phi_conditional"] == approx(
        0.5271963078769, rel=1e-9
    )


def test_text_and_csv_records(capsys):
    _, text, _ = run(capsys, "window")
    assert text.splitlines()[-1].split() == ["valid", "true"]
    _, csv, _ = run(capsys, "window", "--format", "csv")
    assert csv.splitlines()[0] == "field,value"


def test_verbose_logs_to_stderr(capsys):
    code, out, err = run(capsys, "phases", "--verbose")
    assert code == 0
    assert "[INFO]" in err
    assert "phi_conditional" in out
