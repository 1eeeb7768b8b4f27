"""Tests for the command-line entry point."""

import io
import json
import math

import numpy as np
import pandas as pd
import pytest

from cli.proximity_wells import main
from core.output_formatter import ResultOutputFormatter
from projects.proximity_wells.models import BoundaryCondition
from projects.proximity_wells.solvers.propagate import mismatch
from projects.proximity_wells.solvers.stack import make_periodic_bilayer


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def read_csv(text):
    return pd.read_csv(io.StringIO(text), comment="#")


class TestSolve:

    def test_one_period_dirichlet(self, capsys):
        code, out, _ = run(capsys, "solve", "--periods", "1", "--bc", "dirichlet", "--v", "5")
        assert code == 0
        assert out.splitlines()[0] == "index,E,nodes,proximity_valid,below_barrier"
        frame = read_csv(out)
        assert len(frame) == 1
        assert frame["E"][0] == pytest.approx(4.38, abs=0.01)
        assert out.splitlines()[1].endswith(",0,true,true")

    def test_empty_window_is_not_an_error(self, capsys):
        code, out, _ = run(capsys, "solve", "--periods", "1", "--bc", "dirichlet", "--v", "3")
        assert code == 0
        lines = out.splitlines()
        assert lines[0].startswith("# note: no eigenvalues")
        assert lines[1:] == ["index,E,nodes,proximity_valid,below_barrier"]

    def test_json(self, capsys):
        code, out, _ = run(capsys, "solve", "--periods", "2", "--bc", "neumann", "--v", "2", "--format", "json")
        assert code == 0
        payload = json.loads(out)
        assert payload["stack"]["left_bc"] == "neumann"
        assert payload["window"] == [0.0, 2.0]
        assert [row["proximity_valid"] for row in payload["eigenvalues"]] == [True, False]
        assert ResultOutputFormatter.to_json(payload) == out

    def test_hand_built_stack(self, capsys):
        code, out, _ = run(capsys, "solve", "--layers", "0:1,5:1", "--bc", "neumann")
        assert code == 0
        assert read_csv(out)["E"][0] == pytest.approx(1.12, abs=0.01)

    @pytest.mark.parametrize("periods,bc,V", [(3, "neumann", 2.0), (3, "neumann", 20.0), (3, "dirichlet", 20.0)])
    def test_emitted_rows_are_eigenvalues(self, capsys, periods, bc, V):
        code, out, _ = run(capsys, "solve", "--periods", str(periods), "--bc", bc, "--v", str(V))
        assert code == 0
        stack = make_periodic_bilayer(periods, V, BoundaryCondition(bc))
        energies = read_csv(out)["E"]
        assert len(energies) >= 1
        for E in energies:
            assert abs(mismatch(stack, float(E)).value) < 1e-8

    def test_floats_round_trip(self, capsys):
        _, out, _ = run(capsys, "solve", "--v", "5")
        text = out.splitlines()[1].split(",")[1]
        assert repr(float(text)) == text

    def test_deterministic(self, capsys):
        _, first, _ = run(capsys, "solve", "--periods", "3", "--v", "10")
        _, second, _ = run(capsys, "solve", "--periods", "3", "--v", "10")
        assert first == second

    def test_pretty(self, capsys):
        code, out, _ = run(capsys, "solve", "--v", "5", "--pretty")
        assert code == 0
        assert "EIGENVALUES" in out

    def test_output_file(self, capsys, tmp_path):
        target = tmp_path / "out" / "solve.csv"
        code, out, err = run(capsys, "solve", "--v", "5", "-o", str(target))
        assert code == 0
        assert out == ""
        assert str(target) in err
        assert target.read_text().startswith("index,E,")


class TestConfigFile:

    def test_values_from_file(self, capsys, tmp_path):
        config = tmp_path / "run.json"
        config.write_text(json.dumps({"periods": 2, "potential": 2.0, "bc": "neumann", "command": "sweep"}))
        code, out, _ = run(capsys, "solve", "--config", str(config))
        assert code == 0
        np.testing.assert_allclose(read_csv(out)["E"], [0.70, 1.51], atol=0.01)

    def test_flags_override_file(self, capsys, tmp_path):
        config = tmp_path / "run.json"
        config.write_text(json.dumps({"periods": 2, "potential": 2.0, "bc": "neumann"}))
        code, out, _ = run(capsys, "solve", "--config", str(config), "--periods", "1", "--v", "5")
        assert code == 0
        np.testing.assert_allclose(read_csv(out)["E"], [1.12], atol=0.01)

    @pytest.mark.parametrize("content", ["[1, 2]", '{"potential": 5, "colour": 1}', "not json"])
    def test_bad_file(self, capsys, tmp_path, content):
        config = tmp_path / "run.json"
        config.write_text(content)
        assert run(capsys, "solve", "--config", str(config))[0] == 2

    def test_missing_file(self, capsys, tmp_path):
        assert run(capsys, "solve", "--config", str(tmp_path / "absent.json"))[0] == 2


class TestConfigurationErrors:

    @pytest.mark.parametrize(
        "argv",
        [
            ["solve", "--periods", "0", "--v", "5"],
            ["solve", "--v", "-1"],
            ["solve"],
            ["solve", "--v", "5", "--bc", "periodic"],
            ["solve", "--v", "5", "--window-lo", "3", "--window-hi", "1"],
            ["solve", "--v", "0"],
            ["sweep", "--v-min", "5", "--v-max", "1"],
            ["wf", "--v", "5", "--samples", "1"],
            ["solve", "--layers", "0-1"],
            ["solve", "--layers", "0:1,5:1", "--v", "5"],
            ["wf", "--layers", "0:1,5:1", "--periods", "2"],
        ],
    )
    def test_exit_code_two(self, capsys, argv):
        code, _, _ = run(capsys, *argv)
        assert code == 2

    def test_missing_subcommand(self, capsys):
        assert run(capsys)[0] == 2


class TestWavefunction:

    def test_csv(self, capsys):
        code, out, _ = run(capsys, "wf", "--v", "5", "--samples", "101")
        assert code == 0
        lines = out.splitlines()
        assert lines[0].startswith("# E=4.37")
        assert lines[1] == "x,psi,dpsi"
        frame = read_csv(out)
        assert len(frame) == 101
        assert frame["psi"].iloc[0] == 0.0 and frame["psi"].iloc[-1] == 0.0

    def test_square_well(self, capsys):
        code, out, _ = run(capsys, "wavefunction", "--v", "0", "--window-hi", "12", "--samples", "201")
        assert code == 0
        frame = read_csv(out)
        np.testing.assert_allclose(frame["psi"], np.sin(math.pi * frame["x"] / 2), atol=1e-7)

    def test_json(self, capsys):
        code, out, _ = run(capsys, "wf", "--v", "5", "--bc", "neumann", "--samples", "51", "--format", "json")
        assert code == 0
        payload = json.loads(out)
        assert payload["normalization"] == "max"
        assert payload["nodes"] == 0
        assert payload["gap_minimum"] > 0
        assert sum(payload["layer_probabilities"]) == pytest.approx(1.0)
        assert len(payload["samples"]["x"]) == 51
        assert ResultOutputFormatter.to_json(payload) == out
        assert max(payload["samples"]["psi"]) == pytest.approx(1.0)

    def test_state_with_nodes_has_no_gap(self, capsys):
        code, out, _ = run(capsys, "wf", "--periods", "2", "--v", "2", "--bc", "neumann", "--index", "1",
                           "--format", "json")
        assert code == 0
        payload = json.loads(out)
        assert payload["nodes"] >= 1
        assert payload["gap_minimum"] is None

    def test_missing_index(self, capsys):
        code, _, err = run(capsys, "wf", "--v", "5", "--index", "5")
        assert code == 1
        assert "not found" in err

    def test_explicit_normalization(self, capsys):
        code, out, _ = run(capsys, "wf", "--v", "5", "--normalization", "max", "--samples", "2001")
        assert code == 0
        assert read_csv(out)["psi"].max() == pytest.approx(1.0, abs=1e-5)


class TestSweep:

    def test_csv(self, capsys):
        code, out, _ = run(capsys, "sweep", "--v-min", "1", "--v-max", "10", "--steps", "4")
        assert code == 0
        assert out.splitlines()[0] == "V,E,branch"
        frame = read_csv(out)
        assert list(frame["V"]) == sorted(frame["V"])
        assert set(frame["branch"]) <= {"dirichlet_1p", "neumann_1p", "reduced_2p", "reduced_3p", "dirichlet_above_v"}

    def test_json(self, capsys):
        code, out, _ = run(capsys, "sweep", "--v-min", "4", "--v-max", "6", "--steps", "2", "--format", "json")
        assert code == 0
        rows = json.loads(out)["rows"]
        assert {row["V"] for row in rows} == {4.0, 6.0}
        assert {row["branch"] for row in rows if row["V"] == 4.0} >= {"dirichlet_above_v", "neumann_1p"}


class TestValidate:

    def test_narrow_scope(self, capsys):
        code, out, _ = run(capsys, "validate", "--periods", "1", "--v", "5", "--format", "json")
        assert code == 0
        payload = json.loads(out)
        assert payload["passed"] is True
        assert len(payload["checks"]) == 10
