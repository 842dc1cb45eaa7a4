import csv
from dataclasses import replace
import io

import pytest
from click.testing import CliRunner

from src.ANALYTIC.analytic import all_reception_probabilities
from src.CLI import commands
from src.CLI.cli import cli
from src.GENERAL import main as main_module
from src.GENERAL.constants import Constants as C
from src.GENERAL.exceptions import NumericError, OracleDisagreementError
from src.MONTECARLO.montecarlo import SimEstimate


class DummyTuneLogger:
    def setup_logging(self):
        pass


@pytest.fixture
def runner():
    return CliRunner()


@pytest.fixture
def run_main(monkeypatch):
    monkeypatch.setattr(main_module, "TuneLogger", DummyTuneLogger, raising=True)
    return main_module.main


def invoke(runner, args):
    result = runner.invoke(cli, args, catch_exceptions=False)
    assert result.exit_code == 0
    return result.stdout


def table(text):
    """Строки CSV без комментариев: заголовок и данные."""
    rows = list(csv.reader(io.StringIO("".join(line for line in text.splitlines(True) if not line.startswith("#")))))
    return rows[0], rows[1:]


def test_airtime_single_sf(runner):
    header, rows = table(invoke(runner, ["airtime", "--sf", "12"]))
    assert header[0] == "sf"
    record = dict(zip(header, rows[0]))
    assert record["payload_symbols"] == "28"
    assert record["total_s"] == "1.253376"
    assert record["window_s"] == "1.589248"


def test_airtime_all_and_coding_rate(runner):
    _, rows = table(invoke(runner, ["airtime"]))
    assert [row[0] for row in rows] == [str(sf) for sf in C.SF_ALL]
    header, rows = table(invoke(runner, ["airtime", "--sf", "12", "--cr", "4/8"]))
    assert dict(zip(header, rows[0]))["payload_symbols"] == "40"


def test_analyze_default(runner):
    output = invoke(runner, ["analyze"])
    assert "# n_nodes = 1000" in output
    assert "# source = built-in defaults" in output
    header, rows = table(output)
    assert tuple(header) == C.CSV_COLUMNS
    assert [row[1] for row in rows] == ["12", "11", "10", "9", "8", "7", "6"]
    assert rows[0][2] == "-137.00"
    assert float(rows[0][4]) == pytest.approx(0.0059, abs=5e-4)
    assert float(rows[6][4]) == pytest.approx(0.942, abs=1e-3)


def test_analyze_nodes_sweep(runner):
    header, rows = table(invoke(runner, ["analyze", "--nodes", "100:300:100"]))
    assert header[0] == "n_nodes"
    assert len(rows) == 21
    assert {row[0] for row in rows} == {"100", "200", "300"}


def test_analyze_config_and_out(runner, tmp_path):
    config = tmp_path / "scenario.cfg"
    config.write_text("[network]\nn_nodes = 500\n\n[channel]\nbeta = 3.5\nfading = none\n", encoding="utf-8")
    out = tmp_path / "result.csv"
    assert invoke(runner, ["analyze", "--config", str(config), "--out", str(out)]) == ""
    text = out.read_text(encoding="utf-8")
    assert f"# source = {config}" in text
    assert "# fading = none" in text
    _, rows = table(text)
    assert len(rows) == 7


def test_equalize(runner):
    output = invoke(runner, ["equalize"])
    header, rows = table(output)
    assert header == ["n", "sf", "sensitivity_dbm_equalized", "sensitivity_dbm_reference", "pi_check"]
    assert [row[4] for row in rows] == ["0.95"] * 7
    equalized = [float(row[2]) for row in rows]
    assert all(a < b for a, b in zip(equalized, equalized[1:]))
    assert "# self-check: pi = SF12:0.95" in output


def test_equalize_compare_published(runner):
    output = invoke(runner, ["equalize", "--compare-paper"])
    assert "# infinite-plane:" in output
    assert "# finite-disk: FAIL" in output
    assert "infeasible" in output
    assert "# published comparison (report only):" in output
    tail = output.split("# published comparison (report only):")[1]
    header, rows = table(tail.split("\n", 1)[1])
    assert header == ["mode", "n", "sf", "computed_dbm", "published_dbm", "delta_db"]
    assert len(rows) == 14
    assert {row[3] for row in rows if row[0] == "finite-disk"} == {C.CSV_NA}


def test_simulate_power_mode(runner):
    output = invoke(runner, ["simulate", "--replications", "2000", "--seed", "7", "--mode", "power"])
    assert "# mc_mode = power" in output
    assert "# seed = 7" in output
    header, rows = table(output)
    assert tuple(header) == C.CSV_COLUMNS + C.CSV_MC_COLUMNS
    assert len(rows) == 7


def test_simulate_power_mode_on_finite_disk(runner):
    output = invoke(runner, ["simulate", "--mode", "power", "--disk-truncation", "8000", "--replications", "2000"])
    assert "finite-disk R = 8000 m" in output
    header, rows = table(output)
    assert float(rows[0][header.index("pi_mc")]) > 0.99


def test_simulate_is_reproducible(runner):
    args = ["simulate", "--replications", "1000", "--seed", "3", "--mode", "power"]
    assert invoke(runner, args) == invoke(runner, args)


def test_simulate_spatial_output_does_not_depend_on_threads(runner, monkeypatch):
    args = ["simulate", "--mode", "spatial", "--replications", "2000", "--seed", "1"]
    monkeypatch.setenv(C.ENV_THREADS, "1")
    single = invoke(runner, args)
    monkeypatch.setenv(C.ENV_THREADS, "8")
    assert invoke(runner, args) == single


def test_validate_custom_thresholds(runner):
    output = invoke(runner, ["validate", "--replications", "1000", "--threshold-dbm", "-130", "--threshold-dbm", "-125"])
    header, rows = table(output)
    assert header == ["threshold_dbm", "empirical_mean", "analytic_mean", "stderr", "z_score"]
    assert [row[0] for row in rows] == ["-130.00", "-125.00"]


@pytest.mark.parametrize(
    "kind, keys, count",
    [("figure2", ["n_nodes"], 14), ("figure3", ["n_nodes", "fading"], 6), ("figure4", ["n_nodes", "alpha"], 14)],
)
def test_sweep(runner, kind, keys, count):
    header, rows = table(invoke(runner, ["sweep", "--kind", kind, "--nodes", "100:200:100"]))
    assert header[: len(keys)] == keys
    assert header[len(keys)] == "n"
    assert len(rows) == count


def test_sweep_figure3_only_sf12(runner):
    header, rows = table(invoke(runner, ["sweep", "--kind", "figure3", "--nodes", "1000:1000:100"]))
    assert [row[1] for row in rows] == ["none", "rayleigh", "lognormal(2dB)"]
    assert {row[header.index("sf")] for row in rows} == {"12"}


def test_sweep_figure4_keeps_planar_density(scn):
    rows = commands.cmd_sweep("figure4", scn, [1000])
    expected = all_reception_probabilities(replace(scn, alpha=-0.2))
    assert [row.pi_analytic for row in rows] == pytest.approx([r.pi for r in expected], rel=1e-12)


def test_parse_nodes_sweep():
    assert commands.parse_nodes_sweep("100:2000:100")[-1] == 2000
    assert len(commands.parse_nodes_sweep("100:2000:100")) == 20


@pytest.mark.parametrize("spec", ["1:2", "a:b:c", "1:10:0", "10:1:1", "-1:5:1"])
def test_parse_nodes_sweep_rejects(spec):
    with pytest.raises(ValueError):
        commands.parse_nodes_sweep(spec)


def test_check_oracle_thresholds(caplog):
    commands.check_oracle({"a": 3.5, "b": None, "c": float("nan"), "d": -1.0})
    assert "a" in caplog.text
    with pytest.raises(OracleDisagreementError) as info:
        commands.check_oracle({"a": 3.5, "b": -4.5})
    assert info.value.z_scores == {"b": -4.5}


def test_main_ok(run_main, capsys):
    assert run_main(["airtime", "--sf", "7"]) == C.EXIT_OK
    assert "0.054528" in capsys.readouterr().out


@pytest.mark.parametrize(
    "args",
    [
        ["bogus"],
        ["sweep"],
        ["analyze", "--config", "absent.cfg"],
        ["equalize", "--target-pi", "1.5"],
        ["analyze", "--nodes", "5:1:1"],
    ],
)
def test_main_validation_exit_code(run_main, tmp_path, monkeypatch, args):
    monkeypatch.chdir(tmp_path)
    assert run_main(args) == C.EXIT_VALIDATION


def test_main_oracle_exit_code(run_main, monkeypatch):
    monkeypatch.setattr(
        commands, "simulate_class", lambda scn, n, cfg, mode: SimEstimate.from_counts(500, 1000, mode, cfg.seed)
    )
    assert run_main(["simulate", "--replications", "1000"]) == C.EXIT_ORACLE


def test_main_numeric_exit_code(run_main, monkeypatch):
    def fail(scn, target_pi):
        raise NumericError("no convergence", {"target_pi": target_pi})

    monkeypatch.setattr(commands, "equalize_sensitivities", fail)
    assert run_main(["equalize"]) == C.EXIT_NUMERIC


def test_main_unexpected_and_interrupt(run_main, monkeypatch):
    def boom(*args, **kwargs):
        raise RuntimeError("boom")

    monkeypatch.setattr(commands, "cmd_analyze", boom)
    assert run_main(["analyze"]) == C.EXIT_UNEXPECTED

    def interrupt(*args, **kwargs):
        raise KeyboardInterrupt

    monkeypatch.setattr(commands, "cmd_analyze", interrupt)
    assert run_main(["analyze"]) == C.EXIT_INTERRUPTED
