"""
Командная строка lorasg: airtime, analyze, equalize, simulate, validate, sweep.

CSV пишется в stdout (или в файл --out), журнал - в stderr.
"""

from __future__ import annotations

from contextlib import contextmanager
from pathlib import Path
from typing import Iterator, TextIO
import sys

import click

from src.ANALYTIC.scenario import default_scenario
from src.CHANNEL.channel import dbm_to_mw, mw_to_dbm
from src.CLI import commands
from src.CLI.report import (
    describe_scenario,
    format_dbm,
    format_probability,
    format_seconds,
    write_comment_block,
    write_csv,
    write_table,
)
from src.CLI.scenario_file import ScenarioFile, parse_scenario_file
from src.GENERAL.constants import Constants as C
from src.MONTECARLO.montecarlo import SimConfig
from src.PHY.lora_phy import RadioConfig, parse_coding_rate


def _load(config: Path | None) -> ScenarioFile:
    if config is None:
        return ScenarioFile(path=None, scenario=default_scenario(), sim=SimConfig(), preset=C.SENSITIVITY_PRESET_DEF)
    return parse_scenario_file(config)


@contextmanager
def _output(out: Path | None) -> Iterator[TextIO]:
    if out is None:
        yield sys.stdout
        return
    with open(out, "w", encoding=C.ENCODING, newline="") as stream:
        yield stream


def _header(command: str, loaded: ScenarioFile, sim: SimConfig | None = None) -> list[str]:
    source = None if loaded.path is None else str(loaded.path)
    return [f"lorasg {command}", *describe_scenario(loaded.scenario, sim, source)]


config_option = click.option(
    "--config",
    type=click.Path(exists=False, dir_okay=False, path_type=Path),
    default=None,
    help="Файл сценария (INI или JSON). По умолчанию - встроенный сельский сценарий.",
)
out_option = click.option(
    "--out",
    type=click.Path(dir_okay=False, writable=True, path_type=Path),
    default=None,
    help="Файл CSV вместо stdout.",
)


@click.group(name="lorasg")
def cli() -> None:
    """Вероятности приёма LoRa по классам SF, выравнивание чувствительностей, проверка Монте-Карло."""


@cli.command()
@click.option("--sf", type=click.IntRange(C.SF_MIN, C.SF_MAX), default=None, help="SF (по умолчанию все 6..12).")
@click.option("--bw-hz", type=float, default=C.BANDWIDTH_HZ_DEF, show_default=True)
@click.option("--n-preamble-extra", type=int, default=C.N_PREAMBLE_EXTRA_DEF, show_default=True)
@click.option("--payload-bytes", type=int, default=C.PAYLOAD_BYTES_DEF, show_default=True)
@click.option("--header", type=click.IntRange(0, 1), default=C.HEADER_FLAG_DEF, show_default=True)
@click.option("--low-rate-opt", type=click.IntRange(0, 1), default=C.LOW_RATE_OPT_DEF, show_default=True)
@click.option("--cr", type=str, default="4/5", show_default=True, help="4/5..4/8 или 1..4.")
@out_option
def airtime(
    sf: int | None,
    bw_hz: float,
    n_preamble_extra: int,
    payload_bytes: int,
    header: int,
    low_rate_opt: int,
    cr: str,
    out: Path | None,
) -> None:
    """Время передачи пакета и окно уязвимости."""
    radio = RadioConfig(
        bandwidth_hz=bw_hz,
        n_preamble_extra=n_preamble_extra,
        payload_bytes=payload_bytes,
        header_flag=header,
        low_rate_opt=low_rate_opt,
        cr_code=parse_coding_rate(cr),
    )
    table = commands.cmd_airtime(radio, C.SF_ALL if sf is None else (sf,))
    with _output(out) as stream:
        write_comment_block(
            stream,
            [
                "lorasg airtime",
                f"bw_hz = {radio.bandwidth_hz:g}; n_preamble_extra = {radio.n_preamble_extra}; "
                f"payload_bytes = {radio.payload_bytes}; header = {radio.header_flag}; "
                f"low_rate_opt = {radio.low_rate_opt}; cr = 4/{radio.cr_code + 4}",
            ],
        )
        write_table(
            stream,
            ("sf", "symbol_s", "preamble_s", "payload_symbols", "payload_s", "total_s", "lock_s", "window_s"),
            (
                (
                    str(a.sf),
                    format_seconds(a.symbol_s),
                    format_seconds(a.preamble_s),
                    str(a.payload_symbols),
                    format_seconds(a.payload_s),
                    format_seconds(a.total_s),
                    format_seconds(a.lock_window_s),
                    format_seconds(a.vulnerability_s),
                )
                for a in table
            ),
        )


@cli.command()
@config_option
@click.option("--nodes", type=str, default=None, help="Перебор числа узлов A:B:STEP.")
@out_option
def analyze(config: Path | None, nodes: str | None, out: Path | None) -> None:
    """Вероятности успешного приёма Pi_n."""
    loaded = _load(config)
    sweep = None if nodes is None else commands.parse_nodes_sweep(nodes)
    rows = commands.cmd_analyze(loaded.scenario, sweep)
    with _output(out) as stream:
        write_csv(stream, rows, _header("analyze", loaded))


@cli.command()
@config_option
@click.option("--target-pi", type=float, default=C.TARGET_PI_DEF, show_default=True)
@click.option("--compare-paper", is_flag=True, help="Сравнить с опубликованной таблицей в двух режимах.")
@out_option
def equalize(config: Path | None, target_pi: float, compare_paper: bool, out: Path | None) -> None:
    """Пороги, выравнивающие Pi_n."""
    loaded = _load(config)
    rows = commands.cmd_equalize(loaded.scenario, target_pi)
    comparisons = commands.compare_published(loaded.scenario, target_pi) if compare_paper else []

    with _output(out) as stream:
        write_comment_block(stream, [*_header("equalize", loaded), f"target_pi = {target_pi:g}", C.BELOW_P1_NOTE])
        write_table(
            stream,
            ("n", "sf", "sensitivity_dbm_equalized", "sensitivity_dbm_reference", "pi_check"),
            (
                (
                    str(row.n),
                    str(row.sf),
                    format_dbm(row.equalized_dbm),
                    format_dbm(row.reference_dbm),
                    format_probability(row.pi_check),
                )
                for row in rows
            ),
        )
        write_comment_block(
            stream,
            ["self-check: pi = " + ", ".join(f"SF{row.sf}:{format_probability(row.pi_check)}" for row in rows)],
        )
        if not comparisons:
            return

        for comparison in comparisons:
            verdict = "PASS" if comparison.passed else "FAIL"
            write_comment_block(
                stream,
                [
                    f"{comparison.mode}: {verdict}; increasing = {comparison.increasing}; "
                    f"in_legal_range = {comparison.in_legal_range}; weakest_sf10_12 = {comparison.weakest_ok}"
                    + ("" if comparison.error is None else f"; infeasible: {comparison.error}")
                ],
            )
        overall = "PASS" if any(comparison.passed for comparison in comparisons) else "FAIL"
        write_comment_block(stream, [f"published comparison (report only): {overall}"])
        write_table(
            stream,
            ("mode", "n", "sf", "computed_dbm", "published_dbm", "delta_db"),
            (
                (
                    comparison.mode,
                    str(row.n),
                    str(row.sf),
                    C.CSV_NA if row.computed_dbm is None else format_dbm(row.computed_dbm),
                    C.CSV_NA if row.published_dbm is None else format_dbm(row.published_dbm),
                    C.CSV_NA if row.delta_db is None else f"{row.delta_db:+.2f}",
                )
                for comparison in comparisons
                for row in comparison.rows
            ),
        )


def _sim_config(
    loaded: ScenarioFile, replications: int | None, seed: int | None, disk_truncation: float | None
) -> SimConfig:
    sim = loaded.sim
    return SimConfig(
        replications=sim.replications if replications is None else replications,
        seed=sim.seed if seed is None else seed,
        tail_epsilon=sim.tail_epsilon,
        disk_truncation_m=sim.disk_truncation_m if disk_truncation is None else disk_truncation,
    )


def _mode_lines(cfg: SimConfig) -> list[str]:
    if cfg.finite_disk:
        return [f"mode = finite-disk R = {cfg.disk_truncation_m:g} m (not the closed-form model; reference pi on the same disk)"]
    return ["mode = infinite-plane (truncated at max_relevant_radius)"]


replications_option = click.option("--replications", type=click.IntRange(min=1), default=None)
seed_option = click.option("--seed", type=click.IntRange(0, 2**64 - 1), default=None)
disk_option = click.option("--disk-truncation", type=float, default=None, help="Радиус конечного диска, м.")


@cli.command()
@config_option
@replications_option
@seed_option
@click.option("--mode", type=click.Choice(C.MC_MODES), default=C.MC_MODE_SPATIAL, show_default=True)
@disk_option
@out_option
def simulate(
    config: Path | None,
    replications: int | None,
    seed: int | None,
    mode: str,
    disk_truncation: float | None,
    out: Path | None,
) -> None:
    """Оценки Монте-Карло Pi_n и z-оценки против аналитики (|z| > 4 - код 3)."""
    loaded = _load(config)
    cfg = _sim_config(loaded, replications, seed, disk_truncation)
    rows = commands.cmd_simulate(loaded.scenario, cfg, mode)
    with _output(out) as stream:
        header = [*_header("simulate", loaded, cfg), f"mc_mode = {mode}", *_mode_lines(cfg)]
        write_csv(stream, rows, header, with_mc=True)
    commands.check_oracle({f"n={row.n} (SF{row.sf})": row.z_score for row in rows})


@cli.command()
@config_option
@replications_option
@seed_option
@click.option("--window-s", type=float, default=C.VALIDATE_WINDOW_S_DEF, show_default=True)
@click.option("--threshold-dbm", type=float, multiple=True, help="Порог, dBm (по умолчанию - пороги классов).")
@disk_option
@out_option
def validate(
    config: Path | None,
    replications: int | None,
    seed: int | None,
    window_s: float,
    threshold_dbm: tuple[float, ...],
    disk_truncation: float | None,
    out: Path | None,
) -> None:
    """Проверка степенного закона интенсивности принятых мощностей."""
    loaded = _load(config)
    cfg = _sim_config(loaded, replications, seed, disk_truncation)
    thresholds = [dbm_to_mw(value) for value in threshold_dbm] or None
    points = commands.cmd_validate(loaded.scenario, cfg, thresholds, window_s)
    with _output(out) as stream:
        write_comment_block(
            stream, [*_header("validate", loaded, cfg), f"window_s = {window_s:g}", *_mode_lines(cfg)]
        )
        write_table(
            stream,
            ("threshold_dbm", "empirical_mean", "analytic_mean", "stderr", "z_score"),
            (
                (
                    format_dbm(mw_to_dbm(point.threshold_mw)),
                    format_probability(point.empirical_mean),
                    format_probability(point.analytic_mean),
                    format_probability(point.stderr),
                    format_probability(point.z_score),
                )
                for point in points
            ),
        )
    commands.check_oracle({f"t={mw_to_dbm(p.threshold_mw):.2f}dBm": p.z_score for p in points})


@cli.command()
@click.option("--kind", type=click.Choice(C.SWEEP_KINDS), required=True)
@config_option
@click.option("--nodes", type=str, default=":".join(f"{v:g}" for v in C.NODES_SWEEP_DEF), show_default=True)
@out_option
def sweep(kind: str, config: Path | None, nodes: str, out: Path | None) -> None:
    """Данные для графиков зависимости Pi от числа узлов."""
    loaded = _load(config)
    rows = commands.cmd_sweep(kind, loaded.scenario, commands.parse_nodes_sweep(nodes))
    with _output(out) as stream:
        write_csv(stream, rows, [*_header(f"sweep --kind {kind}", loaded), f"nodes = {nodes}"])


def run(args: list[str] | None = None) -> int:
    """Запуск без перехвата исключений click (standalone_mode=False): коды завершения назначает main()."""
    result = cli.main(args=args if args is not None else sys.argv[1:], prog_name="lorasg", standalone_mode=False)
    return result if isinstance(result, int) else C.EXIT_OK
