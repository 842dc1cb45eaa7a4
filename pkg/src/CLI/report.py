"""
Вывод результатов: строки CSV и комментарий-заголовок с разрешённым сценарием.

dBm выводятся с 2 знаками, вероятности - 6 значащими цифрами, неопределённые значения - NA.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence, TextIO
import csv
import math

from src.ANALYTIC.scenario import Scenario
from src.CHANNEL.channel import mw_to_dbm
from src.GENERAL.constants import Constants as C
from src.MONTECARLO.montecarlo import SimConfig


# fmt: off
@dataclass(frozen=True)
class ResultRow:
    """
    Строка результата для одного класса.

    Атрибуты:
        n                       : Номер класса.
        sf                      : SF класса.
        sensitivity_dbm         : Порог P_n, dBm.
        window_s                : B_n + Delta_n, с.
        pi_analytic             : Pi_n по замкнутой формуле.
        pi_mc                   : Оценка Монте-Карло (None - не считалась).
        mc_stderr               : Стандартная ошибка оценки.
        keys                    : Параметры точки перебора ((имя, значение), ...), идут первыми колонками.
    """
    n                           : int
    sf                          : int
    sensitivity_dbm             : float
    window_s                    : float
    pi_analytic                 : float
    pi_mc                       : float | None = None
    mc_stderr                   : float | None = None
    keys                        : tuple[tuple[str, str], ...] = ()
# fmt: on

    @property
    def z_score(self) -> float | None:
        """(pi_mc - pi_analytic) / mc_stderr; None, если оценки нет или stderr = 0."""
        if self.pi_mc is None or not self.mc_stderr:
            return None
        return (self.pi_mc - self.pi_analytic) / self.mc_stderr


def format_dbm(value: float) -> str:
    return f"{value:.2f}"


def format_probability(value: float | None) -> str:
    if value is None or math.isnan(value):
        return C.CSV_NA
    return f"{value:.6g}"


def format_seconds(value: float) -> str:
    return f"{value:.6f}"


def describe_scenario(scn: Scenario, sim: SimConfig | None = None, source: str | None = None) -> list[str]:
    """Все параметры сценария после подстановки умолчаний, по строке на параметр."""
    radio = scn.radio
    lines = [
        f"source = {source or 'built-in defaults'}",
        f"n_nodes = {scn.n_nodes:.6g}",
        f"lambda_s = {scn.lambda_s:.6g}",
        f"lambda_t = {scn.lambda_t:.6g}",
        f"lambda = {scn.lam:.6g}",
        f"norm_radius_m = {scn.norm_radius_m:.6g}",
        f"alpha = {scn.alpha:.6g}",
        f"beta = {scn.pathloss.beta:.6g}",
        f"kappa = {scn.pathloss.kappa:.6g}",
        f"p_tr_dbm = {format_dbm(mw_to_dbm(scn.p_tr_mw))}",
        f"fading = {scn.fading.label}",
        f"bw_hz = {radio.bandwidth_hz:.6g}",
        f"n_preamble_extra = {radio.n_preamble_extra}",
        f"payload_bytes = {radio.payload_bytes}",
        f"header = {radio.header_flag}",
        f"low_rate_opt = {radio.low_rate_opt}",
        f"cr = 4/{radio.cr_code + 4}",
        "classes = " + ", ".join(
            f"SF{cls.sf}:{format_dbm(mw_to_dbm(cls.sensitivity_mw))}" for cls in scn.classes
        ),
    ]
    if sim is not None:
        lines += [
            f"replications = {sim.replications}",
            f"seed = {sim.seed}",
            f"tail_epsilon = {sim.tail_epsilon:g}",
            f"disk_truncation_m = {C.CSV_NA if sim.disk_truncation_m is None else f'{sim.disk_truncation_m:g}'}",
        ]
    return lines


def write_comment_block(stream: TextIO, lines: Iterable[str]) -> None:
    for line in lines:
        stream.write(f"{C.COMMENT_PREFIX}{line}\n")


def write_csv(
    stream: TextIO,
    rows: Sequence[ResultRow],
    header_lines: Sequence[str] = (),
    with_mc: bool = False,
) -> None:
    """
    CSV с фиксированным порядком колонок: [ключи перебора,] n,sf,sensitivity_dbm,window_s,pi_analytic
    [,pi_mc,mc_stderr,z_score]. Перед таблицей - блок комментариев и примечание о мощностях ниже P_1.
    """
    write_comment_block(stream, [*header_lines, C.BELOW_P1_NOTE])

    key_names = [name for name, _ in rows[0].keys] if rows else []
    columns = [*key_names, *C.CSV_COLUMNS, *(C.CSV_MC_COLUMNS if with_mc else ())]

    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(columns)
    for row in rows:
        cells = [value for _, value in row.keys]
        cells += [
            str(row.n),
            str(row.sf),
            format_dbm(row.sensitivity_dbm),
            format_seconds(row.window_s),
            format_probability(row.pi_analytic),
        ]
        if with_mc:
            cells += [
                format_probability(row.pi_mc),
                format_probability(row.mc_stderr),
                format_probability(row.z_score),
            ]
        writer.writerow(cells)


def write_table(stream: TextIO, columns: Sequence[str], rows: Iterable[Sequence[str]]) -> None:
    """Произвольная таблица CSV (airtime, equalize, validate)."""
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(columns)
    writer.writerows(rows)
