"""
Команды CLI без ввода-вывода: каждая возвращает данные, click-группа только печатает их.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence
import logging
import math

from src.ANALYTIC.analytic import all_reception_probabilities, equalize_sensitivities
from src.ANALYTIC.finite_disk import disk_all_reception_probabilities, disk_equalize_sensitivities
from src.ANALYTIC.scenario import Scenario
from src.CHANNEL.channel import RAYLEIGH, mw_to_dbm, parse_fading
from src.CLI.report import ResultRow
from src.GENERAL.constants import Constants as C
from src.GENERAL.exceptions import InvalidParameterError, NumericError, OracleDisagreementError
from src.GENERAL.textmessage import TextMessage as T
from src.MONTECARLO.montecarlo import (
    PowerLawPoint,
    SimConfig,
    analytic_reference,
    simulate_class,
    validate_power_law,
)
from src.PHY.lora_phy import AirTime, RadioConfig, airtime_table

logger = logging.getLogger(__name__)

MODE_INFINITE = "infinite-plane"
MODE_DISK = "finite-disk"


# fmt: off
@dataclass(frozen=True)
class EqualizedRow:
    n                           : int
    sf                          : int
    equalized_dbm               : float
    reference_dbm               : float
    pi_check                    : float


@dataclass(frozen=True)
class PublishedRow:
    n                           : int
    sf                          : int
    computed_dbm                : float | None
    published_dbm               : float | None

    @property
    def delta_db(self) -> float | None:
        """computed - published со знаком."""
        if self.computed_dbm is None or self.published_dbm is None:
            return None
        return self.computed_dbm - self.published_dbm


@dataclass(frozen=True)
class PublishedComparison:
    """
    Сравнение выровненных порогов с опубликованной таблицей в одном режиме.

    Атрибуты:
        mode                    : infinite-plane или finite-disk.
        rows                    : Пороги по классам.
        increasing              : Пороги строго возрастают с номером класса.
        in_legal_range          : Все пороги в (-137, -121] dBm.
        weakest_ok              : Три самых слабых класса без выравнивания при N_nodes = 2000 - SF10..12.
        error                   : Причина, по которой выравнивание невозможно (None - решение найдено).
    """
    mode                        : str
    rows                        : tuple[PublishedRow, ...]
    increasing                  : bool
    in_legal_range              : bool
    weakest_ok                  : bool
    error                       : str | None = None

    @property
    def passed(self) -> bool:
        return self.error is None and self.increasing and self.in_legal_range and self.weakest_ok
# fmt: on


def parse_nodes_sweep(spec: str) -> list[float]:
    """Диапазон 'A:B:STEP' (B включительно) в список чисел узлов."""
    parts = spec.split(":")
    try:
        start, stop, step = (float(part) for part in parts)
    except ValueError:
        raise InvalidParameterError(T.bad_sweep_spec.format(spec=spec)) from None
    if step <= 0 or start < 0:
        raise InvalidParameterError(T.bad_sweep_spec.format(spec=spec))
    if start > stop:
        raise InvalidParameterError(T.bad_sweep.format(spec=spec))

    count = int(math.floor((stop - start) / step + 1e-9)) + 1
    return [start + i * step for i in range(count)]


def _nodes_key(n_nodes: float) -> tuple[str, str]:
    return "n_nodes", f"{n_nodes:g}"


def result_rows(scn: Scenario, keys: tuple[tuple[str, str], ...] = ()) -> list[ResultRow]:
    rows = []
    for cls, result in zip(scn.classes, all_reception_probabilities(scn)):
        rows.append(
            ResultRow(
                n=result.index_n,
                sf=result.sf,
                sensitivity_dbm=mw_to_dbm(cls.sensitivity_mw),
                window_s=result.window_s,
                pi_analytic=result.pi,
                keys=keys,
            )
        )
    return rows


def cmd_airtime(radio: RadioConfig, sfs: Sequence[int] = C.SF_ALL) -> list[AirTime]:
    return airtime_table(radio, tuple(sfs))


def cmd_analyze(scn: Scenario, nodes: Sequence[float] | None = None) -> list[ResultRow]:
    """Pi_n по классам; при заданном переборе - для каждой точки N_nodes."""
    if nodes is None:
        return result_rows(scn)
    if not nodes:
        raise InvalidParameterError(T.bad_sweep.format(spec=list(nodes)))

    rows = []
    for n_nodes in nodes:
        rows += result_rows(scn.with_nodes(n_nodes), (_nodes_key(n_nodes),))
    return rows


def cmd_equalize(scn: Scenario, target_pi: float) -> list[EqualizedRow]:
    """
    Выровненные пороги рядом с исходными и контрольный пересчёт Pi_n.

    Отклонение контрольного Pi_n от цели больше C.PI_SELF_CHECK_TOL - NumericError.
    """
    thresholds = equalize_sensitivities(scn, target_pi)
    check = all_reception_probabilities(scn.with_sensitivities(thresholds))

    worst = max(abs(result.pi - target_pi) for result in check)
    if worst > C.PI_SELF_CHECK_TOL:
        raise NumericError(
            T.self_check_failed.format(worst=worst, tol=C.PI_SELF_CHECK_TOL),
            {"target_pi": target_pi, "pi": [result.pi for result in check]},
        )

    return [
        EqualizedRow(
            n=cls.index_n,
            sf=cls.sf,
            equalized_dbm=mw_to_dbm(p_mw),
            reference_dbm=mw_to_dbm(cls.sensitivity_mw),
            pi_check=result.pi,
        )
        for cls, p_mw, result in zip(scn.classes, thresholds, check)
    ]


def _weakest_sfs(pis: Sequence[float], sfs: Sequence[int], count: int) -> set[int]:
    order = sorted(range(len(pis)), key=lambda i: pis[i])
    return {sfs[i] for i in order[:count]}


def _comparison(
    mode: str, scn: Scenario, thresholds: Sequence[float] | None, weakest_pis: Sequence[float], error: str | None
) -> PublishedComparison:
    rows = tuple(
        PublishedRow(
            n=cls.index_n,
            sf=cls.sf,
            computed_dbm=None if thresholds is None else mw_to_dbm(thresholds[i]),
            published_dbm=C.SENSITIVITY_EQUALIZED.get(cls.sf),
        )
        for i, cls in enumerate(scn.classes)
    )
    computed = [row.computed_dbm for row in rows if row.computed_dbm is not None]
    low, high = C.LEGAL_SENSITIVITY_DBM
    sfs = [cls.sf for cls in scn.classes]

    return PublishedComparison(
        mode=mode,
        rows=rows,
        increasing=bool(computed) and all(a < b for a, b in zip(computed, computed[1:])),
        in_legal_range=bool(computed) and all(low < value <= high for value in computed),
        weakest_ok=_weakest_sfs(weakest_pis, sfs, len(C.WEAKEST_SFS_EXPECTED)) == set(C.WEAKEST_SFS_EXPECTED),
        error=error,
    )


def compare_published(scn: Scenario, target_pi: float = C.TARGET_PI_DEF) -> list[PublishedComparison]:
    """
    Выравнивание в двух режимах (вся плоскость и диск радиуса нормировки) против опубликованной таблицы.

    Несуществование решения в режиме диска не ошибка: режим помечается как не прошедший.
    """
    weak_scn = scn.with_nodes(C.WEAKEST_CHECK_NODES)
    comparisons = [
        _comparison(
            MODE_INFINITE,
            scn,
            equalize_sensitivities(scn, target_pi),
            [result.pi for result in all_reception_probabilities(weak_scn)],
            None,
        )
    ]

    disk_pis = [result.pi for result in disk_all_reception_probabilities(weak_scn)]
    try:
        thresholds: list[float] | None = disk_equalize_sensitivities(scn, target_pi)
        error = None
    except NumericError as e:
        logger.warning(str(e))
        thresholds, error = None, str(e)
    comparisons.append(_comparison(MODE_DISK, scn, thresholds, disk_pis, error))
    return comparisons


def cmd_simulate(scn: Scenario, cfg: SimConfig, mode: str = C.MC_MODE_SPATIAL) -> list[ResultRow]:
    """
    Оценки Монте-Карло для всех классов рядом с аналитикой.

    В режиме конечного диска эталоном служит Pi_n на том же диске.
    """
    rows = []
    for cls in scn.classes:
        estimate = simulate_class(scn, cls.index_n, cfg, mode)
        rows.append(
            ResultRow(
                n=cls.index_n,
                sf=cls.sf,
                sensitivity_dbm=mw_to_dbm(cls.sensitivity_mw),
                window_s=cls.window_s,
                pi_analytic=analytic_reference(scn, cls.index_n, cfg, mode),
                pi_mc=estimate.p_hat,
                mc_stderr=estimate.stderr,
            )
        )
    return rows


def check_oracle(z_scores: dict[str, float | None]) -> None:
    """Предупреждение при |z| > 3, OracleDisagreementError при |z| > 4."""
    failed = {}
    for cell, z in z_scores.items():
        if z is None or math.isnan(z):
            continue
        if abs(z) > C.Z_ORACLE_LIMIT:
            failed[cell] = z
        elif abs(z) > C.Z_ORACLE_WARN:
            logger.warning(T.oracle_warn.format(z=z, cell=cell, limit=C.Z_ORACLE_WARN))
    if failed:
        raise OracleDisagreementError(
            T.oracle_disagreement.format(limit=C.Z_ORACLE_LIMIT, cells=failed), failed
        )


def cmd_validate(
    scn: Scenario,
    cfg: SimConfig,
    thresholds_mw: Sequence[float] | None = None,
    window_s: float = C.VALIDATE_WINDOW_S_DEF,
) -> list[PowerLawPoint]:
    """Проверка степенного закона; по умолчанию пороги - чувствительности классов."""
    levels = [cls.sensitivity_mw for cls in scn.classes] if thresholds_mw is None else list(thresholds_mw)
    return validate_power_law(scn, levels, window_s, cfg)


def cmd_sweep(kind: str, scn: Scenario, nodes: Sequence[float]) -> list[ResultRow]:
    """
    Данные для графиков.

    figure2 - все SF, замирания Рэлея; figure3 - только SF12 для трёх моделей замираний;
    figure4 - неоднородная сеть с alpha = -0.2.
    """
    if not nodes:
        raise InvalidParameterError(T.bad_sweep.format(spec=list(nodes)))

    match kind:
        case "figure2":
            return cmd_analyze(scn.with_fading(RAYLEIGH), nodes)

        case "figure3":
            sf12 = [cls for cls in scn.classes if cls.sf == C.SF_MAX]
            if not sf12:
                raise InvalidParameterError(T.bad_sweep_sf.format(sf=C.SF_MAX))
            rows = []
            for n_nodes in nodes:
                for kind_name in C.FIGURE3_FADINGS:
                    fading = parse_fading(kind_name, C.SIGMA_DB_DEF)
                    point = scn.with_nodes(n_nodes).with_fading(fading)
                    keys = (_nodes_key(n_nodes), ("fading", fading.label))
                    rows += [row for row in result_rows(point, keys) if row.n == sf12[0].index_n]
            return rows

        case "figure4":
            inhomogeneous = scn.with_alpha(C.FIGURE4_ALPHA)
            rows = []
            for n_nodes in nodes:
                keys = (_nodes_key(n_nodes), ("alpha", f"{C.FIGURE4_ALPHA:g}"))
                rows += result_rows(inhomogeneous.with_nodes(n_nodes), keys)
            return rows

    raise InvalidParameterError(T.bad_sweep_kind.format(kind=kind, kinds=", ".join(C.SWEEP_KINDS)))
