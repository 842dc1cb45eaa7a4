"""
Независимая проверка замкнутых формул методом Монте-Карло.

Режимы:
- spatial: пространственно-временной пуассоновский «дождь» передач на диске вокруг базовой станции,
  замирания для каждой передачи и классификация принятых мощностей по классам;
- power: пуассоновское число пакетов класса n напрямую из интенсивности процесса мощностей
  (перекрёстная проверка вычислений, а не независимый оракул).

Меченый пакет не моделируется: Pi_n не зависит от его мощности внутри класса, а сам он не входит
в процесс помех.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Sequence
import logging
import math

import numpy as np
from scipy import stats

from src.ANALYTIC.analytic import intensity_coefficient, power_mass, reception_probability
from src.ANALYTIC.finite_disk import disk_reception_probability, finite_disk_intensity
from src.ANALYTIC.scenario import Scenario
from src.CHANNEL.channel import fading_upper_quantile, sample_fading
from src.GENERAL.constants import Constants as C
from src.GENERAL.exceptions import InvalidParameterError
from src.GENERAL.textmessage import TextMessage as T
from src.MONTECARLO.driver import run_blocks

logger = logging.getLogger(__name__)


# fmt: off
@dataclass(frozen=True)
class SimConfig:
    """
    Параметры эксперимента Монте-Карло.

    Атрибуты:
        replications            : Число репликаций, >= 1.
        seed                    : Зерно (неотрицательное 64-битное целое).
        tail_epsilon            : Вероятность хвоста замираний за радиусом усечения, (0, 0.01].
        disk_truncation_m       : Радиус диска вместо радиуса усечения (режим конечного диска).
        threads                 : Число потоков (None - из LORASG_THREADS); на результат не влияет.
        progress                : Индикатор tqdm (None - из LORASG_PROGRESS).
    """
    replications                : int = C.MC_REPLICATIONS_DEF
    seed                        : int = C.MC_SEED_DEF
    tail_epsilon                : float = C.MC_TAIL_EPSILON_DEF
    disk_truncation_m           : float | None = None
    threads                     : int | None = None
    progress                    : bool | None = None

    def __post_init__(self) -> None:
        if self.replications < 1:
            raise InvalidParameterError(T.bad_replications.format(value=self.replications))
        if not 0 <= self.seed < 2**64:
            raise InvalidParameterError(T.bad_nonnegative.format(name="seed", value=self.seed))
        if not 0 < self.tail_epsilon <= C.MC_TAIL_EPSILON_MAX:
            raise InvalidParameterError(
                T.bad_tail_epsilon.format(value=self.tail_epsilon, max_value=C.MC_TAIL_EPSILON_MAX)
            )
        if self.disk_truncation_m is not None and not self.disk_truncation_m > 0:
            raise InvalidParameterError(
                T.bad_positive.format(name="disk_truncation_m", value=self.disk_truncation_m)
            )

    @property
    def finite_disk(self) -> bool:
        return self.disk_truncation_m is not None


@dataclass(frozen=True)
class SimEstimate:
    """
    Оценка вероятности успешного приёма.

    Атрибуты:
        p_hat                   : successes / replications.
        stderr                  : sqrt(p_hat * (1 - p_hat) / replications).
        replications            : Число репликаций.
        successes               : Число успешных репликаций.
        mode                    : spatial | power.
        seed                    : Зерно эксперимента.
    """
    p_hat                       : float
    stderr                      : float
    replications                : int
    successes                   : int
    mode                        : str
    seed                        : int
# fmt: on

    @classmethod
    def from_counts(cls, successes: int, replications: int, mode: str, seed: int) -> SimEstimate:
        p_hat = successes / replications
        return cls(
            p_hat=p_hat,
            stderr=math.sqrt(p_hat * (1 - p_hat) / replications),
            replications=replications,
            successes=successes,
            mode=mode,
            seed=seed,
        )

    def z_score(self, reference: float) -> float:
        """(p_hat - reference) / stderr; NaN, если stderr = 0."""
        if self.stderr == 0:
            return math.nan
        return (self.p_hat - reference) / self.stderr

    def confidence_interval(self, level: float = 0.95) -> tuple[float, float]:
        z = stats.norm.isf((1 - level) / 2)
        return self.p_hat - z * self.stderr, self.p_hat + z * self.stderr


# fmt: off
@dataclass(frozen=True)
class PowerLawPoint:
    """Сравнение эмпирического числа пакетов выше порога с формулой a' * w * t^(-e)."""
    threshold_mw                : float
    empirical_mean              : float
    analytic_mean               : float
    stderr                      : float
    z_score                     : float


@dataclass(frozen=True)
class CoverageReport:
    """Доля зёрен, для которых доверительный интервал накрывает аналитическое значение."""
    covered                     : int
    total                       : int
    level                       : float
    reference                   : float

    @property
    def fraction(self) -> float:
        return self.covered / self.total
# fmt: on


def _check_scenario(scn: Scenario) -> None:
    if not scn.alpha > -2:
        raise InvalidParameterError(T.bad_alpha.format(alpha=scn.alpha))


def max_relevant_radius(scn: Scenario, tail_epsilon: float) -> float:
    """
    Радиус, за которым передача достигает мощности >= P_1 с вероятностью <= tail_epsilon.

    (P_tr * F_q / P_1)^(1/beta) / kappa, F_q - квантиль замираний уровня 1 - tail_epsilon.
    """
    if not 0 < tail_epsilon < 1:
        raise InvalidParameterError(
            T.bad_tail_epsilon.format(value=tail_epsilon, max_value=C.MC_TAIL_EPSILON_MAX)
        )
    p_1 = scn.get_class(1).sensitivity_mw
    f_q = fading_upper_quantile(scn.fading, tail_epsilon)
    return (scn.p_tr_mw * f_q / p_1) ** (1 / scn.pathloss.beta) / scn.pathloss.kappa


def sampling_radius(scn: Scenario, cfg: SimConfig) -> float:
    """Радиус области генерации: радиус конечного диска или радиус усечения."""
    if cfg.finite_disk:
        radius = float(cfg.disk_truncation_m)  # type: ignore[arg-type]
        logger.info(T.mc_truncation.format(radius=radius, source="disk_truncation"))
    else:
        radius = max_relevant_radius(scn, cfg.tail_epsilon)
        logger.info(T.mc_truncation.format(radius=radius, source=f"tail_epsilon={cfg.tail_epsilon:g}"))
    return radius


def _disk_mean_count(scn: Scenario, radius_m: float, window_s: float) -> float:
    """Среднее число передач на диске за окно: lambda * w * 2 * pi * R^(alpha + 2) / (alpha + 2)."""
    return scn.lam * window_s * 2 * math.pi * radius_m ** (scn.alpha + 2) / (scn.alpha + 2)


def _received_powers(
    scn: Scenario, rng: np.random.Generator, counts: np.ndarray, radius_m: float
) -> tuple[np.ndarray, np.ndarray]:
    """
    Генерирует передачи репликаций блока и возвращает (номер репликации, принятая мощность, мВт).

    Расстояние: r = R * u^(1/(alpha + 2)) (плотность пропорциональна r^alpha).
    Передачи окна с началом в [-B_n, Delta_n] всегда перекрывают фазу захвата [0, Delta_n].
    """
    total = int(counts.sum())
    replication = np.repeat(np.arange(counts.size), counts)

    u = 1.0 - rng.random(total)  # (0, 1]
    radii = radius_m * u ** (1 / (scn.alpha + 2))
    fading = sample_fading(scn.fading, rng, size=total)
    powers = scn.p_tr_mw * fading / (scn.pathloss.kappa * radii) ** scn.pathloss.beta
    return replication, powers


def simulate_class_spatial(scn: Scenario, n: int, cfg: SimConfig) -> SimEstimate:
    """
    Оценка Pi_n пространственным моделированием.

    Репликация успешна, если ни одна передача окна не попала в класс n ([P_n, P_{n+1})).
    """
    _check_scenario(scn)
    sf_class = scn.get_class(n)
    lower = sf_class.sensitivity_mw
    upper = scn.upper_bound_mw(n)
    upper_mw = math.inf if upper is None else upper

    radius = sampling_radius(scn, cfg)
    mean_count = _disk_mean_count(scn, radius, sf_class.window_s)

    def block(rng: np.random.Generator, size: int) -> int:
        counts = rng.poisson(mean_count, size=size)
        replication, powers = _received_powers(scn, rng, counts, radius)
        in_class = (powers >= lower) & (powers < upper_mw)
        hits = np.bincount(replication[in_class], minlength=size)
        return int(np.count_nonzero(hits == 0))

    successes = sum(
        run_blocks(block, cfg.replications, cfg.seed, C.MC_MODE_SPATIAL, n, cfg.threads, cfg.progress)
    )
    return SimEstimate.from_counts(successes, cfg.replications, C.MC_MODE_SPATIAL, cfg.seed)


def simulate_class_power(scn: Scenario, n: int, cfg: SimConfig) -> SimEstimate:
    """
    Оценка Pi_n по пуассоновскому числу пакетов класса n со средним a_n * (P_n^(-e) - P_{n+1}^(-e)).

    В режиме конечного диска среднее берётся из интенсивности того же диска.
    """
    _check_scenario(scn)
    if cfg.finite_disk:
        mass = disk_reception_probability(scn, n, cfg.disk_truncation_m).mass
    else:
        mass = power_mass(scn, n)

    def block(rng: np.random.Generator, size: int) -> int:
        return int(np.count_nonzero(rng.poisson(mass, size=size) == 0))

    successes = sum(
        run_blocks(block, cfg.replications, cfg.seed, C.MC_MODE_POWER, n, cfg.threads, cfg.progress)
    )
    return SimEstimate.from_counts(successes, cfg.replications, C.MC_MODE_POWER, cfg.seed)


def simulate_class(scn: Scenario, n: int, cfg: SimConfig, mode: str = C.MC_MODE_SPATIAL) -> SimEstimate:
    match mode:
        case C.MC_MODE_SPATIAL:
            return simulate_class_spatial(scn, n, cfg)
        case C.MC_MODE_POWER:
            return simulate_class_power(scn, n, cfg)
    raise InvalidParameterError(T.bad_mc_mode.format(mode=mode, modes=", ".join(C.MC_MODES)))


def analytic_reference(scn: Scenario, n: int, cfg: SimConfig, mode: str = C.MC_MODE_SPATIAL) -> float:
    """Аналитическое Pi_n, с которым сравнивается оценка режима mode (для конечного диска - на том же диске)."""
    if mode not in (C.MC_MODE_SPATIAL, C.MC_MODE_POWER):
        raise InvalidParameterError(T.bad_mc_mode.format(mode=mode, modes=", ".join(C.MC_MODES)))
    if cfg.finite_disk:
        return disk_reception_probability(scn, n, cfg.disk_truncation_m).pi
    return reception_probability(scn, n).pi


def validate_power_law(
    scn: Scenario, thresholds: Sequence[float], window_s: float, cfg: SimConfig
) -> list[PowerLawPoint]:
    """
    Эмпирическое среднее числа передач с мощностью > t за окно против a' * w * t^(-e).

    В режиме усечения пороги ниже P_1 запрещены: радиус усечения рассчитан на P_1. В режиме конечного
    диска эталоном служит интенсивность того же диска.
    """
    _check_scenario(scn)
    if not window_s > 0:
        raise InvalidParameterError(T.bad_window.format(value=window_s))
    p_1 = scn.get_class(1).sensitivity_mw
    levels = np.asarray(thresholds, dtype=float)
    for t in levels:
        if not t > 0:
            raise InvalidParameterError(T.bad_mw.format(value=t))
        if not cfg.finite_disk and t < p_1:
            raise InvalidParameterError(T.bad_threshold.format(threshold=t, p1=p_1))

    radius = sampling_radius(scn, cfg)
    mean_count = _disk_mean_count(scn, radius, window_s)

    def block(rng: np.random.Generator, size: int) -> tuple[np.ndarray, np.ndarray]:
        counts = rng.poisson(mean_count, size=size)
        replication, powers = _received_powers(scn, rng, counts, radius)
        above = np.stack(
            [np.bincount(replication[powers > t], minlength=size) for t in levels]
        ).astype(np.int64)
        return above.sum(axis=1), (above**2).sum(axis=1)

    sums = np.zeros(levels.size, dtype=np.int64)
    squares = np.zeros(levels.size, dtype=np.int64)
    for block_sum, block_squares in run_blocks(
        block, cfg.replications, cfg.seed, C.MC_MODE_POWER_LAW, 0, cfg.threads, cfg.progress
    ):
        sums += block_sum
        squares += block_squares

    if cfg.finite_disk:
        analytic = [finite_disk_intensity(scn, float(t), window_s, cfg.disk_truncation_m) for t in levels]
    else:
        a = intensity_coefficient(scn)
        analytic = [a * window_s * float(t) ** (-scn.exponent) for t in levels]

    reps = cfg.replications
    points = []
    for t, total, total_sq, expected in zip(levels, sums, squares, analytic):
        mean = int(total) / reps
        variance = (int(total_sq) / reps - mean**2) * reps / (reps - 1) if reps > 1 else 0.0
        stderr = math.sqrt(max(variance, 0.0) / reps)
        z = (mean - expected) / stderr if stderr > 0 else math.nan
        points.append(
            PowerLawPoint(
                threshold_mw=float(t),
                empirical_mean=mean,
                analytic_mean=expected,
                stderr=stderr,
                z_score=z,
            )
        )
    return points


def coverage(
    scn: Scenario,
    n: int,
    cfg: SimConfig,
    seeds: Sequence[int],
    mode: str = C.MC_MODE_SPATIAL,
    level: float = 0.95,
) -> CoverageReport:
    """Сколько из независимых прогонов (по одному на зерно) дают интервал, накрывающий Pi_n."""
    reference = analytic_reference(scn, n, cfg, mode)
    covered = 0
    for seed in seeds:
        run_cfg = replace(cfg, seed=seed, progress=False)
        low, high = simulate_class(scn, n, run_cfg, mode).confidence_interval(level)
        covered += int(low <= reference <= high)
    return CoverageReport(covered=covered, total=len(seeds), level=level, reference=reference)
