"""
Режим конечного диска (не из замкнутых формул модели).

Интенсивность пакетов берётся только из диска радиуса R вокруг базовой станции, а не со всей
плоскости. Служит для сверки с таблицей выровненных порогов и для режима усечения Монте-Карло.
"""

from __future__ import annotations

from typing import Callable
import logging
import math
import warnings

from scipy import integrate, optimize, stats
from scipy.integrate import IntegrationWarning
from tenacity import (
    Retrying,
    before_sleep_log,
    retry_if_exception_type,
    stop_after_attempt,
)

from src.ANALYTIC.analytic import ClassResult
from src.ANALYTIC.scenario import Scenario
from src.CHANNEL.channel import FadingKind
from src.GENERAL.constants import Constants as C
from src.GENERAL.exceptions import InvalidParameterError, NumericError
from src.GENERAL.textmessage import TextMessage as T

logger = logging.getLogger(__name__)

MAX_BRACKET_DECADES = 60


class QuadratureNotConverged(Exception):
    """scipy.integrate.quad выдал IntegrationWarning."""


def _quad_once(func: Callable[[float], float], lower: float, upper: float, limit: int) -> float:
    with warnings.catch_warnings():
        warnings.simplefilter("error", IntegrationWarning)
        try:
            value, _ = integrate.quad(func, lower, upper, limit=limit)
        except IntegrationWarning as w:
            raise QuadratureNotConverged(T.quad_not_converged.format(limit=limit, warning=w)) from None
    return value


def _quad(func: Callable[[float], float], lower: float, upper: float, diagnostics: dict) -> float:
    """
    Квадратура с повторами: при каждой неудаче лимит подынтервалов удваивается.

    Исчерпание попыток превращается в NumericError с параметрами подынтегральной функции.
    """
    try:
        for attempt in Retrying(
            stop=stop_after_attempt(C.QUAD_ATTEMPTS),
            retry=retry_if_exception_type(QuadratureNotConverged),
            before_sleep=before_sleep_log(logger, logging.INFO),
            reraise=True,
        ):
            with attempt:
                limit = C.QUAD_LIMIT_DEF * 2 ** (attempt.retry_state.attempt_number - 1)
                return _quad_once(func, lower, upper, limit)
    except QuadratureNotConverged as e:
        diagnostics = {**diagnostics, "lower": lower, "upper": upper, "last_error": str(e)}
        logger.error(T.quad_failed.format(attempts=C.QUAD_ATTEMPTS))
        raise NumericError(T.quad_failed.format(attempts=C.QUAD_ATTEMPTS), diagnostics) from e
    raise NumericError(T.quad_failed.format(attempts=C.QUAD_ATTEMPTS), diagnostics)


def _clipped_moment(scn: Scenario, t: float, radius_m: float) -> float:
    """
    E[min(R, rho(F))^(alpha + 2)], где rho(F) = (P_tr * F / t)^(1/beta) / kappa.

    Часть с rho < R интегрируется численно по закону F, остаток - вероятность хвоста.
    """
    beta = scn.pathloss.beta
    power = scn.alpha + 2
    e = scn.exponent
    log_c = math.log(scn.p_tr_mw / t) / beta - math.log(scn.pathloss.kappa)
    log_f_star = beta * (math.log(radius_m) - log_c)  # rho(F*) = R
    r_term = radius_m**power
    c_term = math.exp(power * log_c)
    diagnostics = {"t_mw": t, "radius_m": radius_m, "fading": scn.fading.label, "exponent": e}

    match scn.fading.kind:
        case FadingKind.none:
            return r_term if log_f_star <= 0 else c_term

        case FadingKind.rayleigh:
            cap = -math.log(C.QUAD_EXP_TAIL)
            upper = cap if log_f_star > math.log(cap) else math.exp(log_f_star)
            partial = _quad(lambda x: x**e * math.exp(-x), 0.0, upper, diagnostics)
            tail = 0.0 if upper == cap else math.exp(-upper)
            return c_term * partial + r_term * tail

        case FadingKind.lognormal:
            sigma = scn.fading.sigma
            z_star = (log_f_star + sigma**2 / 2) / sigma
            upper = min(z_star, C.QUAD_Z_CAP)
            partial = _quad(
                lambda z: math.exp(e * (-(sigma**2) / 2 + sigma * z)) * stats.norm.pdf(z),
                -math.inf,
                upper,
                diagnostics,
            )
            return c_term * partial + r_term * stats.norm.sf(z_star)

    raise InvalidParameterError(T.bad_fading_kind.format(kind=scn.fading.kind))


def disk_tail_rate(scn: Scenario, t: float, radius_m: float | None = None) -> float:
    """
    Число пакетов в секунду из диска радиуса R, принятых с мощностью > t.

    2 * pi * lambda / (alpha + 2) * E[min(R, rho(F))^(alpha + 2)]; при R -> inf стремится к a' * t^(-e).
    """
    if not t > 0:
        raise InvalidParameterError(T.bad_mw.format(value=t))
    radius = scn.norm_radius_m if radius_m is None else radius_m
    if not radius > 0:
        raise InvalidParameterError(T.bad_positive.format(name="radius_m", value=radius))
    if scn.lam == 0:
        return 0.0
    return 2 * math.pi * scn.lam / (scn.alpha + 2) * _clipped_moment(scn, t, radius)


def disk_total_rate(scn: Scenario, radius_m: float | None = None) -> float:
    """Все пакеты диска в секунду: 2 * pi * lambda * R^(alpha + 2) / (alpha + 2)."""
    radius = scn.norm_radius_m if radius_m is None else radius_m
    return 2 * math.pi * scn.lam * radius ** (scn.alpha + 2) / (scn.alpha + 2)


def finite_disk_intensity(scn: Scenario, t: float, window_s: float, radius_m: float | None = None) -> float:
    """Ожидаемое число пакетов за окно window_s с мощностью > t из диска радиуса R."""
    if not window_s > 0:
        raise InvalidParameterError(T.bad_window.format(value=window_s))
    return window_s * disk_tail_rate(scn, t, radius_m)


def disk_reception_probability(scn: Scenario, n: int, radius_m: float | None = None) -> ClassResult:
    """Pi_n, когда помехи приходят только из диска радиуса R."""
    sf_class = scn.get_class(n)
    upper = scn.upper_bound_mw(n)
    rate = disk_tail_rate(scn, sf_class.sensitivity_mw, radius_m)
    if upper is not None:
        rate -= disk_tail_rate(scn, upper, radius_m)

    mass = sf_class.window_s * max(rate, 0.0)
    return ClassResult(
        index_n=sf_class.index_n,
        sf=sf_class.sf,
        pi=math.exp(-mass),
        a_n=math.nan,
        window_s=sf_class.window_s,
        mass=mass,
    )


def disk_all_reception_probabilities(scn: Scenario, radius_m: float | None = None) -> list[ClassResult]:
    return [disk_reception_probability(scn, n, radius_m) for n in range(1, scn.class_count + 1)]


def _solve_threshold(scn: Scenario, target_rate: float, radius_m: float) -> float:
    """Порог t, при котором disk_tail_rate(t) = target_rate (функция убывает по t)."""
    edge_power = scn.p_tr_mw / (scn.pathloss.kappa * radius_m) ** scn.pathloss.beta
    log_edge = math.log(edge_power)

    def excess(log_t: float) -> float:
        return disk_tail_rate(scn, math.exp(log_t), radius_m) - target_rate

    step = math.log(10)
    low = log_edge
    for _ in range(MAX_BRACKET_DECADES):
        if excess(low) > 0:
            break
        low -= step
    high = log_edge
    for _ in range(MAX_BRACKET_DECADES):
        if excess(high) < 0:
            break
        high += step

    if not excess(low) > 0 > excess(high):
        raise NumericError(
            T.equalize_infeasible.format(
                radius=radius_m, n="?", sf="?", required=target_rate, limit=disk_total_rate(scn, radius_m)
            ),
            {"target_rate": target_rate, "log_low": low, "log_high": high},
        )
    return math.exp(optimize.brentq(excess, low, high, xtol=1e-12, rtol=1e-12))


def disk_equalize_sensitivities(scn: Scenario, target_pi: float, radius_m: float | None = None) -> list[float]:
    """
    Пороги P_1..P_N (мВт), выравнивающие Pi_n на конечном диске.

    Обращение ведётся сверху вниз: rate(P_n) = rate(P_{n+1}) - ln(Pi) / (B_n + Delta_n).
    Если требуемая интенсивность не меньше интенсивности всего диска, решения нет (NumericError).
    """
    if not 0 < target_pi < 1:
        raise InvalidParameterError(T.bad_target_pi.format(value=target_pi))
    radius = scn.norm_radius_m if radius_m is None else radius_m
    limit = disk_total_rate(scn, radius)
    minus_log_pi = -math.log(target_pi)

    thresholds = []
    cumulative = 0.0
    for sf_class in reversed(scn.classes):
        cumulative += minus_log_pi / sf_class.window_s
        if cumulative >= limit:
            raise NumericError(
                T.equalize_infeasible.format(
                    radius=radius, n=sf_class.index_n, sf=sf_class.sf, required=cumulative, limit=limit
                ),
                {"n": sf_class.index_n, "required_rate": cumulative, "disk_rate": limit},
            )
        thresholds.append(_solve_threshold(scn, cumulative, radius))
    thresholds.reverse()
    return thresholds
