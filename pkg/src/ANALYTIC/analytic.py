"""
Замкнутые формулы модели.

Содержит:
- коэффициент интенсивности процесса принятых мощностей a (однородная сеть) и a' (плотность lambda * r^alpha);
- вероятности успешного приёма Pi_n по классам (формула пустоты пуассоновского процесса);
- пороги, выравнивающие Pi_n до заданного значения (обращение формулы для Pi_n);
- эквивалентную однородную сеть для сети с плотностью lambda * r^alpha.

Ожидаемое число пакетов за окно w с принятой мощностью > t равно a' * w * t^(-e), e = (alpha + 2) / beta.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
import logging
import math

from src.ANALYTIC.scenario import Scenario
from src.CHANNEL.channel import PathLossParams, fading_moment
from src.GENERAL.exceptions import InvalidParameterError
from src.GENERAL.textmessage import TextMessage as T

logger = logging.getLogger(__name__)


# fmt: off
@dataclass(frozen=True)
class ClassResult:
    """
    Результат для одного класса.

    Атрибуты:
        index_n                 : Номер класса.
        sf                      : SF класса.
        pi                      : Вероятность успешного приёма Pi_n.
        a_n                     : a' * (B_n + Delta_n).
        window_s                : B_n + Delta_n, с.
        mass                    : Среднее число помех класса за окно (-ln Pi_n).
    """
    index_n                     : int
    sf                          : int
    pi                          : float
    a_n                         : float
    window_s                    : float
    mass                        : float
# fmt: on


def _check_alpha(alpha: float) -> None:
    if not alpha > -2:
        raise InvalidParameterError(T.bad_alpha.format(alpha=alpha))


def intensity_coefficient(scn: Scenario) -> float:
    """
    Коэффициент a' = 2 * pi * lambda * P_tr^e * E[F^e] / ((alpha + 2) * kappa^(alpha + 2)).

    При alpha = 0 совпадает с a = pi * lambda * P_tr^(2/beta) * E[F^(2/beta)] / kappa^2.
    """
    _check_alpha(scn.alpha)
    e = scn.exponent
    kappa = scn.pathloss.kappa
    return (
        2 * math.pi * scn.lam * scn.p_tr_mw**e * fading_moment(scn.fading, e)
        / ((scn.alpha + 2) * kappa ** (scn.alpha + 2))
    )


def homogeneous_coefficient(scn: Scenario) -> float:
    """Коэффициент a однородной сети (alpha игнорируется)."""
    s = 2 / scn.pathloss.beta
    return (
        math.pi * scn.lam * scn.p_tr_mw**s * fading_moment(scn.fading, s)
        / scn.pathloss.kappa**2
    )


def power_mass(scn: Scenario, n: int, coefficient: float | None = None) -> float:
    """
    Среднее число пакетов класса n в окне уязвимости: a_n * (P_n^(-e) - P_{n+1}^(-e)).

    Для верхнего класса P_{N+1} отсутствует и второй член равен нулю.
    """
    sf_class = scn.get_class(n)
    a = intensity_coefficient(scn) if coefficient is None else coefficient
    e = scn.exponent

    upper = scn.upper_bound_mw(n)
    upper_term = 0.0 if upper is None else upper ** (-e)
    return a * sf_class.window_s * (sf_class.sensitivity_mw ** (-e) - upper_term)


def reception_probability(scn: Scenario, n: int, coefficient: float | None = None) -> ClassResult:
    """Вероятность успешного приёма Pi_n = exp(-a_n * (P_n^(-e) - P_{n+1}^(-e)))."""
    sf_class = scn.get_class(n)
    a = intensity_coefficient(scn) if coefficient is None else coefficient
    mass = power_mass(scn, n, coefficient=a)

    return ClassResult(
        index_n=sf_class.index_n,
        sf=sf_class.sf,
        pi=math.exp(-mass),
        a_n=a * sf_class.window_s,
        window_s=sf_class.window_s,
        mass=mass,
    )


def all_reception_probabilities(scn: Scenario) -> list[ClassResult]:
    """Pi_n для всех классов n = 1..N."""
    a = intensity_coefficient(scn)
    return [reception_probability(scn, n, coefficient=a) for n in range(1, scn.class_count + 1)]


def equalize_sensitivities(scn: Scenario, target_pi: float) -> list[float]:
    """
    Пороги P_1..P_N (мВт), при которых Pi_n = target_pi для всех классов.

    P_n = (-ln(Pi) * sum_{i=n..N} 1 / a_i)^(-1/e); при alpha = 0 показатель равен -beta/2.
    Назначение SF классам и длительности не меняются.
    """
    if not 0 < target_pi < 1:
        raise InvalidParameterError(T.bad_target_pi.format(value=target_pi))

    a = intensity_coefficient(scn)
    coefficients = [a * cls.window_s for cls in scn.classes]
    for cls, a_n in zip(scn.classes, coefficients):
        if not a_n > 0:
            raise InvalidParameterError(T.equalize_zero_a.format(n=cls.index_n))

    minus_log_pi = -math.log(target_pi)
    e = scn.exponent

    thresholds = []
    tail_sum = 0.0
    for a_n in reversed(coefficients):
        tail_sum += 1 / a_n
        thresholds.append((minus_log_pi * tail_sum) ** (-1 / e))
    thresholds.reverse()
    return thresholds


def homogeneous_equivalent(scn: Scenario) -> Scenario:
    """
    Однородная сеть с тем же процессом принятых мощностей.

    beta' = 2 * beta / (alpha + 2), lambda' = 2 * lambda / ((alpha + 2) * kappa^alpha);
    kappa, P_tr, замирания и классы не меняются.
    """
    _check_alpha(scn.alpha)
    if scn.alpha == 0:
        return scn

    beta = scn.pathloss.beta
    kappa = scn.pathloss.kappa
    beta_equivalent = 2 * beta / (scn.alpha + 2)
    if not beta_equivalent > 2:
        raise InvalidParameterError(T.bad_equivalent_beta.format(beta=beta_equivalent))

    density_factor = 2 / ((scn.alpha + 2) * kappa**scn.alpha)
    return replace(
        scn,
        alpha=0.0,
        lambda_s=scn.lambda_s * density_factor,
        pathloss=PathLossParams(beta=beta_equivalent, kappa=kappa),
    )
