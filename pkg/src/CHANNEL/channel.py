"""
Модели распространения: степенные потери, замирания со средним 1, формула Хата, dBm <-> мВт.

Вся внутренняя арифметика мощностей ведётся в мВт; dBm - только на входе и выходе.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
import logging
import math

import numpy as np
from scipy import special, stats

from src.GENERAL.constants import Constants as C
from src.GENERAL.exceptions import InvalidParameterError
from src.GENERAL.textmessage import TextMessage as T

logger = logging.getLogger(__name__)


class FadingKind(Enum):
    none = "none"
    rayleigh = "rayleigh"
    lognormal = "lognormal"


# fmt: off
@dataclass(frozen=True)
class PathLossParams:
    """
    Степенная функция потерь l(r) = (kappa * r)^beta.

    Атрибуты:
        beta                    : Показатель потерь, > 2.
        kappa                   : Константа потерь, 1/м, > 0.
    """
    beta                        : float = C.BETA_DEF
    kappa                       : float = C.KAPPA_DEF

    def __post_init__(self) -> None:
        if not self.beta > 2:
            raise InvalidParameterError(T.bad_beta.format(beta=self.beta))
        if not self.kappa > 0:
            raise InvalidParameterError(T.bad_kappa.format(kappa=self.kappa))


@dataclass(frozen=True)
class FadingModel:
    """
    Закон случайного множителя F со средним 1.

    Атрибуты:
        kind                    : none (F = 1), rayleigh (F ~ Exp(1)), lognormal.
        sigma_db                : Стандартное отклонение логнормальной модели, dB.
    """
    kind                        : FadingKind = FadingKind.rayleigh
    sigma_db                    : float = 0.0

    def __post_init__(self) -> None:
        if self.kind is FadingKind.lognormal and not self.sigma_db > 0:
            raise InvalidParameterError(T.bad_sigma.format(sigma=self.sigma_db))

    @property
    def sigma(self) -> float:
        """Сигма в натуральном масштабе: sigma_db * ln(10) / 10."""
        return self.sigma_db * math.log(10) / 10

    @property
    def label(self) -> str:
        if self.kind is FadingKind.lognormal:
            return f"{self.kind.value}({self.sigma_db:g}dB)"
        return self.kind.value
# fmt: on


NO_FADING = FadingModel(FadingKind.none)
RAYLEIGH = FadingModel(FadingKind.rayleigh)


def parse_fading(kind: str, sigma_db: float | None = None) -> FadingModel:
    """Строит модель замираний по строке конфигурации."""
    try:
        fading_kind = FadingKind(kind.strip().lower())
    except ValueError:
        raise InvalidParameterError(T.bad_fading_kind.format(kind=kind)) from None

    if fading_kind is FadingKind.lognormal:
        return FadingModel(fading_kind, C.SIGMA_DB_DEF if sigma_db is None else sigma_db)
    return FadingModel(fading_kind)


def path_gain(distance_m: float, pl: PathLossParams) -> float:
    """
    Ослабление (kappa * r)^beta (безразмерное).

    Принятая мощность равна P_tr * F / path_gain.
    """
    if not distance_m > 0:
        raise InvalidParameterError(T.bad_distance.format(distance=distance_m))
    return (pl.kappa * distance_m) ** pl.beta


def fading_moment(model: FadingModel, s: float) -> float:
    """
    Дробный момент E[F^s].

    none -> 1; rayleigh -> Gamma(1 + s); lognormal -> exp(sigma^2 * s * (s - 1) / 2).
    """
    if not s > 0:
        raise InvalidParameterError(T.bad_moment.format(s=s))

    match model.kind:
        case FadingKind.none:
            return 1.0
        case FadingKind.rayleigh:
            return math.exp(special.gammaln(1.0 + s))
        case FadingKind.lognormal:
            return math.exp(model.sigma**2 * s * (s - 1.0) / 2.0)
    raise InvalidParameterError(T.bad_fading_kind.format(kind=model.kind))


def fading_upper_quantile(model: FadingModel, tail: float) -> float:
    """Квантиль уровня 1 - tail, точный и для очень малых хвостов."""
    if not 0 < tail < 1:
        raise InvalidParameterError(T.bad_quantile.format(q=tail))

    match model.kind:
        case FadingKind.none:
            return 1.0
        case FadingKind.rayleigh:
            return -math.log(tail)
        case FadingKind.lognormal:
            sigma = model.sigma
            return math.exp(-(sigma**2) / 2 + sigma * stats.norm.isf(tail))
    raise InvalidParameterError(T.bad_fading_kind.format(kind=model.kind))


def sample_fading(
    model: FadingModel, rng: np.random.Generator, size: int | None = None
) -> float | np.ndarray:
    """
    Независимые реализации F.

    :param model: Закон замираний
    :param rng: Поток случайных чисел (не разделяется между потоками выполнения)
    :param size: None - одно значение, иначе массив длины size
    """
    match model.kind:
        case FadingKind.none:
            return 1.0 if size is None else np.ones(size)
        case FadingKind.rayleigh:
            return rng.exponential(1.0, size=size)
        case FadingKind.lognormal:
            sigma = model.sigma
            return np.exp(-(sigma**2) / 2 + sigma * rng.standard_normal(size=size))
    raise InvalidParameterError(T.bad_fading_kind.format(kind=model.kind))


def hata_exponent(antenna_height_m: float) -> float:
    """Показатель потерь по модели Хата: (44.9 - 6.55 * log10(h_B)) / 10."""
    if not antenna_height_m > 0:
        raise InvalidParameterError(T.bad_height.format(height=antenna_height_m))
    return (C.HATA_BASE_DB - C.HATA_HEIGHT_DB * math.log10(antenna_height_m)) / 10


def dbm_to_mw(p_dbm: float) -> float:
    return 10 ** (p_dbm / 10)


def mw_to_dbm(p_mw: float) -> float:
    if not p_mw > 0:
        raise InvalidParameterError(T.bad_mw.format(value=p_mw))
    return 10 * math.log10(p_mw)
