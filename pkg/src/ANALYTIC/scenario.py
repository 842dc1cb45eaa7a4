"""DTO-объекты модели: класс мощности (SF) и сценарий сети."""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from typing import Iterable, Mapping, Sequence
import math

from src.CHANNEL.channel import FadingModel, PathLossParams, RAYLEIGH, dbm_to_mw
from src.GENERAL.constants import Constants as C
from src.GENERAL.exceptions import InvalidParameterError
from src.GENERAL.textmessage import TextMessage as T
from src.PHY.lora_phy import RadioConfig, packet_airtime


# fmt: off
@dataclass(frozen=True)
class SfClass:
    """
    Класс принятых мощностей [P_n, P_{n+1}) с общим SF.

    Атрибуты:
        index_n                 : Номер класса 1..N по возрастанию мощности.
        sf                      : SF_n.
        sensitivity_mw          : Порог P_n, мВт.
        airtime_s               : Длительность пакета B_n, с.
        lock_s                  : Фаза захвата Delta_n, с.
    """
    index_n                     : int
    sf                          : int
    sensitivity_mw              : float
    airtime_s                   : float
    lock_s                      : float

    @property
    def window_s(self) -> float:
        """Окно уязвимости B_n + Delta_n."""
        return self.airtime_s + self.lock_s
# fmt: on


def nodes_to_lambda_s(n_nodes: float, norm_radius_m: float) -> float:
    """Плотность lambda_s = N_nodes / (pi * R^2); от alpha не зависит."""
    if not norm_radius_m > 0:
        raise InvalidParameterError(T.bad_positive.format(name="norm_radius_m", value=norm_radius_m))
    if n_nodes < 0:
        raise InvalidParameterError(T.bad_nonnegative.format(name="n_nodes", value=n_nodes))
    return n_nodes / (math.pi * norm_radius_m**2)


def lambda_s_to_nodes(lambda_s: float, norm_radius_m: float) -> float:
    return lambda_s * math.pi * norm_radius_m**2


def build_classes(
    radio: RadioConfig, table_dbm: Mapping[int, float] | Iterable[tuple[int, float]]
) -> tuple[SfClass, ...]:
    """
    Строит упорядоченный список классов из пар (SF, чувствительность dBm).

    Классы нумеруются по возрастанию чувствительности; длительности берутся из lora_phy.
    """
    pairs = list(table_dbm.items()) if isinstance(table_dbm, Mapping) else list(table_dbm)
    pairs.sort(key=lambda pair: pair[1])

    classes = []
    for index_n, (sf, sensitivity_dbm) in enumerate(pairs, start=1):
        airtime = packet_airtime(int(sf), radio)
        classes.append(
            SfClass(
                index_n=index_n,
                sf=int(sf),
                sensitivity_mw=dbm_to_mw(float(sensitivity_dbm)),
                airtime_s=airtime.total_s,
                lock_s=airtime.lock_window_s,
            )
        )
    return tuple(classes)


def validate_classes(classes: Sequence[SfClass]) -> list[str]:
    """Возвращает список нарушений порядка классов (пустой - классы корректны)."""
    if not classes:
        return [T.bad_classes_empty]

    failures = []
    sensitivities = [cls.sensitivity_mw for cls in classes]
    if any(low >= high for low, high in zip(sensitivities, sensitivities[1:])):
        failures.append(T.bad_classes_order.format(values=sensitivities))

    sfs = [cls.sf for cls in classes]
    if any(low < high for low, high in zip(sfs, sfs[1:])) or len(set(sfs)) != len(sfs):
        failures.append(T.bad_classes_sf_order.format(values=sfs))
    return failures


# fmt: off
@dataclass(frozen=True)
class Scenario:
    """
    Сценарий сети: плотности, канал, замирания, радиопараметры и классы SF.

    Атрибуты:
        lambda_s                : Пространственная плотность узлов, 1/м^2.
        lambda_t                : Интенсивность передач одного узла, 1/с.
        norm_radius_m           : Радиус нормировки плотности R, м.
        alpha                   : Показатель убывания плотности lambda * r^alpha (0 - однородная сеть).
        p_tr_mw                 : Мощность передатчика, мВт.
        pathloss                : Параметры потерь (beta, kappa).
        fading                  : Закон замираний F.
        radio                   : Радиопараметры LoRa.
        classes                 : Классы по возрастанию порога P_1 < ... < P_N.
    """
    lambda_s                    : float
    lambda_t                    : float = C.LAMBDA_T_DEF
    norm_radius_m               : float = C.NORM_RADIUS_M_DEF
    alpha                       : float = C.ALPHA_DEF
    p_tr_mw                     : float = field(default_factory=lambda: dbm_to_mw(C.P_TR_DBM_DEF))
    pathloss                    : PathLossParams = field(default_factory=PathLossParams)
    fading                      : FadingModel = RAYLEIGH
    radio                       : RadioConfig = field(default_factory=RadioConfig)
    classes                     : tuple[SfClass, ...] = ()

    def __post_init__(self) -> None:
        for name in ("lambda_s", "lambda_t"):
            value = getattr(self, name)
            if value < 0:
                raise InvalidParameterError(T.bad_nonnegative.format(name=name, value=value))
        for name in ("norm_radius_m", "p_tr_mw"):
            value = getattr(self, name)
            if not value > 0:
                raise InvalidParameterError(T.bad_positive.format(name=name, value=value))
        if not self.alpha > -2:
            raise InvalidParameterError(T.bad_alpha.format(alpha=self.alpha))
        if failures := validate_classes(self.classes):
            raise InvalidParameterError("\n".join(failures))
# fmt: on

    @property
    def lam(self) -> float:
        """Пространственно-временная плотность lambda = lambda_s * lambda_t."""
        return self.lambda_s * self.lambda_t

    @property
    def exponent(self) -> float:
        """Показатель степенного закона мощностей e = (alpha + 2) / beta."""
        return (self.alpha + 2) / self.pathloss.beta

    @property
    def n_nodes(self) -> float:
        return lambda_s_to_nodes(self.lambda_s, self.norm_radius_m)

    @property
    def class_count(self) -> int:
        return len(self.classes)

    def get_class(self, n: int) -> SfClass:
        """Класс с номером n (1..N)."""
        if not 1 <= n <= len(self.classes):
            raise InvalidParameterError(T.bad_index.format(n=n, count=len(self.classes)))
        return self.classes[n - 1]

    def upper_bound_mw(self, n: int) -> float | None:
        """P_{n+1}; для верхнего класса границы нет (None)."""
        self.get_class(n)
        if n == len(self.classes):
            return None
        return self.classes[n].sensitivity_mw

    def with_nodes(self, n_nodes: float) -> Scenario:
        return replace(self, lambda_s=nodes_to_lambda_s(n_nodes, self.norm_radius_m))

    def with_fading(self, fading: FadingModel) -> Scenario:
        return replace(self, fading=fading)

    def with_alpha(self, alpha: float) -> Scenario:
        """Новый alpha при той же lambda_s."""
        return replace(self, alpha=alpha)

    def with_sensitivities(self, sensitivities_mw: Sequence[float]) -> Scenario:
        """Те же SF и длительности, новые пороги P_1..P_N."""
        classes = tuple(
            replace(cls, sensitivity_mw=float(p_mw))
            for cls, p_mw in zip(self.classes, sensitivities_mw, strict=True)
        )
        return replace(self, classes=classes)


def default_scenario(
    n_nodes: float = C.N_NODES_DEF,
    preset: str = C.SENSITIVITY_PRESET_DEF,
    fading: FadingModel = RAYLEIGH,
) -> Scenario:
    """Сельский сценарий по умолчанию: параметры LoRa по умолчанию и пороги из набора preset."""
    radio = RadioConfig()
    return Scenario(
        lambda_s=nodes_to_lambda_s(n_nodes, C.NORM_RADIUS_M_DEF),
        fading=fading,
        radio=radio,
        classes=build_classes(radio, C.SENSITIVITY_PRESETS[preset]),
    )
