"""
Арифметика физического уровня LoRa.

Содержит:
- длительность символа T_symbol = 2^SF / BW;
- длительности преамбулы, полезной нагрузки и всего пакета;
- окно уязвимости B + Delta, в течение которого пакет того же класса разрушает принятый.

Все функции чистые и реентерабельные.
"""

from __future__ import annotations

from dataclasses import dataclass
import logging

from src.GENERAL.constants import Constants as C
from src.GENERAL.exceptions import InvalidParameterError
from src.GENERAL.textmessage import TextMessage as T

logger = logging.getLogger(__name__)


# fmt: off
@dataclass(frozen=True)
class RadioConfig:
    """
    Параметры LoRa, определяющие время передачи.

    Атрибуты:
        bandwidth_hz            : Полоса, Гц.
        n_preamble_extra        : Дополнительные символы преамбулы (n_p).
        payload_bytes           : Полезная нагрузка, байт (PL).
        header_flag             : H; 0 - заголовок есть, 1 - заголовка нет.
        low_rate_opt            : DE; 1 - оптимизация низкой скорости.
        cr_code                 : Код coding rate 1..4 (1 <-> 4/5 ... 4 <-> 4/8).
    """
    bandwidth_hz                : float = C.BANDWIDTH_HZ_DEF
    n_preamble_extra            : int = C.N_PREAMBLE_EXTRA_DEF
    payload_bytes               : int = C.PAYLOAD_BYTES_DEF
    header_flag                 : int = C.HEADER_FLAG_DEF
    low_rate_opt                : int = C.LOW_RATE_OPT_DEF
    cr_code                     : int = C.CR_CODE_DEF

    def __post_init__(self) -> None:
        if not self.bandwidth_hz > 0:
            raise InvalidParameterError(T.bad_bandwidth.format(bw=self.bandwidth_hz))
        if self.cr_code not in C.CR_CODES:
            raise InvalidParameterError(T.bad_cr_code.format(value=self.cr_code))
        for name in ("header_flag", "low_rate_opt"):
            value = getattr(self, name)
            if value not in (0, 1):
                raise InvalidParameterError(T.bad_flag.format(name=name, value=value))
        for name in ("n_preamble_extra", "payload_bytes"):
            value = getattr(self, name)
            if value < 0:
                raise InvalidParameterError(T.bad_nonnegative.format(name=name, value=value))
# fmt: on


# fmt: off
@dataclass(frozen=True)
class AirTime:
    """Длительности одного пакета, секунды."""
    sf                          : int
    symbol_s                    : float
    preamble_s                  : float
    payload_s                   : float
    payload_symbols             : int
    total_s                     : float
    lock_window_s               : float   # Delta
    vulnerability_s             : float   # B + Delta
# fmt: on


def parse_coding_rate(value: str | int) -> int:
    """
    Переводит coding rate в целочисленный код.

    Принимает "4/5".."4/8" или "1".."4" (строкой или числом).
    """
    text = str(value).strip().replace(" ", "")
    if text in C.CR_FRACTIONS:
        return C.CR_FRACTIONS[text]
    try:
        code = int(text)
    except ValueError:
        raise InvalidParameterError(T.bad_coding_rate.format(value=value)) from None
    if code not in C.CR_CODES:
        raise InvalidParameterError(T.bad_coding_rate.format(value=value))
    return code


def _check_sf(sf: int) -> None:
    if not C.SF_MIN <= sf <= C.SF_MAX:
        raise InvalidParameterError(
            T.bad_sf.format(sf=sf, sf_min=C.SF_MIN, sf_max=C.SF_MAX)
        )


def symbol_time(sf: int, bandwidth_hz: float) -> float:
    """Длительность символа T_symbol = 2^SF / BW, секунды."""
    _check_sf(sf)
    if not bandwidth_hz > 0:
        raise InvalidParameterError(T.bad_bandwidth.format(bw=bandwidth_hz))
    return 2**sf / bandwidth_hz


def payload_symbols(sf: int, radio: RadioConfig) -> int:
    """
    Число символов полезной нагрузки: 8 + max(ceil(num / den) * (CR + 4), 0).

    Потолок берётся от целых числителя и знаменателя, без деления с плавающей точкой.
    """
    _check_sf(sf)
    denominator = 4 * (sf - 2 * radio.low_rate_opt)
    if denominator <= 0:
        raise InvalidParameterError(
            T.bad_denominator.format(value=denominator // 4, sf=sf, de=radio.low_rate_opt)
        )
    numerator = 8 * radio.payload_bytes - 4 * sf + 28 + 16 - 20 * radio.header_flag
    blocks = -(-numerator // denominator)
    return C.PAYLOAD_BASE_SYMBOLS + max(blocks * (radio.cr_code + 4), 0)


def lock_window_symbols(radio: RadioConfig) -> float:
    """
    Длительность фазы захвата (Delta) в символах.

    Delta - преамбула (4.25 + n_p) символов.
    """
    return C.PREAMBLE_BASE_SYMBOLS + radio.n_preamble_extra


def packet_airtime(sf: int, radio: RadioConfig) -> AirTime:
    """Длительности преамбулы, нагрузки, пакета и окна уязвимости для заданного SF."""
    t_symbol = symbol_time(sf, radio.bandwidth_hz)
    n_payload = payload_symbols(sf, radio)

    preamble_s = (C.PREAMBLE_BASE_SYMBOLS + radio.n_preamble_extra) * t_symbol
    payload_s = n_payload * t_symbol
    total_s = preamble_s + payload_s
    lock_s = lock_window_symbols(radio) * t_symbol

    return AirTime(
        sf=sf,
        symbol_s=t_symbol,
        preamble_s=preamble_s,
        payload_s=payload_s,
        payload_symbols=n_payload,
        total_s=total_s,
        lock_window_s=lock_s,
        vulnerability_s=total_s + lock_s,
    )


def vulnerability_window(sf: int, radio: RadioConfig) -> float:
    """
    Окно уязвимости B + Delta, секунды.

    Пакет того же класса, начавшийся в [-B, Delta] относительно начала принимаемого,
    находится в эфире во время фазы захвата и приводит к потере.
    """
    airtime = packet_airtime(sf, radio)
    return airtime.vulnerability_s


def airtime_table(radio: RadioConfig, sfs: tuple[int, ...] = C.SF_ALL) -> list[AirTime]:
    """Времена передачи для набора SF (по умолчанию 6..12)."""
    return [packet_airtime(sf, radio) for sf in sfs]
