"""
Чтение файла сценария (INI или JSON с теми же секциями и ключами).

Все нарушения собираются в список и выдаются одной ошибкой ScenarioValidationError,
каждое с указанием секции и ключа.
"""

from __future__ import annotations

from configparser import ConfigParser, Error as ConfigParserError
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Callable, TypeVar
import json
import logging

from src.ANALYTIC.scenario import Scenario, SfClass, build_classes, nodes_to_lambda_s, validate_classes
from src.CHANNEL.channel import PathLossParams, dbm_to_mw, hata_exponent, parse_fading
from src.GENERAL.constants import Constants as C
from src.GENERAL.exceptions import InvalidParameterError, ScenarioValidationError
from src.GENERAL.get import get_parameter
from src.GENERAL.textmessage import TextMessage as T
from src.MONTECARLO.montecarlo import SimConfig
from src.PHY.lora_phy import RadioConfig, parse_coding_rate

logger = logging.getLogger(__name__)

N = TypeVar("N", int, float)


# fmt: off
@dataclass(frozen=True)
class ScenarioFile:
    """
    Разобранный и проверенный файл сценария.

    Атрибуты:
        path                    : Источник (None - встроенные значения по умолчанию).
        scenario                : Сценарий сети.
        sim                     : Параметры Монте-Карло из секции [sim].
        preset                  : Набор порогов из [classes] (None - пороги заданы явно).
    """
    path                        : Path | None
    scenario                    : Scenario
    sim                         : SimConfig
    preset                      : str | None
# fmt: on


def read_document(path: str | Path) -> dict[str, dict[str, Any]]:
    """Читает файл в словарь секций. Формат определяется суффиксом: .json или INI."""
    p = Path(path)
    if not p.is_file():
        raise ScenarioValidationError([T.file_not_found.format(path=p)])

    try:
        if p.suffix.lower() == C.JSON_SUFFIX:
            document = json.loads(p.read_text(encoding=C.ENCODING))
            if not isinstance(document, dict) or not all(isinstance(v, dict) for v in document.values()):
                raise ValueError("top level must map section names to objects")
            return {str(k).lower(): {str(key).lower(): v for key, v in sec.items()} for k, sec in document.items()}

        parser = ConfigParser(inline_comment_prefixes=("#", ";"))
        parser.read_string(p.read_text(encoding=C.ENCODING), source=str(p))
        return {section: dict(parser[section]) for section in parser.sections()}

    except (ConfigParserError, ValueError, UnicodeDecodeError) as e:
        raise ScenarioValidationError([T.file_parse_error.format(path=p, e=e)]) from e


def _convert(
    section: str, key: str, value: Any, failures: list[str], cast: Callable[[str], N], message: str
) -> N | None:
    try:
        return cast(str(value).strip())
    except ValueError:
        failures.append(message.format(section=section, key=key, value=value))
        return None


def _number(doc: dict, section: str, key: str, default: float, failures: list[str]) -> float:
    values = doc.get(section, {})
    if key not in values:
        return default
    result = _convert(section, key, values[key], failures, float, T.key_not_number)
    return default if result is None else result


def _integer(doc: dict, section: str, key: str, default: int, failures: list[str]) -> int:
    values = doc.get(section, {})
    if key not in values:
        return default
    result = _convert(section, key, values[key], failures, int, T.bad_int)
    return default if result is None else result


def _check_keys(doc: dict, failures: list[str]) -> None:
    for section, values in doc.items():
        if section not in C.SECTIONS:
            failures.append(T.section_unknown.format(section=section, sections=", ".join(C.SECTIONS)))
            continue
        for key in values:
            if section == C.SECTION_CLASSES and key.startswith(C.CLASS_KEY_PREFIX):
                continue
            if key not in C.SCENARIO_KEYS[section]:
                failures.append(T.key_unknown.format(section=section, key=key))


def _parse_classes(doc: dict, failures: list[str]) -> tuple[dict[int, float], str | None]:
    """
    Таблица (SF -> dBm).

    Без ключей sfN берётся набор preset (по умолчанию nominal). С ключами sfN и без preset таблица
    состоит ровно из них; при наличии обоих ключи sfN переопределяют значения набора.
    """
    section = C.SECTION_CLASSES
    values = doc.get(section, {})
    explicit: dict[int, float] = {}
    for key, raw in values.items():
        if not key.startswith(C.CLASS_KEY_PREFIX):
            continue
        try:
            sf = int(key[len(C.CLASS_KEY_PREFIX):])
        except ValueError:
            failures.append(T.bad_class_key.format(section=section, key=key))
            continue
        value = _convert(section, key, raw, failures, float, T.key_not_number)
        if value is not None:
            explicit[sf] = value

    preset = values.get("preset")
    if preset is None and explicit:
        return explicit, None

    preset = str(preset or C.SENSITIVITY_PRESET_DEF).strip().lower()
    if preset not in C.SENSITIVITY_PRESETS:
        failures.append(
            T.bad_preset.format(section=section, value=preset, presets=", ".join(C.SENSITIVITY_PRESETS))
        )
        return explicit, None
    return {**C.SENSITIVITY_PRESETS[preset], **explicit}, preset


def _ordered_classes(radio: RadioConfig, table: dict[int, float]) -> tuple[SfClass, ...]:
    classes = build_classes(radio, table)
    if failures := validate_classes(classes):
        raise InvalidParameterError("; ".join(failures))
    return classes


def _guard(section: str, failures: list[str], build: Callable[[], Any]) -> Any:
    """Вызывает конструктор и превращает InvalidParameterError в запись о нарушении."""
    try:
        return build()
    except InvalidParameterError as e:
        failures.append(T.value_invalid.format(section=section, e=e))
        return None


def parse_scenario_document(doc: dict[str, dict[str, Any]], path: Path | None = None) -> ScenarioFile:
    """Строит и проверяет сценарий из словаря секций."""
    failures: list[str] = []
    _check_keys(doc, failures)

    # [network]
    alpha = _number(doc, C.SECTION_NETWORK, "alpha", C.ALPHA_DEF, failures)
    norm_radius = _number(doc, C.SECTION_NETWORK, "norm_radius_m", C.NORM_RADIUS_M_DEF, failures)
    lambda_t = _number(doc, C.SECTION_NETWORK, "lambda_t", C.LAMBDA_T_DEF, failures)
    density = get_parameter(C.SECTION_NETWORK, ("n_nodes", "lambda_s"), doc, failures)

    # [channel]
    kappa = _number(doc, C.SECTION_CHANNEL, "kappa", C.KAPPA_DEF, failures)
    p_tr_dbm = _number(doc, C.SECTION_CHANNEL, "p_tr_dbm", C.P_TR_DBM_DEF, failures)
    sigma_db = _number(doc, C.SECTION_CHANNEL, "sigma_db", C.SIGMA_DB_DEF, failures)
    fading_kind = str(doc.get(C.SECTION_CHANNEL, {}).get("fading", C.FADING_DEF))
    loss = get_parameter(C.SECTION_CHANNEL, ("beta", "hata_antenna_height_m"), doc, failures)

    # [radio]
    radio_values = doc.get(C.SECTION_RADIO, {})
    radio_args = dict(
        bandwidth_hz=_number(doc, C.SECTION_RADIO, "bw_hz", C.BANDWIDTH_HZ_DEF, failures),
        n_preamble_extra=_integer(doc, C.SECTION_RADIO, "n_preamble_extra", C.N_PREAMBLE_EXTRA_DEF, failures),
        payload_bytes=_integer(doc, C.SECTION_RADIO, "payload_bytes", C.PAYLOAD_BYTES_DEF, failures),
        header_flag=_integer(doc, C.SECTION_RADIO, "header", C.HEADER_FLAG_DEF, failures),
        low_rate_opt=_integer(doc, C.SECTION_RADIO, "low_rate_opt", C.LOW_RATE_OPT_DEF, failures),
    )
    cr_code = _guard(C.SECTION_RADIO, failures, lambda: parse_coding_rate(radio_values.get("cr", C.CR_CODE_DEF)))

    # [classes]
    table, preset = _parse_classes(doc, failures)

    # [sim]
    sim_values = doc.get(C.SECTION_SIM, {})
    sim_args = dict(
        replications=_integer(doc, C.SECTION_SIM, "replications", C.MC_REPLICATIONS_DEF, failures),
        seed=_integer(doc, C.SECTION_SIM, "seed", C.MC_SEED_DEF, failures),
        tail_epsilon=_number(doc, C.SECTION_SIM, "tail_epsilon", C.MC_TAIL_EPSILON_DEF, failures),
        disk_truncation_m=(
            _number(doc, C.SECTION_SIM, "disk_truncation_m", 0.0, failures)
            if "disk_truncation_m" in sim_values
            else None
        ),
    )

    if failures:
        raise ScenarioValidationError(failures)

    # Построение объектов: ошибки областей определения тоже собираются
    radio = _guard(C.SECTION_RADIO, failures, lambda: RadioConfig(cr_code=cr_code, **radio_args))
    classes = _guard(C.SECTION_CLASSES, failures, lambda: _ordered_classes(radio, table)) if radio is not None else None

    beta = None
    if loss is not None:
        key, value = loss
        number = _convert(C.SECTION_CHANNEL, key, value, failures, float, T.key_not_number)
        if number is not None:
            beta = number if key == "beta" else _guard(C.SECTION_CHANNEL, failures, lambda: hata_exponent(number))
    pathloss = _guard(C.SECTION_CHANNEL, failures, lambda: PathLossParams(beta=beta, kappa=kappa)) if beta is not None else None
    fading = _guard(C.SECTION_CHANNEL, failures, lambda: parse_fading(fading_kind, sigma_db))

    lambda_s = None
    if density is not None:
        key, value = density
        number = _convert(C.SECTION_NETWORK, key, value, failures, float, T.key_not_number)
        if number is not None:
            lambda_s = (
                number
                if key == "lambda_s"
                else _guard(C.SECTION_NETWORK, failures, lambda: nodes_to_lambda_s(number, norm_radius))
            )

    sim = _guard(C.SECTION_SIM, failures, lambda: SimConfig(**sim_args))

    if failures or None in (radio, classes, pathloss, fading, lambda_s, sim):
        raise ScenarioValidationError(failures)

    scenario = _guard(
        C.SECTION_NETWORK,
        failures,
        lambda: Scenario(
            lambda_s=lambda_s,
            lambda_t=lambda_t,
            norm_radius_m=norm_radius,
            alpha=alpha,
            p_tr_mw=dbm_to_mw(p_tr_dbm),
            pathloss=pathloss,
            fading=fading,
            radio=radio,
            classes=classes,
        ),
    )
    if scenario is None:
        raise ScenarioValidationError(failures)

    logger.info(T.scenario_loaded.format(path=path, nodes=scenario.n_nodes, classes=scenario.class_count))
    return ScenarioFile(path=path, scenario=scenario, sim=sim, preset=preset)


def parse_scenario_file(path: str | Path) -> ScenarioFile:
    p = Path(path)
    return parse_scenario_document(read_document(p), p)


def parse_scenario(path: str | Path) -> Scenario:
    """Проверенный сценарий из файла; плотность lambda = lambda_s * lambda_t, длительности - из lora_phy."""
    return parse_scenario_file(path).scenario
