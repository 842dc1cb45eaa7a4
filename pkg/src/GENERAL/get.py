from typing import Any
import logging
from logging import getLogger

from src.GENERAL.textmessage import TextMessage as T

logger = getLogger(__name__)


def get_parameter(
    section: str,
    keys: tuple[str, ...],
    parameters_dict: dict[str, dict[str, Any]],
    failures: list[str],
    level: int = logging.CRITICAL,
) -> tuple[str, Any] | None:
    """
    Достаёт из секции сценария ровно один ключ из группы взаимоисключающих ключей.

    :param section: Имя секции ([network], [channel] ...)
    :param keys: Группа взаимоисключающих ключей; допустим ровно один из них
    :param parameters_dict: Словарь секций сценария
    :param failures: Список, в который дописываются найденные нарушения
    :param level: CRITICAL - отсутствие ключа является нарушением; NOTSET - ключ необязателен
    :return: Пара (ключ, значение) или None
    """
    values = parameters_dict.get(section, {})
    present = [key for key in keys if key in values]

    if len(present) > 1:
        failures.append(T.key_conflict.format(section=section, keys=", ".join(present)))
        return None

    if not present:
        match level:
            case logging.CRITICAL:
                failures.append(T.key_missing.format(section=section, keys=", ".join(keys)))
            case logging.NOTSET:
                pass
            case _:
                logger.info(T.key_missing.format(section=section, keys=", ".join(keys)))
        return None

    key = present[0]
    return key, values[key]
