import os
import logging
from pathlib import Path

import dotenv

from src.GENERAL.constants import Constants as C
from src.GENERAL.textmessage import TextMessage as T

logger = logging.getLogger(__name__)


class EnvironmentVariables:
    """
    Класс для работы с переменными окружения.
    Поддерживает загрузку из env файла рабочей директории и чтение значений с умолчаниями.

    Переменные окружения управляют только окружением запуска (логирование, число потоков,
    индикатор прогресса) и никогда не влияют на результаты расчётов.
    """

    def __init__(self, dotenv_path: str | Path | None = None):
        """
        Инициализация класса.
        Читает переменные из env файла (если он есть).

        :param dotenv_path: Путь на env файл. По умолчанию - файл env в текущей директории
        """
        self.dotenv_path = Path(dotenv_path or Path.cwd() / C.VARIABLES_DOTENV_NAME_DEF)
        self._custom_dot_env()

    def _custom_dot_env(self) -> None:
        """
        Загружает переменные из env файла. Уже заданные переменные окружения не перезаписываются.
        """
        if not dotenv.load_dotenv(dotenv_path=self.dotenv_path, encoding=C.ENCODING):
            logger.debug(T.env_not_found.format(env=self.dotenv_path, dir=Path.cwd()))

    @staticmethod
    def get_var(var_name: str, default: str | None = None) -> str:
        """
        Получает значение переменной окружения.

        :param var_name: Название переменной
        :param default: Значение по умолчанию, если переменная не найдена
        :return: Значение переменной
        """
        if default is None:
            default = ""
        return os.getenv(var_name, default)

    def get_positive_int(self, var_name: str, default: int) -> int:
        """
        Получает целое значение >= 1. Некорректное значение заменяется умолчанием с предупреждением.

        :param var_name: Название переменной
        :param default: Значение по умолчанию
        :return: Целое число >= 1
        """
        raw = self.get_var(var_name, str(default)).strip()
        try:
            value = int(raw)
        except ValueError:
            value = 0
        if value < 1:
            logger.warning(T.bad_threads.format(name=var_name, value=raw, default=default))
            return default
        return value

    def get_flag(self, var_name: str) -> bool:
        """Истина для значений 1/true/yes/on (без учёта регистра)."""
        return self.get_var(var_name, "0").strip().lower() in {"1", "true", "yes", "on"}
