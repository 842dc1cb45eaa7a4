from pathlib import Path
import logging
from enum import Enum

from src.LOGGING.customstreamhandler import CustomStreamHandler
from src.LOGGING.customrotatingfilehandler import CustomRotatingFileHandler
from src.GENERAL.constants import Constants as C
from src.GENERAL.environment_variables import EnvironmentVariables

logger = logging.getLogger(__name__)


# Обозначения обработчиков логеров внутри класса
class HandlerLogger(Enum):
    file = "file"
    console = "console"


class TuneLogger:
    def __init__(self):
        """Инициализация с использованием переменных окружения"""
        self.variables = EnvironmentVariables()

        self.console_log_level = self.get_log_level(
            C.ENV_CONSOLE_LOG_LEVEL, C.CONSOLE_LOG_LEVEL_DEF
        )
        self.file_log_level = self.get_log_level(
            C.ENV_FILE_LOG_LEVEL, C.FILE_LOG_LEVEL_DEF
        )

        self.log_format = C.LOG_FORMAT  # Формат для всех обработчиков логгеров
        self.handlers_logger: dict[HandlerLogger, logging.Handler] = {
            HandlerLogger.console: CustomStreamHandler(),
        }
        file_handler = self.create_file_handler()
        if file_handler is not None:
            self.handlers_logger[HandlerLogger.file] = file_handler

    def get_log_level(
        self,
        env_name_handler: str,
        default_name_handler: str,
    ) -> int:
        """Определяет уровень логирования, заданный для обработчика

        :param env_name_handler: Имя переменной окружения
        :param default_name_handler: Значение по умолчанию
        :return: Уровень логирования
        """
        log_level_name = self.variables.get_var(
            env_name_handler, default_name_handler
        ).strip().upper()
        return C.CONVERT_LOGGING_NAME_TO_CODE.get(
            log_level_name, C.CONVERT_LOGGING_NAME_TO_CODE[default_name_handler]
        )

    def setup_logging(self) -> None:
        """Настройка глобального логирования"""
        self.configure_handlers(
            self.log_format, self.console_log_level, self.file_log_level
        )

        # Для сторонних библиотек устанавливаем более высокий уровень логирования
        for lib in C.NOISY_LIBS:
            logging.getLogger(lib).setLevel(C.LOG_LEVEL_FOR_LIBRARIES)

    def create_file_handler(self) -> CustomRotatingFileHandler | None:
        """Файловый обработчик создаётся, только если задан LORASG_LOG_FILE"""
        log_file_path = self.variables.get_var(C.ENV_LOG_FILE_PATH).strip()
        if not log_file_path:
            return None

        p = Path(log_file_path)
        mode = "w" if (not p.exists() or p.stat().st_size == 0) else "a"
        return CustomRotatingFileHandler(filename=str(p), mode=mode)

    def configure_handlers(
        self, log_format: str, log_level_console: int, file_log_level: int
    ) -> None:
        """Конфигурация всех обработчиков"""
        handlers = list(self.handlers_logger.values())

        for handler in handlers:
            handler.setFormatter(logging.Formatter(log_format))

        self.handlers_logger[HandlerLogger.console].setLevel(log_level_console)
        if HandlerLogger.file in self.handlers_logger:
            self.handlers_logger[HandlerLogger.file].setLevel(file_log_level)

        self.configure_root_handlers(handlers)

    def configure_root_handlers(self, handlers: list[logging.Handler]) -> None:
        """Добавление обработчиков к корневому логгеру"""
        self._remove_loging()  # Удаление всех прежних обработчиков

        root_logger = logging.getLogger()
        root_logger.setLevel(logging.DEBUG)

        for handler in handlers:
            root_logger.addHandler(handler)

    @staticmethod
    def _remove_loging() -> None:
        """Удаление настроек логирования"""
        logger_root = logging.getLogger()
        for handler in logger_root.handlers[:]:
            logger_root.removeHandler(handler)
            handler.close()
