import logging.handlers
import logging

from src.GENERAL.constants import Constants as C

logger = logging.getLogger(__name__)


class CustomRotatingFileHandler(logging.handlers.RotatingFileHandler):
    """
    Файловый обработчик с ротацией.

    Наследует RotatingFileHandler и добавляет:
    - отбрасывание пустых сообщений;
    - безопасную обработку ошибок записи.
    """

    def __init__(
        self,
        filename: str,
        mode: str = "a",
        maxBytes: int = C.ROTATING_MAX_BYTES,
        backupCount: int = C.ROTATING_BACKUP_COUNT,
        encoding: str | None = C.ENCODING,
        errors: str | None = None,
        delay: bool = True,
    ):
        """
        Args:
            filename: Путь к файлу лога (LORASG_LOG_FILE)
            mode: Режим открытия файла
            maxBytes: Размер файла, после которого выполняется ротация
            backupCount: Количество сохраняемых копий
            encoding: Кодировка файла
            delay: Открывать файл только при первой записи
        """
        super().__init__(
            filename=filename,
            mode=mode,
            maxBytes=maxBytes,
            backupCount=backupCount,
            encoding=encoding,
            errors=errors,
            delay=delay,
        )

    def emit(self, record: logging.LogRecord) -> None:
        try:
            if record.getMessage():
                # Ротация и запись обрабатываются родительским классом
                super().emit(record)

        except Exception:
            self.handleError(record)
