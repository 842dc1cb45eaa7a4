import logging
import sys
from io import TextIOWrapper
from typing import TextIO

from tqdm import tqdm

from src.GENERAL.constants import Constants as C


class CustomStreamHandler(logging.StreamHandler):
    """
    Консольный обработчик. По умолчанию пишет в stderr: stdout занят CSV.

    Пустые сообщения отбрасываются; запись идёт через tqdm.write, чтобы не разрывать индикатор прогресса.
    """

    def __init__(self, stream: TextIO | None = None):
        if stream is None:
            stream = sys.stderr

        if isinstance(stream, TextIOWrapper):
            stream.reconfigure(encoding=C.ENCODING)

        super().__init__(stream)

    def emit(self, record: logging.LogRecord) -> None:
        try:
            if not record.getMessage():
                return
            tqdm.write(self.format(record), file=self.stream)
            self.flush()

        except Exception:
            self.handleError(record)
