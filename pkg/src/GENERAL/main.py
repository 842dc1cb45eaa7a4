import sys
import logging

import click

from src.CLI.cli import run
from src.GENERAL.constants import Constants as C
from src.GENERAL.exceptions import (
    InvalidParameterError,
    NumericError,
    OracleDisagreementError,
    ScenarioValidationError,
)
from src.GENERAL.textmessage import TextMessage as T
from src.LOGGING.tunelogger import TuneLogger

logger = logging.getLogger(__name__)


def main(args: list[str] | None = None) -> int:
    """Точка входа lorasg. Возвращает код завершения."""
    TuneLogger().setup_logging()

    try:
        return run(args)
    except click.ClickException as e:
        e.show()
        return C.EXIT_VALIDATION if isinstance(e, click.UsageError) else e.exit_code
    except (ScenarioValidationError, InvalidParameterError) as e:
        logger.error(T.validation_failed.format(e=e))
        return C.EXIT_VALIDATION
    except OracleDisagreementError as e:
        logger.error(str(e))
        return C.EXIT_ORACLE
    except NumericError as e:
        logger.error(T.numeric_failed.format(e=e, diagnostics=e.diagnostics))
        return C.EXIT_NUMERIC
    except (KeyboardInterrupt, click.exceptions.Abort):
        logger.warning(T.canceled_by_user)
        return C.EXIT_INTERRUPTED
    except Exception as e:
        logger.exception(T.unexpected.format(e=e))
        return C.EXIT_UNEXPECTED


if __name__ == "__main__":
    sys.exit(main())
