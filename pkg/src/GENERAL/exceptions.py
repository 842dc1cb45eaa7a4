from typing import Any


class LoraSgError(Exception):
    """Базовое исключение проекта."""


class InvalidParameterError(LoraSgError, ValueError):
    """Параметр вне области определения формулы."""


class ScenarioValidationError(LoraSgError):
    """Файл сценария не прошёл проверку. Содержит список всех найденных нарушений."""

    def __init__(self, failures: list[str]):
        self.failures = list(failures)
        super().__init__("\n".join(self.failures))


class NumericError(LoraSgError):
    """Численная процедура не сошлась или задача не имеет решения."""

    def __init__(self, message: str, diagnostics: dict[str, Any] | None = None):
        self.diagnostics = dict(diagnostics or {})
        super().__init__(message)


class OracleDisagreementError(LoraSgError):
    """Оценка Монте-Карло расходится с аналитикой более чем на допустимое число сигм."""

    def __init__(self, message: str, z_scores: dict[str, float] | None = None):
        self.z_scores = dict(z_scores or {})
        super().__init__(message)
