"""
Исключения рабочего стенда бесконечных графов
"""
from typing import Any, Iterable, Optional, Tuple


class WorkbenchError(Exception):
    """Базовое исключение для всех ошибок стенда"""


class MembershipError(WorkbenchError):
    """Вершина не принадлежит графу или записана некорректно"""

    def __init__(self, vertex: Any, family_id: str, reason: str):
        """
        :param vertex: Проверяемая вершина
        :param family_id: Идентификатор семейства графа
        :param reason: Причина отказа
        """
        self.vertex = vertex
        self.family_id = family_id
        self.reason = reason
        super().__init__(f"{vertex!r} rejected by {family_id}: {reason}")


class NotInDomainError(WorkbenchError):
    """Обратное отображение не определено в вершине (вершина вне образа)"""

    def __init__(self, vertex: Any, label: str):
        self.vertex = vertex
        self.label = label
        super().__init__(f"{label}: {vertex!r} is not in the image")


class FamilyMismatchError(WorkbenchError):
    """Отображения или свидетели построены над разными графами"""

    def __init__(self, expected: str, got: str):
        self.expected = expected
        self.got = got
        super().__init__(f"family mismatch: expected {expected}, got {got}")


class PowerLimitError(WorkbenchError):
    """Показатель степени отображения вне допустимого диапазона"""

    def __init__(self, exponent: int, limit: int):
        self.exponent = exponent
        self.limit = limit
        super().__init__(f"power exponent {exponent} exceeds limit {limit}")


class CoordinateLimitError(WorkbenchError):
    """Номер простого для координаты выше границы таблицы простых"""

    def __init__(self, value: Any, limit: int):
        self.value = value
        self.limit = limit
        super().__init__(f"{value} is beyond the prime table limit {limit}")


class RestrictionError(WorkbenchError):
    """Образ вершины выходит за пределы подграфа при сужении"""

    def __init__(self, witness: Any, image: Any, family_id: str):
        self.witness = witness
        self.image = image
        self.family_id = family_id
        super().__init__(f"image {image!r} of {witness!r} escapes {family_id}")


class LiftError(WorkbenchError):
    """Продолжение тождеством ломает смежность"""

    def __init__(self, pair: Tuple[Any, Any], reason: str):
        self.pair = pair
        self.reason = reason
        super().__init__(f"lift rejected at {pair!r}: {reason}")


class DisjointnessError(WorkbenchError):
    """Копии, которые должны быть непересекающимися, пересекаются"""

    def __init__(self, witness: Any, context: str):
        self.witness = witness
        self.context = context
        super().__init__(f"{context}: common vertex {witness!r}")


class ContainmentError(WorkbenchError):
    """Нарушено требуемое включение подграфов"""

    def __init__(self, witness: Any, context: str):
        self.witness = witness
        self.context = context
        super().__init__(f"{context}: witness {witness!r}")


class CertificateInapplicableError(WorkbenchError):
    """Сертификат неизоморфности неприменим к данному свидетелю"""

    def __init__(self, reason: str):
        self.reason = reason
        super().__init__(f"certificate inapplicable: {reason}")


class WitnessVerificationError(WorkbenchError):
    """Проверка свидетеля на окне не прошла"""

    def __init__(self, name: str, report: Any):
        """
        :param name: Имя проверяемого свидетеля
        :param report: VerificationReport с нарушениями
        """
        self.name = name
        self.report = report
        super().__init__(f"verification of {name} failed")


class EmbeddingError(WorkbenchError):
    """Построенное вложение не прошло проверку"""

    def __init__(self, pair: Tuple[int, int], report: Any):
        self.pair = pair
        self.report = report
        super().__init__(f"embedding G_{pair[0]} -> G_{pair[1]} failed verification")


class GrammarError(WorkbenchError):
    """Синтаксическая ошибка в выражении отображения"""

    def __init__(self, message: str, column: int, source: str = ""):
        """
        :param message: Описание ошибки
        :param column: Позиция ошибки (с единицы)
        :param source: Исходная строка
        """
        self.message = message
        self.column = column
        self.source = source
        super().__init__(f"syntax error at column {column}: {message}")


class UnknownNameError(WorkbenchError):
    """Неизвестное имя отображения, подграфа, свидетеля или семейства"""

    def __init__(self, name: str, available: Optional[Iterable[str]] = None, kind: str = "name"):
        self.name = name
        self.kind = kind
        self.available = sorted(available or [])
        listing = ", ".join(self.available) if self.available else "none"
        super().__init__(f"unknown {kind} '{name}' (available: {listing})")
