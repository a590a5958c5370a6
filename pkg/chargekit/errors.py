"""
Исключения предметной области и коды завершения
"""
from enum import IntEnum
from typing import Optional


class ExitCode(IntEnum):
    OK = 0
    VIOLATION = 1
    PARSE_ERROR = 2
    SEMANTIC_ERROR = 3


class ChargeKitError(Exception):
    """Базовая ошибка: аналог HTTPException с кодом завершения вместо HTTP-статуса"""

    exit_code: ExitCode = ExitCode.SEMANTIC_ERROR

    def __init__(self, detail: str):
        super().__init__(detail)
        self.detail = detail


class ParseError(ChargeKitError):
    """Синтаксическая ошибка во входном тексте"""

    exit_code = ExitCode.PARSE_ERROR

    def __init__(self, detail: str, line: Optional[int] = None, column: Optional[int] = None):
        self.line = line
        self.column = column
        if line is not None:
            detail = f"line {line}, column {column or 1}: {detail}"
        super().__init__(detail)


class OutOfRange(ChargeKitError):
    """Координата вне [0,1] или a > b"""


class RangeError(OutOfRange):
    """Координата вне диапазона в строке входного файла"""

    def __init__(self, detail: str, line: int, column: int):
        self.line = line
        self.column = column
        super().__init__(f"line {line}, column {column}: {detail}")


class NotPositive(ChargeKitError):
    """Операция определена только для положительных зарядов"""


class EmptyFamily(ChargeKitError):
    pass


class NotSingular(ChargeKitError):
    pass


class NotDisjoint(ChargeKitError):
    pass


class NotMember(ChargeKitError):
    """Множество не принадлежит λ-пополнению"""


class Malformed(ChargeKitError):
    """Несогласованные размерности линейной программы"""


class BadInput(ChargeKitError):
    pass


class TooLarge(ChargeKitError):
    pass


class InvalidPartition(ChargeKitError):
    """Куски простой функции пересекаются или не покрывают Ω"""


class EquivalenceViolation(ChargeKitError):
    """Нарушена эквивалентность условий (i)–(iii) теоремы Яна"""

    exit_code = ExitCode.VIOLATION

    def __init__(self, detail: str, instance: str = ""):
        super().__init__(detail)
        self.instance = instance
