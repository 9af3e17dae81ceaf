"""
Пакет общих сервисов: логирование, исключения, теория чисел
"""
from .logger_service import logger
from . import errors
from . import number_theory

__all__ = ['logger', 'errors', 'number_theory']
