"""
Утилиты теории чисел для семейств графов: простые числа и степени простых

Проверка простоты и разложение p^j не зависят от таблицы простых и работают для любых координат.
Номер простого (nth_prime, prime_index) берётся из таблицы решета, ограниченной PRIME_TABLE_LIMIT.
"""
from bisect import bisect_right
from functools import lru_cache
from threading import Lock
from typing import List, Optional, Tuple

from .errors import CoordinateLimitError

# Граница таблицы простых: выше неё номер простого не вычисляется
PRIME_TABLE_LIMIT = 2_000_000

# Основания Миллера-Рабина, точные для n < 3.3 * 10^24
_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)

_PRIMES: List[int] = [2, 3, 5, 7, 11, 13]
_table_bound = 13
_primes_lock = Lock()


def _grow_table(upto: int) -> None:
    """Пересчитать решето до max(upto, 2 * текущая граница), но не выше PRIME_TABLE_LIMIT"""
    global _PRIMES, _table_bound
    with _primes_lock:
        if upto <= _table_bound:
            return
        bound = min(max(upto, 2 * _table_bound), PRIME_TABLE_LIMIT)
        sieve = bytearray([1]) * (bound + 1)
        sieve[0] = sieve[1] = 0
        for p in range(2, int(bound ** 0.5) + 1):
            if sieve[p]:
                sieve[p * p::p] = bytearray(len(range(p * p, bound + 1, p)))
        _PRIMES = [i for i, flag in enumerate(sieve) if flag]
        _table_bound = bound


def is_prime(n: int) -> bool:
    """Проверка на простоту (Миллер-Рабин с фиксированными основаниями)"""
    if n < 2:
        return False
    for p in _WITNESSES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _WITNESSES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def next_prime(p: int) -> int:
    """Наименьшее простое, большее p"""
    q = max(p + 1, 2)
    while not is_prime(q):
        q += 1
    return q


def previous_prime(p: int) -> Optional[int]:
    """Наибольшее простое, меньшее p, или None для p <= 2"""
    q = p - 1
    while q >= 2 and not is_prime(q):
        q -= 1
    return q if q >= 2 else None


def nth_prime(n: int) -> int:
    """
    n-е простое число, нумерация с единицы: nth_prime(1) == 2

    Raises:
        ValueError: n < 1
        CoordinateLimitError: n-е простое больше PRIME_TABLE_LIMIT
    """
    if n < 1:
        raise ValueError(f"prime index must be >= 1, got {n}")
    while n > len(_PRIMES):
        if _table_bound >= PRIME_TABLE_LIMIT:
            raise CoordinateLimitError(f"prime #{n}", PRIME_TABLE_LIMIT)
        _grow_table(2 * _table_bound)
    return _PRIMES[n - 1]


def prime_index(p: int) -> int:
    """
    Номер простого p (обратная к nth_prime)

    Raises:
        ValueError: p не простое
        CoordinateLimitError: p больше PRIME_TABLE_LIMIT
    """
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if p > PRIME_TABLE_LIMIT:
        raise CoordinateLimitError(p, PRIME_TABLE_LIMIT)
    _grow_table(p)
    return bisect_right(_PRIMES, p)


def integer_root(m: int, s: int) -> int:
    """Целая часть корня степени s из m >= 0 (метод Ньютона на целых)"""
    if m < 2 or s == 1:
        return m
    x = 1 << ((m.bit_length() + s - 1) // s)
    while True:
        y = ((s - 1) * x + m // x ** (s - 1)) // s
        if y >= x:
            return x
        x = y


@lru_cache(maxsize=4096)
def perfect_power_root(n: int) -> Tuple[int, int]:
    """
    Примитивный корень: n = r^s с максимальным s

    Два числа b, c >= 2 имеют общую степень тогда и только тогда, когда их корни совпадают.
    """
    if n < 2:
        raise ValueError(f"root undefined for {n}")
    for s in range(n.bit_length(), 1, -1):
        r = integer_root(n, s)
        if r >= 2 and r ** s == n:
            return r, s
    return n, 1


@lru_cache(maxsize=65536)
def prime_power_decompose(m: int) -> Optional[Tuple[int, int]]:
    """
    Представление m = p^j с простым p и j >= 1

    Returns:
        (p, j) или None, если m не степень простого (в том числе m = 1)
    """
    if m < 2:
        return None
    root, s = perfect_power_root(m)
    return (root, s) if is_prime(root) else None


def count_powers_upto(base: int, x: int) -> int:
    """Количество степеней base^j (j >= 1), не превосходящих x"""
    count = 0
    value = base
    while value <= x:
        count += 1
        value *= base
    return count
