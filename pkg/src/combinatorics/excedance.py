"""
Permutations by excedance set: backtracking enumeration and the
alternating Stirling-sum closed form a_{m+n', m}.
"""
from math import factorial
from typing import Iterable, Iterator, List, Set

from src.utils.logger import logger
from src.utils.models import Count, ExcedanceClass, Permutation
from src.utils.parallel import parallel_sum


class ExcedanceError(Exception):
    """Base exception for excedance computations."""

    pass


# Row n holds S(n, 0..n); grown on demand
_STIRLING_ROWS: List[List[int]] = [[1]]


def stirling2(n: int, k: int) -> Count:
    """Stirling number of the second kind S(n, k)"""
    if n < 0 or k < 0:
        raise ExcedanceError(f"Stirling arguments must be nonnegative, got ({n}, {k})")
    if k > n:
        return 0
    while len(_STIRLING_ROWS) <= n:
        prev = _STIRLING_ROWS[-1]
        size = len(prev)
        row = [0] * (size + 1)
        for j in range(1, size + 1):
            row[j] = j * (prev[j] if j < size else 0) + prev[j - 1]
        _STIRLING_ROWS.append(row)
    return _STIRLING_ROWS[n][k]


def _extend(prefix: List[int], used: List[bool], n: int, excedances: Set[int]) -> Iterator[tuple]:
    i = len(prefix) + 1
    if i > n:
        yield tuple(prefix)
        return
    if i in excedances:
        candidates = range(i + 1, n + 1)
    else:
        candidates = range(1, i + 1)
    for v in candidates:
        if used[v]:
            continue
        used[v] = True
        prefix.append(v)
        yield from _extend(prefix, used, n, excedances)
        prefix.pop()
        used[v] = False


def enumerate_by_excedance_set(n: int, excedances: Iterable[int]) -> Iterator[Permutation]:
    """All p in S_n with excedance set exactly `excedances`, lexicographically"""
    target = set(excedances)
    if any(i < 1 or i >= n for i in target):
        return
    used = [False] * (n + 1)
    for word in _extend([], used, n, target):
        yield Permutation.trusted(word)


def enumerate_class(c: ExcedanceClass) -> Iterator[Permutation]:
    """E(n, m): excedance set exactly {1, ..., m}"""
    return enumerate_by_excedance_set(c.n, range(1, c.m + 1))


def _count_with_first(n: int, m: int, first: int) -> int:
    excedances = set(range(1, m + 1))
    if (1 in excedances) != (first > 1):
        return 0
    used = [False] * (n + 1)
    used[first] = True
    return sum(1 for _ in _extend([first], used, n, excedances))


def count_class(c: ExcedanceClass, workers: int = 1) -> Count:
    """|E(n, m)| by enumeration, partitioned by the first entry"""
    tasks = [(c.n, c.m, first) for first in range(1, c.n + 1)]
    return parallel_sum(_count_with_first, tasks, workers)


def count_class_formula(m: int, n_rest: int) -> Count:
    """
    a_{m+n', m} = sum_{i=1}^{m+1} (-1)^{m+1-i} i! i^{n'-1} S(m+1, i).

    Args:
        m: Size of the excedance set {1..m}
        n_rest: n' = n - m, at least 1
    """
    if m < 0 or n_rest < 1:
        raise ExcedanceError(f"Need m >= 0 and n' >= 1, got m={m}, n'={n_rest}")
    total = 0
    for i in range(1, m + 2):
        term = factorial(i) * i ** (n_rest - 1) * stirling2(m + 1, i)
        total += -term if (m + 1 - i) % 2 else term
    return total


def count_class_formula_dual(m: int, n_rest: int) -> Count:
    """sum_{i=1}^{n'} (-1)^{n'-i} i! i^m S(n', i), equal to count_class_formula"""
    if m < 0 or n_rest < 1:
        raise ExcedanceError(f"Need m >= 0 and n' >= 1, got m={m}, n'={n_rest}")
    total = 0
    for i in range(1, n_rest + 1):
        term = factorial(i) * i ** m * stirling2(n_rest, i)
        total += -term if (n_rest - i) % 2 else term
    return total


def toppleable_count(n: int) -> Count:
    """t(n) = a_{n, floor((n-1)/2)}"""
    if n < 2:
        raise ExcedanceError(f"n must be at least 2, got {n}")
    m = (n - 1) // 2
    value = count_class_formula(m, n - m)
    logger.debug(f"t({n}) = {value}")
    return value
