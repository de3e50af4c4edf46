"""
Seidel triangle, Genocchi numbers, collapsed permutations and Dellac
configurations.
"""
from math import comb
from typing import Iterator, List, Sequence, Tuple

from src.combinatorics.perm_core import excedance_set
from src.utils.logger import logger
from src.utils.models import (
    CollapsedPermutation,
    Count,
    DellacConfiguration,
    Permutation,
    SeidelTriangle,
    collapsed_bounds,
)


class GenocchiError(Exception):
    """Base exception for Genocchi computations."""

    pass


class NotCollapsedError(GenocchiError):
    """Raised when a permutation is outside the collapsed window."""

    pass


def _row_width(n: int) -> int:
    # columns k = 2 .. floor((n+3)/2)
    return (n + 3) // 2 - 1


def seidel(rows: int) -> SeidelTriangle:
    """
    Rows 1..rows of the Seidel triangle, seeded with S_{1,2} = 1.

    Even rows sum the previous row from the right, odd rows from the left.
    """
    if rows < 1:
        raise GenocchiError(f"rows must be positive, got {rows}")
    table: List[List[int]] = [[1]]
    for n in range(2, rows + 1):
        prev = table[-1] + [0] * (_row_width(n) - len(table[-1]))
        width = _row_width(n)
        row = [0] * width
        if n % 2 == 0:
            acc = 0
            for idx in range(width - 1, -1, -1):
                acc += prev[idx]
                row[idx] = acc
        else:
            acc = 0
            for idx in range(width):
                acc += prev[idx]
                row[idx] = acc
        table.append(row)
    return SeidelTriangle(rows=table)


def genocchi_first(n: int) -> Count:
    """g_{2n} = S_{2n-1, n+1}"""
    if n < 1:
        raise GenocchiError(f"n must be positive, got {n}")
    return seidel(2 * n - 1).entry(2 * n - 1, n + 1)


def genocchi_median(n: int) -> Count:
    """H_{2n-1} = S_{2n, 2}"""
    if n < 1:
        raise GenocchiError(f"n must be positive, got {n}")
    return seidel(2 * n).entry(2 * n, 2)


def normalized_median(n: int) -> Count:
    """h_n = H_{2n+1} / 2^n"""
    if n < 0:
        raise GenocchiError(f"n must be nonnegative, got {n}")
    value = genocchi_median(n + 1)
    quotient, remainder = divmod(value, 2 ** n)
    if remainder:
        raise GenocchiError(f"2^{n} does not divide H_{2 * n + 1} = {value}")
    return quotient


def han_zeng_median(n: int) -> Count:
    """H_{2n+1} = sum_{i>=0} (-1)^i C(n+1, 2i+1) g_{2n+2-2i}"""
    if n < 0:
        raise GenocchiError(f"n must be nonnegative, got {n}")
    total = 0
    for i in range((n + 2) // 2):
        term = comb(n + 1, 2 * i + 1) * genocchi_first(n + 1 - i)
        total += -term if i % 2 else term
    return total


def is_collapsed(p: Permutation) -> bool:
    n = p.n
    for pos, k in enumerate(p.word, start=1):
        low, high = collapsed_bounds(n, k)
        if not low <= pos <= high:
            return False
    return True


def enumerate_collapsed(n: int) -> Iterator[CollapsedPermutation]:
    """G_n in lexicographic order, by position-wise backtracking"""
    if n < 2:
        raise GenocchiError(f"n must be at least 2, got {n}")
    bounds = [None] + [collapsed_bounds(n, k) for k in range(1, n + 1)]
    used = [False] * (n + 1)
    prefix: List[int] = []

    def extend() -> Iterator[tuple]:
        i = len(prefix) + 1
        if i > n:
            yield tuple(prefix)
            return
        # a value whose window already closed can never be placed
        for k in range(1, n + 1):
            if not used[k] and bounds[k][1] < i:
                return
        for k in range(1, n + 1):
            if used[k] or not bounds[k][0] <= i <= bounds[k][1]:
                continue
            used[k] = True
            prefix.append(k)
            yield from extend()
            prefix.pop()
            used[k] = False

    for word in extend():
        yield CollapsedPermutation.model_construct(permutation=Permutation.trusted(word))


def _require_collapsed(p: Permutation) -> None:
    if not is_collapsed(p):
        raise NotCollapsedError(f"{p} is not collapsed")


def collapsed_to_excedance(p: Permutation) -> Permutation:
    """
    Interleave p in G_{2n+1}: sigma_{2i} = p_i, sigma_{2i-1} = p_{n+1+i},
    sigma_{2n+1} = p_{n+1}. The image has excedance set {1, 3, ..., 2n-1}.

    Raises:
        NotCollapsedError: If p is not in G_{2n+1}
    """
    if p.n % 2 == 0:
        raise GenocchiError("The excedance map needs odd size")
    _require_collapsed(p)
    n = (p.n - 1) // 2
    sigma = [0] * p.n
    for i in range(1, n + 1):
        sigma[2 * i - 1] = p(i)
        sigma[2 * i - 2] = p(n + 1 + i)
    sigma[2 * n] = p(n + 1)
    return Permutation.trusted(sigma)


def excedance_to_collapsed(sigma: Permutation) -> Permutation:
    """Inverse of collapsed_to_excedance"""
    if sigma.n % 2 == 0:
        raise GenocchiError("The excedance map needs odd size")
    n = (sigma.n - 1) // 2
    if excedance_set(sigma) != set(range(1, 2 * n, 2)):
        raise GenocchiError(f"{sigma} does not have excedance set {{1,3,...,{2 * n - 1}}}")
    word = [0] * sigma.n
    for i in range(1, n + 1):
        word[i - 1] = sigma(2 * i)
        word[n + i] = sigma(2 * i - 1)
    word[n] = sigma(2 * n + 1)
    return Permutation.trusted(word)


def is_admissible(p: Permutation) -> bool:
    """2i precedes 2i+1 for 1 <= i < n/2"""
    position = {v: i for i, v in enumerate(p.word)}
    return all(position[2 * i] < position[2 * i + 1] for i in range(1, p.n // 2))


def swap_pair(p: Permutation, i: int) -> Permutation:
    """Exchange the values 2i and 2i+1; an involution on G_{2n}"""
    if not 1 <= i < p.n // 2:
        raise GenocchiError(f"pair index must lie in 1..{p.n // 2 - 1}, got {i}")
    a, b = 2 * i, 2 * i + 1
    return Permutation.trusted(b if v == a else a if v == b else v for v in p.word)


def collapsed_to_dellac(p: Permutation) -> DellacConfiguration:
    """
    Point (i-1, floor(p_i / 2)) for 2 <= i <= 2n-1; order n-1.

    Raises:
        GenocchiError: If p is not an admissible member of G_{2n}
    """
    if p.n % 2 or p.n < 4:
        raise GenocchiError("The Dellac map needs even size at least 4")
    _require_collapsed(p)
    if not is_admissible(p):
        raise GenocchiError(f"{p} does not place every 2i before 2i+1")
    points = tuple((i - 1, p(i) // 2) for i in range(2, p.n))
    return DellacConfiguration(order=p.n // 2 - 1, points=points)


def dellac_to_collapsed(d: DellacConfiguration) -> Permutation:
    """Label column j points 2j, 2j+1 top to bottom; read rows; frame with 1 and 2n"""
    next_label = {j: 2 * j for j in range(1, d.order + 1)}
    middle = []
    for _, column in d.points:
        middle.append(next_label[column])
        next_label[column] += 1
    return Permutation.trusted([1] + middle + [2 * d.order + 2])


def enumerate_dellac(n: int) -> Iterator[DellacConfiguration]:
    """All Dellac configurations of order n, row by row"""
    if n < 1:
        raise GenocchiError(f"order must be positive, got {n}")
    filled = [0] * (n + 1)
    chosen: List[Tuple[int, int]] = []

    def extend(row: int) -> Iterator[Tuple[Tuple[int, int], ...]]:
        if row > 2 * n:
            yield tuple(chosen)
            return
        # column j closes after row n+j
        for j in range(1, n + 1):
            if filled[j] < 2 and n + j < row:
                return
        for j in range(1, n + 1):
            if filled[j] < 2 and j <= row <= n + j:
                filled[j] += 1
                chosen.append((row, j))
                yield from extend(row + 1)
                chosen.pop()
                filled[j] -= 1

    count = 0
    for points in extend(1):
        count += 1
        yield DellacConfiguration.model_construct(order=n, points=points)
    logger.debug(f"Enumerated {count} Dellac configurations of order {n}")


def render_dellac(d: DellacConfiguration) -> str:
    """Grid with '*' for points, one text line per row"""
    cells = set(d.points)
    return "\n".join(
        "".join("*" if (row, col) in cells else "." for col in range(1, d.order + 1))
        for row in range(1, 2 * d.order + 1)
    )


def is_dellac(points: Sequence[Tuple[int, int]], n: int) -> bool:
    try:
        DellacConfiguration(order=n, points=tuple(sorted(points)))
    except ValueError:
        return False
    return True
