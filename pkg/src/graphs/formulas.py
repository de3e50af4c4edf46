"""
Closed-form counts for acyclic orientations of complete multipartite
graphs, the bipartite no-left-sink family R(m, n) and Turán graphs.

All sums are exact integer arithmetic.
"""
import math
from itertools import product
from typing import Sequence, Tuple

from src.combinatorics.excedance import count_class_formula, count_class_formula_dual, stirling2
from src.utils.models import Count, PartVector, TuranParams


class FormulaError(Exception):
    """Base exception for closed-form evaluation errors."""

    pass


def factorial(n: int) -> Count:
    if n < 0:
        raise FormulaError(f"factorial of negative number {n}")
    return math.factorial(n)


def multinomial(top: int, parts: Sequence[int]) -> Count:
    """
    top! / (p_1! ... p_k!).

    Raises:
        FormulaError: If the parts do not sum to top
    """
    if sum(parts) != top or any(p < 0 for p in parts):
        raise FormulaError(f"Parts {tuple(parts)} do not sum to {top}")
    value = factorial(top)
    for p in parts:
        value //= factorial(p)
    return value


def _part_vector(parts: Sequence[int]) -> PartVector:
    try:
        return PartVector(parts=tuple(parts))
    except ValueError as e:
        raise FormulaError(str(e)) from e


def _signed_stirling_sum(rest: Tuple[int, ...], weight) -> Count:
    """sum over k in [n_2] x ... x [n_N] of (-1)^{|n|-|k|} weight(|k|) |k|! prod S(n_i, k_i)"""
    total_rest = sum(rest)
    total = 0
    for k in product(*(range(1, size + 1) for size in rest)):
        size_k = sum(k)
        term = weight(size_k) * math.factorial(size_k)
        for n_i, k_i in zip(rest, k):
            term *= stirling2(n_i, k_i)
        total += -term if (total_rest - size_k) % 2 else term
    return total


def _ao_sum(parts: Tuple[int, ...]) -> Count:
    """AO count of K_parts for any number of parts (empty graph -> 1)"""
    if not parts:
        return 1
    first, rest = parts[0], parts[1:]
    return _signed_stirling_sum(rest, lambda s: (1 + s) ** first)


def _auso_sum(parts: Tuple[int, ...]) -> Count:
    """Fixed-sink AUSO count of K_parts, sink in the first part"""
    first, rest = parts[0] - 1, parts[1:]
    return _signed_stirling_sum(rest, lambda s: s ** first)


def count_ao_multipartite(parts: Sequence[int]) -> Count:
    """Acyclic orientations of K_{n_1,...,n_N}"""
    return _ao_sum(_part_vector(parts).parts)


def count_auso_multipartite(parts: Sequence[int]) -> Count:
    """
    AUSOs with a fixed sink of K_{p_1,...,p_N}.

    Args:
        parts: Part sizes of the graph; the sink lies in the first part,
            so p_1 = n_1 + 1
    """
    return _auso_sum(_part_vector(parts).parts)


def count_ao_unlabeled(parts: Sequence[int]) -> Count:
    """(1 + |n|)^{n_1} * multinomial(|n|; n_2, ..., n_N)"""
    pv = _part_vector(parts)
    return (1 + pv.rest_total) ** pv.parts[0] * multinomial(pv.rest_total, pv.parts[1:])


def count_no_sink_unlabeled(parts: Sequence[int]) -> Count:
    """|n|^{n_1} * multinomial(|n|; n_2, ..., n_N): no sink among the labeled part"""
    pv = _part_vector(parts)
    return pv.rest_total ** pv.parts[0] * multinomial(pv.rest_total, pv.parts[1:])


def count_R_bipartite(m: int, n: int) -> Count:
    """
    |R(m, n)|: AOs of K_{m,n} with no sink in the left part.

    n! n^m - sum_{j=1}^{n-1} (-1)^{j-1} (n-j)! (n-j)^m S(n, n-j)
    """
    if m < 0 or n < 1:
        raise FormulaError(f"Need m >= 0 and n >= 1, got m={m}, n={n}")
    total = factorial(n) * n ** m
    for j in range(1, n):
        term = factorial(n - j) * (n - j) ** m * stirling2(n, n - j)
        total -= term if (j - 1) % 2 == 0 else -term
    return total


def exc_class_sizes(m: int, n_rest: int) -> Tuple[Count, Count, Count]:
    """Three expressions for |E(m+n', m)|: Stirling sum, its dual, |R(m, n')|"""
    return (
        count_class_formula(m, n_rest),
        count_class_formula_dual(m, n_rest),
        count_R_bipartite(m, n_rest),
    )


def stanley_recurrence_check(parts: Sequence[int]) -> bool:
    """
    AO(n) + sum_i sum_{l < n_i} (-1)^{n_i - l} C(n_i, l) AO(n with n_i -> l) == 0.

    Parts reduced to zero are dropped.
    """
    pv = _part_vector(parts)
    total = _ao_sum(pv.parts)
    for idx, size in enumerate(pv.parts):
        for level in range(size):
            reduced = pv.parts[:idx] + ((level,) if level else ()) + pv.parts[idx + 1:]
            term = math.comb(size, level) * _ao_sum(reduced)
            total += -term if (size - level) % 2 else term
    return total == 0


def surjection_count(n: int, k: int) -> Count:
    """Surjections [n] -> [k]: k! S(n, k)"""
    return factorial(k) * stirling2(n, k)


def turan_parts(n: int, r: int) -> Tuple[int, ...]:
    try:
        return TuranParams(n=n, r=r).part_sizes()
    except ValueError as e:
        raise FormulaError(str(e)) from e


def _turan_formula(r: int, k: int) -> Count:
    """u_{r+k, r} for k <= r as an alternating sum over (j_2..j_k) in {1,2}^{k-1}"""
    if k == 0:
        return factorial(r - 1)
    total = 0
    for js in product((1, 2), repeat=k - 1):
        j = sum(js)
        size = j + r - k
        term = size * factorial(size)
        total += -term if j % 2 else term
    return total


def turan_u(n: int, r: int, method: str = "auto") -> Count:
    """
    u_{n,r}: AUSOs with a fixed sink of the Turán graph T(n, r).

    Args:
        method: "formula" (needs n - r <= r), "multipartite", or "auto"

    Raises:
        FormulaError: If parameters are out of range or the formula does not apply
    """
    turan_parts(n, r)
    k = n - r
    if method == "auto":
        method = "formula" if k <= r else "multipartite"
    if method == "formula":
        if k > r:
            raise FormulaError(f"The alternating formula needs n - r <= r, got n={n}, r={r}")
        return _turan_formula(r, k)
    if method == "multipartite":
        return _auso_sum(turan_parts(n, r))
    raise FormulaError(f"Unknown method: {method}")


def delta_power_entry(k: int, index: int) -> Count:
    """Entry `index` of delta^k applied to a_j = (j-1)!, delta a_j = a_j - a_{j-1}"""
    if index - k < 1:
        raise FormulaError(f"delta^{k} at {index} reaches below the sequence start")
    total = 0
    for i in range(k + 1):
        term = math.comb(k, i) * factorial(index - i - 1)
        total += -term if i % 2 else term
    return total
