"""
Permutations in one-line notation: statistics, transforms and text forms.

Positions and values are 1-indexed at every interface.
"""
import re
from itertools import permutations
from typing import Iterator, List, Sequence, Set

from src.utils.models import CycleDecomposition, Permutation


class PermutationError(Exception):
    """Base exception for permutation errors."""

    pass


class PermutationValidationError(PermutationError):
    """Raised when text or cycles do not describe a permutation."""

    pass


def make_permutation(word: Sequence[int]) -> Permutation:
    """
    Build a validated permutation.

    Raises:
        PermutationValidationError: If word is not a bijection of [n]
    """
    try:
        return Permutation(word=tuple(word))
    except ValueError as e:
        raise PermutationValidationError(str(e)) from e


def identity(n: int) -> Permutation:
    return Permutation.trusted(range(1, n + 1))


def all_permutations(n: int) -> Iterator[Permutation]:
    """All of S_n in lexicographic order"""
    for word in permutations(range(1, n + 1)):
        yield Permutation.trusted(word)


def excedance_set(p: Permutation) -> Set[int]:
    """Positions i with p_i > i"""
    return {i for i, v in enumerate(p.word, start=1) if v > i}


def inverse(p: Permutation) -> Permutation:
    out = [0] * p.n
    for i, v in enumerate(p.word, start=1):
        out[v - 1] = i
    return Permutation.trusted(out)


def hat(p: Permutation) -> Permutation:
    """Reverse-complement: q_i = n + 1 - p_{n+1-i}"""
    n = p.n
    return Permutation.trusted(n + 1 - v for v in reversed(p.word))


def to_cycles(p: Permutation) -> CycleDecomposition:
    """Canonical cycle decomposition (least element first, decreasing leaders)"""
    seen = [False] * (p.n + 1)
    cycles: List[tuple] = []
    for start in range(1, p.n + 1):
        if seen[start]:
            continue
        cycle = []
        v = start
        while not seen[v]:
            seen[v] = True
            cycle.append(v)
            v = p.word[v - 1]
        cycles.append(tuple(cycle))
    # starts are visited in increasing order, so reversing sorts leaders descending
    cycles.reverse()
    return CycleDecomposition.model_construct(n=p.n, cycles=tuple(cycles))


def from_cycles(c: CycleDecomposition) -> Permutation:
    """
    Rebuild the permutation mapping each cycle entry to its successor.

    Raises:
        PermutationValidationError: If the cycles do not partition [n]
    """
    values = [v for cycle in c.cycles for v in cycle]
    if sorted(values) != list(range(1, c.n + 1)):
        raise PermutationValidationError("Cycles must partition 1..n")
    word = [0] * c.n
    for cycle in c.cycles:
        for i, v in enumerate(cycle):
            word[v - 1] = cycle[(i + 1) % len(cycle)]
    return Permutation.trusted(word)


def canonical_cycles(n: int, cycles: Sequence[Sequence[int]]) -> CycleDecomposition:
    """Rotate and order arbitrary cycles into canonical form"""
    rotated = []
    for cycle in cycles:
        cycle = list(cycle)
        if not cycle:
            raise PermutationValidationError("Empty cycle")
        k = cycle.index(min(cycle))
        rotated.append(tuple(cycle[k:] + cycle[:k]))
    rotated.sort(key=lambda cyc: cyc[0], reverse=True)
    try:
        return CycleDecomposition(n=n, cycles=tuple(rotated))
    except ValueError as e:
        raise PermutationValidationError(str(e)) from e


def parse_permutation(text: str) -> Permutation:
    """
    Parse "3,1,4,2" or the compact "3142" (single-digit entries only).

    Raises:
        PermutationValidationError: If text is malformed or not a permutation
    """
    text = text.strip()
    if not text:
        raise PermutationValidationError("Empty permutation text")
    try:
        if "," in text or " " in text:
            word = [int(tok) for tok in re.split(r"[,\s]+", text) if tok]
        else:
            word = [int(ch) for ch in text]
    except ValueError as e:
        raise PermutationValidationError(f"Cannot parse permutation '{text}'") from e
    return make_permutation(word)


def format_permutation(p: Permutation) -> str:
    return str(p)


def format_cycles(c: CycleDecomposition) -> str:
    """'(8)(5)(47)(13629)' for n < 10, space-separated entries otherwise"""
    sep = "" if c.n < 10 else " "
    return "".join("(" + sep.join(str(v) for v in cycle) + ")" for cycle in c.cycles)


def parse_cycles(text: str, n: int) -> CycleDecomposition:
    """Inverse of format_cycles; cycles may be given in any order or rotation"""
    groups = re.findall(r"\(([^()]*)\)", text)
    if not groups:
        raise PermutationValidationError(f"No cycles found in '{text}'")
    cycles = []
    for group in groups:
        group = group.strip()
        if n < 10 and "," not in group and " " not in group:
            cycles.append([int(ch) for ch in group])
        else:
            cycles.append([int(tok) for tok in re.split(r"[,\s]+", group) if tok])
    return canonical_cycles(n, cycles)
