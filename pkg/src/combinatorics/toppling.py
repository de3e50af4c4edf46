"""
Labeled chip toppling on the segment L_n.

A configuration conf(p, r) places the entries of p (values >= r shifted
up by one) on positions -floor((n-1)/2) .. floor(n/2) and adds chip r at
the origin. A topple sends the smaller of two co-located chips one site
left and the larger one site right. The final permutation does not
depend on the order in which sites are toppled; the default schedule
works in passes (topple the origin, then sweep every other doubly
occupied site until only the origin may hold two chips).
"""
import random
from itertools import permutations
from typing import Dict, Iterator, List, Optional

from src.combinatorics.perm_core import all_permutations, hat
from src.utils.constants import TopplingConstants
from src.utils.logger import logger
from src.utils.models import ChipConfiguration, Count, Permutation, ToppleOutcome
from src.utils.parallel import parallel_sum


class TopplingError(Exception):
    """Base exception for toppling errors."""

    pass


class InvalidToppleError(TopplingError):
    """Raised when toppling a site that does not hold two chips."""

    pass


class ToppleCapExceededError(TopplingError):
    """Raised when an evolution exceeds n * (n + 3) topples."""

    pass


def _check_r(n: int, r: int) -> None:
    if not 1 <= r <= n + 1:
        raise TopplingError(f"r must lie in 1..{n + 1}, got {r}")


def _origin_index(n: int) -> int:
    return (n + 1) // 2


def _empty_index(n: int) -> int:
    """Array index of the site left empty at the end"""
    return _origin_index(n) + (0 if n % 2 else 1)


def _topple_cap(n: int) -> int:
    return n * (n + TopplingConstants.CAP_FACTOR_OFFSET)


def _initial_sites(word, r: int) -> List[List[int]]:
    n = len(word)
    sites: List[List[int]] = [[] for _ in range(n + 2)]
    origin = _origin_index(n)
    start = origin - (n - 1) // 2
    for i, v in enumerate(word):
        sites[start + i].append(v if v < r else v + 1)
    sites[origin].append(r)
    sites[origin].sort()
    return sites


def _topple(sites: List[List[int]], i: int, last_move: Optional[Dict[int, int]] = None) -> None:
    a, b = sites[i]
    if i == 0 or i == len(sites) - 1:
        raise TopplingError(f"Chip would leave the segment from array index {i}")
    sites[i] = []
    left, right = sites[i - 1], sites[i + 1]
    left.append(a)
    right.append(b)
    if len(left) > 1:
        left.sort()
    if len(right) > 1:
        right.sort()
    if last_move is not None:
        last_move[a] = -1
        last_move[b] = 1


def _snapshot(n: int, sites: List[List[int]]) -> ChipConfiguration:
    return ChipConfiguration(n=n, sites=tuple(tuple(s) for s in sites))


def _run_pass(sites: List[List[int]], origin: int, budget: int,
              last_move: Optional[Dict[int, int]] = None) -> int:
    """Apply one pass in place; returns the number of topples performed"""
    count = 0
    if len(sites[origin]) == 2:
        _topple(sites, origin, last_move)
        count += 1
    while True:
        active = [i for i, s in enumerate(sites) if len(s) == 2 and i != origin]
        if not active:
            return count
        for i in active:
            _topple(sites, i, last_move)
        count += len(active)
        if count > budget:
            raise ToppleCapExceededError("Pass exceeded the topple cap")


def _read_result(n: int, sites: List[List[int]]) -> tuple:
    empty = _empty_index(n)
    word = []
    for i, site in enumerate(sites):
        if i == empty:
            if site:
                raise TopplingError(f"Site index {i} should be empty at the end, holds {site}")
            continue
        if len(site) != 1:
            raise TopplingError(f"Final configuration holds {len(site)} chips at index {i}")
        word.append(site[0])
    return tuple(word)


def _topple_word(word, r: int) -> tuple:
    """Final word of conf(word, r) under the pass schedule (no validation)"""
    n = len(word)
    sites = _initial_sites(word, r)
    origin = _origin_index(n)
    budget = _topple_cap(n)
    while any(len(s) == 2 for s in sites):
        budget -= _run_pass(sites, origin, budget)
        if budget < 0:
            raise ToppleCapExceededError(f"Evolution of {word} with r={r} exceeded the cap")
    return _read_result(n, sites)


def make_config(p: Permutation, r: int) -> ChipConfiguration:
    """
    Build conf(p, r).

    Raises:
        TopplingError: If r is outside 1..n+1
    """
    _check_r(p.n, r)
    return _snapshot(p.n, _initial_sites(p.word, r))


def topple_once(c: ChipConfiguration, site: int) -> ChipConfiguration:
    """
    Topple the two chips at a signed position.

    Raises:
        InvalidToppleError: If the site does not hold exactly two chips
    """
    if len(c.chips_at(site)) != 2:
        raise InvalidToppleError(f"Position {site} holds {len(c.chips_at(site))} chips")
    sites = [list(s) for s in c.sites]
    _topple(sites, site - c.leftmost)
    return _snapshot(c.n, sites)


def run_pass(c: ChipConfiguration) -> ChipConfiguration:
    """One pass of the schedule; a frozen configuration is returned unchanged"""
    sites = [list(s) for s in c.sites]
    _run_pass(sites, _origin_index(c.n), _topple_cap(c.n))
    return _snapshot(c.n, sites)


def run_toppling(
    p: Permutation,
    r: int,
    schedule: str = TopplingConstants.SCHEDULE_PASS,
    seed: Optional[int] = None,
    trace: bool = False,
) -> ToppleOutcome:
    """
    Evolve conf(p, r) until no site holds two chips.

    Args:
        p: Permutation of [n]
        r: Inserted chip, 1..n+1
        schedule: "pass" or "random" (uniform choice among doubly occupied sites)
        seed: Seed for the random schedule
        trace: Keep a snapshot after every pass (pass schedule only)

    Returns:
        ToppleOutcome with the final permutation of [n+1]

    Raises:
        TopplingError: If r is out of range or the schedule is unknown
        ToppleCapExceededError: If the evolution does not settle
    """
    n = p.n
    _check_r(n, r)
    if schedule not in TopplingConstants.SCHEDULES:
        raise TopplingError(f"Unknown schedule: {schedule}")

    sites = _initial_sites(p.word, r)
    origin = _origin_index(n)
    cap = _topple_cap(n)
    last_move: Dict[int, int] = {}
    total = 0
    passes: Optional[int] = None
    snapshots: Optional[List[ChipConfiguration]] = [] if trace else None

    if schedule == TopplingConstants.SCHEDULE_PASS:
        passes = 0
        while any(len(s) == 2 for s in sites):
            total += _run_pass(sites, origin, cap - total, last_move)
            passes += 1
            if snapshots is not None:
                snapshots.append(_snapshot(n, sites))
    else:
        rng = random.Random(seed)
        while True:
            active = [i for i, s in enumerate(sites) if len(s) == 2]
            if not active:
                break
            _topple(sites, rng.choice(active), last_move)
            total += 1
            if total > cap:
                raise ToppleCapExceededError(f"Evolution of {p} with r={r} exceeded the cap")

    if total > cap:
        raise ToppleCapExceededError(f"Evolution of {p} with r={r} exceeded the cap")

    return ToppleOutcome(
        result=Permutation.trusted(_read_result(n, sites)),
        topple_count=total,
        pass_count=passes,
        pass_trace=snapshots,
        final_moves=last_move,
    )


def is_r_toppleable(p: Permutation, r: int) -> bool:
    _check_r(p.n, r)
    result = _topple_word(p.word, r)
    return all(v == i for i, v in enumerate(result, start=1))


def is_toppleable(p: Permutation) -> bool:
    """r-toppleable for every r in 1..n+1"""
    return all(is_r_toppleable(p, r) for r in range(1, p.n + 2))


def is_structurally_toppleable(p: Permutation) -> bool:
    """Position-value inequalities equivalent to (floor(n/2)+1)-toppleability

    n = 2m+1: p_i <= m+i for i <= m and p_i >= i-m for i >= m+1.
    n = 2m:   p_i <= m+i for i <= m and p_i >= i-m+1 for i >= m+1.
    """
    n = p.n
    m = n // 2
    lower_shift = m if n % 2 else m - 1
    for i, v in enumerate(p.word, start=1):
        if i <= m:
            if v > m + i:
                return False
        elif v < i - lower_shift:
            return False
    return True


def first_chip_position_bound(p: Permutation) -> bool:
    """Chip 1 sits at a position at most ceil(n/2); necessary for toppleability"""
    return p.word.index(1) + 1 <= (p.n + 1) // 2


def final_moves_respect_halves(outcome: ToppleOutcome, n: int) -> bool:
    """Chips up to floor(n/2)+1 last moved left, the others last moved right"""
    split = n // 2 + 1
    for chip, direction in outcome.final_moves.items():
        expected = -1 if chip <= split else 1
        if direction != expected:
            return False
    return True


def _count_prefix(n: int, r: int, first: int) -> int:
    """Count r-toppleable permutations of [n] starting with `first`"""
    rest = [v for v in range(1, n + 1) if v != first]
    count = 0
    for tail in permutations(rest):
        result = _topple_word((first,) + tail, r)
        if all(v == i for i, v in enumerate(result, start=1)):
            count += 1
    return count


def count_r_toppleable(n: int, r: int, workers: int = 1) -> Count:
    """
    t_r(n): number of r-toppleable permutations of [n].

    The scan is partitioned by the first entry.
    """
    if n < 1:
        raise TopplingError(f"n must be positive, got {n}")
    _check_r(n, r)
    logger.debug(f"Counting {r}-toppleable permutations of size {n}")
    return parallel_sum(_count_prefix, [(n, r, first) for first in range(1, n + 1)], workers)


def toppleable_permutations(n: int) -> Iterator[Permutation]:
    """Toppleable permutations of [n] in lexicographic order"""
    r = n // 2 + 1
    for p in all_permutations(n):
        if is_r_toppleable(p, r):
            yield p


def symmetric_partner(p: Permutation, r: int) -> tuple:
    """(hat(p), n + 2 - r): same toppleability for odd n"""
    return hat(p), p.n + 2 - r
