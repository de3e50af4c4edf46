"""
Verification suites.

Each suite cross-checks simulation, enumeration and closed forms against
each other and against known values, and reports one CheckResult per check.
"""
from collections import Counter
from itertools import combinations
from math import comb
from typing import Callable, Dict, List, Optional, Sequence

from pydantic import BaseModel

from src.combinatorics.bijections import (
    auso_to_exc,
    auso_to_toppleable,
    exc_to_auso,
    exc_to_topp,
    no_left_sink_orientations,
    toppleable_to_auso,
    topp_to_exc,
)
from src.combinatorics.excedance import (
    count_class_formula,
    enumerate_by_excedance_set,
    enumerate_class,
    toppleable_count,
)
from src.combinatorics.genocchi import (
    collapsed_to_dellac,
    collapsed_to_excedance,
    dellac_to_collapsed,
    enumerate_collapsed,
    enumerate_dellac,
    excedance_to_collapsed,
    genocchi_first,
    genocchi_median,
    han_zeng_median,
    is_admissible,
    normalized_median,
    seidel,
)
from src.combinatorics.perm_core import all_permutations, excedance_set, hat
from src.combinatorics.toppling import (
    count_r_toppleable,
    is_r_toppleable,
    is_structurally_toppleable,
    is_toppleable,
    run_toppling,
)
from src.graphs.extremal import (
    apply_slide,
    check_slide_identities,
    complement_of_matching,
    find_max_ao,
    reduce_to_matching_complement,
    slide_applicable,
)
from src.graphs.formulas import (
    count_ao_multipartite,
    count_auso_multipartite,
    count_R_bipartite,
    delta_power_entry,
    exc_class_sizes,
    stanley_recurrence_check,
    turan_u,
)
from src.graphs.orientations import (
    canonical_sorts,
    chromatic_polynomial,
    contract,
    contraction_map,
    count_ao_brute,
    count_ao_chromatic,
    count_auso_brute,
    delete,
    evaluate_polynomial,
    is_connected,
    sink_census,
)
from src.utils.config import Config
from src.utils.constants import ReferenceValues, TopplingConstants
from src.utils.logger import logger
from src.utils.models import CompleteMultipartiteGraph, ExcedanceClass, Graph


class CheckResult(BaseModel):
    """Outcome of one verification check"""
    suite: str
    name: str
    passed: bool
    detail: str = ""


class VerificationError(Exception):
    """Raised for unknown suite names."""

    pass


def _partitions(total: int, max_part: Optional[int] = None) -> List[tuple]:
    """Nonincreasing integer partitions of total"""
    max_part = total if max_part is None else max_part
    if total == 0:
        return [()]
    out = []
    for first in range(min(total, max_part), 0, -1):
        for rest in _partitions(total - first, first):
            out.append((first,) + rest)
    return out


def _all_graphs(n: int):
    pairs = list(combinations(range(1, n + 1), 2))
    for mask in range(1 << len(pairs)):
        yield Graph(vertex_count=n, edges=[p for i, p in enumerate(pairs) if (mask >> i) & 1])


def _graphs_with_edges(n: int, m: int):
    for edges in combinations(combinations(range(1, n + 1), 2), m):
        yield Graph.model_construct(vertex_count=n, edges=edges)


class VerificationService:
    """Runs named verification suites bounded by max_n"""

    SUITES = (
        "table1", "headline", "schedule", "monotonicity", "symmetry", "seidel",
        "collapsed", "chain", "formulas", "stanley", "turan", "extremal",
    )

    def __init__(self, config: Optional[Config] = None, max_n: int = 8):
        self.config = config or Config()
        self.max_n = max_n
        self.workers = self.config.parallel.workers
        self.results: List[CheckResult] = []
        self._table_cache: Dict[tuple, int] = {}

    def _record(self, suite: str, name: str, passed: bool, detail: str = "") -> None:
        if not passed:
            logger.warning(f"[{suite}] {name} failed: {detail}")
        self.results.append(CheckResult(suite=suite, name=name, passed=passed, detail=detail))

    def _expect(self, suite: str, name: str, actual, expected) -> None:
        self._record(suite, name, actual == expected, f"got {actual}, expected {expected}")

    def _t_r(self, n: int, r: int) -> int:
        key = (n, r)
        if key not in self._table_cache:
            self._table_cache[key] = count_r_toppleable(n, r, self.workers)
        return self._table_cache[key]

    def run(self, suites: Optional[Sequence[str]] = None) -> List[CheckResult]:
        """
        Run the requested suites (all by default).

        Raises:
            VerificationError: If a suite name is unknown
        """
        names = list(suites) if suites else list(self.SUITES)
        unknown = [s for s in names if s not in self.SUITES]
        if unknown:
            raise VerificationError(f"Unknown suites: {', '.join(unknown)}")
        self.results = []
        for name in names:
            logger.info(f"Running verification suite '{name}' (max n = {self.max_n})")
            suite: Callable[[], None] = getattr(self, f"_suite_{name}")
            suite()
        return self.results

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    def _suite_table1(self) -> None:
        for n, row in ReferenceValues.TOPPLEABLE_BY_R.items():
            if n > self.max_n:
                continue
            actual = [self._t_r(n, r) for r in range(1, n + 2)]
            self._expect("table1", f"t_r({n})", actual, row)

    def _suite_headline(self) -> None:
        for n in range(2, min(8, self.max_n) + 1):
            simulated = sum(1 for p in all_permutations(n) if is_toppleable(p))
            structural = sum(1 for p in all_permutations(n) if is_structurally_toppleable(p))
            formula = toppleable_count(n)
            expected = ReferenceValues.TOPPLEABLE[n]
            self._expect("headline", f"t({n}) simulated", simulated, expected)
            self._expect("headline", f"t({n}) structural", structural, expected)
            self._expect("headline", f"t({n}) closed form", formula, expected)

    def _suite_schedule(self) -> None:
        for n in range(1, min(6, self.max_n) + 1):
            mismatches = 0
            for p in all_permutations(n):
                for r in range(1, n + 2):
                    reference = run_toppling(p, r).result
                    for seed in range(20):
                        outcome = run_toppling(p, r, schedule=TopplingConstants.SCHEDULE_RANDOM, seed=seed)
                        if outcome.result != reference:
                            mismatches += 1
            self._expect("schedule", f"random schedules agree, n={n}", mismatches, 0)

    def _suite_monotonicity(self) -> None:
        for n in range(2, min(7, self.max_n) + 1):
            half = n // 2
            failures = 0
            for p in all_permutations(n):
                ok = [None] + [is_r_toppleable(p, r) for r in range(1, n + 2)]
                for r in range(2, half + 2):
                    if ok[r] and not ok[r - 1]:
                        failures += 1
                for r in range(half + 2, n + 1):
                    if ok[r] and not ok[r + 1]:
                        failures += 1
                if ok[half + 1] != ok[half + 2]:
                    failures += 1
            self._expect("monotonicity", f"counterexamples, n={n}", failures, 0)

    def _suite_symmetry(self) -> None:
        for n in range(3, min(7, self.max_n) + 1, 2):
            counts = [self._t_r(n, r) for r in range(1, n + 2)]
            self._expect("symmetry", f"t_i({n}) mirrored", counts, counts[::-1])
        for n in range(1, min(5, self.max_n) + 1, 2):
            failures = sum(
                1
                for p in all_permutations(n)
                for r in range(1, n + 2)
                if is_r_toppleable(p, r) != is_r_toppleable(hat(p), n + 2 - r)
            )
            self._expect("symmetry", f"hat symmetry elementwise, n={n}", failures, 0)

    def _suite_seidel(self) -> None:
        triangle = seidel(10)
        for n, row in ReferenceValues.SEIDEL_ROWS.items():
            self._expect("seidel", f"row {n}", triangle.rows[n - 1], row)
        size = len(ReferenceValues.GENOCCHI_FIRST)
        self._expect("seidel", "g sequence", [genocchi_first(i) for i in range(1, size + 1)],
                     list(ReferenceValues.GENOCCHI_FIRST))
        self._expect("seidel", "H sequence", [genocchi_median(i) for i in range(1, size + 1)],
                     list(ReferenceValues.GENOCCHI_MEDIAN))
        self._expect("seidel", "h sequence", [normalized_median(i) for i in range(size)],
                     list(ReferenceValues.GENOCCHI_NORMALIZED))
        self._expect("seidel", "median identity",
                     [han_zeng_median(i) for i in range(size - 1)],
                     [genocchi_median(i + 1) for i in range(size - 1)])

    def _suite_collapsed(self) -> None:
        for n, expected in ReferenceValues.COLLAPSED_COUNTS.items():
            if n > self.max_n:
                continue
            members = [c.permutation for c in enumerate_collapsed(n)]
            self._expect("collapsed", f"|G_{n}|", len(members), expected)
            if n % 2:
                half = (n - 1) // 2
                images = [collapsed_to_excedance(p) for p in members]
                target = set(range(1, 2 * half, 2))
                good = all(excedance_set(s) == target for s in images)
                back = all(excedance_to_collapsed(s) == p for s, p in zip(images, members))
                self._record("collapsed", f"excedance map on G_{n}",
                             good and back and len(set(images)) == len(images))
                odd_class = sum(1 for _ in enumerate_by_excedance_set(n, target))
                self._expect("collapsed", f"excedance class size for G_{n}", odd_class, expected)
            elif n >= 4:
                admissible = [p for p in members if is_admissible(p)]
                configs = [collapsed_to_dellac(p) for p in admissible]
                back = all(dellac_to_collapsed(d) == p for d, p in zip(configs, admissible))
                self._expect("collapsed", f"admissible share of G_{n}",
                             len(admissible) * 2 ** (n // 2 - 1), expected)
                self._record("collapsed", f"Dellac map on G_{n}",
                             back and len(set(configs)) == len(configs))
        for order in range(1, 6):
            self._expect("collapsed", f"Dellac count, order {order}",
                         sum(1 for _ in enumerate_dellac(order)), normalized_median(order))

    def _suite_chain(self) -> None:
        for n in range(2, min(8, self.max_n) + 1):
            left, right = (n + 1) // 2, n // 2 + 1
            k = CompleteMultipartiteGraph(part_sizes=(left, right)).to_graph()
            self._expect("chain", f"AUSO count of K_{left},{right}",
                         count_auso_brute(k, left, self.workers), ReferenceValues.TOPPLEABLE[n])
        for n in range(2, min(8, self.max_n) + 1):
            m = (n - 1) // 2
            toppleable = [p for p in all_permutations(n) if is_structurally_toppleable(p)]
            images = [toppleable_to_auso(p) for p in toppleable]
            back = all(auso_to_toppleable(o, m) == p for o, p in zip(images, toppleable))
            distinct = len({o.mask for o in images}) == len(images)
            self._record("chain", f"toppleable to AUSO bijection, n={n}", back and distinct)
            exc_ok = all(exc_to_topp(topp_to_exc(p)) == p for p in toppleable)
            self._record("chain", f"toppleable to excedance round trip, n={n}", exc_ok)
        for total in range(1, min(8, self.max_n) + 1):
            for m in range(0, total):
                n_right = total - m
                perms = list(enumerate_class(ExcedanceClass(n=total, m=m)))
                forward = all(auso_to_exc(exc_to_auso(p, m), m) == p for p in perms)
                orientations = list(no_left_sink_orientations(m, n_right))
                backward = all(exc_to_auso(auso_to_exc(o, m), m).mask == o.mask for o in orientations)
                self._record(
                    "chain", f"f round trips, m={m}, n={n_right}",
                    forward and backward and len(perms) == len(orientations),
                    f"{len(perms)} permutations, {len(orientations)} orientations",
                )

    def _suite_formulas(self) -> None:
        for vertices in range(2, min(8, self.max_n) + 1):
            for parts in _partitions(vertices):
                if len(parts) < 2:
                    continue
                k = CompleteMultipartiteGraph(part_sizes=parts).to_graph()
                if k.edge_count > 18:
                    continue
                self._expect("formulas", f"AO of K{parts}",
                             count_ao_multipartite(parts), count_ao_brute(k, self.workers))
                self._expect("formulas", f"AUSO of K{parts}",
                             count_auso_multipartite(parts), count_auso_brute(k, 1, self.workers))
                self._expect("formulas", f"AO of K{parts} reversed",
                             count_ao_multipartite(parts[::-1]), count_ao_multipartite(parts))
                if vertices <= 7:
                    self._expect("formulas", f"canonical sorts of K{parts}",
                                 sum(1 for _ in canonical_sorts(CompleteMultipartiteGraph(part_sizes=parts))),
                                 count_ao_multipartite(parts))
        for total in range(2, min(10, self.max_n + 2) + 1):
            for m in range(1, total):
                n_rest = total - m
                sizes = exc_class_sizes(m, n_rest)
                self._record("formulas", f"a_{{{total},{m}}} three ways", len(set(sizes)) == 1, str(sizes))
                self._expect("formulas", f"a_{{{total},{m}}} symmetry",
                             count_class_formula(m, n_rest), count_class_formula(n_rest - 1, m + 1))
        self._expect("formulas", "R(2,3)", count_R_bipartite(2, 3), 31)
        self._expect("formulas", "R(3,4)", count_R_bipartite(3, 4), 675)

    def _suite_stanley(self) -> None:
        for n in range(1, min(5, self.max_n) + 1):
            failures = 0
            for g in _all_graphs(n):
                coeffs = chromatic_polynomial(g)
                ao, unique = sink_census(g)
                if ao != abs(evaluate_polynomial(coeffs, -1)):
                    failures += 1
                linear = abs(coeffs[1])
                if is_connected(g) and any(count != linear for count in unique.values()):
                    failures += 1
                if not is_connected(g) and linear != 0:
                    failures += 1
            self._expect("stanley", f"chromatic identities on all graphs, n={n}", failures, 0)
        for n in range(2, min(4, self.max_n) + 1):
            failures = 0
            for g in _all_graphs(n):
                _, unique = sink_census(g)
                for e in g.edges:
                    _, deleted = sink_census(delete(g, e))
                    _, contracted = sink_census(contract(g, e))
                    mapping = contraction_map(g, e)
                    failures += sum(
                        1 for s in range(1, n + 1)
                        if unique[s] != deleted[s] + contracted[mapping[s]]
                    )
            self._expect("stanley", f"deletion-contraction for fixed sinks, n={n}", failures, 0)
        for vertices in range(2, min(8, self.max_n) + 1):
            failing = [
                parts for parts in _partitions(vertices)
                if len(parts) >= 2 and not stanley_recurrence_check(parts)
            ]
            self._expect("stanley", f"part recurrence, {vertices} vertices", failing, [])

    def _suite_turan(self) -> None:
        for n, row in ReferenceValues.TURAN_AUSO.items():
            if n > self.max_n:
                continue
            self._expect("turan", f"u_{{{n},r}}", [turan_u(n, r) for r in range(1, n + 1)], row)
            for r in range(1, n + 1):
                if n - r <= r:
                    self._expect("turan", f"u_{{{n},{r}}} both paths",
                                 turan_u(n, r, "formula"), turan_u(n, r, "multipartite"))
        for k in range(0, 5):
            for r in range(max(k, 1), max(k, 1) + 4):
                self._expect("turan", f"delta^{k} at {r + k}",
                             turan_u(r + k, r), delta_power_entry(k, r + k))

    def _suite_extremal(self) -> None:
        for n in range(2, min(6, self.max_n) + 1):
            total = comb(n, 2)
            for m in range(total - n // 2, total + 1):
                result = find_max_ao(n, m, self.workers)
                self._expect("extremal", f"max AO n={n}, m={m}",
                             count_ao_chromatic(complement_of_matching(n, m)), result.max_count)
                failures = 0
                for g in _graphs_with_edges(n, m):
                    final, _ = reduce_to_matching_complement(g)
                    degrees = Counter(v for edge in final.complement().edges for v in edge)
                    if any(d > 1 for d in degrees.values()):
                        failures += 1
                    elif count_ao_chromatic(final) < count_ao_chromatic(g):
                        failures += 1
                self._expect("extremal", f"slide reduction n={n}, m={m}", failures, 0)
        for n in range(2, min(5, self.max_n) + 1):
            failures = 0
            for g in _all_graphs(n):
                base = count_ao_chromatic(g)
                for u, v in g.edges:
                    for a, b in ((u, v), (v, u)):
                        for c in range(1, n + 1):
                            if not slide_applicable(g, (a, b), c):
                                continue
                            if count_ao_chromatic(apply_slide(g, (a, b), c)) < base:
                                failures += 1
                            if not check_slide_identities(g, (a, b), c):
                                failures += 1
            self._expect("extremal", f"slide monotonicity, n={n}", failures, 0)
