"""
Edge slides and the exhaustive search for graphs with the most acyclic
orientations among graphs with n vertices and m edges.
"""
from collections import Counter
from itertools import combinations
from math import comb
from typing import Dict, FrozenSet, List, Sequence, Tuple

import networkx as nx
from pydantic import BaseModel, Field

from src.graphs.orientations import (
    EnumerationBudgetError,
    contract,
    contraction_map,
    count_ao_chromatic,
    delete,
)
from src.utils.constants import EnumerationConstants
from src.utils.logger import logger
from src.utils.models import Count, Graph
from src.utils.parallel import parallel_map


class ExtremalError(Exception):
    """Base exception for slide and extremal-scan errors."""

    pass


class ExtremalResult(BaseModel):
    """Maximum AO count over all labeled graphs with n vertices and m edges"""
    n: int
    m: int
    max_count: Count
    maximizers: List[Graph] = Field(default_factory=list)
    # degree sequence (descending, comma-joined) -> number of maximizers
    by_degree_sequence: Dict[str, int] = Field(default_factory=dict)


def slide_applicable(g: Graph, e: Tuple[int, int], c: int) -> bool:
    """
    Whether edge (a, b) may slide to (c, b): N(a) minus b must contain
    N(b) minus a, and (c, b) must be a non-edge with c != b.

    Raises:
        ExtremalError: If (a, b) is not an edge or c is not a vertex
    """
    a, b = e
    if not g.has_edge(a, b):
        raise ExtremalError(f"Edge {e} not in graph")
    if not 1 <= c <= g.vertex_count:
        raise ExtremalError(f"Vertex {c} not in graph")
    if c in (a, b) or g.has_edge(c, b):
        return False
    return (g.neighbors(a) - {b}) >= (g.neighbors(b) - {a})


def apply_slide(g: Graph, e: Tuple[int, int], c: int) -> Graph:
    """
    G minus (a, b) plus (c, b).

    Raises:
        ExtremalError: If the slide is not applicable
    """
    if not slide_applicable(g, e, c):
        raise ExtremalError(f"Slide of {e} to {c} is not applicable")
    a, b = e
    removed = (min(a, b), max(a, b))
    edges = [x for x in g.edges if x != removed] + [(min(b, c), max(b, c))]
    return Graph(vertex_count=g.vertex_count, edges=edges)


def complement_of_matching(n: int, m: int) -> Graph:
    """
    K_n minus the disjoint edges (1,2), (3,4), ... (C(n,2) - m of them).

    Raises:
        ExtremalError: If fewer than C(n,2) - floor(n/2) or more than C(n,2) edges
    """
    total = comb(n, 2)
    removed = total - m
    if m > total or removed > n // 2:
        raise ExtremalError(f"m={m} is outside {total - n // 2}..{total} for n={n}")
    matching = {(2 * i + 1, 2 * i + 2) for i in range(removed)}
    edges = [e for e in combinations(range(1, n + 1), 2) if e not in matching]
    return Graph(vertex_count=n, edges=edges)


def reduce_to_matching_complement(g: Graph) -> Tuple[Graph, List[Tuple[int, int, int]]]:
    """
    Slide edges until the complement is a matching.

    Each step takes a vertex a isolated in the complement, a complement
    edge (x, y) with x of complement degree at least 2, and slides
    (a, y) to (x, y).

    Returns:
        Final graph and the applied slides as (a, b, c) triples

    Raises:
        ExtremalError: If the complement has no isolated vertex to slide to
    """
    current = g
    slides: List[Tuple[int, int, int]] = []
    while True:
        comp = current.complement()
        degree = Counter(v for edge in comp.edges for v in edge)
        heavy = [v for v in range(1, g.vertex_count + 1) if degree[v] >= 2]
        if not heavy:
            return current, slides
        isolated = [v for v in range(1, g.vertex_count + 1) if degree[v] == 0]
        if not isolated:
            raise ExtremalError("Complement has no isolated vertex")
        a, x = isolated[0], heavy[0]
        y = min(comp.neighbors(x))
        current = apply_slide(current, (a, y), x)
        slides.append((a, y, x))


def contracted_edges(g: Graph, e: Tuple[int, int], keep: int) -> FrozenSet[Tuple[int, int]]:
    """
    Edges of G/e written in G's labels, the merged vertex named `keep`.

    Raises:
        ExtremalError: If keep is not an endpoint of e
    """
    if keep not in e:
        raise ExtremalError(f"Vertex {keep} is not an endpoint of {e}")
    dropped = e[1] if keep == e[0] else e[0]
    original = {new: v for v, new in contraction_map(g, e).items() if v != dropped}
    return frozenset(
        (min(original[u], original[v]), max(original[u], original[v]))
        for u, v in contract(g, e).edges
    )


def check_slide_identities(g: Graph, e: Tuple[int, int], c: int) -> bool:
    """G minus e equals G' minus e', G/e is isomorphic to G minus b, and
    G/e is a subgraph of G'/e' once a and c stand for the merged vertices"""
    a, b = e
    slid = apply_slide(g, e, c)
    if delete(g, e).edge_set != delete(slid, (c, b)).edge_set:
        return False

    without_b = g.to_networkx()
    without_b.remove_node(b)
    if not nx.is_isomorphic(contract(g, e).to_networkx(), without_b):
        return False

    return contracted_edges(g, e, a) <= contracted_edges(slid, (c, b), c)


def _degree_key(g: Graph) -> str:
    degree = Counter(v for edge in g.edges for v in edge)
    return ",".join(str(d) for d in sorted((degree[v] for v in range(1, g.vertex_count + 1)), reverse=True))


def _scan_first_edge(n: int, m: int, all_edges: Sequence[Tuple[int, int]],
                     first: int) -> Tuple[int, List[Tuple[Tuple[int, int], ...]]]:
    """Best AO count among edge sets whose smallest edge index is `first`"""
    best = -1
    winners: List[Tuple[Tuple[int, int], ...]] = []
    head = all_edges[first]
    for tail in combinations(all_edges[first + 1:], m - 1):
        edges = (head,) + tail
        value = count_ao_chromatic(Graph.model_construct(vertex_count=n, edges=edges))
        if value > best:
            best, winners = value, [edges]
        elif value == best:
            winners.append(edges)
    return best, winners


def find_max_ao(n: int, m: int, workers: int = 1) -> ExtremalResult:
    """
    Exhaustive scan over all labeled graphs on n vertices with m edges.

    Raises:
        EnumerationBudgetError: If n exceeds 7
        ExtremalError: If m is not in 0..C(n,2)
    """
    if n > EnumerationConstants.MAX_EXTREMAL_VERTICES:
        raise EnumerationBudgetError(
            f"n={n} exceeds the extremal scan budget of {EnumerationConstants.MAX_EXTREMAL_VERTICES}"
        )
    if n < 1 or not 0 <= m <= comb(n, 2):
        raise ExtremalError(f"m must lie in 0..{comb(n, 2)} for n={n}")

    all_edges = list(combinations(range(1, n + 1), 2))
    if m == 0:
        parts = [(count_ao_chromatic(Graph(vertex_count=n)), [()])]
    else:
        tasks = [(n, m, all_edges, i) for i in range(len(all_edges) - m + 1)]
        logger.info(f"Scanning {comb(len(all_edges), m)} graphs with n={n}, m={m}")
        parts = parallel_map(_scan_first_edge, tasks, workers)

    best = max(value for value, _ in parts)
    maximizers = [
        Graph(vertex_count=n, edges=edges)
        for value, winners in parts if value == best
        for edges in winners
    ]
    groups = Counter(_degree_key(g) for g in maximizers)
    return ExtremalResult(
        n=n,
        m=m,
        max_count=best,
        maximizers=maximizers,
        by_degree_sequence=dict(sorted(groups.items())),
    )
