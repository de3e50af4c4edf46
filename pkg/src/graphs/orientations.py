"""
Orientations of simple graphs: acyclicity, sinks, brute-force AO/AUSO
counts over edge bitmasks, canonical sorts of complete multipartite
graphs, deletion-contraction and the chromatic polynomial.
"""
from functools import lru_cache
from typing import Dict, Iterator, List, Optional, Sequence, Set, Tuple

import networkx as nx

from src.utils.constants import EnumerationConstants
from src.utils.logger import logger
from src.utils.models import (
    CompleteMultipartiteGraph,
    Count,
    Graph,
    Orientation,
    TopologicalSort,
)
from src.utils.parallel import parallel_sum, split_range


class GraphError(Exception):
    """Base exception for graph and orientation errors."""

    pass


class EdgeNotFoundError(GraphError):
    """Raised when an edge is not present in the graph."""

    pass


class EnumerationBudgetError(GraphError):
    """Raised when an exhaustive scan would exceed its budget."""

    pass


def _check_edge_budget(g: Graph, limit: int = EnumerationConstants.MAX_ORIENTATION_EDGES) -> None:
    if g.edge_count > limit:
        raise EnumerationBudgetError(
            f"{g.edge_count} edges exceed the enumeration budget of {limit}"
        )


def _out_masks(n: int, edges: Sequence[Tuple[int, int]], mask: int) -> List[int]:
    """Out-neighbourhood bitmask per 0-indexed vertex"""
    out = [0] * n
    for i, (u, v) in enumerate(edges):
        if (mask >> i) & 1:
            out[v - 1] |= 1 << (u - 1)
        else:
            out[u - 1] |= 1 << (v - 1)
    return out


def _acyclic(out: List[int]) -> bool:
    """Repeatedly strip sinks of the remaining subgraph"""
    remaining = (1 << len(out)) - 1
    while remaining:
        sinks = 0
        rest = remaining
        while rest:
            low = rest & -rest
            v = low.bit_length() - 1
            if not out[v] & remaining:
                sinks |= low
            rest ^= low
        if not sinks:
            return False
        remaining &= ~sinks
    return True


def is_acyclic(o: Orientation) -> bool:
    return _acyclic(_out_masks(o.graph.vertex_count, o.graph.edges, o.mask))


def sinks(o: Orientation) -> Set[int]:
    """Vertices with no outgoing arc (isolated vertices included)"""
    out = _out_masks(o.graph.vertex_count, o.graph.edges, o.mask)
    return {v + 1 for v, m in enumerate(out) if not m}


def sources(o: Orientation) -> Set[int]:
    indeg = [0] * (o.graph.vertex_count + 1)
    for _, head in o.arcs():
        indeg[head] += 1
    return {v for v in range(1, o.graph.vertex_count + 1) if not indeg[v]}


def _count_ao_chunk(n: int, edges: Tuple[Tuple[int, int], ...], start: int, stop: int) -> int:
    count = 0
    for mask in range(start, stop):
        if _acyclic(_out_masks(n, edges, mask)):
            count += 1
    return count


def _count_auso_chunk(n: int, edges: Tuple[Tuple[int, int], ...], sink: int,
                      start: int, stop: int) -> int:
    s = sink - 1
    count = 0
    for mask in range(start, stop):
        out = _out_masks(n, edges, mask)
        if out[s]:
            continue
        if any(not m for v, m in enumerate(out) if v != s):
            continue
        if _acyclic(out):
            count += 1
    return count


def count_ao_brute(g: Graph, workers: int = 1) -> Count:
    """
    Number of acyclic orientations by scanning all 2^m edge masks.

    Raises:
        EnumerationBudgetError: If the graph has more than 20 edges
    """
    _check_edge_budget(g)
    total = 1 << g.edge_count
    tasks = [(g.vertex_count, g.edges, r.start, r.stop) for r in split_range(total, workers)]
    logger.debug(f"Scanning {total} orientations for acyclicity")
    return parallel_sum(_count_ao_chunk, tasks, workers)


def count_auso_brute(g: Graph, s: int, workers: int = 1) -> Count:
    """
    Number of acyclic orientations whose unique sink is s.

    Raises:
        EnumerationBudgetError: If the graph has more than 20 edges
        GraphError: If s is not a vertex
    """
    _check_edge_budget(g)
    if not 1 <= s <= g.vertex_count:
        raise GraphError(f"Sink {s} is not a vertex of the graph")
    total = 1 << g.edge_count
    tasks = [(g.vertex_count, g.edges, s, r.start, r.stop) for r in split_range(total, workers)]
    return parallel_sum(_count_auso_chunk, tasks, workers)


def sink_census(g: Graph) -> Tuple[Count, Dict[int, Count]]:
    """
    One scan over all orientations: the AO count and, per vertex s, the
    number of acyclic orientations whose only sink is s.
    """
    _check_edge_budget(g)
    n = g.vertex_count
    ao = 0
    unique = {v: 0 for v in range(1, n + 1)}
    for mask in range(1 << g.edge_count):
        out = _out_masks(n, g.edges, mask)
        if not _acyclic(out):
            continue
        ao += 1
        found = [v for v, m in enumerate(out) if not m]
        if len(found) == 1:
            unique[found[0] + 1] += 1
    return ao, unique


def enumerate_orientations(g: Graph, acyclic_only: bool = True,
                           sink: Optional[int] = None) -> Iterator[Orientation]:
    """Orientations in mask order, optionally only acyclic / with unique sink"""
    _check_edge_budget(g)
    n = g.vertex_count
    for mask in range(1 << g.edge_count):
        out = _out_masks(n, g.edges, mask)
        if sink is not None:
            if out[sink - 1] or any(not m for v, m in enumerate(out) if v != sink - 1):
                continue
        if (acyclic_only or sink is not None) and not _acyclic(out):
            continue
        yield Orientation.model_construct(graph=g, mask=mask)


def orientation_from_sort(g: Graph, order: Sequence[int]) -> Orientation:
    """Orient every edge from the earlier to the later vertex of `order`"""
    position = {v: i for i, v in enumerate(order)}
    if len(position) != g.vertex_count or set(position) != set(range(1, g.vertex_count + 1)):
        raise GraphError("Order must list every vertex exactly once")
    mask = 0
    for i, (u, v) in enumerate(g.edges):
        if position[u] > position[v]:
            mask |= 1 << i
    return Orientation.model_construct(graph=g, mask=mask)


def canonical_sort(o: Orientation, key=None) -> TopologicalSort:
    """
    Topological sort taking the smallest available vertex first.

    Raises:
        GraphError: If the orientation has a directed cycle
    """
    try:
        order = list(nx.lexicographical_topological_sort(o.to_networkx(), key=key))
    except nx.NetworkXUnfeasible as e:
        raise GraphError("Orientation has a directed cycle") from e
    return TopologicalSort.model_construct(order=tuple(order))


def canonical_sorts(k: CompleteMultipartiteGraph) -> Iterator[TopologicalSort]:
    """
    Vertex orders in which every run of consecutive same-part vertices
    increases; these are in bijection with the acyclic orientations.

    Raises:
        EnumerationBudgetError: If K has more than 10 vertices
    """
    n = k.vertex_count
    if n > EnumerationConstants.MAX_SORT_VERTICES:
        raise EnumerationBudgetError(
            f"{n} vertices exceed the canonical sort budget of {EnumerationConstants.MAX_SORT_VERTICES}"
        )
    part = k.part_index()
    used = [False] * (n + 1)
    order: List[int] = []

    def extend() -> Iterator[Tuple[int, ...]]:
        if len(order) == n:
            yield tuple(order)
            return
        last = order[-1] if order else None
        for v in range(1, n + 1):
            if used[v]:
                continue
            if last is not None and part[v] == part[last] and v < last:
                continue
            used[v] = True
            order.append(v)
            yield from extend()
            order.pop()
            used[v] = False

    for seq in extend():
        yield TopologicalSort.model_construct(order=seq)


def delete(g: Graph, e: Tuple[int, int]) -> Graph:
    """
    G minus edge e.

    Raises:
        EdgeNotFoundError: If e is not an edge of g
    """
    edge = (min(e), max(e))
    if edge not in g.edge_set:
        raise EdgeNotFoundError(f"Edge {e} not in graph")
    return Graph(vertex_count=g.vertex_count, edges=[x for x in g.edges if x != edge])


def contraction_map(g: Graph, e: Tuple[int, int]) -> Dict[int, int]:
    """Vertex relabeling of G/e: the larger endpoint merges into the smaller,
    labels above it shift down by one"""
    a, b = min(e), max(e)
    mapping = {}
    for v in range(1, g.vertex_count + 1):
        if v == b:
            mapping[v] = a
        elif v > b:
            mapping[v] = v - 1
        else:
            mapping[v] = v
    return mapping


def contract(g: Graph, e: Tuple[int, int]) -> Graph:
    """
    G/e: merge the endpoints, drop the loop and parallel duplicates.

    Raises:
        EdgeNotFoundError: If e is not an edge of g
    """
    edge = (min(e), max(e))
    if edge not in g.edge_set:
        raise EdgeNotFoundError(f"Edge {e} not in graph")
    mapping = contraction_map(g, edge)
    seen = set()
    edges = []
    for u, v in g.edges:
        x, y = mapping[u], mapping[v]
        if x == y:
            continue
        pair = (min(x, y), max(x, y))
        if pair not in seen:
            seen.add(pair)
            edges.append(pair)
    return Graph(vertex_count=g.vertex_count - 1, edges=edges)


def _poly_sub(a: Tuple[int, ...], b: Tuple[int, ...]) -> Tuple[int, ...]:
    size = max(len(a), len(b))
    return tuple(
        (a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0) for i in range(size)
    )


def _falling_factorial(n: int) -> Tuple[int, ...]:
    """Coefficients of q (q-1) ... (q-n+1)"""
    coeffs = [1]
    for j in range(n):
        nxt = [0] * (len(coeffs) + 1)
        for i, c in enumerate(coeffs):
            nxt[i + 1] += c
            nxt[i] -= j * c
        coeffs = nxt
    return tuple(coeffs)


@lru_cache(maxsize=EnumerationConstants.CHROMATIC_CACHE_SIZE)
def _chromatic(n: int, edges: Tuple[Tuple[int, int], ...]) -> Tuple[int, ...]:
    if not edges:
        return (0,) * n + (1,)
    if len(edges) == n * (n - 1) // 2:
        return _falling_factorial(n)
    u, v = edges[-1]
    rest = edges[:-1]
    deleted = _chromatic(n, rest)
    # contract v into u
    merged = set()
    for x, y in rest:
        x = u if x == v else (x - 1 if x > v else x)
        y = u if y == v else (y - 1 if y > v else y)
        if x != y:
            merged.add((min(x, y), max(x, y)))
    contracted = _chromatic(n - 1, tuple(sorted(merged)))
    return _poly_sub(deleted, contracted)


def chromatic_polynomial(g: Graph) -> List[int]:
    """
    Coefficients of the chromatic polynomial, lowest degree first.

    Raises:
        EnumerationBudgetError: If the graph has more edges than the budget
    """
    _check_edge_budget(g, EnumerationConstants.MAX_CHROMATIC_EDGES)
    coeffs = list(_chromatic(g.vertex_count, tuple(sorted(g.edges))))
    return coeffs + [0] * (g.vertex_count + 1 - len(coeffs))


def evaluate_polynomial(coeffs: Sequence[int], q: int) -> int:
    value = 0
    for c in reversed(coeffs):
        value = value * q + c
    return value


def count_ao_chromatic(g: Graph) -> Count:
    """|chi(-1)|, the number of acyclic orientations"""
    return abs(evaluate_polynomial(chromatic_polynomial(g), -1))


def count_auso_chromatic(g: Graph) -> Count:
    """|linear coefficient of chi|, the AUSO count for any fixed sink"""
    coeffs = chromatic_polynomial(g)
    return abs(coeffs[1]) if len(coeffs) > 1 else 0


def is_connected(g: Graph) -> bool:
    return g.vertex_count > 0 and nx.is_connected(g.to_networkx())
