"""
Bijections linking toppleable permutations, permutations with excedance
set {1..m}, and acyclic orientations of complete bipartite graphs.

Vertex labels of K_{m,n}: L = 1..m, R = m+1..m+n.
"""
from typing import Iterator, List, Tuple

from src.combinatorics.perm_core import excedance_set, from_cycles, to_cycles
from src.combinatorics.toppling import is_structurally_toppleable
from src.graphs.orientations import (
    canonical_sort,
    enumerate_orientations,
    is_acyclic,
    orientation_from_sort,
    sinks,
)
from src.utils.models import (
    CompleteMultipartiteGraph,
    CycleDecomposition,
    Graph,
    Orientation,
    Permutation,
)


class BijectionError(Exception):
    """Raised when an input lies outside a bijection's domain."""

    pass


def _reverse_complement_blocks(word: Tuple[int, ...], split: int) -> Tuple[int, ...]:
    n = len(word)
    comp = [n + 1 - v for v in word]
    return tuple(comp[:split][::-1] + comp[split:][::-1])


def topp_to_exc(p: Permutation) -> Permutation:
    """
    Reverse-complement the first floor((n-1)/2) entries and the rest
    separately; the image has excedance set {1, ..., floor((n-1)/2)}.

    Raises:
        BijectionError: If p fails the structural toppleability test
    """
    if not is_structurally_toppleable(p):
        raise BijectionError(f"{p} is not toppleable")
    return Permutation.trusted(_reverse_complement_blocks(p.word, (p.n - 1) // 2))


def exc_to_topp(sigma: Permutation) -> Permutation:
    """Inverse of topp_to_exc"""
    split = (sigma.n - 1) // 2
    if excedance_set(sigma) != set(range(1, split + 1)):
        raise BijectionError(f"{sigma} does not have excedance set {{1..{split}}}")
    return Permutation.trusted(_reverse_complement_blocks(sigma.word, split))


def bipartite_graph(m: int, n: int) -> Graph:
    """K_{m,n}; with m = 0 this is n isolated vertices"""
    if m < 0 or n < 1:
        raise BijectionError(f"Need m >= 0 and n >= 1, got m={m}, n={n}")
    if m == 0:
        return Graph(vertex_count=n)
    return CompleteMultipartiteGraph(part_sizes=(m, n)).to_graph()


def exc_to_auso(p: Permutation, m: int) -> Orientation:
    """
    Concatenate the canonical cycles of p into a topological sort of
    K_{m, n-m}; the induced orientation has no sink in L.

    Raises:
        BijectionError: If the excedance set of p is not {1..m}
    """
    if excedance_set(p) != set(range(1, m + 1)):
        raise BijectionError(f"{p} does not have excedance set {{1..{m}}}")
    graph = bipartite_graph(m, p.n - m)
    order = [v for cycle in to_cycles(p).cycles for v in cycle]
    return orientation_from_sort(graph, order)


def tie_break_sort(o: Orientation, m: int) -> Tuple[int, ...]:
    """Topological sort with incomparable L vertices ascending, R vertices descending"""
    return canonical_sort(o, key=lambda v: v if v <= m else -v).order


def cut_into_cycles(order: Tuple[int, ...], n: int) -> CycleDecomposition:
    """Repeatedly split off the suffix starting at the smallest remaining entry"""
    remaining = list(order)
    cycles: List[Tuple[int, ...]] = []
    while remaining:
        idx = remaining.index(min(remaining))
        cycles.insert(0, tuple(remaining[idx:]))
        remaining = remaining[:idx]
    return CycleDecomposition(n=n, cycles=tuple(cycles))


def _check_no_left_sink(o: Orientation, m: int) -> None:
    if not is_acyclic(o):
        raise BijectionError("Orientation has a directed cycle")
    left_sinks = {v for v in sinks(o) if v <= m}
    if left_sinks:
        raise BijectionError(f"Orientation has sinks in L: {sorted(left_sinks)}")


def auso_to_exc(o: Orientation, m: int) -> Permutation:
    """
    Inverse of exc_to_auso.

    Raises:
        BijectionError: If o is not an acyclic orientation of K_{m,n}
            without sinks in L
    """
    n_right = o.graph.vertex_count - m
    if o.graph.edge_set != bipartite_graph(m, n_right).edge_set:
        raise BijectionError(f"Orientation is not on K_{{{m},{n_right}}}")
    _check_no_left_sink(o, m)
    order = tie_break_sort(o, m)
    return from_cycles(cut_into_cycles(order, o.graph.vertex_count))


def _orientation_from_arcs(graph: Graph, arcs) -> Orientation:
    arc_set = set(arcs)
    mask = 0
    for i, (u, v) in enumerate(graph.edges):
        if (v, u) in arc_set:
            mask |= 1 << i
    return Orientation.model_construct(graph=graph, mask=mask)


def extend_to_auso(o: Orientation, m: int) -> Orientation:
    """
    Add a sink m+1 to L (R labels shift up by one); the result is an
    AUSO of K_{m+1,n} with unique sink m+1.

    Raises:
        BijectionError: If o is not in R(m, n)
    """
    n_right = o.graph.vertex_count - m
    _check_no_left_sink(o, m)

    def shift(v: int) -> int:
        return v if v <= m else v + 1

    sink = m + 1
    arcs = [(shift(a), shift(b)) for a, b in o.arcs()]
    arcs.extend((r, sink) for r in range(m + 2, m + n_right + 2))
    return _orientation_from_arcs(bipartite_graph(m + 1, n_right), arcs)


def restrict_from_auso(o: Orientation, m: int) -> Orientation:
    """Inverse of extend_to_auso: remove the sink m+1 of K_{m+1,n}"""
    sink = m + 1
    if sinks(o) != {sink} or not is_acyclic(o):
        raise BijectionError(f"Orientation does not have unique sink {sink}")
    n_right = o.graph.vertex_count - m - 1

    def unshift(v: int) -> int:
        return v if v <= m else v - 1

    arcs = [(unshift(a), unshift(b)) for a, b in o.arcs() if sink not in (a, b)]
    return _orientation_from_arcs(bipartite_graph(m, n_right), arcs)


def no_left_sink_orientations(m: int, n: int) -> Iterator[Orientation]:
    """R(m, n) in mask order"""
    for o in enumerate_orientations(bipartite_graph(m, n)):
        if all(v > m for v in sinks(o)):
            yield o


def toppleable_to_auso(p: Permutation) -> Orientation:
    """Chain topp_to_exc, exc_to_auso, extend_to_auso into K_{ceil(n/2), floor(n/2)+1}"""
    m = (p.n - 1) // 2
    return extend_to_auso(exc_to_auso(topp_to_exc(p), m), m)


def auso_to_toppleable(o: Orientation, m: int) -> Permutation:
    """Inverse of toppleable_to_auso; m = floor((n-1)/2)"""
    return exc_to_topp(auso_to_exc(restrict_from_auso(o, m), m))
