"""
Base models and data structures
"""
from itertools import combinations
from typing import Dict, FrozenSet, List, Optional, Tuple

import networkx as nx
from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from src.utils.constants import EnumerationConstants

# Exact enumeration results; Python ints are arbitrary precision
Count = int


class Permutation(BaseModel):
    """Permutation of [n] in one-line notation (1-indexed values)"""
    model_config = ConfigDict(frozen=True)

    word: Tuple[int, ...]

    @field_validator("word")
    @classmethod
    def check_bijection(cls, v: Tuple[int, ...]) -> Tuple[int, ...]:
        if len(v) < 1:
            raise ValueError("A permutation needs at least one entry")
        if sorted(v) != list(range(1, len(v) + 1)):
            raise ValueError(f"{v} is not a permutation of 1..{len(v)}")
        return v

    @classmethod
    def trusted(cls, word) -> "Permutation":
        """Build without validation; for words produced by exhaustive scans"""
        return cls.model_construct(word=tuple(word))

    @property
    def n(self) -> int:
        return len(self.word)

    def __call__(self, i: int) -> int:
        """Value at 1-indexed position i"""
        return self.word[i - 1]

    def __str__(self) -> str:
        return ",".join(str(v) for v in self.word)


class CycleDecomposition(BaseModel):
    """Cycles in canonical form

    Each cycle starts with its least element; cycles are listed by
    decreasing least element, left to right.
    """
    model_config = ConfigDict(frozen=True)

    n: int = Field(ge=1)
    cycles: Tuple[Tuple[int, ...], ...]

    @model_validator(mode="after")
    def check_canonical(self) -> "CycleDecomposition":
        values = [v for cycle in self.cycles for v in cycle]
        if sorted(values) != list(range(1, self.n + 1)):
            raise ValueError("Cycles must partition 1..n")
        leaders = []
        for cycle in self.cycles:
            if not cycle:
                raise ValueError("Empty cycle")
            if cycle[0] != min(cycle):
                raise ValueError(f"Cycle {cycle} must start with its least element")
            leaders.append(cycle[0])
        if leaders != sorted(leaders, reverse=True):
            raise ValueError("Cycles must be ordered by decreasing least element")
        return self


class ChipConfiguration(BaseModel):
    """Labeled chips on the segment L_n = {-floor((n+1)/2), ..., floor(n/2)+1}

    `sites[i]` holds the sorted chips at position i + leftmost.
    """
    model_config = ConfigDict(frozen=True)

    n: int = Field(ge=1)
    sites: Tuple[Tuple[int, ...], ...]

    @model_validator(mode="after")
    def check_configuration(self) -> "ChipConfiguration":
        if len(self.sites) != self.n + 2:
            raise ValueError(f"L_{self.n} has {self.n + 2} sites, got {len(self.sites)}")
        chips = sorted(c for site in self.sites for c in site)
        if chips != list(range(1, self.n + 2)):
            raise ValueError(f"Chips must be exactly 1..{self.n + 1}")
        last_double = None
        for i, site in enumerate(self.sites):
            if len(site) > 2:
                raise ValueError(f"Position {i + self.leftmost} holds {len(site)} chips")
            if tuple(sorted(site)) != site:
                raise ValueError("Chips within a site must be sorted")
            if len(site) == 2:
                if last_double is not None and all(self.sites[j] for j in range(last_double + 1, i)):
                    raise ValueError("Doubly occupied sites must be separated by an empty site")
                last_double = i
        return self

    @property
    def leftmost(self) -> int:
        return -((self.n + 1) // 2)

    @property
    def rightmost(self) -> int:
        return self.n // 2 + 1

    @property
    def positions(self) -> range:
        return range(self.leftmost, self.rightmost + 1)

    def chips_at(self, position: int) -> Tuple[int, ...]:
        if position not in self.positions:
            raise ValueError(f"Position {position} is outside L_{self.n}")
        return self.sites[position - self.leftmost]

    def as_mapping(self) -> Dict[int, Tuple[int, ...]]:
        return {pos: self.sites[pos - self.leftmost] for pos in self.positions}

    def doubly_occupied(self) -> List[int]:
        return [pos for pos in self.positions if len(self.sites[pos - self.leftmost]) == 2]

    def __str__(self) -> str:
        parts = []
        for site in self.sites:
            if not site:
                parts.append("_")
            elif len(site) == 1:
                parts.append(str(site[0]))
            else:
                parts.append(f"({site[0]},{site[1]})")
        return ",".join(parts)


class ToppleOutcome(BaseModel):
    """Result of evolving conf(p, r) until no site holds two chips"""
    result: Permutation
    topple_count: int = Field(ge=0)
    pass_count: Optional[int] = None
    pass_trace: Optional[List[ChipConfiguration]] = None
    # chip -> direction of its last move (-1 left, +1 right)
    final_moves: Dict[int, int] = Field(default_factory=dict)


class ExcedanceClass(BaseModel):
    """Permutations of [n] whose excedance set is exactly {1, ..., m}"""
    model_config = ConfigDict(frozen=True)

    n: int = Field(ge=1)
    m: int = Field(ge=0)

    @model_validator(mode="after")
    def check_range(self) -> "ExcedanceClass":
        if self.m > self.n - 1:
            raise ValueError(f"m must be at most n-1, got m={self.m}, n={self.n}")
        return self


class SeidelTriangle(BaseModel):
    """Rows 1..len(rows) of S_{n,k}; row n stores columns k = 2 .. floor((n+3)/2)"""
    rows: List[List[Count]]

    def entry(self, n: int, k: int) -> Count:
        if n < 1 or n > len(self.rows):
            raise IndexError(f"Row {n} not computed")
        row = self.rows[n - 1]
        if 2 <= k < 2 + len(row):
            return row[k - 2]
        return 0


def collapsed_bounds(n: int, k: int) -> Tuple[int, int]:
    """Allowed 1-indexed positions of value k in a collapsed permutation of [n]"""
    low = (k + 1) // 2 if n % 2 else 1 + k // 2
    high = (n + 1) // 2 + k // 2
    return low, high


class CollapsedPermutation(BaseModel):
    """Permutation whose values sit inside the collapsed position window"""
    model_config = ConfigDict(frozen=True)

    permutation: Permutation

    @model_validator(mode="after")
    def check_window(self) -> "CollapsedPermutation":
        word = self.permutation.word
        n = len(word)
        for pos, k in enumerate(word, start=1):
            low, high = collapsed_bounds(n, k)
            if not low <= pos <= high:
                raise ValueError(f"Value {k} at position {pos} is outside {low}..{high}")
        return self


class DellacConfiguration(BaseModel):
    """Points (row, column) in a 2n x n array; one per row, two per column,
    column j confined to rows j .. n+j"""
    model_config = ConfigDict(frozen=True)

    order: int = Field(ge=1)
    points: Tuple[Tuple[int, int], ...]

    @model_validator(mode="after")
    def check_points(self) -> "DellacConfiguration":
        n = self.order
        if tuple(sorted(self.points)) != self.points:
            raise ValueError("Points must be sorted")
        rows = [r for r, _ in self.points]
        if rows != list(range(1, 2 * n + 1)):
            raise ValueError("Every row needs exactly one point")
        for j in range(1, n + 1):
            in_column = [r for r, c in self.points if c == j]
            if len(in_column) != 2:
                raise ValueError(f"Column {j} needs exactly two points")
            if any(r < j or r > n + j for r in in_column):
                raise ValueError(f"Column {j} points must lie in rows {j}..{n + j}")
        return self


class Graph(BaseModel):
    """Simple undirected graph on vertices 1..vertex_count

    Edges are stored as (u, v) with u < v, in the given order; the order
    fixes the bit positions of orientation masks.
    """
    model_config = ConfigDict(frozen=True)

    vertex_count: int = Field(ge=0, le=EnumerationConstants.MAX_GRAPH_VERTICES)
    edges: Tuple[Tuple[int, int], ...] = ()

    @field_validator("edges", mode="before")
    @classmethod
    def normalize_edges(cls, v):
        return tuple((min(a, b), max(a, b)) for a, b in v)

    @model_validator(mode="after")
    def check_edges(self) -> "Graph":
        seen = set()
        for u, v in self.edges:
            if u == v:
                raise ValueError(f"Loop at vertex {u}")
            if u < 1 or v > self.vertex_count:
                raise ValueError(f"Edge ({u},{v}) outside 1..{self.vertex_count}")
            if (u, v) in seen:
                raise ValueError(f"Duplicate edge ({u},{v})")
            seen.add((u, v))
        return self

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self.edge_set

    @property
    def edge_set(self) -> FrozenSet[Tuple[int, int]]:
        return frozenset(self.edges)

    def neighbors(self, v: int) -> FrozenSet[int]:
        return frozenset(b if a == v else a for a, b in self.edges if v in (a, b))

    def complement(self) -> "Graph":
        present = self.edge_set
        return Graph(
            vertex_count=self.vertex_count,
            edges=[e for e in combinations(range(1, self.vertex_count + 1), 2) if e not in present],
        )

    def to_networkx(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(range(1, self.vertex_count + 1))
        g.add_edges_from(self.edges)
        return g

    def to_text(self) -> str:
        lines = [f"{self.vertex_count} {self.edge_count}"]
        lines.extend(f"{u} {v}" for u, v in self.edges)
        return "\n".join(lines)

    @classmethod
    def from_text(cls, text: str) -> "Graph":
        """Parse the "n m" header followed by m "u v" lines"""
        rows = [line.split() for line in text.strip().splitlines() if line.strip()]
        if not rows or len(rows[0]) != 2:
            raise ValueError("Graph text must start with an 'n m' header")
        n, m = int(rows[0][0]), int(rows[0][1])
        body = rows[1:]
        if len(body) != m:
            raise ValueError(f"Header declares {m} edges, found {len(body)}")
        return cls(vertex_count=n, edges=[(int(a), int(b)) for a, b in body])


class CompleteMultipartiteGraph(BaseModel):
    """K_{n_1,...,n_N}; part i holds the next n_i consecutive labels"""
    model_config = ConfigDict(frozen=True)

    part_sizes: Tuple[int, ...]

    @field_validator("part_sizes")
    @classmethod
    def check_parts(cls, v: Tuple[int, ...]) -> Tuple[int, ...]:
        if not v:
            raise ValueError("At least one part is required")
        if any(p < 1 for p in v):
            raise ValueError("Part sizes must be positive")
        if sum(v) > EnumerationConstants.MAX_GRAPH_VERTICES:
            raise ValueError("Too many vertices")
        return v

    @property
    def vertex_count(self) -> int:
        return sum(self.part_sizes)

    def part_labels(self) -> List[List[int]]:
        out, start = [], 1
        for size in self.part_sizes:
            out.append(list(range(start, start + size)))
            start += size
        return out

    def part_index(self) -> Dict[int, int]:
        """vertex -> index of its part"""
        return {v: i for i, part in enumerate(self.part_labels()) for v in part}

    def to_graph(self) -> Graph:
        parts = self.part_labels()
        edges = [
            (u, v)
            for i, j in combinations(range(len(parts)), 2)
            for u in parts[i]
            for v in parts[j]
        ]
        return Graph(vertex_count=self.vertex_count, edges=sorted(edges))


class Orientation(BaseModel):
    """Direction per edge: bit i of `mask` clear means edges[i] = (u, v)
    is oriented u -> v, set means v -> u"""
    model_config = ConfigDict(frozen=True)

    graph: Graph
    mask: int = Field(ge=0)

    @model_validator(mode="after")
    def check_mask(self) -> "Orientation":
        if self.mask >> self.graph.edge_count:
            raise ValueError("Mask has bits beyond the edge count")
        return self

    def arcs(self) -> List[Tuple[int, int]]:
        """(tail, head) pairs in edge order"""
        return [
            (v, u) if (self.mask >> i) & 1 else (u, v)
            for i, (u, v) in enumerate(self.graph.edges)
        ]

    def to_networkx(self) -> nx.DiGraph:
        d = nx.DiGraph()
        d.add_nodes_from(range(1, self.graph.vertex_count + 1))
        d.add_edges_from(self.arcs())
        return d


class TopologicalSort(BaseModel):
    """Total order of the vertices"""
    model_config = ConfigDict(frozen=True)

    order: Tuple[int, ...]

    @field_validator("order")
    @classmethod
    def check_distinct(cls, v: Tuple[int, ...]) -> Tuple[int, ...]:
        if sorted(v) != list(range(1, len(v) + 1)):
            raise ValueError("A topological sort lists every vertex exactly once")
        return v


class PartVector(BaseModel):
    """(n_1, ..., n_N) with N >= 2; |n| = n_2 + ... + n_N"""
    model_config = ConfigDict(frozen=True)

    parts: Tuple[int, ...]

    @field_validator("parts")
    @classmethod
    def check_parts(cls, v: Tuple[int, ...]) -> Tuple[int, ...]:
        if len(v) < 2:
            raise ValueError("A part vector needs at least two parts")
        if any(p < 1 for p in v):
            raise ValueError("Part sizes must be positive")
        return v

    @property
    def rest_total(self) -> int:
        return sum(self.parts[1:])


class TuranParams(BaseModel):
    """T(n, r): r parts of sizes ceil(n/r) and floor(n/r)"""
    model_config = ConfigDict(frozen=True)

    n: int = Field(ge=1)
    r: int = Field(ge=1)

    @model_validator(mode="after")
    def check_r(self) -> "TuranParams":
        if self.r > self.n:
            raise ValueError(f"r must be at most n, got r={self.r}, n={self.n}")
        return self

    def part_sizes(self) -> Tuple[int, ...]:
        q, extra = divmod(self.n, self.r)
        return tuple(q + 1 if i < extra else q for i in range(self.r))
