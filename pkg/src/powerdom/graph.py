"""
Graph representation and structural predicates.

Vertices are dense 0-based integers. Neighbor lists are kept sorted so that two
graphs built from the same edge set compare (and hash) equal. Vertex sets are
int bitsets bound to the size of the graph they belong to.
"""

import logging
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import FrozenSet, Iterable, Iterator, List, Optional, Sequence, Tuple

from .errors import InputError

logger = logging.getLogger(__name__)

Edge = Tuple[int, int]


@dataclass(frozen=True)
class VertexSet:
    """Membership bitset over the vertex ids ``0 .. universe-1``."""

    mask: int
    universe: int

    def __post_init__(self) -> None:
        if self.mask < 0 or self.mask >> self.universe:
            raise InputError(f"vertex set {self.mask:#x} does not fit a graph of {self.universe} vertices")

    @classmethod
    def empty(cls, universe: int) -> "VertexSet":
        return cls(0, universe)

    @classmethod
    def full(cls, universe: int) -> "VertexSet":
        return cls((1 << universe) - 1, universe)

    @classmethod
    def from_ids(cls, ids: Iterable[int], universe: int) -> "VertexSet":
        mask = 0
        for v in ids:
            if not 0 <= v < universe:
                raise InputError(f"vertex {v} out of range for a graph of {universe} vertices")
            mask |= 1 << v
        return cls(mask, universe)

    @classmethod
    def from_flags(cls, flags: Sequence[int]) -> "VertexSet":
        """Build from a per-vertex 0/1 sequence (linear time even for large graphs)."""
        if not flags:
            return cls(0, 0)
        bits = "".join("1" if f else "0" for f in reversed(flags))
        return cls(int(bits, 2), len(flags))

    def __contains__(self, v: object) -> bool:
        return isinstance(v, int) and 0 <= v < self.universe and bool(self.mask >> v & 1)

    def __iter__(self) -> Iterator[int]:
        bits = bin(self.mask)[:1:-1]
        return (i for i, ch in enumerate(bits) if ch == "1")

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __or__(self, other: "VertexSet") -> "VertexSet":
        self._check_universe(other)
        return VertexSet(self.mask | other.mask, self.universe)

    def __and__(self, other: "VertexSet") -> "VertexSet":
        self._check_universe(other)
        return VertexSet(self.mask & other.mask, self.universe)

    def __sub__(self, other: "VertexSet") -> "VertexSet":
        self._check_universe(other)
        return VertexSet(self.mask & ~other.mask, self.universe)

    def issubset(self, other: "VertexSet") -> bool:
        self._check_universe(other)
        return self.mask & ~other.mask == 0

    def ids(self) -> Tuple[int, ...]:
        return tuple(self)

    def one_based(self) -> Tuple[int, ...]:
        return tuple(v + 1 for v in self)

    def _check_universe(self, other: "VertexSet") -> None:
        if other.universe != self.universe:
            raise InputError(f"vertex sets over {self.universe} and {other.universe} vertices cannot be combined")


@dataclass(frozen=True)
class Graph:
    """
    Undirected simple graph in canonical adjacency-list form.

    Attributes:
        adjacency: adjacency[v] is the ascending tuple of neighbors of v
    """

    adjacency: Tuple[Tuple[int, ...], ...]

    @classmethod
    def from_edges(cls, vertex_count: int, edges: Iterable[Edge]) -> "Graph":
        """
        Build a graph from an edge list.

        Raises:
            InputError: on negative size, out-of-range endpoints, self-loops or duplicate edges
        """
        if vertex_count < 0:
            raise InputError(f"vertex count must be non-negative, got {vertex_count}")
        neighbors: List[List[int]] = [[] for _ in range(vertex_count)]
        seen = set()
        for u, v in edges:
            if not (0 <= u < vertex_count and 0 <= v < vertex_count):
                raise InputError(f"edge ({u}, {v}) out of range for {vertex_count} vertices")
            if u == v:
                raise InputError(f"self-loop at vertex {u}")
            key = (u, v) if u < v else (v, u)
            if key in seen:
                raise InputError(f"duplicate edge ({key[0]}, {key[1]})")
            seen.add(key)
            neighbors[u].append(v)
            neighbors[v].append(u)
        return cls(tuple(tuple(sorted(nbrs)) for nbrs in neighbors))

    @property
    def vertex_count(self) -> int:
        return len(self.adjacency)

    @cached_property
    def neighbor_sets(self) -> Tuple[FrozenSet[int], ...]:
        return tuple(frozenset(nbrs) for nbrs in self.adjacency)

    def neighbors(self, v: int) -> Tuple[int, ...]:
        self._check_vertex(v)
        return self.adjacency[v]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.neighbor_sets[u]

    def edges(self) -> List[Edge]:
        """All edges as (u, v) with u < v, in lexicographic order."""
        return [(u, v) for u, nbrs in enumerate(self.adjacency) for v in nbrs if u < v]

    @property
    def edge_count(self) -> int:
        return sum(len(nbrs) for nbrs in self.adjacency) // 2

    def degree_sequence(self) -> List[int]:
        return [len(nbrs) for nbrs in self.adjacency]

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self.vertex_count:
            raise InputError(f"vertex {v} out of range for a graph of {self.vertex_count} vertices")


def degree(g: Graph, v: int) -> int:
    return len(g.neighbors(v))


def is_regular(g: Graph, k: int) -> bool:
    """True iff every vertex has degree exactly k (vacuously true on zero vertices)."""
    if k < 0:
        raise InputError(f"degree must be non-negative, got {k}")
    return all(len(nbrs) == k for nbrs in g.adjacency)


def is_claw_free(g: Graph) -> bool:
    """
    True iff g has no induced K_{1,3}.

    Every induced claw has a center, so it suffices to look for three pairwise
    non-adjacent vertices in each neighborhood.
    """
    nsets = g.neighbor_sets
    for v, nbrs in enumerate(g.adjacency):
        if len(nbrs) < 3:
            continue
        for x, y, z in combinations(nbrs, 3):
            if y not in nsets[x] and z not in nsets[x] and z not in nsets[y]:
                logger.debug(f"claw centered at {v}: leaves {x}, {y}, {z}")
                return False
    return True


def closed_neighborhood(g: Graph, s: VertexSet) -> VertexSet:
    """N[S]."""
    mask = s.mask
    for v in s:
        for u in g.adjacency[v]:
            mask |= 1 << u
    return VertexSet(mask, g.vertex_count)


def is_packing(g: Graph, s: VertexSet) -> bool:
    """True iff all distinct members of s are at distance three or more."""
    for v in s:
        for u in g.adjacency[v]:
            if u in s:
                return False
            for x in g.adjacency[u]:
                if x != v and x in s:
                    return False
    return True


def greedy_packing(g: Graph, order: Optional[Sequence[int]] = None) -> VertexSet:
    """Maximal packing built by scanning vertices in ``order`` (ascending ids by default)."""
    blocked = bytearray(g.vertex_count)
    chosen = []
    for v in order if order is not None else range(g.vertex_count):
        if blocked[v]:
            continue
        chosen.append(v)
        # everything within distance 2 of v is now out
        blocked[v] = 1
        for u in g.adjacency[v]:
            blocked[u] = 1
            for x in g.adjacency[u]:
                blocked[x] = 1
    return VertexSet.from_ids(chosen, g.vertex_count)


def bfs_distances(g: Graph, source: int) -> List[Optional[int]]:
    """Edge-count distances from source; None marks unreachable vertices."""
    g._check_vertex(source)
    dist: List[Optional[int]] = [None] * g.vertex_count
    dist[source] = 0
    queue = deque([source])
    while queue:
        v = queue.popleft()
        dv = dist[v]
        assert dv is not None
        for u in g.adjacency[v]:
            if dist[u] is None:
                dist[u] = dv + 1
                queue.append(u)
    return dist


def distance(g: Graph, u: int, v: int) -> Optional[int]:
    """Shortest-path length between u and v, or None when they are disconnected."""
    g._check_vertex(v)
    return bfs_distances(g, u)[v]


def is_connected(g: Graph) -> bool:
    if g.vertex_count == 0:
        return True
    return all(d is not None for d in bfs_distances(g, 0))


def line_graph(g: Graph) -> Graph:
    """
    Line graph of g.

    Vertex i of the result is the i-th edge of g in lexicographic (u, v) order;
    two of them are adjacent iff the edges share an endpoint.
    """
    edge_list = g.edges()
    index = {e: i for i, e in enumerate(edge_list)}
    incident: List[List[int]] = [[] for _ in range(g.vertex_count)]
    for (u, v), i in index.items():
        incident[u].append(i)
        incident[v].append(i)
    # in a simple graph two edges share at most one endpoint, so no pair repeats
    pairs = [pair for edge_ids in incident for pair in combinations(edge_ids, 2)]
    return Graph.from_edges(len(edge_list), pairs)
