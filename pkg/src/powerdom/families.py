"""
Deterministic generators for test instances.

Covers the extremal r-regular claw-free family E_k, the K_4 chains L_k, the
standard small families, and seeded random cubic graphs and weighted trees.
Randomized generators draw from a ``random.Random`` local to the call, so the
same parameters and seed always give the same canonical adjacency.
"""

import heapq
import logging
import random
from dataclasses import dataclass
from itertools import combinations
from typing import List, Optional, Set, Tuple, Union

from .constants import CUBIC_SAMPLING_ATTEMPTS, Family
from .errors import InputError, ResourceError
from .graph import Edge, Graph, VertexSet, is_connected
from .tree import WeightedTree

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class FamilySpec:
    """
    Named family plus the parameters it needs.

    Attributes:
        family: which generator to run
        n: vertex count (path, cycle, complete, random families), leaf count
            (star) or first side (complete-bipartite)
        m: second side of a complete bipartite graph
        r: degree of an E_k graph
        k: E_k / L_k index
        seed: seed for the randomized families
        weight_range: inclusive integer weight range for random trees
    """

    family: Family
    n: Optional[int] = None
    m: Optional[int] = None
    r: Optional[int] = None
    k: Optional[int] = None
    seed: int = 0
    weight_range: Tuple[int, int] = (1, 100)

    def require(self, name: str) -> int:
        value = getattr(self, name)
        if value is None:
            raise InputError(f"family '{self.family.value}' needs parameter {name}")
        return int(value)


def _clique_edges(vertices: List[int]) -> List[Edge]:
    return list(combinations(vertices, 2))


def _e_family_layout(r: int, k: int) -> Tuple[int, List[int]]:
    """Label of the last split vertex and the first vertex of every added K_r."""
    added = [2 * r + 1 + (j - 1) * (r + 1) for j in range(1, k + 1)]
    return 2 * r + k * (r + 1), added


def gen_E(r: int, k: int) -> Graph:
    """
    The r-regular claw-free graph E_k on 2r + 1 + k(r + 1) vertices.

    E_0: two copies of K_r (ids 0..r-1 and r..2r-1) joined by r/2 matching
    edges between their first halves, and a vertex u = 2r adjacent to both
    second halves. E_j: the vertex currently bridging into the second copy is
    split in two; the old vertex keeps its edges on the left, a new one takes
    over the edges into the second copy, and a fresh K_r is inserted with its
    first half joined to the old vertex and its second half to the new one.
    Each fresh K_r is labelled before its new split vertex.

    Raises:
        InputError: if r is odd or below 4, or k is negative
    """
    if r < 4 or r % 2:
        raise InputError(f"E_k needs an even degree r >= 4, got r={r}")
    if k < 0:
        raise InputError(f"E_k needs k >= 0, got k={k}")

    half = r // 2
    first = list(range(r))
    second = list(range(r, 2 * r))
    bridge = 2 * r
    adjacency: List[Set[int]] = [set() for _ in range(2 * r + 1)]

    def link(u: int, v: int) -> None:
        adjacency[u].add(v)
        adjacency[v].add(u)

    for u, v in _clique_edges(first) + _clique_edges(second):
        link(u, v)
    for i in range(half):
        link(first[i], second[i])
    for v in first[half:] + second[half:]:
        link(bridge, v)

    second_side = set(second)
    for _ in range(k):
        clique = list(range(len(adjacency), len(adjacency) + r))
        split = len(adjacency) + r
        adjacency.extend(set() for _ in range(r + 1))
        moved = sorted(adjacency[bridge] & second_side)
        for v in moved:
            adjacency[bridge].discard(v)
            adjacency[v].discard(bridge)
            link(split, v)
        for u, v in _clique_edges(clique):
            link(u, v)
        for v in clique[:half]:
            link(bridge, v)
        for v in clique[half:]:
            link(split, v)
        bridge = split

    edges = [(u, v) for u, nbrs in enumerate(adjacency) for v in nbrs if u < v]
    g = Graph.from_edges(len(adjacency), edges)
    logger.debug(f"generated E_{k} for r={r}: {g.vertex_count} vertices, {g.edge_count} edges")
    return g


def e_family_witness(r: int, k: int) -> VertexSet:
    """
    Power dominating set of E_k with k + 2 vertices.

    Vertex 0 (a matched vertex of the first K_r), the last split vertex, and
    the first vertex of every added K_r.
    """
    if r < 4 or r % 2 or k < 0:
        raise InputError(f"E_k needs an even r >= 4 and k >= 0, got r={r}, k={k}")
    last_split, added = _e_family_layout(r, k)
    return VertexSet.from_ids([0, last_split] + added, last_split + 1)


def gen_L(k: int) -> Graph:
    """
    Chain of k copies of K_4.

    Copy i occupies ids 4i .. 4i+3 (d_{i,1} .. d_{i,4}); consecutive copies are
    joined by d_{i,3}-d_{i+1,1} and d_{i,4}-d_{i+1,2}.
    """
    if k < 2:
        raise InputError(f"L_k needs k >= 2, got k={k}")
    edges: List[Edge] = []
    for i in range(k):
        edges.extend(_clique_edges(list(range(4 * i, 4 * i + 4))))
        if i + 1 < k:
            edges.append((4 * i + 2, 4 * i + 4))
            edges.append((4 * i + 3, 4 * i + 5))
    return Graph.from_edges(4 * k, edges)


def gen_standard(spec: FamilySpec) -> Graph:
    """Path, cycle, star, complete or complete bipartite graph with fixed labelling."""
    family = spec.family
    n = spec.require("n")
    if n < 1:
        raise InputError(f"family '{family.value}' needs n >= 1, got {n}")

    if family == Family.PATH:
        return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])
    if family == Family.CYCLE:
        if n < 3:
            raise InputError(f"a cycle needs n >= 3, got {n}")
        return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])
    if family == Family.STAR:
        # K_{1,n}: center 0, leaves 1..n
        return Graph.from_edges(n + 1, [(0, i) for i in range(1, n + 1)])
    if family == Family.COMPLETE:
        return Graph.from_edges(n, _clique_edges(list(range(n))))
    if family == Family.COMPLETE_BIPARTITE:
        m = spec.require("m")
        if m < 1:
            raise InputError(f"complete-bipartite needs m >= 1, got {m}")
        return Graph.from_edges(n + m, [(i, n + j) for i in range(n) for j in range(m)])
    raise InputError(f"'{family.value}' is not a standard family")


def gen_random_cubic(n: int, seed: int, attempts: int = CUBIC_SAMPLING_ATTEMPTS) -> Graph:
    """
    Connected simple 3-regular graph from the pairing model.

    Three stubs per vertex are shuffled and paired; pairings with loops,
    parallel edges or more than one component are rejected and redrawn.

    Raises:
        InputError: if n is odd or below 4
        ResourceError: if no valid pairing turns up within ``attempts`` draws
    """
    if n < 4 or n % 2:
        raise InputError(f"cubic graphs need an even n >= 4, got {n}")
    rng = random.Random(seed)
    stubs = [v for v in range(n) for _ in range(3)]
    for attempt in range(1, attempts + 1):
        rng.shuffle(stubs)
        edges: Set[Edge] = set()
        for s1, s2 in zip(stubs[::2], stubs[1::2]):
            if s1 > s2:
                s1, s2 = s2, s1
            if s1 == s2 or (s1, s2) in edges:
                break
            edges.add((s1, s2))
        else:
            g = Graph.from_edges(n, sorted(edges))
            if is_connected(g):
                logger.debug(f"cubic n={n} seed={seed} accepted after {attempt} attempts")
                return g
    raise ResourceError(f"no connected simple cubic graph on {n} vertices after {attempts} attempts (seed {seed})")


def _decode_pruefer(sequence: List[int], n: int) -> List[Edge]:
    degree = [1] * n
    for x in sequence:
        degree[x] += 1
    leaves = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaves)
    edges = []
    for x in sequence:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, x))
        degree[x] -= 1
        if degree[x] == 1:
            heapq.heappush(leaves, x)
    u, v = heapq.heappop(leaves), heapq.heappop(leaves)
    edges.append((u, v))
    return edges


def gen_random_tree(n: int, weight_range: Tuple[int, int], seed: int) -> WeightedTree:
    """
    Uniform random labelled tree with integer weights, rooted at the last vertex.

    The shape comes from a random Pruefer sequence; weights are drawn
    uniformly from the inclusive ``weight_range``.
    """
    lo, hi = weight_range
    if n < 1:
        raise InputError(f"a tree needs n >= 1, got {n}")
    if not 0 < lo <= hi:
        raise InputError(f"weight range must satisfy 0 < lo <= hi, got ({lo}, {hi})")
    rng = random.Random(seed)
    if n == 1:
        edges: List[Edge] = []
    elif n == 2:
        edges = [(0, 1)]
    else:
        edges = _decode_pruefer([rng.randrange(n) for _ in range(n - 2)], n)
    weights = [rng.randint(lo, hi) for _ in range(n)]
    return WeightedTree.from_edges(edges, root=n - 1, weights=weights, vertex_count=n)


def build_family(spec: FamilySpec) -> Union[Graph, WeightedTree]:
    """Dispatch a FamilySpec to its generator."""
    if spec.family == Family.E:
        return gen_E(spec.require("r"), spec.require("k"))
    if spec.family == Family.L:
        return gen_L(spec.require("k"))
    if spec.family == Family.RANDOM_CUBIC:
        return gen_random_cubic(spec.require("n"), spec.seed)
    if spec.family == Family.RANDOM_TREE:
        return gen_random_tree(spec.require("n"), spec.weight_range, spec.seed)
    return gen_standard(spec)
