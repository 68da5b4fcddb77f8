"""
Exhaustive power domination solvers.

These are the reference oracles for the tree DP and the bound lab: slow, but
every answer is either exhaustively optimal or an explicit error.
"""

import logging
import math
import time
from dataclasses import dataclass, field
from functools import cached_property
from typing import List, Optional, Sequence

from .constants import EXACT_SOLVER_CAP, WEIGHTED_SOLVER_CAP, DPClass
from .errors import ConsistencyError, InputError, ResourceError
from .graph import Graph, VertexSet
from .parallel_runner import ParallelSearch
from .propagation import TraceStep, closure, closure_trace, is_pds
from .tree import WeightedTree

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PdsResult:
    """
    A power dominating set and what it costs.

    Attributes:
        members: the set itself
        cardinality: number of members
        weight: total weight (equals cardinality for unweighted solves)
        optimal: True when no strictly smaller (lighter) PDS exists
        graph: graph the set dominates; used to build the certificate on demand
    """

    members: VertexSet
    cardinality: int
    weight: float
    optimal: bool
    graph: Graph = field(repr=False, compare=False)

    @cached_property
    def certificate(self) -> List[TraceStep]:
        """Round-by-round observation trace of ``members``."""
        return closure_trace(self.graph, self.members)


def _verified(g: Graph, members: VertexSet, weight: float, optimal: bool) -> PdsResult:
    if not is_pds(g, members):
        raise ConsistencyError(f"solver returned {members.one_based()}, which is not a power dominating set")
    return PdsResult(members=members, cardinality=len(members), weight=weight, optimal=optimal, graph=g)


def _check_cap(g: Graph, cap: int) -> None:
    if g.vertex_count > cap:
        raise ResourceError(f"graph has {g.vertex_count} vertices, exceeding the exact solver cap of {cap}")


def min_pds(g: Graph, cap: int = EXACT_SOLVER_CAP, workers: int = 1) -> PdsResult:
    """
    Minimum-cardinality power dominating set.

    Subsets are tried by increasing size and, within a size, in lexicographic
    order of their sorted members; the first PDS found is returned.

    Raises:
        ResourceError: if g has more than ``cap`` vertices
    """
    _check_cap(g, cap)
    n = g.vertex_count
    if n == 0:
        return _verified(g, VertexSet.empty(0), 0, True)

    start = time.time()
    with ParallelSearch(workers) as search:
        for size in range(1, n + 1):
            members = search.first_pds(g, size)
            logger.debug(f"size {size}: {'found ' + str(members) if members else 'no PDS'}")
            if members is not None:
                logger.info(f"gamma_p = {size} on {n} vertices ({time.time() - start:.3f}s)")
                return _verified(g, VertexSet.from_ids(members, n), size, True)
    # V itself is always a PDS
    raise ConsistencyError("subset search exhausted without finding a power dominating set")


def min_weight_pds(g: Graph, weights: Sequence[float], cap: int = WEIGHTED_SOLVER_CAP, workers: int = 1) -> PdsResult:
    """
    Minimum-weight power dominating set.

    All subsets are considered; among equally light sets the one with fewer
    members wins, then the lexicographically smallest sorted member tuple.
    That order compares members, not the membership bitmask as an integer:
    at equal weight {0, 3} wins over {1, 2}.
    The scan stops early once the ``size`` lightest vertices alone already
    outweigh the best set found.

    Raises:
        InputError: on a missing, non-positive or infinite weight
        ResourceError: if g has more than ``cap`` vertices
    """
    _check_cap(g, cap)
    n = g.vertex_count
    if len(weights) != n:
        raise InputError(f"{len(weights)} weights given for {n} vertices")
    for v, w in enumerate(weights):
        if not 0 < w < math.inf:
            raise InputError(f"weight of vertex {v + 1} must be positive and finite, got {w}")
    if n == 0:
        return _verified(g, VertexSet.empty(0), 0, True)

    start = time.time()
    ascending = sorted(weights)
    best_weight = math.inf
    best_members: Optional[Sequence[int]] = None
    with ParallelSearch(workers) as search:
        for size in range(1, n + 1):
            if sum(ascending[:size]) > best_weight:
                break
            found = search.lightest_pds(g, weights, size, bound=best_weight)
            if found is not None:
                best_weight, best_members = found
                logger.debug(f"size {size}: lighter PDS {best_members} of weight {best_weight}")
    if best_members is None:
        raise ConsistencyError("subset search exhausted without finding a power dominating set")
    logger.info(f"gamma_p^w = {best_weight} on {n} vertices ({time.time() - start:.3f}s)")
    return _verified(g, VertexSet.from_ids(best_members, n), best_weight, True)


def _pendant_extension(t: WeightedTree) -> Graph:
    """The tree with one extra leaf hanging off the root."""
    n = t.vertex_count
    return Graph.from_edges(n + 1, t.edges() + [(t.root, n)])


def _without_root(t: WeightedTree) -> Graph:
    root = t.root
    return Graph.from_edges(t.vertex_count - 1, [(i, f) for i, f in t.edges() if f != root])


def classify_pair(t: WeightedTree, d: VertexSet) -> Optional[DPClass]:
    """
    Class of the pair (t, d) among the five DP classes, or None.

    a: d dominates t and contains the root
    b: d dominates t plus a pendant leaf at the root, root not in d
    c: d dominates t but not t plus the pendant leaf, root not in d
    d: d dominates t minus the root but not t, root not in d
    e: none of the above, but d observes all of t once the root is pre-observed
    """
    g = t.to_graph()
    n = t.vertex_count
    root = t.root
    if d.universe != n:
        raise InputError(f"vertex set over {d.universe} vertices does not fit a tree of {n}")

    dominates = is_pds(g, d)
    if root in d:
        return DPClass.A if dominates else None
    if is_pds(_pendant_extension(t), VertexSet(d.mask, n + 1)):
        return DPClass.B
    if dominates:
        return DPClass.C
    if is_pds(_without_root(t), VertexSet(d.mask, n - 1)):
        return DPClass.D
    if len(closure(g, d, VertexSet.from_ids([root], n))) == n:
        return DPClass.E
    return None
