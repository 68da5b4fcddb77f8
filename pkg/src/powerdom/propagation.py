"""
Observation propagation.

A chosen vertex observes its closed neighborhood (OR1); afterwards an observed
vertex with exactly one unobserved neighbor observes that neighbor (OR2). The
trace applies OR2 in synchronous rounds so that round i yields exactly the set
P^i(S); closure and is_pds fire in queue order, which reaches the same
fixpoint. The bookkeeping (per-vertex unobserved-neighbor counters and a
candidate queue) keeps a full run at O(n + m).

Pre-observed vertices start observed but do not apply OR1: their neighbors are
not observed by them.
"""

import logging
from collections import deque
from typing import Deque, List, Optional, Tuple

from .errors import InputError
from .graph import Graph, VertexSet

logger = logging.getLogger(__name__)

TraceStep = Tuple[int, VertexSet]


class ObservationState:
    """
    Single-use propagation run over a fixed graph.

    Attributes:
        observed: per-vertex 0/1 flags, only ever set
        unobserved_neighbors: per-vertex count of neighbors not yet observed
        frontier: observed vertices whose counter dropped to at most one since
            the last round; only these can fire OR2 in the next round
        step_index: number of completed OR2 rounds
    """

    def __init__(self, g: Graph, seeds: VertexSet, pre_observed: Optional[VertexSet] = None):
        n = g.vertex_count
        if seeds.universe != n or (pre_observed is not None and pre_observed.universe != n):
            raise InputError(f"vertex sets must range over the {n} vertices of the graph")

        self._adjacency = g.adjacency
        self.observed = bytearray(n)
        self.unobserved_neighbors = [len(nbrs) for nbrs in g.adjacency]
        self.frontier: Deque[int] = deque()
        self.step_index = 0
        self.observed_count = 0

        initial: List[int] = []
        for v in seeds:
            self._observe(v, initial)
            for u in self._adjacency[v]:
                self._observe(u, initial)
        if pre_observed is not None:
            for v in pre_observed:
                self._observe(v, initial)
        self.last_observed = initial

    def _observe(self, v: int, batch: List[int]) -> None:
        if self.observed[v]:
            return
        self.observed[v] = 1
        self.observed_count += 1
        batch.append(v)
        counters = self.unobserved_neighbors
        if counters[v] == 1:
            self.frontier.append(v)
        for u in self._adjacency[v]:
            counters[u] -= 1
            if counters[u] == 1 and self.observed[u]:
                self.frontier.append(u)

    def step(self) -> List[int]:
        """
        Apply one synchronous OR2 round.

        Every firing vertex is judged against the observed set as it stood
        before the round. Returns the vertices observed in this round (empty
        once the fixpoint is reached).
        """
        observed = self.observed
        counters = self.unobserved_neighbors
        targets: List[int] = []
        while self.frontier:
            v = self.frontier.popleft()
            if counters[v] != 1:
                continue
            for u in self._adjacency[v]:
                if not observed[u]:
                    targets.append(u)
                    break

        batch: List[int] = []
        for u in targets:
            self._observe(u, batch)
        if batch:
            self.step_index += 1
        self.last_observed = batch
        return batch

    def run(self) -> "ObservationState":
        while self.step():
            pass
        return self

    def saturate(self) -> "ObservationState":
        """
        Run OR2 to the fixpoint without round boundaries.

        The fixpoint does not depend on firing order, so the observed set ends
        up the same as after ``run``; ``step_index`` is left untouched.
        """
        observed = self.observed
        counters = self.unobserved_neighbors
        adjacency = self._adjacency
        frontier = self.frontier
        batch: List[int] = []
        while frontier:
            v = frontier.popleft()
            if counters[v] != 1:
                continue
            for u in adjacency[v]:
                if not observed[u]:
                    self._observe(u, batch)
                    break
        self.last_observed = batch
        return self

    @property
    def is_complete(self) -> bool:
        return self.observed_count == len(self.observed)

    def observed_set(self) -> VertexSet:
        return VertexSet.from_flags(self.observed)


def closure(g: Graph, s: VertexSet, pre_observed: Optional[VertexSet] = None) -> VertexSet:
    """P^inf(S) started from N[S] plus the pre-observed vertices."""
    return ObservationState(g, s, pre_observed).saturate().observed_set()


def is_pds(g: Graph, s: VertexSet) -> bool:
    """True iff s observes every vertex of g."""
    return ObservationState(g, s).saturate().is_complete


def closure_trace(g: Graph, s: VertexSet, pre_observed: Optional[VertexSet] = None) -> List[TraceStep]:
    """
    Per-round view of the closure.

    Entry 0 is N[S] plus the pre-observed vertices; entry i > 0 holds the
    vertices first observed in round i. Rounds after the fixpoint are not listed.
    """
    n = g.vertex_count
    state = ObservationState(g, s, pre_observed)
    trace = [(0, VertexSet.from_ids(state.last_observed, n))]
    while True:
        batch = state.step()
        if not batch:
            break
        trace.append((state.step_index, VertexSet.from_ids(batch, n)))
    logger.debug(f"closure of {len(s)} seeds stabilized after {state.step_index} rounds")
    return trace
