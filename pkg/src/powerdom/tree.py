"""
Rooted weighted trees in tree-ordering form.

A tree ordering numbers the vertices v_0 .. v_{n-1} so that every non-root
vertex has exactly one neighbor with a larger index, its father. The root is
the last vertex and is its own father.
"""

import logging
import math
from dataclasses import dataclass
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .errors import InputError
from .graph import Edge, Graph, VertexSet

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class TreeOrdering:
    """
    Relabeling of a tree produced by ``tree_ordering``.

    Attributes:
        father: father[i] is the position of the father of position i
        new_to_old: original vertex id stored at each position
        old_to_new: position of each original vertex id
    """

    father: Tuple[int, ...]
    new_to_old: Tuple[int, ...]
    old_to_new: Tuple[int, ...]


def tree_ordering(edges: Iterable[Edge], root: int, vertex_count: Optional[int] = None) -> TreeOrdering:
    """
    Number the vertices of a tree so that children precede their fathers.

    Positions follow a post-order walk from ``root`` that visits children in
    ascending id order; the root takes the last position.

    Args:
        edges: tree edges over the ids 0 .. vertex_count-1
        root: id of the root vertex
        vertex_count: number of vertices (inferred from the ids when omitted)

    Raises:
        InputError: if the edges do not form a tree containing root
    """
    edge_list = list(edges)
    if vertex_count is None:
        vertex_count = max([root] + [max(u, v) for u, v in edge_list]) + 1
    n = vertex_count
    if not 0 <= root < n:
        raise InputError(f"root {root} out of range for {n} vertices")
    if len(edge_list) != n - 1:
        raise InputError(f"a tree on {n} vertices has {n - 1} edges, got {len(edge_list)}")

    adjacency: List[List[int]] = [[] for _ in range(n)]
    seen = set()
    for u, v in edge_list:
        if not (0 <= u < n and 0 <= v < n):
            raise InputError(f"edge ({u}, {v}) out of range for {n} vertices")
        if u == v:
            raise InputError(f"self-loop at vertex {u}")
        key = (min(u, v), max(u, v))
        if key in seen:
            raise InputError(f"duplicate edge ({key[0]}, {key[1]})")
        seen.add(key)
        adjacency[u].append(v)
        adjacency[v].append(u)

    # preorder with children taken in descending id order; reversed it is a
    # post-order with children in ascending order
    parent = [-1] * n
    parent[root] = root
    preorder = []
    stack = [root]
    while stack:
        v = stack.pop()
        preorder.append(v)
        for u in sorted(adjacency[v]):
            if parent[u] == -1:
                parent[u] = v
                stack.append(u)
            elif u != parent[v]:
                raise InputError(f"edge ({v}, {u}) closes a cycle")
    if len(preorder) != n:
        raise InputError(f"edges leave {n - len(preorder)} vertices unreachable from root {root}")

    new_to_old = tuple(reversed(preorder))
    old_to_new = [0] * n
    for position, old in enumerate(new_to_old):
        old_to_new[old] = position
    father = tuple(old_to_new[parent[old]] for old in new_to_old)
    return TreeOrdering(father=father, new_to_old=new_to_old, old_to_new=tuple(old_to_new))


@dataclass(frozen=True)
class WeightedTree:
    """
    Vertex-weighted tree stored by its tree ordering.

    Attributes:
        father: father[i] > i for every non-root position i; father[n-1] == n-1
        weights: positive weight of each position
        labels: original vertex id of each position (identity by default)
    """

    father: Tuple[int, ...]
    weights: Tuple[float, ...]
    labels: Tuple[int, ...] = ()

    def __post_init__(self) -> None:
        n = len(self.father)
        if n == 0:
            raise InputError("a weighted tree needs at least one vertex")
        if len(self.weights) != n:
            raise InputError(f"{len(self.weights)} weights given for {n} vertices")
        if not self.labels:
            object.__setattr__(self, "labels", tuple(range(n)))
        elif len(self.labels) != n:
            raise InputError(f"{len(self.labels)} labels given for {n} vertices")
        for i, f in enumerate(self.father[:-1]):
            if not i < f < n:
                raise InputError(f"position {i} has father {f}; fathers must come later in the ordering")
        if self.father[-1] != n - 1:
            raise InputError("the root must be its own father")
        for i, w in enumerate(self.weights):
            if not 0 < w < math.inf:
                raise InputError(f"weight of vertex {self.labels[i]} must be positive and finite, got {w}")

    @classmethod
    def from_edges(
        cls,
        edges: Iterable[Edge],
        root: int,
        weights: Sequence[float],
        vertex_count: Optional[int] = None,
    ) -> "WeightedTree":
        """Order a tree given by edges over original ids; ``weights`` is indexed by original id."""
        if vertex_count is None:
            vertex_count = len(weights)
        ordering = tree_ordering(edges, root, vertex_count)
        return cls(
            father=ordering.father,
            weights=tuple(weights[old] for old in ordering.new_to_old),
            labels=ordering.new_to_old,
        )

    @property
    def vertex_count(self) -> int:
        return len(self.father)

    @property
    def root(self) -> int:
        return len(self.father) - 1

    def edges(self) -> List[Edge]:
        return [(i, f) for i, f in enumerate(self.father[:-1])]

    def children(self) -> List[List[int]]:
        """Children of each position, in increasing position order."""
        kids: List[List[int]] = [[] for _ in self.father]
        for i, f in enumerate(self.father[:-1]):
            kids[f].append(i)
        return kids

    def to_graph(self) -> Graph:
        # children precede their father, so every row is already ascending
        rows = [kids + [f] for kids, f in zip(self.children(), self.father)]
        rows[-1].pop()
        return Graph(tuple(map(tuple, rows)))

    def weight_of(self, s: VertexSet) -> float:
        return sum(self.weights[v] for v in s)

    def label_map(self) -> Dict[int, int]:
        """Original id -> position."""
        return {label: position for position, label in enumerate(self.labels)}
