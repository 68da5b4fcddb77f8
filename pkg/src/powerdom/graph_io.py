"""
Text formats.

Edge-list document::

    # optional comments
    n m
    u v        (m lines, 1-based ids)

Tree document::

    n
    id parent weight     (n lines, parent 0 marks the root)

Weight document (for weighted general graphs)::

    n
    id weight            (n lines)

Ids are 1-based in every document and 0-based inside the package.
"""

import logging
import math
import re
from typing import Iterator, List, Optional, Set, Tuple, Union

from .errors import InputError
from .graph import Edge, Graph, VertexSet
from .tree import WeightedTree

logger = logging.getLogger(__name__)

Number = Union[int, float]

_INT = re.compile(r"[+-]?\d+")
_DECIMAL = re.compile(r"[+-]?(\d+\.?\d*|\.\d+)([eE][+-]?\d+)?")


def _content_lines(text: str) -> Iterator[Tuple[int, List[str]]]:
    """(1-based line number, fields) for every non-blank, non-comment line."""
    for number, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        yield number, stripped.split()


def _parse_int(token: str, what: str, line: int) -> int:
    if not _INT.fullmatch(token):
        raise InputError(f"{what} must be an integer, got '{token}'", line)
    return int(token)


def _parse_weight(token: str, line: int) -> Number:
    if _INT.fullmatch(token):
        value: Number = int(token)
    elif _DECIMAL.fullmatch(token):
        value = float(token)
    else:
        raise InputError(f"weight must be a decimal number, got '{token}'", line)
    if not math.isfinite(value):
        raise InputError(f"weight must be finite, got {token}", line)
    if not value > 0:
        raise InputError(f"weight must be positive, got {token}", line)
    return value


def _expect_fields(fields: List[str], count: int, shape: str, line: int) -> None:
    if len(fields) != count:
        raise InputError(f"expected '{shape}', got '{' '.join(fields)}'", line)


def format_number(value: float) -> str:
    """Integral values without a fractional part, others in shortest round-trip form."""
    if float(value).is_integer():
        return str(int(value))
    return repr(float(value))


def parse_graph(text: str) -> Graph:
    """
    Parse an edge-list document.

    Raises:
        InputError: with the offending line on a malformed header or edge
            line, an endpoint outside 1..n, a self-loop, a duplicate edge or
            an edge count that disagrees with the header
    """
    lines = _content_lines(text)
    try:
        header_line, header = next(lines)
    except StopIteration:
        raise InputError("empty graph document: missing 'n m' header") from None
    _expect_fields(header, 2, "n m", header_line)
    n = _parse_int(header[0], "vertex count", header_line)
    m = _parse_int(header[1], "edge count", header_line)
    if n < 0 or m < 0:
        raise InputError("vertex and edge counts must be non-negative", header_line)

    edges: List[Edge] = []
    seen: Set[Edge] = set()
    last_line = header_line
    for line, fields in lines:
        last_line = line
        if len(edges) == m:
            raise InputError(f"more edge lines than the {m} declared", line)
        _expect_fields(fields, 2, "u v", line)
        u = _parse_int(fields[0], "endpoint", line)
        v = _parse_int(fields[1], "endpoint", line)
        for x in (u, v):
            if not 1 <= x <= n:
                raise InputError(f"endpoint {x} outside 1..{n}", line)
        if u == v:
            raise InputError(f"self-loop at vertex {u}", line)
        key = (min(u, v) - 1, max(u, v) - 1)
        if key in seen:
            raise InputError(f"duplicate edge {key[0] + 1}-{key[1] + 1}", line)
        seen.add(key)
        edges.append(key)
    if len(edges) != m:
        raise InputError(f"header declares {m} edges, found {len(edges)}", last_line)
    return Graph.from_edges(n, edges)


def render_graph(g: Graph) -> str:
    """Edge-list document of g, edges in lexicographic order."""
    edges = g.edges()
    out = [f"{g.vertex_count} {len(edges)}"]
    out.extend(f"{u + 1} {v + 1}" for u, v in edges)
    return "\n".join(out) + "\n"


def _find_cycle(parent: List[int]) -> Optional[int]:
    """Some vertex on a parent-pointer cycle, or None. parent[root] == -1."""
    state = [0] * len(parent)  # 0 new, 1 on current walk, 2 done
    for start in range(len(parent)):
        path = []
        v = start
        while v != -1 and state[v] == 0:
            state[v] = 1
            path.append(v)
            v = parent[v]
        if v != -1 and state[v] == 1:
            return v
        for u in path:
            state[u] = 2
    return None


def parse_tree(text: str) -> WeightedTree:
    """
    Parse a tree document and order the tree from its root.

    Raises:
        InputError: with the offending line on malformed lines, a missing or
            second root, an id or parent outside 1..n, a repeated id, a
            non-positive weight or a parent cycle
    """
    lines = _content_lines(text)
    try:
        header_line, header = next(lines)
    except StopIteration:
        raise InputError("empty tree document: missing vertex count") from None
    _expect_fields(header, 1, "n", header_line)
    n = _parse_int(header[0], "vertex count", header_line)
    if n < 1:
        raise InputError(f"a tree needs at least one vertex, got {n}", header_line)

    parent = [-1] * n
    weights: List[Number] = [0] * n
    line_of: List[int] = [0] * n
    root: Optional[int] = None
    count = 0
    last_line = header_line
    for line, fields in lines:
        last_line = line
        if count == n:
            raise InputError(f"more vertex lines than the {n} declared", line)
        _expect_fields(fields, 3, "id parent weight", line)
        vid = _parse_int(fields[0], "vertex id", line)
        pid = _parse_int(fields[1], "parent id", line)
        if not 1 <= vid <= n:
            raise InputError(f"vertex id {vid} outside 1..{n}", line)
        if line_of[vid - 1]:
            raise InputError(f"vertex {vid} listed twice (first on line {line_of[vid - 1]})", line)
        if pid == 0:
            if root is not None:
                raise InputError(f"second root {vid}; vertex {root + 1} already has parent 0", line)
            root = vid - 1
        elif not 1 <= pid <= n:
            raise InputError(f"parent {pid} of vertex {vid} does not resolve to a vertex in 1..{n}", line)
        elif pid == vid:
            raise InputError(f"vertex {vid} is its own parent", line)
        else:
            parent[vid - 1] = pid - 1
        weights[vid - 1] = _parse_weight(fields[2], line)
        line_of[vid - 1] = line
        count += 1
    if count != n:
        raise InputError(f"header declares {n} vertices, found {count}", last_line)
    if root is None:
        raise InputError("no root: exactly one vertex must have parent 0", header_line)
    on_cycle = _find_cycle(parent)
    if on_cycle is not None:
        raise InputError(f"parent relation has a cycle through vertex {on_cycle + 1}", line_of[on_cycle])

    edges = [(v, p) for v, p in enumerate(parent) if p != -1]
    return WeightedTree.from_edges(edges, root=root, weights=weights, vertex_count=n)


def render_tree(t: WeightedTree) -> str:
    """Tree document of t using its original vertex labels."""
    n = t.vertex_count
    rows = []
    for position, label in enumerate(t.labels):
        f = t.father[position]
        parent = 0 if position == t.root else t.labels[f] + 1
        rows.append((label + 1, parent, t.weights[position]))
    rows.sort()
    return "\n".join([str(n)] + [f"{v} {p} {format_number(w)}" for v, p, w in rows]) + "\n"


def parse_weights(text: str, vertex_count: int) -> List[Number]:
    """
    Parse a weight document for a graph of ``vertex_count`` vertices.

    Returns the weights indexed by 0-based vertex id.
    """
    lines = _content_lines(text)
    try:
        header_line, header = next(lines)
    except StopIteration:
        raise InputError("empty weight document: missing vertex count") from None
    _expect_fields(header, 1, "n", header_line)
    n = _parse_int(header[0], "vertex count", header_line)
    if n != vertex_count:
        raise InputError(f"weights are for {n} vertices, the graph has {vertex_count}", header_line)

    weights: List[Optional[Number]] = [None] * n
    last_line = header_line
    for line, fields in lines:
        last_line = line
        _expect_fields(fields, 2, "id weight", line)
        vid = _parse_int(fields[0], "vertex id", line)
        if not 1 <= vid <= n:
            raise InputError(f"vertex id {vid} outside 1..{n}", line)
        if weights[vid - 1] is not None:
            raise InputError(f"vertex {vid} weighted twice", line)
        weights[vid - 1] = _parse_weight(fields[1], line)
    missing = [v + 1 for v, w in enumerate(weights) if w is None]
    if missing:
        raise InputError(f"no weight for vertex {missing[0]} ({len(missing)} missing)", last_line)
    return [w for w in weights if w is not None]


def parse_id_list(text: str, vertex_count: int) -> VertexSet:
    """Comma-separated 1-based ids, e.g. ``"1,4,7"``; an empty string is the empty set."""
    ids = []
    for token in (t.strip() for t in text.split(",")):
        if not token:
            continue
        if not _INT.fullmatch(token):
            raise InputError(f"vertex id must be an integer, got '{token}'")
        v = int(token)
        if not 1 <= v <= vertex_count:
            raise InputError(f"vertex id {v} outside 1..{vertex_count}")
        ids.append(v - 1)
    return VertexSet.from_ids(ids, vertex_count)


def format_ids(s: VertexSet) -> str:
    """``{i, j, ...}`` with 1-based ids."""
    return "{" + ", ".join(str(v) for v in s.one_based()) + "}"
