"""Parallel execution of exhaustive subset searches and independent lab jobs."""

import logging
import math
from itertools import combinations
from multiprocessing import Pool
from multiprocessing.pool import Pool as PoolType
from types import TracebackType
from typing import Any, Callable, Iterator, List, Optional, Sequence, Tuple, Type, TypeVar

from .graph import Graph, VertexSet
from .propagation import is_pds

logger = logging.getLogger(__name__)

T = TypeVar("T")

Members = Tuple[int, ...]
WeightedMembers = Tuple[float, Members]


def split_range(start: int, end: int, count: int) -> List[Tuple[int, int]]:
    """
    Split range [start, end] into count non-overlapping sub-ranges.

    If count exceeds the number of elements in the range, returns count ranges
    where some ranges will be duplicates of single elements.

    Args:
        start: Start of the range (inclusive)
        end: End of the range (inclusive)
        count: Number of sub-ranges to create

    Returns:
        List of tuples representing (start, end) for each sub-range.
        All ranges are guaranteed to be non-empty (start <= end).

    Example:
        split_range(0, 15, 4) -> [(0, 3), (4, 7), (8, 11), (12, 15)]
        split_range(1, 2, 3) -> [(1, 1), (1, 1), (2, 2)]
    """
    if count <= 0:
        raise ValueError("count must be positive")
    if start > end:
        raise ValueError("start must be <= end")

    total_size = end - start + 1
    ranges = []

    if count > total_size:
        for i in range(count):
            element_value = start + math.floor(float(i) * total_size / count)
            ranges.append((element_value, element_value))
    else:
        for i in range(count):
            range_start = start + math.floor(float(total_size) / count * i)
            range_end = start + math.floor(float(total_size) / count * (i + 1)) - 1
            # last range takes the remainder
            if i == count - 1:
                range_end = end
            ranges.append((range_start, range_end))

    return ranges


def _subsets_with_first(n: int, size: int, first_lo: int, first_hi: int) -> Iterator[Members]:
    """Size-``size`` subsets of range(n) whose smallest member lies in [first_lo, first_hi], in lex order."""
    for first in range(first_lo, first_hi + 1):
        for rest in combinations(range(first + 1, n), size - 1):
            yield (first,) + rest


def first_pds_in_range(g: Graph, size: int, first_lo: int, first_hi: int) -> Optional[Members]:
    """Lexicographically first PDS of the given size whose smallest member lies in the range."""
    n = g.vertex_count
    for members in _subsets_with_first(n, size, first_lo, first_hi):
        if is_pds(g, VertexSet.from_ids(members, n)):
            return members
    return None


def lightest_pds_in_range(
    g: Graph, weights: Sequence[float], size: int, first_lo: int, first_hi: int, bound: float
) -> Optional[WeightedMembers]:
    """
    Lightest PDS of the given size (smallest member in range) strictly lighter than ``bound``.

    Equal weights keep the lexicographically first sorted member tuple, so
    {0, 3} stays ahead of {1, 2}.
    """
    n = g.vertex_count
    best: Optional[WeightedMembers] = None
    limit = bound
    for members in _subsets_with_first(n, size, first_lo, first_hi):
        weight = sum(weights[v] for v in members)
        if weight >= limit:
            continue
        if is_pds(g, VertexSet.from_ids(members, n)):
            best = (weight, members)
            limit = weight
    return best


class ParallelSearch:
    """
    Runs subset searches over a process pool.

    The candidates of one cardinality are split by the range of their smallest
    member; each worker scans its slice in lexicographic order and the partial
    answers are merged by (weight, members), so results do not depend on the
    number of workers. With ``workers=1`` everything runs in-process.
    """

    def __init__(self, workers: int = 1):
        if workers < 1:
            raise ValueError("workers must be positive")
        self.workers = workers
        self._pool: Optional[PoolType] = None

    def __enter__(self) -> "ParallelSearch":
        if self.workers > 1:
            self._pool = Pool(self.workers)
        return self

    def __exit__(
        self,
        exc_type: Optional[Type[BaseException]],
        exc: Optional[BaseException],
        tb: Optional[TracebackType],
    ) -> None:
        if self._pool is not None:
            self._pool.close()
            self._pool.join()
            self._pool = None

    def _slices(self, n: int, size: int) -> List[Tuple[int, int]]:
        last_first = n - size
        return split_range(0, last_first, min(self.workers, last_first + 1))

    def starmap(self, func: Callable[..., T], args: Sequence[Tuple[Any, ...]]) -> List[T]:
        if self._pool is None:
            return [func(*a) for a in args]
        return self._pool.starmap(func, args)

    def first_pds(self, g: Graph, size: int) -> Optional[Members]:
        if not 1 <= size <= g.vertex_count:
            return None
        args = [(g, size, lo, hi) for lo, hi in self._slices(g.vertex_count, size)]
        found = [m for m in self.starmap(first_pds_in_range, args) if m is not None]
        return min(found) if found else None

    def lightest_pds(
        self, g: Graph, weights: Sequence[float], size: int, bound: float = math.inf
    ) -> Optional[WeightedMembers]:
        if not 1 <= size <= g.vertex_count:
            return None
        args = [(g, tuple(weights), size, lo, hi, bound) for lo, hi in self._slices(g.vertex_count, size)]
        found = [r for r in self.starmap(lightest_pds_in_range, args) if r is not None]
        return min(found) if found else None


def run_parallel(func: Callable[..., T], args: Sequence[Tuple[Any, ...]], workers: int = 1) -> List[T]:
    """Evaluate independent jobs, in a pool when workers > 1; results keep the order of ``args``."""
    with ParallelSearch(workers) as runner:
        return runner.starmap(func, args)
