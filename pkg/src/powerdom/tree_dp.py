"""
Weighted power domination on trees in linear time.

Every vertex carries a five-slot class vector: slot X is the minimum weight of
a partial solution of its subtree falling in class X (see
``exact_solver.classify_pair`` for the class definitions), +inf when the class
is empty. Leaves start at (w, inf, inf, 0, inf); children are folded into
their fathers in tree-ordering order, and the answer is the best of the root's
slots a, b and c.

A fold reads only the father's vector as it stood before the fold. Each fold
also records, per new slot, which (child slot, prior father slot) pair won, so
an optimal set can be read back from the root.
"""

import logging
import math
import time
from itertools import compress
from typing import List, NamedTuple, Sequence

from .constants import INF, DPClass
from .errors import ConsistencyError
from .exact_solver import PdsResult
from .graph import VertexSet
from .propagation import is_pds
from .tree import WeightedTree

logger = logging.getLogger(__name__)

A, B, C, D, E = DPClass.A, DPClass.B, DPClass.C, DPClass.D, DPClass.E

# maps a final slot to membership: only slot a holds the vertex itself
_MEMBER_FLAG = bytes(1 if slot == A else 0 for slot in range(256))


class ClassVector(NamedTuple):
    a: float
    b: float
    c: float
    d: float
    e: float

    @classmethod
    def initial(cls, weight: float) -> "ClassVector":
        return cls(weight, INF, INF, 0, INF)


def _fold_all(
    father: Sequence[int],
    sa: List[float],
    sb: List[float],
    sc: List[float],
    sd: List[float],
    se: List[float],
    choices: List[bytearray],
) -> None:
    """
    Fold every non-root position into its father, in order.

    choices[X][j] receives child_slot * 5 + father_slot for the pair that set
    slot X of father[j] at fold j. Ties go to the lowest such code, so the
    lowest child class letter wins first, then the lowest father letter.
    """
    ka, kb, kc, kd, ke = choices
    for j in range(len(father) - 1):
        k = father[j]
        ca, cb, cc, cd, ce = sa[j], sb[j], sc[j], sd[j], se[j]
        pa, pb, pc, pd, pe = sa[k], sb[k], sc[k], sd[k], se[k]

        if ca <= cb:
            ab, ab_k = ca, 5 * A
        else:
            ab, ab_k = cb, 5 * B
        if cc < ab:
            abc, abc_k = cc, 5 * C
        else:
            abc, abc_k = ab, ab_k
        if cd <= ce:
            de, de_k = cd, 5 * D
        else:
            de, de_k = ce, 5 * E
        if de < abc:
            best, best_k = de, de_k
        else:
            best, best_k = abc, abc_k

        sa[k] = pa + best
        ka[j] = best_k + A

        value, code = pb + abc, abc_k + B
        other, other_k = pd + ab, ab_k + D
        if other < value or (other == value and other_k < code):
            value, code = other, other_k
        sb[k] = value
        kb[j] = code

        value, code = pb + de, de_k + B
        other, other_k = pc + abc, abc_k + C
        if other < value or (other == value and other_k < code):
            value, code = other, other_k
        other, other_k = pe + ab, ab_k + E
        if other < value or (other == value and other_k < code):
            value, code = other, other_k
        sc[k] = value
        kc[j] = code

        sd[k] = pd + cc
        kd[j] = 5 * C + D

        value, code = pd + de, de_k + D
        other = pe + cc
        if other < value or (other == value and 5 * C + E < code):
            value, code = other, 5 * C + E
        se[k] = value
        ke[j] = code


def merge_child(parent_vec: ClassVector, child_vec: ClassVector) -> ClassVector:
    """Father's vector after one child subtree is attached below it."""
    slots = [[c, p] for c, p in zip(child_vec, parent_vec)]
    _fold_all((1, 1), *slots, [bytearray(1) for _ in DPClass])
    return ClassVector(*(s[1] for s in slots))


def _fold_tree(t: WeightedTree, choices: List[bytearray]) -> List[List[float]]:
    n = t.vertex_count
    slots: List[List[float]] = [list(t.weights), [INF] * n, [INF] * n, [0] * n, [INF] * n]
    _fold_all(t.father, *slots, choices)
    return slots


def _new_choices(n: int) -> List[bytearray]:
    return [bytearray(max(n - 1, 0)) for _ in DPClass]


def dp_class_minima(t: WeightedTree) -> ClassVector:
    """Final class vector of the root."""
    slots = _fold_tree(t, _new_choices(t.vertex_count))
    root = t.root
    return ClassVector(*(s[root] for s in slots))


def _reconstruct(t: WeightedTree, choices: List[bytearray], root_slot: int) -> bytearray:
    """Walk the recorded choices back from the root; returns membership flags."""
    n = t.vertex_count
    father = t.father
    slot = bytearray(n)
    slot[t.root] = root_slot
    # undo folds last-to-first: when fold j is undone, every later fold into
    # father[j] already is, so slot[father[j]] is the slot it held right after j
    for j in range(n - 2, -1, -1):
        k = father[j]
        slot[j], slot[k] = divmod(choices[slot[k]][j], 5)
    if slot.count(A) + slot.count(D) != n:
        v = next(v for v, s in enumerate(slot) if s not in (A, D))
        raise ConsistencyError(f"vertex {t.labels[v]} unwinds to slot {DPClass(slot[v]).letter}")
    return slot.translate(_MEMBER_FLAG)


def wpdt(t: WeightedTree) -> PdsResult:
    """
    Minimum-weight power dominating set of a weighted tree in O(n).

    The returned set is rebuilt from the fold choices and checked: it must
    dominate the tree and weigh exactly the DP optimum.

    Raises:
        ConsistencyError: if the reconstructed set fails either check
    """
    start = time.time()
    n = t.vertex_count
    choices = _new_choices(n)
    slots = _fold_tree(t, choices)
    root = t.root
    weight, root_slot = min((slots[A][root], A), (slots[B][root], B), (slots[C][root], C))
    if weight == INF:
        raise ConsistencyError("every class at the root is empty")

    flags = _reconstruct(t, choices, root_slot)
    members = VertexSet.from_flags(flags)
    actual = sum(compress(t.weights, flags))
    if not math.isclose(actual, weight, rel_tol=1e-9, abs_tol=1e-12):
        raise ConsistencyError(f"reconstructed set weighs {actual}, DP optimum is {weight}")
    g = t.to_graph()
    if not is_pds(g, members):
        raise ConsistencyError("reconstructed set does not dominate the tree")
    logger.info(f"gamma_p^w = {weight} on {n} vertices ({time.time() - start:.3f}s)")
    return PdsResult(members=members, cardinality=len(members), weight=weight, optimal=True, graph=g)
