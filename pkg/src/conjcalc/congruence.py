"""Congruences on finite semigroups: generation, quotients and closures."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable

import numpy as np

from .partition import ElementPartition, PairRelation
from .semigroup import FiniteSemigroup, validate


class IncompatiblePartition(ValueError):
    pass


@dataclass(frozen=True)
class Congruence:
    semigroup: FiniteSemigroup
    partition: ElementPartition

    def classes(self) -> list[list[int]]:
        return self.partition.classes()

    def related(self, a: int, b: int) -> bool:
        return self.partition.same(a, b)

    def __len__(self) -> int:
        return self.partition.num_classes()

    def to_json(self) -> dict:
        return self.partition.to_json()


def _pairs(pairs) -> Iterable[tuple[int, int]]:
    if isinstance(pairs, (PairRelation, ElementPartition)):
        rel = pairs.to_relation() if isinstance(pairs, ElementPartition) else pairs
        return [(a, b) for a, b in rel if a != b]
    return pairs


def congruence_generated(S: FiniteSemigroup, pairs) -> Congruence:
    """Least congruence containing ``pairs`` (a pair list, relation or partition).

    Every successful merge of ``a`` and ``b`` queues ``(ca, cb)`` and
    ``(ac, bc)`` for all ``c``; the classes stop changing once the queue drains.
    """
    table = S.table
    part = ElementPartition(len(S))
    queue = deque(_pairs(pairs))
    while queue:
        a, b = queue.popleft()
        if part.union(a, b):
            queue.extend(zip(table[:, a].tolist(), table[:, b].tolist()))
            queue.extend(zip(table[a].tolist(), table[b].tolist()))
    return Congruence(S, part)


def commutator_pairs(S: FiniteSemigroup) -> list[tuple[int, int]]:
    t = S.table
    a, b = np.nonzero(t != t.T)
    return list(zip(t[a, b].tolist(), t[b, a].tolist()))


def least_commutative_congruence(S: FiniteSemigroup) -> Congruence:
    return congruence_generated(S, commutator_pairs(S))


def is_compatible(S: FiniteSemigroup, partition: ElementPartition) -> bool:
    """Full scan: related elements have related left and right multiples."""
    return incompatibility_witness(S, partition) is None


def incompatibility_witness(S: FiniteSemigroup, partition: ElementPartition):
    """``(a, b, c, side)`` with ``a ~ b`` but ``ca !~ cb`` (side ``"left"``) or ``ac !~ bc``; else None."""
    lab = partition.labels()
    products = lab[S.table]          # class of a*b
    rep = lab                        # a's class representative is lab[a]
    # rows of related elements must agree class-wise, and so must columns
    bad_rows = np.nonzero((products != products[rep]).any(axis=1))[0]
    if len(bad_rows):
        a = int(bad_rows[0])
        c = int(np.nonzero(products[a] != products[rep[a]])[0][0])
        return int(rep[a]), a, c, "right"
    bad_cols = np.nonzero((products != products[:, rep]).any(axis=0))[0]
    if len(bad_cols):
        a = int(bad_cols[0])
        c = int(np.nonzero(products[:, a] != products[:, rep[a]])[0][0])
        return int(rep[a]), a, c, "left"
    return None


def as_congruence(S: FiniteSemigroup, partition: ElementPartition) -> Congruence:
    w = incompatibility_witness(S, partition)
    if w is not None:
        raise IncompatiblePartition(f"partition is not a congruence: witness {w}")
    return Congruence(S, partition)


def quotient(S: FiniteSemigroup, congruence: Congruence | ElementPartition) -> tuple[FiniteSemigroup, np.ndarray]:
    """Quotient semigroup and the canonical map (element index to class index)."""
    part = congruence.partition if isinstance(congruence, Congruence) else congruence
    w = incompatibility_witness(S, part)
    if w is not None:
        raise IncompatiblePartition(f"partition is not a congruence: witness {w}")
    classes = part.classes()
    proj = np.empty(len(S), dtype=np.int64)
    for k, block in enumerate(classes):
        proj[block] = k
    reps = [block[0] for block in classes]
    table = proj[S.table[np.ix_(reps, reps)]]
    labels = ["{" + ",".join(str(S.elements[x]) for x in block) + "}" for block in classes]
    return validate(labels, table, max_order=max(len(classes), 1)), proj


def closure_of_subset(S: FiniteSemigroup, subset: Iterable[int], partition: ElementPartition) -> frozenset[int]:
    """Union of the classes that meet ``subset``."""
    lab = partition.labels()
    hit = {int(lab[x]) for x in subset}
    return frozenset(int(x) for x in np.flatnonzero(np.isin(lab, list(hit))))


def is_subsemigroup(S: FiniteSemigroup, subset: Iterable[int]) -> bool:
    sub = sorted(set(subset))
    if not sub:
        return False
    return bool(np.isin(S.table[np.ix_(sub, sub)], sub).all())


def is_left_ideal(S: FiniteSemigroup, subset: Iterable[int]) -> bool:
    sub = sorted(set(subset))
    return bool(sub) and bool(np.isin(S.table[:, sub], sub).all())


def is_right_ideal(S: FiniteSemigroup, subset: Iterable[int]) -> bool:
    sub = sorted(set(subset))
    return bool(sub) and bool(np.isin(S.table[sub, :], sub).all())


def is_ideal(S: FiniteSemigroup, subset: Iterable[int]) -> bool:
    return is_left_ideal(S, subset) and is_right_ideal(S, subset)


def left_ideal_generated(S: FiniteSemigroup, subset: Iterable[int]) -> frozenset[int]:
    """``S^1 A``"""
    sub = sorted(set(subset))
    return frozenset(sub) | frozenset(S.table[:, sub].ravel().tolist())


def right_ideal_generated(S: FiniteSemigroup, subset: Iterable[int]) -> frozenset[int]:
    sub = sorted(set(subset))
    return frozenset(sub) | frozenset(S.table[sub, :].ravel().tolist())


def is_commutative_quotient(S: FiniteSemigroup, partition: ElementPartition) -> bool:
    lab = partition.labels()
    prod = lab[S.table]
    return bool((prod == prod.T).all())
