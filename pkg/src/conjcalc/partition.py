"""Union-find partitions and boolean pair relations over element indices."""

from __future__ import annotations

import json
from typing import Iterable, Iterator

import numpy as np


class ElementPartition:
    """Disjoint-set forest over ``0..n-1`` with union by rank and path halving."""

    __slots__ = ("parent", "rank", "_labels")

    def __init__(self, n: int):
        self.parent = list(range(n))
        self.rank = [0] * n
        self._labels = None

    @classmethod
    def discrete(cls, n: int) -> ElementPartition:
        return cls(n)

    @classmethod
    def universal(cls, n: int) -> ElementPartition:
        p = cls(n)
        for i in range(1, n):
            p.union(0, i)
        return p

    @classmethod
    def from_classes(cls, n: int, classes: Iterable[Iterable[int]]) -> ElementPartition:
        p = cls(n)
        for block in classes:
            block = list(block)
            for x in block[1:]:
                p.union(block[0], x)
        return p

    @classmethod
    def from_labels(cls, labels) -> ElementPartition:
        first = {}
        p = cls(len(labels))
        for i, lab in enumerate(labels):
            lab = lab.item() if hasattr(lab, "item") else lab
            if lab in first:
                p.union(first[lab], i)
            else:
                first[lab] = i
        return p

    def __len__(self) -> int:
        return len(self.parent)

    def find(self, x: int) -> int:
        parent = self.parent
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(self, a: int, b: int) -> bool:
        """Merge the classes of a and b; return True if they were distinct."""
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        if self.rank[ra] < self.rank[rb]:
            ra, rb = rb, ra
        self.parent[rb] = ra
        if self.rank[ra] == self.rank[rb]:
            self.rank[ra] += 1
        self._labels = None
        return True

    def same(self, a: int, b: int) -> bool:
        return self.find(a) == self.find(b)

    def labels(self) -> np.ndarray:
        """Class label per element: the least member of its class."""
        if self._labels is None:
            n = len(self)
            least = {}
            out = np.empty(n, dtype=np.int64)
            for x in range(n):
                r = self.find(x)
                out[x] = least.setdefault(r, x)
            out.setflags(write=False)
            self._labels = out
        return self._labels

    def classes(self) -> list[list[int]]:
        """Classes sorted by least member, members ascending."""
        blocks: dict[int, list[int]] = {}
        for x, lab in enumerate(self.labels()):
            blocks.setdefault(int(lab), []).append(x)
        return [blocks[k] for k in sorted(blocks)]

    def num_classes(self) -> int:
        return len(set(self.labels().tolist()))

    def copy(self) -> ElementPartition:
        p = ElementPartition(0)
        p.parent = self.parent.copy()
        p.rank = self.rank.copy()
        return p

    def to_relation(self) -> PairRelation:
        lab = self.labels()
        return PairRelation(lab[:, None] == lab[None, :])

    def __eq__(self, other) -> bool:
        if not isinstance(other, ElementPartition):
            return NotImplemented
        return len(self) == len(other) and np.array_equal(self.labels(), other.labels())

    def __hash__(self):
        return hash(self.labels().tobytes())

    def refines(self, other: ElementPartition) -> bool:
        """True when every class of self lies inside a class of other."""
        a, b = self.labels(), other.labels()
        return bool((b == b[a]).all())

    def to_json(self) -> dict:
        return {"classes": self.classes()}

    def __repr__(self) -> str:
        return f"ElementPartition({self.classes()})"


class PairRelation:
    """A binary relation on ``0..n-1`` stored as an ``n x n`` boolean matrix."""

    __slots__ = ("matrix",)

    def __init__(self, matrix: np.ndarray):
        m = np.asarray(matrix, dtype=bool)
        if m.ndim != 2 or m.shape[0] != m.shape[1]:
            raise ValueError("relation matrix must be square")
        self.matrix = m
        self.matrix.setflags(write=False)

    @classmethod
    def from_pairs(cls, n: int, pairs: Iterable[tuple[int, int]]) -> PairRelation:
        m = np.zeros((n, n), dtype=bool)
        pairs = list(pairs)
        if pairs:
            a, b = np.array(pairs).T
            m[a, b] = True
        return cls(m)

    @classmethod
    def identity(cls, n: int) -> PairRelation:
        return cls(np.eye(n, dtype=bool))

    @classmethod
    def universal(cls, n: int) -> PairRelation:
        return cls(np.ones((n, n), dtype=bool))

    def __len__(self) -> int:
        return int(self.matrix.sum())

    @property
    def order(self) -> int:
        return self.matrix.shape[0]

    def __contains__(self, pair) -> bool:
        a, b = pair
        return bool(self.matrix[a, b])

    def __iter__(self) -> Iterator[tuple[int, int]]:
        for a, b in np.argwhere(self.matrix):
            yield int(a), int(b)

    def pairs(self) -> list[tuple[int, int]]:
        return list(self)

    @property
    def symmetric(self) -> bool:
        return bool((self.matrix == self.matrix.T).all())

    @property
    def reflexive(self) -> bool:
        return bool(self.matrix.diagonal().all())

    def issubset(self, other: PairRelation) -> bool:
        return not (self.matrix & ~other.matrix).any()

    def __le__(self, other: PairRelation) -> bool:
        return self.issubset(other)

    def __eq__(self, other) -> bool:
        if isinstance(other, ElementPartition):
            other = other.to_relation()
        if not isinstance(other, PairRelation):
            return NotImplemented
        return np.array_equal(self.matrix, other.matrix)

    def __hash__(self):
        return hash(self.matrix.tobytes())

    def __or__(self, other: PairRelation) -> PairRelation:
        return PairRelation(self.matrix | other.matrix)

    def witness_not_in(self, other: PairRelation) -> tuple[int, int] | None:
        """Some pair of self missing from other, or None."""
        diff = np.argwhere(self.matrix & ~other.matrix)
        if len(diff) == 0:
            return None
        return int(diff[0][0]), int(diff[0][1])

    def closure(self) -> ElementPartition:
        """Reflexive-symmetric-transitive closure as a partition."""
        p = ElementPartition(self.order)
        for a, b in np.argwhere(self.matrix & ~np.eye(self.order, dtype=bool)):
            p.union(int(a), int(b))
        return p

    def is_equivalence(self) -> bool:
        return self.reflexive and self.symmetric and self == self.closure().to_relation()

    def to_json(self) -> dict:
        return {"pairs": self.pairs()}

    def __repr__(self) -> str:
        return f"PairRelation(order={self.order}, pairs={len(self)})"


def dumps_partition(p: ElementPartition) -> str:
    return json.dumps(p.to_json())
