"""Finite semigroups given by Cayley tables.

Elements are dense integer indices ``0..n-1``; labels are carried along only
for display and serialization.  ``table[a, b]`` is the index of ``a*b`` (row is
the left factor).
"""

from __future__ import annotations

import json
from itertools import product
from typing import Iterable, Sequence

import numpy as np

DEFAULT_MAX_ORDER = 512


class SemigroupError(ValueError):
    pass


class ShapeMismatch(SemigroupError):
    pass


class NonAssociative(SemigroupError):
    def __init__(self, a: int, b: int, c: int):
        self.triple = (a, b, c)
        super().__init__(f"(a*b)*c != a*(b*c) for (a, b, c) = {self.triple}")


class TooLarge(SemigroupError):
    pass


def _find_identity(table: np.ndarray) -> int | None:
    n = len(table)
    idx = np.arange(n)
    for e in range(n):
        if np.array_equal(table[e], idx) and np.array_equal(table[:, e], idx):
            return e
    return None


def _find_zero(table: np.ndarray) -> int | None:
    for z in range(len(table)):
        if (table[z] == z).all() and (table[:, z] == z).all():
            return z
    return None


def first_nonassociative_triple(table: np.ndarray) -> tuple[int, int, int] | None:
    """Return the lexicographically first triple violating associativity."""
    n = len(table)
    for a in range(n):
        # left[b, c] = (a*b)*c ; right[b, c] = a*(b*c)
        left = table[table[a]]
        right = table[a][table]
        bad = np.argwhere(left != right)
        if len(bad):
            b, c = bad[0]
            return a, int(b), int(c)
    return None


class FiniteSemigroup:
    """An immutable finite semigroup.

    Use :func:`validate` (or :meth:`from_table`) to build one; the identity and
    zero are always recomputed from the table.
    """

    __slots__ = ("elements", "table", "identity", "zero", "_s1")

    def __init__(self, elements: Sequence, table: np.ndarray, identity: int | None, zero: int | None):
        self.elements = tuple(elements)
        self.table = table
        self.table.setflags(write=False)
        self.identity = identity
        self.zero = zero
        self._s1 = None

    @classmethod
    def from_table(cls, table, elements: Sequence | None = None, *, max_order: int = DEFAULT_MAX_ORDER):
        if elements is None:
            elements = [str(i) for i in range(len(table))]
        return validate(elements, table, max_order=max_order)

    def __len__(self) -> int:
        return len(self.table)

    def __repr__(self) -> str:
        extra = []
        if self.identity is not None:
            extra.append(f"identity={self.elements[self.identity]!r}")
        if self.zero is not None:
            extra.append(f"zero={self.elements[self.zero]!r}")
        return f"<FiniteSemigroup order={len(self)} {' '.join(extra)}>".replace(" >", ">")

    def mul(self, a: int, b: int) -> int:
        return int(self.table[a, b])

    def product(self, factors: Iterable[int]) -> int:
        it = iter(factors)
        acc = next(it)
        for x in it:
            acc = int(self.table[acc, x])
        return acc

    def index(self, label) -> int:
        return self.elements.index(label)

    @property
    def is_monoid(self) -> bool:
        return self.identity is not None

    def monoid_table(self) -> tuple[np.ndarray, int]:
        """Cayley table of S^1 and the index of its identity.

        When S already has an identity this is S's own table; otherwise one
        extra index ``len(S)`` is appended.  Products that stay inside S have
        the same indices as in S.
        """
        if self._s1 is None:
            if self.identity is not None:
                self._s1 = (self.table, self.identity)
            else:
                n = len(self)
                t = np.empty((n + 1, n + 1), dtype=self.table.dtype)
                t[:n, :n] = self.table
                t[n, :] = np.arange(n + 1)
                t[:, n] = np.arange(n + 1)
                t.setflags(write=False)
                self._s1 = (t, n)
        return self._s1

    def to_json(self) -> dict:
        return {"elements": [str(e) for e in self.elements], "table": self.table.tolist()}

    def dumps(self) -> str:
        return json.dumps(self.to_json())


def validate(elements: Sequence, table, *, max_order: int = DEFAULT_MAX_ORDER) -> FiniteSemigroup:
    """Check a Cayley table and build a :class:`FiniteSemigroup`.

    Raises ShapeMismatch for a malformed table and NonAssociative (carrying the
    first failing triple) when associativity fails.
    """
    arr = np.asarray(table)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
        raise ShapeMismatch(f"table must be square, got shape {arr.shape}")
    n = arr.shape[0]
    if n == 0:
        raise ShapeMismatch("empty semigroup")
    if len(elements) != n:
        raise ShapeMismatch(f"{len(elements)} labels for a table of order {n}")
    if len(set(map(str, elements))) != n:
        raise ShapeMismatch("element labels must be distinct")
    if n > max_order:
        raise TooLarge(f"order {n} exceeds the configured maximum {max_order}")
    if not np.issubdtype(arr.dtype, np.integer):
        raise ShapeMismatch("table entries must be integers")
    if arr.min() < 0 or arr.max() >= n:
        raise ShapeMismatch(f"table entries must lie in [0, {n})")
    arr = arr.astype(np.int32 if n > 127 else np.int16, copy=True)
    bad = first_nonassociative_triple(arr)
    if bad is not None:
        raise NonAssociative(*bad)
    return FiniteSemigroup(elements, arr, _find_identity(arr), _find_zero(arr))


def from_json(data: dict | str, *, max_order: int = DEFAULT_MAX_ORDER) -> FiniteSemigroup:
    if isinstance(data, str):
        data = json.loads(data)
    try:
        elements, table = data["elements"], data["table"]
    except (KeyError, TypeError) as exc:
        raise ShapeMismatch("semigroup JSON needs 'elements' and 'table'") from exc
    return validate(elements, table, max_order=max_order)


def from_operation(elements: Sequence, op) -> FiniteSemigroup:
    """Tabulate a binary operation given on labels."""
    index = {e: i for i, e in enumerate(elements)}
    n = len(elements)
    table = np.empty((n, n), dtype=np.int32)
    for i, a in enumerate(elements):
        for j, b in enumerate(elements):
            table[i, j] = index[op(a, b)]
    return validate([str(e) for e in elements], table)


def adjoin_identity(S: FiniteSemigroup) -> FiniteSemigroup:
    if S.identity is not None:
        return S
    t, one = S.monoid_table()
    return FiniteSemigroup(S.elements + ("1",) if "1" not in S.elements else S.elements + ("1'",),
                           np.array(t), one, S.zero)


def is_commutative(S: FiniteSemigroup) -> bool:
    return bool((S.table == S.table.T).all())


def subsemigroup_generated(S: FiniteSemigroup, subset: Iterable[int]) -> frozenset[int]:
    gens = sorted(set(subset))
    if not gens:
        raise ValueError("generating set must be nonempty")
    closed = set(gens)
    frontier = list(gens)
    while frontier:
        new = []
        for a in frontier:
            for b in list(closed):
                for c in (S.mul(a, b), S.mul(b, a)):
                    if c not in closed:
                        closed.add(c)
                        new.append(c)
        frontier = new
    return frozenset(closed)


def direct_product(S: FiniteSemigroup, T: FiniteSemigroup) -> FiniteSemigroup:
    n, m = len(S), len(T)
    table = (S.table.astype(np.int64)[:, None, :, None] * m + T.table[None, :, None, :]).reshape(n * m, n * m)
    labels = [f"({a},{b})" for a, b in product(S.elements, T.elements)]
    return validate(labels, table, max_order=max(DEFAULT_MAX_ORDER, n * m))


# ---------------------------------------------------------------- small zoo

def cyclic_group(n: int) -> FiniteSemigroup:
    idx = np.arange(n)
    return validate([str(i) for i in range(n)], (idx[:, None] + idx[None, :]) % n)


def left_zero(n: int) -> FiniteSemigroup:
    return validate([chr(ord("a") + i) for i in range(n)], np.repeat(np.arange(n)[:, None], n, axis=1))


def min_semigroup(n: int = 3) -> FiniteSemigroup:
    idx = np.arange(n)
    return validate([str(i) for i in range(n)], np.minimum(idx[:, None], idx[None, :]))


def trivial_multiplication(n: int = 2) -> FiniteSemigroup:
    """Null semigroup: every product is the zero, index 0."""
    return validate(["0"] + [f"x{i}" for i in range(1, n)], np.zeros((n, n), dtype=int))


def matrix_unit_semigroup(n: int) -> FiniteSemigroup:
    """``{e_ij} u {0}`` with ``e_ij e_kl = e_il`` if ``j == k`` else 0; zero is index 0."""
    if n < 1:
        raise ValueError("n must be positive")
    units = [(i, j) for i in range(1, n + 1) for j in range(1, n + 1)]
    pos = {u: k + 1 for k, u in enumerate(units)}
    size = n * n + 1
    table = np.zeros((size, size), dtype=int)
    for (i, j), a in pos.items():
        for (k, l), b in pos.items():
            if j == k:
                table[a, b] = pos[(i, l)]
    labels = ["0"] + [f"e{i}{j}" for i, j in units]
    return validate(labels, table)
