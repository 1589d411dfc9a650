"""Finite groups as Cayley tables: subgroups, commutators and a small zoo."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from typing import Iterable

import numpy as np

from .semigroup import FiniteSemigroup, SemigroupError, direct_product, validate


class NotAGroup(SemigroupError):
    pass


@dataclass(frozen=True)
class FiniteGroup:
    semigroup: FiniteSemigroup
    inverse: tuple[int, ...]

    @classmethod
    def from_semigroup(cls, S: FiniteSemigroup) -> FiniteGroup:
        if S.identity is None:
            raise NotAGroup("no identity element")
        n = len(S)
        for row in (S.table, S.table.T):
            if not all(len(np.unique(r)) == n for r in row):
                raise NotAGroup("Cayley table is not a Latin square")
        e = S.identity
        inv = tuple(int(np.flatnonzero(S.table[a] == e)[0]) for a in range(n))
        return cls(S, inv)

    def __len__(self) -> int:
        return len(self.semigroup)

    @property
    def identity(self) -> int:
        return self.semigroup.identity

    @property
    def elements(self) -> tuple:
        return self.semigroup.elements

    def mul(self, *xs: int) -> int:
        return self.semigroup.product(xs)

    def inv(self, a: int) -> int:
        return self.inverse[a]

    def index(self, label) -> int:
        return self.semigroup.index(label)

    def commutator(self, a: int, b: int) -> int:
        """``a b a^-1 b^-1``"""
        return self.mul(a, b, self.inv(a), self.inv(b))


def subgroup_generated(G: FiniteGroup, gens: Iterable[int]) -> frozenset[int]:
    """Closure under products; finite, so this is a subgroup."""
    closed = {G.identity}
    frontier = [G.identity]
    gens = sorted(set(gens))
    while frontier:
        new = []
        for a in frontier:
            for g in gens:
                c = G.mul(a, g)
                if c not in closed:
                    closed.add(c)
                    new.append(c)
        frontier = new
    return frozenset(closed)


def derived_subgroup(G: FiniteGroup) -> frozenset[int]:
    n = len(G)
    return subgroup_generated(G, {G.commutator(a, b) for a in range(n) for b in range(n)})


def is_normal(G: FiniteGroup, N: Iterable[int]) -> bool:
    N = frozenset(N)
    if G.identity not in N or any(G.mul(a, b) not in N for a in N for b in N):
        return False
    return all(G.mul(g, x, G.inv(g)) in N for g in range(len(G)) for x in N)


def normal_closure(G: FiniteGroup, gens: Iterable[int]) -> frozenset[int]:
    conj = {G.mul(g, x, G.inv(g)) for g in range(len(G)) for x in gens}
    return subgroup_generated(G, conj)


def group_sim_s(G: FiniteGroup, s: int, t: int) -> bool:
    """``s t^-1`` lies in the derived subgroup."""
    return G.mul(s, G.inv(t)) in derived_subgroup(G)


def is_abelian(G: FiniteGroup) -> bool:
    t = G.semigroup.table
    return bool((t == t.T).all())


# ------------------------------------------------------------------ the zoo
# Labels avoid "0", which marks the zero entry of sandwich matrices.

def cyclic(n: int) -> FiniteGroup:
    idx = np.arange(n)
    labels = ["e"] + [("a" if k == 1 else f"a{k}") for k in range(1, n)]
    return FiniteGroup.from_semigroup(validate(labels, (idx[:, None] + idx[None, :]) % n))


def _perm_label(p: tuple[int, ...]) -> str:
    seen, parts = set(), []
    for start in range(len(p)):
        if start in seen or p[start] == start:
            continue
        cyc, x = [], start
        while x not in seen:
            seen.add(x)
            cyc.append(str(x + 1))
            x = p[x]
        parts.append("(" + "".join(cyc) + ")")
    return "".join(parts) or "e"


def permutation_group(perms: list[tuple[int, ...]]) -> FiniteGroup:
    """Group of permutations under ``(p q)(x) = p(q(x))``; the list must be closed."""
    index = {p: i for i, p in enumerate(perms)}
    n = len(perms)
    table = np.empty((n, n), dtype=np.int64)
    for i, p in enumerate(perms):
        for j, q in enumerate(perms):
            table[i, j] = index[tuple(p[x] for x in q)]
    labels = [_perm_label(p) for p in perms]
    return FiniteGroup.from_semigroup(validate(labels, table, max_order=max(n, 512)))


def symmetric(n: int) -> FiniteGroup:
    return permutation_group(list(permutations(range(n))))


def alternating(n: int) -> FiniteGroup:
    perms = list(permutations(range(n)))
    even = [p for p in perms if _parity(p) == 0]
    return permutation_group(even)


def _parity(p: tuple[int, ...]) -> int:
    return sum(1 for i in range(len(p)) for j in range(i + 1, len(p)) if p[i] > p[j]) % 2


def dihedral(n: int) -> FiniteGroup:
    """Symmetries of an n-gon as permutations of its vertices (order 2n)."""
    rot = tuple((x + 1) % n for x in range(n))
    ref = tuple((-x) % n for x in range(n))
    elems = {tuple(range(n))}
    frontier = list(elems)
    while frontier:
        new = []
        for p in frontier:
            for g in (rot, ref):
                q = tuple(p[x] for x in g)
                if q not in elems:
                    elems.add(q)
                    new.append(q)
        frontier = new
    return permutation_group(sorted(elems))


def group_product(G: FiniteGroup, H: FiniteGroup) -> FiniteGroup:
    return FiniteGroup.from_semigroup(direct_product(G.semigroup, H.semigroup))


def small_groups() -> dict[str, FiniteGroup]:
    """Every group of order at most 6 up to isomorphism."""
    return {
        "C1": cyclic(1), "C2": cyclic(2), "C3": cyclic(3), "C4": cyclic(4),
        "C2xC2": group_product(cyclic(2), cyclic(2)), "C5": cyclic(5), "C6": cyclic(6),
        "S3": symmetric(3),
    }
