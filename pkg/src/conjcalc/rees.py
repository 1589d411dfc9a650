"""Rees matrix semigroups over finite groups.

A sandwich matrix ``P`` is stored with rows indexed by Lambda and columns by
I; an entry is a group element index or ``None`` for zero.  Nonzero elements
are triples ``(i, g, lam)`` of integers, and the zero is :data:`ZERO`.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import product
from typing import Sequence

import numpy as np

from .congruence import Congruence, as_congruence
from .groups import FiniteGroup, derived_subgroup, is_normal, subgroup_generated
from .partition import ElementPartition
from .semigroup import DEFAULT_MAX_ORDER, TooLarge, from_json as semigroup_from_json, validate


class InvalidSandwich(ValueError):
    pass


class HasZeroEntries(ValueError):
    pass


class NotNormalized(ValueError):
    pass


class NotLinked(ValueError):
    pass


class _Zero:
    __slots__ = ()

    def __repr__(self) -> str:
        return "ZERO"

    def __reduce__(self):
        return "ZERO"


ZERO = _Zero()
ZERO_TOKEN = "0"

Triple = tuple[int, int, int]


@dataclass(frozen=True)
class ReesSemigroup:
    group: FiniteGroup
    n_i: int
    n_lambda: int
    sandwich: tuple[tuple[int | None, ...], ...]
    with_zero: bool

    @property
    def has_zero_entries(self) -> bool:
        return any(x is None for row in self.sandwich for x in row)

    def entry(self, lam: int, i: int) -> int | None:
        return self.sandwich[lam][i]

    def triples(self) -> list[Triple]:
        return list(product(range(self.n_i), range(len(self.group)), range(self.n_lambda)))

    def elements(self) -> list:
        return self.triples() + ([ZERO] if self.with_zero else [])

    def __len__(self) -> int:
        return self.n_i * len(self.group) * self.n_lambda + int(self.with_zero)

    def multiply(self, a, b):
        if a is ZERO or b is ZERO:
            return ZERO
        i, s, lam = a
        j, t, mu = b
        p = self.sandwich[lam][j]
        if p is None:
            return ZERO
        return i, self.group.mul(s, p, t), mu

    def is_normalized(self) -> bool:
        """Some row and some column consist of identities only."""
        if self.has_zero_entries:
            return False
        e = self.group.identity
        rows = any(all(x == e for x in row) for row in self.sandwich)
        cols = any(all(row[i] == e for row in self.sandwich) for i in range(self.n_i))
        return rows and cols

    def label(self, x) -> str:
        if x is ZERO:
            return ZERO_TOKEN
        i, g, lam = x
        return f"{i}:{self.group.elements[g]}:{lam}"

    def parse(self, text: str):
        if text.strip() == ZERO_TOKEN:
            if not self.with_zero:
                raise ValueError("this Rees semigroup has no zero")
            return ZERO
        i, g, lam = text.split(":")
        return self.check((int(i), self.group.index(g), int(lam)))

    def check(self, x):
        if x is ZERO:
            return x
        i, g, lam = x
        if not (0 <= i < self.n_i and 0 <= g < len(self.group) and 0 <= lam < self.n_lambda):
            raise ValueError(f"{x} is not an element")
        return x

    def export(self, max_order: int = DEFAULT_MAX_ORDER):
        """Cayley table of the semigroup; element order follows :meth:`elements`."""
        elems = self.elements()
        if len(elems) > max_order:
            raise TooLarge(f"{len(elems)} elements exceed the export cap {max_order}")
        pos = {x: k for k, x in enumerate(elems)}
        table = np.array([[pos[self.multiply(a, b)] for b in elems] for a in elems], dtype=np.int64)
        return validate([self.label(x) for x in elems], table, max_order=max_order)

    def index(self, x) -> int:
        if x is ZERO:
            if not self.with_zero:
                raise ValueError("no zero")
            return len(self) - 1
        i, g, lam = x
        return (i * len(self.group) + g) * self.n_lambda + lam

    def to_json(self) -> dict:
        names = self.group.elements
        return {
            "group": self.group.semigroup.to_json(),
            "I": self.n_i,
            "Lambda": self.n_lambda,
            "P": [[ZERO_TOKEN if x is None else str(names[x]) for x in row] for row in self.sandwich],
        }


def rees_construct(G: FiniteGroup, n_i: int, n_lambda: int, P: Sequence[Sequence[int | None]],
                   with_zero: bool | None = None) -> ReesSemigroup:
    """Build M^0(G; I, Lambda; P), or M(G; I, Lambda; P) when ``with_zero`` is False.

    ``with_zero`` defaults to whether P has a zero entry.
    """
    if n_i < 1 or n_lambda < 1:
        raise InvalidSandwich("index sets must be nonempty")
    rows = tuple(tuple(None if x is None else int(x) for x in row) for row in P)
    if len(rows) != n_lambda or any(len(r) != n_i for r in rows):
        raise InvalidSandwich(f"P must be {n_lambda} x {n_i} (rows indexed by Lambda)")
    for row in rows:
        for x in row:
            if x is not None and not 0 <= x < len(G):
                raise InvalidSandwich(f"entry {x} is not a group element")
    if any(all(x is None for x in row) for row in rows):
        raise InvalidSandwich("P has an all-zero row")
    if any(all(row[i] is None for row in rows) for i in range(n_i)):
        raise InvalidSandwich("P has an all-zero column")
    has_zero = any(x is None for row in rows for x in row)
    if with_zero is None:
        with_zero = has_zero
    if has_zero and not with_zero:
        raise InvalidSandwich("a sandwich matrix with zero entries needs the zero element")
    return ReesSemigroup(G, n_i, n_lambda, rows, with_zero)


def rees_from_json(data: dict | str) -> ReesSemigroup:
    if isinstance(data, str):
        data = json.loads(data)
    G = FiniteGroup.from_semigroup(semigroup_from_json(data["group"]))
    if ZERO_TOKEN in map(str, G.elements):
        raise InvalidSandwich(f"group labels must not use the zero token {ZERO_TOKEN!r}")
    P = [[None if str(x) == ZERO_TOKEN else G.index(str(x)) for x in row] for row in data["P"]]
    return rees_construct(G, int(data["I"]), int(data["Lambda"]), P, data.get("with_zero"))


# -------------------------------------------------------------- classifiers

def _conjugate_twisted(G: FiniteGroup, p: int, s: int, q: int, t: int) -> bool:
    """Some r in G with ``r p s = t q r``."""
    return any(G.mul(r, p, s) == G.mul(t, q, r) for r in range(len(G)))


def rees_sim_p1(sem: ReesSemigroup, a, b) -> bool:
    if a == b:
        return True
    if a is ZERO or b is ZERO:
        x = b if a is ZERO else a
        return sem.entry(x[2], x[0]) is None
    (i, s, lam), (j, t, mu) = a, b
    p, q = sem.entry(lam, i), sem.entry(mu, j)
    if p is None or q is None:
        return False
    return _conjugate_twisted(sem.group, p, s, q, t)


def rees_sim_p(sem: ReesSemigroup, a, b) -> bool:
    if a == b:
        return True

    def entry(x):
        return None if x is ZERO else sem.entry(x[2], x[0])

    if a is ZERO or b is ZERO:
        return entry(a) is None and entry(b) is None
    p, q = entry(a), entry(b)
    if p is None and q is None:
        return True
    if p is None or q is None:
        return False
    return _conjugate_twisted(sem.group, p, a[1], q, b[1])


@dataclass(frozen=True)
class Normalization:
    """``P'[lam][i] = u[lam] P[lam][i] v[i]`` and ``(i, g, lam) -> (i, v_i^-1 g u_lam^-1, lam)``."""
    source: ReesSemigroup
    target: ReesSemigroup
    u: tuple[int, ...]
    v: tuple[int, ...]

    def __call__(self, x):
        if x is ZERO:
            return ZERO
        G = self.source.group
        i, g, lam = x
        return i, G.mul(G.inv(self.v[i]), g, G.inv(self.u[lam])), lam

    def verify(self) -> bool:
        """Check the map is a homomorphism on all pairs (it is a bijection by construction)."""
        elems = self.source.elements()
        return all(self(self.source.multiply(a, b)) == self.target.multiply(self(a), self(b))
                   for a in elems for b in elems)


def rees_normalize(sem: ReesSemigroup) -> Normalization:
    """Rescale P so that its first row and first column are identities."""
    if sem.has_zero_entries:
        raise HasZeroEntries("only sandwich matrices without zero entries can be normalized")
    G = sem.group
    P = sem.sandwich
    v = tuple(G.inv(P[0][i]) for i in range(sem.n_i))
    u = tuple(G.mul(P[0][0], G.inv(P[lam][0])) for lam in range(sem.n_lambda))
    new = [[G.mul(u[lam], P[lam][i], v[i]) for i in range(sem.n_i)] for lam in range(sem.n_lambda)]
    target = rees_construct(G, sem.n_i, sem.n_lambda, new, sem.with_zero)
    return Normalization(sem, target, u, v)


def sandwich_subgroup(sem: ReesSemigroup) -> frozenset[int]:
    """Subgroup generated by the derived subgroup and the entries of P."""
    entries = {x for row in sem.sandwich for x in row if x is not None}
    return subgroup_generated(sem.group, set(derived_subgroup(sem.group)) | entries)


def rees_sim_s(sem: ReesSemigroup, a, b, *, normalize: bool = False) -> bool:
    """Least commutative congruence, decided from P.

    Any zero entry makes it universal.  Otherwise P must be normalized (or
    ``normalize=True`` to move to the normalized copy first); then triples are
    related when ``s t^-1`` is in the subgroup generated by commutators and P.
    """
    if sem.has_zero_entries:
        return True
    if a is ZERO or b is ZERO:
        return a is b
    if not sem.is_normalized():
        if not normalize:
            raise NotNormalized("normalize P first (rees_normalize) or pass normalize=True")
        iso = rees_normalize(sem)
        return rees_sim_s(iso.target, iso(a), iso(b))
    G = sem.group
    return G.mul(a[1], G.inv(b[1])) in sandwich_subgroup(sem)


def classifier_partition(sem: ReesSemigroup, related) -> np.ndarray:
    """Boolean matrix of a pairwise classifier over :meth:`ReesSemigroup.elements`."""
    elems = sem.elements()
    return np.array([[bool(related(sem, a, b)) for b in elems] for a in elems])


# ------------------------------------------------------------ linked triples

@dataclass(frozen=True)
class LinkedTriple:
    normal_subgroup: frozenset[int]
    i_classes: tuple[tuple[int, ...], ...]
    lambda_classes: tuple[tuple[int, ...], ...]

    @classmethod
    def make(cls, N, i_classes, lambda_classes) -> LinkedTriple:
        return cls(frozenset(N), tuple(tuple(c) for c in i_classes), tuple(tuple(c) for c in lambda_classes))


def _class_map(classes, size: int, what: str) -> list[int]:
    out = [-1] * size
    for k, block in enumerate(classes):
        for x in block:
            if not 0 <= x < size or out[x] != -1:
                raise NotLinked(f"{what} classes do not partition the index set")
            out[x] = k
    if -1 in out:
        raise NotLinked(f"{what} classes do not cover the index set")
    return out


def check_linked(sem: ReesSemigroup, triple: LinkedTriple) -> tuple[list[int], list[int]]:
    G = sem.group
    P = sem.sandwich
    if sem.has_zero_entries:
        raise HasZeroEntries("linked triples describe completely simple Rees semigroups")
    if not sem.is_normalized():
        raise NotNormalized("linked triples are stated for a normalized sandwich matrix")
    N = triple.normal_subgroup
    if not is_normal(G, N):
        raise NotLinked("N is not a normal subgroup")
    imap = _class_map(triple.i_classes, sem.n_i, "I")
    lmap = _class_map(triple.lambda_classes, sem.n_lambda, "Lambda")
    for i in range(sem.n_i):
        for j in range(sem.n_i):
            if imap[i] == imap[j]:
                for lam in range(sem.n_lambda):
                    if G.mul(P[lam][i], G.inv(P[lam][j])) not in N:
                        raise NotLinked(f"I-pair ({i}, {j}) fails at Lambda index {lam}")
    for lam in range(sem.n_lambda):
        for mu in range(sem.n_lambda):
            if lmap[lam] == lmap[mu]:
                for i in range(sem.n_i):
                    if G.mul(P[lam][i], G.inv(P[mu][i])) not in N:
                        raise NotLinked(f"Lambda-pair ({lam}, {mu}) fails at I index {i}")
    return imap, lmap


def linked_triple_congruence(sem: ReesSemigroup, triple: LinkedTriple) -> Congruence:
    """Congruence of a linked triple on the Cayley export of M(G; I, Lambda; P)."""
    imap, lmap = check_linked(sem, triple)
    G = sem.group
    plain = sem if not sem.with_zero else ReesSemigroup(G, sem.n_i, sem.n_lambda, sem.sandwich, False)
    S = plain.export()
    N = triple.normal_subgroup
    coset = [min(G.mul(x, s) for x in N) for s in range(len(G))]
    labels = [(imap[i], coset[g], lmap[lam]) for i, g, lam in plain.elements()]
    return as_congruence(S, ElementPartition.from_labels(labels))


def example_rees(group: FiniteGroup | None = None) -> ReesSemigroup:
    """2 x 2 anti-diagonal identity sandwich matrix, with the zero."""
    from .groups import symmetric
    G = group if group is not None else symmetric(3)
    e = G.identity
    return rees_construct(G, 2, 2, [[None, e], [e, None]])
