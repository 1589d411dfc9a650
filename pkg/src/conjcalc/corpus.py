"""The fixed collection of finite semigroups used by the verification suites."""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache
from itertools import product

import numpy as np

from .groups import FiniteGroup, small_groups
from .rees import ReesSemigroup, example_rees, rees_construct
from .semigroup import (FiniteSemigroup, first_nonassociative_triple, matrix_unit_semigroup, min_semigroup,
                        trivial_multiplication, validate)
from .transforms import TransformationMonoid, monoid_cayley

TRANSFORMATION_MONOIDS = (("T", 2), ("T", 3), ("T", 4), ("PT", 2), ("PT", 3), ("I", 2), ("I", 3), ("I", 4),
                          ("S", 3), ("S", 4))


@dataclass(frozen=True)
class Instance:
    name: str
    family: str
    semigroup: FiniteSemigroup
    rees: ReesSemigroup | None = None
    monoid: TransformationMonoid | None = None

    @property
    def order(self) -> int:
        return len(self.semigroup)

    @property
    def has_zero(self) -> bool:
        return self.semigroup.zero is not None


def _generator(G: FiniteGroup) -> int:
    """A non-identity element of largest order, or the identity for the trivial group."""
    best, best_order = G.identity, 1
    for g in range(len(G)):
        k, x = 1, g
        while x != G.identity:
            x = G.mul(x, g)
            k += 1
        if k > best_order:
            best, best_order = g, k
    return best


def rees_family() -> list[tuple[str, ReesSemigroup]]:
    """Rees matrix semigroups over every group of order at most 6.

    Each group gets a 1x1 and a 2x2 sandwich without zeros (the latter with a
    non-identity entry, so not normalized in general), a 2x2 anti-diagonal and
    a 2x2 triangular sandwich with zeros.  A few rectangular shapes and a
    zero-free matrix with an adjoined zero round it out.
    """
    out = []
    for name, G in small_groups().items():
        e, g = G.identity, _generator(G)
        out.append((f"M({name};1,1)", rees_construct(G, 1, 1, [[e]])))
        out.append((f"M({name};2,2;g)", rees_construct(G, 2, 2, [[g, e], [e, e]])))
        out.append((f"M0({name};2,2;anti)", rees_construct(G, 2, 2, [[None, e], [e, None]])))
        out.append((f"M0({name};2,2;tri)", rees_construct(G, 2, 2, [[e, None], [g, e]])))
    groups = small_groups()
    C1, C2, C3 = groups["C1"], groups["C2"], groups["C3"]
    a2 = _generator(C2)
    out.append(("M(C2;3,2)", rees_construct(C2, 3, 2, [[C2.identity] * 3, [C2.identity, a2, a2]])))
    out.append(("M(C3;2,3)", rees_construct(C3, 2, 3, [[C3.identity] * 2, [C3.identity, _generator(C3)],
                                                       [_generator(C3), C3.identity]])))
    out.append(("M0(C1;3,3;diag)", rees_construct(C1, 3, 3, [[0, None, None], [None, 0, None], [None, None, 0]])))
    out.append(("M0(C2;3,2)", rees_construct(C2, 3, 2, [[C2.identity, None, a2], [None, a2, C2.identity]])))
    out.append(("M(C2;2,2)+0", rees_construct(C2, 2, 2, [[C2.identity] * 2, [C2.identity, a2]], with_zero=True)))
    out.append(("M(S3;1,1)+0", rees_construct(groups["S3"], 1, 1, [[groups["S3"].identity]], with_zero=True)))
    return out


def _random_associative(n: int, rng: random.Random) -> np.ndarray | None:
    """Depth-first search over Cayley tables with random value order, pruning non-associative partial tables."""
    table = -np.ones((n, n), dtype=np.int64)
    cells = list(product(range(n), repeat=2))
    idx = range(n)

    def consistent() -> bool:
        for a, b, c in product(idx, idx, idx):
            ab, bc = table[a, b], table[b, c]
            if ab < 0 or bc < 0:
                continue
            left, right = table[ab, c], table[a, bc]
            if left >= 0 and right >= 0 and left != right:
                return False
        return True

    def fill(k: int) -> bool:
        if k == len(cells):
            return True
        a, b = cells[k]
        for v in rng.sample(range(n), n):
            table[a, b] = v
            if consistent() and fill(k + 1):
                return True
        table[a, b] = -1
        return False

    return table if fill(0) else None


def random_tables(count: int = 50, seed: int = 0) -> list[FiniteSemigroup]:
    """Distinct associative tables of orders 2 to 4 found by randomized search.

    Order 2 has only eight associative tables, so most of the quota goes to
    orders 3 and 4.
    """
    rng = random.Random(seed)
    quota = {2: count // 12, 3: count // 3}
    quota[4] = count - quota[2] - quota[3]
    out = []
    for n, want in quota.items():
        seen: set[bytes] = set()
        attempts = 0
        while len(seen) < want:
            attempts += 1
            if attempts > 200 * want:
                raise RuntimeError(f"could not find {want} distinct associative tables of order {n}")
            t = _random_associative(n, rng)
            if t.tobytes() in seen:
                continue
            assert first_nonassociative_triple(t) is None
            seen.add(t.tobytes())
            out.append(validate([str(i) for i in range(n)], t))
    return out


@lru_cache(maxsize=4)
def corpus(seed: int = 0, random_count: int = 50) -> tuple[Instance, ...]:
    items = []
    for kind, n in TRANSFORMATION_MONOIDS:
        mon = monoid_cayley(kind, n)
        items.append(Instance(f"{kind}({n})", "transformation", mon.semigroup, monoid=mon))
    for n in (2, 3):
        items.append(Instance(f"MU({n})", "matrix-units", matrix_unit_semigroup(n)))
    rees_eg = example_rees()
    items.append(Instance("rees-eg", "rees", rees_eg.export(), rees=rees_eg))
    for name, sem in rees_family():
        items.append(Instance(name, "rees", sem.export(), rees=sem))
    items.append(Instance("min(3)", "min", min_semigroup(3)))
    for n in (2, 3):
        items.append(Instance(f"null({n})", "null", trivial_multiplication(n)))
    for k, S in enumerate(random_tables(random_count, seed)):
        items.append(Instance(f"random[{k}]", "random", S))
    return tuple(items)


def by_name(name: str, seed: int = 0) -> Instance:
    for inst in corpus(seed):
        if inst.name == name:
            return inst
    raise KeyError(name)
