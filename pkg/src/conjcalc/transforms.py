"""Finite transformation monoids: full, partial, partial injective and symmetric.

Maps compose right to left: ``compose(s, t)`` applies ``t`` first, so
``compose(s, t)(x) == s(t(x))`` wherever that is defined.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from enum import Enum
from itertools import permutations, product
from typing import Sequence

import numpy as np

from .semigroup import FiniteSemigroup, TooLarge, validate

SIZE_CAPS = {"T": 4, "PT": 3, "I": 4, "S": 5}


class NotPermutation(ValueError):
    pass


class Parity(Enum):
    EVEN = "even"
    ODD = "odd"


class TransformClass(Enum):
    EVEN = "EvenClass"
    ODD = "OddClass"
    SINGULAR = "SingularClass"


@dataclass(frozen=True)
class FiniteMap:
    """A partial map on ``{0..n-1}``; ``None`` marks an undefined point."""

    images: tuple

    def __init__(self, images: Sequence[int | None]):
        n = len(images)
        imgs = tuple(None if v is None else int(v) for v in images)
        for v in imgs:
            if v is not None and not 0 <= v < n:
                raise ValueError(f"image {v} outside ground set of size {n}")
        object.__setattr__(self, "images", imgs)

    @classmethod
    def from_cycles(cls, n: int, cycles: Sequence[Sequence[int]]) -> FiniteMap:
        imgs = list(range(n))
        for cyc in cycles:
            for a, b in zip(cyc, list(cyc[1:]) + [cyc[0]]):
                imgs[a] = b
        return cls(imgs)

    @classmethod
    def identity(cls, n: int) -> FiniteMap:
        return cls(range(n))

    def __len__(self) -> int:
        return len(self.images)

    def __call__(self, x: int) -> int | None:
        return self.images[x]

    @property
    def is_total(self) -> bool:
        return None not in self.images

    @property
    def is_injective(self) -> bool:
        defined = [v for v in self.images if v is not None]
        return len(defined) == len(set(defined))

    @property
    def image(self) -> frozenset[int]:
        return frozenset(v for v in self.images if v is not None)

    @property
    def domain(self) -> frozenset[int]:
        return frozenset(i for i, v in enumerate(self.images) if v is not None)

    @property
    def is_permutation(self) -> bool:
        return len(self.image) == len(self)

    def __matmul__(self, other: FiniteMap) -> FiniteMap:
        return compose(self, other)

    def to_json(self) -> list:
        return list(self.images)

    def __repr__(self) -> str:
        return f"FiniteMap({list(self.images)})"


def compose(s: FiniteMap, t: FiniteMap) -> FiniteMap:
    """``s`` after ``t``, defined on ``t^-1(Dom(s))``."""
    if len(s) != len(t):
        raise ValueError("maps act on ground sets of different sizes")
    return FiniteMap([None if y is None else s.images[y] for y in t.images])


def _require_permutation(p: FiniteMap) -> None:
    if not p.is_permutation:
        raise NotPermutation(f"{p} is not a permutation")


def cycles(p: FiniteMap) -> list[tuple[int, ...]]:
    """Disjoint cycles of a permutation, each starting at its least point."""
    _require_permutation(p)
    seen = set()
    out = []
    for start in range(len(p)):
        if start in seen:
            continue
        cyc = [start]
        seen.add(start)
        x = p(start)
        while x != start:
            cyc.append(x)
            seen.add(x)
            x = p(x)
        out.append(tuple(cyc))
    return out


def cycle_type(p: FiniteMap) -> tuple[int, ...]:
    """Cycle lengths in decreasing order (fixed points included)."""
    return tuple(sorted((len(c) for c in cycles(p)), reverse=True))


def parity(p: FiniteMap) -> Parity:
    odd = sum(len(c) - 1 for c in cycles(p)) % 2
    return Parity.ODD if odd else Parity.EVEN


def inverse(p: FiniteMap) -> FiniteMap:
    """Inverse of a partial injection (undefined off the image)."""
    if not p.is_injective:
        raise ValueError("only injective maps have inverses")
    imgs: list[int | None] = [None] * len(p)
    for x, y in enumerate(p.images):
        if y is not None:
            imgs[y] = x
    return FiniteMap(imgs)


def conjugate_in_sym(p: FiniteMap, q: FiniteMap) -> tuple[bool, FiniteMap | None]:
    """Decide whether ``q = w p w^-1`` for a permutation ``w``; return a witness ``w``."""
    cp, cq = cycles(p), cycles(q)
    if len(p) != len(q):
        return False, None
    if sorted(map(len, cp)) != sorted(map(len, cq)):
        return False, None
    # match cycles of equal length and map them onto each other pointwise
    cp = sorted(cp, key=len)
    cq = sorted(cq, key=len)
    w = [0] * len(p)
    for a, b in zip(cp, cq):
        for x, y in zip(a, b):
            w[x] = y
    return True, FiniteMap(w)


def sim_s_class(kind: str, f: FiniteMap) -> TransformClass:
    """Class of ``f`` under the least commutative congruence of T, PT or I."""
    if kind not in ("T", "PT", "I"):
        raise ValueError(f"unknown monoid kind {kind!r}")
    if not f.is_permutation:
        return TransformClass.SINGULAR
    return TransformClass.EVEN if parity(f) is Parity.EVEN else TransformClass.ODD


def enumerate_maps(kind: str, n: int) -> list[FiniteMap]:
    """All elements of T(n), PT(n), I(n) or S(n) in a fixed lexicographic order."""
    if kind == "T":
        return [FiniteMap(imgs) for imgs in product(range(n), repeat=n)]
    if kind == "S":
        return [FiniteMap(imgs) for imgs in permutations(range(n))]
    values = [None, *range(n)]
    maps = [FiniteMap(imgs) for imgs in product(values, repeat=n)]
    if kind == "PT":
        return maps
    if kind == "I":
        return [m for m in maps if m.is_injective]
    raise ValueError(f"unknown monoid kind {kind!r}")


@dataclass(frozen=True)
class TransformationMonoid:
    kind: str
    n: int
    semigroup: FiniteSemigroup
    maps: tuple[FiniteMap, ...]

    def index(self, f: FiniteMap | Sequence[int | None]) -> int:
        if not isinstance(f, FiniteMap):
            f = FiniteMap(f)
        return self.maps.index(f)


def monoid_cayley(kind: str, n: int) -> TransformationMonoid:
    """Cayley table of T(n), PT(n), I(n) or S(n) with the index-to-map dictionary."""
    if kind not in SIZE_CAPS:
        raise ValueError(f"unknown monoid kind {kind!r}")
    if n < 1:
        raise ValueError("n must be positive")
    if n > SIZE_CAPS[kind]:
        raise TooLarge(f"{kind}({n}) exceeds the cap n <= {SIZE_CAPS[kind]}")
    maps = enumerate_maps(kind, n)
    undef = -1
    arr = np.array([[undef if v is None else v for v in m.images] for m in maps], dtype=np.int64)
    pos = {tuple(row): i for i, row in enumerate(arr.tolist())}
    # composite[a, b, x] = a(b(x)); an undefined point indexes the padding column
    padded = np.concatenate([arr, np.full((len(maps), 1), undef)], axis=1)
    composite = padded[:, arr].reshape(-1, n)
    table = np.fromiter((pos[row] for row in map(tuple, composite.tolist())),
                        dtype=np.int64, count=len(composite)).reshape(len(maps), len(maps))
    labels = [str(list(m.images)).replace("None", "_") for m in maps]
    return TransformationMonoid(kind, n, validate(labels, table), tuple(maps))


def sim_s_prediction(mon: TransformationMonoid) -> list[TransformClass]:
    return [sim_s_class(mon.kind, m) for m in mon.maps]


def restriction_leq(s: FiniteMap, t: FiniteMap) -> bool:
    """Natural order on partial injections: ``s`` is a restriction of ``t``."""
    return all(v is None or v == t.images[i] for i, v in enumerate(s.images))


def cycle_type_counts(p: FiniteMap) -> Counter:
    return Counter(cycle_type(p))
