"""Maps of the natural numbers that are eventually a shift.

``EventuallyShiftMap(table, shift)`` sends ``n < len(table)`` to
``table[n]`` and every ``n >= len(table)`` to ``n + shift``.  The table is
kept minimal, so equal maps have equal representations.  Composition is
right to left: ``compose(f, g)(n) == f(g(n))``.
"""

from __future__ import annotations

import json
import random
from collections import Counter
from dataclasses import dataclass
from typing import Sequence

from .partition import ElementPartition


class NotInjective(ValueError):
    pass


class NotSurjective(ValueError):
    pass


@dataclass(frozen=True)
class EventuallyShiftMap:
    table: tuple[int, ...]
    shift: int

    def __init__(self, table: Sequence[int], shift: int):
        table = [int(v) for v in table]
        shift = int(shift)
        if any(v < 0 for v in table):
            raise ValueError("values must be natural numbers")
        if len(table) + shift < 0:
            raise ValueError("the shift sends the tail below zero")
        while table and table[-1] == len(table) - 1 + shift:
            table.pop()
        object.__setattr__(self, "table", tuple(table))
        object.__setattr__(self, "shift", shift)

    @property
    def threshold(self) -> int:
        return len(self.table)

    def __call__(self, n: int) -> int:
        return self.table[n] if n < len(self.table) else n + self.shift

    @classmethod
    def identity(cls) -> EventuallyShiftMap:
        return cls((), 0)

    @classmethod
    def shift_by(cls, d: int) -> EventuallyShiftMap:
        if d >= 0:
            return cls((), d)
        return cls([0] * (-d), d)

    @property
    def is_injective(self) -> bool:
        t = self.table
        return len(set(t)) == len(t) and all(v < len(t) + self.shift for v in t)

    @property
    def is_surjective(self) -> bool:
        bound = len(self.table) + self.shift
        return set(range(bound)) <= set(self.table)

    def to_json(self) -> dict:
        return {"table": list(self.table), "shift": self.shift}

    @classmethod
    def from_json(cls, data: dict | str) -> EventuallyShiftMap:
        if isinstance(data, str):
            data = json.loads(data)
        return cls(data["table"], data["shift"])

    def __repr__(self) -> str:
        return f"EventuallyShiftMap({list(self.table)}, shift={self.shift})"


def compose(f: EventuallyShiftMap, g: EventuallyShiftMap) -> EventuallyShiftMap:
    """``f`` after ``g``."""
    # beyond this point g is a shift landing inside f's shifted tail
    m = max(g.threshold, f.threshold - g.shift, 0)
    return EventuallyShiftMap([f(g(n)) for n in range(m)], f.shift + g.shift)


def power(f: EventuallyShiftMap, k: int) -> EventuallyShiftMap:
    out = EventuallyShiftMap.identity()
    for _ in range(k):
        out = compose(out, f)
    return out


def _require_injective(f: EventuallyShiftMap) -> None:
    if not f.is_injective:
        raise NotInjective(f"{f} is not injective")


def _require_surjective(f: EventuallyShiftMap) -> None:
    if not f.is_surjective:
        raise NotSurjective(f"{f} is not surjective")


def defect(f: EventuallyShiftMap) -> int:
    """Number of naturals outside the image, counted directly."""
    _require_injective(f)
    bound = f.threshold + f.shift
    # the tail covers every value >= bound; table values lie below it
    return sum(1 for v in range(bound) if v not in set(f.table))


def inj_sim_s(s: EventuallyShiftMap, t: EventuallyShiftMap) -> bool:
    return defect(s) == defect(t)


# ------------------------------------------------------------ cycle census

@dataclass(frozen=True)
class CycleCensus:
    finite: tuple[tuple[int, int], ...]   # (length, count), sorted by length
    forward: int
    open: int
    cofinite_fixed_points: bool

    def finite_counts(self) -> dict[int, int]:
        return dict(self.finite)


def cycle_census(f: EventuallyShiftMap) -> CycleCensus:
    """Orbits of an injection, found by union-find on the finite region plus one node per tail residue.

    With shift 0 the tail is pointwise fixed, so fixed points are infinite in
    number; they are reported by the flag and left out of the finite counts.
    """
    _require_injective(f)
    d = f.shift
    bound = f.threshold + d
    residues = d  # tail chains {y >= bound, y = r mod d}
    part = ElementPartition(bound + residues)
    for x in range(bound):
        y = f(x)
        part.union(x, y if y < bound else bound + y % d)
    image = set(f(x) for x in range(bound))
    lab = part.labels()
    comps: dict[int, list[int]] = {}
    for node in range(bound + residues):
        comps.setdefault(int(lab[node]), []).append(node)
    lengths: Counter = Counter()
    forward = opened = 0
    for nodes in comps.values():
        if any(v >= bound for v in nodes):
            starts = sum(1 for v in nodes if v < bound and v not in image)
            if starts:
                forward += starts
            else:
                opened += 1
        else:
            lengths[len(nodes)] += 1
    if d == 0:
        lengths.pop(1, None)
    return CycleCensus(tuple(sorted(lengths.items())), forward, opened, d == 0)


def check_cycle_correspondence(s: EventuallyShiftMap, t: EventuallyShiftMap) -> bool:
    """Cycles of ``ts`` and ``st`` agree type by type."""
    return cycle_census(compose(t, s)) == cycle_census(compose(s, t))


# ----------------------------------------------------- surjection invariants

@dataclass(frozen=True)
class NCM:
    collapsed: frozenset[int]     # points sharing their image with another point
    multi_image: frozenset[int]   # points with more than one preimage
    max_fiber: int
    achieved: bool


def _preimages(f: EventuallyShiftMap) -> tuple[int, dict[int, list[int]]]:
    """A domain bound past which every point has a private image, and the fibres below it."""
    top = max(f.table, default=0)
    dom = max(f.threshold, top - f.shift + 1)
    fibres: dict[int, list[int]] = {}
    for n in range(dom):
        fibres.setdefault(f(n), []).append(n)
    return dom, fibres


def ncm_invariants(f: EventuallyShiftMap) -> NCM:
    _require_surjective(f)
    _, fibres = _preimages(f)
    collapsed = frozenset(n for pts in fibres.values() if len(pts) > 1 for n in pts)
    multi = frozenset(v for v, pts in fibres.items() if len(pts) > 1)
    m = max((len(p) for p in fibres.values()), default=1)
    return NCM(collapsed, multi, max(m, 1), True)


@dataclass(frozen=True)
class SurjInvariantValue:
    """An element of the naturals extended by three absorbing infinities ``inf1 < inf2 < inf3``."""
    value: int | None = None
    infinity: int = 0

    def __post_init__(self):
        if (self.value is None) == (self.infinity == 0):
            raise ValueError("exactly one of a finite value or an infinity level")

    @classmethod
    def finite(cls, v: int) -> SurjInvariantValue:
        return cls(value=v)

    @classmethod
    def inf(cls, level: int) -> SurjInvariantValue:
        if level not in (1, 2, 3):
            raise ValueError("infinity levels are 1, 2 and 3")
        return cls(infinity=level)

    @property
    def is_finite(self) -> bool:
        return self.infinity == 0

    def __add__(self, other: SurjInvariantValue) -> SurjInvariantValue:
        if self.is_finite and other.is_finite:
            return SurjInvariantValue.finite(self.value + other.value)
        return SurjInvariantValue.inf(max(self.infinity, other.infinity))

    def __repr__(self) -> str:
        return f"Finite({self.value})" if self.is_finite else f"Inf{self.infinity}"


def surj_invariant(f: EventuallyShiftMap) -> SurjInvariantValue:
    """``|N| - |C|``; the collapsed set is always finite for these maps."""
    inv = ncm_invariants(f)
    return SurjInvariantValue.finite(len(inv.collapsed) - len(inv.multi_image))


def surj_approx(s: EventuallyShiftMap, t: EventuallyShiftMap) -> bool:
    return surj_invariant(s) == surj_invariant(t)


def has_fiber_of_size(f: EventuallyShiftMap, size: int) -> bool:
    _, fibres = _preimages(f)
    sizes = {len(p) for p in fibres.values()} | {1}
    return size in sizes


# ------------------------------------------------------------- random maps

def random_injection(rng: random.Random, max_table: int = 12, max_shift: int = 4) -> EventuallyShiftMap:
    d = rng.randint(0, max_shift)
    n = rng.randint(0, max_table)
    return EventuallyShiftMap(rng.sample(range(n + d), n), d)


def random_surjection(rng: random.Random, max_table: int = 12, max_shift: int = 4) -> EventuallyShiftMap:
    d = -rng.randint(0, max_shift)
    n = rng.randint(-d, max(max_table, -d))
    bound = n + d
    values = list(range(bound))
    # the remaining slots collide with something, possibly with the tail's image
    values += [rng.randrange(bound + 3) for _ in range(n - bound)]
    rng.shuffle(values)
    return EventuallyShiftMap(values, d)
