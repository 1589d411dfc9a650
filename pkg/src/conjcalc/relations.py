"""Conjugacy-type relations on a finite semigroup.

All relations are returned over the indices of ``S`` itself.  Witnesses
range over ``S^1``; when ``S`` lacks an identity the extra index ``len(S)``
of :meth:`FiniteSemigroup.monoid_table` plays that role and is stripped from
the output.

Relation keys used throughout: ``p1`` (primary), ``p`` (its transitive
closure), ``n``, ``o``, ``w``, ``c``, ``s1`` (permutation relation, bounded by
the number of factors) and ``s`` (least commutative congruence).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb
from itertools import combinations_with_replacement

import numpy as np

from .partition import ElementPartition, PairRelation
from .semigroup import FiniteSemigroup, TooLarge

COUPLED_SEARCH_MAX_ORDER = 64
S1_DEFAULT_BOUND = 6
S1_STATE_CAP = 1 << 24
# below this many multisets the multiset recursion is cheaper than the permutation engine
_MULTISET_PREFERRED = 200_000

RELATION_KEYS = ("p1", "p", "n", "o", "w", "c", "s1", "s")


class BudgetExceeded(RuntimeError):
    pass


def _s1(S: FiniteSemigroup) -> tuple[np.ndarray, int, int]:
    table, one = S.monoid_table()
    return table.astype(np.int64), one, len(table)


def _scatter(n1: int, s_idx: np.ndarray, t_idx: np.ndarray, out: np.ndarray | None = None) -> np.ndarray:
    if out is None:
        out = np.zeros(n1 * n1, dtype=bool)
    out[(s_idx.astype(np.int64) * n1 + t_idx).ravel()] = True
    return out


def _restrict(flat: np.ndarray, n1: int, n: int) -> PairRelation:
    return PairRelation(flat.reshape(n1, n1)[:n, :n])


def _require_small(S: FiniteSemigroup, name: str, override: bool) -> None:
    if len(S) > COUPLED_SEARCH_MAX_ORDER and not override:
        raise TooLarge(f"{name} on {len(S)} elements needs override=True "
                       f"(default limit {COUPLED_SEARCH_MAX_ORDER})")


# ------------------------------------------------------------ primary forms

def _primary_flat(M1: np.ndarray) -> np.ndarray:
    n1 = len(M1)
    return _scatter(n1, M1, M1.T)


def sim_p1(S: FiniteSemigroup) -> PairRelation:
    """All pairs ``(pr, rp)`` with ``p, r`` in ``S^1``."""
    M1, _, n1 = _s1(S)
    return _restrict(_primary_flat(M1), n1, len(S))


def sim_p(S: FiniteSemigroup) -> ElementPartition:
    return sim_p1(S).closure()


# Relation-valued building blocks.  Each takes a flat boolean relation X over
# S^1 and returns a new flat relation.

def _left(M1, X):
    """``{(a x, a y) : (x, y) in X}``"""
    n1 = len(M1)
    xs, ys = np.divmod(np.flatnonzero(X), n1)
    return _scatter(n1, M1[:, xs], M1[:, ys])


def _right(M1, X):
    """``{(x a, y a)}``"""
    n1 = len(M1)
    xs, ys = np.divmod(np.flatnonzero(X), n1)
    return _scatter(n1, M1[xs, :], M1[ys, :])


def _wrap_front(M1, X):
    """``{(a x, y a)}``: the new factor leads on the left and trails on the right."""
    n1 = len(M1)
    xs, ys = np.divmod(np.flatnonzero(X), n1)
    return _scatter(n1, M1[:, xs], M1[ys, :].T)


def _wrap_back(M1, X):
    """``{(x a, a y)}``"""
    n1 = len(M1)
    xs, ys = np.divmod(np.flatnonzero(X), n1)
    return _scatter(n1, M1[xs, :].T, M1[:, ys])


def _product(M1, X, Y, chunk: int = 2048):
    """``{(x u, y v) : (x, y) in X, (u, v) in Y}``"""
    n1 = len(M1)
    xs, ys = np.divmod(np.flatnonzero(X), n1)
    us, vs = np.divmod(np.flatnonzero(Y), n1)
    out = np.zeros(n1 * n1, dtype=bool)
    for lo in range(0, len(xs), chunk):
        a, b = xs[lo:lo + chunk, None], ys[lo:lo + chunk, None]
        _scatter(n1, M1[a, us[None, :]], M1[b, vs[None, :]], out)
    return out


def _interleaved(M1):
    """``{(abcd, bdac)}``, the one four-factor pattern with no factor at an outer end of both sides."""
    n1 = len(M1)
    out = np.zeros(n1 * n1, dtype=bool)
    for b in range(n1):
        # D_b = {(a b c, a c)}
        d = _scatter(n1, M1[M1[:, b][:, None], np.arange(n1)[None, :]], M1)
        xs, ys = np.divmod(np.flatnonzero(d), n1)
        bd = M1[b, :]
        _scatter(n1, M1[xs, :], M1[bd[None, :], ys[:, None]], out)
    return out


def _transpose(X, n1):
    return X.reshape(n1, n1).T.ravel()


def _s1_by_permutations(S: FiniteSemigroup, L: int) -> PairRelation:
    """Exact bounded permutation relation for ``L <= 4``.

    With factors allowed to be 1, two adjacent factors that stay adjacent and
    in order can be merged, so it suffices to take the reorderings of at most
    four factors in which no ``i`` is immediately followed by ``i+1``.  Every
    one of these except ``bdac`` and its inverse is a one-factor extension of a
    three-factor pattern or a product of two primary pairs.
    """
    if L > 4:
        raise BudgetExceeded("the permutation engine handles at most four factors")
    M1, _, n1 = _s1(S)
    n = len(S)
    out = np.eye(n1, dtype=bool).ravel()
    if L >= 2:
        p1 = _primary_flat(M1)
        out |= p1
    if L >= 3:
        acb = _left(M1, p1)        # (abc, acb)
        bac = _right(M1, p1)       # (abc, bac)
        cba = _wrap_front(M1, p1)  # (abc, cba)
        out |= acb | bac | cba
    if L >= 4:
        out |= _left(M1, bac)          # 1324
        out |= _left(M1, cba)          # 1432
        out |= _product(M1, p1, p1)    # 2143
        inter = _interleaved(M1)       # 2413
        out |= inter | _transpose(inter, n1)  # and 3142
        out |= _wrap_front(M1, acb)    # 2431
        out |= _right(M1, cba)         # 3214
        out |= _wrap_front(M1, bac)    # 3241
        out |= _wrap_back(M1, acb)     # 4132
        out |= _wrap_back(M1, bac)     # 4213
        out |= _wrap_back(M1, cba)     # 4321
    return _restrict(out, n1, n)


def _multiset_count(factors: int, L: int) -> int:
    return sum(comb(factors + k - 1, k) for k in range(1, L + 1))


def _s1_by_multisets(S: FiniteSemigroup, L: int, cap: int) -> PairRelation:
    """Multiset recursion: the products of all orderings of each factor multiset."""
    n = len(S)
    factors = [a for a in range(n) if a != S.identity]
    if _multiset_count(len(factors), L) > cap:
        raise BudgetExceeded(f"{_multiset_count(len(factors), L)} multisets exceed the cap {cap}")
    table = S.table
    # left multiplication of a bitmask of elements, one lookup per byte
    nbytes = (n + 7) // 8
    lookup = []
    for a in factors:
        row = table[a]
        per_byte = []
        for k in range(nbytes):
            chunk = [0] * 256
            for v in range(1, 256):
                low = v & -v
                bit = low.bit_length() - 1 + 8 * k
                chunk[v] = chunk[v ^ low] | (1 << int(row[bit]) if bit < n else 0)
            per_byte.append(chunk)
        lookup.append(per_byte)

    def times(ai: int, mask: int) -> int:
        acc = 0
        for chunk in lookup[ai]:
            acc |= chunk[mask & 0xFF]
            mask >>= 8
        return acc

    seen_masks = set()
    prev = {(i,): 1 << a for i, a in enumerate(factors)}
    seen_masks.update(prev.values())
    for size in range(2, L + 1):
        cur = {}
        for ms in combinations_with_replacement(range(len(factors)), size):
            mask = 0
            last = None
            for pos, ai in enumerate(ms):
                if ai == last:
                    continue
                last = ai
                mask |= times(ai, prev[ms[:pos] + ms[pos + 1:]])
            cur[ms] = mask
        prev = cur
        seen_masks.update(cur.values())
    rel = np.eye(n, dtype=bool)
    for mask in seen_masks:
        members = [i for i in range(n) if mask >> i & 1]
        rel[np.ix_(members, members)] = True
    return PairRelation(rel)


def sim_s1_bounded(S: FiniteSemigroup, L: int = S1_DEFAULT_BOUND, *, cap: int = S1_STATE_CAP,
                   engine: str = "auto") -> PairRelation:
    """Pairs sharing a factor multiset of size at most ``L``.

    ``engine`` is ``"multiset"``, ``"permutation"`` (``L <= 4`` only) or
    ``"auto"``, which uses the multiset recursion on small inputs and the
    permutation engine when that recursion would be too large.
    """
    if L < 1:
        raise ValueError("L must be at least 1")
    if engine == "auto":
        factors = len(S) - (S.identity is not None)
        small = _multiset_count(factors, L) <= _MULTISET_PREFERRED
        engine = "multiset" if small or L > 4 else "permutation"
    if engine == "multiset":
        return _s1_by_multisets(S, L, cap)
    if engine == "permutation":
        return _s1_by_permutations(S, L)
    raise ValueError(f"unknown engine {engine!r}")


def sim_star1(S: FiniteSemigroup) -> PairRelation:
    """All pairs ``(p1 p2 p3, p1 p3 p2)`` over ``S^1``."""
    M1, _, n1 = _s1(S)
    return _restrict(_left(M1, _primary_flat(M1)), n1, len(S))


def sim_s(S: FiniteSemigroup, *, check: bool = False) -> ElementPartition:
    """Transitive closure of :func:`sim_star1`.

    With ``check=True`` the result is compared against the congruence
    generated by :func:`sim_p1` and the least commutative congruence.
    """
    part = sim_star1(S).closure()
    if check:
        from .congruence import congruence_generated, least_commutative_congruence
        if congruence_generated(S, sim_p1(S)).partition != part:
            raise AssertionError("closure of the three-factor relation differs from the generated congruence")
        if least_commutative_congruence(S).partition != part:
            raise AssertionError("closure differs from the least commutative congruence")
    return part


# ----------------------------------------------------- independent witnesses

def _commuting_witness(M1: np.ndarray, n: int) -> tuple[np.ndarray, np.ndarray]:
    """``A[s, t]``: some p with sp = pt.  ``B[s, t]``: some r with rs = tr."""
    A = np.zeros((n, n), dtype=bool)
    B = np.zeros((n, n), dtype=bool)
    for p in range(len(M1)):
        A |= M1[:n, p][:, None] == M1[p, :n][None, :]
        B |= M1[p, :n][:, None] == M1[:n, p][None, :]
    return A, B


def sim_o(S: FiniteSemigroup) -> PairRelation:
    M1, _, _ = _s1(S)
    A, B = _commuting_witness(M1, len(S))
    return PairRelation(A & B)


def sim_n(S: FiniteSemigroup, *, override: bool = False) -> PairRelation:
    """Pairs with one coupled witness pair (p, r)."""
    _require_small(S, "sim_n", override)
    M1, _, n1 = _s1(S)
    n = len(S)
    out = np.zeros((n, n), dtype=bool)
    ss = np.arange(n)
    rows = np.arange(n1)[:, None]
    rs = M1[:, ss]
    for p in range(n1):
        # t = r s p over rows r and columns s; it always lies in S
        t = M1[rs, p]
        ok = M1[ss, p][None, :] == M1[p, t]   # s p = p t
        ok &= rs == M1[t, rows]               # r s = t r
        ok &= M1[M1[p, t], rows] == ss        # p t r = s
        r_idx, s_idx = np.nonzero(ok)
        out[s_idx, t[r_idx, s_idx]] = True
    return PairRelation(out)


def sim_w(S: FiniteSemigroup, *, override: bool = False) -> PairRelation:
    """Pairs with witnesses p, r and an exponent m with pr = s^m, rp = t^m.

    The pair sequence ``(s^m, t^m)`` lives in ``S x S`` and is eventually
    periodic, so iterating until a pair repeats visits every value it takes
    and never needs more than ``|S|^2`` steps.
    """
    _require_small(S, "sim_w", override)
    M1, _, n1 = _s1(S)
    n = len(S)
    table = S.table
    out = np.zeros((n, n), dtype=bool)
    for s in range(n):
        sp = M1[s, :]
        ps = M1[:, s]
        for t in range(n):
            P = np.flatnonzero(sp == M1[:, t])   # s p = p t
            R = np.flatnonzero(ps == M1[t, :])   # r s = t r
            if len(P) == 0 or len(R) == 0:
                continue
            Q = np.zeros((n1, n1), dtype=bool)
            x, y = s, t
            while not Q[x, y]:
                Q[x, y] = True
                x, y = int(table[x, s]), int(table[y, t])
            pr = M1[P[:, None], R[None, :]]
            rp = M1[R[None, :], P[:, None]]
            out[s, t] = Q[pr, rp].any()
    return PairRelation(out)


def admissible_multipliers(S: FiniteSemigroup) -> np.ndarray:
    """``P[s, p]`` true when p keeps every nonzero left multiple of s nonzero.

    Rows of the zero are left all false.
    """
    M1, _, n1 = _s1(S)
    n = len(S)
    z = S.zero
    if z is None:
        return np.ones((n, n1), dtype=bool)
    rs = M1[:, :n]                        # [r, s]
    rsp = M1[rs]                          # [r, s, p]
    ok = ((rs == z)[:, :, None] | (rsp != z)).all(axis=0)
    ok[z, :] = False
    return ok


def sim_c(S: FiniteSemigroup, *, override: bool = False) -> PairRelation:
    """Commuting witnesses restricted to admissible multipliers; 0 relates only to itself."""
    _require_small(S, "sim_c", override)
    M1, _, n1 = _s1(S)
    n = len(S)
    if S.zero is None:
        return sim_o(S)
    adm = admissible_multipliers(S)
    A = np.zeros((n, n), dtype=bool)
    B = np.zeros((n, n), dtype=bool)
    for p in range(n1):
        # p must be admissible for s (rows) in A and for t (columns) in B
        A |= (M1[:n, p][:, None] == M1[p, :n][None, :]) & adm[:, p][:, None]
        B |= (M1[p, :n][:, None] == M1[:n, p][None, :]) & adm[:, p][None, :]
    out = A & B
    out[S.zero, S.zero] = True
    return PairRelation(out)


# -------------------------------------------------------------- containment

@dataclass
class ContainmentReport:
    keys: tuple[str, ...]
    bound: int
    relations: dict[str, PairRelation]
    subset: dict[tuple[str, str], bool] = field(default_factory=dict)
    witness: dict[tuple[str, str], tuple[int, int] | None] = field(default_factory=dict)
    skipped: tuple[str, ...] = ()

    def entry(self, a: str, b: str) -> str | None:
        if (a, b) not in self.subset:
            return None
        return "subset" if self.subset[a, b] else "not_subset"

    def comparison(self, a: str, b: str) -> str | None:
        """``equal``, ``subset``, ``superset`` or ``incomparable``."""
        ab, ba = self.subset.get((a, b)), self.subset.get((b, a))
        if ab is None or ba is None:
            return None
        return {(True, True): "equal", (True, False): "subset",
                (False, True): "superset", (False, False): "incomparable"}[ab, ba]

    def to_json(self) -> dict:
        return {
            "relations": list(self.keys),
            "bounded": {"s1": self.bound},
            "skipped": list(self.skipped),
            "matrix": [[self.entry(a, b) for b in self.keys] for a in self.keys],
            "witnesses": {f"{a}\\{b}": list(w) for (a, b), w in self.witness.items() if w is not None},
        }


def all_relations(S: FiniteSemigroup, L: int = 4, *, override: bool = False,
                  skip: tuple[str, ...] = ()) -> dict[str, PairRelation]:
    """Every relation as a pair set; coupled searches are skipped on large inputs unless overridden."""
    large = len(S) > COUPLED_SEARCH_MAX_ORDER and not override
    rels: dict[str, PairRelation] = {}
    for key in RELATION_KEYS:
        if key in skip or (large and key in ("n", "w", "c")):
            continue
        if key == "p1":
            rels[key] = sim_p1(S)
        elif key == "p":
            rels[key] = rels.get("p1", sim_p1(S)).closure().to_relation()
        elif key == "n":
            rels[key] = sim_n(S, override=override)
        elif key == "o":
            rels[key] = sim_o(S)
        elif key == "w":
            rels[key] = sim_w(S, override=override)
        elif key == "c":
            rels[key] = sim_c(S, override=override)
        elif key == "s1":
            rels[key] = sim_s1_bounded(S, L)
        elif key == "s":
            rels[key] = sim_s(S).to_relation()
    return rels


def containment_matrix(S: FiniteSemigroup, L: int = 4, *, override: bool = False,
                       relations: dict[str, PairRelation] | None = None) -> ContainmentReport:
    rels = relations if relations is not None else all_relations(S, L, override=override)
    keys = tuple(k for k in RELATION_KEYS if k in rels)
    report = ContainmentReport(keys, L, rels, skipped=tuple(k for k in RELATION_KEYS if k not in rels))
    for a in keys:
        for b in keys:
            w = rels[a].witness_not_in(rels[b])
            report.subset[a, b] = w is None
            report.witness[a, b] = w
    return report


# containments that hold in every semigroup, as (smaller, larger)
SOUND_INCLUSIONS = (
    ("n", "p1"), ("p1", "p"), ("p", "w"), ("w", "o"),
    ("n", "c"), ("c", "o"),
    ("p1", "s1"), ("s1", "s"), ("p", "s"),
)
