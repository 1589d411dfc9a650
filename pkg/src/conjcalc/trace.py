"""Integer semigroup rings modulo additive commutators.

Ring elements are integer vectors indexed by the nonzero elements of S (all
of S when there is no zero); the zero of S is the zero vector.  The span of
the commutators ``ab - ba`` is kept in Hermite normal form so membership is
decided exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

from .partition import ElementPartition
from .relations import sim_p, sim_s1_bounded
from .semigroup import FiniteSemigroup


def xgcd(a: int, b: int) -> tuple[int, int, int]:
    """``(g, x, y)`` with ``g = a x + b y = gcd(a, b) >= 0``."""
    x0, y0, x1, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        return -a, -x0, -y0
    return a, x0, y0


class IntegerLattice:
    """A sublattice of Z^dim, stored as HNF rows keyed by pivot column."""

    def __init__(self, dim: int, rows: Iterable[Sequence[int]] = ()):
        self.dim = dim
        self._pivots: dict[int, list[int]] = {}
        self._reduced = True
        for r in rows:
            self.add(r)

    def add(self, vector: Sequence[int]) -> None:
        v = [int(x) for x in vector]
        if len(v) != self.dim:
            raise ValueError(f"expected a vector of length {self.dim}")
        for col in range(self.dim):
            if v[col] == 0:
                continue
            row = self._pivots.get(col)
            if row is None:
                if v[col] < 0:
                    v = [-x for x in v]
                self._pivots[col] = v
                self._reduced = False
                return
            a, b = row[col], v[col]
            g, x, y = xgcd(a, b)
            self._pivots[col] = [x * p + y * q for p, q in zip(row, v)]
            v = [(a // g) * q - (b // g) * p for p, q in zip(row, v)]
            self._reduced = False

    def _reduce_above(self) -> None:
        cols = sorted(self._pivots)
        for k, c in enumerate(cols):
            piv = self._pivots[c]
            for c0 in cols[:k]:
                r = self._pivots[c0]
                q = r[c] // piv[c]
                if q:
                    self._pivots[c0] = [a - q * b for a, b in zip(r, piv)]
        self._reduced = True

    @property
    def basis(self) -> list[list[int]]:
        """Rows of the Hermite normal form: positive pivots, entries above each pivot in ``[0, pivot)``."""
        if not self._reduced:
            self._reduce_above()
        return [list(self._pivots[c]) for c in sorted(self._pivots)]

    @property
    def rank(self) -> int:
        return len(self._pivots)

    def residual(self, vector: Sequence[int]) -> list[int]:
        """What is left of ``vector`` after subtracting lattice vectors column by column."""
        v = [int(x) for x in vector]
        for c in sorted(self._pivots):
            if v[c]:
                piv = self._pivots[c]
                q = v[c] // piv[c]
                if q:
                    v = [a - q * b for a, b in zip(v, piv)]
        return v

    def __contains__(self, vector: Sequence[int]) -> bool:
        return not any(self.residual(vector))

    def __eq__(self, other) -> bool:
        if not isinstance(other, IntegerLattice):
            return NotImplemented
        return self.dim == other.dim and self.basis == other.basis

    def __repr__(self) -> str:
        return f"IntegerLattice(dim={self.dim}, rank={self.rank})"


def rational_membership(basis: Sequence[Sequence[int]], vector: Sequence[int]) -> bool:
    """Membership in the Z-span of linearly independent rows via elimination over Q."""
    rows = [[Fraction(x) for x in r] for r in basis]
    k, dim = len(rows), len(vector)
    # solve coeffs @ rows = vector: eliminate on the transposed system
    aug = [[rows[i][j] for i in range(k)] + [Fraction(int(vector[j]))] for j in range(dim)]
    pivot_cols, r = [], 0
    for c in range(k):
        p = next((i for i in range(r, dim) if aug[i][c] != 0), None)
        if p is None:
            continue
        aug[r], aug[p] = aug[p], aug[r]
        lead = aug[r][c]
        aug[r] = [x / lead for x in aug[r]]
        for i in range(dim):
            if i != r and aug[i][c] != 0:
                f = aug[i][c]
                aug[i] = [a - f * b for a, b in zip(aug[i], aug[r])]
        pivot_cols.append(c)
        r += 1
    if any(aug[i][k] != 0 for i in range(r, dim)):
        return False
    return all(aug[i][k].denominator == 1 for i in range(r))


def smith_invariants(lattice: IntegerLattice) -> list[int]:
    """Nonzero Smith invariants of the basis (needs sympy)."""
    from sympy import Matrix, ZZ
    from sympy.matrices.normalforms import smith_normal_form

    if lattice.rank == 0:
        return []
    snf = smith_normal_form(Matrix(lattice.basis), domain=ZZ)
    return [abs(int(snf[i, i])) for i in range(min(snf.shape)) if snf[i, i] != 0]


# --------------------------------------------------------- semigroup rings

@dataclass(frozen=True)
class RingBasis:
    """Coordinates of the contracted semigroup ring: one per nonzero element."""
    semigroup: FiniteSemigroup
    coordinate: tuple[int | None, ...]   # element -> coordinate, None for the zero

    @classmethod
    def of(cls, S: FiniteSemigroup) -> RingBasis:
        coords, k = [], 0
        for a in range(len(S)):
            if a == S.zero:
                coords.append(None)
            else:
                coords.append(k)
                k += 1
        return cls(S, tuple(coords))

    @property
    def dim(self) -> int:
        return sum(c is not None for c in self.coordinate)

    def vec(self, a: int) -> list[int]:
        v = [0] * self.dim
        if self.coordinate[a] is not None:
            v[self.coordinate[a]] = 1
        return v

    def difference(self, a: int, b: int) -> list[int]:
        v = [0] * self.dim
        if self.coordinate[a] is not None:
            v[self.coordinate[a]] += 1
        if self.coordinate[b] is not None:
            v[self.coordinate[b]] -= 1
        return v

    def element(self, coefficients: dict[int, int]) -> list[int]:
        v = [0] * self.dim
        for a, c in coefficients.items():
            if self.coordinate[a] is not None:
                v[self.coordinate[a]] += int(c)
        return v


def _lattice_of_pairs(basis: RingBasis, pairs: Iterable[tuple[int, int]]) -> IntegerLattice:
    """Span of ``vec(a) - vec(b)``.

    A difference whose endpoints are already joined by earlier differences is
    a sum of them, so only the edges of a spanning forest are reduced.
    """
    lat = IntegerLattice(basis.dim)
    forest = ElementPartition(len(basis.coordinate))
    for a, b in sorted(set((int(a), int(b)) for a, b in pairs if a != b)):
        if forest.union(a, b):
            lat.add(basis.difference(a, b))
    return lat


def commutator_lattice(S: FiniteSemigroup) -> IntegerLattice:
    t = S.table
    return _lattice_of_pairs(RingBasis.of(S), zip(t.ravel(), t.T.ravel()))


def same_trace(S: FiniteSemigroup, u: Sequence[int], v: Sequence[int],
               lattice: IntegerLattice | None = None) -> bool:
    lattice = commutator_lattice(S) if lattice is None else lattice
    return [a - b for a, b in zip(u, v)] in lattice


def trace_partition(S: FiniteSemigroup, lattice: IntegerLattice | None = None) -> ElementPartition:
    """Elements grouped by their image under the universal trace."""
    lattice = commutator_lattice(S) if lattice is None else lattice
    basis = RingBasis.of(S)
    return ElementPartition.from_labels([tuple(lattice.residual(basis.vec(a))) for a in range(len(S))])


@dataclass(frozen=True)
class TraceCheck:
    ok: bool
    counterexample: tuple[int, int] | None = None

    def __bool__(self) -> bool:
        return self.ok


def check_tr_prim(S: FiniteSemigroup) -> TraceCheck:
    """The transitive primary relation coincides with equality of universal traces."""
    p = sim_p(S).labels()
    tr = trace_partition(S).labels()
    bad = np.argwhere((p[:, None] == p[None, :]) != (tr[:, None] == tr[None, :]))
    if len(bad):
        return TraceCheck(False, (int(bad[0][0]), int(bad[0][1])))
    return TraceCheck(True)


def primary_implies_trace(S: FiniteSemigroup) -> TraceCheck:
    """Only the forward direction: related elements have equal traces."""
    p = sim_p(S).labels()
    tr = trace_partition(S).labels()
    bad = np.argwhere((p[:, None] == p[None, :]) & (tr[:, None] != tr[None, :]))
    if len(bad):
        return TraceCheck(False, (int(bad[0][0]), int(bad[0][1])))
    return TraceCheck(True)


def commutator_ideal_lattice(S: FiniteSemigroup) -> IntegerLattice:
    """Span of ``q (rs - sr) t`` over ``q, t`` in S^1 and ``r, s`` in S."""
    M1, _ = S.monoid_table()
    n = len(S)
    rs = S.table
    left = M1[:, rs]                 # [q, r, s] -> q r s
    right = M1[:, rs.T]              # [q, r, s] -> q s r
    a = M1[left.ravel()].ravel()     # [(q, r, s), t] -> q r s t
    b = M1[right.ravel()].ravel()
    keep = (a < n) & (b < n) & (a != b)
    pairs = np.unique(np.stack([a[keep], b[keep]], axis=1), axis=0)
    return _lattice_of_pairs(RingBasis.of(S), map(tuple, pairs))


def symmetric_difference_lattice(S: FiniteSemigroup, L: int = 4) -> IntegerLattice:
    """Span of ``a - b`` over pairs related by rearranging at most ``L`` factors."""
    return _lattice_of_pairs(RingBasis.of(S), sim_s1_bounded(S, L).pairs())


def commutator_ideal_check(S: FiniteSemigroup, L: int = 4) -> bool:
    return commutator_ideal_lattice(S) == symmetric_difference_lattice(S, L)
