import random

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from conjcalc.congruence import (IncompatiblePartition, as_congruence, closure_of_subset, congruence_generated,
                                 is_commutative_quotient, is_compatible, is_ideal, is_left_ideal,
                                 is_subsemigroup, least_commutative_congruence, left_ideal_generated, quotient,
                                 right_ideal_generated)
from conjcalc.corpus import corpus
from conjcalc.groups import symmetric
from conjcalc.partition import ElementPartition
from conjcalc.relations import sim_p, sim_s
from conjcalc.semigroup import cyclic_group, is_commutative, subsemigroup_generated, matrix_unit_semigroup, min_semigroup

SMALL = [i for i in corpus() if len(i.semigroup) <= 30]


def _brute_generated(S, pairs):
    """Iterate reflexive, symmetric, transitive and two-sided compatibility to a fixpoint."""
    n = len(S)
    m = np.eye(n, dtype=bool)
    for a, b in pairs:
        m[a, b] = m[b, a] = True
    t = S.table
    while True:
        old = m.copy()
        for a, b in zip(*np.nonzero(m)):
            m[t[:, a], t[:, b]] = True
            m[t[a], t[b]] = True
        m = m | m.T
        m = m | ((m.astype(int) @ m.astype(int)) > 0)
        if np.array_equal(m, old):
            return m


def test_empty_pairs_give_discrete():
    S = matrix_unit_semigroup(2)
    assert len(congruence_generated(S, [])) == len(S)


def test_matrix_unit_collapse():
    S = matrix_unit_semigroup(2)
    rho = congruence_generated(S, [(S.index("e12"), S.index("0"))])
    assert len(rho) == 1


def test_commutative_gives_discrete():
    for S in (cyclic_group(5), min_semigroup(4)):
        assert len(least_commutative_congruence(S)) == len(S)


def test_s3_abelianization():
    S3 = symmetric(3).semigroup
    Q, proj = quotient(S3, least_commutative_congruence(S3))
    assert len(Q) == 2 and is_commutative(Q) and Q.identity is not None
    assert proj[S3.index("(12)")] != proj[S3.index("e")]
    assert proj[S3.index("(123)")] == proj[S3.index("e")]


def test_quotient_by_discrete_is_isomorphic():
    S = matrix_unit_semigroup(2)
    Q, proj = quotient(S, ElementPartition.discrete(len(S)))
    assert np.array_equal(proj[S.table], Q.table[np.ix_(proj, proj)])


def test_incompatible_partition_rejected():
    S = matrix_unit_semigroup(2)
    bad = ElementPartition.from_classes(len(S), [[S.index("e11"), S.index("e22")]])
    assert not is_compatible(S, bad)
    with pytest.raises(IncompatiblePartition):
        quotient(S, bad)
    with pytest.raises(IncompatiblePartition):
        as_congruence(S, bad)


def test_closure_examples():
    S = matrix_unit_semigroup(2)
    part = sim_s(S)
    assert closure_of_subset(S, [S.index("e11")], part) == frozenset(range(len(S)))
    assert closure_of_subset(S, [S.index("e12"), S.index("0")], part) == frozenset(range(len(S)))
    S3 = symmetric(3).semigroup
    part = sim_s(S3)
    block = part.classes()[0]
    assert closure_of_subset(S3, block, part) == frozenset(block)


def test_ideal_helpers():
    S = matrix_unit_semigroup(2)
    left = left_ideal_generated(S, [S.index("e12")])
    assert is_left_ideal(S, left) and not is_ideal(S, left)
    assert is_ideal(S, [S.index("0")])
    assert is_subsemigroup(S, [S.index("e11")])
    assert right_ideal_generated(S, [S.index("0")]) == frozenset([S.index("0")])


@pytest.mark.parametrize("inst", SMALL, ids=lambda i: i.name)
def test_generated_by_primary_is_least_commutative(inst):
    S = inst.semigroup
    lcc = least_commutative_congruence(S).partition
    assert congruence_generated(S, sim_p(S)).partition == lcc
    assert is_commutative_quotient(S, lcc)
    Q, proj = quotient(S, lcc)
    assert is_commutative(Q)
    # primary-related elements land on the same image
    lab = sim_p(S).labels()
    assert all(proj[a] == proj[b] for a in range(len(S)) for b in range(len(S)) if lab[a] == lab[b])


@settings(max_examples=80)
@given(st.sampled_from([i for i in corpus() if len(i.semigroup) <= 12]), st.randoms(use_true_random=False))
def test_generated_matches_fixpoint(inst, rng):
    S = inst.semigroup
    n = len(S)
    pairs = [(rng.randrange(n), rng.randrange(n)) for _ in range(rng.randint(0, 3))]
    rho = congruence_generated(S, pairs)
    assert is_compatible(S, rho.partition)
    assert np.array_equal(rho.partition.to_relation().matrix, _brute_generated(S, pairs))


@settings(max_examples=40)
@given(st.sampled_from(SMALL), st.randoms(use_true_random=False))
def test_generated_is_least(inst, rng):
    S = inst.semigroup
    n = len(S)
    pairs = [(rng.randrange(n), rng.randrange(n))]
    rho = congruence_generated(S, pairs).partition
    # any congruence containing the pairs contains rho
    extra = [(rng.randrange(n), rng.randrange(n)) for _ in range(2)]
    bigger = congruence_generated(S, pairs + extra).partition
    assert rho.refines(bigger)


@settings(max_examples=40)
@given(st.sampled_from(SMALL), st.randoms(use_true_random=False))
def test_closure_preserves_subsemigroups_and_ideals(inst, rng):
    S = inst.semigroup
    part = least_commutative_congruence(S).partition
    seed = [rng.randrange(len(S)) for _ in range(2)]
    sub = subsemigroup_generated(S, seed)
    assert is_subsemigroup(S, closure_of_subset(S, sub, part))
    left = left_ideal_generated(S, seed)
    assert is_ideal(S, closure_of_subset(S, left, part))
    right = right_ideal_generated(S, seed)
    assert is_ideal(S, closure_of_subset(S, right, part))
    once = closure_of_subset(S, seed, part)
    assert closure_of_subset(S, once, part) == once
