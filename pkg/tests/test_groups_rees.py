import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from conjcalc.congruence import least_commutative_congruence, quotient
from conjcalc.corpus import corpus, rees_family
from conjcalc.groups import (alternating, cyclic, derived_subgroup, dihedral, group_sim_s, is_abelian, is_normal,
                             normal_closure, small_groups, subgroup_generated, symmetric)
from conjcalc.rees import (ZERO, HasZeroEntries, InvalidSandwich, LinkedTriple, NotLinked, NotNormalized,
                           classifier_partition, example_rees, linked_triple_congruence, rees_construct,
                           rees_from_json, rees_normalize, rees_sim_p, rees_sim_p1, rees_sim_s, sandwich_subgroup)
from conjcalc.relations import sim_p, sim_p1, sim_s, sim_s1_bounded
from conjcalc.semigroup import is_commutative

S3 = symmetric(3)


def test_derived_subgroups():
    assert derived_subgroup(S3) == frozenset(S3.index(x) for x in ("e", "(123)", "(132)"))
    assert len(alternating(3)) == 3
    S6 = symmetric(6)
    D = derived_subgroup(S6)
    assert len(D) == 360
    assert D == normal_closure(S6, D)
    assert derived_subgroup(cyclic(4)) == frozenset([cyclic(4).identity])


def test_group_sim_s_example_in_s6():
    S6 = symmetric(6)
    s, t = S6.index("(12)(34)(56)"), S6.index("(56)")
    assert group_sim_s(S6, s, t)
    assert S6.mul(s, S6.inv(t)) == S6.index("(12)(34)")
    conj = any(S6.mul(r, s, S6.inv(r)) == t for r in range(len(S6)))
    assert not conj
    assert group_sim_s(S6, s, s)


def test_group_sim_s_matches_generic():
    for G in small_groups().values():
        part = sim_s(G.semigroup)
        for a in range(len(G)):
            for b in range(len(G)):
                assert group_sim_s(G, a, b) == part.same(a, b)


def test_group_helpers():
    assert is_abelian(cyclic(6)) and not is_abelian(dihedral(4))
    assert len(dihedral(4)) == 8
    assert is_normal(S3, derived_subgroup(S3))
    assert not is_normal(S3, subgroup_generated(S3, [S3.index("(12)")]))


def test_construct_examples():
    C2 = cyclic(2)
    sem = rees_construct(C2, 1, 1, [[C2.identity]], with_zero=True)
    S = sem.export()
    assert len(S) == 3 and is_commutative(S) and S.zero == 2
    eg = example_rees()
    e = S3.identity
    assert eg.multiply((0, e, 0), (0, e, 0)) is ZERO
    assert eg.multiply((0, e, 0), ZERO) is ZERO
    with pytest.raises(InvalidSandwich):
        rees_construct(C2, 2, 2, [[None, None], [C2.identity, C2.identity]])


def test_rees_example_relations():
    eg = example_rees()
    g, e = S3.index("(12)"), S3.identity
    a, b = (0, g, 0), (0, e, 0)
    assert rees_sim_p1(eg, a, ZERO)
    assert rees_sim_p(eg, a, b)
    assert rees_sim_s(eg, a, b) and rees_sim_s(eg, a, ZERO)
    S = eg.export()
    assert (eg.index(a), eg.index(b)) not in sim_s1_bounded(S, 6)


def test_mixed_zero_entries_not_primary():
    sem = rees_construct(S3, 2, 2, [[S3.identity, None], [S3.identity, S3.identity]])
    assert not rees_sim_p(sem, (1, 0, 0), (0, 0, 0))
    assert rees_sim_p(sem, (1, 0, 0), ZERO)


def test_one_by_one_is_group_conjugacy():
    sem = rees_construct(S3, 1, 1, [[S3.identity]])
    for s in range(6):
        for t in range(6):
            conj = any(S3.mul(r, s) == S3.mul(t, r) for r in range(6))
            assert rees_sim_p1(sem, (0, s, 0), (0, t, 0)) == conj
            assert rees_sim_s(sem, (0, s, 0), (0, t, 0)) == (S3.mul(s, S3.inv(t)) in derived_subgroup(S3))


def test_normalized_transposition_entry_is_universal():
    e, g = S3.identity, S3.index("(12)")
    sem = rees_construct(S3, 2, 2, [[e, e], [e, g]])
    assert sem.is_normalized() and sandwich_subgroup(sem) == frozenset(range(6))
    assert sim_s(sem.export()).num_classes() == 1


def test_normalization_errors():
    e, g = S3.identity, S3.index("(12)")
    sem = rees_construct(S3, 2, 2, [[g, e], [e, g]])
    assert not sem.is_normalized()
    with pytest.raises(NotNormalized):
        rees_sim_s(sem, (0, e, 0), (0, g, 0))
    with pytest.raises(HasZeroEntries):
        rees_normalize(example_rees())


def test_normalization_examples():
    e, g = S3.identity, S3.index("(123)")
    done = rees_construct(S3, 2, 2, [[e, e], [e, g]])
    assert rees_normalize(done).target.sandwich == done.sandwich
    one = rees_normalize(rees_construct(S3, 1, 1, [[g]]))
    assert one.target.sandwich == ((e,),) and one.verify()


@settings(max_examples=20)
@given(st.lists(st.integers(0, 5), min_size=4, max_size=4))
def test_normalization_is_an_isomorphism(entries):
    sem = rees_construct(S3, 2, 2, [entries[:2], entries[2:]])
    iso = rees_normalize(sem)
    assert iso.target.is_normalized() and iso.verify()
    assert len({iso(x) for x in sem.elements()}) == len(sem)


@pytest.mark.parametrize("name,sem", rees_family(), ids=[n for n, _ in rees_family()])
def test_classifiers_match_generic(name, sem):
    S = sem.export()
    assert np.array_equal(classifier_partition(sem, rees_sim_p1), sim_p1(S).matrix)
    assert np.array_equal(classifier_partition(sem, rees_sim_p), sim_p(S).to_relation().matrix)
    closed = sim_p1(S).closure().to_relation().matrix
    assert np.array_equal(classifier_partition(sem, rees_sim_p), closed)
    by_p = classifier_partition(sem, lambda m, a, b: rees_sim_s(m, a, b, normalize=True))
    assert np.array_equal(by_p, sim_s(S).to_relation().matrix)


def test_linked_triples():
    e, g = S3.identity, S3.index("(123)")
    sem = rees_construct(S3, 2, 2, [[e, e], [e, g]])
    S = sem.export()
    discrete = LinkedTriple.make([e], [[0], [1]], [[0], [1]])
    assert len(linked_triple_congruence(sem, discrete)) == len(S)
    everything = LinkedTriple.make(range(6), [[0, 1]], [[0, 1]])
    assert len(linked_triple_congruence(sem, everything)) == 1
    H = sandwich_subgroup(sem)
    rho = linked_triple_congruence(sem, LinkedTriple.make(H, [[0, 1]], [[0, 1]]))
    assert rho.partition == sim_s(S) == least_commutative_congruence(S).partition
    Q, _ = quotient(S, rho)
    assert len(Q) == 6 // len(H) and is_commutative(Q) and Q.identity is not None
    with pytest.raises(NotLinked):
        linked_triple_congruence(sem, LinkedTriple.make([e], [[0, 1]], [[0], [1]]))
    with pytest.raises(NotLinked):
        linked_triple_congruence(sem, LinkedTriple.make([e, S3.index("(12)")], [[0], [1]], [[0], [1]]))


def test_json_roundtrip():
    eg = example_rees()
    back = rees_from_json(eg.to_json())
    assert back.sandwich == eg.sandwich and back.with_zero
    assert eg.parse(eg.label((1, 3, 0))) == (1, 3, 0)
