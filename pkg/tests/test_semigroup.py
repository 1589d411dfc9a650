import numpy as np
import pytest
from hypothesis import given, strategies as st

from conjcalc.corpus import random_tables
from conjcalc.semigroup import (NonAssociative, ShapeMismatch, TooLarge, adjoin_identity, cyclic_group,
                                direct_product, from_json, is_commutative, left_zero, matrix_unit_semigroup,
                                subsemigroup_generated, validate)
from conjcalc.transforms import monoid_cayley

from conftest import SMALL


def test_z2_is_a_commutative_monoid():
    S = validate(["0", "1"], [[0, 1], [1, 0]])
    assert is_commutative(S)
    assert S.identity == 0
    assert S.zero is None


def test_left_zero():
    S = validate(["a", "b"], [[0, 0], [1, 1]])
    assert not is_commutative(S)
    assert S.identity is None


def test_nonassociative_table_is_rejected():
    with pytest.raises(NonAssociative) as err:
        validate(["a", "b"], [[0, 1], [0, 0]])
    a, b, c = err.value.triple
    t = np.array([[0, 1], [0, 0]])
    assert t[t[a, b], c] != t[a, t[b, c]]


@pytest.mark.parametrize("table", [[[0, 1]], [[0, 2], [1, 0]], [[0.5, 0], [0, 0]]])
def test_malformed_tables(table):
    with pytest.raises(ShapeMismatch):
        validate([str(i) for i in range(len(table))], table)


def test_order_cap():
    with pytest.raises(TooLarge):
        validate([str(i) for i in range(3)], [[0] * 3] * 3, max_order=2)


def test_duplicate_labels():
    with pytest.raises(ShapeMismatch):
        validate(["a", "a"], [[0, 0], [0, 0]])


def test_adjoin_identity():
    Z2 = cyclic_group(2)
    assert adjoin_identity(Z2) is Z2
    L2 = adjoin_identity(left_zero(2))
    assert len(L2) == 3 and L2.identity == 2


def test_transformation_monoid_is_not_commutative():
    assert not is_commutative(monoid_cayley("T", 3).semigroup)


def test_subsemigroup_generated():
    mu = matrix_unit_semigroup(2)
    e12 = mu.index("e12")
    assert subsemigroup_generated(mu, {e12}) == {e12, mu.index("0")}
    Z3 = cyclic_group(3)
    assert subsemigroup_generated(Z3, {0}) == {0}
    assert subsemigroup_generated(Z3, range(3)) == set(range(3))


def test_direct_product_klein():
    V = direct_product(cyclic_group(2), cyclic_group(2))
    assert len(V) == 4 and is_commutative(V)
    # every element squares to the identity
    assert all(V.mul(a, a) == V.identity for a in range(4))


def test_direct_product_with_trivial_and_sizes():
    mu = matrix_unit_semigroup(2)
    P = direct_product(mu, cyclic_group(1))
    assert np.array_equal(P.table, mu.table)
    assert len(direct_product(mu, left_zero(3))) == 15


def test_json_roundtrip():
    mu = matrix_unit_semigroup(2)
    back = from_json(mu.dumps())
    assert back.elements == mu.elements and np.array_equal(back.table, mu.table)


def test_matrix_units_product_rule():
    mu = matrix_unit_semigroup(2)
    assert len(mu) == 5
    assert mu.mul(mu.index("e12"), mu.index("e21")) == mu.index("e11")
    assert mu.mul(mu.index("e12"), mu.index("e12")) == mu.zero


def test_random_tables_are_distinct_and_associative():
    tables = random_tables(50, seed=3)
    assert len(tables) == 50
    assert len({(len(S), S.table.tobytes()) for S in tables}) == 50


@given(st.sampled_from(SMALL), st.data())
def test_identity_and_zero_laws(inst, data):
    S = inst.semigroup
    a = data.draw(st.integers(0, len(S) - 1))
    if S.identity is not None:
        assert S.mul(S.identity, a) == a == S.mul(a, S.identity)
    if S.zero is not None:
        assert S.mul(S.zero, a) == S.zero == S.mul(a, S.zero)


@given(st.sampled_from(SMALL), st.data())
def test_monoid_table_extends_the_table(inst, data):
    S = inst.semigroup
    M1, one = S.monoid_table()
    n = len(S)
    assert np.array_equal(M1[:n, :n], S.table)
    a = data.draw(st.integers(0, len(M1) - 1))
    assert M1[one, a] == a == M1[a, one]
