from collections import Counter
from itertools import product

import pytest
from hypothesis import given, strategies as st

from conjcalc.relations import BudgetExceeded
from conjcalc.words import (all_commuting_pairs, commuting_generation_test, compositions, factorizations, parikh,
                            sim_p1_words, sim_p1_words_literal, sim_s1_words_oracle, sim_s_words, words_of_length)

words = st.text(alphabet="abc", min_size=1, max_size=8)


def test_letter_counts():
    assert parikh("aabb") == Counter(a=2, b=2) == parikh("abab")


def test_sim_s_examples():
    assert sim_s_words("aabb", "abab")
    assert sim_s_words("ab", "ba")
    assert not sim_s_words("ab", "aba")


def test_rotation_examples():
    assert sim_p1_words("abc", "bca")
    assert not sim_p1_words("aabb", "abab")
    assert sim_p1_words("abba", "abba")


def test_oracle_examples():
    ok, (factors, order) = sim_s1_words_oracle("aabb", "abab")
    assert ok and "".join(factors) == "aabb"
    assert "".join(factors[i] for i in order) == "abab"
    ok, (factors, order) = sim_s1_words_oracle("ab", "ba")
    assert ok and factors == ("a", "b") and order == (1, 0)
    assert sim_s1_words_oracle("ab", "aa") == (False, None)


def test_oracle_budget():
    with pytest.raises(BudgetExceeded):
        sim_s1_words_oracle("a" * 20, "a" * 20)


def test_invalid_words():
    with pytest.raises(ValueError):
        parikh("")


def test_compositions_and_factorizations():
    assert sorted(compositions(3)) == [(1, 1, 1), (1, 2), (2, 1), (3,)]
    assert len(list(factorizations("abcd"))) == 8


def test_generation_examples():
    assert commuting_generation_test("ab", all_commuting_pairs("ab"), 4)
    assert not commuting_generation_test("ab", [], 2)
    for n in range(1, 8):
        assert commuting_generation_test("ab", [("ab", "ba")], n)


def test_generation_needs_every_letter_pair():
    pairs = [("ab", "ba"), ("bc", "cb")]
    assert not commuting_generation_test("abc", pairs, 2)
    assert commuting_generation_test("abc", all_commuting_pairs("abc"), 4)


def test_generation_rejects_bad_pairs():
    with pytest.raises(ValueError):
        commuting_generation_test("ab", [("ab", "aa")], 3)


@pytest.mark.parametrize("alphabet", ["ab", "abc"])
def test_rotation_matches_literal_search(alphabet):
    top = 8 if alphabet == "ab" else 6
    for n in range(1, top + 1):
        ws = words_of_length(alphabet, n)
        for u in ws:
            for v in ws:
                assert sim_p1_words(u, v) == sim_p1_words_literal(u, v)


def test_oracle_agrees_with_letter_counts():
    for alphabet in ("a", "ab", "abc"):
        for n in range(1, 6 if alphabet == "abc" else 7):
            ws = words_of_length(alphabet, n)
            for u, v in product(ws, ws):
                assert sim_s1_words_oracle(u, v)[0] == sim_s_words(u, v)


@given(words, words)
def test_letter_counts_are_additive(u, v):
    assert parikh(u + v) == parikh(u) + parikh(v)


@given(words, st.integers(0, 8))
def test_rotation_preserves_counts(u, k):
    k %= len(u)
    v = u[k:] + u[:k]
    assert sim_p1_words(u, v) and sim_s_words(u, v)


@given(words, st.integers(0, 8), st.integers(0, 8))
def test_rotation_is_transitive(u, i, j):
    v = u[i % len(u):] + u[:i % len(u)]
    w = v[j % len(v):] + v[:j % len(v)]
    assert sim_p1_words(u, w) and sim_p1_words(w, u)
