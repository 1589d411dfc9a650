from collections import Counter

from conjcalc.corpus import by_name, corpus, random_tables, rees_family
from conjcalc.semigroup import first_nonassociative_triple


def test_corpus_contents():
    items = corpus()
    names = [i.name for i in items]
    assert len(names) == len(set(names))
    for name in ("T(2)", "T(3)", "T(4)", "PT(2)", "PT(3)", "I(2)", "I(3)", "I(4)", "S(3)", "S(4)",
                 "MU(2)", "MU(3)", "rees-eg", "min(3)", "null(2)", "null(3)"):
        assert name in names
    families = Counter(i.family for i in items)
    assert families["rees"] >= 26
    assert families["random"] >= 50


def test_rees_family_covers_both_kinds():
    fam = rees_family()
    assert len(fam) >= 25
    assert any(sem.has_zero_entries for _, sem in fam)
    assert any(not sem.has_zero_entries for _, sem in fam)
    assert all(len(sem.group) <= 6 for _, sem in fam)


def test_random_tables_are_distinct_and_associative():
    tables = random_tables(50, seed=3)
    assert len(tables) == 50
    assert len({(len(S), S.table.tobytes()) for S in tables}) == 50
    assert all(first_nonassociative_triple(S.table) is None for S in tables)
    assert {len(S) for S in tables} <= {2, 3, 4}


def test_corpus_is_deterministic():
    a = [i.semigroup.table.tobytes() for i in corpus(seed=5, random_count=12)]
    b = [i.semigroup.table.tobytes() for i in corpus(seed=5, random_count=12)]
    assert a == b


def test_lookup():
    assert by_name("MU(2)").order == 5 and by_name("MU(2)").has_zero
    assert by_name("rees-eg").rees is not None
