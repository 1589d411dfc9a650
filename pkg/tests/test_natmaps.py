import random
from collections import Counter

import pytest
from hypothesis import given, settings, strategies as st

from conjcalc.natmaps import (EventuallyShiftMap, NotInjective, NotSurjective, SurjInvariantValue,
                              check_cycle_correspondence, compose, cycle_census, defect, has_fiber_of_size,
                              inj_sim_s, ncm_invariants, power, random_injection, random_surjection,
                              surj_approx, surj_invariant)

Map = EventuallyShiftMap
UP = Map.shift_by(1)
DOWN = Map([0], -1)          # 0 -> 0, n -> n - 1
SWAP = Map([1, 0], 0)


def _window(f):
    return f.threshold + max(f.table, default=0) + abs(f.shift) + 5


def _fibres(f):
    w = _window(f)
    out: dict[int, list[int]] = {}
    for n in range(w):
        out.setdefault(f(n), []).append(n)
    return out


def brute_defect(f):
    w = _window(f)
    hit = {f(n) for n in range(w)}
    return sum(1 for v in range(w) if v not in hit)


def brute_ncm(f):
    fib = _fibres(f)
    collapsed = {n for pts in fib.values() if len(pts) > 1 for n in pts}
    multi = {v for v, pts in fib.items() if len(pts) > 1}
    return collapsed, multi, max(len(p) for p in fib.values())


def brute_finite_cycles(f):
    lengths = Counter()
    for x in range(f.threshold):
        y, k = f(x), 1
        while y != x and k <= f.threshold:
            y, k = f(y), k + 1
        if y == x and x == min(_orbit(f, x)):
            lengths[k] += 1
    if f.shift == 0:
        lengths.pop(1, None)
    return tuple(sorted(lengths.items()))


def _orbit(f, x):
    out, y = [x], f(x)
    while y != x:
        out.append(y)
        y = f(y)
    return out


injections = st.builds(lambda seed: random_injection(random.Random(seed)), st.integers(0, 10 ** 9))
surjections = st.builds(lambda seed: random_surjection(random.Random(seed)), st.integers(0, 10 ** 9))


def test_canonical_form():
    assert Map([0, 1, 2], 0) == Map.identity()
    assert Map([5, 3, 4], 2).threshold == 1
    assert Map.from_json(UP.to_json()) == UP
    with pytest.raises(ValueError):
        Map([], -1)


def test_composition_examples():
    assert compose(UP, UP) == Map.shift_by(2)
    assert compose(Map.identity(), SWAP) == SWAP
    assert compose(DOWN, UP) == Map.identity()
    assert compose(UP, DOWN) != Map.identity()
    assert compose(UP, DOWN)(0) == 1


def test_defect_examples():
    assert defect(UP) == 1
    assert defect(Map([2, 0, 1], 0)) == 0
    assert defect(power(UP, 2)) == 2
    with pytest.raises(NotInjective):
        defect(DOWN)


def test_census_examples():
    c = cycle_census(UP)
    assert (c.forward, c.open, c.finite) == (1, 0, ())
    c = cycle_census(SWAP)
    assert c.finite == ((2, 1),) and c.cofinite_fixed_points
    assert cycle_census(compose(UP, SWAP)).forward == 1
    assert check_cycle_correspondence(UP, UP)


def test_injection_relation_examples():
    assert inj_sim_s(UP, compose(UP, SWAP))
    assert not inj_sim_s(UP, Map.shift_by(2))
    assert inj_sim_s(SWAP, Map([1, 2, 0], 0))


def test_collapse_invariants():
    inv = ncm_invariants(DOWN)
    assert inv.collapsed == {0, 1} and inv.multi_image == {0} and inv.max_fiber == 2
    inv = ncm_invariants(SWAP)
    assert not inv.collapsed and not inv.multi_image and inv.max_fiber == 1
    g2 = power(DOWN, 2)
    inv = ncm_invariants(g2)
    assert inv.collapsed == {0, 1, 2} and inv.multi_image == {0} and inv.max_fiber == 3
    with pytest.raises(NotSurjective):
        ncm_invariants(UP)


def test_surjection_invariant_examples():
    assert surj_invariant(SWAP) == SurjInvariantValue.finite(0)
    assert surj_invariant(DOWN) == SurjInvariantValue.finite(1)
    assert repr(surj_invariant(power(DOWN, 2))) == "Finite(2)"
    assert surj_approx(DOWN, Map([1, 0, 0], -1))


def test_extended_addition():
    inf = SurjInvariantValue.inf
    fin = SurjInvariantValue.finite
    assert fin(2) + fin(3) == fin(5)
    assert fin(2) + inf(1) == inf(1)
    assert inf(3) + inf(2) == inf(3)
    with pytest.raises(ValueError):
        inf(4)


@given(injections, injections)
def test_composition_is_pointwise(f, g):
    h = compose(f, g)
    for n in range(_window(f) + _window(g)):
        assert h(n) == f(g(n))


@given(injections, injections, injections)
def test_composition_is_associative(f, g, h):
    assert compose(compose(f, g), h) == compose(f, compose(g, h))


@given(injections)
def test_defect_matches_window_count(f):
    assert defect(f) == brute_defect(f)


@given(injections, injections)
def test_defect_is_additive(f, g):
    assert defect(compose(f, g)) == defect(f) + defect(g)


@given(injections)
def test_census_matches_orbit_tracing(f):
    c = cycle_census(f)
    assert c.forward == defect(f)
    assert c.open == 0
    assert c.finite == brute_finite_cycles(f)


@given(injections, injections)
def test_cycle_correspondence(s, t):
    assert check_cycle_correspondence(s, t)


@given(injections, injections, injections)
def test_injection_relation_is_compatible(a, b, c):
    if inj_sim_s(a, b):
        assert inj_sim_s(compose(c, a), compose(c, b))
        assert inj_sim_s(compose(a, c), compose(b, c))


@given(surjections)
def test_ncm_matches_window(f):
    inv = ncm_invariants(f)
    collapsed, multi, m = brute_ncm(f)
    assert inv.collapsed == collapsed and inv.multi_image == multi and inv.max_fiber == m


@settings(max_examples=150)
@given(surjections, surjections)
def test_collapse_counting_rules(s, t):
    st_ = compose(s, t)
    Ns, Cs, ms = brute_ncm(s)
    Nt, Ct, mt = brute_ncm(t)
    Nst, Cst, mst = brute_ncm(st_)
    assert len(Nst) == len(Nt) + len(Ns - Ct)
    assert len(Cst) == len(Cs) + len(Ct - Ns)
    assert max(ms, mt) <= mst <= ms * mt
    if has_fiber_of_size(s, mst) or has_fiber_of_size(t, mst):
        assert has_fiber_of_size(st_, mst)
    assert surj_invariant(st_) == surj_invariant(s) + surj_invariant(t)


def test_random_generators_are_valid():
    rng = random.Random(7)
    for _ in range(200):
        assert random_injection(rng).is_injective
        assert random_surjection(rng).is_surjective
