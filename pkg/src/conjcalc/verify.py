"""Corpus-wide verification suites.

Each suite returns a :class:`SuiteReport` of named checks.  Suites are
deterministic for a fixed seed.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable

import numpy as np

from . import graph_inverse as gis
from . import natmaps
from .congruence import congruence_generated, is_commutative_quotient, least_commutative_congruence, quotient
from .corpus import Instance, by_name, corpus
from .partition import ElementPartition, PairRelation
from .rees import (classifier_partition, rees_sim_p, rees_sim_p1, rees_sim_s)
from .relations import (SOUND_INCLUSIONS, all_relations, containment_matrix, sim_p, sim_p1, sim_s,
                        sim_s1_bounded, sim_star1)
from .semigroup import is_commutative
from .trace import check_tr_prim, commutator_ideal_check, primary_implies_trace
from .transforms import sim_s_prediction
from .words import (all_commuting_pairs, commuting_generation_test, rearrangements, sim_p1_words,
                    sim_p1_words_literal, sim_s_words, words_of_length)

CONTAINMENT_BOUND = 4


@dataclass
class Check:
    name: str
    ok: bool
    detail: str = ""


@dataclass
class SuiteReport:
    suite: str
    checks: list[Check] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.ok for c in self.checks)

    def add(self, name: str, ok: bool, detail: str = "") -> bool:
        self.checks.append(Check(name, bool(ok), detail))
        return bool(ok)

    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.ok]

    def to_json(self) -> dict:
        return {"suite": self.suite, "passed": self.passed,
                "checks": [{"name": c.name, "ok": c.ok, "detail": c.detail} for c in self.checks]}


@lru_cache(maxsize=None)
def _bounded(inst: Instance, L: int) -> PairRelation:
    return sim_s1_bounded(inst.semigroup, L)


@lru_cache(maxsize=None)
def _lcc(inst: Instance) -> ElementPartition:
    return least_commutative_congruence(inst.semigroup).partition


# ------------------------------------------------------------ least-comm

def suite_least_comm(seed: int = 0) -> SuiteReport:
    """Four constructions of the least commutative congruence agree on every instance."""
    rep = SuiteReport("least-comm")
    for inst in corpus(seed):
        S = inst.semigroup
        from_primary = congruence_generated(S, sim_p1(S)).partition
        from_star = sim_star1(S).closure()
        from_bounded = congruence_generated(S, _bounded(inst, 4)).partition
        lcc = _lcc(inst)
        ok = from_primary == from_star == from_bounded == lcc
        rep.add(inst.name, ok, f"{lcc.num_classes()} classes")
    return rep


# -------------------------------------------------------------- quotient

def _sample_commutative_congruences(S, rng: random.Random, want: int, attempts: int = 400):
    n = len(S)
    found = []
    for _ in range(attempts):
        if len(found) >= want:
            break
        k = rng.randint(1, 3)
        pairs = [(rng.randrange(n), rng.randrange(n)) for _ in range(k)]
        rho = congruence_generated(S, pairs).partition
        if is_commutative_quotient(S, rho):
            found.append(rho)
    return found


def suite_quotient(seed: int = 0, samples: int = 10) -> SuiteReport:
    """The quotient by the least commutative congruence is commutative and lies below sampled commutative congruences."""
    rep = SuiteReport("quotient")
    rng = random.Random(seed)
    for inst in corpus(seed):
        S = inst.semigroup
        lcc = _lcc(inst)
        Q, _ = quotient(S, lcc)
        rep.add(f"{inst.name}: commutative quotient", is_commutative(Q), f"order {len(Q)}")
        rhos = _sample_commutative_congruences(S, rng, samples)
        distinct = len({tuple(r.labels().tolist()) for r in rhos})
        ok = len(rhos) >= samples and all(lcc.refines(r) for r in rhos)
        rep.add(f"{inst.name}: minimal", ok, f"{len(rhos)} samples, {distinct} distinct")
    return rep


# ------------------------------------------------------------------ rees

def suite_rees(seed: int = 0, include_example: bool = True) -> SuiteReport:
    rep = SuiteReport("rees")
    count = 0
    for inst in corpus(seed):
        if inst.rees is None:
            continue
        count += 1
        S, sem = inst.semigroup, inst.rees
        generic_p1 = sim_p1(S).matrix
        generic_p = sim_p(S).to_relation().matrix
        generic_s = sim_s(S).to_relation().matrix
        fast_p1 = classifier_partition(sem, rees_sim_p1)
        fast_p = classifier_partition(sem, rees_sim_p)
        fast_s = classifier_partition(sem, lambda m, a, b: rees_sim_s(m, a, b, normalize=True))
        ok = (np.array_equal(generic_p1, fast_p1) and np.array_equal(generic_p, fast_p)
              and np.array_equal(generic_s, fast_s))
        rep.add(inst.name, ok, "zero entries" if sem.has_zero_entries else "no zero entries")
    rep.add("at least 25 instances", count >= 25, str(count))
    if include_example:
        _rees_example(rep, seed)
    return rep


def _rees_example(rep: SuiteReport, seed: int) -> None:
    inst = by_name("rees-eg", seed)
    sem, S = inst.rees, inst.semigroup
    G = sem.group
    s = (0, G.index("(12)"), 0)
    t = (0, G.identity, 0)
    a, b = sem.index(s), sem.index(t)
    rep.add("rees-eg: (1,s,1) ~p (1,t,1)", sim_p(S).same(a, b))
    rep.add("rees-eg: pair absent at bound 6", (a, b) not in sim_s1_bounded(S, 6))
    rep.add("rees-eg: ~s universal", sim_s(S).num_classes() == 1)


# ------------------------------------------------------------ transforms

def suite_transforms(seed: int = 0) -> SuiteReport:
    rep = SuiteReport("transforms")
    for name in ("T(3)", "T(4)", "PT(3)", "I(3)", "I(4)"):
        inst = by_name(name, seed)
        predicted = ElementPartition.from_labels([c.value for c in sim_s_prediction(inst.monoid)])
        lcc = _lcc(inst)
        rep.add(name, lcc == predicted and lcc.num_classes() == 3, f"{lcc.num_classes()} classes")
    return rep


# ----------------------------------------------------------------- words

def suite_words(seed: int = 0) -> SuiteReport:
    rep = SuiteReport("words")
    for k in (1, 2, 3):
        alphabet = "abc"[:k]
        for n in range(1, 7):
            words = words_of_length(alphabet, n)
            ok = True
            for u in words:
                oracle = rearrangements(u).keys()
                fast = {v for v in words if sim_s_words(u, v)}
                ok &= fast == set(oracle)
            rep.add(f"letter counts vs rearrangements, |A|={k}, n={n}", ok, f"{len(words)} words")
    for alphabet, top in (("ab", 8), ("abc", 6)):
        for n in range(1, top + 1):
            words = words_of_length(alphabet, n)
            ok = all(sim_p1_words(u, v) == sim_p1_words_literal(u, v) for u in words for v in words)
            rep.add(f"rotation vs factor swap, |A|={len(alphabet)}, n={n}", ok)
    for alphabet in ("ab", "abc"):
        for n in range(1, 6):
            full = commuting_generation_test(alphabet, all_commuting_pairs(alphabet), n)
            empty = commuting_generation_test(alphabet, [], n)
            # a single letter has nothing to commute with, so the empty set suffices at n = 1
            rep.add(f"commuting pairs generate, |A|={len(alphabet)}, n={n}", full and (empty == (n == 1)))
    return rep


# ----------------------------------------------------------------- graph

def primary_closure_on_ball(E: gis.DirectedGraph, radius: int = 4, search_radius: int = 4) -> ElementPartition:
    """Classes of the transitive primary relation restricted to a ball, by direct witness search.

    Every ``(pr, rp)`` with ``p, r`` in a ball of ``search_radius`` (or the
    adjoined identity) is an edge; classes are taken over every element the
    products reach, then restricted to the target ball.
    """
    target = gis.ball(E, radius)
    pool = gis.ball(E, search_radius) + [None]

    def mul(a, b):
        if a is None:
            return b
        if b is None:
            return a
        return gis.multiply(E, a, b)

    nodes: dict = {x: k for k, x in enumerate(target)}
    edges = []
    for p in pool:
        for r in pool:
            a, b = mul(p, r), mul(r, p)
            if a is None or b is None:
                continue
            edges.append((nodes.setdefault(a, len(nodes)), nodes.setdefault(b, len(nodes))))
    part = ElementPartition(len(nodes))
    for a, b in edges:
        part.union(a, b)
    lab = part.labels()
    return ElementPartition.from_labels(lab[: len(target)].tolist())


def suite_graph(seed: int = 0, triples: int = 10_000) -> SuiteReport:
    rep = SuiteReport("graph")
    graphs = gis.standard_graphs()
    for name, E in graphs.items():
        target = gis.ball(E, 4)
        searched = primary_closure_on_ball(E)
        keyed = ElementPartition.from_labels([gis.gis_sim_p_key(E, a) for a in target])
        rep.add(f"{name}: ~p matches witness search", searched == keyed, f"{len(target)} ball elements")

    E = graphs["bicyclic"]
    elems = gis.ball(E, 6, with_zero=False)
    keyed = ElementPartition.from_labels([gis.gis_sim_s_key(E, a) for a in elems])
    exponent = ElementPartition.from_labels([len(a.x) - len(a.y) for a in elems])
    rep.add("bicyclic: ~s is the exponent difference", keyed == exponent)
    E = graphs["polycyclic2"]
    keys = {gis.gis_sim_s_key(E, a) for a in gis.ball(E, 4)}
    rep.add("polycyclic(2): one class with 0", keys == {("zero",)})

    rng = random.Random(seed)
    balls = {name: gis.ball(E, 4) for name, E in graphs.items()}
    names = sorted(graphs)
    bad_inv = bad_cong = bad_incl = 0
    for _ in range(triples):
        name = rng.choice(names)
        E, pool = graphs[name], balls[name]
        a, c = rng.choice(pool), rng.choice(pool)
        if rng.random() < 0.5:
            ka = gis.gis_sim_s_key(E, a)
            same = [x for x in pool if gis.gis_sim_s_key(E, x) == ka]
            b = rng.choice(same)
        else:
            b = rng.choice(pool)
        s_ab = gis.gis_sim_s(E, a, b)
        p_ab = gis.gis_sim_p(E, a, b)
        ai, bi = gis.inverse(a), gis.inverse(b)
        if s_ab != gis.gis_sim_s(E, ai, bi) or p_ab != gis.gis_sim_p(E, ai, bi):
            bad_inv += 1
        if s_ab and not (gis.gis_sim_s(E, gis.multiply(E, a, c), gis.multiply(E, b, c))
                         and gis.gis_sim_s(E, gis.multiply(E, c, a), gis.multiply(E, c, b))):
            bad_cong += 1
        if p_ab and not s_ab:
            bad_incl += 1
    rep.add("inverse invariance", bad_inv == 0, f"{bad_inv} failures in {triples}")
    rep.add("~s compatible with products", bad_cong == 0, f"{bad_cong} failures in {triples}")
    rep.add("~p inside ~s", bad_incl == 0, f"{bad_incl} failures in {triples}")
    return rep


# --------------------------------------------------------------- natmaps

def suite_natmaps(seed: int = 0, pairs: int = 1000) -> SuiteReport:
    rep = SuiteReport("natmaps")
    rng = random.Random(seed)
    bad = dict.fromkeys(["defect", "cycles", "N", "C", "m", "achieved", "invariant"], 0)
    for _ in range(pairs):
        s, t = natmaps.random_injection(rng), natmaps.random_injection(rng)
        st = natmaps.compose(s, t)
        bad["defect"] += natmaps.defect(st) != natmaps.defect(s) + natmaps.defect(t)
        bad["cycles"] += not natmaps.check_cycle_correspondence(s, t)

        s, t = natmaps.random_surjection(rng), natmaps.random_surjection(rng)
        st = natmaps.compose(s, t)
        ns, nt, nst = (natmaps.ncm_invariants(f) for f in (s, t, st))
        bad["N"] += len(nst.collapsed) != len(nt.collapsed) + len(ns.collapsed - nt.multi_image)
        bad["C"] += len(nst.multi_image) != len(ns.multi_image) + len(nt.multi_image - ns.collapsed)
        bad["m"] += not (max(ns.max_fiber, nt.max_fiber) <= nst.max_fiber <= ns.max_fiber * nt.max_fiber)
        m = nst.max_fiber
        if natmaps.has_fiber_of_size(s, m) or natmaps.has_fiber_of_size(t, m):
            bad["achieved"] += not natmaps.has_fiber_of_size(st, m)
        bad["invariant"] += natmaps.surj_invariant(st) != natmaps.surj_invariant(s) + natmaps.surj_invariant(t)
    labels = {
        "defect": "defect is additive",
        "cycles": "cycles of ts and st correspond",
        "N": "collapsed-point count formula",
        "C": "multi-preimage count formula",
        "m": "largest fibre bounds",
        "achieved": "largest fibre carried to the product",
        "invariant": "collapse invariant is additive",
    }
    for key, label in labels.items():
        rep.add(label, bad[key] == 0, f"{bad[key]} failures in {pairs}")
    return rep


# ----------------------------------------------------------------- trace

def suite_trace(seed: int = 0, max_order: int = 30, L: int = 4) -> SuiteReport:
    rep = SuiteReport("trace")
    for inst in corpus(seed):
        S = inst.semigroup
        if inst.has_zero and len(S) <= max_order:
            res = check_tr_prim(S)
            rep.add(f"{inst.name}: ~p equals trace equality", res.ok,
                    "" if res.ok else f"counterexample {res.counterexample}")
            rep.add(f"{inst.name}: commutator ideal at bound {L}", commutator_ideal_check(S, L))
        res = primary_implies_trace(S)
        rep.add(f"{inst.name}: ~p implies equal traces", res.ok)
    return rep


# ----------------------------------------------------------- containment

# (smaller, larger, instance or None for any): smaller is strictly inside larger
STRICT_WITNESSES = (
    ("p", "s", None), ("p1", "p", None), ("s1", "s", "rees-eg"), ("n", "p1", None),
    ("w", "o", None), ("c", "o", None),
)
INCOMPARABLE = (("s", "o"), ("o", "s"))


@lru_cache(maxsize=None)
def _containment(inst: Instance, L: int):
    rels = all_relations(inst.semigroup, L, skip=("s1",))
    rels["s1"] = _bounded(inst, L)
    return containment_matrix(inst.semigroup, L, relations=rels)


def suite_containment(seed: int = 0, L: int = CONTAINMENT_BOUND) -> SuiteReport:
    rep = SuiteReport("containment")
    reports = []
    for inst in corpus(seed):
        cm = _containment(inst, L)
        reports.append((inst, cm))
        broken = [f"{a}<={b}" for a, b in SOUND_INCLUSIONS if cm.subset.get((a, b)) is False]
        rep.add(f"{inst.name}: sound inclusions", not broken, ", ".join(broken) or f"skipped {list(cm.skipped)}")
    for small, big, where in STRICT_WITNESSES:
        hits = [inst.name for inst, cm in reports
                if (where is None or inst.name == where)
                and cm.subset.get((small, big)) is True and cm.subset.get((big, small)) is False]
        rep.add(f"~{small} strictly inside ~{big}", bool(hits), ", ".join(hits[:3]))
    for a, b in INCOMPARABLE:
        hits = [inst.name for inst, cm in reports if cm.subset.get((a, b)) is False]
        rep.add(f"~{a} not inside ~{b}", bool(hits), ", ".join(hits[:3]))
    return rep


SUITES: dict[str, Callable[..., SuiteReport]] = {
    "least-comm": suite_least_comm,
    "quotient": suite_quotient,
    "rees": suite_rees,
    "transforms": suite_transforms,
    "words": suite_words,
    "graph": suite_graph,
    "natmaps": suite_natmaps,
    "trace": suite_trace,
    "containment": suite_containment,
}


def run_suite(name: str, seed: int = 0) -> list[SuiteReport]:
    if name == "all":
        return [fn(seed=seed) for fn in SUITES.values()]
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; choose from {', '.join(SUITES)} or all")
    return [SUITES[name](seed=seed)]
