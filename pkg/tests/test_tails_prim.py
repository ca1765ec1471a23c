from __future__ import annotations

import itertools
from fractions import Fraction

import pytest

from kgraphkit.corpus import corpus, isolated, loop_loop, one_loop
from kgraphkit.desourcify import des_window
from kgraphkit.ideals import enumerate_hs_lattice, pairwise_common_future
from kgraphkit.periodicity import Answer, equivalent_paths
from kgraphkit.skeleton import BudgetConfig, box, omega_graph
from kgraphkit.tails_prim import (
    aperiodic_tails,
    classify_prim,
    maximal_tails,
    prim_catalogue,
    prim_record,
    tail_graph,
)

CORPUS = corpus()


def _members(tails):
    return {t.members for t in tails}


def _is_tail_by_definition(g, T, bound):
    """Conditions (1)-(3) checked directly from paths, not through the lattice."""
    if not T:
        return False
    if any(e.source in T and e.range not in T for e in g.edges):
        return False
    for v in T:
        for n in _nonzero_box(bound):
            if not any(lam.source in T for lam in g.le_paths(v, n)):
                return False
    return pairwise_common_future(g, T)


def _nonzero_box(bound):
    return [n for n in box(bound) if any(n)]


def test_tails_of_fixtures():
    assert _members(maximal_tails(one_loop())) == {frozenset({"v"})}
    assert _members(maximal_tails(isolated(2))) == {frozenset({"v1"}), frozenset({"v2"})}
    # the edge has range v and source w, so {w} is the hereditary set and {v} its complement
    assert _members(maximal_tails(loop_loop())) == {frozenset({"v", "w"}), frozenset({"v"})}


@pytest.mark.parametrize("name", [n for n, g in CORPUS.items() if len(g.vertices) <= 6])
def test_tails_match_definition(name):
    g = CORPUS[name]
    budget = BudgetConfig.for_graph(g)
    brute = {frozenset(c) for r in range(1, len(g.vertices) + 1)
             for c in itertools.combinations(g.vertices, r)
             if _is_tail_by_definition(g, frozenset(c), budget.saturation_bound)}
    assert _members(maximal_tails(g, budget)) == brute


def test_aperiodic_tails():
    assert [v.status for _, v in aperiodic_tails(isolated(2))] == ["aperiodic", "aperiodic"]
    assert [v.status for _, v in aperiodic_tails(one_loop())] == ["periodic"]
    assert [v.status for _, v in aperiodic_tails(loop_loop())] == ["periodic", "periodic"]


def test_catalogue_examples():
    cat = prim_catalogue(isolated(2))
    assert len(cat) == 2 and all(r.character_rank == 0 and r.per.is_trivial for r in cat)
    cat = prim_catalogue(one_loop())
    assert len(cat) == 1 and cat[0].character_rank == 1 and cat[0].per.basis == ((1,),)
    cat = prim_catalogue(omega_graph(2, (1, 1)))
    assert len(cat) == 1 and cat[0].per.is_trivial and cat[0].point_count == 1


def test_classification_flags():
    g = isolated(2)
    assert all(f.maximal_ideal for f in classify_prim(g, prim_catalogue(g)))
    g = one_loop()
    (flag,) = classify_prim(g, prim_catalogue(g))
    assert flag.maximal_ideal and flag.gauge_invariant is False
    g = loop_loop()
    cat = prim_catalogue(g)
    flags = {rec.tail.members: f.maximal_ideal for rec, f in zip(cat, classify_prim(g, cat))}
    assert flags == {frozenset({"v", "w"}): False, frozenset({"v"}): True}


def test_sampled_relations_are_equivalent_pairs():
    for g in (one_loop(), loop_loop(), CORPUS["product005"]):
        budget = BudgetConfig.for_graph(g, degree=2)
        for rec in prim_catalogue(g, budget):
            sub = tail_graph(g, rec.tail)
            for rel in rec.relations:
                assert rel.mu.range in rec.h_per
                assert equivalent_paths(sub, rel.mu, rel.nu) is Answer.YES


def test_distinct_characters_change_coefficients():
    g = one_loop()
    budget = BudgetConfig.for_graph(g, degree=2)
    (tail,) = maximal_tails(g)
    a = prim_record(g, tail, budget, (Fraction(0),))
    b = prim_record(g, tail, budget, (Fraction(1, 3),))
    assert [(r.mu, r.nu) for r in a.relations] == [(r.mu, r.nu) for r in b.relations]
    assert [r.phase for r in a.relations] != [r.phase for r in b.relations]


@pytest.mark.parametrize("name", [n for n, g in CORPUS.items() if len(g.vertices) <= 4])
def test_tails_lift_to_window(name):
    g = CORPUS[name]
    win = des_window(g, (2,) * g.rank)
    lifted = _members(maximal_tails(win.graph))
    for t in maximal_tails(g):
        assert frozenset(vid for vid, dv in win.vertices.items() if dv.base in t.members) in lifted


def test_strongly_aperiodic_catalogue_is_all_rank_zero():
    for g in CORPUS.values():
        budget = BudgetConfig.for_graph(g, degree=3)
        lat = enumerate_hs_lattice(g, budget)
        cat = prim_catalogue(g, budget, lat)
        flags = classify_prim(g, cat, lat, budget)
        if flags and flags[0].strongly_aperiodic:
            assert len(cat) == len(maximal_tails(g, budget, lat))
            assert all(r.character_rank == 0 for r in cat)
