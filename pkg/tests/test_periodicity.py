from __future__ import annotations

import itertools

import pytest

from kgraphkit.boundary import boundary_equal, prepend, validate_boundary
from kgraphkit.corpus import corpus, fixtures, isolated, one_loop, two_cycle, two_loop_vertex
from kgraphkit.desourcify import embed, make_element
from kgraphkit.ideals import restrict_to
from kgraphkit.intgroup import IntSubgroup
from kgraphkit.periodicity import (
    Answer,
    aperiodicity,
    decide_equivalence,
    equivalent_paths,
    h_per,
    h_per_des,
    per_group,
    per_group_des,
    refuting_path,
    transfer_check,
)
from kgraphkit.skeleton import BudgetConfig, build_kgraph, product_1graphs

from oracles import brute_equivalent, brute_per

CORPUS = corpus()


def two_loops_into_loop():
    """Two loops at v, an edge with range v and source w, one loop at w."""
    return build_kgraph(1, ["v", "w"], [("f", 1, "v", "v"), ("g", 1, "v", "v"),
                                        ("e", 1, "v", "w"), ("h", 1, "w", "w")])


def loop_with_source():
    """Loop at v and an edge into v from the source u."""
    return build_kgraph(1, ["u", "v"], [("f", 1, "v", "v"), ("e", 1, "v", "u")])


def test_basic_equivalences():
    g = one_loop()
    f = g.path(["f"])
    assert equivalent_paths(g, f, f) is Answer.YES
    assert equivalent_paths(g, f, g.identity("v")) is Answer.YES
    h = two_loop_vertex()
    assert equivalent_paths(h, h.path(["f"]), h.path(["g"])) is Answer.NO
    assert str(refuting_path(h, h.path(["f"]), h.path(["g"]))) == "[v](f)^inf"


def _short_paths(g, v, top=2):
    degs = itertools.product(range(top + 1), repeat=g.rank)
    return [p for d in degs for p in g.paths_of_degree(d, v)]


@pytest.mark.parametrize("name", list(fixtures()) + [n for n in CORPUS if n.startswith("skeleton")][:8])
def test_decider_against_boundary_enumeration(name):
    g = CORPUS[name]
    top = 2 if g.rank == 1 or len(g.edges) < 6 else 1
    for v in g.vertices:
        for mu, nu in itertools.combinations(_short_paths(g, v, top), 2):
            if mu.source != nu.source:
                continue
            ans = decide_equivalence(g, mu, nu).answer
            assert ans is not Answer.UNKNOWN
            brute = brute_equivalent(g, mu, nu, size=3)
            if ans is Answer.YES:
                assert brute
            else:
                x = refuting_path(g, mu, nu)
                assert validate_boundary(g, x)
                assert not boundary_equal(g, prepend(g, mu, x), prepend(g, nu, x))


def test_known_per_values():
    b = BudgetConfig(degree_bound=(4,), presentation_bound=8, saturation_bound=(2,))
    assert per_group(one_loop(), b).group == IntSubgroup.generated_by(1, [(1,)])
    assert per_group(two_cycle(), b).group == IntSubgroup.generated_by(1, [(2,)])
    assert per_group(two_loop_vertex(), b).group.is_trivial
    torus = product_1graphs([one_loop(), one_loop()])
    assert per_group(torus).group == IntSubgroup.generated_by(2, [(1, 0), (0, 1)])


@pytest.mark.parametrize("name", ["one_loop", "two_cycle", "two_loop_vertex", "loop_loop", "edge_vw"])
def test_per_matches_brute_force(name):
    g = CORPUS[name]
    b = BudgetConfig.for_graph(g, degree=4)
    assert per_group(g, b).group == brute_per(g, max_len=3, size=3)


def test_verdicts():
    assert aperiodicity(one_loop()).status == "periodic"
    assert aperiodicity(two_loop_vertex()).status == "aperiodic"
    assert aperiodicity(product_1graphs([one_loop(), one_loop()])).status == "periodic"
    assert aperiodicity(isolated(2)).status == "aperiodic"


def test_h_per_examples():
    assert h_per(one_loop(), per_group(one_loop()).group).members == {"v"}
    g = two_loops_into_loop()
    pg = per_group(g)
    assert pg.group == IntSubgroup.generated_by(1, [(1,)])
    assert h_per(g, pg.group).members == {"w"}
    w_only = restrict_to(g, {"w"})
    assert h_per(w_only, per_group(w_only).group).members == {"w"}
    ap = two_loop_vertex()
    assert h_per(ap, IntSubgroup.trivial(1)).members == ap.vertex_set


@pytest.mark.parametrize("name", list(CORPUS))
def test_desourcified_route_agrees(name):
    g = CORPUS[name]
    b = BudgetConfig.for_graph(g, degree=3)
    pg, pd = per_group(g, b), per_group_des(g, b)
    assert pg.group == pd.group
    assert h_per(g, pg.group, b).members == h_per_des(g, pd.group, b).members


def test_transfer_examples():
    g = loop_with_source()
    rep = transfer_check(g, embed(g, g.path(["f"])), embed(g, g.identity("v")))
    assert rep.agree and rep.in_desourcification is Answer.NO
    iso = isolated(1)
    e = make_element(iso, iso.identity("v1"), (0,), (1,))
    assert transfer_check(iso, e, e).agree
    h = one_loop()
    rep = transfer_check(h, embed(h, h.path(["f"])), embed(h, h.identity("v")))
    assert rep.agree and rep.via_projection is Answer.YES
