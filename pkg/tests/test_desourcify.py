from __future__ import annotations

import itertools

import pytest

from kgraphkit.boundary import at_vertex, boundary_path, enumerate_boundary
from kgraphkit.corpus import edge_vw, isolated, one_loop
from kgraphkit.desourcify import (
    DesElement,
    DesVertex,
    canonicalize_element,
    des_compose,
    des_factorize,
    des_paths,
    des_window,
    embed,
    is_valid_element,
    is_valid_vertex,
    make_element,
    project_pi,
)
from kgraphkit.errors import NotComposable, OutOfRange
from kgraphkit.skeleton import omega_graph

from oracles import oracle_segment, sampled_agreement


def test_canonical_form_past_the_end():
    g = isolated(1)
    e = canonicalize_element(g, at_vertex(g, "v1"), (2,), (5,))
    assert e == DesElement(g.identity("v1"), (2,), (5,))


def test_canonical_form_on_infinite_path():
    g = one_loop()
    x = boundary_path(g, g.identity("v"), g.path(["f"]))
    e = canonicalize_element(g, x, (1,), (3,))
    assert str(e.core) == "f.f" and e.range_excess == (0,) and e.source_excess == (0,)


def test_projection_and_embedding():
    g = omega_graph(2, (1, 1))
    lam = g.paths_of_degree((1, 1), "(0,0)")[0]
    assert project_pi(g, embed(g, lam)) == lam
    assert project_pi(g, DesElement(g.identity("(1,1)"), (2, 0), (5, 1))) == g.identity("(1,1)")


def test_compose_along_isolated_vertex():
    g = isolated(1)
    a = make_element(g, g.identity("v1"), (0,), (2,))
    b = make_element(g, g.identity("v1"), (2,), (5,))
    assert des_compose(g, a, b) == DesElement(g.identity("v1"), (0,), (5,))
    with pytest.raises(NotComposable):
        des_compose(g, b, a)


def test_compose_edge_then_excess():
    g = edge_vw()
    e = embed(g, g.path(["e"]))
    tail = make_element(g, g.identity("w"), (0,), (1,))
    assert des_compose(g, e, tail) == DesElement(g.path(["e"]), (0,), (1,))


def test_invalid_triples_rejected():
    g = edge_vw()
    with pytest.raises(OutOfRange):
        make_element(g, g.identity("v"), (1,), (1,))  # v emits an edge, so no excess there


def test_window_of_isolated_vertex_is_a_line():
    win = des_window(isolated(1), (3,))
    assert len(win.graph.vertices) == 4 and len(win.graph.edges) == 3
    assert sorted(win.graph.vertices) == ["v1+(0)", "v1+(1)", "v1+(2)", "v1+(3)"]


def test_window_of_omega_is_bigger_grid():
    win = des_window(omega_graph(2, (1, 1)), (2, 2))
    ref = omega_graph(2, (3, 3))
    g = win.graph
    assert (len(g.vertices), len(g.edges), len(g.squares)) == (len(ref.vertices), len(ref.edges), len(ref.squares))


def test_source_free_graph_window_is_the_graph():
    g = one_loop()
    win = des_window(g, (3,))
    assert win.graph.vertices == ("v+(0)",) and len(win.graph.edges) == 1


def test_factorize_inverts_compose(graphs):
    for g in graphs.values():
        for v in g.vertices:
            for p in itertools.product(range(2), repeat=g.rank):
                if not is_valid_vertex(g, v, p):
                    continue
                for n in itertools.product(range(3), repeat=g.rank):
                    for e in des_paths(g, DesVertex(v, p), n):
                        assert is_valid_element(g, e)
                        for m in itertools.product(*(range(x + 1) for x in n)):
                            a, b = des_factorize(g, e, m)
                            assert a.degree == m
                            assert des_compose(g, a, b) == e


@pytest.mark.parametrize("name", ["edge_vw", "loop_loop", "omega2_11", "two_cycle"])
def test_canonicalization_matches_p_oracle(graphs, name):
    checked, bad = sampled_agreement(graphs[name], pairs=400)
    assert bad == 0


def test_core_is_oracle_segment(graphs):
    g = graphs["omega2_11"]
    for x in enumerate_boundary(g, "(0,0)", 3):
        for m in itertools.product(range(3), repeat=2):
            for n in itertools.product(*(range(a, 3) for a in m)):
                e = canonicalize_element(g, x, m, n)
                lo = tuple(min(a, d) for a, d in zip(m, x.degree))
                hi = tuple(min(a, d) for a, d in zip(n, x.degree))
                assert e.core == oracle_segment(g, x, lo, hi)
