from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from kgraphkit.errors import (
    AssociativityViolation,
    BadColor,
    DanglingReference,
    DuplicateId,
    DuplicateSquare,
    InvalidSquare,
    MissingSquare,
)
from kgraphkit.skeleton import (
    BudgetConfig,
    build_kgraph,
    check_shape,
    compose,
    factorize,
    omega_graph,
    paths_of_degree,
    product_1graphs,
)
from kgraphkit.corpus import one_loop, two_cycle

from oracles import all_decompositions, block_sequences


def test_omega_2_counts():
    g = omega_graph(2, (1, 1))
    assert (len(g.vertices), len(g.edges), len(g.squares)) == (4, 4, 1)


def test_omega_3_has_six_squares():
    g = omega_graph(3, (1, 1, 1))
    assert (len(g.vertices), len(g.edges), len(g.squares)) == (8, 12, 6)


def test_shape_of_omega_lists_sources():
    sh = check_shape(omega_graph(2, (1, 1)))
    assert sh.locally_convex
    assert set(sh.sources) == {("(0,1)", 2), ("(1,0)", 1), ("(1,1)", 1), ("(1,1)", 2)}


def test_missing_square_named():
    g = omega_graph(2, (1, 1))
    with pytest.raises(MissingSquare):
        build_kgraph(2, g.vertices, g.edges, [])


def test_duplicate_square_named():
    g = omega_graph(2, (1, 1))
    with pytest.raises(DuplicateSquare):
        build_kgraph(2, g.vertices, g.edges, list(g.squares) * 2)


def test_duplicate_vertex_and_edge():
    with pytest.raises(DuplicateId):
        build_kgraph(1, ["v", "v"], [])
    with pytest.raises(DuplicateId):
        build_kgraph(1, ["v"], [("f", 1, "v", "v"), ("f", 1, "v", "v")])


def test_bad_colour_and_dangling():
    with pytest.raises(BadColor):
        build_kgraph(1, ["v"], [("f", 2, "v", "v")])
    with pytest.raises(DanglingReference):
        build_kgraph(1, ["v"], [("f", 1, "v", "w")])


def test_square_with_wrong_endpoints():
    edges = [("a", 1, "u", "v"), ("b", 2, "v", "w"), ("c", 2, "u", "x"), ("d", 1, "x", "u")]
    with pytest.raises(InvalidSquare):
        build_kgraph(2, ["u", "v", "w", "x"], edges, [("a", "b", "c", "d")])


def test_associativity_violation_detected():
    # one vertex, two loops per colour; f_x shifts the index of g, g_y shifts h,
    # so going round the cube the two ways gives h_{z+y+x} versus h_{z+y}
    edges = [(f"{c}{j}", i + 1, "v", "v") for i, c in enumerate("fgh") for j in (0, 1)]
    squares = []
    for x in (0, 1):
        for y in (0, 1):
            squares.append((f"f{x}", f"g{y}", f"g{(x + y) % 2}", f"f{x}"))
            squares.append((f"f{x}", f"h{y}", f"h{y}", f"f{x}"))
            squares.append((f"g{x}", f"h{y}", f"h{(x + y) % 2}", f"g{x}"))
    with pytest.raises(AssociativityViolation):
        build_kgraph(3, ["v"], edges, squares)


def test_product_of_loops_is_one_vertex_torus():
    g = product_1graphs([one_loop(), one_loop()])
    assert (len(g.vertices), len(g.edges), len(g.squares)) == (1, 2, 1)


def test_factorize_two_cycle():
    g = two_cycle()
    lam = g.path(["a", "b", "a"])
    head, tail = factorize(g, lam, (1,))
    assert str(head) == "a" and str(tail) == "b.a"


@pytest.mark.parametrize("n", [(0, 0), (1, 0), (0, 2), (2, 1), (2, 2)])
def test_path_counts_match_block_walk(n):
    for g in (omega_graph(2, (2, 2)), product_1graphs([two_cycle(), one_loop()])):
        for v in g.vertices:
            assert len(paths_of_degree(g, n, v)) == len(block_sequences(g, n, v))


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 2), st.integers(0, 2), st.integers(0, 2), st.integers(0, 2))
def test_factorization_unique_on_product(a, b, c, d):
    g = product_1graphs([two_cycle(), two_cycle()])
    n = (a + c, b + d)
    m = (a, b)
    for lam in paths_of_degree(g, n):
        head, tail = factorize(g, lam, m)
        assert compose(g, head, tail) == lam
        assert all_decompositions(g, lam, m) == [(head, tail)]


def test_budget_defaults():
    g = omega_graph(2, (1, 1))
    b = BudgetConfig.for_graph(g)
    assert b.degree_bound == (6, 6) and b.saturation_bound == (4, 4)
