"""Named fixture graphs and a seeded generator of small random 2-graphs."""

from __future__ import annotations

import random
from dataclasses import dataclass

from .skeleton import Edge, KGraph, Square, build_kgraph, omega_graph, product_1graphs


def one_loop() -> KGraph:
    return build_kgraph(1, ["v"], [("f", 1, "v", "v")])


def two_loop_vertex() -> KGraph:
    return build_kgraph(1, ["v"], [("f", 1, "v", "v"), ("g", 1, "v", "v")])


def two_cycle() -> KGraph:
    return build_kgraph(1, ["u", "w"], [("a", 1, "u", "w"), ("b", 1, "w", "u")])


def edge_vw() -> KGraph:
    """A single edge with range v and source w."""
    return build_kgraph(1, ["v", "w"], [("e", 1, "v", "w")])


def loop_loop() -> KGraph:
    """Loops at v and w joined by an edge with range v and source w."""
    return build_kgraph(1, ["v", "w"], [("f", 1, "v", "v"), ("e", 1, "v", "w"), ("h", 1, "w", "w")])


def isolated(n: int) -> KGraph:
    return build_kgraph(1, [f"v{i}" for i in range(1, n + 1)], [])


FIXTURES = {
    "one_loop": one_loop,
    "two_loop_vertex": two_loop_vertex,
    "two_cycle": two_cycle,
    "edge_vw": edge_vw,
    "loop_loop": loop_loop,
    "isolated2": lambda: isolated(2),
    "isolated3": lambda: isolated(3),
    "isolated4": lambda: isolated(4),
    "omega1_2": lambda: omega_graph(1, (2,)),
    "omega2_11": lambda: omega_graph(2, (1, 1)),
    "omega3_111": lambda: omega_graph(3, (1, 1, 1)),
}


def fixtures() -> dict:
    return {name: make() for name, make in FIXTURES.items()}


@dataclass
class CorpusConfig:
    seed: int = 20240601
    count: int = 50
    max_vertices: int = 6
    edge_density: float = 0.35


def random_1graph(rng: random.Random, n: int, density: float, tag: str) -> KGraph:
    verts = [f"{tag}{i}" for i in range(n)]
    edges = []
    for r in verts:
        for s in verts:
            if rng.random() < density:
                edges.append(Edge(f"{tag}e{len(edges)}", 1, r, s))
    return build_kgraph(1, verts, edges)


def _paths12(edges1, edges2):
    """Colour-1 edge followed by a colour-2 edge, keyed by (range, source)."""
    out = {}
    for f in edges1:
        for g in edges2:
            if f.source == g.range:
                out.setdefault((f.range, g.source), []).append((f.id, g.id))
    return out


def _paths21(edges1, edges2):
    out = {}
    for g in edges2:
        for f in edges1:
            if g.source == f.range:
                out.setdefault((g.range, f.source), []).append((g.id, f.id))
    return out


def random_square_completed(rng: random.Random, n: int, density: float, tries: int = 2000) -> KGraph | None:
    """Two random colour layers whose path counts agree, glued by a random bijection.

    For rank 2 any such choice of squares is a 2-graph: associativity only
    constrains triples of distinct colours.
    """
    verts = [f"x{i}" for i in range(n)]
    for _ in range(tries):
        e1, e2 = [], []
        for r in verts:
            for s in verts:
                if rng.random() < density:
                    e1.append(Edge(f"r{len(e1)}", 1, r, s))
                if rng.random() < density:
                    e2.append(Edge(f"b{len(e2)}", 2, r, s))
        p12, p21 = _paths12(e1, e2), _paths21(e1, e2)
        if not p12 or {k: len(v) for k, v in p12.items()} != {k: len(v) for k, v in p21.items()}:
            continue
        squares = []
        for key in sorted(p12):
            left, right = p12[key], list(p21[key])
            rng.shuffle(right)
            for (f, g), (g2, f2) in zip(left, right):
                squares.append(Square(f, g, g2, f2))
        g = build_kgraph(2, verts, e1 + e2, squares)
        if g.shape().locally_convex:
            return g
    return None


def random_corpus(config: CorpusConfig | None = None) -> dict:
    """Deterministic list of random 2-graphs: half products of 1-graphs, half square-completed skeletons."""
    config = config or CorpusConfig()
    rng = random.Random(config.seed)
    out = {}
    i = 0
    while len(out) < config.count:
        i += 1
        if i % 2:
            a = rng.randint(1, 3)
            b = rng.randint(1, max(1, config.max_vertices // a))
            g = product_1graphs([random_1graph(rng, a, config.edge_density, "p"),
                                 random_1graph(rng, b, config.edge_density, "q")])
            if not g.shape().locally_convex:
                continue
            out[f"product{i:03d}"] = g
        else:
            g = random_square_completed(rng, rng.randint(1, min(4, config.max_vertices)), config.edge_density)
            if g is not None:
                out[f"skeleton{i:03d}"] = g
    return out


def corpus(config: CorpusConfig | None = None) -> dict:
    return {**fixtures(), **random_corpus(config)}
