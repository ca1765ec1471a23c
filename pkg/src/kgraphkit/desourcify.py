"""The desourcification: a source-free k-graph containing a locally convex one.

An element [x; (m, n)] is stored as the triple (core, a, b) where
core = x(m ^ d(x), n ^ d(x)), a = m - m ^ d(x) and b = n - n ^ d(x).  A triple
arises from some witness exactly when

* a <= b,
* a_i > 0 forces d(core)_i = 0, and
* b_i > 0 forces s(core) to have no colour-i edge,

since then x = core . y for any boundary path y from s(core) realises it with
(m, n) = (a, d(core) + b).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .boundary import BoundaryPath, segment as bsegment
from .errors import BadDegree, NotComposable, OutOfRange
from .skeleton import (
    Edge, KGraph, Path, Square, add, box, build_kgraph, fmt_degree, le, meet, sub, unit, zero,
)


@dataclass(frozen=True)
class DesVertex:
    base: str
    excess: tuple

    @property
    def label(self) -> str:
        return f"{self.base}+{fmt_degree(self.excess)}"


@dataclass(frozen=True)
class DesElement:
    core: Path
    range_excess: tuple
    source_excess: tuple

    @property
    def degree(self) -> tuple:
        return add(self.core.degree, sub(self.source_excess, self.range_excess))

    @property
    def range(self) -> DesVertex:
        return DesVertex(self.core.range, self.range_excess)

    @property
    def source(self) -> DesVertex:
        return DesVertex(self.core.source, self.source_excess)

    @property
    def label(self) -> str:
        return f"{self.core}|{fmt_degree(self.range_excess)}|{fmt_degree(self.source_excess)}"


def is_valid_vertex(g: KGraph, w: str, p) -> bool:
    return all(x == 0 or not g.has_color(w, i + 1) for i, x in enumerate(p))


def is_valid_element(g: KGraph, e: DesElement) -> bool:
    a, b, d = e.range_excess, e.source_excess, e.core.degree
    if any(x < 0 for x in a) or not le(a, b):
        return False
    if any(ai > 0 and di != 0 for ai, di in zip(a, d)):
        return False
    return is_valid_vertex(g, e.core.source, b)


def make_element(g: KGraph, core: Path, a, b) -> DesElement:
    e = DesElement(core, tuple(a), tuple(b))
    if not is_valid_element(g, e):
        raise OutOfRange(f"({core}, {a}, {b}) is not a desourcified element")
    return e


def des_vertex(g: KGraph, w: str, p) -> DesElement:
    return make_element(g, g.identity(w), p, p)


def canonicalize_element(g: KGraph, x: BoundaryPath, m, n) -> DesElement:
    m, n = tuple(m), tuple(n)
    if not le(m, n) or any(v < 0 for v in m):
        raise OutOfRange(f"need 0 <= m <= n, got {m}, {n}")
    d = x.degree
    lo = tuple(int(v) for v in meet(m, d))
    hi = tuple(int(v) for v in meet(n, d))
    core = bsegment(g, x, lo, hi)
    return DesElement(core, sub(m, lo), sub(n, hi))


def project_pi(g: KGraph, e: DesElement) -> Path:
    return e.core


def embed(g: KGraph, lam: Path) -> DesElement:
    return DesElement(lam, zero(g.rank), zero(g.rank))


def des_compose(g: KGraph, e1: DesElement, e2: DesElement) -> DesElement:
    if e1.source != e2.range:
        raise NotComposable(f"{e1.source.label} differs from {e2.range.label}")
    return DesElement(g.compose(e1.core, e2.core), e1.range_excess, e2.source_excess)


def des_factorize(g: KGraph, e: DesElement, m) -> tuple:
    """The unique (e1, e2) with d(e1) = m and e1 e2 = e."""
    m = tuple(m)
    if any(v < 0 for v in m) or not le(m, e.degree):
        raise BadDegree(f"{m} is not below {e.degree}")
    a, b, core = e.range_excess, e.source_excess, e.core
    # along supp(b) the witness stops where the core does; elsewhere it runs on
    virtual = tuple(dc if bi else math.inf for dc, bi in zip(core.degree, b))
    q = tuple(int(v) for v in meet(add(a, m), virtual))
    head, tail = g.factorize(core, q)
    mid = sub(add(a, m), q)
    return DesElement(head, a, mid), DesElement(tail, mid, b)


@dataclass(frozen=True)
class DesWindow:
    """Full subgraph of the desourcification on vertices with excess <= bound."""

    graph: KGraph
    bound: tuple
    vertices: dict  # window vertex id -> DesVertex
    elements: dict  # window edge id -> DesElement
    interior: frozenset  # ids with excess strictly below the bound everywhere

    def vertex_id(self, v: DesVertex) -> str:
        return v.label


def _edges_from(g: KGraph, w: str, p, bound) -> list:
    out = []
    k = g.rank
    for i in range(1, k + 1):
        if g.has_color(w, i):
            for f in g.edges_at(w, i):
                src = g.edge_map[f].source
                if is_valid_vertex(g, src, p):
                    out.append(DesElement(g.path([f]), p, p))
        else:
            q = add(p, unit(k, i))
            if le(q, bound):
                out.append(DesElement(g.identity(w), p, q))
    return out


def des_window(g: KGraph, N) -> DesWindow:
    N = tuple(N)
    if len(N) != g.rank or any(v < 1 for v in N):
        raise BadDegree("window bound must be at least 1 in every colour")
    verts = {}
    for w in g.vertices:
        for p in box(N):
            if is_valid_vertex(g, w, p):
                dv = DesVertex(w, p)
                verts[dv.label] = dv
    elements = {}
    for dv in verts.values():
        for e in _edges_from(g, dv.base, dv.excess, N):
            elements[e.label] = e
    edges = [Edge(eid, _colour(e), e.range.label, e.source.label) for eid, e in elements.items()]
    by_range = {}
    for eid, e in elements.items():
        by_range.setdefault(e.range.label, []).append(eid)
    squares = []
    for eid, e in elements.items():
        ci = _colour(e)
        for fid in by_range.get(e.source.label, []):
            f = elements[fid]
            cj = _colour(f)
            if ci >= cj:
                continue
            comp = des_compose(g, e, f)
            g2, f2 = des_factorize(g, comp, unit(g.rank, cj))
            squares.append(Square(eid, fid, g2.label, f2.label))
    graph = build_kgraph(g.rank, list(verts), edges, squares)
    interior = frozenset(vid for vid, dv in verts.items()
                         if all(x < n for x, n in zip(dv.excess, N)))
    return DesWindow(graph, N, verts, elements, interior)


def _colour(e: DesElement) -> int:
    return e.degree.index(1) + 1


def des_edges_from(g: KGraph, v: DesVertex, colour: int) -> list:
    """Degree-e_colour elements with range v."""
    w, p = v.base, v.excess
    if not g.has_color(w, colour):
        return [DesElement(g.identity(w), p, add(p, unit(g.rank, colour)))]
    return [DesElement(g.path([f]), p, p) for f in g.edges_at(w, colour)
            if is_valid_vertex(g, g.edge_map[f].source, p)]


def des_paths(g: KGraph, v: DesVertex, n) -> list:
    """All elements of degree n with range v."""
    n = tuple(n)
    key = ("des_paths", v, n)
    if key in g._cache:
        return g._cache[key]
    out = [DesElement(g.identity(v.base), v.excess, v.excess)]
    for i in range(1, g.rank + 1):
        for _ in range(n[i - 1]):
            out = [des_compose(g, e, f) for e in out for f in des_edges_from(g, e.source, i)]
    g._cache[key] = out
    return out
