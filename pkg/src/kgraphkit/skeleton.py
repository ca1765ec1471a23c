"""Finite row-finite k-graphs given by a coloured 1-skeleton plus commuting squares.

Paths are stored in normal form: all colour-1 edges first, then colour 2, and so
on.  Reordering happens by adjacent swaps through the square table, which the
factorization property makes confluent.  Colours are 1-based, degree vectors are
plain tuples of ints, and a path reads from its range to its source
(``r(e1) <- s(e1) = r(e2) <- ...``).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import (
    AssociativityViolation,
    BadColor,
    BadDegree,
    DanglingReference,
    DuplicateId,
    DuplicateSquare,
    EmptyInput,
    InvalidSquare,
    MissingSquare,
    NotComposable,
    TooLarge,
    UnknownVertex,
)

Degree = tuple  # tuple[int, ...]; boundary degrees may hold math.inf

ASSOCIATIVITY_CAP = 10**6


# -- degree arithmetic ------------------------------------------------------

def zero(k: int) -> Degree:
    return (0,) * k


def unit(k: int, i: int) -> Degree:
    """The generator e_i (colours are 1-based)."""
    return tuple(1 if j == i - 1 else 0 for j in range(k))


def ones(k: int) -> Degree:
    return (1,) * k


def add(a, b) -> Degree:
    return tuple(x + y for x, y in zip(a, b))


def sub(a, b) -> Degree:
    return tuple(x - y for x, y in zip(a, b))


def meet(a, b) -> Degree:
    return tuple(min(x, y) for x, y in zip(a, b))


def join(a, b) -> Degree:
    return tuple(max(x, y) for x, y in zip(a, b))


def le(a, b) -> bool:
    return all(x <= y for x, y in zip(a, b))


def support(a) -> frozenset:
    """Colours (1-based) where ``a`` is nonzero."""
    return frozenset(i + 1 for i, x in enumerate(a) if x)


def box(bound) -> Iterable[Degree]:
    """All degrees n with 0 <= n <= bound, in lexicographic order."""
    return itertools.product(*(range(b + 1) for b in bound))


def fmt_degree(d) -> str:
    return "(" + ",".join("inf" if x == float("inf") else str(x) for x in d) + ")"


# -- data types -------------------------------------------------------------

@dataclass(frozen=True)
class Edge:
    id: str
    color: int
    range: str
    source: str


@dataclass(frozen=True)
class Square:
    """f g = g2 f2 with colour(f) = colour(f2) < colour(g) = colour(g2)."""

    f: str
    g: str
    g2: str
    f2: str


@dataclass(frozen=True)
class Path:
    range: str
    source: str
    degree: Degree
    edges: tuple = ()

    @property
    def is_vertex(self) -> bool:
        return not self.edges

    def __str__(self):
        if not self.edges:
            return f"[{self.range}]"
        return ".".join(self.edges)


@dataclass(frozen=True)
class Shape:
    sources: tuple
    locally_convex: bool


@dataclass(frozen=True)
class BudgetConfig:
    """Search horizons standing in for unbounded quantifiers."""

    degree_bound: Degree
    presentation_bound: int
    saturation_bound: Degree

    def __post_init__(self):
        if any(x < 1 for x in self.degree_bound) or any(x < 1 for x in self.saturation_bound):
            raise BadDegree("budget bounds must be strictly positive")
        if self.presentation_bound < 1:
            raise BadDegree("presentation bound must be positive")
        if len(self.degree_bound) != len(self.saturation_bound):
            raise BadDegree("budget vectors have different lengths")

    @classmethod
    def for_graph(cls, g: "KGraph", degree=None, presentation=None, saturation=None):
        k = g.rank
        n = max(len(g.vertices), 1)
        if isinstance(degree, int):
            degree = (degree,) * k
        if isinstance(saturation, int):
            saturation = (saturation,) * k
        return cls(
            degree_bound=tuple(degree) if degree is not None else (6,) * k,
            presentation_bound=presentation if presentation is not None else 8,
            saturation_bound=tuple(saturation) if saturation is not None else (n,) * k,
        )


@dataclass(frozen=True)
class KGraph:
    rank: int
    vertices: tuple
    edges: tuple  # of Edge
    squares: tuple  # of Square
    _cache: dict = field(default_factory=dict, compare=False, repr=False, hash=False)

    # -- indexes --------------------------------------------------------

    def _index(self, name, build):
        if name not in self._cache:
            self._cache[name] = build()
        return self._cache[name]

    @property
    def edge_map(self) -> dict:
        return self._index("edge_map", lambda: {e.id: e for e in self.edges})

    @property
    def vertex_set(self) -> frozenset:
        return self._index("vertex_set", lambda: frozenset(self.vertices))

    def _build_in(self):
        table = {v: [[] for _ in range(self.rank)] for v in self.vertices}
        for e in self.edges:
            table[e.range][e.color - 1].append(e.id)
        return {v: tuple(map(tuple, rows)) for v, rows in table.items()}

    def edges_at(self, v: str, color: int) -> tuple:
        """Ids of colour-``color`` edges with range ``v`` (the set vΛ^{e_i})."""
        return self._index("in", self._build_in)[v][color - 1]

    def has_color(self, v: str, color: int) -> bool:
        return bool(self.edges_at(v, color))

    @property
    def forward(self) -> dict:
        """(f, g) -> (g2, f2) for colour(f) < colour(g)."""
        return self._index("fwd", lambda: {(s.f, s.g): (s.g2, s.f2) for s in self.squares})

    @property
    def backward(self) -> dict:
        """(g2, f2) -> (f, g) for colour(g2) > colour(f2)."""
        return self._index("bwd", lambda: {(s.g2, s.f2): (s.f, s.g) for s in self.squares})

    def successors(self, v: str) -> frozenset:
        """Sources of the edges with range ``v``."""
        def build():
            out = {u: set() for u in self.vertices}
            for e in self.edges:
                out[e.range].add(e.source)
            return {u: frozenset(s) for u, s in out.items()}
        return self._index("succ", build)[v]

    def future(self, start) -> frozenset:
        """Every vertex reachable from ``start`` by following edges range to source."""
        seen = set(start)
        stack = list(seen)
        while stack:
            for w in self.successors(stack.pop()):
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return frozenset(seen)

    def color(self, edge_id: str) -> int:
        return self.edge_map[edge_id].color

    # -- paths ----------------------------------------------------------

    def identity(self, v: str) -> Path:
        if v not in self.vertex_set:
            raise UnknownVertex(v)
        return Path(v, v, zero(self.rank))

    def _swap(self, a: str, b: str) -> tuple:
        ca, cb = self.color(a), self.color(b)
        if ca < cb:
            return self.forward[(a, b)]
        return self.backward[(a, b)]

    def normal_form(self, edge_ids: Sequence[str]) -> tuple:
        seq = list(edge_ids)
        colors = [self.color(e) for e in seq]
        changed = True
        while changed:
            changed = False
            for i in range(len(seq) - 1):
                if colors[i] > colors[i + 1]:
                    seq[i], seq[i + 1] = self.backward[(seq[i], seq[i + 1])]
                    colors[i], colors[i + 1] = colors[i + 1], colors[i]
                    changed = True
        return tuple(seq)

    def path(self, edge_ids: Sequence[str], at: str | None = None) -> Path:
        """Path from a composable edge sequence (any colour order)."""
        edge_ids = tuple(edge_ids)
        if not edge_ids:
            if at is None:
                raise NotComposable("an empty edge list needs a vertex")
            return self.identity(at)
        em = self.edge_map
        for e in edge_ids:
            if e not in em:
                raise DanglingReference(e)
        for a, b in zip(edge_ids, edge_ids[1:]):
            if em[a].source != em[b].range:
                raise NotComposable(f"{a} then {b}")
        deg = [0] * self.rank
        for e in edge_ids:
            deg[em[e].color - 1] += 1
        return Path(em[edge_ids[0]].range, em[edge_ids[-1]].source, tuple(deg),
                    self.normal_form(edge_ids))

    def compose(self, mu: Path, nu: Path) -> Path:
        if mu.source != nu.range:
            raise NotComposable(f"s({mu}) = {mu.source} but r({nu}) = {nu.range}")
        if not mu.edges:
            return nu
        if not nu.edges:
            return mu
        return Path(mu.range, nu.source, add(mu.degree, nu.degree),
                    self.normal_form(mu.edges + nu.edges))

    def factorize(self, lam: Path, m: Degree) -> tuple:
        """The unique (mu, nu) with d(mu) = m and mu nu = lam."""
        m = tuple(m)
        if len(m) != self.rank or not le(zero(self.rank), m) or not le(m, lam.degree):
            raise BadDegree(f"{m} is not below {lam.degree}")
        rest = sub(lam.degree, m)
        target = [c for c in range(1, self.rank + 1) for _ in range(m[c - 1])]
        target += [c for c in range(1, self.rank + 1) for _ in range(rest[c - 1])]
        seq = list(lam.edges)
        colors = [self.color(e) for e in seq]
        for p, want in enumerate(target):
            j = p
            while colors[j] != want:
                j += 1
            while j > p:
                seq[j - 1], seq[j] = self._swap(seq[j - 1], seq[j])
                colors[j - 1], colors[j] = colors[j], colors[j - 1]
                j -= 1
        cut = sum(m)
        head, tail = seq[:cut], seq[cut:]
        em = self.edge_map
        mid = em[head[-1]].source if head else lam.range
        mu = Path(lam.range, mid, m, self.normal_form(head))
        nu = Path(mid, lam.source, rest, self.normal_form(tail))
        return mu, nu

    def segment(self, lam: Path, p: Degree, q: Degree) -> Path:
        """lam(p, q) for p <= q <= d(lam)."""
        if not le(p, q):
            raise BadDegree(f"{p} is not below {q}")
        head, _ = self.factorize(lam, q)
        return self.factorize(head, p)[1]

    def paths_of_degree(self, n: Degree, v: str | None = None) -> list:
        n = tuple(n)
        if len(n) != self.rank:
            raise BadDegree(f"degree {n} has wrong length")
        if v is None:
            return [p for u in self.vertices for p in self.paths_of_degree(n, u)]
        key = ("paths", n, v)
        if key in self._cache:
            return self._cache[key]
        if v not in self.vertex_set:
            raise UnknownVertex(v)
        pattern = [c for c in range(1, self.rank + 1) for _ in range(n[c - 1])]
        em = self.edge_map
        out = []

        def walk(at, i, acc):
            if i == len(pattern):
                out.append(Path(v, at, n, tuple(acc)))
                return
            for e in self.edges_at(at, pattern[i]):
                acc.append(e)
                walk(em[e].source, i + 1, acc)
                acc.pop()

        walk(v, 0, [])
        self._cache[key] = out
        return out

    def le_paths(self, v: str, n: Degree) -> list:
        """vΛ^{<=n}: paths that stop short in colour i only at sources of colour i."""
        if v not in self.vertex_set:
            raise UnknownVertex(v)
        n = tuple(n)
        key = ("le", n, v)
        if key in self._cache:
            return self._cache[key]
        out = []
        for m in box(n):
            for lam in self.paths_of_degree(m, v):
                if all(m[i] == n[i] or not self.has_color(lam.source, i + 1)
                       for i in range(self.rank)):
                    out.append(lam)
        self._cache[key] = out
        return out

    def shape(self) -> Shape:
        sources = tuple((v, i) for v in self.vertices for i in range(1, self.rank + 1)
                        if not self.has_color(v, i))
        em = self.edge_map
        convex = True
        for v in self.vertices:
            for i in range(1, self.rank + 1):
                for j in range(1, self.rank + 1):
                    if i == j or not self.has_color(v, j):
                        continue
                    if any(not self.has_color(em[e].source, j) for e in self.edges_at(v, i)):
                        convex = False
        return Shape(sources, convex)


# -- construction and validation ------------------------------------------

def _check_id(kind, ident):
    if not isinstance(ident, str) or not ident or any(ch.isspace() for ch in ident) \
            or "=" in ident or ident.startswith("#"):
        raise DuplicateId(f"bad {kind} id {ident!r}")


def build_kgraph(rank: int, vertices, edges, squares=(), assoc_cap: int = ASSOCIATIVITY_CAP) -> KGraph:
    """Validate raw vertex, edge and square lists and return a KGraph.

    ``edges`` holds Edge objects or (id, color, range, source) tuples;
    ``squares`` holds Square objects or (f, g, g2, f2) tuples.
    """
    if rank < 1:
        raise BadColor("rank must be positive")
    vertices = tuple(vertices)
    edges = tuple(e if isinstance(e, Edge) else Edge(*e) for e in edges)
    squares = tuple(s if isinstance(s, Square) else Square(*s) for s in squares)

    seen = set()
    for v in vertices:
        _check_id("vertex", v)
        if v in seen:
            raise DuplicateId(f"vertex {v}")
        seen.add(v)
    em = {}
    for e in edges:
        _check_id("edge", e.id)
        if e.id in em or e.id in seen:
            raise DuplicateId(f"edge {e.id}")
        if not 1 <= e.color <= rank:
            raise BadColor(f"edge {e.id} has colour {e.color} outside 1..{rank}")
        for end in (e.range, e.source):
            if end not in seen:
                raise DanglingReference(f"edge {e.id} references unknown vertex {end}")
        em[e.id] = e

    left, right = {}, {}
    for s in squares:
        for x in (s.f, s.g, s.g2, s.f2):
            if x not in em:
                raise DanglingReference(f"square references unknown edge {x}")
        f, g, g2, f2 = em[s.f], em[s.g], em[s.g2], em[s.f2]
        if not (f.color == f2.color < g.color == g2.color):
            raise InvalidSquare(f"square {s} has inconsistent colours")
        if not (f.source == g.range and g2.source == f2.range
                and f.range == g2.range and g.source == f2.source):
            raise InvalidSquare(f"square {s} does not commute on vertices")
        if (s.f, s.g) in left:
            raise DuplicateSquare(f"pair {s.f} {s.g} appears in two squares")
        if (s.g2, s.f2) in right:
            raise DuplicateSquare(f"pair {s.g2} {s.f2} appears in two squares")
        left[(s.f, s.g)] = s
        right[(s.g2, s.f2)] = s

    for a in edges:
        for b in edges:
            if a.source != b.range or a.color == b.color:
                continue
            if a.color < b.color and (a.id, b.id) not in left:
                raise MissingSquare(f"no square for {a.id} {b.id}")
            if a.color > b.color and (a.id, b.id) not in right:
                raise MissingSquare(f"no square for {a.id} {b.id}")

    g = KGraph(rank, vertices, edges, squares)
    if rank >= 3:
        _check_associativity(g, assoc_cap)
    return g


def _check_associativity(g: KGraph, cap: int):
    """Both reduced words sorting a descending colour triple must agree."""
    em = g.edge_map
    count = 0
    for a in g.edges:
        for b_id in (x for c in range(1, a.color) for x in g.edges_at(a.source, c)):
            b = em[b_id]
            for c_id in (x for c in range(1, b.color) for x in g.edges_at(b.source, c)):
                count += 1
                if count > cap:
                    raise TooLarge(f"more than {cap} edge triples to check")
                # s1 s2 s1 versus s2 s1 s2
                x, y, z = a.id, b_id, c_id
                p, q = g._swap(x, y); q, r = g._swap(q, z); p, q = g._swap(p, q)
                u, w = g._swap(y, z); t, u = g._swap(x, u); u, w = g._swap(u, w)
                if (p, q, r) != (t, u, w):
                    raise AssociativityViolation(
                        f"triple {x} {y} {c_id} sorts to {(p, q, r)} and {(t, u, w)}")


# -- module-level operations ------------------------------------------------

def paths_of_degree(g: KGraph, n: Degree, v: str | None = None) -> list:
    return g.paths_of_degree(n, v)


def compose(g: KGraph, mu: Path, nu: Path) -> Path:
    return g.compose(mu, nu)


def factorize(g: KGraph, lam: Path, m: Degree) -> tuple:
    return g.factorize(lam, m)


def le_paths(g: KGraph, v: str, n: Degree) -> list:
    return g.le_paths(v, n)


def check_shape(g: KGraph) -> Shape:
    return g.shape()


def vertex_name(p) -> str:
    return "(" + ",".join(str(x) for x in p) + ")"


def omega_graph(k: int, m: Degree) -> KGraph:
    """Ω_{k,m}: vertices p <= m, one colour-i edge from p+e_i to p."""
    if k < 1:
        raise BadColor("rank must be positive")
    m = tuple(m)
    if len(m) != k:
        raise BadDegree("degree vector length differs from rank")
    pts = list(box(m))
    verts = [vertex_name(p) for p in pts]
    edges, squares = [], []

    def eid(p, i):
        return f"e{i}@{vertex_name(p)}"

    for p in pts:
        for i in range(1, k + 1):
            q = add(p, unit(k, i))
            if le(q, m):
                edges.append(Edge(eid(p, i), i, vertex_name(p), vertex_name(q)))
    for p in pts:
        for i in range(1, k + 1):
            for j in range(i + 1, k + 1):
                pi, pj = add(p, unit(k, i)), add(p, unit(k, j))
                if le(add(pi, unit(k, j)), m):
                    squares.append(Square(eid(p, i), eid(pi, j), eid(p, j), eid(pj, i)))
    return build_kgraph(k, verts, edges, squares)


def product_1graphs(graphs: Sequence[KGraph]) -> KGraph:
    """Cartesian product of 1-graphs; colour i moves only the i-th coordinate."""
    graphs = list(graphs)
    if not graphs:
        raise EmptyInput("need at least one 1-graph")
    for h in graphs:
        if h.rank != 1:
            raise BadColor("product_1graphs takes rank-1 graphs only")
    if len(graphs) == 1:
        return graphs[0]
    k = len(graphs)
    coords = list(itertools.product(*(h.vertices for h in graphs)))

    def vname(c):
        return "(" + ",".join(c) + ")"

    def eid(base, c, i):
        return f"{base}@{vname(c)}" if distinct else f"{base}/{i}@{vname(c)}"

    names = [e.id for h in graphs for e in h.edges]
    distinct = len(names) == len(set(names))

    edges = []
    for c in coords:
        for i, h in enumerate(graphs):
            for e_id in h.edges_at(c[i], 1):
                e = h.edge_map[e_id]
                src = c[:i] + (e.source,) + c[i + 1:]
                edges.append(Edge(eid(e.id, c, i + 1), i + 1, vname(c), vname(src)))
    squares = []
    for c in coords:
        for i in range(k):
            for j in range(i + 1, k):
                for a_id in graphs[i].edges_at(c[i], 1):
                    a = graphs[i].edge_map[a_id]
                    mid = c[:i] + (a.source,) + c[i + 1:]
                    for b_id in graphs[j].edges_at(c[j], 1):
                        b = graphs[j].edge_map[b_id]
                        mid2 = c[:j] + (b.source,) + c[j + 1:]
                        squares.append(Square(eid(a.id, c, i + 1), eid(b.id, mid, j + 1),
                                              eid(b.id, c, j + 1), eid(a.id, mid2, i + 1)))
    return build_kgraph(k, [vname(c) for c in coords], edges, squares)
