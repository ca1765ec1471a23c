"""Hereditary and saturated vertex sets and the lattice they form."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .errors import NotHereditary, PreconditionViolated, TooLarge
from .skeleton import BudgetConfig, KGraph, box, build_kgraph, le

LATTICE_CAP = 4096


def _budget(g: KGraph, budget: BudgetConfig | None) -> BudgetConfig:
    return budget if budget is not None else BudgetConfig.for_graph(g)


def hereditary_closure(g: KGraph, V) -> frozenset:
    return g.future(V)


def is_hereditary(g: KGraph, H) -> bool:
    H = frozenset(H)
    return all(e.source in H for e in g.edges if e.range in H)


def _reach_by_degree(g: KGraph, v: str, bound) -> dict:
    """m -> {s(lam) : lam in v Lambda^m} for every m <= bound."""
    k = g.rank
    em = g.edge_map
    reach = {}
    for m in box(bound):  # lexicographic order visits m - e_i before m
        if not any(m):
            reach[m] = frozenset([v])
            continue
        i = next(j for j in range(k) if m[j])
        prev = reach[tuple(x - (1 if j == i else 0) for j, x in enumerate(m))]
        reach[m] = frozenset(em[e].source for w in prev for e in g.edges_at(w, i + 1))
    return reach


def boundary_sources(g: KGraph, v: str, n) -> frozenset:
    """s(v Lambda^{<=n})."""
    n = tuple(n)
    reach = _reach_by_degree(g, v, n)
    return _filter_sources(g, reach, n)


def _filter_sources(g: KGraph, reach: dict, n) -> frozenset:
    out = set()
    for m in box(n):
        ws = reach[m]
        short = [i + 1 for i in range(g.rank) if m[i] < n[i]]
        out.update(w for w in ws if not any(g.has_color(w, i) for i in short))
    return frozenset(out)


def _saturation_tests(g: KGraph, bound) -> dict:
    """v -> minimal distinct sets s(v Lambda^{<=n}) over 0 < n <= bound."""
    key = ("sat", tuple(bound))
    if key in g._cache:
        return g._cache[key]
    bound = tuple(bound)
    k = g.rank
    tests = {}
    for v in g.vertices:
        # w in v Lambda^m counts towards every n >= m that agrees with m on
        # the colours w emits, so push each (m, w) forward to those n directly
        by_n = {}
        for m, ws in _reach_by_degree(g, v, bound).items():
            for w in ws:
                free = [i for i in range(k) if not g.has_color(w, i + 1)]
                for ext in box(tuple(bound[i] - m[i] for i in free)):
                    n = list(m)
                    for i, x in zip(free, ext):
                        n[i] += x
                    by_n.setdefault(tuple(n), set()).add(w)
        sets = {frozenset(by_n.get(n, ())) for n in box(bound) if any(n)}
        tests[v] = [s for s in sets if not any(t < s for t in sets)]
    g._cache[key] = tests
    return tests


def _saturate_unchecked(g: KGraph, H, bound) -> frozenset:
    tests = _saturation_tests(g, bound)
    cur = set(H)
    changed = True
    while changed:
        changed = False
        for v in g.vertices:
            if v not in cur and any(s <= cur for s in tests[v]):
                cur.add(v)
                changed = True
    return frozenset(cur)


def saturate(g: KGraph, H, budget: BudgetConfig | None = None) -> frozenset:
    H = frozenset(H)
    if not is_hereditary(g, H):
        raise NotHereditary(f"{sorted(H)} is not hereditary")
    return _saturate_unchecked(g, H, _budget(g, budget).saturation_bound)


def saturate_single_colour(g: KGraph, H) -> frozenset:
    """Add v whenever, for some colour i, v has colour-i edges and all their sources lie in the set."""
    cur = set(H)
    em = g.edge_map
    changed = True
    while changed:
        changed = False
        for v in g.vertices:
            if v in cur:
                continue
            for i in range(1, g.rank + 1):
                es = g.edges_at(v, i)
                if es and all(em[e].source in cur for e in es):
                    cur.add(v)
                    changed = True
                    break
    return frozenset(cur)


@dataclass(frozen=True)
class Classification:
    hereditary: bool
    saturated: bool


def classify_subset(g: KGraph, H, budget: BudgetConfig | None = None) -> Classification:
    H = frozenset(H)
    tests = _saturation_tests(g, _budget(g, budget).saturation_bound)
    saturated = not any(any(s <= H for s in tests[v]) for v in g.vertices if v not in H)
    return Classification(is_hereditary(g, H), saturated)


def _order_key(g: KGraph, H):
    pos = {v: i for i, v in enumerate(g.vertices)}
    return (len(H), sorted(pos[v] for v in H))


@dataclass(frozen=True)
class HSLattice:
    elements: tuple  # frozensets, ordered by size then vertex order
    bound: tuple

    def index(self, H) -> int:
        return self.elements.index(frozenset(H))

    def meet(self, i: int, j: int) -> int:
        return self.index(self.elements[i] & self.elements[j])

    def join(self, g: KGraph, i: int, j: int) -> int:
        return self.index(_saturate_unchecked(g, self.elements[i] | self.elements[j], self.bound))

    def tables(self, g: KGraph) -> tuple:
        n = len(self.elements)
        meets = [[self.meet(i, j) for j in range(n)] for i in range(n)]
        joins = [[self.join(g, i, j) for j in range(n)] for i in range(n)]
        return meets, joins

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)


def enumerate_hs_lattice(g: KGraph, budget: BudgetConfig | None = None, cap: int = LATTICE_CAP) -> HSLattice:
    """Every saturated hereditary set, grown from the empty set by joining T(v)'s."""
    bound = _budget(g, budget).saturation_bound
    futures = {v: g.future([v]) for v in g.vertices}
    start = frozenset()
    seen = {start}
    queue = deque([start])
    while queue:
        cur = queue.popleft()
        for v in g.vertices:
            if v in cur:
                continue
            nxt = _saturate_unchecked(g, cur | futures[v], bound)
            if nxt not in seen:
                seen.add(nxt)
                if len(seen) > cap:
                    raise TooLarge(f"more than {cap} saturated hereditary sets")
                queue.append(nxt)
    return HSLattice(tuple(sorted(seen, key=lambda H: _order_key(g, H))), tuple(bound))


def restrict_to(g: KGraph, keep) -> KGraph:
    """Vertices in ``keep`` with every edge and square lying entirely inside."""
    keep = frozenset(keep)
    edges = [e for e in g.edges if e.range in keep and e.source in keep]
    ids = {e.id for e in edges}
    squares = [s for s in g.squares if {s.f, s.g, s.g2, s.f2} <= ids]
    return build_kgraph(g.rank, [v for v in g.vertices if v in keep], edges, squares)


def subgraph(g: KGraph, H, mode: str = "remove", budget: BudgetConfig | None = None) -> KGraph:
    """``remove`` drops a saturated hereditary H; ``restrict`` keeps a set whose complement is one."""
    H = frozenset(H)
    if mode == "remove":
        gone, keep = H, g.vertex_set - H
    elif mode == "restrict":
        gone, keep = g.vertex_set - H, H
    else:
        raise ValueError(f"unknown mode {mode!r}")
    c = classify_subset(g, gone, budget)
    if not (c.hereditary and c.saturated):
        raise PreconditionViolated("removed vertex set must be hereditary and saturated")
    return restrict_to(g, keep)


def is_cofinal_graph(g: KGraph, budget: BudgetConfig | None = None) -> bool:
    return len(enumerate_hs_lattice(g, budget)) == 2


def pairwise_common_future(g: KGraph, T) -> bool:
    """Every two vertices of T have a common vertex in their futures."""
    T = list(T)
    fut = {v: g.future([v]) for v in T}
    return all(fut[v] & fut[w] for i, v in enumerate(T) for w in T[i + 1:])
