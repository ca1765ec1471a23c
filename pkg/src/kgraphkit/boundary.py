"""Ultimately periodic boundary paths ``x = prefix . cycle . cycle . ...``.

A presentation (P, C) has d(x)_i = d(P)_i where C has no colour-i edges and
d(x)_i = inf otherwise.  Two facts drive everything here:

* for every G >= d(P) the tail from G is invariant under shifting by d(C), so
  x = x(0, G) . x(G, G + d(C))^inf is another presentation of the same x;
* shifting by n therefore has the presentation (x(n, G), x(G, G + d(C)))
  with G = d(P) v n, whose prefix degree never exceeds d(P).

The second fact makes the set of shifts of x along the periodic colours finite,
which turns the boundary condition into a finite check.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass

from .errors import MalformedPresentation, NotComposable, OutOfRange, UnknownVertex
from .skeleton import KGraph, Path, add, box, join, le, sub, zero

INF = math.inf


@dataclass(frozen=True)
class BoundaryPath:
    prefix: Path
    cycle: Path

    @property
    def range(self) -> str:
        return self.prefix.range

    @property
    def period(self):
        return self.cycle.degree

    @property
    def degree(self) -> tuple:
        return tuple(INF if c else p for p, c in zip(self.prefix.degree, self.cycle.degree))

    @property
    def size(self) -> int:
        return len(self.prefix.edges) + len(self.cycle.edges)

    def __str__(self):
        if not self.cycle.edges:
            return str(self.prefix)
        return f"{self.prefix}({self.cycle})^inf"


def boundary_path(g: KGraph, prefix: Path, cycle: Path | None = None) -> BoundaryPath:
    if cycle is None:
        cycle = g.identity(prefix.source)
    bp = BoundaryPath(prefix, cycle)
    _check_loop(bp)
    return bp


def at_vertex(g: KGraph, v: str) -> BoundaryPath:
    """The presentation with empty prefix and empty cycle at ``v``."""
    idv = g.identity(v)
    return BoundaryPath(idv, idv)


def _check_loop(bp: BoundaryPath):
    c = bp.cycle
    if c.range != c.source or c.range != bp.prefix.source:
        raise MalformedPresentation(f"cycle {c} is not a loop at {bp.prefix.source}")


def unroll(g: KGraph, bp: BoundaryPath, q) -> Path:
    """prefix . cycle^L for the least L with degree >= q (q finite, q <= d(x))."""
    q = tuple(q)
    if not le(q, bp.degree) or any(x < 0 for x in q):
        raise OutOfRange(f"position {q} is not below {bp.degree}")
    pre, D = bp.prefix.degree, bp.period
    L = 0
    for i, d in enumerate(D):
        if d:
            L = max(L, -(-(q[i] - pre[i]) // d))
    lam = bp.prefix
    for _ in range(L):
        lam = g.compose(lam, bp.cycle)
    return lam


def segment(g: KGraph, bp: BoundaryPath, p, q) -> Path:
    """x(p, q) for p <= q <= d(x)."""
    p, q = tuple(p), tuple(q)
    if not le(p, q):
        raise OutOfRange(f"{p} is not below {q}")
    return g.segment(unroll(g, bp, q), p, q)


def vertex_at(g: KGraph, bp: BoundaryPath, p) -> str:
    return segment(g, bp, p, p).range


def shift(g: KGraph, bp: BoundaryPath, n) -> BoundaryPath:
    """A presentation of sigma^n(x)."""
    n = tuple(n)
    if not le(n, bp.degree) or any(x < 0 for x in n):
        raise OutOfRange(f"cannot shift by {n} past {bp.degree}")
    G = join(bp.prefix.degree, n)
    lam = unroll(g, bp, add(G, bp.period))
    new_pre = g.segment(lam, n, G)
    new_cyc = g.segment(lam, G, add(G, bp.period))
    return BoundaryPath(new_pre, new_cyc)


def prepend(g: KGraph, lam: Path, bp: BoundaryPath) -> BoundaryPath:
    if lam.source != bp.range:
        raise NotComposable(f"s({lam}) = {lam.source} but r(x) = {bp.range}")
    return BoundaryPath(g.compose(lam, bp.prefix), bp.cycle)


def _shift_closure(g: KGraph, bp: BoundaryPath) -> list:
    """All presentations sigma^m(x) with m supported on the periodic colours."""
    colours = [i for i, d in enumerate(bp.period) if d]
    k = g.rank
    seen = {bp}
    queue = deque([bp])
    while queue:
        cur = queue.popleft()
        for i in colours:
            step = tuple(1 if j == i else 0 for j in range(k))
            nxt = shift(g, cur, step)
            if nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
    return list(seen)


def validate_boundary(g: KGraph, bp: BoundaryPath) -> bool:
    """Exact check of the boundary condition at every position of x."""
    _check_loop(bp)
    finite = [i for i, d in enumerate(bp.period) if not d]
    if not finite:
        return True
    pre = bp.prefix.degree
    for state in _shift_closure(g, bp):
        lam = state.prefix
        for s in box(tuple(pre[i] for i in finite)):
            pos = list(zero(g.rank))
            for i, val in zip(finite, s):
                pos[i] = val
            w = g.factorize(lam, tuple(pos))[0].source
            for i, val in zip(finite, s):
                if val == pre[i] and g.has_color(w, i + 1):
                    return False
    return True


def _tail_loop(g: KGraph, bp: BoundaryPath, G, D) -> Path:
    """x(G, G + D) for G >= d(prefix)."""
    return segment(g, bp, G, add(G, D))


def _periodic_under(g: KGraph, loop: Path, D) -> bool:
    """Is loop^inf invariant under sigma^D?"""
    y = BoundaryPath(g.identity(loop.range), loop)
    return shift(g, y, D).cycle == loop


def boundary_equal(g: KGraph, x: BoundaryPath, y: BoundaryPath) -> bool:
    """Exact equality of the infinite paths denoted by two presentations."""
    if x.range != y.range or x.degree != y.degree:
        return False
    G = join(x.prefix.degree, y.prefix.degree)
    if segment(g, x, zero(g.rank), G) != segment(g, y, zero(g.rank), G):
        return False
    if not any(x.period):
        return True
    tx = _tail_loop(g, x, G, x.period)
    ty = _tail_loop(g, y, G, y.period)
    if not _periodic_under(g, tx, y.period):
        return False
    tail = BoundaryPath(g.identity(tx.range), tx)
    return segment(g, tail, zero(g.rank), y.period) == ty


def minimal_period(g: KGraph, bp: BoundaryPath):
    """Least eventual period, ordered by total length then lexicographically."""
    D = bp.period
    if not any(D):
        return D
    loop = bp.cycle
    supp = [i for i, d in enumerate(D) if d]
    total = sum(D)
    best = D
    for cand in box(tuple(total if i in supp else 0 for i in range(g.rank))):
        if any(cand[i] == 0 for i in supp) or sum(cand) > total:
            continue
        if (sum(cand), cand) < (sum(best), best) and _periodic_under(g, loop, cand):
            best = cand
    return best


def _class_key(g: KGraph, bp: BoundaryPath):
    """Presentation-independent invariants, used to bucket before exact comparison."""
    D = minimal_period(g, bp)
    if not any(D):
        return (bp.range, bp.degree, D, bp.prefix)
    loop = _tail_loop(g, bp, bp.prefix.degree, D)
    base = BoundaryPath(g.identity(loop.range), loop)
    loops = frozenset(s.cycle for s in _shift_closure(g, base))
    return (bp.range, bp.degree, D, loops)


def dedupe(g: KGraph, paths) -> list:
    buckets: dict = {}
    out = []
    for bp in paths:
        bucket = buckets.setdefault(_class_key(g, bp), [])
        if any(boundary_equal(g, bp, other) for other in bucket):
            continue
        bucket.append(bp)
        out.append(bp)
    return out


def is_cofinal_path(g: KGraph, bp: BoundaryPath) -> bool:
    """Every vertex reaches some vertex on x.

    Positions of x that a fixed v can reach form an up-set, and x returns to
    s(prefix) arbitrarily far out, so it suffices to test that one vertex.
    """
    target = bp.prefix.source
    return all(target in g.future([v]) for v in g.vertices)


def avoiding_boundary_exists(g: KGraph, v: str, colours) -> bool:
    """Some x in v Lambda^{<=inf} has d(x)_i = 0 for every i in ``colours``.

    d(x)_i >= 1 would give the edge x(0, e_i) in v Lambda^{e_i}; conversely the
    boundary condition at position 0 forces d(x)_i = 0 when v has no colour-i
    edge.  Boundary paths exist from every vertex, so the test is local.
    """
    if v not in g.vertex_set:
        raise UnknownVertex(v)
    return all(not g.has_color(v, i) for i in colours)


def _paths_up_to(g: KGraph, v: str, max_edges: int) -> list:
    out = []
    for total in range(max_edges + 1):
        for deg in _compositions(total, g.rank):
            out.extend(g.paths_of_degree(deg, v))
    return out


def _compositions(total: int, parts: int):
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def enumerate_boundary(g: KGraph, v: str, size_bound: int) -> list:
    """Valid presentations from v with at most ``size_bound`` edges, up to equality."""
    if v not in g.vertex_set:
        raise UnknownVertex(v)
    found = []
    for pre in _paths_up_to(g, v, size_bound):
        room = size_bound - len(pre.edges)
        loops = [g.identity(pre.source)]
        loops += [c for c in _paths_up_to(g, pre.source, room) if c.edges and c.source == pre.source]
        for c in loops:
            bp = BoundaryPath(pre, c)
            if validate_boundary(g, bp):
                found.append(bp)
    return dedupe(g, found)


def some_boundary_path(g: KGraph, v: str) -> BoundaryPath:
    """A deterministic boundary path from v: keep taking the first element of w Lambda^{<=(1,...,1)}."""
    step = tuple([1] * g.rank)
    order, seen, pieces = [], {}, []
    w = v
    while w not in seen:
        seen[w] = len(order)
        order.append(w)
        rho = g.le_paths(w, step)[0]
        pieces.append(rho)
        w = rho.source
    start = seen[w]
    prefix = g.identity(v)
    for rho in pieces[:start]:
        prefix = g.compose(prefix, rho)
    cycle = g.identity(w)
    for rho in pieces[start:]:
        cycle = g.compose(cycle, rho)
    return BoundaryPath(prefix, cycle)
