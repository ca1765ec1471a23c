"""Brute-force reference implementations used to cross-check the library.

Nothing here calls the code paths it is meant to check: paths are counted
by walking colour blocks, segments come from compose + factorize rather
than unroll/segment, equivalence is tested by appending enumerated
boundary paths, and Per is generated from brute-force equivalent pairs.
"""

from __future__ import annotations

import itertools
import random

from kgraphkit.boundary import BoundaryPath, boundary_equal, enumerate_boundary, prepend, shift
from kgraphkit.desourcify import canonicalize_element
from kgraphkit.intgroup import IntSubgroup
from kgraphkit.skeleton import le, meet, sub


def block_sequences(g, n, v):
    """Edge sequences at range v reading colour 1 first, then colour 2, and so on."""
    colours = [c for c in range(1, g.rank + 1) for _ in range(n[c - 1])]
    em = g.edge_map
    out = []

    def walk(w, i, acc):
        if i == len(colours):
            out.append(tuple(acc))
            return
        for e in g.edges_at(w, colours[i]):
            walk(em[e].source, i + 1, acc + [e])

    walk(v, 0, [])
    return out


def all_decompositions(g, lam, m):
    """Every (a, b) with d(a) = m, d(b) = d(lam) - m and a b = lam, by exhaustive search."""
    rest = sub(lam.degree, m)
    out = []
    for a in g.paths_of_degree(m, lam.range):
        for b in g.paths_of_degree(rest, a.source):
            if b.source == lam.source and g.compose(a, b) == lam:
                out.append((a, b))
    return out


# -- P1-P3 -------------------------------------------------------------------------

def oracle_segment(g, x: BoundaryPath, p, q):
    """x(p, q) via prefix . cycle^L followed by two factorizations."""
    lam = x.prefix
    while not le(q, lam.degree):
        lam = g.compose(lam, x.cycle)
    _, rest = g.factorize(lam, p)
    mid, _ = g.factorize(rest, sub(q, p))
    return mid


def _clip(m, d):
    return tuple(int(v) for v in meet(m, d))


def p_related(g, w1, w2) -> bool:
    """(x;(m,n)) and (y;(p,q)) satisfy P1, P2 and P3."""
    (x, m, n), (y, p, q) = w1, w2
    dx, dy = x.degree, y.degree
    if sub(n, m) != sub(q, p):
        return False
    if sub(m, _clip(m, dx)) != sub(p, _clip(p, dy)):
        return False
    return oracle_segment(g, x, _clip(m, dx), _clip(n, dx)) == oracle_segment(g, y, _clip(p, dy), _clip(q, dy))


# -- sampled witness pairs ----------------------------------------------------------

def _witness_pool(g, rng, size=2, box=3):
    xs = []
    while g.vertices and not xs:
        xs = [x for v in g.vertices for x in enumerate_boundary(g, v, size)]
        size += 1
    pool = []
    for x in xs:
        for m in itertools.product(range(box), repeat=g.rank):
            n = tuple(a + rng.randrange(2) for a in m)
            pool.append((x, m, n))
    return pool


def related_witness(g, w, rng):
    """A witness for the same element: shift x along a prefix of m that stays inside d(x)."""
    x, m, n = w
    lo = tuple(min(a, int(d)) if d != float("inf") else a for a, d in zip(m, x.degree))
    t = tuple(rng.randint(0, c) for c in lo)
    return shift(g, x, t), sub(m, t), sub(n, t)


def sampled_agreement(g, pairs=1000, seed=7):
    """Count (pairs checked, disagreements) between triple equality and the P1-P3 oracle."""
    rng = random.Random(seed)
    pool = _witness_pool(g, rng)
    bad = 0
    for i in range(pairs):
        w1 = rng.choice(pool)
        w2 = related_witness(g, w1, rng) if i % 2 else rng.choice(pool)
        same = canonicalize_element(g, *w1) == canonicalize_element(g, *w2)
        bad += same != p_related(g, w1, w2)
    return pairs, bad


# -- equivalence of paths ------------------------------------------------------------

def boundary_pool(g, v, size):
    return enumerate_boundary(g, v, size)


def brute_equivalent(g, mu, nu, size=4) -> bool:
    """mu x = nu x for every boundary path x from s(mu) with at most ``size`` edges."""
    if mu.source != nu.source or mu.range != nu.range:
        return False
    return all(boundary_equal(g, prepend(g, mu, x), prepend(g, nu, x))
               for x in boundary_pool(g, mu.source, size))


def brute_per(g, max_len=3, size=4) -> IntSubgroup:
    """Subgroup generated by d(mu) - d(nu) over brute-force equivalent pairs of short paths."""
    diffs = []
    degs = list(itertools.product(range(max_len + 1), repeat=g.rank))
    for v in g.vertices:
        paths = [p for d in degs for p in g.paths_of_degree(d, v)]
        for mu, nu in itertools.combinations(paths, 2):
            if mu.source == nu.source and mu.degree != nu.degree and brute_equivalent(g, mu, nu, size):
                diffs.append(sub(mu.degree, nu.degree))
    return IntSubgroup.generated_by(g.rank, diffs)


def window_boundary_check(g, x: BoundaryPath, periods: int = 2) -> bool:
    """The boundary condition checked position by position up to prefix + periods * cycle."""
    d = x.degree
    span = [int(p + periods * c) for p, c in zip(x.prefix.degree, x.cycle.degree)]
    for pos in itertools.product(*(range(s + 1) for s in span)):
        w = oracle_segment(g, x, pos, pos).range
        for i in range(g.rank):
            if d[i] == pos[i] and g.has_color(w, i + 1):
                return False
    return True


def brute_summand_count(g, lattice, saturate):
    """Largest family of nonempty lattice elements forming an internal direct sum.

    K_1..K_n qualify when every K_i misses the saturation of the others and
    the saturation of their union is everything.
    """
    elems = [H for H in lattice if H]
    full = g.vertex_set
    best = 0

    def ok(family):
        if saturate(frozenset().union(*family)) != full:
            return False
        return all(not (K & saturate(frozenset().union(*(family[:i] + family[i + 1:]))))
                   for i, K in enumerate(family))

    def grow(start, family, used):
        nonlocal best
        if family and len(family) > best and ok(family):
            best = len(family)
        for j in range(start, len(elems)):
            if not (elems[j] & used):
                grow(j + 1, family + [elems[j]], used | elems[j])

    grow(0, [], frozenset())
    return best
