"""Direct-sum splittings read off the lattice of saturated hereditary sets."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from .errors import BudgetExceeded, NotNested, TooLarge
from .ideals import HSLattice, _saturate_unchecked, _saturation_tests, enumerate_hs_lattice, restrict_to
from .skeleton import BudgetConfig, KGraph

CHAIN_CAP = 100_000


def _budget(g, budget):
    return budget if budget is not None else BudgetConfig.for_graph(g)


def delta_omega(g: KGraph, H1, H2) -> tuple:
    H1, H2 = frozenset(H1), frozenset(H2)
    if not H2 <= H1:
        raise NotNested("second set must be contained in the first")
    delta = frozenset(v for v in H1 if not (g.future([v]) & H2))
    return delta, H1 - H2 - delta


def succeeds(g: KGraph, H1, H2, budget: BudgetConfig | None = None) -> bool:
    """H1 > H2: nested, Delta nonempty, and each v in Omega has some n with s(v Lambda^{<=n}) in H2 u Delta."""
    delta, omega = delta_omega(g, H1, H2)
    if not delta:
        return False
    target = frozenset(H2) | delta
    tests = _saturation_tests(g, _budget(g, budget).saturation_bound)
    return all(any(s <= target for s in tests[v]) for v in omega)


def succeeds_via_saturation(g: KGraph, H1, H2, budget: BudgetConfig | None = None) -> bool:
    """The same relation with the last condition read as Omega contained in the saturation of H2 u Delta."""
    delta, omega = delta_omega(g, H1, H2)
    if not delta:
        return False
    sat = _saturate_unchecked(g, frozenset(H2) | delta, _budget(g, budget).saturation_bound)
    return omega <= sat


@dataclass
class Decomposability:
    witness: tuple | None  # disjoint nonempty (H1, H2) whose join is everything
    successor: frozenset | None  # nonempty H with Lambda^0 > H


def decomposability(g: KGraph, budget: BudgetConfig | None = None,
                    lattice: HSLattice | None = None) -> Decomposability:
    budget = _budget(g, budget)
    lattice = lattice or enumerate_hs_lattice(g, budget)
    bound = budget.saturation_bound
    full = g.vertex_set
    elems = [H for H in lattice if H]
    witness = None
    for i, A in enumerate(elems):
        for B in elems[i + 1:]:
            if not (A & B) and _saturate_unchecked(g, A | B, bound) == full:
                witness = (A, B)
                break
        if witness:
            break
    succ = next((H for H in elems if H != full and succeeds(g, full, H, budget)), None)
    return Decomposability(witness, succ)


@dataclass
class Chain:
    elements: tuple

    def __len__(self):
        return len(self.elements)


@dataclass
class ChainReport:
    maximal: list
    max_length: int


def _succ_graph(g, lattice, budget):
    elems = [H for H in lattice if H]
    nxt = {H: [K for K in elems if K < H and succeeds(g, H, K, budget)] for H in elems}
    return elems, nxt


def chains(g: KGraph, budget: BudgetConfig | None = None, lattice: HSLattice | None = None,
           cap: int = CHAIN_CAP) -> ChainReport:
    """All maximal chains through nonempty lattice elements, starting at the full vertex set."""
    budget = _budget(g, budget)
    lattice = lattice or enumerate_hs_lattice(g, budget)
    full = g.vertex_set
    if not full:
        return ChainReport([], 0)
    elems, nxt = _succ_graph(g, lattice, budget)

    below = {}  # H -> every K reachable from H by one or more steps

    def reach(H):
        if H not in below:
            out = set()
            for K in nxt[H]:
                out.add(K)
                out |= reach(K)
            below[H] = out
        return below[H]

    def refinable(A, B):
        return any(B in reach(C) for C in nxt[A])

    maximal, longest = [], 0
    stack = [(full,)]
    count = 0
    while stack:
        ch = stack.pop()
        count += 1
        if count > cap:
            raise TooLarge(f"more than {cap} chains")
        longest = max(longest, len(ch))
        last = ch[-1]
        for K in nxt[last]:
            stack.append(ch + (K,))
        if not nxt[last] and not any(refinable(a, b) for a, b in zip(ch, ch[1:])):
            maximal.append(Chain(ch))
    maximal.sort(key=lambda c: [sorted(h) for h in c.elements])
    return ChainReport(maximal, longest)


@dataclass
class Component:
    vertices: frozenset
    graph: KGraph


@dataclass
class DecompositionReport:
    n: int
    components: list
    chain: Chain
    unique: bool  # every maximal chain yields the same summands


def summands(g: KGraph, chain: Chain, bound) -> list:
    """K_i = saturation of Delta(H_i, H_{i+1}); the last one is H_n itself."""
    hs = chain.elements
    ks = []
    for a, b in zip(hs, hs[1:]):
        delta, _ = delta_omega(g, a, b)
        ks.append(_saturate_unchecked(g, delta, bound))
    ks.append(hs[-1])
    return ks


def check_summands(g: KGraph, chain: Chain, ks: list, bound) -> bool:
    for i, a in enumerate(ks):
        if any(a & b for b in ks[i + 1:]):
            return False
    for i, H in enumerate(chain.elements):
        if _saturate_unchecked(g, frozenset().union(*ks[i:]), bound) != H:
            return False
    return True


def decompose(g: KGraph, budget: BudgetConfig | None = None, lattice: HSLattice | None = None,
              chain: Chain | None = None) -> DecompositionReport:
    budget = _budget(g, budget)
    lattice = lattice or enumerate_hs_lattice(g, budget)
    bound = budget.saturation_bound
    report = chains(g, budget, lattice)
    if not report.maximal:
        raise BudgetExceeded("no maximal chain found")
    longest = [c for c in report.maximal if len(c) == report.max_length]
    chosen = chain or longest[0]
    ks = summands(g, chosen, bound)
    if not check_summands(g, chosen, ks, bound):
        raise BudgetExceeded("summands do not reproduce the chain at this saturation bound")
    order = {v: i for i, v in enumerate(g.vertices)}
    comps = []
    for i, K in enumerate(ks):
        others = frozenset().union(*(k for j, k in enumerate(ks) if j != i))
        drop = _saturate_unchecked(g, others, bound)
        keep = g.vertex_set - drop
        comps.append(Component(frozenset(keep), restrict_to(g, keep)))
    ref = Counter(_key(K, order) for K in ks)
    unique = all(Counter(_key(K, order) for K in summands(g, c, bound)) == ref for c in report.maximal)
    return DecompositionReport(len(ks), comps, chosen, unique)


def _key(K, order):
    return tuple(sorted(order[v] for v in K))
