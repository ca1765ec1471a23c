"""Maximal tails and the catalogue of primitive ideals they parametrise."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .ideals import HSLattice, enumerate_hs_lattice, pairwise_common_future, restrict_to
from .intgroup import IntSubgroup
from .periodicity import (
    Answer,
    PeriodicityVerdict,
    _decide_reduced,
    _half_box,
    _split,
    LambdaOps,
    aperiodicity,
    h_per,
    per_group,
)
from .skeleton import BudgetConfig, KGraph

MAX_RELATIONS = 16


@dataclass(frozen=True)
class MaximalTail:
    members: frozenset
    complement: frozenset


def _budget(g, budget):
    return budget if budget is not None else BudgetConfig.for_graph(g)


def tail_graph(g: KGraph, tail: MaximalTail) -> KGraph:
    """The quotient graph on the tail: remove the complementary saturated hereditary set."""
    return restrict_to(g, tail.members)


def maximal_tails(g: KGraph, budget: BudgetConfig | None = None,
                  lattice: HSLattice | None = None) -> list:
    """Complements of lattice elements that are nonempty and pairwise share a future.

    Conditions (1) and (2) of a maximal tail say exactly that the complement is
    hereditary and saturated, so only the common-future condition is left.
    """
    lattice = lattice or enumerate_hs_lattice(g, _budget(g, budget))
    out = []
    for H in lattice:
        T = g.vertex_set - H
        if T and pairwise_common_future(g, T):
            out.append(MaximalTail(frozenset(T), frozenset(H)))
    return out


def aperiodic_tails(g: KGraph, budget: BudgetConfig | None = None) -> list:
    budget = _budget(g, budget)
    return [(t, aperiodicity(tail_graph(g, t), budget)) for t in maximal_tails(g, budget)]


@dataclass(frozen=True)
class Relation:
    """s_mu - coefficient * s_nu with coefficient = exp(2 pi i * phase)."""

    mu: object
    nu: object
    phase: Fraction


@dataclass
class PrimIdeal:
    tail: MaximalTail
    per: IntSubgroup
    per_exact: bool
    character_rank: int
    sample_character: tuple
    h_per: frozenset
    vertex_generators: tuple
    relations: tuple
    verdict: PeriodicityVerdict

    @property
    def point_count(self):
        """Number of primitive ideals attached to this tail: one, or a torus."""
        return 1 if self.character_rank == 0 else float("inf")


def _phase(t, diff) -> Fraction:
    return sum((Fraction(a) * b for a, b in zip(t, diff)), Fraction(0)) % 1


def sample_relations(g: KGraph, per: IntSubgroup, hper, t, bound, limit: int = MAX_RELATIONS) -> tuple:
    """Pairs mu ~ nu with range in H_Per and d(mu) - d(nu) a nonzero element of per."""
    ops = LambdaOps(g)
    out = []
    diffs = [d for d in _half_box(bound) if d in per]
    for v in g.vertices:
        if v not in hper:
            continue
        for diff in diffs:
            plus, minus = _split(diff)
            for a in g.paths_of_degree(plus, v):
                for b in g.paths_of_degree(minus, v):
                    if a.source == b.source and _decide_reduced(ops, a, b, 10**5).answer is Answer.YES:
                        out.append(Relation(a, b, _phase(t, diff)))
                        if len(out) >= limit:
                            return tuple(out)
    return tuple(out)


def prim_record(g: KGraph, tail: MaximalTail, budget: BudgetConfig, character=None) -> PrimIdeal:
    sub = tail_graph(g, tail)
    pg = per_group(sub, budget)
    t = tuple(Fraction(x) for x in character) if character is not None else tuple(Fraction(0) for _ in range(g.rank))
    hp = h_per(sub, pg.group, budget)
    rels = sample_relations(sub, pg.group, hp.members, t, budget.degree_bound)
    order = {v: i for i, v in enumerate(g.vertices)}
    return PrimIdeal(
        tail=tail,
        per=pg.group,
        per_exact=pg.exact,
        character_rank=pg.group.rank,
        sample_character=t,
        h_per=hp.members,
        vertex_generators=tuple(sorted(tail.complement, key=order.get)),
        relations=rels,
        verdict=aperiodicity(sub, budget),
    )


def prim_catalogue(g: KGraph, budget: BudgetConfig | None = None, lattice: HSLattice | None = None) -> list:
    budget = _budget(g, budget)
    return [prim_record(g, t, budget) for t in maximal_tails(g, budget, lattice)]


@dataclass
class PrimFlags:
    gauge_invariant: bool | None
    maximal_ideal: bool  # certified maximal; False means "not certified"
    cofinal_graph: bool
    strongly_aperiodic: bool | None


def _tri(verdict: PeriodicityVerdict):
    return {"aperiodic": True, "periodic": False}.get(verdict.status)


def strongly_aperiodic(g: KGraph, lattice: HSLattice, budget: BudgetConfig) -> bool | None:
    status = set()
    for H in lattice:
        if H == g.vertex_set:
            continue
        status.add(aperiodicity(restrict_to(g, g.vertex_set - H), budget).status)
    if "periodic" in status:
        return False
    if "unknown" in status:
        return None
    return True


def classify_prim(g: KGraph, catalogue: list, lattice: HSLattice | None = None,
                  budget: BudgetConfig | None = None) -> list:
    budget = _budget(g, budget)
    lattice = lattice or enumerate_hs_lattice(g, budget)
    tails = [rec.tail.members for rec in catalogue]
    cofinal = len(lattice) == 2
    strong = strongly_aperiodic(g, lattice, budget)
    out = []
    for rec in catalogue:
        minimal = not any(other < rec.tail.members for other in tails)
        out.append(PrimFlags(_tri(rec.verdict), minimal, cofinal, strong))
    return out
