"""Equivalence of paths under all boundary continuations, and the periodicity group.

Deciding mu ~ nu
----------------
Write m = d(mu) ^ d(nu).  If mu(0, m) != nu(0, m) the answer is no; otherwise
mu ~ nu iff alpha ~ beta for the remainders alpha = mu(m, d(mu)) and
beta = nu(m, d(nu)), whose degrees g+ and g- have disjoint supports.  Every
boundary path from s(alpha) starts with some rho in s Lambda^{<=(1,...,1)}, and

    alpha rho = rho' alpha',   beta rho = rho'' beta'   (split at d(rho))

so alpha x = beta x for all x iff rho' = rho'' for every rho and the new pair
(alpha', beta') passes the same test.  The pairs keep the degrees (g+, g-), so
only finitely many occur and a breadth-first search settles the question.  A
pair whose source lacks a colour where g+ - g- is nonzero fails outright,
because every continuation then has mismatched degrees.

The same search runs in the desourcification.  That graph is infinite, but the
future of a vertex (w, p) only depends on w and the support of p, so states are
translated to excess at most one before being stored.
"""

from __future__ import annotations

import enum
import itertools
from collections import deque
from dataclasses import dataclass, field

from .boundary import BoundaryPath, prepend, some_boundary_path
from .desourcify import DesElement, DesVertex, des_compose, des_factorize, des_paths, is_valid_vertex
from .ideals import pairwise_common_future
from .intgroup import IntSubgroup
from .skeleton import BudgetConfig, KGraph, Path, box, meet, ones, sub

STATE_CAP = 200_000


class Answer(enum.Enum):
    YES = "yes"
    NO = "no"
    UNKNOWN = "unknown"

    def __str__(self):
        return self.value


# -- category adapters --------------------------------------------------------

class LambdaOps:
    """Paths of a finite k-graph."""

    def __init__(self, g: KGraph):
        self.g = g
        self.k = g.rank

    def vertices(self):
        return list(self.g.vertices)

    def identity(self, v):
        return self.g.identity(v)

    def paths(self, v, n):
        return self.g.paths_of_degree(n, v)

    def steps(self, v):
        return self.g.le_paths(v, ones(self.k))

    def compose(self, a, b):
        return self.g.compose(a, b)

    def factorize(self, x, m):
        return self.g.factorize(x, m)

    def lacks(self, v, i):
        return not self.g.has_color(v, i)

    def clip_state(self, alpha, beta):
        return alpha, beta

    def clip_vertex(self, v):
        return v


class DesOps:
    """Elements of the desourcification, which has no sources."""

    def __init__(self, g: KGraph):
        self.g = g
        self.k = g.rank

    def vertices(self):
        """One representative per translation class: excess in {0,1}^k."""
        out = []
        for w in self.g.vertices:
            for p in box(ones(self.k)):
                if is_valid_vertex(self.g, w, p):
                    out.append(DesVertex(w, p))
        return out

    def identity(self, v):
        return DesElement(self.g.identity(v.base), v.excess, v.excess)

    def paths(self, v, n):
        return des_paths(self.g, v, n)

    def steps(self, v):
        return des_paths(self.g, v, ones(self.k))

    def compose(self, a, b):
        return des_compose(self.g, a, b)

    def factorize(self, x, m):
        return des_factorize(self.g, x, m)

    def lacks(self, v, i):
        return False

    @staticmethod
    def _shift(e: DesElement, t) -> DesElement:
        return DesElement(e.core, sub(e.range_excess, t), sub(e.source_excess, t))

    def clip_state(self, alpha, beta):
        q = alpha.range_excess
        t = tuple(x - 1 if x else 0 for x in q)
        if not any(t):
            return alpha, beta
        return self._shift(alpha, t), self._shift(beta, t)

    def clip_vertex(self, v):
        return DesVertex(v.base, tuple(1 if x else 0 for x in v.excess))


def _src(x):
    return x.source


def _rng(x):
    return x.range


# -- the decision procedure ---------------------------------------------------

@dataclass
class Decision:
    answer: Answer
    states: int = 0
    trail: tuple = ()  # steps rho leading to the failure, for witnesses
    reason: str = ""


def _decide_reduced(ops, alpha, beta, cap: int) -> Decision:
    if _rng(alpha) != _rng(beta):
        return Decision(Answer.NO, reason="ranges differ")
    diff = [i + 1 for i, (a, b) in enumerate(zip(alpha.degree, beta.degree)) if a != b]
    start = ops.clip_state(alpha, beta)
    parent = {start: None}
    queue = deque([start])
    while queue:
        state = queue.popleft()
        a, b = state
        s = _src(a)
        if any(ops.lacks(s, i) for i in diff):
            return Decision(Answer.NO, len(parent), _trail(parent, state), "degree mismatch")
        for rho in ops.steps(s):
            d = rho.degree
            ha, ta = ops.factorize(ops.compose(a, rho), d)
            hb, tb = ops.factorize(ops.compose(b, rho), d)
            if ha != hb:
                return Decision(Answer.NO, len(parent), _trail(parent, state) + (rho,), "paths diverge")
            nxt = ops.clip_state(ta, tb)
            if nxt not in parent:
                parent[nxt] = (state, rho)
                if len(parent) > cap:
                    return Decision(Answer.UNKNOWN, len(parent), reason="state cap reached")
                queue.append(nxt)
    return Decision(Answer.YES, len(parent))


def _trail(parent, state) -> tuple:
    out = []
    while parent[state] is not None:
        state, rho = parent[state]
        out.append(rho)
    return tuple(reversed(out))


def _decide(ops, mu, nu, cap: int) -> Decision:
    if _src(mu) != _src(nu):
        return Decision(Answer.NO, reason="sources differ")
    if mu == nu:
        return Decision(Answer.YES)
    m = meet(mu.degree, nu.degree)
    tau1, alpha = ops.factorize(mu, m)
    tau2, beta = ops.factorize(nu, m)
    if tau1 != tau2:
        return Decision(Answer.NO, reason="common prefix differs")
    return _decide_reduced(ops, alpha, beta, cap)


def decide_equivalence(g: KGraph, mu: Path, nu: Path, cap: int = STATE_CAP) -> Decision:
    return _decide(LambdaOps(g), mu, nu, cap)


def equivalent_paths(g: KGraph, mu: Path, nu: Path, budget: BudgetConfig | None = None,
                     cap: int = STATE_CAP) -> Answer:
    return decide_equivalence(g, mu, nu, cap).answer


def des_equivalent(g: KGraph, mu: DesElement, nu: DesElement, cap: int = STATE_CAP) -> Answer:
    return _decide(DesOps(g), mu, nu, cap).answer


def refuting_path(g: KGraph, mu: Path, nu: Path) -> BoundaryPath | None:
    """A boundary path x with mu x != nu x, or None when mu ~ nu."""
    if mu.source != nu.source:
        return None
    dec = decide_equivalence(g, mu, nu)
    if dec.answer is not Answer.NO:
        return None
    lam = g.identity(mu.source)
    for rho in dec.trail:
        lam = g.compose(lam, rho)
    return prepend(g, lam, some_boundary_path(g, lam.source))


# -- Per and H_Per ---------------------------------------------------------------

@dataclass
class PerGroup:
    group: IntSubgroup
    exact: bool  # no unknown answers and the generators stabilised inside the box
    certified: bool  # exact, and the vertex set is a maximal tail so Per is a group
    witnesses: dict = field(default_factory=dict)  # difference -> (mu, nu)
    unknown: int = 0


def _half_box(bound):
    """Nonzero g with |g_i| <= bound_i whose first nonzero entry is positive."""
    ranges = [range(-b, b + 1) for b in bound]
    for g in itertools.product(*ranges):
        nz = next((x for x in g if x), 0)
        if nz > 0:
            yield g


def _split(g):
    return tuple(max(x, 0) for x in g), tuple(max(-x, 0) for x in g)


def _find_pair(ops, diff, cap):
    """Some alpha ~ beta with d(alpha) - d(beta) = diff; returns (pair, saw_unknown)."""
    plus, minus = _split(diff)
    unknown = False
    for v in ops.vertices():
        betas = {}
        for b in ops.paths(v, minus):
            betas.setdefault(_src(b), []).append(b)
        for a in ops.paths(v, plus):
            for b in betas.get(_src(a), ()):
                ans = _decide_reduced(ops, a, b, cap).answer
                if ans is Answer.YES:
                    return (a, b), unknown
                if ans is Answer.UNKNOWN:
                    unknown = True
    return None, unknown


def _per_group(ops, bound, cap) -> tuple:
    found, unknown = {}, 0
    for diff in _half_box(bound):
        pair, unk = _find_pair(ops, diff, cap)
        unknown += unk
        if pair is not None:
            found[diff] = pair
    k = len(bound)
    group = IntSubgroup.generated_by(k, found)
    inner = tuple(b - 1 for b in bound)
    smaller = IntSubgroup.generated_by(
        k, [d for d in found if all(abs(x) <= b for x, b in zip(d, inner))])
    return group, found, unknown, smaller == group


def _bound(g: KGraph, budget: BudgetConfig | None):
    return (budget or BudgetConfig.for_graph(g)).degree_bound


def per_group(g: KGraph, budget: BudgetConfig | None = None, cap: int = STATE_CAP) -> PerGroup:
    group, found, unknown, stable = _per_group(LambdaOps(g), _bound(g, budget), cap)
    exact = unknown == 0 and stable
    tail = bool(g.vertices) and pairwise_common_future(g, g.vertices)
    return PerGroup(group, exact, exact and tail, found, unknown)


def per_group_des(g: KGraph, budget: BudgetConfig | None = None, cap: int = STATE_CAP) -> PerGroup:
    """The periodicity group of the desourcification, searched at the same degree bound."""
    group, found, unknown, stable = _per_group(DesOps(g), _bound(g, budget), cap)
    exact = unknown == 0 and stable
    tail = bool(g.vertices) and pairwise_common_future(g, g.vertices)
    return PerGroup(group, exact, exact and tail, found, unknown)


@dataclass
class HPer:
    members: frozenset
    exact: bool


def _h_per(ops, starts, per: IntSubgroup, bound, cap) -> tuple:
    diffs = [d for d in _box_all(bound) if d in per and any(d)]
    good_cache = {}
    exact = True

    def good(w, diff):
        nonlocal exact
        key = (ops.clip_vertex(w), diff)
        if key in good_cache:
            return good_cache[key]
        w = key[0]
        plus, minus = _split(diff)
        betas = {}
        for b in ops.paths(w, minus):
            betas.setdefault(_src(b), []).append(b)
        ok = True
        for a in ops.paths(w, plus):
            hit = False
            for b in betas.get(_src(a), ()):
                ans = _decide_reduced(ops, a, b, cap).answer
                if ans is Answer.UNKNOWN:
                    exact = False
                if ans is Answer.YES:
                    hit = True
                    break
            if not hit:
                ok = False
                break
        good_cache[key] = ok
        return ok

    members = set()
    for v in starts:
        reach = {}
        ok = True
        for diff in diffs:
            plus, minus = _split(diff)
            room = tuple(b - max(p, q) for b, p, q in zip(bound, plus, minus))
            for n in box(room):
                if n not in reach:
                    reach[n] = {_src(x) for x in ops.paths(v, n)}
                if not all(good(w, diff) for w in reach[n]):
                    ok = False
                    break
            if not ok:
                break
        if ok:
            members.add(v)
    return frozenset(members), exact


def _box_all(bound):
    return itertools.product(*[range(-b, b + 1) for b in bound])


def h_per(g: KGraph, per: IntSubgroup, budget: BudgetConfig | None = None, cap: int = STATE_CAP) -> HPer:
    members, exact = _h_per(LambdaOps(g), g.vertices, per, _bound(g, budget), cap)
    return HPer(members, exact)


def h_per_des(g: KGraph, per: IntSubgroup, budget: BudgetConfig | None = None, cap: int = STATE_CAP) -> HPer:
    """H_Per of the desourcification, intersected with the embedded vertices of g."""
    ops = DesOps(g)
    starts = [DesVertex(v, tuple([0] * g.rank)) for v in g.vertices]
    members, exact = _h_per(ops, starts, per, _bound(g, budget), cap)
    return HPer(frozenset(v.base for v in members), exact)


# -- aperiodicity ------------------------------------------------------------------

@dataclass
class PeriodicityVerdict:
    status: str  # "aperiodic" | "periodic" | "unknown"
    witness: tuple | None = None
    reason: str = ""
    budget: tuple = ()


def _cycle_without_entrance(g: KGraph):
    """For a 1-graph: a cycle all of whose vertices have exactly one outgoing path step."""
    em = g.edge_map
    for v in g.vertices:
        path, w = [], v
        seen = set()
        while w not in seen and len(g.edges_at(w, 1)) == 1:
            seen.add(w)
            e = g.edges_at(w, 1)[0]
            path.append(e)
            w = em[e].source
            if w == v:
                return g.path(path)
    return None


def _acyclic(g: KGraph) -> bool:
    state = {}

    def visit(v):
        state[v] = 1
        for w in g.successors(v):
            s = state.get(w, 0)
            if s == 1 or (s == 0 and not visit(w)):
                return False
        state[v] = 2
        return True

    return all(state.get(v) == 2 or visit(v) for v in g.vertices)


def aperiodicity(g: KGraph, budget: BudgetConfig | None = None, cap: int = STATE_CAP) -> PeriodicityVerdict:
    bound = _bound(g, budget)
    if g.rank == 1:
        cyc = _cycle_without_entrance(g)
        if cyc is not None:
            return PeriodicityVerdict("periodic", (cyc, g.identity(cyc.range)),
                                      "cycle without entrance", bound)
        return PeriodicityVerdict("aperiodic", None, "every cycle has an entrance", bound)
    if _acyclic(g):
        return PeriodicityVerdict("aperiodic", None, "no cycles, so every boundary path is finite", bound)
    ops = LambdaOps(g)
    for diff in _half_box(bound):
        pair, _ = _find_pair(ops, diff, cap)
        if pair is not None:
            return PeriodicityVerdict("periodic", pair, f"equivalent pair of degree difference {diff}", bound)
    return PeriodicityVerdict("unknown", None, "no equivalent pair inside the degree bound", bound)


# -- desourcification transfer -----------------------------------------------------

@dataclass
class TransferReport:
    in_desourcification: Answer
    via_projection: Answer
    agree: bool


def transfer_check(g: KGraph, mu_bar: DesElement, nu_bar: DesElement,
                   budget: BudgetConfig | None = None, cap: int = STATE_CAP) -> TransferReport:
    left = des_equivalent(g, mu_bar, nu_bar, cap)
    core = decide_equivalence(g, mu_bar.core, nu_bar.core, cap).answer
    same_excess = sub(mu_bar.degree, mu_bar.core.degree) == sub(nu_bar.degree, nu_bar.core.degree)
    if core is Answer.UNKNOWN:
        right = Answer.UNKNOWN if same_excess else Answer.NO
    else:
        right = Answer.YES if core is Answer.YES and same_excess else Answer.NO
    agree = Answer.UNKNOWN not in (left, right) and left == right
    return TransferReport(left, right, agree)
