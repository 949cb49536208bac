"""Exact H-factor search and the front-end that dispatches between routes.

General allowed-degree sets make the problem NP-hard, so ``exact_h_factor``
is a depth-first include/exclude search over edges. Interval and parity
progression specs go to the matching reductions instead.
"""
from __future__ import annotations

import random
import sys
import time
from dataclasses import dataclass

from .criteria import CriterionError, DegreeBounds, DegreeSpec
from .families import GStarLayout
from .graph import Factor, Graph
from .matching import f_factor, gf_factor, parity_factor

INTERVAL = "interval"
PARITY = "parity_progression"
GENERAL = "general"


class SolverError(ValueError):
    pass


@dataclass
class SearchBudget:
    """Node and wall-clock limits; the search records what it used."""

    max_nodes: int | None = 10**9
    max_time: float | None = 600.0
    nodes: int = 0
    elapsed: float = 0.0
    exceeded: bool = False


class BudgetExceeded(RuntimeError):
    def __init__(self, budget: SearchBudget):
        super().__init__(
            f"search budget exhausted after {budget.nodes} nodes / {budget.elapsed:.1f}s"
        )
        self.budget = budget


@dataclass(frozen=True)
class PruningRules:
    """Optional pruning on top of per-vertex forward checking.

    ``component_parity``: when every vertex of a component of the undecided
    edges can only end at one parity, the parities must add up.
    ``gstar``: for the two-hub construction, branch on hub edges first and
    require an odd number of chosen edges between u and each copy wired to
    u alone. Only sound for specs with odd values everywhere.
    """

    component_parity: bool = True
    gstar: GStarLayout | None = None


@dataclass(frozen=True)
class SpecClass:
    kind: str
    per_vertex: tuple[str, ...]


def _is_interval(a) -> bool:
    return max(a) - min(a) + 1 == len(a)


def _is_progression(a) -> bool:
    lo, hi = min(a), max(a)
    return (hi - lo) % 2 == 0 and len(a) == (hi - lo) // 2 + 1 and all(
        (x - lo) % 2 == 0 for x in a
    )


def classify_spec(G: Graph, spec: DegreeSpec) -> SpecClass:
    """Finest class covering every vertex.

    Singletons are both intervals and progressions; when every set is an
    interval the spec is reported as interval.
    """
    spec.validate(G)
    kinds = []
    for a in spec.allowed:
        if _is_interval(a):
            kinds.append(INTERVAL)
        elif _is_progression(a):
            kinds.append(PARITY)
        else:
            kinds.append(GENERAL)
    if all(_is_interval(a) for a in spec.allowed):
        kind = INTERVAL
    elif all(_is_progression(a) for a in spec.allowed):
        kind = PARITY
    else:
        kind = GENERAL
    return SpecClass(kind, tuple(kinds))


def bounds_of(spec: DegreeSpec) -> DegreeBounds:
    return DegreeBounds([min(a) for a in spec.allowed], [max(a) for a in spec.allowed])


class _Search:
    def __init__(self, G: Graph, spec: DegreeSpec, budget: SearchBudget, rules: PruningRules, seed):
        self.G = G
        n, m = G.n, G.m
        self.amask = [sum(1 << h for h in a) for a in spec.allowed]
        self.c = [0] * n
        self.u = list(G.degrees)
        self.status = [-1] * m
        self.trail: list[int] = []
        self.budget = budget
        self.rules = rules
        self.deadline = None if budget.max_time is None else time.monotonic() + budget.max_time
        self.start = time.monotonic()

        rank = list(range(n))
        adj = [list(a) for a in G.adj]
        if seed is not None:
            rng = random.Random(seed)
            rng.shuffle(rank)
            for a in adj:
                rng.shuffle(a)
        self.adj = adj
        self.priority = [0] * n
        self.xor: list[tuple[list[int], int]] = []
        self.xor_of: list[list[int]] = [[] for _ in range(m)]
        L = rules.gstar
        if L is not None:
            if L.graph.n != n:
                raise SolverError("G* layout does not match the graph")
            for h in L.hubs:
                self.priority[h] = -1
            for i in L.u_only_copies():
                cp = L.copies[i - 1]
                es = [G.edge_index(L.u, cp.a), G.edge_index(L.u, cp.b)]
                if None in es:
                    raise SolverError("G* layout does not match the graph")
                self._add_xor(es, 1)
        self.rank = rank

    def _add_xor(self, edges, parity):
        k = len(self.xor)
        self.xor.append((edges, parity))
        for e in edges:
            self.xor_of[e].append(k)

    def window(self, v):
        return (self.amask[v] >> self.c[v]) & ((1 << (self.u[v] + 1)) - 1)

    def assign(self, e, val, queue):
        self.status[e] = val
        self.trail.append(e)
        a, b = self.G.edges[e]
        self.u[a] -= 1
        self.u[b] -= 1
        if val:
            self.c[a] += 1
            self.c[b] += 1
        queue.append(a)
        queue.append(b)
        for k in self.xor_of[e]:
            queue.append(~k)

    def undo(self, mark):
        trail, status, c, u, edges = self.trail, self.status, self.c, self.u, self.G.edges
        while len(trail) > mark:
            e = trail.pop()
            a, b = edges[e]
            u[a] += 1
            u[b] += 1
            if status[e]:
                c[a] -= 1
                c[b] -= 1
            status[e] = -1

    def propagate(self, queue) -> bool:
        status = self.status
        while queue:
            item = queue.pop()
            if item < 0:
                edges, parity = self.xor[~item]
                open_ = [e for e in edges if status[e] == -1]
                total = sum(status[e] for e in edges if status[e] == 1)
                if not open_:
                    if total % 2 != parity:
                        return False
                elif len(open_) == 1:
                    self.assign(open_[0], (parity - total) % 2, queue)
                continue
            v = item
            w = self.window(v)
            if w == 0:
                return False
            uv = self.u[v]
            if uv == 0:
                continue
            if w == 1:
                val = 0
            elif w == 1 << uv:
                val = 1
            else:
                continue
            for e in self.adj[v]:
                if status[e] == -1:
                    self.assign(e, val, queue)
        return True

    def parity_ok(self) -> bool:
        G, u, c, status, adj = self.G, self.u, self.c, self.status, self.adj
        seen = [False] * G.n
        evens = 0x5555555555555555555555555555555555555555555555555555555555555555
        for s in range(G.n):
            if seen[s] or u[s] == 0:
                continue
            seen[s] = True
            stack = [s]
            pure = True
            par = 0
            while stack:
                x = stack.pop()
                if pure:
                    w = self.window(x)
                    # feasible final degrees c+offset; their parity is c+offset
                    if w & evens and w & (evens << 1):
                        pure = False
                    else:
                        par ^= 0 if w & evens else 1
                for e in adj[x]:
                    if status[e] == -1:
                        y = G.other(e, x)
                        if not seen[y]:
                            seen[y] = True
                            stack.append(y)
            if pure and par:
                return False
        return True

    def pick(self):
        best = None
        bkey = None
        u = self.u
        for v in range(self.G.n):
            if u[v] == 0:
                continue
            key = (self.priority[v], bin(self.window(v)).count("1"), self.rank[v])
            if bkey is None or key < bkey:
                best, bkey = v, key
        return best

    def tick(self):
        b = self.budget
        b.nodes += 1
        if b.max_nodes is not None and b.nodes > b.max_nodes:
            raise BudgetExceeded(self._stop())
        if b.nodes & 255 == 0 and self.deadline is not None and time.monotonic() > self.deadline:
            raise BudgetExceeded(self._stop())

    def _stop(self):
        self.budget.exceeded = True
        self.budget.elapsed = time.monotonic() - self.start
        return self.budget

    def dfs(self) -> bool:
        v = self.pick()
        if v is None:
            return True
        self.tick()
        e = next(e for e in self.adj[v] if self.status[e] == -1)
        w = self.window(v)
        first = 0 if w & 1 else 1
        for val in (first, 1 - first):
            mark = len(self.trail)
            queue: list[int] = []
            self.assign(e, val, queue)
            if self.propagate(queue) and (not self.rules.component_parity or self.parity_ok()):
                if self.dfs():
                    return True
            self.undo(mark)
        return False

    def run(self) -> Factor | None:
        queue = list(range(self.G.n))
        ok = self.propagate(queue) and (not self.rules.component_parity or self.parity_ok())
        found = ok and self.dfs()
        self.budget.elapsed = time.monotonic() - self.start
        if not found:
            return None
        return Factor(self.G, [e for e, s in enumerate(self.status) if s == 1])


def exact_h_factor(
    G: Graph,
    spec: DegreeSpec,
    budget: SearchBudget | None = None,
    pruning: PruningRules | None = None,
    *,
    seed=None,
) -> Factor | None:
    """Decide and construct an H-factor by exhaustive search.

    Returns the factor, or None once the search space is exhausted. Raises
    :class:`BudgetExceeded` if the budget runs out first. ``seed`` shuffles
    tie-breaking between equally constrained vertices and the edge order.
    """
    spec.validate(G)
    budget = budget if budget is not None else SearchBudget()
    rules = pruning if pruning is not None else PruningRules()
    if rules.gstar is not None and not all(all(h % 2 for h in a) for a in spec.allowed):
        raise SolverError("G* pruning is only sound for all-odd specs")
    limit = sys.getrecursionlimit()
    need = 2 * G.m + 200
    if need > limit:
        sys.setrecursionlimit(need)
    try:
        return _Search(G, spec, budget, rules, seed).run()
    finally:
        sys.setrecursionlimit(limit)


def solve(
    G: Graph,
    spec: DegreeSpec,
    method: str = "auto",
    budget: SearchBudget | None = None,
    pruning: PruningRules | None = None,
    *,
    seed=None,
) -> Factor | None:
    """Route to a matching reduction when the spec allows it, else search.

    ``method`` is ``auto``, ``matching`` or ``exact``.
    """
    if method not in ("auto", "matching", "exact"):
        raise SolverError(f"unknown method {method!r}")
    cls = classify_spec(G, spec)
    if method == "exact" or (method == "auto" and cls.kind == GENERAL):
        return exact_h_factor(G, spec, budget, pruning, seed=seed)
    if cls.kind == GENERAL:
        raise SolverError("matching route needs an interval or parity progression spec")
    bounds = bounds_of(spec)
    if bounds.is_exact():
        return f_factor(G, bounds.f)
    if cls.kind == INTERVAL:
        return gf_factor(G, bounds)
    return parity_factor(G, bounds)


def route_of(G: Graph, spec: DegreeSpec, method: str = "auto") -> str:
    """Name of the constructor ``solve`` would use."""
    cls = classify_spec(G, spec)
    if method == "exact" or (method == "auto" and cls.kind == GENERAL):
        return "exact"
    if bounds_of(spec).is_exact():
        return "f_factor"
    return "gf_factor" if cls.kind == INTERVAL else "parity_factor"


__all__ = [
    "BudgetExceeded",
    "CriterionError",
    "PruningRules",
    "SearchBudget",
    "SpecClass",
    "SolverError",
    "classify_spec",
    "exact_h_factor",
    "route_of",
    "solve",
]
