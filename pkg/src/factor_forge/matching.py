"""Maximum matching in general graphs and factor-to-matching reductions.

Each factor problem is turned into a perfect-matching question on a gadget
multigraph. Every source vertex v is blown up into

* externals ``X_v``: one per incident edge; the source edge uv becomes a
  single gadget edge between the matching externals of u and v,
* internals ``I_v``: complete bipartite to ``X_v``,
* optionally free vertices ``F_v`` (interval bounds) or a clique on some
  internals (parity bounds).

A perfect matching cross-matches exactly the externals of the chosen edges,
so the factor is read off the cross edges it uses.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from itertools import combinations

from .criteria import CriterionError, DegreeBounds
from .graph import Factor, Graph, GraphError, MultiGraph


@dataclass(frozen=True)
class Matching:
    host: MultiGraph
    matched: frozenset[int]

    def __post_init__(self):
        seen = set()
        for e in self.matched:
            u, v = self.host.edges[e]
            if u in seen or v in seen:
                raise GraphError(f"edge {e} shares a vertex with another matched edge")
            seen.update((u, v))

    @property
    def size(self) -> int:
        return len(self.matched)

    def mate(self) -> list[int]:
        out = [-1] * self.host.n
        for e in self.matched:
            u, v = self.host.edges[e]
            out[u], out[v] = v, u
        return out

    def is_perfect(self) -> bool:
        return 2 * self.size == self.host.n


class _Blossom:
    """Edmonds' augmenting-path search with blossom contraction.

    Vertices of a search tree that fails to reach an exposed vertex are
    retired: no later augmenting path can use them.
    """

    def __init__(self, G: MultiGraph):
        n = G.n
        self.n = n
        nb: list[list[int]] = [[] for _ in range(n)]
        for u, v in set(G.edges):
            nb[u].append(v)
            nb[v].append(u)
        for a in nb:
            a.sort()
        self.nb = nb
        self.match = [-1] * n
        self.dead = [False] * n
        self.base = list(range(n))
        self.parent = [-1] * n
        self.used = [False] * n
        self.in_blossom = [False] * n

    def greedy(self):
        match = self.match
        for v in range(self.n):
            if match[v] == -1:
                for w in self.nb[v]:
                    if match[w] == -1:
                        match[v], match[w] = w, v
                        break

    def _lca(self, a, b):
        base, match, parent = self.base, self.match, self.parent
        seen = set()
        while True:
            a = base[a]
            seen.add(a)
            if match[a] == -1:
                break
            a = parent[match[a]]
        while True:
            b = base[b]
            if b in seen:
                return b
            b = parent[match[b]]

    def _mark(self, v, b, child):
        base, match, parent, inb = self.base, self.match, self.parent, self.in_blossom
        while base[v] != b:
            inb[base[v]] = True
            inb[base[match[v]]] = True
            parent[v] = child
            child = match[v]
            v = parent[match[v]]

    def _search(self, root):
        """BFS for an augmenting path from ``root``; returns its end or -1."""
        base, match, parent, used, inb, nb, dead = (
            self.base, self.match, self.parent, self.used, self.in_blossom, self.nb, self.dead,
        )
        touched = [root]
        used[root] = True
        q = deque([root])
        end = -1
        while q and end == -1:
            v = q.popleft()
            for to in nb[v]:
                if dead[to] or base[v] == base[to] or match[v] == to:
                    continue
                if to == root or (match[to] != -1 and parent[match[to]] != -1):
                    cur = self._lca(v, to)
                    self._mark(v, cur, to)
                    self._mark(to, cur, v)
                    for i in touched:
                        if inb[base[i]]:
                            base[i] = cur
                    for i in touched:
                        if inb[i]:
                            inb[i] = False
                    # vertices newly inside the blossom become outer
                    for i in list(touched):
                        if base[i] == cur and not used[i]:
                            used[i] = True
                            q.append(i)
                elif parent[to] == -1:
                    parent[to] = v
                    touched.append(to)
                    if match[to] == -1:
                        end = to
                        break
                    nxt = match[to]
                    used[nxt] = True
                    touched.append(nxt)
                    q.append(nxt)
        return end, touched

    def _reset(self, touched):
        for i in touched:
            self.base[i] = i
            self.parent[i] = -1
            self.used[i] = False
            self.in_blossom[i] = False

    def _augment(self, end):
        match, parent = self.match, self.parent
        v = end
        while v != -1:
            pv = parent[v]
            ppv = match[pv]
            match[v], match[pv] = pv, v
            v = ppv

    def run(self, stop_on_failure=False) -> bool:
        """Grow to a maximum matching. Returns False if some vertex must stay exposed."""
        self.greedy()
        perfect = True
        for root in range(self.n):
            if self.match[root] != -1 or self.dead[root]:
                continue
            end, touched = self._search(root)
            if end != -1:
                self._augment(end)
                self._reset(touched)
            else:
                perfect = False
                for i in touched:
                    self.dead[i] = True
                self._reset(touched)
                if stop_on_failure:
                    return False
        return perfect


def _matching_from_mates(G: MultiGraph, mate: list[int]) -> Matching:
    chosen = set()
    done = set()
    for e, (u, v) in enumerate(G.edges):
        if mate[u] == v and u not in done:
            chosen.add(e)
            done.update((u, v))
    return Matching(G, frozenset(chosen))


def max_matching(G: MultiGraph) -> Matching:
    """Maximum-cardinality matching (edge indices of ``G``)."""
    b = _Blossom(G)
    b.run()
    return _matching_from_mates(G, b.match)


def perfect_matching(G: MultiGraph) -> Matching | None:
    """A perfect matching of ``G`` or None; stops at the first unmatchable vertex."""
    if G.n % 2:
        return None
    b = _Blossom(G)
    if not b.run(stop_on_failure=True):
        return None
    return _matching_from_mates(G, b.match)


@dataclass
class GadgetMap:
    """Bookkeeping for a factor-to-matching reduction."""

    gadget: MultiGraph
    origin: Graph
    cross_edges: dict[int, int]
    externals: list[list[int]]
    internals: list[list[int]]
    frees: list[list[int]]
    sink: list[int] = field(default_factory=list)

    @property
    def vertex_blocks(self) -> list[tuple[list[int], list[int], list[int]]]:
        """(externals, internals, frees) for each source vertex."""
        return list(zip(self.externals, self.internals, self.frees))

    def factor_from(self, m: Matching) -> Factor:
        back = {ge: se for se, ge in self.cross_edges.items()}
        return Factor(self.origin, [back[e] for e in m.matched if e in back])


class _Builder:
    def __init__(self):
        self.n = 0
        self.edges: list[tuple[int, int]] = []

    def new(self, k):
        out = list(range(self.n, self.n + k))
        self.n += k
        return out

    def add(self, u, v):
        self.edges.append((u, v))
        return len(self.edges) - 1


def _base_gadget(G: Graph, internal_counts):
    """Externals, internals (complete bipartite per vertex) and cross edges."""
    b = _Builder()
    externals = []
    slot = {}
    for v in range(G.n):
        xs = b.new(G.degree(v))
        externals.append(xs)
        for x, e in zip(xs, G.adj[v]):
            slot[(v, e)] = x
    internals = []
    for v in range(G.n):
        ins = b.new(internal_counts[v])
        internals.append(ins)
        for i in ins:
            for x in externals[v]:
                b.add(i, x)
    cross = {}
    for e, (u, v) in enumerate(G.edges):
        cross[e] = b.add(slot[(u, e)], slot[(v, e)])
    return b, externals, internals, cross


def f_factor_gadget(G: Graph, f) -> GadgetMap:
    b, X, I, cross = _base_gadget(G, [G.degree(v) - f[v] for v in range(G.n)])
    return GadgetMap(MultiGraph(b.n, b.edges), G, cross, X, I, [[] for _ in range(G.n)])


def interval_gadget(G: Graph, bounds: DegreeBounds) -> GadgetMap:
    g, f = bounds.g, bounds.f
    b, X, I, cross = _base_gadget(G, [G.degree(v) - g[v] for v in range(G.n)])
    frees = []
    for v in range(G.n):
        fs = b.new(f[v] - g[v])
        frees.append(fs)
        for x in fs:
            for i in I[v]:
                b.add(x, i)
    slack = sum(f) - sum(g)
    size = slack + ((slack - sum(f)) % 2)
    sink = b.new(size)
    for z1, z2 in combinations(sink, 2):
        b.add(z1, z2)
    for fs in frees:
        for x in fs:
            for z in sink:
                b.add(x, z)
    return GadgetMap(MultiGraph(b.n, b.edges), G, cross, X, I, frees, sink)


def parity_gadget(G: Graph, bounds: DegreeBounds) -> GadgetMap:
    g, f = bounds.g, bounds.f
    b, X, I, cross = _base_gadget(G, [G.degree(v) - g[v] for v in range(G.n)])
    for v in range(G.n):
        for i1, i2 in combinations(I[v][: f[v] - g[v]], 2):
            b.add(i1, i2)
    return GadgetMap(MultiGraph(b.n, b.edges), G, cross, X, I, [[] for _ in range(G.n)])


def _solve_gadget(gm: GadgetMap) -> Factor | None:
    m = perfect_matching(gm.gadget)
    if m is None:
        return None
    return gm.factor_from(m)


def f_factor(G: Graph, f) -> Factor | None:
    """Spanning subgraph with degree exactly f(v) at every v, or None."""
    f = tuple(f)
    if len(f) != G.n:
        raise CriterionError("f needs one entry per vertex")
    for v in range(G.n):
        if not 0 <= f[v] <= G.degree(v):
            raise CriterionError(f"vertex {v}: f={f[v]} outside [0, {G.degree(v)}]")
    if sum(f) % 2:
        return None
    return _solve_gadget(f_factor_gadget(G, f))


def gf_factor(G: Graph, bounds: DegreeBounds) -> Factor | None:
    """Spanning subgraph with g(v) <= degree <= f(v), or None."""
    bounds.validate(G)
    if bounds.is_exact():
        return f_factor(G, bounds.f)
    return _solve_gadget(interval_gadget(G, bounds))


def parity_factor(G: Graph, bounds: DegreeBounds) -> Factor | None:
    """Spanning subgraph with degree in {g, g+2, ..., f} at every v, or None."""
    bounds.validate(G, parity=True)
    if bounds.is_exact():
        return f_factor(G, bounds.f)
    if sum(bounds.g) % 2:
        return None
    return _solve_gadget(parity_gadget(G, bounds))
