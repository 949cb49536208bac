"""Graph containers and the structural queries the factor machinery relies on.

Vertices are dense 0-based integers. Edges are identified by their position
in the edge sequence, so a :class:`Factor` is just a set of edge indices.
"""
from __future__ import annotations

from collections import deque
from collections.abc import Iterable, Sequence


class GraphError(ValueError):
    pass


class MultiGraph:
    """Undirected graph on ``range(n)`` whose edges carry a stable index.

    Parallel edges are allowed, self-loops are not.
    """

    allow_parallel = True

    __slots__ = ("n", "edges", "adj", "_degrees")

    def __init__(self, n: int, edges: Iterable[Sequence[int]] = ()):
        if n < 0:
            raise GraphError(f"vertex count must be nonnegative, got {n}")
        self.n = n
        normalized = []
        seen = set()
        for e in edges:
            u, v = int(e[0]), int(e[1])
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            if u > v:
                u, v = v, u
            if not self.allow_parallel:
                if (u, v) in seen:
                    raise GraphError(f"parallel edge ({u}, {v})")
                seen.add((u, v))
            normalized.append((u, v))
        self.edges: tuple[tuple[int, int], ...] = tuple(normalized)
        adj: list[list[int]] = [[] for _ in range(n)]
        for i, (u, v) in enumerate(self.edges):
            adj[u].append(i)
            adj[v].append(i)
        self.adj = tuple(tuple(a) for a in adj)
        self._degrees = tuple(len(a) for a in adj)

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def degrees(self) -> tuple[int, ...]:
        return self._degrees

    def degree(self, v: int) -> int:
        return self._degrees[v]

    def other(self, e: int, v: int) -> int:
        a, b = self.edges[e]
        return b if a == v else a

    def neighbors(self, v: int) -> list[int]:
        return [self.other(e, v) for e in self.adj[v]]

    def vertices(self) -> range:
        return range(self.n)

    def subgraph(self, edge_ids: Iterable[int]) -> tuple["MultiGraph", list[int]]:
        """Spanning subgraph on the given edges, plus the map new edge -> old edge."""
        keep = sorted(set(edge_ids))
        return type(self)(self.n, [self.edges[i] for i in keep]), keep

    def __eq__(self, other):
        return (
            type(other) is type(self)
            and other.n == self.n
            and other.edges == self.edges
        )

    def __hash__(self):
        return hash((type(self).__name__, self.n, self.edges))

    def __repr__(self):
        return f"{type(self).__name__}(n={self.n}, m={self.m})"


class Graph(MultiGraph):
    """Simple undirected graph: no loops, no parallel edges."""

    allow_parallel = False

    __slots__ = ("_index",)

    def __init__(self, n: int, edges: Iterable[Sequence[int]] = ()):
        super().__init__(n, edges)
        self._index = {e: i for i, e in enumerate(self.edges)}

    def edge_index(self, u: int, v: int) -> int | None:
        if u > v:
            u, v = v, u
        return self._index.get((u, v))

    def has_edge(self, u: int, v: int) -> bool:
        return self.edge_index(u, v) is not None

    def degree_range(self) -> tuple[int, int]:
        if self.n == 0:
            return 0, 0
        return min(self._degrees), max(self._degrees)

    def is_regular(self, r: int | None = None) -> bool:
        lo, hi = self.degree_range()
        return lo == hi and (r is None or lo == r)

    def near_regular_degree(self) -> int | None:
        """The ``r`` for which this is an {r, r+1}-graph, or None.

        A regular graph of degree ``d`` is reported with ``r = d``.
        """
        if self.n == 0:
            return None
        lo, hi = self.degree_range()
        return lo if hi - lo <= 1 else None

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Graph with vertex ``v`` renamed ``perm[v]``; edge order is kept."""
        return Graph(self.n, [(perm[u], perm[v]) for u, v in self.edges])


class Factor:
    """A spanning subgraph of ``host`` given by a set of host edge indices."""

    __slots__ = ("host", "selected", "degrees")

    def __init__(self, host: MultiGraph, selected: Iterable[int]):
        sel = frozenset(int(e) for e in selected)
        for e in sel:
            if not 0 <= e < host.m:
                raise GraphError(f"edge index {e} not in host")
        deg = [0] * host.n
        for e in sel:
            u, v = host.edges[e]
            deg[u] += 1
            deg[v] += 1
        self.host = host
        self.selected = sel
        self.degrees: tuple[int, ...] = tuple(deg)

    def degree(self, v: int) -> int:
        return self.degrees[v]

    @property
    def size(self) -> int:
        return len(self.selected)

    def edge_list(self) -> list[tuple[int, int]]:
        return [self.host.edges[e] for e in sorted(self.selected)]

    def as_graph(self) -> tuple[Graph, list[int]]:
        """The factor as a standalone graph, plus new edge -> host edge map."""
        keep = sorted(self.selected)
        return Graph(self.host.n, [self.host.edges[e] for e in keep]), keep

    def complement(self) -> "Factor":
        return Factor(self.host, set(range(self.host.m)) - self.selected)

    def satisfies(self, allowed: Sequence[Iterable[int]]) -> bool:
        return all(d in set(a) for d, a in zip(self.degrees, allowed))

    def __eq__(self, other):
        return isinstance(other, Factor) and other.host == self.host and other.selected == self.selected

    def __hash__(self):
        return hash((self.host, self.selected))

    def __repr__(self):
        return f"Factor(host={self.host!r}, edges={len(self.selected)})"


class Orientation:
    """Direction assignment for every edge of ``host``."""

    __slots__ = ("host", "heads", "indeg")

    def __init__(self, host: MultiGraph, heads: Sequence[int]):
        if len(heads) != host.m:
            raise GraphError("every edge needs exactly one head")
        indeg = [0] * host.n
        for e, h in enumerate(heads):
            if h not in host.edges[e]:
                raise GraphError(f"head {h} is not an endpoint of edge {e}")
            indeg[h] += 1
        self.host = host
        self.heads = tuple(heads)
        self.indeg: tuple[int, ...] = tuple(indeg)

    def arc(self, e: int) -> tuple[int, int]:
        h = self.heads[e]
        return self.host.other(e, h), h

    def arcs(self) -> list[tuple[int, int]]:
        return [self.arc(e) for e in range(self.host.m)]

    def outdeg(self, v: int) -> int:
        return self.host.degree(v) - self.indeg[v]


def _check_vertices(G: MultiGraph, vs: Iterable[int]) -> set[int]:
    out = set()
    for v in vs:
        if not 0 <= v < G.n:
            raise GraphError(f"vertex {v} out of range for n={G.n}")
        out.add(v)
    return out


def edge_boundary(G: MultiGraph, S: Iterable[int], T: Iterable[int]) -> int:
    """Number of edges with one end in S and the other in T.

    An edge with both ends in S & T is counted once.
    """
    S = _check_vertices(G, S)
    T = _check_vertices(G, T)
    count = 0
    for u, v in G.edges:
        if (u in S and v in T) or (u in T and v in S):
            count += 1
    return count


def components(G: MultiGraph, removed: Iterable[int] = ()) -> list[list[int]]:
    """Connected components of ``G - removed``, ordered by smallest vertex."""
    gone = _check_vertices(G, removed)
    seen = [False] * G.n
    for v in gone:
        seen[v] = True
    out = []
    for s in range(G.n):
        if seen[s]:
            continue
        seen[s] = True
        comp = [s]
        stack = [s]
        while stack:
            x = stack.pop()
            for e in G.adj[x]:
                y = G.other(e, x)
                if not seen[y]:
                    seen[y] = True
                    comp.append(y)
                    stack.append(y)
        comp.sort()
        out.append(comp)
    return out


def is_connected(G: MultiGraph) -> bool:
    return G.n <= 1 or len(components(G)) == 1


def is_independent(G: MultiGraph, U: Iterable[int]) -> bool:
    U = _check_vertices(G, U)
    return not any(u in U and v in U for u, v in G.edges)


def eulerian_orientation(G: MultiGraph) -> Orientation:
    """Orient G so that every vertex gets in-degree at least floor(d/2).

    Odd-degree vertices are joined to an auxiliary vertex, each component of
    the augmented graph is traversed by an Euler circuit, and the arcs are
    read off the circuit. The auxiliary edges are dropped afterwards, which
    costs each odd vertex at most one in-arc.
    """
    n = G.n
    aux = n
    ends = list(G.edges)
    odd = [v for v in range(n) if G.degree(v) % 2]
    for v in odd:
        ends.append((v, aux))
    adj: list[list[int]] = [[] for _ in range(n + 1)]
    for i, (u, v) in enumerate(ends):
        adj[u].append(i)
        adj[v].append(i)

    used = [False] * len(ends)
    ptr = [0] * (n + 1)
    heads = [-1] * len(ends)
    visited = [False] * (n + 1)

    starts = odd + [v for v in range(n) if not G.degree(v) % 2]
    for start in starts:
        if visited[start] or not adj[start]:
            continue
        # Hierholzer; the arc entering a vertex on the circuit is recorded
        # when the edge is first traversed, which already yields a closed walk
        # orientation per edge.
        stack = [start]
        visited[start] = True
        while stack:
            x = stack[-1]
            a = adj[x]
            while ptr[x] < len(a) and used[a[ptr[x]]]:
                ptr[x] += 1
            if ptr[x] == len(a):
                stack.pop()
                continue
            e = a[ptr[x]]
            used[e] = True
            u, v = ends[e]
            y = v if u == x else u
            heads[e] = y
            visited[y] = True
            stack.append(y)
    return Orientation(G, heads[: G.m])


def edge_connectivity(G: MultiGraph) -> int:
    """Global minimum edge cut, via unit-capacity max-flow from vertex 0."""
    if G.n < 2:
        raise GraphError("edge connectivity needs at least two vertices")
    best = None
    for t in range(1, G.n):
        flow = _unit_max_flow(G, 0, t)
        if best is None or flow < best:
            best = flow
            if best == 0:
                break
    return best


def _unit_max_flow(G: MultiGraph, s: int, t: int) -> int:
    # Each undirected edge is a pair of opposite arcs of capacity 1.
    # flow[e] in {-1, 0, 1}: +1 means one unit from edges[e][0] to edges[e][1].
    flow = [0] * G.m
    total = 0
    while True:
        prev = [-1] * G.n
        prev[s] = -2
        q = deque([s])
        while q and prev[t] == -1:
            x = q.popleft()
            for e in G.adj[x]:
                a, b = G.edges[e]
                y = b if a == x else a
                if prev[y] != -1:
                    continue
                # residual capacity from x to y
                cap = 1 - flow[e] if x == a else 1 + flow[e]
                if cap > 0:
                    prev[y] = e
                    q.append(y)
        if prev[t] == -1:
            return total
        y = t
        while y != s:
            e = prev[y]
            a, b = G.edges[e]
            x = a if b == y else b
            flow[e] += 1 if x == a else -1
            y = x
        total += 1
