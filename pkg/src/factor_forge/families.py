"""Graph families: deterministic constructions and seeded random generators."""
from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations

from .graph import Graph, GraphError, is_connected


class GenerationError(GraphError):
    pass


def complete_graph(n: int) -> Graph:
    return Graph(n, combinations(range(n), 2))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GenerationError("a cycle needs at least 3 vertices")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph(10, outer + spokes + inner)


def circulant(n: int, offsets) -> Graph:
    """Vertex i joined to i +- o (mod n) for every offset o."""
    offsets = list(offsets)
    offs = sorted(set(offsets))
    if len(offs) != len(offsets):
        raise GenerationError("offsets must be distinct")
    for o in offs:
        if not 1 <= o <= n // 2:
            raise GenerationError(f"offset {o} outside [1, {n // 2}]")
    edges = set()
    for i in range(n):
        for o in offs:
            j = (i + o) % n
            edges.add((min(i, j), max(i, j)))
    return Graph(n, sorted(edges))


def _check_even_r(r: int) -> None:
    if r < 4 or r % 2:
        raise GenerationError(f"r must be an even integer >= 4, got {r}")


def j_graph(r: int) -> tuple[Graph, int, int]:
    """K_{r+1} minus the edge between its two highest vertices.

    Returns ``(graph, a, b)`` where ``a, b`` are the ends of the removed edge.
    """
    _check_even_r(r)
    a, b = r - 1, r
    edges = [e for e in combinations(range(r + 1), 2) if e != (a, b)]
    return Graph(r + 1, edges), a, b


@dataclass(frozen=True)
class JCopy:
    vertices: tuple[int, ...]
    a: int
    b: int


@dataclass(frozen=True)
class GStarLayout:
    """The r-regular graph built from r copies of J wired to two hubs.

    ``copies[i]`` is the copy numbered ``i + 1``; ``hubs`` is ``(u, v)``.
    """

    r: int
    graph: Graph
    copies: tuple[JCopy, ...]
    hubs: tuple[int, int]

    @property
    def u(self) -> int:
        return self.hubs[0]

    @property
    def v(self) -> int:
        return self.hubs[1]

    def copy_index_of(self, w: int) -> int | None:
        """1-based copy number containing ``w``, or None for the hubs."""
        if w in self.hubs:
            return None
        return w // (self.r + 1) + 1

    def u_only_copies(self) -> range:
        """Copy numbers i with both a_i and b_i adjacent to u."""
        return range(1, self.r // 2)

    def v_only_copies(self) -> range:
        return range(self.r // 2, self.r - 1)


def gstar(r: int) -> GStarLayout:
    """Copies J_1..J_r occupy blocks of r+1 vertices; u, v come last."""
    _check_even_r(r)
    J, a, b = j_graph(r)
    size = r + 1
    edges = []
    copies = []
    for i in range(r):
        off = i * size
        edges.extend((x + off, y + off) for x, y in J.edges)
        copies.append(JCopy(tuple(range(off, off + size)), a + off, b + off))
    u, v = r * size, r * size + 1
    half = r // 2
    # copies are 1-based below to keep the wiring readable
    A = {i + 1: c.a for i, c in enumerate(copies)}
    B = {i + 1: c.b for i, c in enumerate(copies)}
    nu = [w for i in range(1, half) for w in (A[i], B[i])] + [A[r - 1], A[r]]
    nv = [w for i in range(half, r - 1) for w in (A[i], B[i])] + [B[r - 1], B[r]]
    edges.extend((u, w) for w in nu)
    edges.extend((v, w) for w in nv)
    return GStarLayout(r, Graph(r * size + 2, edges), tuple(copies), (u, v))


def hstar(r: int) -> frozenset[int]:
    """Odd degrees in [1, r] other than r/2 - 1, r/2, r/2 + 1."""
    _check_even_r(r)
    banned = {r // 2 - 1, r // 2, r // 2 + 1}
    return frozenset(k for k in range(1, r + 1, 2) if k not in banned)


def odd_upto(n: int) -> frozenset[int]:
    return frozenset(range(1, n + 1, 2))


def is_graphical(seq) -> bool:
    """Erdos-Gallai test."""
    d = sorted(seq, reverse=True)
    if any(x < 0 for x in d) or sum(d) % 2:
        return False
    n = len(d)
    total = 0
    for k in range(1, n + 1):
        total += d[k - 1]
        rest = sum(min(x, k) for x in d[k:])
        if total > k * (k - 1) + rest:
            return False
    return True


def _pair_stubs(degrees, rng: random.Random, restarts: int):
    """Random simple realization of a degree sequence by stub pairing.

    Invalid pairs (loops, repeats) are redrawn; a dead end restarts the whole
    pairing. Returns None when every restart dead-ends.
    """
    n = len(degrees)
    for _ in range(restarts):
        stubs = [v for v in range(n) for _ in range(degrees[v])]
        edges: set[tuple[int, int]] = set()
        ok = True
        while stubs:
            rng.shuffle(stubs)
            leftover = []
            it = iter(stubs)
            for x, y in zip(it, it):
                e = (min(x, y), max(x, y))
                if x != y and e not in edges:
                    edges.add(e)
                else:
                    leftover.extend((x, y))
            if not leftover:
                break
            if not _has_valid_pair(leftover, edges):
                ok = False
                break
            stubs = leftover
        if ok:
            return sorted(edges)
    return None


def _has_valid_pair(stubs, edges) -> bool:
    verts = sorted(set(stubs))
    for i, x in enumerate(verts):
        for y in verts[i + 1:]:
            if (x, y) not in edges:
                return True
    return False


def random_regular(r: int, n: int, seed=None, *, attempts: int = 10_000) -> Graph:
    """Connected simple r-regular graph on n vertices, reproducible per seed."""
    if r < 0 or n <= 0:
        raise GenerationError("need r >= 0 and n > 0")
    if (n * r) % 2:
        raise GenerationError(f"n*r = {n * r} is odd")
    if r >= n:
        raise GenerationError(f"degree {r} must be smaller than n={n}")
    if r < 2 and n > 2:
        raise GenerationError(f"no connected {r}-regular graph on {n} vertices")
    rng = random.Random(seed)
    for _ in range(attempts):
        edges = _pair_stubs([r] * n, rng, restarts=1)
        if edges is None:
            continue
        G = Graph(n, edges)
        if is_connected(G):
            return G
    raise GenerationError(f"no connected {r}-regular graph on {n} vertices after {attempts} attempts")


def random_near_regular(r: int, n: int, k_extra: int, seed=None, *, attempts: int = 10_000) -> Graph:
    """Simple {r, r+1}-graph whose first ``k_extra`` vertices have degree r+1."""
    if not 0 <= k_extra <= n:
        raise GenerationError("k_extra must lie in [0, n]")
    degrees = [r + 1] * k_extra + [r] * (n - k_extra)
    if sum(degrees) % 2:
        raise GenerationError("degree sum is odd")
    if max(degrees, default=0) >= n or not is_graphical(degrees):
        raise GenerationError(f"degree sequence {degrees} is not graphical")
    rng = random.Random(seed)
    edges = _pair_stubs(degrees, rng, restarts=attempts)
    if edges is None:
        raise GenerationError(f"pairing failed after {attempts} attempts")
    return Graph(n, edges)
