"""Existence criteria for degree-constrained factors.

``gamma`` and ``eta`` are Lovasz's deficiency functions for (g,f)-factors and
(g,f)-parity-factors; a factor exists iff the deficiency is nonnegative on
every pair of disjoint vertex sets. ``criterion_exhaustive`` checks that
directly for small graphs and returns the first violating pair it finds.
"""
from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field
from fractions import Fraction

from .graph import Graph, MultiGraph, Orientation, components, edge_boundary

DEFAULT_CAP = 15


class CriterionError(ValueError):
    pass


@dataclass(frozen=True)
class DegreeBounds:
    g: tuple[int, ...]
    f: tuple[int, ...]

    def __init__(self, g: Sequence[int], f: Sequence[int]):
        if len(g) != len(f):
            raise CriterionError("g and f must have one entry per vertex")
        object.__setattr__(self, "g", tuple(int(x) for x in g))
        object.__setattr__(self, "f", tuple(int(x) for x in f))

    @classmethod
    def uniform(cls, n: int, g: int, f: int) -> "DegreeBounds":
        return cls([g] * n, [f] * n)

    @property
    def n(self) -> int:
        return len(self.g)

    def is_exact(self) -> bool:
        return self.g == self.f

    def is_parity(self) -> bool:
        return all((a - b) % 2 == 0 for a, b in zip(self.g, self.f))

    def validate(self, G: MultiGraph, parity: bool = False) -> None:
        if self.n != G.n:
            raise CriterionError(f"bounds cover {self.n} vertices, graph has {G.n}")
        for v, (a, b) in enumerate(zip(self.g, self.f)):
            if not 0 <= a <= b <= G.degree(v):
                raise CriterionError(
                    f"vertex {v}: need 0 <= g={a} <= f={b} <= deg={G.degree(v)}"
                )
            if parity and (b - a) % 2:
                raise CriterionError(f"vertex {v}: g={a} and f={b} differ in parity")

    def allowed(self, parity: bool = False) -> list[frozenset[int]]:
        step = 2 if parity else 1
        return [frozenset(range(a, b + 1, step)) for a, b in zip(self.g, self.f)]


@dataclass(frozen=True)
class DegreeSpec:
    """Allowed degree set per vertex."""

    allowed: tuple[frozenset[int], ...]

    def __init__(self, allowed: Iterable[Iterable[int]]):
        object.__setattr__(self, "allowed", tuple(frozenset(int(x) for x in a) for a in allowed))

    @classmethod
    def uniform(cls, n: int, values: Iterable[int]) -> "DegreeSpec":
        vals = frozenset(values)
        return cls([vals] * n)

    @classmethod
    def from_bounds(cls, bounds: DegreeBounds, parity: bool = False) -> "DegreeSpec":
        return cls(bounds.allowed(parity))

    @property
    def n(self) -> int:
        return len(self.allowed)

    def __getitem__(self, v: int) -> frozenset[int]:
        return self.allowed[v]

    @property
    def min_value(self) -> int:
        """Smallest allowed degree over all vertices (mH)."""
        return min(min(a) for a in self.allowed)

    @property
    def max_value(self) -> int:
        """Largest allowed degree over all vertices (MH)."""
        return max(max(a) for a in self.allowed)

    def validate(self, G: MultiGraph) -> None:
        if self.n != G.n:
            raise CriterionError(f"spec covers {self.n} vertices, graph has {G.n}")
        for v, a in enumerate(self.allowed):
            if not a:
                raise CriterionError(f"vertex {v} has an empty allowed set")
            if min(a) < 0 or max(a) > G.degree(v):
                raise CriterionError(
                    f"vertex {v}: allowed {sorted(a)} not within [0, {G.degree(v)}]"
                )

    def admits(self, degrees: Sequence[int]) -> bool:
        return all(d in a for d, a in zip(degrees, self.allowed))


@dataclass(frozen=True)
class Witness:
    """A disjoint pair (S, T) on which the deficiency is negative."""

    S: frozenset[int]
    T: frozenset[int]
    value: int
    mode: str
    bad_components: tuple[tuple[int, ...], ...] = field(default=())


def _check_disjoint(S, T) -> tuple[set[int], set[int]]:
    S, T = set(S), set(T)
    if S & T:
        raise CriterionError(f"S and T overlap on {sorted(S & T)}")
    return S, T


def _odd_components(G, S, T, f, starred, g):
    bad = []
    for comp in components(G, S | T):
        if starred and any(g[c] != f[c] for c in comp):
            continue
        if (sum(f[c] for c in comp) + edge_boundary(G, comp, T)) % 2 == 1:
            bad.append(tuple(comp))
    return bad


def q_count(G: MultiGraph, S, T, f: Sequence[int], starred: bool = False, g: Sequence[int] | None = None) -> int:
    """Components C of G-S-T with sum(f on C) + e(C, T) odd.

    With ``starred`` only components where g == f throughout are counted.
    """
    S, T = _check_disjoint(S, T)
    if starred and g is None:
        raise CriterionError("starred count needs g")
    return len(_odd_components(G, S, T, f, starred, g))


def _deficiency(G, S, T, bounds: DegreeBounds, starred: bool):
    S, T = _check_disjoint(S, T)
    g, f = bounds.g, bounds.f
    base = (
        sum(f[s] for s in S)
        + sum(G.degree(t) - g[t] for t in T)
        - edge_boundary(G, S, T)
    )
    bad = _odd_components(G, S, T, f, starred, g)
    return base - len(bad), bad


def eta(G: MultiGraph, S, T, bounds: DegreeBounds) -> int:
    """Parity-factor deficiency at (S, T)."""
    if not bounds.is_parity():
        raise CriterionError("eta needs g and f of equal parity at every vertex")
    return _deficiency(G, S, T, bounds, starred=False)[0]


def gamma(G: MultiGraph, S, T, bounds: DegreeBounds) -> int:
    """(g,f)-factor deficiency at (S, T)."""
    return _deficiency(G, S, T, bounds, starred=True)[0]


def witness_at(G: MultiGraph, S, T, bounds: DegreeBounds, mode: str) -> Witness:
    value, bad = _deficiency(G, S, T, bounds, starred=(mode == "gf"))
    return Witness(frozenset(S), frozenset(T), value, mode, tuple(bad))


def criterion_exhaustive(G: MultiGraph, bounds: DegreeBounds, mode: str = "gf", cap: int = DEFAULT_CAP) -> Witness | None:
    """Search all disjoint (S, T) for a negative deficiency.

    Returns None when the criterion holds (so the factor exists), otherwise
    the witness minimizing ``(|S u T|, mask(S), mask(T))``.
    """
    if mode not in ("gf", "parity"):
        raise CriterionError(f"unknown mode {mode!r}")
    n = G.n
    if n > cap:
        raise CriterionError(f"{n} vertices exceeds the exhaustive cap of {cap}")
    if bounds.n != n:
        raise CriterionError("bounds do not match the graph")
    if mode == "parity" and not bounds.is_parity():
        raise CriterionError("parity mode needs g and f of equal parity at every vertex")
    starred = mode == "gf"
    g, f = bounds.g, bounds.f
    deg = G.degrees

    # neighbour multiplicity masks: edge counts between a vertex and a set
    # need multiplicities, so keep per-vertex neighbour lists too.
    nbrs = [G.neighbors(v) for v in range(n)]
    full = (1 << n) - 1
    fbit = [f[v] & 1 for v in range(n)]
    eq = [g[v] == f[v] for v in range(n)]

    def comps_of(removed: int):
        out = []
        seen = removed
        for s in range(n):
            if seen >> s & 1:
                continue
            mask = 1 << s
            seen |= mask
            stack = [s]
            members = [s]
            while stack:
                x = stack.pop()
                for y in nbrs[x]:
                    if not seen >> y & 1:
                        seen |= 1 << y
                        mask |= 1 << y
                        stack.append(y)
                        members.append(y)
            if starred and not all(eq[c] for c in members):
                continue
            par = sum(fbit[c] for c in members) & 1
            out.append((mask, par))
        return out

    def e_into(vs, mask):
        return sum(1 for x in vs for y in nbrs[x] if mask >> y & 1)

    by_size: list[list[int]] = [[] for _ in range(n + 1)]
    for W in range(full + 1):
        by_size[bin(W).count("1")].append(W)

    for size in range(n + 1):
        best = None
        for W in by_size[size]:
            wverts = [v for v in range(n) if W >> v & 1]
            comps = comps_of(W)
            # enumerate S as submask of W
            S = W
            while True:
                T = W ^ S
                if best is None or (S, T) < best:
                    sverts = [v for v in wverts if S >> v & 1]
                    tverts = [v for v in wverts if T >> v & 1]
                    val = sum(f[s] for s in sverts) + sum(deg[t] - g[t] for t in tverts)
                    val -= e_into(sverts, T)
                    if val < len(comps):
                        q = 0
                        for cmask, par in comps:
                            if (par + e_into(tverts, cmask)) & 1:
                                q += 1
                        if val - q < 0:
                            best = (S, T)
                if S == 0:
                    break
                S = (S - 1) & W
        if best is not None:
            S, T = best
            Sset = [v for v in range(n) if S >> v & 1]
            Tset = [v for v in range(n) if T >> v & 1]
            return witness_at(G, Sset, Tset, bounds, mode)
    return None


def sv_condition(G: MultiGraph, spec: DegreeSpec) -> bool:
    """|H(v)| > ceil(d(v)/2) everywhere."""
    return all(len(spec[v]) > -(-G.degree(v) // 2) for v in range(G.n))


def gap_count(degree: int, allowed: Iterable[int]) -> int:
    """How many of 0..degree are not allowed."""
    allowed = set(allowed)
    return sum(1 for k in range(degree + 1) if k not in allowed)


def fls_condition(G: MultiGraph, orientation: Orientation, spec: DegreeSpec) -> bool:
    """In-degree covers the number of forbidden degrees at every vertex."""
    if orientation.host is not G and orientation.host != G:
        raise CriterionError("orientation belongs to a different graph")
    return all(
        orientation.indeg[v] >= gap_count(G.degree(v), spec[v]) for v in range(G.n)
    )


def main_condition(G: Graph, spec: DegreeSpec) -> bool:
    """mH >= 1, MH <= r and 2|H(v)| >= MH - mH + 3 for an {r, r+1}-graph."""
    r = G.near_regular_degree()
    if r is None:
        raise CriterionError("graph is not an {r, r+1}-graph")
    lo, hi = spec.min_value, spec.max_value
    if lo < 1 or hi > r:
        return False
    return all(2 * len(a) >= hi - lo + 3 for a in spec.allowed)


def main_condition_margin(spec: DegreeSpec) -> Fraction:
    """Smallest |H(v)| - (MH - mH + 3)/2; nonnegative iff the size test passes."""
    need = Fraction(spec.max_value - spec.min_value + 3, 2)
    return min(len(a) for a in spec.allowed) - need
