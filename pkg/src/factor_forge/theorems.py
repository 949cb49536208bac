"""Constructive pipelines for the classical factor theorems on regular graphs.

The main entry point is :func:`main_h_factor`, which builds an H-factor of an
{r, r+1}-graph whenever every |H(v)| is at least (MH - mH + 3)/2:

1. an {M, M+1}-factor F with no two degree-(M+1) vertices adjacent,
2. an {m-1, m}-factor F' of F that gives every heavy vertex degree m,
3. F'' = F - F', whose degrees are M-m or M-m+1,
4. an orientation of F'' with in-degree >= floor(degree/2),
5. the shifted spec H'(v) = H(v) - d_F'(v), which the orientation covers,
6. an H'-factor G' of F'', and finally F' + G'.
"""
from __future__ import annotations

import warnings
from dataclasses import dataclass, field

from .criteria import DegreeBounds, DegreeSpec, fls_condition, main_condition
from .graph import (
    Factor,
    Graph,
    Orientation,
    edge_connectivity,
    eulerian_orientation,
    is_connected,
    is_independent,
)
from .matching import MultiGraph, f_factor, gf_factor, max_matching, parity_factor
from .solver import SearchBudget, exact_h_factor, solve


class PreconditionError(ValueError):
    pass


class TheoremViolation(AssertionError):
    """A construction that a theorem guarantees came back empty or invalid."""


class OutsideLemmaRange(UserWarning):
    pass


def _near_regular(G: Graph) -> int:
    r = G.near_regular_degree()
    if r is None:
        raise PreconditionError("graph is not an {r, r+1}-graph")
    return r


def _regular(G: Graph) -> int:
    lo, hi = G.degree_range()
    if lo != hi:
        raise PreconditionError("graph is not regular")
    return lo


def petersen_k_factor(G: Graph, k: int) -> Factor:
    """k-factor of an even-regular graph, for even 2 <= k <= r.

    An Euler orientation gives every vertex r/2 in- and out-arcs. Splitting
    each vertex into an out-copy and an in-copy turns the arcs into an
    r/2-regular bipartite graph; each perfect matching of it pulls back to a
    2-factor, and peeling off k/2 of them yields the k-factor.
    """
    r = _regular(G)
    if r % 2:
        raise PreconditionError(f"degree {r} is odd")
    if k % 2 or not 2 <= k <= r:
        raise PreconditionError(f"k={k} must be even with 2 <= k <= {r}")
    orient = eulerian_orientation(G)
    n = G.n
    arcs = orient.arcs()
    remaining = list(range(G.m))
    chosen: list[int] = []
    for _ in range(k // 2):
        # bipartite split: tail t -> vertex t, head h -> vertex n + h
        B = MultiGraph(2 * n, [(arcs[e][0], n + arcs[e][1]) for e in remaining])
        M = max_matching(B)
        if not M.is_perfect():
            raise TheoremViolation("regular bipartite split graph lacks a perfect matching")
        picked = {remaining[i] for i in M.matched}
        chosen.extend(picked)
        remaining = [e for e in remaining if e not in picked]
    F = Factor(G, chosen)
    if any(d != k for d in F.degrees):
        raise TheoremViolation("union of 2-factors is not k-regular")
    return F


def thomassen_factor(G: Graph, k: int) -> Factor:
    """{k, k+1}-factor of an {r, r+1}-graph for 1 <= k <= r-1."""
    r = _near_regular(G)
    if not 1 <= k <= r - 1:
        raise PreconditionError(f"need 1 <= k <= r-1 = {r - 1}, got k={k}")
    F = gf_factor(G, DegreeBounds.uniform(G.n, k, k + 1))
    if F is None:
        raise TheoremViolation(f"no {{{k},{k + 1}}}-factor found")
    return F


def lemma_u_factor(G: Graph, k: int, U) -> Factor:
    """{k, k+1}-factor with degree k+1 on the independent heavy set U.

    ``U`` must be exactly the degree-(r+1) vertices. ``k = 0`` lies outside
    the proven range; it is accepted with an :class:`OutsideLemmaRange`
    warning (the construction is still checked).
    """
    r = _near_regular(G)
    U = set(U)
    heavy = {v for v in range(G.n) if G.degree(v) == r + 1}
    if U != heavy:
        raise PreconditionError("U must be the set of degree-(r+1) vertices")
    if not is_independent(G, U):
        raise PreconditionError("U is not independent")
    if k == 0:
        warnings.warn("k=0 is outside 1 <= k <= r-1", OutsideLemmaRange, stacklevel=2)
    elif not 1 <= k <= r - 1:
        raise PreconditionError(f"need 1 <= k <= r-1 = {r - 1}, got k={k}")
    g = [k + 1 if v in U else k for v in range(G.n)]
    f = [k + 1] * G.n
    F = gf_factor(G, DegreeBounds(g, f))
    if F is None:
        raise TheoremViolation(f"no {{{k},{k + 1}}}-factor saturating U")
    return F


def reduce_heavy_adjacency(G: Graph, F: Factor, M: int) -> Factor:
    """Drop F-edges joining two degree-(M+1) vertices until none remain."""
    if any(d not in (M, M + 1) for d in F.degrees):
        raise PreconditionError(f"factor is not an {{{M},{M + 1}}}-factor")
    deg = list(F.degrees)
    keep = set(F.selected)
    for e in sorted(F.selected):
        a, b = G.edges[e]
        if deg[a] == M + 1 and deg[b] == M + 1:
            keep.discard(e)
            deg[a] -= 1
            deg[b] -= 1
    return Factor(G, keep)


def shift_spec(spec: DegreeSpec, Fprime: Factor, Fdoubleprime: Graph) -> DegreeSpec:
    """H'(v) = {h - d_F'(v)} clipped to the degrees F'' can realize."""
    out = []
    for v in range(spec.n):
        d1 = Fprime.degree(v)
        cap = Fdoubleprime.degree(v)
        out.append({h - d1 for h in spec[v] if 0 <= h - d1 <= cap})
    return DegreeSpec(out)


@dataclass
class PipelineTrace:
    m: int = 0
    M: int = 0
    r: int = 0
    F: Factor | None = None
    heavy: frozenset[int] = frozenset()
    Fprime: Factor | None = None
    Fdouble: Factor | None = None
    orientation: Orientation | None = None
    shifted: DegreeSpec | None = None
    Gprime: Factor | None = None
    final: Factor | None = None
    notes: list[str] = field(default_factory=list)
    search_nodes: int = 0

    def lines(self) -> list[str]:
        def degs(F):
            return " ".join(str(d) for d in F.degrees) if F is not None else "-"

        out = [
            f"stage params r={self.r} m={self.m} M={self.M}",
            f"stage F edges={self.F.size if self.F else 0} degrees={degs(self.F)}",
            f"stage U size={len(self.heavy)} vertices={' '.join(str(v + 1) for v in sorted(self.heavy))}",
            f"stage F' edges={self.Fprime.size if self.Fprime else 0} degrees={degs(self.Fprime)}",
            f"stage F'' edges={self.Fdouble.size if self.Fdouble else 0} degrees={degs(self.Fdouble)}",
        ]
        if self.orientation is not None:
            out.append("stage orientation indeg=" + " ".join(str(d) for d in self.orientation.indeg))
        if self.shifted is not None:
            out.append(
                "stage H' " + " ".join("{" + ",".join(map(str, sorted(a))) + "}" for a in self.shifted.allowed)
            )
        out.append(f"stage G' edges={self.Gprime.size if self.Gprime else 0} nodes={self.search_nodes}")
        out.append(f"stage final edges={self.final.size if self.final else 0} degrees={degs(self.final)}")
        out.extend(f"note {n}" for n in self.notes)
        return out


def _lift(sub_to_host: list[int], F: Factor) -> set[int]:
    return {sub_to_host[e] for e in F.selected}


def main_h_factor(G: Graph, spec: DegreeSpec, budget: SearchBudget | None = None) -> tuple[Factor, PipelineTrace]:
    """H-factor of an {r, r+1}-graph under the size condition on H."""
    spec.validate(G)
    if not main_condition(G, spec):
        raise PreconditionError("mH >= 1, MH <= r and |H(v)| >= (MH - mH + 3)/2 do not all hold")
    r = _near_regular(G)
    m, M = spec.min_value, spec.max_value
    tr = PipelineTrace(m=m, M=M, r=r)

    # stage 1: {M, M+1}-factor with an independent heavy set
    if M == r:
        F0 = Factor(G, range(G.m))
        tr.notes.append("MH = r: the whole graph serves as the {M,M+1}-factor")
    else:
        F0 = thomassen_factor(G, M)
    F = reduce_heavy_adjacency(G, F0, M)
    tr.F = F
    heavy = frozenset(v for v in range(G.n) if F.degree(v) == M + 1)
    tr.heavy = heavy
    FG, F_to_G = F.as_graph()
    if not is_independent(FG, heavy):
        raise TheoremViolation("heavy vertices of F are adjacent")

    # stage 2: {m-1, m}-factor of F, degree m on the heavy set
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always", OutsideLemmaRange)
        Fp_local = lemma_u_factor(FG, m - 1, heavy)
    if any(issubclass(w.category, OutsideLemmaRange) for w in caught):
        tr.notes.append("lemma applied with k = m-1 = 0")
    Fprime = Factor(G, _lift(F_to_G, Fp_local))
    tr.Fprime = Fprime
    for v in heavy:
        if Fprime.degree(v) != m:
            raise TheoremViolation(f"heavy vertex {v} has F'-degree {Fprime.degree(v)}, not {m}")

    # stage 3: the complement of F' inside F
    Fdouble = Factor(G, F.selected - Fprime.selected)
    tr.Fdouble = Fdouble
    for v in range(G.n):
        if Fdouble.degree(v) != F.degree(v) - Fprime.degree(v):
            raise TheoremViolation("F'' degrees do not split F")
        if Fdouble.degree(v) not in (M - m, M - m + 1):
            raise TheoremViolation(f"vertex {v}: F''-degree {Fdouble.degree(v)} not in {{M-m, M-m+1}}")

    # stage 4: orientation with in-degree >= floor(d/2)
    FDG, FD_to_G = Fdouble.as_graph()
    orient = eulerian_orientation(FDG)
    tr.orientation = orient
    for v in range(G.n):
        if orient.indeg[v] < FDG.degree(v) // 2:
            raise TheoremViolation(f"vertex {v}: in-degree below floor(d/2)")

    # stage 5: shifted spec covered by the orientation
    shifted = shift_spec(spec, Fprime, FDG)
    tr.shifted = shifted
    if not fls_condition(FDG, orient, shifted):
        raise TheoremViolation("orientation does not cover the gaps of H'")

    # stage 6: H'-factor of F''
    budget = budget if budget is not None else SearchBudget(max_nodes=10**7, max_time=120.0)
    Gp_local = exact_h_factor(FDG, shifted, budget)
    tr.search_nodes = budget.nodes
    if Gp_local is None:
        raise TheoremViolation("F'' has no H'-factor despite the orientation bound")
    Gprime = Factor(G, _lift(FD_to_G, Gp_local))
    tr.Gprime = Gprime

    final = Factor(G, Fprime.selected | Gprime.selected)
    if Fprime.selected & Gprime.selected:
        raise TheoremViolation("F' and G' share edges")
    if not spec.admits(final.degrees):
        raise TheoremViolation("assembled factor violates H")
    tr.final = final
    return final, tr


def akbari_parity_factor(G: Graph) -> Factor:
    """{r/2-1, r/2+1}-factor of a connected r-regular graph, r = 0 mod 4, even order."""
    r = _regular(G)
    if r % 2 or (r // 2) % 2:
        raise PreconditionError(f"need r even with r/2 even, got r={r}")
    if r == 0:
        raise PreconditionError("r must be positive")
    if G.n % 2:
        raise PreconditionError("graph has odd order")
    if not is_connected(G):
        raise PreconditionError("graph is not connected")
    h = r // 2
    F = parity_factor(G, DegreeBounds.uniform(G.n, h - 1, h + 1))
    if F is None:
        raise TheoremViolation(f"no {{{h - 1},{h + 1}}}-parity-factor found")
    return F


def akbari_kano_factor(G: Graph, k: int, budget: SearchBudget | None = None) -> Factor:
    """{k, r-k}-factor of an r-regular graph with r odd and k even."""
    r = _regular(G)
    if r % 2 == 0:
        raise PreconditionError(f"r={r} must be odd")
    if k % 2 or not 1 <= k <= r:
        raise PreconditionError(f"k={k} must be even with 1 <= k <= {r}")
    F = solve(G, DegreeSpec.uniform(G.n, {k, r - k}), "auto", budget)
    if F is None:
        raise TheoremViolation(f"no {{{k},{r - k}}}-factor found")
    return F


def gallai_preconditions(G: Graph, k: int, m: int) -> None:
    r = _regular(G)
    if r % 2:
        raise PreconditionError(f"degree {r} is odd")
    if k % 2 == 0:
        raise PreconditionError(f"k={k} is even")
    if G.n % 2:
        raise PreconditionError("graph has odd order")
    if m < 1:
        raise PreconditionError("m must be positive")
    if not (r <= k * m and k * m <= r * (m - 1)):
        raise PreconditionError(f"need r/m <= k <= r(1 - 1/m) with r={r}, k={k}, m={m}")
    if edge_connectivity(G) < m:
        raise PreconditionError(f"graph is not {m}-edge-connected")


def gallai_check(G: Graph, k: int, m: int) -> Factor | None:
    """Look for the k-factor guaranteed for m-edge-connected even-regular graphs.

    Returns the factor, or None, which would contradict the theorem.
    """
    gallai_preconditions(G, k, m)
    return f_factor(G, [k] * G.n)
