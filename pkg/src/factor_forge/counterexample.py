"""Refutation of {k, r-k}-factors on the two-hub graph G*.

The decisive observation: every copy J_i has odd order, so an all-odd
factor must use an odd number of the edges leaving J_i. Copies wired only to
u therefore send exactly one chosen edge to u, which pins d(u) to
{r/2 - 1, r/2, r/2 + 1}.
"""
from __future__ import annotations

import random
import time
from dataclasses import dataclass, field

from .criteria import DegreeBounds, DegreeSpec
from .families import GStarLayout, gstar, hstar, odd_upto
from .graph import Factor
from .matching import f_factor, parity_factor
from .solver import BudgetExceeded, PruningRules, SearchBudget, exact_h_factor, solve
from .theorems import PreconditionError, TheoremViolation, petersen_k_factor, thomassen_factor

DEFAULT_NODES = 10**9
DEFAULT_SECONDS = 600.0


@dataclass
class RefutationReport:
    r: int
    claim: frozenset[int]
    method: str
    verdict: str
    nodes: int = 0
    seconds: float = 0.0
    details: dict[str, str] = field(default_factory=dict)
    evidence: list["RefutationReport"] = field(default_factory=list)

    @property
    def infeasible(self) -> bool:
        return self.verdict == "infeasible"

    def lines(self, prefix: str = "") -> list[str]:
        out = [
            f"{prefix}r={self.r}",
            f"{prefix}claim={','.join(map(str, sorted(self.claim)))}",
            f"{prefix}method={self.method}",
            f"{prefix}verdict={self.verdict}",
            f"{prefix}nodes={self.nodes}",
            f"{prefix}seconds={self.seconds:.3f}",
        ]
        out.extend(f"{prefix}{k}={v}" for k, v in self.details.items())
        for i, ev in enumerate(self.evidence, 1):
            out.extend(ev.lines(prefix=f"{prefix}evidence{i}."))
        return out


def _check_r(r: int) -> None:
    if r % 2 or r < 6:
        raise PreconditionError(f"need an even r >= 6, got {r}")


def _progression(claim) -> tuple[int, int] | None:
    vals = sorted(claim)
    lo, hi = vals[0], vals[-1]
    if vals == list(range(lo, hi + 1, 2)):
        return lo, hi
    return None


def refute_progression(layout: GStarLayout, lo: int, hi: int) -> RefutationReport:
    """Matching-based check that G* has no {lo, lo+2, ..., hi}-factor."""
    G = layout.graph
    claim = frozenset(range(lo, hi + 1, 2))
    t = time.perf_counter()
    if lo == hi:
        F = f_factor(G, [lo] * G.n)
        method = "matching"
    else:
        F = parity_factor(G, DegreeBounds.uniform(G.n, lo, hi))
        method = "parity_gadget"
    verdict = "infeasible" if F is None else "feasible"
    return RefutationReport(layout.r, claim, method, verdict, seconds=time.perf_counter() - t)


def verify_gstar_infeasible(r: int, budget: SearchBudget | None = None, claim=None) -> RefutationReport:
    """Establish that G*(r) has no factor with all degrees in ``claim``.

    ``claim`` defaults to H*. Parity progressions are settled by matching;
    anything else by exhaustive search with the hub rule. For H* the report
    also carries the matching refutations of every progression inside it.
    """
    _check_r(r)
    layout = gstar(r)
    claim = frozenset(hstar(r) if claim is None else claim)
    if not claim or any(h % 2 == 0 or h > r for h in claim):
        raise PreconditionError("claim must be a nonempty set of odd degrees <= r")
    prog = _progression(claim)
    if prog is not None:
        return refute_progression(layout, *prog)

    budget = budget if budget is not None else SearchBudget(DEFAULT_NODES, DEFAULT_SECONDS)
    G = layout.graph
    spec = DegreeSpec.uniform(G.n, claim)
    try:
        F = exact_h_factor(G, spec, budget, PruningRules(gstar=layout))
        verdict = "infeasible" if F is None else "feasible"
    except BudgetExceeded:
        verdict = "budget_exceeded"
    report = RefutationReport(r, claim, "exact_search", verdict, budget.nodes, budget.elapsed)
    for m, M in sharpness_pairs(r):
        sub = frozenset(range(m, M + 1, 2))
        if sub <= claim:
            report.evidence.append(refute_progression(layout, m, M))
    return report


def sharpness_pairs(r: int) -> list[tuple[int, int]]:
    """All odd (m, M) with 1 <= m <= M <= r/2 - 2."""
    top = r // 2 - 2
    return [(m, M) for m in range(1, top + 1, 2) for M in range(m, top + 1, 2)]


def sharpness_check(r: int, m: int, M: int) -> RefutationReport:
    """G* has no {m, m+2, ..., M}-factor although |H| = (M - m + 2)/2."""
    _check_r(r)
    if m % 2 == 0 or M % 2 == 0:
        raise PreconditionError("m and M must be odd")
    if not 1 <= m <= M <= r // 2 - 2:
        raise PreconditionError(f"need 1 <= m <= M <= r/2 - 2 = {r // 2 - 2}")
    H = frozenset(range(m, M + 1, 2))
    size = (M - m + 2) // 2
    if len(H) != size or 2 * len(H) != M - m + 2:
        raise TheoremViolation("progression size formula failed")
    report = refute_progression(gstar(r), m, M)
    report.details["size"] = str(len(H))
    report.details["needed_twice"] = str(M - m + 3)
    report.details["size_twice"] = str(2 * len(H))
    report.details["below_bound"] = str(2 * len(H) < M - m + 3).lower()
    return report


@dataclass
class ForcedDegreeReport:
    r: int
    hub_degree: int
    copy_edges: dict[int, int]
    allowed_hub: tuple[int, int, int]
    seed: int | None

    def lines(self) -> list[str]:
        out = [f"r={self.r}", f"seed={self.seed}", f"hub_degree={self.hub_degree}"]
        out.extend(f"e_F(J{i},u)={c}" for i, c in sorted(self.copy_edges.items()))
        return out


def forced_degree_demo(r: int, seed: int | None = None, method: str = "auto") -> tuple[Factor, ForcedDegreeReport]:
    """Solve G* for the relaxed all-odd spec and read off the forced hub degree.

    With ``seed`` the vertices are relabelled at random before solving (and
    the exact search breaks ties by the seed), so repeated calls exercise
    different solver orderings.
    """
    _check_r(r)
    layout = gstar(r)
    G = layout.graph
    perm = list(range(G.n))
    if seed is not None:
        random.Random(seed).shuffle(perm)
    H = G.relabel(perm)
    spec = DegreeSpec.uniform(G.n, odd_upto(r))
    Fh = solve(H, spec, method, seed=seed)
    if Fh is None:
        raise TheoremViolation("G* has no all-odd factor")
    F = Factor(G, Fh.selected)  # relabelling keeps edge indices
    u = layout.u
    allowed = (r // 2 - 1, r // 2, r // 2 + 1)
    if F.degree(u) not in allowed:
        raise TheoremViolation(f"d(u) = {F.degree(u)} escapes {allowed}")
    counts = {}
    for i in layout.u_only_copies():
        cp = layout.copies[i - 1]
        counts[i] = sum(
            1 for w in (cp.a, cp.b) if G.edge_index(u, w) in F.selected
        )
        if counts[i] != 1:
            raise TheoremViolation(f"e_F(J{i}, u) = {counts[i]}, expected 1")
    return F, ForcedDegreeReport(r, F.degree(u), counts, allowed, seed)


def positive_controls(r: int) -> dict[str, Factor]:
    """Factors G* must have: a 2-factor and a {k, k+1}-factor for 1 <= k < r."""
    G = gstar(r).graph
    out = {"2": petersen_k_factor(G, 2)}
    for k in range(1, r):
        out[f"{k},{k + 1}"] = thomassen_factor(G, k)
    return out
