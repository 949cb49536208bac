"""Verification suites: run a theorem's construction over generated instances.

Each suite yields :class:`CaseResult` rows in a fixed order. Instance work
may be spread over processes (``FACTOR_FORGE_THREADS``); rows are still
reported in instance order.
"""
from __future__ import annotations

import os
import random
from collections.abc import Callable
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .counterexample import sharpness_check, sharpness_pairs, verify_gstar_infeasible
from .criteria import DegreeSpec, main_condition
from .families import GenerationError, random_near_regular, random_regular
from .graph import Graph
from .solver import SearchBudget
from .theorems import (
    PreconditionError,
    akbari_kano_factor,
    akbari_parity_factor,
    gallai_check,
    gallai_preconditions,
    main_h_factor,
    petersen_k_factor,
    thomassen_factor,
)


@dataclass
class CaseResult:
    label: str
    status: str  # PASS, FAIL or SKIP
    detail: str = ""

    @property
    def ok(self) -> bool:
        return self.status != "FAIL"

    def line(self) -> str:
        return f"{self.status} {self.label}" + (f" {self.detail}" if self.detail else "")


class SuiteError(ValueError):
    pass


def near_regular_graph(r: int, n: int, seed) -> Graph:
    """{r, r+1}-graph on n vertices with a seeded number of heavy vertices.

    At least one vertex keeps degree r, so the minimum degree is exactly r.
    """
    rng = random.Random(seed)
    for _ in range(100):
        k = rng.randint(0, n - 1)
        if (r * n + k) % 2:
            k = k - 1 if k > 0 else k + 1
        try:
            return random_near_regular(r, n, k, rng.randrange(2**32))
        except GenerationError:
            continue
    raise GenerationError(f"could not realize an {{{r},{r + 1}}}-graph on {n} vertices")


def random_main_instance(r: int, seed, n: int | None = None, force_m1: bool = False) -> tuple[Graph, DegreeSpec]:
    """A seeded {r, r+1}-graph with a random H meeting the size condition."""
    if r < 2:
        raise SuiteError("r must be at least 2")
    rng = random.Random(seed)
    if n is None:
        n = rng.randint(r + 2, r + 14)
    G = near_regular_graph(r, n, rng.randrange(2**32))
    m = 1 if force_m1 or rng.random() < 0.3 else rng.randint(1, r - 1)
    M = rng.randint(m + 1, r)
    need = (M - m + 4) // 2  # ceil((M - m + 3) / 2)
    sets = [set(rng.sample(range(m, M + 1), rng.randint(need, M - m + 1))) for _ in range(n)]
    sets[rng.randrange(n)].add(m)
    sets[rng.randrange(n)].add(M)
    spec = DegreeSpec(sets)
    assert main_condition(G, spec)
    return G, spec


def _check(cond: bool, label: str, detail: str = "") -> CaseResult:
    return CaseResult(label, "PASS" if cond else "FAIL", detail)


def _petersen_case(r, n, ks, seed):
    G = random_regular(r, n, seed)
    out = []
    for k in ks:
        F = petersen_k_factor(G, k)
        out.append(_check(all(d == k for d in F.degrees), f"r={r} n={n} seed={seed} k={k}"))
    return out


def _thomassen_case(r, n, ks, seed, regular):
    G = random_regular(r, n, seed) if regular else near_regular_graph(r, n, seed)
    out = []
    for k in ks:
        F = thomassen_factor(G, k)
        out.append(_check(all(d in (k, k + 1) for d in F.degrees), f"r={r} n={n} seed={seed} k={k}"))
    return out


def _akbari_kano_case(r, n, ks, seed):
    G = random_regular(r, n, seed)
    out = []
    for k in ks:
        F = akbari_kano_factor(G, k)
        out.append(_check(all(d in (k, r - k) for d in F.degrees), f"r={r} n={n} seed={seed} k={k}"))
    return out


def _parity_regular_case(r, n, seed):
    G = random_regular(r, n, seed)
    F = akbari_parity_factor(G)
    ok = all(d in (r // 2 - 1, r // 2 + 1) for d in F.degrees)
    return [_check(ok, f"r={r} n={n} seed={seed}")]


def _main_case(r, n, seed):
    G, spec = random_main_instance(r, seed, n)
    F, tr = main_h_factor(G, spec)
    return [_check(spec.admits(F.degrees), f"r={r} n={G.n} seed={seed}", f"m={tr.m} M={tr.M}")]


def _gallai_case(r, n, k, m, seed):
    G = random_regular(r, n, seed)
    label = f"r={r} n={n} seed={seed} k={k} m={m}"
    try:
        gallai_preconditions(G, k, m)
    except PreconditionError as exc:
        return [CaseResult(label, "SKIP", str(exc))]
    F = gallai_check(G, k, m)
    return [_check(F is not None and all(d == k for d in F.degrees), label)]


def _run(fn: Callable, jobs: list[tuple]) -> list[CaseResult]:
    threads = int(os.environ.get("FACTOR_FORGE_THREADS", "1") or 1)
    if threads > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            chunks = list(pool.map(fn, *zip(*jobs)))
    else:
        chunks = [fn(*job) for job in jobs]
    return [row for chunk in chunks for row in chunk]


def run_suite(name: str, r: int | None = None, n: int | None = None, k: int | None = None,
              m: int | None = None, M: int | None = None, seeds: int = 10,
              budget: SearchBudget | None = None) -> list[CaseResult]:
    """Run a named suite. Raises SuiteError or PreconditionError on bad parameters."""
    seeds_r = range(seeds)
    if name == "petersen":
        r = 4 if r is None else r
        if r % 2 or r < 2:
            raise SuiteError("petersen needs an even r >= 2")
        ks = [k] if k is not None else list(range(2, r + 1, 2))
        if any(x % 2 or not 2 <= x <= r for x in ks):
            raise SuiteError(f"k must be even with 2 <= k <= {r}")
        n = n or 2 * r + 4
        return _run(_petersen_case, [(r, n, ks, s) for s in seeds_r])
    if name in ("tutte", "thomassen"):
        r = 3 if r is None else r
        ks = [k] if k is not None else list(range(1, r))
        if any(not 1 <= x <= r - 1 for x in ks):
            raise SuiteError(f"k must satisfy 1 <= k <= r-1 = {r - 1}")
        n = n or 2 * r + 4
        regular = name == "tutte"
        return _run(_thomassen_case, [(r, n, ks, s, regular) for s in seeds_r])
    if name == "akbari-kano":
        r = 5 if r is None else r
        if r % 2 == 0:
            raise SuiteError("akbari-kano needs odd r")
        ks = [k] if k is not None else list(range(2, r + 1, 2))
        if any(x % 2 or not 1 <= x <= r for x in ks):
            raise SuiteError(f"k must be even with 1 <= k <= {r}")
        n = n or 2 * r + 2
        return _run(_akbari_kano_case, [(r, n, ks, s) for s in seeds_r])
    if name == "parity-regular":
        r = 4 if r is None else r
        if r % 4 or r == 0:
            raise SuiteError("parity-regular needs r divisible by 4")
        n = n or 2 * r + 2
        if n % 2:
            raise SuiteError("n must be even")
        return _run(_parity_regular_case, [(r, n, s) for s in seeds_r])
    if name == "main":
        r = 3 if r is None else r
        if r < 2:
            raise SuiteError("main needs r >= 2")
        return _run(_main_case, [(r, n, s) for s in seeds_r])
    if name == "gallai":
        r = 4 if r is None else r
        k = 1 if k is None else k
        m = 2 if m is None else m
        if r % 2 or k % 2 == 0 or m < 1 or not (r <= k * m <= r * (m - 1)):
            raise SuiteError(f"need r even, k odd and r/m <= k <= r(1-1/m); got r={r} k={k} m={m}")
        n = n or 2 * r + 2
        return _run(_gallai_case, [(r, n, k, m, s) for s in seeds_r])
    if name == "counterexample":
        r = 6 if r is None else r
        rep = verify_gstar_infeasible(r, budget)
        rows = [_check(rep.infeasible, f"r={r} claim={','.join(map(str, sorted(rep.claim)))}",
                       f"method={rep.method} nodes={rep.nodes}")]
        for ev in rep.evidence:
            rows.append(_check(ev.infeasible, f"r={r} claim={','.join(map(str, sorted(ev.claim)))}",
                               f"method={ev.method}"))
        return rows
    if name == "sharpness":
        r = 6 if r is None else r
        pairs = [(m, M)] if m is not None and M is not None else sharpness_pairs(r)
        rows = []
        for a, b in pairs:
            rep = sharpness_check(r, a, b)
            rows.append(_check(rep.infeasible, f"r={r} m={a} M={b}", f"size={rep.details['size']} method={rep.method}"))
        return rows
    raise SuiteError(f"unknown suite {name!r}")


SUITES = ("petersen", "tutte", "thomassen", "akbari-kano", "parity-regular", "main",
          "counterexample", "sharpness", "gallai")
