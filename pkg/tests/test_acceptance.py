"""The twelve acceptance criteria, each reported as one PASS/FAIL line."""
import random
import time

import networkx as nx
import pytest

from conftest import ACCEPTANCE_LINES
from factor_forge.counterexample import (
    forced_degree_demo,
    positive_controls,
    sharpness_pairs,
    verify_gstar_infeasible,
)
from factor_forge.criteria import DegreeBounds, DegreeSpec, criterion_exhaustive, main_condition
from factor_forge.families import gstar, hstar, random_regular
from factor_forge.graph import Graph, eulerian_orientation
from factor_forge.matching import f_factor, gf_factor, max_matching, parity_factor
from factor_forge.solver import PruningRules, SearchBudget, exact_h_factor, solve
from factor_forge.suites import near_regular_graph, random_main_instance
from factor_forge.theorems import (
    akbari_parity_factor,
    main_h_factor,
    petersen_k_factor,
    thomassen_factor,
)

from oracles import degree_table, exists, random_bounds, random_degree_vector, random_edges


def report(number, title, ok, seconds, detail=""):
    line = f"{'PASS' if ok else 'FAIL'} criterion {number:>2}: {title} ({seconds:.2f}s)"
    if detail:
        line += f" [{detail}]"
    ACCEPTANCE_LINES.append(line)
    print(line)
    assert ok, line


# criterion 1 -----------------------------------------------------------

def _catalog():
    for g in nx.graph_atlas_g():
        if g.number_of_nodes() and nx.is_connected(g):
            yield g.number_of_nodes(), sorted(tuple(sorted(e)) for e in g.edges())
    rng = random.Random(2024)
    for _ in range(200):
        n = rng.randint(2, 9)
        yield n, random_edges(n, rng.randint(1, min(20, n * (n - 1) // 2)), rng)


def _mixed_specs(G, rng, count):
    """Cycle through exact, interval, parity and general specs."""
    for i in range(count):
        kind = ("exact", "interval", "parity", "general")[i % 4]
        target = random_degree_vector(G.n, G.edges, rng)
        if kind == "exact":
            f = [min(d, max(0, t + rng.choice((-1, 0, 0, 1)))) for t, d in zip(target, G.degrees)]
            yield kind, DegreeBounds(f, f), [{x} for x in f]
        elif kind in ("interval", "parity"):
            parity = kind == "parity"
            g, f = random_bounds(G.degrees, rng, parity, around=target if rng.random() < 0.7 else None)
            b = DegreeBounds(g, f)
            yield kind, b, b.allowed(parity)
        else:
            sets = []
            for v, d in enumerate(G.degrees):
                s = {h for h in range(d + 1) if rng.random() < 0.35}
                if rng.random() < 0.6:
                    s.add(target[v])
                sets.append(s or {rng.randint(0, d)})
            yield kind, None, sets


def test_c01_oracle_equivalence():
    t = time.perf_counter()
    rng = random.Random(1)
    graphs = checks = mismatches = 0
    for n, edges in _catalog():
        G = Graph(n, edges)
        table = degree_table(n, edges)
        graphs += 1
        for kind, b, allowed in _mixed_specs(G, rng, 50):
            truth = exists(table, allowed)
            verdicts = [exact_h_factor(G, DegreeSpec(allowed))]
            if kind == "exact":
                verdicts.append(f_factor(G, b.f))
            elif kind == "interval":
                verdicts.append(gf_factor(G, b))
            elif kind == "parity":
                verdicts.append(parity_factor(G, b))
            for F in verdicts:
                checks += 1
                ok = (F is not None) == truth
                if F is not None:
                    ok = ok and all(d in a for d, a in zip(F.degrees, allowed))
                mismatches += not ok
    dt = time.perf_counter() - t
    report(1, "oracle equivalence", mismatches == 0 and dt <= 300, dt,
           f"{graphs} graphs, {checks} verdicts, {mismatches} mismatches")


# criterion 2 -----------------------------------------------------------

def test_c02_criterion_completeness():
    t = time.perf_counter()
    rng = random.Random(2)
    bad = 0
    negatives = 0
    for _ in range(100):
        n = rng.randint(2, 9)
        G = Graph(n, random_edges(n, rng.randint(1, n * (n - 1) // 2), rng))
        target = random_degree_vector(n, G.edges, rng)
        for parity in (False, True):
            g, f = random_bounds(G.degrees, rng, parity, around=target if rng.random() < 0.5 else None)
            b = DegreeBounds(g, f)
            w = criterion_exhaustive(G, b, "parity" if parity else "gf")
            F = (parity_factor if parity else gf_factor)(G, b)
            bad += (w is None) != (F is not None)
            negatives += w is not None
    dt = time.perf_counter() - t
    report(2, "criterion completeness", bad == 0 and dt <= 300, dt,
           f"200 verdicts, {negatives} witnesses, {bad} disagreements")


# criteria 3-6 ----------------------------------------------------------

def test_c03_petersen():
    t = time.perf_counter()
    fails = runs = 0
    for r in (4, 6):
        for seed in range(20):
            n = random.Random(seed).randint(r + 2, 24)
            G = random_regular(r, n, seed)
            for k in range(2, r + 1, 2):
                F = petersen_k_factor(G, k)
                runs += 1
                fails += F.degrees != (k,) * n
    dt = time.perf_counter() - t
    report(3, "Petersen k-factors", fails == 0 and dt <= 60, dt, f"{runs} factors")


def test_c04_thomassen():
    t = time.perf_counter()
    fails = runs = 0
    for r in (3, 4, 5):
        for seed in range(20):
            rng = random.Random(seed)
            n = rng.randint(r + 2, 30)
            if r % 2 and n % 2:
                n -= 1
            for G in (random_regular(r, n, seed), near_regular_graph(r, rng.randint(r + 2, 30), seed)):
                for k in range(1, r):
                    F = thomassen_factor(G, k)
                    runs += 1
                    fails += not all(d in (k, k + 1) for d in F.degrees)
    dt = time.perf_counter() - t
    report(4, "Tutte/Thomassen {k,k+1}-factors", fails == 0, dt, f"{runs} factors")


def test_c05_akbari_kano():
    t = time.perf_counter()
    fails = runs = 0
    for r in (3, 5, 7):
        for seed in range(20):
            n = 2 * random.Random(seed).randint((r + 2) // 2, 12)
            G = random_regular(r, n, seed)
            for k in range(2, r + 1, 2):
                F = solve(G, DegreeSpec.uniform(n, {k, r - k}))
                runs += 1
                fails += F is None or not all(d in (k, r - k) for d in F.degrees)
    dt = time.perf_counter() - t
    report(5, "Akbari-Kano {k,r-k}-factors", fails == 0, dt, f"{runs} factors")


def test_c06_parity_regular():
    t = time.perf_counter()
    fails = 0
    for r in (4, 8):
        h = r // 2
        for seed in range(20):
            n = 2 * random.Random(seed).randint(r // 2 + 1, 15)
            F = akbari_parity_factor(random_regular(r, n, seed))
            fails += not all(d in (h - 1, h + 1) for d in F.degrees)
    dt = time.perf_counter() - t
    report(6, "{r/2-1, r/2+1}-factors", fails == 0, dt, "40 graphs")


# criterion 7 -----------------------------------------------------------

def test_c07_main_pipeline():
    t = time.perf_counter()
    fails = m1 = 0
    for r in (3, 4, 5, 8):
        for seed in range(100):
            G, spec = random_main_instance(r, 1000 * r + seed, force_m1=seed % 4 == 0)
            assert main_condition(G, spec)
            m1 += spec.min_value == 1
            try:
                F, _ = main_h_factor(G, spec)
                fails += not spec.admits(F.degrees)
            except AssertionError:
                fails += 1
    dt = time.perf_counter() - t
    report(7, "main H-factor pipeline", fails == 0 and m1 > 0 and dt <= 300, dt,
           f"400 instances, {m1} with mH=1, {fails} failures")


# criteria 8-10 ---------------------------------------------------------

def test_c08_polynomial_refutations():
    t = time.perf_counter()
    G6 = gstar(6).graph
    no_pm = max_matching(G6).size < G6.n // 2
    t_a = time.perf_counter() - t

    t = time.perf_counter()
    G10 = gstar(10).graph
    no_13 = G10.n == 112 and parity_factor(G10, DegreeBounds.uniform(G10.n, 1, 3)) is None
    t_b = time.perf_counter() - t

    t = time.perf_counter()
    sizes_ok = all(
        2 * len(range(m, M + 1, 2)) == M - m + 2 for r in (6, 10) for m, M in sharpness_pairs(r)
    )
    t_c = time.perf_counter() - t
    report(8, "(a) gstar(6) has no perfect matching", no_pm and t_a <= 1, t_a)
    report(8, "(b) gstar(10) has no {1,3}-parity-factor", no_13 and t_b <= 30, t_b)
    report(8, "(c) |{m,...,M}| = (M-m+2)/2 for r in {6,10}", sizes_ok, t_c,
           f"{len(sharpness_pairs(6)) + len(sharpness_pairs(10))} pairs")


def test_c09_exhaustive_refutation():
    t = time.perf_counter()
    L = gstar(6)
    budget = SearchBudget(max_nodes=10**9, max_time=600.0)
    F = exact_h_factor(L.graph, DegreeSpec.uniform(L.graph.n, hstar(6)), budget, PruningRules(gstar=L))
    rep = verify_gstar_infeasible(6)
    dt = time.perf_counter() - t
    report(9, "gstar(6) has no {1,5}-factor", F is None and rep.infeasible, dt, f"{budget.nodes} nodes")


def test_c10_forced_degree():
    t = time.perf_counter()
    ok = True
    for seed in range(20):
        _, rep = forced_degree_demo(6, seed=seed, method="exact" if seed % 2 else "auto")
        ok &= rep.hub_degree == 3 and rep.copy_edges == {1: 1, 2: 1}
    dt = time.perf_counter() - t
    report(10, "forced hub degree on gstar(6)", ok, dt, "20 orderings")


# criteria 11-12 --------------------------------------------------------

def test_c11_orientation():
    t = time.perf_counter()
    rng = random.Random(11)
    violations = 0
    for _ in range(1000):
        n = rng.randint(1, 30)
        G = Graph(n, random_edges(n, rng.randint(0, min(120, n * (n - 1) // 2)), rng))
        o = eulerian_orientation(G)
        violations += sum(o.indeg[v] < G.degree(v) // 2 for v in range(n))
    dt = time.perf_counter() - t
    report(11, "orientation in-degree bound", violations == 0, dt, "1000 graphs")


def test_c12_positive_controls():
    t = time.perf_counter()
    out = positive_controls(6)
    ok = out["2"].degrees == (2,) * 44
    for k in range(1, 6):
        ok &= all(d in (k, k + 1) for d in out[f"{k},{k + 1}"].degrees)
    dt = time.perf_counter() - t
    report(12, "positive controls on gstar(6)", ok, dt, "2-factor and 5 {k,k+1}-factors")
