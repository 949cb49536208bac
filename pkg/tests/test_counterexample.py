import pytest

from factor_forge.criteria import DegreeBounds
from factor_forge.families import gstar
from factor_forge.matching import max_matching, parity_factor
from factor_forge.counterexample import (
    forced_degree_demo,
    positive_controls,
    sharpness_check,
    sharpness_pairs,
    verify_gstar_infeasible,
)
from factor_forge.solver import SearchBudget
from factor_forge.theorems import PreconditionError


class TestVerify:
    def test_r6(self):
        rep = verify_gstar_infeasible(6)
        assert rep.infeasible and rep.method == "exact_search"
        assert rep.claim == {1, 5}
        assert [ev.claim for ev in rep.evidence] == [frozenset({1})]
        assert all(ev.infeasible for ev in rep.evidence)

    def test_r6_perfect_matching(self):
        rep = verify_gstar_infeasible(6, claim={1})
        assert rep.infeasible and rep.method == "matching"
        assert max_matching(gstar(6).graph).size < 22

    def test_r10_progression(self):
        rep = verify_gstar_infeasible(10, claim={1, 3})
        assert rep.infeasible and rep.method == "parity_gadget"

    def test_r4_rejected(self):
        with pytest.raises(PreconditionError):
            verify_gstar_infeasible(4)

    def test_even_claim_rejected(self):
        with pytest.raises(PreconditionError):
            verify_gstar_infeasible(6, claim={2})

    def test_budget_reported(self):
        rep = verify_gstar_infeasible(8, budget=SearchBudget(max_nodes=1), claim={1, 5})
        assert rep.verdict in ("budget_exceeded", "infeasible")

    def test_key_value_lines(self):
        lines = verify_gstar_infeasible(6).lines()
        assert lines[:4] == ["r=6", "claim=1,5", "method=exact_search", "verdict=infeasible"]
        assert all("=" in line for line in lines)
        assert "evidence1.verdict=infeasible" in lines


class TestSharpness:
    def test_examples(self):
        rep = sharpness_check(6, 1, 1)
        assert rep.infeasible and rep.details["size"] == "1"
        rep = sharpness_check(10, 1, 3)
        assert rep.infeasible and rep.details["size"] == "2"
        assert rep.details["below_bound"] == "true"

    def test_even_m(self):
        with pytest.raises(PreconditionError):
            sharpness_check(10, 2, 4)

    def test_range(self):
        with pytest.raises(PreconditionError):
            sharpness_check(6, 1, 3)

    def test_pairs(self):
        assert sharpness_pairs(6) == [(1, 1)]
        assert sharpness_pairs(10) == [(1, 1), (1, 3), (3, 3)]

    def test_size_formula(self):
        for r in (6, 10):
            for m, M in sharpness_pairs(r):
                H = set(range(m, M + 1, 2))
                assert 2 * len(H) == M - m + 2 < M - m + 3


class TestForcedDegree:
    def test_r6(self):
        F, rep = forced_degree_demo(6)
        assert rep.hub_degree == 3
        assert rep.copy_edges == {1: 1, 2: 1}
        assert all(d % 2 for d in F.degrees)

    @pytest.mark.parametrize("seed", range(5))
    def test_seeded_orderings(self, seed):
        for method in ("auto", "exact"):
            _, rep = forced_degree_demo(6, seed=seed, method=method)
            assert rep.hub_degree == 3 and set(rep.copy_edges.values()) == {1}

    def test_r8(self):
        _, rep = forced_degree_demo(8, seed=1)
        assert rep.hub_degree in (3, 5)

    def test_r4(self):
        with pytest.raises(PreconditionError):
            forced_degree_demo(4)


def test_positive_controls():
    out = positive_controls(6)
    assert out["2"].degrees == (2,) * 44
    for k in range(1, 6):
        assert all(d in (k, k + 1) for d in out[f"{k},{k + 1}"].degrees)


def test_parity_progression_without_one_exists():
    # {3,5} is not inside any refutable progression of G*(6); a factor exists
    G = gstar(6).graph
    assert parity_factor(G, DegreeBounds.uniform(G.n, 3, 5)) is not None
