import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from factor_forge.families import (
    GenerationError,
    circulant,
    complete_graph,
    cycle_graph,
    gstar,
    hstar,
    is_graphical,
    j_graph,
    random_near_regular,
    random_regular,
)
from factor_forge.graph import is_connected


class TestJGraph:
    def test_r4(self):
        J, a, b = j_graph(4)
        assert (J.n, J.m) == (5, 9)
        assert sorted(J.degrees) == [3, 3, 4, 4, 4]
        assert not J.has_edge(a, b)
        assert (a, b) == (3, 4)

    def test_r6(self):
        J, _, _ = j_graph(6)
        assert (J.n, J.m) == (7, 20)

    @pytest.mark.parametrize("r", [3, 2, 5, 0])
    def test_bad_r(self, r):
        with pytest.raises(GenerationError):
            j_graph(r)


class TestGStar:
    @pytest.mark.parametrize("r", [4, 6, 8, 10, 12])
    def test_structure(self, r):
        L = gstar(r)
        G = L.graph
        assert G.n == r * (r + 1) + 2
        assert G.is_regular(r)
        u, v = L.hubs
        Nu, Nv = set(G.neighbors(u)), set(G.neighbors(v))
        assert not Nu & Nv
        assert u not in Nv and v not in Nu
        A = {i: c.a for i, c in enumerate(L.copies, 1)}
        B = {i: c.b for i, c in enumerate(L.copies, 1)}
        half = r // 2
        assert Nu == {w for i in range(1, half) for w in (A[i], B[i])} | {A[r - 1], A[r]}
        assert Nv == {w for i in range(half, r - 1) for w in (A[i], B[i])} | {B[r - 1], B[r]}
        for cp in L.copies:
            assert not G.has_edge(cp.a, cp.b)
            for x in cp.vertices:
                for y in cp.vertices:
                    if x < y and {x, y} != {cp.a, cp.b}:
                        assert G.has_edge(x, y)

    def test_paper_orders(self):
        assert gstar(6).graph.n == 44
        assert gstar(4).graph.n == 22

    def test_u_touches_first_copy_twice(self):
        L = gstar(6)
        J1 = set(L.copies[0].vertices)
        assert len(set(L.graph.neighbors(L.u)) & J1) == 2

    def test_reproducible(self):
        assert gstar(8).graph.edges == gstar(8).graph.edges

    def test_bad_r(self):
        with pytest.raises(GenerationError):
            gstar(7)


class TestHStar:
    def test_values(self):
        assert hstar(6) == {1, 5}
        assert hstar(10) == {1, 3, 7, 9}
        assert hstar(4) == set()

    @pytest.mark.parametrize("r", range(4, 31, 2))
    def test_invariants(self, r):
        H = hstar(r)
        assert all(h % 2 == 1 and h <= r for h in H)
        assert not H & {r // 2 - 1, r // 2, r // 2 + 1}

    def test_bad_r(self):
        with pytest.raises(GenerationError):
            hstar(5)


class TestRandomRegular:
    def test_cubic(self):
        G = random_regular(3, 10, 1)
        assert G.is_regular(3) and G.n == 10

    def test_odd_handshake(self):
        with pytest.raises(GenerationError):
            random_regular(3, 5, 0)

    def test_degree_too_large(self):
        with pytest.raises(GenerationError):
            random_regular(6, 6, 0)

    def test_two_regular_connected_is_hexagon(self):
        G = random_regular(2, 6, 4)
        assert G.is_regular(2) and is_connected(G)

    @settings(max_examples=30, deadline=None)
    @given(st.sampled_from([(3, 10), (4, 9), (5, 12), (8, 10), (6, 20)]), st.integers(0, 2**20))
    def test_simple_connected_reproducible(self, rn, seed):
        r, n = rn
        G = random_regular(r, n, seed)
        assert G.is_regular(r) and is_connected(G)
        assert random_regular(r, n, seed).edges == G.edges


class TestNearRegular:
    def test_sequence(self):
        G = random_near_regular(2, 5, 2, 0)
        assert G.degrees == (3, 3, 2, 2, 2)

    def test_k4(self):
        G = random_near_regular(3, 4, 0, 9)
        assert G.edges == complete_graph(4).edges

    def test_infeasible(self):
        with pytest.raises(GenerationError):
            random_near_regular(3, 3, 1, 0)
        with pytest.raises(GenerationError):
            random_near_regular(3, 5, 0, 0)

    def test_reproducible(self):
        assert random_near_regular(4, 13, 6, 7).edges == random_near_regular(4, 13, 6, 7).edges

    def test_erdos_gallai(self):
        assert is_graphical([3, 3, 2, 2, 2])
        assert not is_graphical([4, 3, 3])
        assert not is_graphical([3, 3, 3, 1])


class TestCirculant:
    def test_examples(self):
        assert circulant(8, [1, 2]).is_regular(4)
        G = circulant(10, [1, 2, 3, 4])
        assert G.is_regular(8) and G.n == 10
        assert sorted(circulant(5, [1]).edges) == sorted(cycle_graph(5).edges)

    def test_half_offset(self):
        assert circulant(6, [3]).is_regular(1)

    def test_bad_offset(self):
        with pytest.raises(GenerationError):
            circulant(6, [4])
        with pytest.raises(GenerationError):
            circulant(6, [1, 1])
