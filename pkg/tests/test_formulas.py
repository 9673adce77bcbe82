import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from hitwalk import (
    CompleteDaryTree, Cycle, Grid, Hypercube, Path, Star, Tadpole, build_graph, generate,
    hitting_time, hitting_times_to,
)
from hitwalk.families import dary_depth
from hitwalk.formulas import (
    FormulaDomainError, NotAdjacentError, NotATreeError, dary_ancestor_to_leaf_ht, dary_f,
    dary_g, dary_ht, dary_to_root_ht, grid_corner_ht, hypercube_neighbor_ht,
    symmetric_neighbor_ht, tadpole_end_ht, tadpole_ht_to_end, tree_neighbor_ht,
)

from conftest import random_tree

BINARY7 = generate(CompleteDaryTree(2, 2))


class TestSymmetricNeighbor:
    def test_examples(self):
        assert symmetric_neighbor_ht(12, 3) == 7
        assert symmetric_neighbor_ht(1, 1) == 1
        assert symmetric_neighbor_ht(5, 2) == 4
        assert symmetric_neighbor_ht(5, 2) == hitting_time(generate(Cycle(5)), 1, 0)

    def test_rational(self):
        assert symmetric_neighbor_ht(5, 3) == Fraction(7, 3)

    @pytest.mark.parametrize("e,k", [(0, 1), (1, 0), (-2, 1)])
    def test_rejects(self, e, k):
        with pytest.raises(FormulaDomainError):
            symmetric_neighbor_ht(e, k)


@pytest.mark.parametrize("d,m,expected", [(1, 2, 1), (2, 2, 3), (2, 3, 11)])
def test_grid_corner(d, m, expected):
    assert grid_corner_ht(d, m) == expected
    # direction: neighbor of the corner -> corner
    assert hitting_time(generate(Grid(d, m)), 1, 0) == expected


def test_grid_corner_direction_is_towards_corner():
    g = generate(Grid(2, 3))
    assert hitting_time(g, 0, 1) != grid_corner_ht(2, 3)


@pytest.mark.parametrize("d", [1, 3, 4])
def test_hypercube(d):
    assert hypercube_neighbor_ht(d) == 2 ** d - 1
    assert hitting_time(generate(Hypercube(d)), 0, 1) == hypercube_neighbor_ht(d)


def test_hypercube_rejects():
    with pytest.raises(FormulaDomainError):
        hypercube_neighbor_ht(0)
    with pytest.raises(FormulaDomainError):
        grid_corner_ht(2, 1)


class TestTreeNeighbor:
    def test_examples(self):
        p2 = build_graph([(0, 1)], 2)
        assert tree_neighbor_ht(p2, 0, 1) == 1
        star = generate(Star(3))
        assert tree_neighbor_ht(star, 0, 1) == 5 == hitting_time(star, 0, 1)
        path = generate(Path(3))
        assert tree_neighbor_ht(path, 1, 2) == 3 == hitting_time(path, 1, 2)

    def test_rejects_non_tree(self):
        with pytest.raises(NotATreeError):
            tree_neighbor_ht(generate(Cycle(4)), 0, 1)
        with pytest.raises(NotATreeError):
            tree_neighbor_ht(build_graph([(0, 1)], 3), 0, 1)

    def test_rejects_non_adjacent(self):
        with pytest.raises(NotAdjacentError):
            tree_neighbor_ht(generate(Path(3)), 0, 2)

    @settings(max_examples=25, deadline=None)
    @given(st.integers(0, 10**6), st.integers(2, 30))
    def test_matches_solver(self, seed, n):
        tree = random_tree(seed, n)
        v = seed % n
        for u in tree.adjacency[v]:
            assert tree_neighbor_ht(tree, v, u) == hitting_time(tree, v, u)

    @settings(max_examples=25, deadline=None)
    @given(st.integers(0, 10**6), st.integers(2, 30))
    def test_inductive_step(self, seed, n):
        # h(v -> u) = 1 + sum over v's other neighbors j of 2 * size(j side)
        tree = random_tree(seed, n)
        v = seed % n
        u = tree.adjacency[v][0]
        total = 1
        for j in tree.adjacency[v]:
            if j != u:
                total += tree_neighbor_ht(tree, j, v) + 1
        assert tree_neighbor_ht(tree, v, u) == total


class TestTadpole:
    def test_end_examples(self):
        assert tadpole_end_ht(3, 1) == 7
        assert tadpole_end_ht(4, 2) == 11
        spec = Tadpole(4, 2)
        assert hitting_time(generate(spec), spec.end_neighbor, spec.end) == 11

    def test_end_is_two_e_minus_one(self):
        for k in range(3, 9):
            for l in range(1, 6):
                spec = Tadpole(k, l)
                g = generate(spec)
                assert tadpole_end_ht(k, l) == 2 * g.m - 1 == symmetric_neighbor_ht(k + l, 1)
                assert hitting_time(g, spec.end_neighbor, spec.end) == tadpole_end_ht(k, l)

    def test_vertex_examples(self):
        spec = Tadpole(4, 1)
        assert tadpole_ht_to_end(4, 1, spec.end) == 0
        assert tadpole_ht_to_end(4, 1, spec.end_neighbor) == tadpole_end_ht(4, 1)
        solved = hitting_times_to(generate(spec), spec.end)
        assert [tadpole_ht_to_end(4, 1, w) for w in range(5)] == list(solved.values)

    @pytest.mark.parametrize("k", range(3, 9))
    @pytest.mark.parametrize("l", range(1, 6))
    def test_line_lemma(self, k, l):
        spec = Tadpole(k, l)
        solved = hitting_times_to(generate(spec), spec.end)
        big_h = tadpole_end_ht(k, l)
        # junction sits at distance l from the end, tail vertex k+i-1 at l-i
        for w, t in [(0, l)] + [(k + i - 1, l - i) for i in range(1, l + 1)]:
            assert solved[w] == t * big_h - t * (t - 1)

    @pytest.mark.parametrize("k", [3, 5, 7, 9])
    def test_odd_cycle_antipodes(self, k):
        spec = Tadpole(k, 2)
        solved = hitting_times_to(generate(spec), spec.end)
        half = k // 2
        assert solved[half] == solved[half + 1]
        assert tadpole_ht_to_end(k, 2, half) == tadpole_ht_to_end(k, 2, half + 1)

    def test_rejects(self):
        with pytest.raises(FormulaDomainError):
            tadpole_end_ht(2, 1)
        with pytest.raises(FormulaDomainError):
            tadpole_ht_to_end(3, 1, 4)


class TestDaryPolynomials:
    def test_base_values(self):
        for d in range(2, 8):
            assert dary_f(0, d) == 0
            assert dary_f(1, d) == 1
            for h in range(1, 8):
                assert dary_g(h, 1, d) == 2 * d ** h - 1
                assert dary_g(h, 0, d) == 0

    def test_frozen_values(self):
        # (4 + 2d) - 2 at d = 2
        assert dary_f(2, 2) == 6
        # (4d^2 + 2d) - 2 at d = 2
        assert dary_g(2, 2, 2) == 18
        assert dary_g(1, 1, 2) == 3

    @given(st.integers(2, 40), st.integers(2, 30))
    def test_f_recurrence(self, n, d):
        assert dary_f(n, d) == d * dary_f(n - 1, d) + (n - 1) * d + n

    @given(st.integers(1, 40), st.integers(2, 30))
    def test_f_combination(self, h, d):
        assert (d - 1) * (dary_f(h, d) - dary_f(h - 1, d)) + d == 2 * d ** h - 1

    @given(st.integers(2, 30), st.integers(2, 30), st.data())
    def test_g_second_difference(self, h, d, data):
        k = data.draw(st.integers(1, h - 1))
        assert dary_g(h, k + 1, d) + dary_g(h, k - 1, d) - 2 * dary_g(h, k, d) == 2 * d ** (h - k)

    def test_big_integers(self):
        assert dary_f(60, 10) > 2 ** 64

    @pytest.mark.parametrize("call", [
        lambda: dary_f(-1, 2), lambda: dary_f(2, 1), lambda: dary_g(0, 0, 2),
        lambda: dary_g(2, 3, 2), lambda: dary_g(2, -1, 2),
    ])
    def test_rejects(self, call):
        with pytest.raises(FormulaDomainError):
            call()


class TestDaryHitting:
    def test_to_root_examples(self):
        assert dary_to_root_ht(2, 3, 0) == 0
        assert dary_to_root_ht(2, 1, 1) == 1
        assert dary_to_root_ht(2, 2, 2) == 6 == hitting_time(BINARY7, 3, 0)

    def test_ancestor_to_leaf_examples(self):
        assert dary_ancestor_to_leaf_ht(2, 2, 0) == 0
        assert dary_ancestor_to_leaf_ht(2, 1, 1) == 3 == hitting_time(generate(CompleteDaryTree(2, 1)), 0, 1)
        assert dary_ancestor_to_leaf_ht(2, 2, 2) == 18 == hitting_time(BINARY7, 0, 3)

    def test_rejects_l_above_h(self):
        with pytest.raises(FormulaDomainError):
            dary_to_root_ht(2, 2, 3)
        with pytest.raises(FormulaDomainError):
            dary_ancestor_to_leaf_ht(2, 2, 3)
        with pytest.raises(FormulaDomainError):
            dary_ht(2, 2, 0, 7)

    def test_degenerate_heights(self):
        assert dary_ht(3, 0, 0, 0) == 0
        assert dary_to_root_ht(3, 0, 0) == 0

    def test_all_pairs_binary7(self):
        n = BINARY7.n
        cols = [hitting_times_to(BINARY7, v) for v in range(n)]
        pairs = [(u, v) for u in range(n) for v in range(n) if u != v]
        assert len(pairs) == 42
        for u, v in pairs:
            assert dary_ht(2, 2, u, v) == cols[v][u]

    def test_reduces_to_root_formula(self):
        rng = random.Random(5)
        for _ in range(20):
            d, h = rng.randint(2, 5), rng.randint(1, 5)
            g_n = (d ** (h + 1) - 1) // (d - 1)
            u = rng.randrange(g_n)
            assert dary_ht(d, h, u, 0) == dary_to_root_ht(d, h, dary_depth(u, d))
            assert dary_ht(d, h, u, u) == 0
