import itertools

import pytest
from hypothesis import given, settings, strategies as st

from strongstable.core import (
    Budget,
    BudgetExceededError,
    GraphError,
    Multigraph,
    all_paths_between,
    anticomponents,
    complement,
    components,
    from_edge_list,
    graph_isomorphic,
    induced,
    induced_cycles,
    induced_paths_between,
    is_induced_path,
    is_strong_stable_set,
    line_graph,
    maximal_cliques,
)
from oracles import (
    complete,
    cycle,
    naive_is_strong_stable_set,
    naive_maximal_cliques,
    path,
)


@st.composite
def small_graphs(draw, max_n=8):
    n = draw(st.integers(min_value=0, max_value=max_n))
    pairs = list(itertools.combinations(range(n), 2))
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return from_edge_list(n, [e for e, keep in zip(pairs, mask) if keep])


class TestFromEdgeList:
    def test_triangle(self):
        g = from_edge_list(3, [(0, 1), (1, 2), (0, 2)])
        assert g.is_complete()

    def test_edgeless(self):
        g = from_edge_list(2, [])
        assert g.edge_count() == 0

    def test_cycle_degrees(self):
        g = cycle(5)
        assert all(g.degree(v) == 2 for v in range(5))

    def test_duplicates_collapse(self):
        g = from_edge_list(3, [(0, 1), (1, 0), (0, 1)])
        assert g.edge_count() == 1

    def test_out_of_range(self):
        with pytest.raises(GraphError):
            from_edge_list(2, [(0, 2)])

    def test_self_loop(self):
        with pytest.raises(GraphError):
            from_edge_list(2, [(1, 1)])


class TestComplement:
    def test_k3(self):
        assert complement(complete(3)).edge_count() == 0

    def test_c5_self_complementary(self):
        assert graph_isomorphic(complement(cycle(5)), cycle(5))

    def test_c4_matching(self):
        co = complement(cycle(4))
        assert sorted(co.edges()) == [(0, 2), (1, 3)]

    @settings(max_examples=60, deadline=None)
    @given(small_graphs())
    def test_involution(self, g):
        assert complement(complement(g)) == g


class TestInduced:
    def test_three_consecutive_of_c5(self):
        sub, mapping = induced(cycle(5), {0, 1, 2})
        assert sorted(sub.edges()) == [(0, 1), (1, 2)]
        assert mapping == (0, 1, 2)

    def test_identity(self):
        g = cycle(6)
        sub, mapping = induced(g, range(6))
        assert sub == g

    def test_alternate_vertices_edgeless(self):
        sub, _ = induced(cycle(6), {0, 2, 4})
        assert sub.edge_count() == 0


class TestComponents:
    def test_two_triangles(self):
        g = from_edge_list(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])
        assert [sorted(c) for c in components(g)] == [[0, 1, 2], [3, 4, 5]]

    def test_anticomponents_clique(self):
        assert anticomponents(complete(4)) == [
            frozenset({0}),
            frozenset({1}),
            frozenset({2}),
            frozenset({3}),
        ]

    def test_anticomponents_c4(self):
        assert sorted(map(sorted, anticomponents(cycle(4)))) == [[0, 2], [1, 3]]


class TestMaximalCliques:
    def test_c5_edges(self):
        assert maximal_cliques(cycle(5)) == [
            frozenset(e) for e in [(0, 1), (0, 4), (1, 2), (2, 3), (3, 4)]
        ]

    def test_k4(self):
        assert maximal_cliques(complete(4)) == [frozenset({0, 1, 2, 3})]

    def test_clown_cliques(self):
        # even hole 0..3 plus hat 4 on the edge (0, 1)
        g = from_edge_list(5, [(0, 1), (1, 2), (2, 3), (3, 0), (4, 0), (4, 1)])
        assert maximal_cliques(g) == [
            frozenset({0, 1, 4}),
            frozenset({0, 3}),
            frozenset({1, 2}),
            frozenset({2, 3}),
        ]

    def test_budget_vertices(self):
        with pytest.raises(BudgetExceededError):
            maximal_cliques(complete(5), Budget(max_vertices=4))

    @settings(max_examples=40, deadline=None)
    @given(small_graphs())
    def test_matches_naive(self, g):
        assert sorted(map(sorted, maximal_cliques(g))) == sorted(
            map(sorted, naive_maximal_cliques(g))
        )

    @settings(max_examples=40, deadline=None)
    @given(small_graphs())
    def test_cover_vertices_and_edges(self, g):
        cliques = maximal_cliques(g)
        for v in range(g.n):
            assert any(v in k for k in cliques)
        for u, v in g.edges():
            assert any(u in k and v in k for k in cliques)


class TestStrongStableSet:
    def test_c6(self):
        assert is_strong_stable_set(cycle(6), {0, 2, 4})

    def test_c5_has_none(self):
        g = cycle(5)
        for s in itertools.chain.from_iterable(
            itertools.combinations(range(5), r) for r in range(6)
        ):
            if g.is_stable(s):
                assert not is_strong_stable_set(g, s)

    def test_single_vertex_of_k3(self):
        assert is_strong_stable_set(complete(3), {0})

    @settings(max_examples=40, deadline=None)
    @given(small_graphs(max_n=6), st.data())
    def test_matches_naive(self, g, data):
        sub = data.draw(st.sets(st.integers(min_value=0, max_value=max(g.n - 1, 0))))
        sub = {v for v in sub if v < g.n}
        assert is_strong_stable_set(g, sub) == naive_is_strong_stable_set(g, sub)


class TestInducedPaths:
    def test_p5_single(self):
        assert list(induced_paths_between(path(5), 0, 4)) == [(0, 1, 2, 3, 4)]

    def test_c6_antipodal(self):
        assert list(induced_paths_between(cycle(6), 0, 3)) == [
            (0, 1, 2, 3),
            (0, 5, 4, 3),
        ]

    def test_c5_adjacent_pair_chordless(self):
        # only the edge itself: the length-4 arc has the endpoint chord
        assert list(induced_paths_between(cycle(5), 0, 1)) == [(0, 1)]

    def test_c5_adjacent_pair_all_paths(self):
        lengths = sorted(len(p) - 1 for p in all_paths_between(cycle(5), 0, 1))
        assert lengths == [1, 4]

    def test_same_endpoint_rejected(self):
        with pytest.raises(GraphError):
            list(induced_paths_between(cycle(5), 2, 2))

    @settings(max_examples=40, deadline=None)
    @given(small_graphs(max_n=7))
    def test_yields_only_induced_paths(self, g):
        if g.n < 2:
            return
        for p in induced_paths_between(g, 0, g.n - 1):
            assert is_induced_path(g, p)

    def test_budget(self):
        g = complete(12)
        with pytest.raises(BudgetExceededError):
            list(all_paths_between(g, 0, 11, Budget(max_enumerations=50)))


class TestInducedCycles:
    def test_c6(self):
        assert list(induced_cycles(cycle(6))) == [(0, 1, 2, 3, 4, 5)]

    def test_k4_none(self):
        assert list(induced_cycles(complete(4))) == []

    def test_parity_filter(self):
        g = cycle(5)
        assert list(induced_cycles(g, parity=0)) == []
        assert list(induced_cycles(g, parity=1)) == [(0, 1, 2, 3, 4)]

    def test_each_once(self):
        # prism: exactly three squares and no other holes
        g = complement(cycle(6))
        cycles = list(induced_cycles(g))
        assert len(cycles) == len(set(cycles)) == 3
        assert all(len(c) == 4 for c in cycles)


class TestLineGraph:
    def test_path(self):
        lg, mapping = line_graph(Multigraph.build(4, [(0, 1), (1, 2), (2, 3)]))
        assert sorted(lg.edges()) == [(0, 1), (1, 2)]
        assert mapping == (0, 1, 2)

    def test_k23_is_prism(self):
        k23 = Multigraph.build(5, [(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)])
        lg, _ = line_graph(k23)
        prism = from_edge_list(
            6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3), (1, 4), (2, 5)]
        )
        assert graph_isomorphic(lg, prism)

    def test_parallel_edges_become_twins(self):
        lg, _ = line_graph(Multigraph.build(2, [(0, 1), (0, 1)]))
        assert sorted(lg.edges()) == [(0, 1)]
        assert lg.adj[0] | {0} == lg.adj[1] | {1}

    def test_triangle_free_gives_claw_and_diamond_free(self):
        import random

        from strongstable.recognizers import find_claw

        def has_diamond(h):
            for quad in itertools.combinations(range(h.n), 4):
                sub, _ = induced(h, quad)
                if sub.edge_count() == 5:
                    return True
            return False

        rng = random.Random(17)
        for _ in range(25):
            nl, nr = rng.randint(1, 4), rng.randint(1, 4)
            edges = {
                (i, nl + j)
                for i in range(nl)
                for j in range(nr)
                if rng.random() < 0.5
            }
            b = Multigraph.build(nl + nr, sorted(edges))
            lg, _ = line_graph(b)
            assert find_claw(lg) is None
            assert not has_diamond(lg)


class TestMultigraph:
    def test_self_loop_rejected(self):
        with pytest.raises(GraphError):
            Multigraph.build(2, [(0, 0)])

    def test_degree_counts_parallels(self):
        b = Multigraph.build(2, [(0, 1), (0, 1)])
        assert b.degree(0) == 2

    def test_bipartition(self):
        b = Multigraph.build(5, [(0, 2), (0, 3), (1, 3), (1, 4)])
        left, right = b.bipartition()
        assert left == {0, 1} and right == {2, 3, 4}
        assert Multigraph.build(3, [(0, 1), (1, 2), (0, 2)]).bipartition() is None


class TestBudget:
    def test_positive_required(self):
        with pytest.raises(ValueError):
            Budget(max_vertices=0)

    def test_enumeration_cap(self):
        g = complete(10)
        with pytest.raises(BudgetExceededError):
            maximal_cliques(g, Budget(max_enumerations=3))
