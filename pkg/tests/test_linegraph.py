import random

import pytest

from strongstable.core import (
    Budget,
    GraphError,
    Multigraph,
    from_edge_list,
    graph_isomorphic,
    line_graph,
)
from strongstable.forbidden import Innocent, innocence_certificate
from strongstable.generators import (
    bicycle,
    random_connected_bipartite,
    random_connected_bipartite_multigraph,
    theta,
)
from strongstable.linegraph import (
    BicycleWitness,
    ThetaWitness,
    contract_degree_two,
    detect_smooth_augmentation,
    find_bicycle,
    find_theta,
    is_harmless,
    multigraph_isomorphic,
    reconstruct_augmentation,
    recover_root,
    suitable_matching,
)
from strongstable.core import is_strong_stable_set
from oracles import cycle, naive_suitable_matching_exists

M = Multigraph.build


class TestRecoverRoot:
    def test_c6(self):
        g = cycle(6)
        rr = recover_root(g)
        lg, _ = line_graph(rr.root)
        assert lg == g and not rr.ambiguous

    def test_odd_prism_root_is_theta(self):
        k23 = M(5, [(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)])
        lg, _ = line_graph(k23)
        rr = recover_root(lg)
        assert rr is not None
        assert multigraph_isomorphic(rr.root, k23)

    def test_c5_has_no_bipartite_root(self):
        assert recover_root(cycle(5)) is None

    def test_k3_prefers_bipartite_and_flags_ambiguity(self):
        g = from_edge_list(3, [(0, 1), (1, 2), (0, 2)])
        rr = recover_root(g)
        assert rr is not None
        assert rr.root.bipartition() is not None
        assert rr.ambiguous

    def test_twins_become_parallel_edges(self):
        b = M(4, [(0, 1), (0, 1), (1, 2), (2, 3)])
        lg, _ = line_graph(b)
        rr = recover_root(lg)
        relg, _ = line_graph(rr.root)
        assert relg == lg

    def test_disconnected_rejected(self):
        with pytest.raises(GraphError):
            recover_root(from_edge_list(4, [(0, 1), (2, 3)]))

    def test_random_roundtrip_exact(self):
        for seed in range(40):
            b = random_connected_bipartite_multigraph(seed, 7, 11)
            lg, _ = line_graph(b)
            rr = recover_root(lg)
            assert rr is not None
            relg, _ = line_graph(rr.root)
            assert relg == lg


class TestThetaBicycle:
    def test_k23_theta(self):
        w = find_theta(M(5, [(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)]))
        assert isinstance(w, ThetaWitness)
        assert all(len(p) - 1 >= 2 and (len(p) - 1) % 2 == 0 for p in w.paths)
        interiors = [set(p[1:-1]) for p in w.paths]
        assert not (interiors[0] & interiors[1] or interiors[0] & interiors[2] or interiors[1] & interiors[2])

    def test_tree_harmless(self):
        assert is_harmless(M(5, [(0, 1), (1, 2), (2, 3), (2, 4)]))[0]

    def test_shared_vertex_bicycle(self):
        b = M(7, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (4, 5), (5, 6), (6, 0)])
        w = find_bicycle(b)
        assert isinstance(w, BicycleWitness) and w.shared_vertex

    def test_disjoint_bicycle_even_path(self):
        b = bicycle(4, 4, 2)
        w = find_bicycle(b)
        assert w is not None and not w.shared_vertex
        assert (len(w.path) - 1) % 2 == 0

    def test_theta_as_subgraph_with_chords(self):
        # theta plus an extra edge: still found (subgraph containment)
        t = theta((2, 2, 2))
        edges = list(t.edges) + [(2, 3)]
        assert find_theta(M(t.n, edges)) is not None

    def test_harmless_iff_line_graph_innocent(self):
        rng = random.Random(3)
        for _ in range(40):
            b = random_connected_bipartite(rng, rng.randint(1, 4), rng.randint(1, 4), rng.randint(0, 3))
            if b.m == 0:
                continue
            lg, _ = line_graph(b)
            harmless = is_harmless(b)[0]
            innocent = isinstance(innocence_certificate(lg), Innocent)
            assert harmless == innocent, list(b.edges)

    def test_line_graph_correspondences(self):
        from strongstable.forbidden import ForbiddenKind, find_structure

        lg, _ = line_graph(theta((2, 4, 2)))
        assert find_structure(lg, ForbiddenKind.ODD_PRISM) is not None
        lg, _ = line_graph(bicycle(4, 6, 2))
        assert find_structure(lg, ForbiddenKind.HANDCUFF) is not None
        lg, _ = line_graph(bicycle(6, 4, 0))
        assert find_structure(lg, ForbiddenKind.EYE_MASK) is not None


class TestSuitableMatching:
    def test_path_three(self):
        m = suitable_matching(M(3, [(0, 1), (1, 2)]))
        assert m is not None and len(m.edges) == 1

    def test_even_cycle_perfect_matching(self):
        m = suitable_matching(M(4, [(0, 1), (1, 2), (2, 3), (3, 0)]))
        assert m is not None and len(m.edges) == 2

    def test_odd_path_forced_ends(self):
        b = M(4, [(0, 1), (1, 2), (2, 3)])
        m = suitable_matching(b, forced={0, 2})
        assert m is not None and m.edges == {0, 2}

    def test_infeasible_forced(self):
        # C4 with a pendant path of three: forcing the singular edge leaves
        # one cycle vertex uncoverable
        b = M(7, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (4, 5), (5, 6)])
        assert suitable_matching(b, forced={6}) is None
        assert suitable_matching(b) is not None

    def test_forced_must_be_matching(self):
        b = M(3, [(0, 1), (1, 2)])
        with pytest.raises(GraphError):
            suitable_matching(b, forced={0, 1})

    def test_exactness_against_subset_oracle(self):
        rng = random.Random(11)
        for _ in range(120):
            b = random_connected_bipartite(rng, rng.randint(1, 3), rng.randint(1, 3), rng.randint(0, 3))
            if b.m == 0:
                continue
            forced = frozenset()
            if b.m > 1 and rng.random() < 0.5:
                forced = frozenset({rng.randrange(b.m)})
            try:
                m = suitable_matching(b, forced)
            except GraphError:
                continue
            assert (m is not None) == naive_suitable_matching_exists(b, forced), list(
                b.edges
            )

    def test_matching_maps_to_strong_stable_set(self):
        rng = random.Random(5)
        for _ in range(40):
            b = random_connected_bipartite(rng, rng.randint(1, 4), rng.randint(1, 4), rng.randint(0, 2))
            if b.m < 2:
                continue  # a lone edge has no degree-two star for its clique
            m = suitable_matching(b)
            if m is None:
                continue
            lg, emap = line_graph(b)
            assert is_strong_stable_set(lg, {emap[e] for e in m.edges})


class TestContraction:
    def test_path(self):
        res = contract_degree_two(M(3, [(0, 1), (1, 2)]), 1)
        assert res.graph.n == 1 and res.graph.m == 0

    def test_c6_to_c4(self):
        res = contract_degree_two(M(6, [(i, (i + 1) % 6) for i in range(6)]), 1)
        assert res.graph.n == 4 and res.graph.m == 4
        assert graph_isomorphic(res.graph.underlying_simple(), cycle(4))

    def test_c4_gives_parallel_pair(self):
        res = contract_degree_two(M(4, [(0, 1), (1, 2), (2, 3), (3, 0)]), 0)
        assert res.graph.edges == ((0, 1), (0, 1))

    def test_parallel_neighbors_rejected(self):
        with pytest.raises(GraphError):
            contract_degree_two(M(2, [(0, 1), (0, 1)]), 0)

    def test_preserves_harmlessness_in_proof_setting(self):
        # u of degree two between v (degree >= 3) and w, with u the only
        # common neighbor: contraction keeps the host harmless
        rng = random.Random(23)
        checked = 0
        for seed in range(600):
            b = random_connected_bipartite_multigraph(seed, 7, 9, parallel_rate=0.0, unambiguous=False)
            if not is_harmless(b)[0]:
                continue
            simple = b.underlying_simple()
            for u in range(b.n):
                if b.degree(u) != 2:
                    continue
                inc = b.incident(u)
                v, w = (x for e in inc for x in b.edges[e] if x != u)
                if v == w or b.degree(v) < 3:
                    continue
                if len(simple.adj[v] & simple.adj[w]) != 1:
                    continue
                res = contract_degree_two(b, u)
                assert is_harmless(res.graph)[0], (list(b.edges), u)
                checked += 1
                break
            if checked >= 20:
                break
        assert checked >= 10


class TestSmoothAugmentation:
    def _augmented(self):
        # path 0-1-2-3 with X={4,5}, Y={6,7}, nested cross, C={3}, D={0}
        return from_edge_list(
            8,
            [(0, 1), (1, 2), (2, 3), (4, 5), (6, 7), (4, 6), (5, 6), (5, 7),
             (3, 4), (3, 5), (0, 6), (0, 7)],
        )

    def test_plain_line_graph_zero_augments(self):
        st = detect_smooth_augmentation(cycle(6))
        assert st is not None and st.augments == ()

    def test_nontrivial_augment_found_and_reconstructs(self):
        g = self._augmented()
        assert recover_root(g) is None
        st = detect_smooth_augmentation(g)
        assert st is not None and len(st.augments) == 1
        (pair, xs, ys, cross) = st.augments[0]
        assert {frozenset(xs), frozenset(ys)} == {frozenset({4, 5}), frozenset({6, 7})}
        assert reconstruct_augmentation(st) == g

    def test_c5_absent(self):
        assert detect_smooth_augmentation(cycle(5)) is None

    def test_disconnected_rejected(self):
        with pytest.raises(GraphError):
            detect_smooth_augmentation(from_edge_list(4, [(0, 1), (2, 3)]))

    def test_generator_roundtrip(self):
        from strongstable.generators import random_claw_free_innocent

        found_aug = 0
        for seed in range(30):
            g = random_claw_free_innocent(seed, 11, augment_rate=0.6)
            st = detect_smooth_augmentation(g, Budget(max_vertices=24, max_enumerations=400_000))
            if st is None:
                continue
            assert reconstruct_augmentation(st) == g
            found_aug += 1 if st.augments else 0
        assert found_aug >= 3
