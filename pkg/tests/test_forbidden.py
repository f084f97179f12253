import pytest

from strongstable.core import Budget, BudgetExceededError, complement, from_edge_list, line_graph
from strongstable.forbidden import (
    CERTIFICATE_ORDER,
    ForbiddenKind,
    ForbiddenWitness,
    Innocent,
    find_structure,
    innocence_certificate,
    is_innocent,
    verify_witness,
)
from strongstable.generators import bicycle, eye_mask, handcuff, hole, prism
from oracles import complete, cycle, naive_find_kind, naive_is_innocent


class TestOddHole:
    def test_c5(self):
        w = find_structure(cycle(5), ForbiddenKind.ODD_HOLE)
        assert w.vertices == frozenset(range(5))
        assert verify_witness(cycle(5), w)

    def test_c4_none(self):
        assert find_structure(cycle(4), ForbiddenKind.ODD_HOLE) is None

    def test_inside_bigger_graph(self):
        g = from_edge_list(7, [(i, (i + 1) % 5) for i in range(5)] + [(5, 0), (6, 5)])
        w = find_structure(g, ForbiddenKind.ODD_HOLE)
        assert w is not None and w.vertices == frozenset(range(5))


class TestLongAntihole:
    def test_c7_complement(self):
        g = complement(cycle(7))
        w = find_structure(g, ForbiddenKind.LONG_ANTIHOLE)
        assert w is not None and verify_witness(g, w)

    def test_five_antihole_is_not_long(self):
        # the length-5 antihole is C5 itself: reported as odd hole
        g = complement(cycle(5))
        assert find_structure(g, ForbiddenKind.LONG_ANTIHOLE) is None
        cert = innocence_certificate(g)
        assert cert.kind == ForbiddenKind.ODD_HOLE


class TestOddPrism:
    def test_l_k23(self):
        k23 = from_edge_list(5, [])
        from strongstable.core import Multigraph

        lg, _ = line_graph(
            Multigraph.build(5, [(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)])
        )
        w = find_structure(lg, ForbiddenKind.ODD_PRISM)
        assert w is not None and w.vertices == frozenset(range(6))
        assert verify_witness(lg, w)

    def test_longer_paths(self):
        g = prism((1, 1, 3))
        w = find_structure(g, ForbiddenKind.ODD_PRISM)
        assert w is not None and verify_witness(g, w)

    def test_even_prism_not_odd(self):
        g = prism((2, 2, 2))
        assert find_structure(g, ForbiddenKind.ODD_PRISM) is None


class TestHandcuffEyeMask:
    def test_minimum_handcuff_is_ten_vertices(self):
        g = handcuff(4, 4, 1)
        assert g.n == 10
        w = find_structure(g, ForbiddenKind.HANDCUFF)
        assert w is not None and w.vertices == frozenset(range(10))
        assert verify_witness(g, w)

    def test_handcuff_from_line_graph_of_bicycle(self):
        lg, _ = line_graph(bicycle(4, 4, 2))
        w = find_structure(lg, ForbiddenKind.HANDCUFF)
        assert w is not None and verify_witness(lg, w)

    def test_minimum_eye_mask(self):
        g = eye_mask(4, 4)
        assert g.n == 8
        w = find_structure(g, ForbiddenKind.EYE_MASK)
        assert w is not None and verify_witness(g, w)

    def test_eye_mask_from_line_graph_of_shared_bicycle(self):
        lg, _ = line_graph(bicycle(4, 4, 0))
        w = find_structure(lg, ForbiddenKind.EYE_MASK)
        assert w is not None and verify_witness(lg, w)

    def test_minimum_fixtures_match_naive(self):
        assert naive_find_kind(handcuff(4, 4, 1), "handcuff") == frozenset(range(10))
        assert naive_find_kind(eye_mask(4, 4), "eye-mask") == frozenset(range(8))
        assert naive_find_kind(prism((1, 1, 1)), "odd-prism") == frozenset(range(6))


class TestCertificate:
    def test_c6_innocent(self):
        assert isinstance(innocence_certificate(cycle(6)), Innocent)

    def test_kind_order_fixed(self):
        # the 6-antihole is also an odd prism; the certificate uses the
        # long-antihole detector first
        cert = innocence_certificate(complement(cycle(6)))
        assert cert.kind == ForbiddenKind.LONG_ANTIHOLE
        assert CERTIFICATE_ORDER[0] == ForbiddenKind.ODD_HOLE

    def test_eye_mask_certificate(self):
        assert innocence_certificate(eye_mask(4, 4)).kind == ForbiddenKind.EYE_MASK

    def test_all_generated_families_detected(self):
        cases = [
            (hole(7), ForbiddenKind.ODD_HOLE),
            (complement(cycle(8)), ForbiddenKind.LONG_ANTIHOLE),
            (prism((1, 3, 3)), ForbiddenKind.ODD_PRISM),
            (handcuff(4, 6, 3), ForbiddenKind.HANDCUFF),
            (eye_mask(6, 4), ForbiddenKind.EYE_MASK),
        ]
        for g, kind in cases:
            w = find_structure(g, kind)
            assert w is not None and verify_witness(g, w), kind


class TestVerifyWitness:
    def test_round_trip(self):
        for g in (cycle(5), eye_mask(4, 4), handcuff(4, 4, 1), prism((1, 1, 1))):
            cert = innocence_certificate(g)
            assert verify_witness(g, cert)

    def test_chord_breaks_witness(self):
        g = cycle(5)
        w = find_structure(g, ForbiddenKind.ODD_HOLE)
        chorded = from_edge_list(5, list(g.edges()) + [(0, 2)])
        assert not verify_witness(chorded, w)

    def test_tampered_parity_fails(self):
        g = handcuff(4, 4, 1)
        w = find_structure(g, ForbiddenKind.HANDCUFF)
        c1, c2 = w.anatomy["cycles"]
        bad = ForbiddenWitness(
            w.kind,
            w.vertices,
            {**w.anatomy, "path": w.anatomy["path"] + (0,)},
        )
        assert not verify_witness(g, bad)

    def test_wrong_vertex_set_fails(self):
        g = cycle(5)
        w = find_structure(g, ForbiddenKind.ODD_HOLE)
        bad = ForbiddenWitness(w.kind, frozenset({0, 1, 2, 3}), w.anatomy)
        assert not verify_witness(g, bad)


class TestNaiveAgreement:
    def test_small_exhaustive(self, graphs_by_n):
        # full agreement at n <= 6 here; the n = 7 sweep lives in acceptance
        for n in range(7):
            for g in graphs_by_n[n]:
                assert is_innocent(g) == naive_is_innocent(g), sorted(g.edges())


class TestBudgets:
    def test_size_gate(self):
        with pytest.raises(BudgetExceededError):
            find_structure(cycle(30), ForbiddenKind.ODD_HOLE, Budget(max_vertices=24))

    def test_enumeration_gate(self):
        g = complete(12)
        with pytest.raises(BudgetExceededError):
            innocence_certificate(g, Budget(max_enumerations=5))
