import pytest

from plm.errors import ComparablePairError, UnknownNameError
from plm.lattice import (
    build,
    descriptor_leq,
    symbolic_order,
    to_dot,
    transitive_reduction,
    verify,
    witness_incomparable,
)
from plm.varieties import DESCRIPTORS, join, theory_satisfies
from plm.words import Identity, variable_name, words_with_content, iter_sorted_multiplicities


class TestBuild:
    def test_node_counts(self):
        assert len(build("L1").nodes) == 18
        assert len(build("L2").nodes) == 22
        assert len(build("L3").nodes) == 26

    def test_growth_by_four(self):
        l1, l2, l3 = build("L1"), build("L2"), build("L3")
        assert len(l2.nodes) - len(l1.nodes) == 4
        assert set(l2.nodes) - set(l1.nodes) == {
            "hypo", "hypovlst", "hypovrst", "hypovmst"
        }
        assert len(l3.nodes) - len(l2.nodes) == 4
        assert set(l3.nodes) - set(l2.nodes) == {
            "M2v", "M2v^sylvh", "M2v^sylv", "M2v^S"
        }

    def test_top_bottom(self):
        for name in ("L1", "L2", "L3"):
            lat = build(name)
            assert lat.top == "baxt" and lat.bottom == "jst"

    def test_unknown(self):
        with pytest.raises(UnknownNameError):
            build("L4")


class TestOrder:
    def test_leq_examples(self):
        l1 = build("L1")
        assert l1.leq("jst", "S")
        assert not l1.leq("lst", "sylv") and not l1.leq("sylv", "lst")
        assert build("L3").leq("M2v", "baxt")

    def test_unknown_node(self):
        with pytest.raises(UnknownNameError):
            build("L1").leq("hypo", "baxt")  # hypo enters only at L2

    def test_reachability_is_descriptor_order(self):
        for name in ("L1", "L2", "L3"):
            lat = build(name)
            for a in lat.nodes:
                for b in lat.nodes:
                    assert lat.leq(a, b) == descriptor_leq(a, b)

    def test_stored_covers_equal_reduction(self):
        for name in ("L1", "L2", "L3"):
            lat = build(name)
            order = symbolic_order(lat.nodes)
            assert lat.hasse_edges == transitive_reduction(lat.nodes, order)


class TestMeetsJoins:
    def test_meet_join_tables_are_total(self):
        lat = build("L3")
        for a in lat.nodes:
            for b in lat.nodes:
                lat.meet(a, b)
                lat.join(a, b)

    def test_join_table_matches_property_union(self):
        lat = build("L3")
        for a in lat.nodes:
            for b in lat.nodes:
                assert lat.join(a, b) == join(DESCRIPTORS[a], DESCRIPTORS[b]).name

    def test_expected_meets(self):
        lat = build("L3")
        assert lat.meet("lst", "sylv") == "lst^sylv"
        assert lat.meet("rst", "lst") == "jst"
        assert lat.meet("M2v", "hypo") == "mst^S"
        assert lat.meet("hypo", "mst") == "mst^S"
        assert lat.meet("sylvh", "sylv") == "S"


class TestVerify:
    def test_all_reports_pass(self):
        for name in ("L1", "L2", "L3"):
            report = verify(build(name))
            assert report.ok, [c.name for c in report.failures()]

    def test_expected_equalities(self):
        l1 = build("L1")
        assert l1.join("lst^sylv", "rst^sylvh") == "mst^S"
        l2 = build("L2")
        assert l2.meet("hypo", "mst") == "mst^S"
        l3 = build("L3")
        assert l3.meet("M2v", "hypovmst") == "mst"


class TestWitnesses:
    def test_seeded_pairs(self):
        id1, id2 = witness_incomparable("mst^S", "lst")
        assert theory_satisfies(DESCRIPTORS["mst^S"], id1)
        assert not theory_satisfies(DESCRIPTORS["lst"], id1)
        assert theory_satisfies(DESCRIPTORS["lst"], id2)
        assert not theory_satisfies(DESCRIPTORS["mst^S"], id2)

    def test_known_witness_pair_for_mstS_vs_lst(self):
        # xy^2x = yx^2y separates one way, L1 the other
        wit = Identity(tuple("xyyx"), tuple("yxxy"))
        assert theory_satisfies(DESCRIPTORS["mst^S"], wit)
        assert not theory_satisfies(DESCRIPTORS["lst"], wit)
        l1 = Identity(tuple("xyx"), tuple("xxy"))
        assert theory_satisfies(DESCRIPTORS["lst"], l1)
        assert not theory_satisfies(DESCRIPTORS["mst^S"], l1)

    def test_known_witness_for_mstvS_vs_sylv_pair(self):
        # (xy)^3 = x^2 yx y^2 separates mstvS from both sylvh and sylv
        wit = Identity(tuple("xyxyxy"), tuple("xxyxyy"))
        assert theory_satisfies(DESCRIPTORS["mstvS"], wit)
        assert not theory_satisfies(DESCRIPTORS["sylvh"], wit)
        assert not theory_satisfies(DESCRIPTORS["sylv"], wit)

    def test_comparable_pair_rejected(self):
        with pytest.raises(ComparablePairError):
            witness_incomparable("jst", "baxt")

    def test_hypo_vs_mst(self):
        id1, id2 = witness_incomparable("hypo", "mst")
        assert theory_satisfies(DESCRIPTORS["hypo"], id1)
        assert not theory_satisfies(DESCRIPTORS["mst"], id1)


class TestDot:
    def test_deterministic(self):
        assert to_dot(build("L1")) == to_dot(build("L1"))

    def test_shape(self):
        dot = to_dot(build("L1"))
        lines = dot.strip().splitlines()
        assert lines[0] == "digraph L1 {"
        assert lines[-1] == "}"
        assert sum(1 for line in lines if "->" in line) == 28
        assert '"jst" -> "lst^sylv";' in dot

    def test_all_lattices_render(self):
        for name in ("L1", "L2", "L3"):
            dot = to_dot(build(name))
            assert dot.count("->") == len(build(name).hasse_edges)


class TestEmpiricalOrder:
    def test_order_respected_by_small_identities(self):
        # a below b means theory(b) inside theory(a), over all identities
        # with up to 3 variables and side length up to 5
        lat = build("L3")
        identities = []
        for n_vars in range(1, 4):
            variables = [variable_name(i) for i in range(n_vars)]
            for length in range(n_vars, 6):
                for mults in iter_sorted_multiplicities(n_vars, length):
                    cls = list(words_with_content(dict(zip(variables, mults))))
                    for i, u in enumerate(cls):
                        identities.extend(Identity(u, v) for v in cls[i + 1 :])
        membership = {
            name: [theory_satisfies(DESCRIPTORS[name], ident) for ident in identities]
            for name in lat.nodes
        }
        for a in lat.nodes:
            for b in lat.nodes:
                if lat.leq(a, b):
                    for in_b, in_a in zip(membership[b], membership[a]):
                        assert not (in_b and not in_a)
