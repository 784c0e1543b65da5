from collections import Counter

import pytest
from hypothesis import given, strategies as st

from plm.errors import BoundExceededError, PreconditionError
from plm.properties import (
    ALL_KINDS,
    IMPLICATION_EDGES,
    PropertyKind as P,
    check_property,
    implies,
    property_profile,
    rst1v_prefix_form,
    satisfied_properties,
    shares_support_and_simples,
    verify_implications_empirically,
)
from plm.varieties import NAMED_IDENTITIES
from plm.words import Identity, parse_identity, words_with_content

L2 = NAMED_IDENTITIES["L2"]
R1 = NAMED_IDENTITIES["R1"]
M2 = NAMED_IDENTITIES["M2"]


def ident(text):
    return parse_identity(text)


class TestPrecondition:
    def test_shared(self):
        assert shares_support_and_simples(L2)
        assert shares_support_and_simples(ident("xxy = xyx"))

    def test_not_shared(self):
        assert not shares_support_and_simples(Identity(tuple("xy"), tuple("x")))
        # same support, different simple variables
        assert not shares_support_and_simples(Identity(tuple("xy"), tuple("xyy")))

    def test_check_raises_without_precondition(self):
        with pytest.raises(PreconditionError):
            check_property(Identity(tuple("xy"), tuple("x")), P.SUB2)


class TestCheckProperty:
    @pytest.mark.parametrize(
        "identity,kind,expected",
        [
            (L2, P.C_PRE, True),
            (L2, P.C_SUF, False),
            (ident("xxy = xyx"), P.S1_PRE, True),
            (ident("xxy = xyx"), P.SUB2, False),
            (ident("xzxytx = xzyxtx"), P.SUB2, True),
            (R1, P.S_SUF, True),
            (R1, P.S_PRE, False),
            (M2, P.S_PRE, True),
            (M2, P.S_SUF, True),
            (M2, P.RST1V, True),
            (M2, P.SUB2, False),
        ],
    )
    def test_examples(self, identity, kind, expected):
        assert check_property(identity, kind) is expected

    def test_rst1v_prefix_form_agrees(self):
        for tag, identity in NAMED_IDENTITIES.items():
            assert rst1v_prefix_form(identity) == check_property(identity, P.RST1V)

    @given(st.sampled_from(sorted(NAMED_IDENTITIES)), st.sampled_from(ALL_KINDS))
    def test_signatures_agree_with_literal_checks(self, tag, kind):
        identity = NAMED_IDENTITIES[tag]
        fast = kind in satisfied_properties(identity)
        assert fast == check_property(identity, kind)


class TestImplications:
    def test_diagram_edges(self):
        assert implies(P.SUB2, P.S1_PRE)
        assert not implies(P.S1_PRE, P.SUB2)
        assert implies(P.C_PRE, P.C_PRE)
        assert implies(P.C_PRE, P.RST1)  # via Sub2/Rst1v -> S1pre -> Rst1
        assert not implies(P.C_PRE, P.C_SUF)
        assert not implies(P.S_PRE, P.S_SUF)

    def test_edge_count(self):
        assert len(IMPLICATION_EDGES) == 14

    def test_monotone_on_balanced_enumeration(self):
        # every satisfied property drags its implied properties along
        for counts in ({"x": 2, "y": 2}, {"x": 2, "y": 1, "z": 1}, {"x": 3, "y": 2}):
            cls = list(words_with_content(counts))
            for i, u in enumerate(cls):
                for v in cls[i + 1 :]:
                    sat = satisfied_properties(Identity(u, v))
                    for p, q in IMPLICATION_EDGES:
                        assert not (p in sat and q not in sat)

    def test_erasing_a_variable_preserves_properties(self):
        for counts in ({"x": 2, "y": 1, "z": 2}, {"x": 2, "y": 2, "z": 1}):
            cls = list(words_with_content(counts))
            for i, u in enumerate(cls):
                for v in cls[i + 1 :]:
                    sat = satisfied_properties(Identity(u, v))
                    for gone in counts:
                        erased = Identity(
                            tuple(s for s in u if s != gone),
                            tuple(s for s in v if s != gone),
                        )
                        if erased.is_trivial:
                            continue
                        erased_sat = satisfied_properties(erased)
                        assert sat <= erased_sat


class TestSymmetry:
    @given(
        st.builds(tuple, st.lists(st.sampled_from("xyz"), min_size=1, max_size=6))
    )
    def test_swap_and_rename_invariance(self, u):
        for v in list(words_with_content(dict(Counter(u))))[:8]:
            identity = Identity(u, v)
            swapped = Identity(v, u)
            renamed = identity.rename({"x": "y", "y": "z", "z": "x"})
            assert satisfied_properties(identity) == satisfied_properties(swapped)
            assert satisfied_properties(identity) == satisfied_properties(renamed)


class TestEmpiricalDiagram:
    def test_bound_guard(self):
        with pytest.raises(BoundExceededError):
            verify_implications_empirically(9, 3)

    def test_small_is_vacuous(self):
        report = verify_implications_empirically(2, 1)
        assert report.ok and not report.separators

    def test_full_check_at_desk_scale(self):
        report = verify_implications_empirically(6, 3)
        assert report.ok, report.violations
        xxy_xyx = parse_identity("xxy = xyx")
        assert report.separator(P.S1_PRE, P.SUB2) == xxy_xyx.canonical()
        r1 = report.separator(P.S_SUF, P.S_PRE)
        assert r1 is not None
        sat = satisfied_properties(r1)
        assert P.S_SUF in sat and P.S_PRE not in sat
        # at three variables every declared non-edge of the diagram separates
        non_edges = [
            (p, q)
            for p in ALL_KINDS
            for q in ALL_KINDS
            if p is not q and not implies(p, q)
        ]
        missing = [pq for pq in non_edges if report.separator(*pq) is None]
        assert not missing


class TestProfile:
    def test_profile_of_m2(self):
        profile = property_profile(M2)
        assert profile.balanced and profile.precondition_ok
        assert profile.satisfied == {
            P.RST1V, P.S_PRE, P.S_SUF, P.S1_PRE, P.S1_SUF, P.RST1
        }

    def test_profile_without_precondition(self):
        profile = property_profile(Identity(tuple("xy"), tuple("x")))
        assert not profile.precondition_ok and profile.satisfied == frozenset()
