import pytest

from plm.deduction import (
    derivable_from_restricted_theory,
    derivation,
    is_consequence,
    is_isoterm,
    isoterm_counterexample,
    match_substitutions,
    min_identity_length,
    one_step,
)
from plm.errors import BoundExceededError, CapExceededError
from plm.varieties import DESCRIPTORS, NAMED_IDENTITIES, descriptor, theory_satisfies
from plm.words import Identity, parse_identity

L1 = NAMED_IDENTITIES["L1"]
R1 = NAMED_IDENTITIES["R1"]
L2 = NAMED_IDENTITIES["L2"]
R2 = NAMED_IDENTITIES["R2"]
M2 = NAMED_IDENTITIES["M2"]
M3 = NAMED_IDENTITIES["M3"]
M4 = NAMED_IDENTITIES["M4"]


class TestMatching:
    def test_exact(self):
        matches = list(match_substitutions(tuple("xy"), tuple("ab")))
        assert {"x": ("a",), "y": ("b",)} in matches
        assert {"x": (), "y": ("a", "b")} in matches

    def test_repeated_variable(self):
        matches = list(match_substitutions(tuple("xx"), tuple("abab")))
        assert {"x": ("a", "b")} in matches
        assert all(m["x"] * 2 == ("a", "b", "a", "b") for m in matches if "x" in m)

    def test_no_match(self):
        assert list(match_substitutions(tuple("xx"), tuple("ab"))) == []


class TestOneStep:
    def test_spec_examples(self):
        assert tuple("xyxy") in one_step(tuple("xxyy"), [L1])
        assert tuple("yxxy") in one_step(tuple("xyxy"), [R2])
        assert one_step(tuple("xy"), []) == set()

    def test_steps_preserve_content(self):
        from collections import Counter

        w = tuple("xxyy")
        for result in one_step(w, [L1, R2]):
            assert Counter(result) == Counter(w)

    def test_unbalanced_basis_rejected(self):
        with pytest.raises(ValueError):
            one_step(tuple("xy"), [Identity(tuple("xy"), tuple("x"))])


class TestConsequence:
    def test_m4_from_l1_r2(self):
        assert is_consequence(M4, [L1, R2], cap=10_000)

    def test_r2_from_l1_m4(self):
        assert is_consequence(R2, [L1, M4], cap=100_000)

    def test_l2_not_from_r2(self):
        assert not is_consequence(L2, [R2], cap=10_000)

    def test_reflexive(self):
        assert is_consequence(parse_identity("x = x"), [])
        assert is_consequence(L1, [L1])

    def test_transitive_monotone(self):
        # xxyy ~ xyxy from L1; and with R2 added, further to yyxx
        mid = Identity(tuple("xxyy"), tuple("xyxy"))
        assert is_consequence(mid, [L1])
        assert is_consequence(mid, [L1, R2])
        assert not is_consequence(M4, [L1])

    def test_unbalanced_is_never_consequence(self):
        assert not is_consequence(Identity(tuple("xy"), tuple("x")), [L1])

    def test_cap(self):
        wide = Identity(tuple("xyztrs"), tuple("srtzyx"))
        with pytest.raises(CapExceededError):
            is_consequence(wide, [L1], cap=10)

    def test_derivation_replays(self):
        chain = derivation(M4, [L1, R2], cap=10_000)
        assert chain, "expected a derivation"
        current = M4.lhs
        for step in chain:
            subst = dict(step.substitution)
            src, dst = (
                (step.basis_identity.lhs, step.basis_identity.rhs)
                if step.direction == "forward"
                else (step.basis_identity.rhs, step.basis_identity.lhs)
            )
            expanded = sum((subst[x] for x in src), ())
            assert current == step.left_context + expanded + step.right_context
            current = (
                step.left_context
                + sum((subst[x] for x in dst), ())
                + step.right_context
            )
            assert current == step.result
        assert current == M4.rhs

    def test_soundness_against_theories(self):
        # whatever the basis derives lies in the variety's theory
        for name in ("sylv", "lst", "mst", "S", "hypo"):
            variety = DESCRIPTORS[name] if name in DESCRIPTORS else descriptor(name)
            basis = variety.basis_identities()
            for w in one_step(tuple("xyxzx"), basis):
                assert theory_satisfies(variety, Identity(tuple("xyxzx"), w))


class TestIsoterm:
    def test_known_isoterms(self):
        assert is_isoterm(descriptor("hypo"), tuple("xzxyty"))
        assert is_isoterm(descriptor("mst"), tuple("xzytxy"))
        assert is_isoterm(descriptor("mst"), tuple("xyzxty"))

    def test_jst_two_simple_letters(self):
        assert is_isoterm(descriptor("jst"), tuple("xy"))

    def test_counterexample_when_not_isoterm(self):
        cex = isoterm_counterexample(descriptor("hypo"), tuple("xzytxy"))
        assert cex is not None
        assert theory_satisfies(descriptor("hypo"), cex)
        assert not is_isoterm(descriptor("hypo"), tuple("xzytxy"))


class TestMinIdentityLength:
    def test_expected_lengths(self):
        v = descriptor("mst^S")
        assert min_identity_length(v, 2, 8) == 4
        assert min_identity_length(v, 3, 8) == 5
        assert min_identity_length(v, 4, 8) == 6

    def test_single_variable_none(self):
        assert min_identity_length(descriptor("baxt"), 1, 8) is None

    def test_guards(self):
        with pytest.raises(BoundExceededError):
            min_identity_length(descriptor("baxt"), 5, 8)


class TestBasisCompletenessFourVariables:
    """Beyond the acceptance bounds: the bases stay complete when the
    four-variable identities fire directly instead of through erasure."""

    def test_all_bases_complete_over_four_variables(self):
        from plm.words import variable_name, words_with_content, iter_sorted_multiplicities
        from plm.varieties import variety_signature

        def blocks(labels):
            groups = {}
            for w, label in labels.items():
                groups.setdefault(label, set()).add(w)
            return frozenset(frozenset(g) for g in groups.values())

        variables = [variable_name(i) for i in range(4)]
        contents = [
            dict(zip(variables, mults))
            for length in range(4, 7)
            for mults in iter_sorted_multiplicities(4, length)
        ]
        for name, variety in DESCRIPTORS.items():
            basis = variety.basis_identities()
            for counts in contents:
                cls = list(words_with_content(counts))
                simples = frozenset(x for x, m in counts.items() if m == 1)
                theory, index = {}, {}
                for w in cls:
                    sig = variety_signature(w, variety.properties, simples)
                    theory[w] = index.setdefault(sig, len(index))
                derivable, idx = {}, 0
                for w in cls:
                    if w in derivable:
                        continue
                    stack = [w]
                    derivable[w] = idx
                    while stack:
                        current = stack.pop()
                        for nxt in one_step(current, basis):
                            if nxt not in derivable:
                                derivable[nxt] = idx
                                stack.append(nxt)
                    idx += 1
                assert blocks(theory) == blocks(derivable), (name, counts)


class TestRestrictedTheory:
    def test_m3_blocked_at_two_variables(self):
        assert not derivable_from_restricted_theory(M3, descriptor("mst^S"), 2, 5)

    def test_m3_trivially_derivable_at_three(self):
        assert derivable_from_restricted_theory(M3, descriptor("hypovmst"), 3, 5)

    def test_m4_is_its_own_witness(self):
        assert derivable_from_restricted_theory(
            M4, descriptor("lst^sylv"), 2, 4, class_cap=1000
        )

    def test_exclusion_convention(self):
        v = descriptor("mst^S")
        for ident in (L2, M2, R2):
            assert derivable_from_restricted_theory(ident, v, 4, 6)
            assert not derivable_from_restricted_theory(ident, v, 4, 6, exclude=[ident])

    def test_exclusion_is_up_to_equivalence(self):
        renamed_swapped = Identity(M2.rhs, M2.lhs).rename(
            {"x": "y", "y": "x", "z": "t", "t": "z"}
        )
        assert not derivable_from_restricted_theory(
            M2, descriptor("mst^S"), 4, 6, exclude=[renamed_swapped]
        )

    def test_len_cap_guard(self):
        with pytest.raises(BoundExceededError):
            derivable_from_restricted_theory(M3, descriptor("mst^S"), 2, 4)
