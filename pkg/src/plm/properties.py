"""The nine identity properties, their precondition, and the implication diagram.

Each property clause compares a statistic of the left side against the same
statistic of the right side, for identities whose sides share support and
simple variables.  ``check_property`` evaluates the clauses literally from
their definitions; ``side_signature`` exposes the per-side statistic as a
hashable value so that bulk enumeration can group words instead of comparing
pairs.  Both routes are kept and tested against each other.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Dict, FrozenSet, Iterable, Optional, Tuple

from .errors import BoundExceededError, PreconditionError
from .words import (
    Identity,
    Word,
    content,
    first_occurrence_order,
    last_occurrence_order,
    prefix_to_first,
    restrict_to,
    simple_symbols,
    subsequences2,
    suffix_from_last,
    words_with_content,
    iter_sorted_multiplicities,
    variable_name,
)


class PropertyKind(Enum):
    C_PRE = "Cpre"
    C_SUF = "Csuf"
    SUB2 = "Sub2"
    RST1V = "Rst1v"
    S_PRE = "Spre"
    S_SUF = "Ssuf"
    S1_PRE = "S1pre"
    S1_SUF = "S1suf"
    RST1 = "Rst1"

    @property
    def token(self) -> str:
        return self.value

    @classmethod
    def from_token(cls, token: str) -> "PropertyKind":
        for kind in cls:
            if kind.value.lower() == token.lower():
                return kind
        raise KeyError(token)


P = PropertyKind

#: Direct implications between the properties (the diagram's arrows).
IMPLICATION_EDGES: Tuple[Tuple[PropertyKind, PropertyKind], ...] = (
    (P.C_PRE, P.S_PRE),
    (P.C_PRE, P.SUB2),
    (P.C_PRE, P.RST1V),
    (P.C_SUF, P.S_SUF),
    (P.C_SUF, P.SUB2),
    (P.C_SUF, P.RST1V),
    (P.SUB2, P.S1_PRE),
    (P.SUB2, P.S1_SUF),
    (P.RST1V, P.S1_PRE),
    (P.RST1V, P.S1_SUF),
    (P.S_PRE, P.S1_PRE),
    (P.S_SUF, P.S1_SUF),
    (P.S1_PRE, P.RST1),
    (P.S1_SUF, P.RST1),
)


def _closure() -> Dict[PropertyKind, FrozenSet[PropertyKind]]:
    reach = {p: {p} for p in PropertyKind}
    changed = True
    while changed:
        changed = False
        for p, q in IMPLICATION_EDGES:
            new = reach[q] - reach[p]
            if new:
                reach[p] |= new
                changed = True
    return {p: frozenset(qs) for p, qs in reach.items()}


IMPLICATION_CLOSURE = _closure()


def implies(p: PropertyKind, q: PropertyKind) -> bool:
    """True iff the diagram has a directed path from ``p`` to ``q`` (reflexive)."""
    return q in IMPLICATION_CLOSURE[p]


def closure(kinds: Iterable[PropertyKind]) -> FrozenSet[PropertyKind]:
    """All properties entailed by some member of ``kinds``."""
    result: set = set()
    for p in kinds:
        result |= IMPLICATION_CLOSURE[p]
    return frozenset(result)


def shares_support_and_simples(identity: Identity) -> bool:
    """True iff both sides have the same support and the same simple variables."""
    return (
        frozenset(identity.lhs) == frozenset(identity.rhs)
        and simple_symbols(identity.lhs) == simple_symbols(identity.rhs)
    )


def _require_precondition(identity: Identity) -> None:
    if not shares_support_and_simples(identity):
        raise PreconditionError(
            f"sides of {identity} differ in support or simple variables"
        )


def check_property(identity: Identity, kind: PropertyKind) -> bool:
    """Evaluate one property clause, literally from its definition.

    Raises :class:`PreconditionError` when the sides do not share support and
    simple variables; the clauses are only defined under that hypothesis.
    """
    _require_precondition(identity)
    u, v = identity.lhs, identity.rhs
    supp = sorted(frozenset(u), key=str)
    simples = simple_symbols(u)

    if kind is P.C_PRE:
        return all(
            content(prefix_to_first(u, x)) == content(prefix_to_first(v, x))
            for x in supp
        )
    if kind is P.C_SUF:
        return all(
            content(suffix_from_last(u, x)) == content(suffix_from_last(v, x))
            for x in supp
        )
    if kind is P.SUB2:
        return subsequences2(u) == subsequences2(v)
    if kind is P.RST1V:
        return all(
            restrict_to(u, simples | {x}) == restrict_to(v, simples | {x})
            for x in supp
        )
    if kind is P.S_PRE:
        return all(
            frozenset(prefix_to_first(u, x)) == frozenset(prefix_to_first(v, x))
            for x in supp
        )
    if kind is P.S_SUF:
        return all(
            frozenset(suffix_from_last(u, x)) == frozenset(suffix_from_last(v, x))
            for x in supp
        )
    if kind is P.S1_PRE:
        return all(
            frozenset(prefix_to_first(u, x)) == frozenset(prefix_to_first(v, x))
            for x in sorted(simples, key=str)
        )
    if kind is P.S1_SUF:
        return all(
            frozenset(suffix_from_last(u, x)) == frozenset(suffix_from_last(v, x))
            for x in sorted(simples, key=str)
        )
    if kind is P.RST1:
        return restrict_to(u, simples) == restrict_to(v, simples)
    raise KeyError(kind)


def rst1v_prefix_form(identity: Identity) -> bool:
    """Equivalent form of Rst1v for balanced identities.

    For every simple variable, the shortest prefixes of both sides in which it
    occurs must have the same content.  Agrees with the restriction form on
    balanced identities; tested, not used as the default.
    """
    _require_precondition(identity)
    if not identity.is_balanced:
        raise ValueError("prefix-content form of Rst1v applies to balanced identities")
    u, v = identity.lhs, identity.rhs
    return all(
        content(prefix_to_first(u, x)) == content(prefix_to_first(v, x))
        for x in sorted(simple_symbols(u), key=str)
    )


# ---------------------------------------------------------------------------
# per-side signatures
#
# For two words of equal content, each property holds iff the corresponding
# signatures coincide, which turns pairwise checks into grouping.  All run in
# O(n + k^2) for word length n over k symbols.


def _prefix_content_signature(w: Word):
    counts: Dict = {}
    snapshots = []
    seen = set()
    for s in w:
        counts[s] = counts.get(s, 0) + 1
        if s not in seen:
            seen.add(s)
            snapshots.append((s, frozenset(counts.items())))
    return tuple(sorted(snapshots, key=lambda kv: str(kv[0])))


def _simple_prefix_support_signature(w: Word, simples: FrozenSet):
    order = first_occurrence_order(w)
    sig = []
    for i, s in enumerate(order):
        if s in simples:
            sig.append((s, frozenset(order[: i + 1])))
    return tuple(sorted(sig, key=lambda kv: str(kv[0])))


def _skeleton_and_gaps(w: Word, simples: FrozenSet):
    skeleton = tuple(s for s in w if s in simples)
    gaps: Dict = {}
    gap_index = 0
    for s in w:
        if s in simples:
            gap_index += 1
        else:
            gaps.setdefault(s, []).append(gap_index)
    per_symbol = tuple(
        (s, tuple(positions)) for s, positions in sorted(gaps.items(), key=lambda kv: str(kv[0]))
    )
    return skeleton, per_symbol


def side_signature(w: Word, kind: PropertyKind, simples: Optional[FrozenSet] = None):
    """Hashable statistic of one side; equal contents + equal signatures <=> property.

    ``simples`` is the set of simple variables of the identity; it defaults to
    the simple symbols of ``w`` itself, which is correct whenever the two
    sides being compared have the same content.
    """
    if simples is None:
        simples = simple_symbols(w)
    if kind is P.C_PRE:
        return _prefix_content_signature(w)
    if kind is P.C_SUF:
        return _prefix_content_signature(w[::-1])
    if kind is P.SUB2:
        return subsequences2(w)
    if kind is P.RST1V:
        return _skeleton_and_gaps(w, simples)
    if kind is P.S_PRE:
        return first_occurrence_order(w)
    if kind is P.S_SUF:
        return last_occurrence_order(w)
    if kind is P.S1_PRE:
        return _simple_prefix_support_signature(w, simples)
    if kind is P.S1_SUF:
        return _simple_prefix_support_signature(w[::-1], simples)
    if kind is P.RST1:
        return restrict_to(w, simples)
    raise KeyError(kind)


ALL_KINDS: Tuple[PropertyKind, ...] = tuple(PropertyKind)


def satisfied_properties(identity: Identity) -> FrozenSet[PropertyKind]:
    """The set of properties a balanced identity satisfies, via signatures."""
    _require_precondition(identity)
    simples = identity.simple_variables
    return frozenset(
        kind
        for kind in ALL_KINDS
        if side_signature(identity.lhs, kind, simples)
        == side_signature(identity.rhs, kind, simples)
    )


@dataclass(frozen=True)
class PropertyProfile:
    balanced: bool
    precondition_ok: bool
    satisfied: FrozenSet[PropertyKind]

    def tokens(self) -> Tuple[str, ...]:
        return tuple(k.token for k in ALL_KINDS if k in self.satisfied)


def property_profile(identity: Identity) -> PropertyProfile:
    """Balancedness, precondition, and satisfied property set of an identity."""
    ok = shares_support_and_simples(identity)
    satisfied = satisfied_properties(identity) if ok else frozenset()
    return PropertyProfile(identity.is_balanced, ok, satisfied)


# ---------------------------------------------------------------------------
# empirical check of the implication diagram


@dataclass
class ImplicationReport:
    max_len: int
    max_vars: int
    identities_checked: int
    violations: list
    separators: dict

    @property
    def ok(self) -> bool:
        return not self.violations

    def separator(self, p: PropertyKind, q: PropertyKind) -> Optional[Identity]:
        return self.separators.get((p, q))


def verify_implications_empirically(max_len: int, max_vars: int) -> ImplicationReport:
    """Check the diagram over all balanced identities within the bounds.

    Declared edges must have no counterexample; for each ordered non-edge a
    separating identity is recorded when one exists within the bounds.
    """
    if max_len > 8 or max_vars > 4:
        raise BoundExceededError(
            f"bounds ({max_len}, {max_vars}) exceed the tractability guard (8, 4)"
        )
    non_edges = [
        (p, q)
        for p in ALL_KINDS
        for q in ALL_KINDS
        if p is not q and not implies(p, q)
    ]
    violations = []
    separators: dict = {}
    checked = 0
    for n_vars in range(1, max_vars + 1):
        variables = [variable_name(i) for i in range(n_vars)]
        for length in range(n_vars, max_len + 1):
            for mults in iter_sorted_multiplicities(n_vars, length):
                counts = dict(zip(variables, mults))
                simples = frozenset(x for x, m in counts.items() if m == 1)
                cls = list(words_with_content(counts))
                sigs = {
                    w: {k: side_signature(w, k, simples) for k in ALL_KINDS}
                    for w in cls
                }
                for i, u in enumerate(cls):
                    for v in cls[i + 1 :]:
                        checked += 1
                        sat = {
                            k for k in ALL_KINDS if sigs[u][k] == sigs[v][k]
                        }
                        for p, q in IMPLICATION_EDGES:
                            if p in sat and q not in sat:
                                violations.append((Identity(u, v), p, q))
                        for p, q in non_edges:
                            if (p, q) not in separators and p in sat and q not in sat:
                                separators[(p, q)] = Identity(u, v)
    return ImplicationReport(max_len, max_vars, checked, violations, separators)
