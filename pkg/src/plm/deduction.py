"""Bounded-complete equational consequence, isoterms, and rank experiments.

A deduction step rewrites w = r·ψ(p)·s into r·ψ(q)·s for a basis identity
p ≈ q (either orientation) and an endomorphism ψ, which may erase variables.
All bases here are balanced, so every step stays inside the content class of
the starting word; closure over that finite class is therefore a complete
decision procedure for consequence, not merely a semi-decision.
"""

from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, FrozenSet, Iterable, Iterator, List, Optional, Sequence, Set, Tuple

from .errors import BoundExceededError, CapExceededError
from .varieties import VarietyDescriptor, variety_signature
from .words import (
    Identity,
    Word,
    multinomial,
    simple_symbols,
    variable_name,
    words_with_content,
    iter_sorted_multiplicities,
)

DEFAULT_CAP = 100_000


def match_substitutions(
    pattern: Word, target: Word, allow_empty: bool = True
) -> Iterator[Dict[str, Word]]:
    """All substitutions ψ with ψ(pattern) = target, in deterministic order."""

    def rec(pi: int, ti: int, binding: Dict[str, Word]) -> Iterator[Dict[str, Word]]:
        if pi == len(pattern):
            if ti == len(target):
                yield dict(binding)
            return
        var = pattern[pi]
        if var in binding:
            image = binding[var]
            if target[ti : ti + len(image)] == image:
                yield from rec(pi + 1, ti + len(image), binding)
            return
        start = ti if allow_empty else ti + 1
        for end in range(start, len(target) + 1):
            binding[var] = target[ti:end]
            yield from rec(pi + 1, end, binding)
            del binding[var]

    yield from rec(0, 0, {})


@lru_cache(maxsize=None)
def _factor_rewrites(
    src: Word, dst: Word, factor: Word
) -> Tuple[Tuple[Word, Tuple[Tuple[str, Word], ...]], ...]:
    """All (replacement, ψ) with ψ(src) = factor, replacement = ψ(dst); cached."""
    out = []
    seen = set()
    for psi in match_substitutions(src, factor):
        replacement = sum((psi[x] for x in dst), ())
        key = (replacement, tuple(sorted(psi.items())))
        if key not in seen:
            seen.add(key)
            out.append((replacement, tuple(sorted(psi.items()))))
    return tuple(out)


@dataclass(frozen=True)
class DeductionStep:
    """One application of a basis identity inside a context."""

    basis_identity: Identity
    direction: str  # "forward" applies lhs -> rhs
    substitution: Tuple[Tuple[str, Word], ...]
    left_context: Word
    right_context: Word
    result: Word


def _check_balanced_basis(basis: Iterable[Identity]) -> Tuple[Identity, ...]:
    basis = tuple(basis)
    for identity in basis:
        if not identity.is_balanced:
            raise ValueError(f"basis identity {identity} is not balanced")
    return basis


def one_step(w: Word, basis: Iterable[Identity]) -> Set[Word]:
    """All words reachable from ``w`` by a single deduction step."""
    return {step.result for step in _steps(w, _check_balanced_basis(basis))}


def _steps(w: Word, basis: Tuple[Identity, ...]) -> Iterator[DeductionStep]:
    for identity in basis:
        for direction, src, dst in (
            ("forward", identity.lhs, identity.rhs),
            ("backward", identity.rhs, identity.lhs),
        ):
            for i in range(len(w) + 1):
                for j in range(i, len(w) + 1):
                    for replacement, psi in _factor_rewrites(src, dst, w[i:j]):
                        result = w[:i] + replacement + w[j:]
                        if result != w:
                            yield DeductionStep(
                                identity, direction, psi, w[:i], w[j:], result
                            )


def _class_guard(w: Word, cap: int) -> int:
    bound = multinomial(Counter(w).values())
    if bound > cap:
        raise CapExceededError(
            f"content class of {w!r} has {bound} words, above cap {cap}", bound
        )
    return bound


def is_consequence(
    identity: Identity,
    basis: Iterable[Identity],
    cap: int = DEFAULT_CAP,
) -> bool:
    """Decide whether the identity is a consequence of the basis.

    Complete within the content class: balanced steps cannot leave it, so an
    exhausted search refutes consequence outright.  Non-balanced identities
    are never consequences of a balanced basis.
    """
    return derivation(identity, basis, cap) is not None


def derivation(
    identity: Identity,
    basis: Iterable[Identity],
    cap: int = DEFAULT_CAP,
) -> Optional[List[DeductionStep]]:
    """A step-by-step derivation of the identity, or None if there is none.

    Returns the empty list for trivial identities.
    """
    basis = _check_balanced_basis(basis)
    if identity.is_trivial:
        return []
    if not identity.is_balanced:
        return None
    _class_guard(identity.lhs, cap)
    start, goal = identity.lhs, identity.rhs
    parents: Dict[Word, Optional[Tuple[Word, DeductionStep]]] = {start: None}
    queue = deque([start])
    while queue:
        current = queue.popleft()
        for step in _steps(current, basis):
            nxt = step.result
            if nxt in parents:
                continue
            parents[nxt] = (current, step)
            if nxt == goal:
                chain: List[DeductionStep] = []
                at = goal
                while parents[at] is not None:
                    prev, used = parents[at]
                    chain.append(used)
                    at = prev
                chain.reverse()
                return chain
            queue.append(nxt)
    return None


def is_isoterm(
    variety: VarietyDescriptor, w: Word, cap: int = DEFAULT_CAP
) -> bool:
    """No non-trivial identity with ``w`` on one side holds in the variety.

    Complete because the theory is balanced: any partner word shares the
    content of ``w``, and the finite content class is scanned in full.
    """
    return isoterm_counterexample(variety, w, cap) is None


def isoterm_counterexample(
    variety: VarietyDescriptor, w: Word, cap: int = DEFAULT_CAP
) -> Optional[Identity]:
    """A non-trivial satisfied identity w ≈ w', when one exists."""
    _class_guard(w, cap)
    simples = simple_symbols(w)
    sig = variety_signature(w, variety.properties, simples)
    for other in words_with_content(dict(Counter(w))):
        if other != w and variety_signature(other, variety.properties, simples) == sig:
            return Identity(w, other)
    return None


def min_identity_length(
    variety: VarietyDescriptor, n_vars: int, max_len: int
) -> Optional[int]:
    """Least side length of a non-trivial theory identity in exactly n_vars variables.

    Scans sorted multiplicity vectors only; theories are closed under variable
    renaming, so one representative per content shape suffices.
    """
    if n_vars > 4 or max_len > 8:
        raise BoundExceededError("guards: n_vars <= 4 and max_len <= 8")
    variables = [variable_name(i) for i in range(n_vars)]
    for length in range(n_vars, max_len + 1):
        for mults in iter_sorted_multiplicities(n_vars, length):
            counts = dict(zip(variables, mults))
            simples = frozenset(x for x, m in counts.items() if m == 1)
            groups: Dict = {}
            for w in words_with_content(counts):
                sig = variety_signature(w, variety.properties, simples)
                groups.setdefault(sig, []).append(w)
                if len(groups[sig]) > 1:
                    return length
    return None


# ---------------------------------------------------------------------------
# consequence from a size-restricted slice of a whole theory


def _set_partitions(items: Sequence[int], groups: Dict[int, int], max_blocks: int):
    """Set partitions of ``items`` where blocks never mix distinct group labels."""
    blocks: List[List[int]] = []

    def rec(i: int):
        if i == len(items):
            yield [tuple(b) for b in blocks]
            return
        item = items[i]
        for b in blocks:
            if groups[b[0]] == groups[item]:
                b.append(item)
                yield from rec(i + 1)
                b.pop()
        if len(blocks) < max_blocks:
            blocks.append([item])
            yield from rec(i + 1)
            blocks.pop()

    yield from rec(0)


@lru_cache(maxsize=None)
def _theory_partners(property_tokens: Tuple[str, ...], pattern: Word) -> Tuple[Word, ...]:
    """Within the content class of ``pattern``: the theory-equal other words."""
    from .properties import PropertyKind

    properties = [PropertyKind.from_token(token) for token in property_tokens]
    simples = simple_symbols(pattern)
    sig = variety_signature(pattern, properties, simples)
    return tuple(
        other
        for other in words_with_content(dict(Counter(pattern)))
        if other != pattern
        and variety_signature(other, properties, simples) == sig
    )


def _canonical_key(identity: Identity):
    c = identity.canonical()
    return (c.lhs, c.rhs)


def derivable_from_restricted_theory(
    target: Identity,
    variety: VarietyDescriptor,
    max_vars: int,
    len_cap: int,
    class_cap: int = DEFAULT_CAP,
    exclude: Iterable[Identity] = (),
) -> bool:
    """Consequence of *all* non-trivial theory identities within size bounds.

    The generating set is every non-trivial identity of the variety's theory
    with at most ``max_vars`` distinct variables and side length at most
    ``len_cap``, minus the ``exclude`` list (up to renaming and side swap).
    Complete within the target's content class; ``len_cap`` must reach the
    target's length, since substitution images are bounded by it and the
    theories are closed under erasing variables.
    """
    if len(target.lhs) > len_cap:
        raise BoundExceededError(
            "len_cap below target length breaks bounded completeness"
        )
    if target.is_trivial:
        return True
    if not target.is_balanced:
        return False
    _class_guard(target.lhs, class_cap)
    excluded = {_canonical_key(e) for e in exclude}
    tokens = tuple(sorted(k.value for k in variety.properties))

    def neighbors(w: Word) -> Iterator[Word]:
        for i in range(len(w) + 1):
            for j in range(i + 2, len(w) + 1):
                factor = w[i:j]
                for result_factor in _restricted_factor_rewrites(
                    tokens, factor, max_vars, excluded
                ):
                    yield w[:i] + result_factor + w[j:]

    start, goal = target.lhs, target.rhs
    seen = {start}
    queue = deque([start])
    while queue:
        current = queue.popleft()
        for nxt in neighbors(current):
            if nxt == goal:
                return True
            if nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
    return False


def _restricted_factor_rewrites(
    property_tokens: Tuple[str, ...],
    factor: Word,
    max_vars: int,
    excluded: FrozenSet,
) -> Iterator[Word]:
    """Replacements of ``factor`` by a one-step use of a restricted-theory identity.

    Enumerates factorizations of the factor into non-empty chunks, partitions
    of chunk positions into at most ``max_vars`` variables (chunk-constant, so
    the substitution is well defined), and theory partners of the resulting
    pattern.  Erasing substitutions need no special case: using a longer
    identity with erased variables equals using its erased (still in-theory)
    form with none.
    """
    n = len(factor)
    for cuts in _compositions(n):
        chunks = []
        pos = 0
        for size in cuts:
            chunks.append(factor[pos : pos + size])
            pos += size
        if len(chunks) < 2:
            continue
        labels: Dict[int, int] = {}
        distinct: Dict[Word, int] = {}
        for idx, chunk in enumerate(chunks):
            labels[idx] = distinct.setdefault(chunk, len(distinct))
        for partition in _set_partitions(list(range(len(chunks))), labels, max_vars):
            var_of: Dict[int, str] = {}
            for block_index, block in enumerate(
                sorted(partition, key=lambda b: min(b))
            ):
                for position in block:
                    var_of[position] = variable_name(block_index)
            pattern = tuple(var_of[i] for i in range(len(chunks)))
            image = {var_of[i]: chunks[i] for i in range(len(chunks))}
            for partner in _theory_partners(property_tokens, pattern):
                if _canonical_key(Identity(pattern, partner)) in excluded:
                    continue
                yield sum((image[x] for x in partner), ())


@lru_cache(maxsize=None)
def _compositions(n: int) -> Tuple[Tuple[int, ...], ...]:
    """All ordered tuples of positive integers summing to n."""
    if n == 0:
        return ((),)
    out = []
    for head in range(1, n + 1):
        for tail in _compositions(n - head):
            out.append((head,) + tail)
    return tuple(out)
