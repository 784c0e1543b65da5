"""Plactic-like congruences on letter words.

Eight congruences come with invariant characterizations (content plus
precedences, inversions, occurrence orders or the simple-letter word); the
hyposylvester and metasylvester congruences are decided only by breadth-first
closure over their generating relations.  Every relation preserves content,
so closure within the finite content class is a complete decision procedure.
"""

from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass
from enum import Enum
from typing import Callable, Dict, FrozenSet, Iterable, Iterator, Optional, Set, Tuple

from .errors import CapExceededError, UnknownNameError
from .words import (
    Word,
    Content,
    content,
    first_occurrence_order,
    last_occurrence_order,
    multinomial,
    restrict_to,
    simple_symbols,
    words_with_content,
)

DEFAULT_CLASS_CAP = 100_000


class CongruenceKind(Enum):
    SYLV = "sylv"
    SYLVH = "sylvh"
    BAXT = "baxt"
    HYPO = "hypo"
    LST = "lst"
    RST = "rst"
    MST = "mst"
    JST = "jst"
    HS = "hs"
    MS = "ms"

    @classmethod
    def from_name(cls, name: str) -> "CongruenceKind":
        try:
            return cls(name.lower())
        except ValueError:
            raise UnknownNameError(f"unknown congruence kind {name!r}") from None


K = CongruenceKind

#: Kinds decided by an invariant; HS and MS are BFS-only.
INVARIANT_KINDS = (K.SYLV, K.SYLVH, K.BAXT, K.HYPO, K.LST, K.RST, K.MST, K.JST)


# ---------------------------------------------------------------------------
# invariants


def right_precedences(w: Word) -> FrozenSet[Tuple[int, int, int]]:
    """Triples (b, a, k): the last letter of w in [a, b) is an a, with k b's after it.

    Follows the existential decomposition w = w1 a w2 with |w2|_b = k and no
    letter of [a, b) in w2; for each pair a < b of the support at most one
    decomposition qualifies.
    """
    supp = sorted(set(w))
    out = set()
    for ai, a in enumerate(supp):
        for b in supp[ai + 1 :]:
            split = max(i for i, s in enumerate(w) if a <= s < b)
            if w[split] == a:
                k = sum(1 for s in w[split + 1 :] if s == b)
                out.add((b, a, k))
    return frozenset(out)


def left_precedences(w: Word) -> FrozenSet[Tuple[int, int, int]]:
    """Triples (a, b, k): the first letter of w in (a, b] is a b, with k a's before it."""
    supp = sorted(set(w))
    out = set()
    for ai, a in enumerate(supp):
        for b in supp[ai + 1 :]:
            split = min(i for i, s in enumerate(w) if a < s <= b)
            if w[split] == b:
                k = sum(1 for s in w[:split] if s == a)
                out.add((a, b, k))
    return frozenset(out)


def inversions(w: Word) -> FrozenSet[Tuple[int, int]]:
    """Pairs (b, a) with a < b adjacent in the support and ba a subsequence of w."""
    supp = sorted(set(w))
    first = {s: w.index(s) for s in supp}
    last = {s: len(w) - 1 - w[::-1].index(s) for s in supp}
    return frozenset(
        (b, a)
        for a, b in zip(supp, supp[1:])
        if first[b] < last[a]
    )


@dataclass(frozen=True)
class CongruenceInvariant:
    """Per-congruence fingerprint; only the fields the kind requires are set."""

    kind: CongruenceKind
    content: Content
    left_precedences: Optional[FrozenSet] = None
    right_precedences: Optional[FrozenSet] = None
    inversions: Optional[FrozenSet] = None
    first_order: Optional[Word] = None
    last_order: Optional[Word] = None
    simple_word: Optional[Word] = None


def invariant(kind: CongruenceKind, w: Word) -> CongruenceInvariant:
    """The invariant named by the kind's characterization."""
    if kind not in INVARIANT_KINDS:
        raise UnknownNameError(f"{kind.value} has no invariant characterization")
    c = content(w)
    fields: dict = {}
    if kind in (K.SYLV, K.BAXT):
        fields["right_precedences"] = right_precedences(w)
    if kind in (K.SYLVH, K.BAXT):
        fields["left_precedences"] = left_precedences(w)
    if kind is K.HYPO:
        fields["inversions"] = inversions(w)
    if kind in (K.LST, K.MST):
        fields["first_order"] = first_occurrence_order(w)
    if kind in (K.RST, K.MST):
        fields["last_order"] = last_occurrence_order(w)
    if kind is K.JST:
        fields["simple_word"] = restrict_to(w, simple_symbols(w))
    return CongruenceInvariant(kind, c, **fields)


def invariant_key(kind: CongruenceKind, w: Word):
    """Hashable invariant for grouping; content is left out (group per class)."""
    if kind is K.SYLV:
        return right_precedences(w)
    if kind is K.SYLVH:
        return left_precedences(w)
    if kind is K.BAXT:
        return (left_precedences(w), right_precedences(w))
    if kind is K.HYPO:
        return inversions(w)
    if kind is K.LST:
        return first_occurrence_order(w)
    if kind is K.RST:
        return last_occurrence_order(w)
    if kind is K.MST:
        return (first_occurrence_order(w), last_occurrence_order(w))
    if kind is K.JST:
        return restrict_to(w, simple_symbols(w))
    raise UnknownNameError(f"{kind.value} has no invariant characterization")


# ---------------------------------------------------------------------------
# generating relations
#
# Every relation swaps two adjacent letters subject to a guard elsewhere in
# the word, so single steps are enumerated by scanning adjacent positions and
# testing the guard directly on the concrete word.


def _sylv_swap_ok(w: Word, j: int) -> bool:
    # (ca u b, ac u b): a <= b < c; guard b after the pair.
    a, c = sorted((w[j], w[j + 1]))
    if a == c:
        return False
    return any(a <= s < c for s in w[j + 2 :])


def _sylvh_swap_ok(w: Word, j: int) -> bool:
    # (b u ac, b u ca): a < b <= c; guard b before the pair.
    a, c = sorted((w[j], w[j + 1]))
    if a == c:
        return False
    return any(a < s <= c for s in w[:j])


def _baxt_swap_ok(w: Word, j: int) -> bool:
    # (c u da v b, c u ad v b): a <= b < c <= d, and
    # (b u da v c, b u ad v c): a < b <= c < d.
    a, d = sorted((w[j], w[j + 1]))
    if a == d:
        return False
    before, after = w[:j], w[j + 2 :]
    if any(a <= bb < cc <= d for cc in before for bb in after):
        return True
    return any(a < bb <= cc < d for bb in before for cc in after)


def _lst_swap_ok(w: Word, j: int) -> bool:
    # (a u ab, a u ba): either swapped letter occurs earlier.
    return w[j] in w[:j] or w[j + 1] in w[:j]


def _rst_swap_ok(w: Word, j: int) -> bool:
    # (ab u a, ba u a): either swapped letter occurs later.
    return w[j] in w[j + 2 :] or w[j + 1] in w[j + 2 :]


def _mst_swap_ok(w: Word, j: int) -> bool:
    # (b u ba v b, b u ab v b) and (a u ab v b, a u ba v b): the four guard
    # combinations amount to: one of the pair occurs before, one occurs after.
    before, after = w[:j], w[j + 2 :]
    p, q = w[j], w[j + 1]
    return (p in before or q in before) and (p in after or q in after)


def _hs_swap_ok(w: Word, j: int) -> bool:
    # (ca u b, ac u b): a <= b < c, plus (b u ac, b u ca): a < b < c.
    a, c = sorted((w[j], w[j + 1]))
    if a == c:
        return False
    if any(a <= s < c for s in w[j + 2 :]):
        return True
    return any(a < s < c for s in w[:j])


def _ms_swap_ok(w: Word, j: int) -> bool:
    # (ab u a, ba u a): a < b with another a after, plus
    # (b u ac v b, b u ca v b): a < b < c with the same b before and after.
    a, c = sorted((w[j], w[j + 1]))
    if a == c:
        return False
    if a in w[j + 2 :]:
        return True
    before, after = set(w[:j]), set(w[j + 2 :])
    return any(a < b < c for b in before & after)


_SWAP_GUARDS: Dict[CongruenceKind, Tuple[Callable[[Word, int], bool], ...]] = {
    K.SYLV: (_sylv_swap_ok,),
    K.SYLVH: (_sylvh_swap_ok,),
    K.BAXT: (_baxt_swap_ok,),
    K.HYPO: (_sylv_swap_ok, _sylvh_swap_ok),
    K.LST: (_lst_swap_ok,),
    K.RST: (_rst_swap_ok,),
    K.MST: (_mst_swap_ok,),
    K.JST: (_lst_swap_ok, _rst_swap_ok),
    K.HS: (_hs_swap_ok,),
    K.MS: (_ms_swap_ok,),
}


@dataclass(frozen=True)
class RewriteRelation:
    """A named content-preserving relation with a single-step rewrite procedure."""

    name: str
    instances: Callable[[Word], Iterator[Word]]


def _neighbors(kind: CongruenceKind) -> Callable[[Word], Iterator[Word]]:
    guards = _SWAP_GUARDS[kind]

    def step(w: Word) -> Iterator[Word]:
        for j in range(len(w) - 1):
            if w[j] != w[j + 1] and any(g(w, j) for g in guards):
                yield w[:j] + (w[j + 1], w[j]) + w[j + 2 :]

    return step


RELATIONS: Dict[CongruenceKind, RewriteRelation] = {
    kind: RewriteRelation(kind.value, _neighbors(kind)) for kind in CongruenceKind
}


def relation(kind: CongruenceKind) -> RewriteRelation:
    return RELATIONS[kind]


def class_bfs(
    relations: Iterable[RewriteRelation], w: Word, cap: int = DEFAULT_CLASS_CAP
) -> FrozenSet[Word]:
    """The congruence class of ``w`` under the union of the given relations.

    Complete because all relations preserve content: the class lies inside the
    (finite) content class, whose size is checked against ``cap`` up front.
    """
    bound = multinomial(Counter(w).values())
    if bound > cap:
        raise CapExceededError(
            f"content class of {w!r} has {bound} words, above cap {cap}", bound
        )
    relations = tuple(relations)
    seen: Set[Word] = {w}
    queue = deque([w])
    while queue:
        current = queue.popleft()
        for rel in relations:
            for nxt in rel.instances(current):
                if nxt not in seen:
                    seen.add(nxt)
                    queue.append(nxt)
    return frozenset(seen)


def congruence_class(kind: CongruenceKind, w: Word, cap: int = DEFAULT_CLASS_CAP):
    return class_bfs((RELATIONS[kind],), w, cap)


def equivalent(
    kind: CongruenceKind, u: Word, v: Word, cap: int = DEFAULT_CLASS_CAP
) -> bool:
    """Decide u = v under the congruence.

    Content inequality settles it immediately; kinds with an invariant compare
    invariants, HS and MS fall back to closure over the generated congruence.
    """
    if Counter(u) != Counter(v):
        return False
    if u == v:
        return True
    if kind in INVARIANT_KINDS:
        return invariant_key(kind, u) == invariant_key(kind, v)
    return v in congruence_class(kind, u, cap)


def class_partition(
    kind: CongruenceKind, words: Iterable[Word], cap: int = DEFAULT_CLASS_CAP
) -> Dict[Word, int]:
    """Map each word of one content class to a congruence-class index."""
    words = list(words)
    labels: Dict[Word, int] = {}
    if kind in INVARIANT_KINDS:
        groups: dict = {}
        for w in words:
            groups.setdefault(invariant_key(kind, w), []).append(w)
        for idx, group in enumerate(groups.values()):
            for w in group:
                labels[w] = idx
    else:
        idx = 0
        for w in words:
            if w not in labels:
                for member in congruence_class(kind, w, cap):
                    labels[member] = idx
                idx += 1
    return labels


def meet_equivalent(kinds: Iterable[CongruenceKind], u: Word, v: Word) -> bool:
    """Conjunction of the deciders; kinds must all have invariants."""
    kinds = tuple(kinds)
    for kind in kinds:
        if kind not in INVARIANT_KINDS:
            raise UnknownNameError(
                f"meet over {kind.value} is unsupported (no invariant decider)"
            )
    return all(equivalent(kind, u, v) for kind in kinds)


def join_equivalent(
    kinds: Iterable[CongruenceKind], u: Word, v: Word, cap: int = DEFAULT_CLASS_CAP
) -> bool:
    """Connectivity of u and v by steps each lying in one of the congruences.

    Works within the content class: each kind partitions the class, and the
    join is the transitive closure of the union of the partitions.
    """
    if Counter(u) != Counter(v):
        return False
    if u == v:
        return True
    bound = multinomial(Counter(u).values())
    if bound > cap:
        raise CapExceededError(
            f"content class of {u!r} has {bound} words, above cap {cap}", bound
        )
    cls = list(words_with_content(dict(Counter(u))))
    parent = {w: w for w in cls}

    def find(w):
        while parent[w] != w:
            parent[w] = parent[parent[w]]
            w = parent[w]
        return w

    for kind in kinds:
        groups: dict = {}
        for w, label in class_partition(kind, cls, cap).items():
            groups.setdefault(label, []).append(w)
        for group in groups.values():
            root = find(group[0])
            for w in group[1:]:
                parent[find(w)] = root
    return find(u) == find(v)
