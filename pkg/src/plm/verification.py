"""The acceptance suite: every headline claim, runnable at desk scale.

Each criterion compares an invariant-style decision procedure against an
independent ground truth (breadth-first closure over generating relations,
exhaustive monoid evaluation, or full enumeration of content classes), at
bounds small enough to be exact.
"""

from __future__ import annotations

import random
import time
from collections import Counter
from dataclasses import dataclass
from itertools import product as iproduct
from typing import Dict, Iterator, List, Sequence, Tuple

from . import congruences as cg
from .congruences import CongruenceKind as K
from .deduction import derivable_from_restricted_theory, min_identity_length, is_isoterm, one_step
from .lattice import build, verify as lattice_verify, descriptor_leq
from .monoids import builtin
from .properties import PropertyKind, side_signature
from .varieties import (
    DESCRIPTORS,
    NAMED_IDENTITIES,
    classify,
    descriptor,
    theory_satisfies,
    variety_signature,
)
from .words import (
    Identity,
    Word,
    simple_symbols,
    variable_name,
    words_with_content,
    iter_multiplicity_vectors,
    iter_sorted_multiplicities,
)


@dataclass
class CriterionResult:
    id: int
    description: str
    passed: bool
    detail: str
    seconds: float


@dataclass
class SuiteReport:
    suite: str
    results: List[CriterionResult]

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    def lines(self) -> List[str]:
        return [
            f"[{'PASS' if r.passed else 'FAIL'}] criterion {r.id:2d} "
            f"({r.seconds:6.2f}s): {r.description}" + ("" if r.passed else f" -- {r.detail}")
            for r in self.results
        ]


def _letter_contents(rank: int, max_len: int) -> Iterator[Dict[int, int]]:
    """All contents over the alphabet [rank] with total length 2..max_len."""
    for length in range(2, max_len + 1):
        for n_used in range(1, rank + 1):
            for letters in _letter_subsets(rank, n_used):
                for mults in iter_multiplicity_vectors(n_used, length):
                    yield dict(zip(letters, mults))


def _letter_subsets(rank: int, size: int) -> Iterator[Tuple[int, ...]]:
    from itertools import combinations

    yield from combinations(range(1, rank + 1), size)


def _bfs_partition(kind: K, words: Sequence[Word]) -> Dict[Word, int]:
    """Connected components of the rewrite graph, ignoring any invariant."""
    rel = cg.RELATIONS[kind]
    labels: Dict[Word, int] = {}
    idx = 0
    for w in words:
        if w in labels:
            continue
        stack = [w]
        labels[w] = idx
        while stack:
            current = stack.pop()
            for nxt in rel.instances(current):
                if nxt not in labels:
                    labels[nxt] = idx
                    stack.append(nxt)
        idx += 1
    return labels


def _as_blocks(labels: Dict[Word, int]) -> frozenset:
    groups: Dict[int, list] = {}
    for w, label in labels.items():
        groups.setdefault(label, []).append(w)
    return frozenset(frozenset(g) for g in groups.values())


def _refine(*partitions: Dict[Word, int]) -> Dict[Word, int]:
    keys = {w: tuple(p[w] for p in partitions) for w in partitions[0]}
    index: Dict[tuple, int] = {}
    return {w: index.setdefault(key, len(index)) for w, key in keys.items()}


def _join_partitions(words: Sequence[Word], *partitions: Dict[Word, int]) -> Dict[Word, int]:
    parent = {w: w for w in words}

    def find(w):
        while parent[w] != w:
            parent[w] = parent[parent[w]]
            w = parent[w]
        return w

    for partition in partitions:
        firsts: Dict[int, Word] = {}
        for w in words:
            label = partition[w]
            if label in firsts:
                parent[find(w)] = find(firsts[label])
            else:
                firsts[label] = w
    index: Dict[Word, int] = {}
    return {w: index.setdefault(find(w), len(index)) for w in words}


_SCALES = {"paper": ((3, 6), (2, 7)), "quick": ((3, 5), (2, 6))}


def check_invariants_vs_bfs(scales) -> Tuple[bool, str]:
    """Criterion 1: invariant deciders equal generated-congruence ground truth."""
    for rank, max_len in scales:
        for counts in _letter_contents(rank, max_len):
            cls = list(words_with_content(counts))
            for kind in cg.INVARIANT_KINDS:
                by_inv = cg.class_partition(kind, cls)
                by_bfs = _bfs_partition(kind, cls)
                if _as_blocks(by_inv) != _as_blocks(by_bfs):
                    return False, f"{kind.value} disagrees on content {counts}"
    return True, ""


def check_meet_characterizations(scales) -> Tuple[bool, str]:
    """Criterion 2: baxt = sylv meet sylv#, mSt = lSt meet rSt."""
    pairs = (((K.SYLV, K.SYLVH), K.BAXT), ((K.LST, K.RST), K.MST))
    for rank, max_len in scales:
        for counts in _letter_contents(rank, max_len):
            cls = list(words_with_content(counts))
            for (k1, k2), meet_kind in pairs:
                refined = _refine(
                    cg.class_partition(k1, cls), cg.class_partition(k2, cls)
                )
                direct = cg.class_partition(meet_kind, cls)
                if _as_blocks(refined) != _as_blocks(direct):
                    return False, f"{meet_kind.value} misses meet on {counts}"
    return True, ""


def check_join_characterization(scales) -> Tuple[bool, str]:
    """Criterion 3: hypo = join of sylv and sylv#."""
    for rank, max_len in scales:
        for counts in _letter_contents(rank, max_len):
            cls = list(words_with_content(counts))
            joined = _join_partitions(
                cls,
                cg.class_partition(K.SYLV, cls),
                cg.class_partition(K.SYLVH, cls),
            )
            direct = cg.class_partition(K.HYPO, cls)
            if _as_blocks(joined) != _as_blocks(direct):
                return False, f"hypo misses join on {counts}"
    return True, ""


def _words_up_to(n_vars: int, max_len: int) -> List[Word]:
    variables = [variable_name(i) for i in range(n_vars)]
    out: List[Word] = [()]
    frontier: List[Word] = [()]
    for _ in range(max_len):
        frontier = [w + (x,) for w in frontier for x in variables]
        out.extend(frontier)
    return out


def check_j1_theories(max_len: int) -> Tuple[bool, str]:
    """Criterion 4: J1 satisfies an identity iff precondition plus S1suf; dual for J1dual."""
    j1 = builtin("J1")
    j1d = builtin("J1dual")
    variables = [variable_name(i) for i in range(3)]
    words = _words_up_to(3, max_len)
    assignments = list(iproduct(range(j1.size), repeat=3))

    def eval_vector(monoid, w: Word):
        return tuple(
            monoid.eval_word([env[x] for x in w])
            for env in (dict(zip(variables, values)) for values in assignments)
        )

    info = {}
    for w in words:
        simples = simple_symbols(w)
        info[w] = (
            eval_vector(j1, w),
            eval_vector(j1d, w),
            frozenset(w),
            simples,
            side_signature(w, PropertyKind.S1_SUF, simples),
            side_signature(w, PropertyKind.S1_PRE, simples),
        )
    for u in words:
        vec1_u, vec1d_u, supp_u, simp_u, s1s_u, s1p_u = info[u]
        for v in words:
            vec1_v, vec1d_v, supp_v, simp_v, s1s_v, s1p_v = info[v]
            precondition = supp_u == supp_v and simp_u == simp_v
            sat_j1 = vec1_u == vec1_v
            expected = precondition and s1s_u == s1s_v
            if sat_j1 != expected:
                return False, f"J1 vs S1suf disagree on {Identity(u, v)}"
            sat_j1d = vec1d_u == vec1d_v
            expected_d = precondition and s1p_u == s1p_v
            if sat_j1d != expected_d:
                return False, f"J1dual vs S1pre disagree on {Identity(u, v)}"
    return True, ""


def check_basis_completeness(max_len: int) -> Tuple[bool, str]:
    """Criterion 5: for all 26 pairs, theory membership equals consequence.

    Partition comparison per content class: theory-equal means equal variety
    signatures, derivable means connected under basis rewriting.  Sorted
    multiplicity representatives suffice, both relations being invariant
    under variable renaming.
    """
    contents = []
    for n_vars in range(1, 4):
        variables = [variable_name(i) for i in range(n_vars)]
        for length in range(n_vars, max_len + 1):
            for mults in iter_sorted_multiplicities(n_vars, length):
                contents.append(dict(zip(variables, mults)))
    for name, variety in DESCRIPTORS.items():
        basis = variety.basis_identities()
        for counts in contents:
            cls = list(words_with_content(counts))
            simples = frozenset(x for x, m in counts.items() if m == 1)
            theory_labels: Dict[Word, int] = {}
            index: Dict[tuple, int] = {}
            for w in cls:
                sig = variety_signature(w, variety.properties, simples)
                theory_labels[w] = index.setdefault(sig, len(index))
            derivable_labels: Dict[Word, int] = {}
            idx = 0
            for w in cls:
                if w in derivable_labels:
                    continue
                stack = [w]
                derivable_labels[w] = idx
                while stack:
                    current = stack.pop()
                    for nxt in one_step(current, basis):
                        if nxt not in derivable_labels:
                            derivable_labels[nxt] = idx
                            stack.append(nxt)
                idx += 1
            if _as_blocks(theory_labels) != _as_blocks(derivable_labels):
                return False, f"{name}: basis incomplete on content {counts}"
    return True, ""


def check_hs_ms(max_len: int, sub_len: int) -> Tuple[bool, str]:
    """Criterion 6: hs equals sylv over two letters; ms satisfies xyzxty = yxzxty."""
    for counts in _letter_contents(2, max_len):
        cls = list(words_with_content(counts))
        if _as_blocks(_bfs_partition(K.HS, cls)) != _as_blocks(
            cg.class_partition(K.SYLV, cls)
        ):
            return False, f"hs differs from sylv on {counts}"

    r2 = NAMED_IDENTITIES["R2"]
    images: List[Word] = [()]
    for length in range(1, sub_len + 1):
        images.extend(iproduct((1, 2), repeat=length))
    variables = sorted(r2.variables)
    partitions: Dict[tuple, Dict[Word, int]] = {}
    for choice in iproduct(images, repeat=len(variables)):
        env = dict(zip(variables, choice))
        left = sum((env[x] for x in r2.lhs), ())
        right = sum((env[x] for x in r2.rhs), ())
        if left == right:
            continue
        key = tuple(sorted(Counter(left).items()))
        if key not in partitions:
            partitions[key] = _bfs_partition(
                K.MS, list(words_with_content(dict(key)))
            )
        labels = partitions[key]
        if labels[left] != labels[right]:
            return False, f"ms falsifies R2 under {env}"
    return True, ""


def check_shortest_identities(cases: Sequence[int]) -> Tuple[bool, str]:
    """Criterion 7: shortest n-variable identity of mst^S has length n+2."""
    v = descriptor("mst^S")
    for n in cases:
        got = min_identity_length(v, n, 8)
        if got != n + 2:
            return False, f"n={n}: got {got}, want {n + 2}"
    return True, ""


def check_axiomatic_rank_bounds(include_oe: bool = True) -> Tuple[bool, str]:
    """Criterion 8: the bounded non-derivability searches behind the rank results."""
    m3 = NAMED_IDENTITIES["M3"]
    if derivable_from_restricted_theory(m3, descriptor("mst^S"), 2, 5):
        return False, "M3 derivable from 2-variable part of mst^S theory"
    for tag in ("L2", "M2", "R2"):
        ident = NAMED_IDENTITIES[tag]
        if derivable_from_restricted_theory(
            ident, descriptor("mst^S"), 4, 6, exclude=[ident]
        ):
            return False, f"{tag} derivable from 4-variable part of mst^S theory"
    if include_oe:
        for tag, vname in (("O12", "lstvS"), ("E12", "lstvS"), ("O21", "rstvS"), ("E21", "rstvS")):
            ident = NAMED_IDENTITIES[tag]
            if derivable_from_restricted_theory(
                ident, descriptor(vname), 5, 8, exclude=[ident]
            ):
                return False, f"{tag} derivable from 5-variable part of {vname} theory"
    return True, ""


def check_lattices() -> Tuple[bool, str]:
    """Criterion 9: the three lattice reports pass in full."""
    for name in ("L1", "L2", "L3"):
        report = lattice_verify(build(name))
        if not report.ok:
            failures = "; ".join(c.name for c in report.failures())
            return False, f"{name}: {failures}"
    return True, ""


def check_isoterms() -> Tuple[bool, str]:
    """Criterion 10: the isoterm checks."""
    cases = (
        ("hypo", "xzxyty"),
        ("mst", "xzytxy"),
        ("mst", "xyzxty"),
    )
    for vname, text in cases:
        if not is_isoterm(descriptor(vname), tuple(text)):
            return False, f"{text} is not detected as an isoterm for {vname}"
    return True, ""


def check_unique_cover() -> Tuple[bool, str]:
    """Criterion 11: jst lies strictly below every other descriptor and only below
    full balancedness, at descriptor level."""
    jst = descriptor("jst")
    for name, other in DESCRIPTORS.items():
        if name == "jst":
            continue
        if not (descriptor_leq("jst", name) and not descriptor_leq(name, "jst")):
            return False, f"jst not strictly below {name}"
        witness = next(
            (
                ident
                for ident in NAMED_IDENTITIES.values()
                if theory_satisfies(jst, ident) and not theory_satisfies(other, ident)
            ),
            None,
        )
        if witness is None:
            return False, f"no strictness witness for jst < {name}"
    commutativity = Identity(("x", "y"), ("y", "x"))
    if theory_satisfies(jst, commutativity):
        return False, "theory(jst) is not strictly below balancedness"
    return True, ""


def check_classification_speed(length: int, budget: float) -> Tuple[bool, str]:
    """Criterion 12: classify a random long balanced identity within the budget."""
    rng = random.Random(7)
    variables = [variable_name(i) for i in range(26)]
    letters = [variables[rng.randrange(26)] for _ in range(length - 26)] + variables
    lhs = list(letters)
    rhs = list(letters)
    rng.shuffle(lhs)
    rng.shuffle(rhs)
    identity = Identity(tuple(lhs), tuple(rhs))
    start = time.perf_counter()
    classify(identity)
    elapsed = time.perf_counter() - start
    if elapsed >= budget:
        return False, f"classification took {elapsed:.3f}s (budget {budget}s)"
    return True, f"{elapsed:.3f}s"


CRITERIA = {
    1: "congruence invariants match BFS ground truth",
    2: "baxt and mSt decide the meets of their congruence pairs",
    3: "hypo decides the join of sylv and sylv#",
    4: "J1/J1dual theories are S1suf/S1pre under the precondition",
    5: "all 26 finite bases are complete at desk scale",
    6: "hs = sylv over two letters; ms satisfies xyzxty = yxzxty",
    7: "shortest n-variable identity of mst^S has length n+2",
    8: "bounded axiomatic-rank non-derivability searches",
    9: "lattices L1, L2, L3 verify against the symbolic order",
    10: "isoterm checks for hypo and mst",
    11: "jst is the unique overcommutative atom at descriptor level",
    12: "classification of a long identity is fast",
}


def run_suite(suite: str = "paper") -> SuiteReport:
    """Run the acceptance criteria; ``quick`` uses reduced bounds."""
    if suite not in ("paper", "quick"):
        raise ValueError(f"unknown suite {suite!r} (expected 'paper' or 'quick')")
    quick = suite == "quick"
    scales = _SCALES["quick" if quick else "paper"]
    plan = [
        (1, lambda: check_invariants_vs_bfs(scales)),
        (2, lambda: check_meet_characterizations(scales)),
        (3, lambda: check_join_characterization(scales)),
        (4, lambda: check_j1_theories(4 if quick else 5)),
        (5, lambda: check_basis_completeness(5 if quick else 6)),
        (6, lambda: check_hs_ms(6 if quick else 8, 1 if quick else 2)),
        (7, lambda: check_shortest_identities((2, 3) if quick else (2, 3, 4))),
        (8, lambda: check_axiomatic_rank_bounds(include_oe=not quick)),
        (9, check_lattices),
        (10, check_isoterms),
        (11, check_unique_cover),
        (12, lambda: check_classification_speed(10_000 if quick else 100_000, 1.0)),
    ]
    results = []
    for cid, fn in plan:
        start = time.perf_counter()
        passed, detail = fn()
        results.append(
            CriterionResult(
                cid, CRITERIA[cid], passed, detail, time.perf_counter() - start
            )
        )
    return SuiteReport(suite, results)
