"""Finite monoids as Cayley tables, built from presentations or semantics.

The built-ins are the small monoids whose equational theories match single
identity properties: the four-element presented monoids, the flip-flops, the
Rees factor over the non-factors of ``ab``, and the five order-preserving
extensive transformations of the three-element chain.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from .congruences import CongruenceKind, equivalent
from .errors import BoundExceededError, UnknownNameError
from .words import Identity, Word

_VALIDATE_LIMIT = 128  # past this, associativity is structural (products)


@dataclass(frozen=True)
class FiniteMonoid:
    """A finite monoid given by its multiplication table."""

    names: Tuple[str, ...]
    table: Tuple[Tuple[int, ...], ...]
    identity_elt: int
    zero_elt: Optional[int] = None

    def __post_init__(self):
        n = self.size
        if any(len(row) != n for row in self.table) or len(self.table) != n:
            raise ValueError("table must be square")
        e = self.identity_elt
        if any(self.table[e][x] != x or self.table[x][e] != x for x in range(n)):
            raise ValueError(f"element {self.names[e]} is not a two-sided identity")
        if self.zero_elt is not None:
            z = self.zero_elt
            if any(self.table[z][x] != z or self.table[x][z] != z for x in range(n)):
                raise ValueError(f"element {self.names[z]} is not absorbing")
        if n <= _VALIDATE_LIMIT:
            for a in range(n):
                for b in range(n):
                    ab = self.table[a][b]
                    for c in range(n):
                        if self.table[ab][c] != self.table[a][self.table[b][c]]:
                            raise ValueError(
                                f"associativity fails on ({a},{b},{c})"
                            )

    @property
    def size(self) -> int:
        return len(self.names)

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def eval_word(self, w: Sequence[int]) -> int:
        result = self.identity_elt
        for x in w:
            result = self.table[result][x]
        return result

    def index(self, name: str) -> int:
        return self.names.index(name)


@dataclass(frozen=True)
class Evaluation:
    """An assignment of monoid elements to the variables of an identity."""

    assignment: Tuple[Tuple[str, str], ...]

    def as_dict(self) -> Dict[str, str]:
        return dict(self.assignment)


# ---------------------------------------------------------------------------
# construction from a small presentation
#
# Bounded congruence closure over words: enumerate words up to a length cap,
# merge every in-context instance of the relations with union-find, then read
# off the classes.  A zero in the presentation is an extra generator with
# absorbing relations.  Any inconsistency (unexpected element count, products
# leaving the bounded region) is a hard error, never silently patched.


def _presented_monoid(
    generators: Sequence[str],
    relations: Sequence[Tuple[Tuple[str, ...], Tuple[str, ...]]],
    zero: Optional[str],
    expected_size: int,
    max_len: int = 5,
) -> FiniteMonoid:
    alphabet = list(generators) + ([zero] if zero else [])
    if zero:
        relations = list(relations) + [
            ((g, zero), (zero,)) for g in alphabet
        ] + [((zero, g), (zero,)) for g in alphabet]

    words: List[Tuple[str, ...]] = [()]
    frontier = [()]
    for _ in range(max_len):
        frontier = [w + (g,) for w in frontier for g in alphabet]
        words.extend(frontier)

    parent: Dict[Tuple[str, ...], Tuple[str, ...]] = {w: w for w in words}

    def find(w):
        while parent[w] != w:
            parent[w] = parent[parent[w]]
            w = parent[w]
        return w

    def union(u, v):
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[max(ru, rv, key=lambda t: (len(t), t))] = min(
                ru, rv, key=lambda t: (len(t), t)
            )

    for w in words:
        for p, q in relations:
            for sides in ((p, q), (q, p)):
                src, dst = sides
                for i in range(len(w) - len(src) + 1):
                    if w[i : i + len(src)] == src:
                        replaced = w[:i] + dst + w[i + len(src) :]
                        if len(replaced) <= max_len:
                            union(w, replaced)

    # elements: closure of the identity under right multiplication by the
    # generators (long words at the cap are truncation artifacts, not elements)
    reps: List[Tuple[str, ...]] = [()]
    queue = [()]
    while queue:
        u = queue.pop(0)
        for g in alphabet:
            product = u + (g,)
            if len(product) > max_len:
                raise ValueError(f"product {product} escapes the closure bound")
            rep = find(product)
            if rep not in reps:
                reps.append(rep)
                queue.append(rep)
        if len(reps) > 64:
            raise ValueError("presentation did not close within 64 elements")
    reps.sort(key=lambda t: (len(t), t))
    if len(reps) != expected_size:
        raise ValueError(
            f"presentation closed to {len(reps)} elements, expected {expected_size}"
        )
    index = {rep: i for i, rep in enumerate(reps)}

    table = []
    for u in reps:
        row = []
        for v in reps:
            product = u + v
            if len(product) > max_len:
                raise ValueError(f"product {product} escapes the closure bound")
            row.append(index[find(product)])
        table.append(tuple(row))

    def name(rep: Tuple[str, ...]) -> str:
        if not rep:
            return "1"
        return "".join(rep)

    zero_index = index[find((zero,))] if zero else None
    return FiniteMonoid(
        names=tuple(name(rep) for rep in reps),
        table=tuple(table),
        identity_elt=index[()],
        zero_elt=zero_index,
    )


def _flip_flop(left: bool) -> FiniteMonoid:
    # two-element left (or right) zero semigroup with an identity adjoined
    names = ("1", "a", "b")
    def prod(x, y):
        if x == 0:
            return y
        if y == 0:
            return x
        return x if left else y
    table = tuple(tuple(prod(x, y) for y in range(3)) for x in range(3))
    return FiniteMonoid(names, table, identity_elt=0)


def _rees_sab() -> FiniteMonoid:
    # Rees factor of {a,b}* over the ideal of non-factors of ab
    factors = ["", "a", "b", "ab"]
    names = ("1", "a", "b", "ab", "0")
    index = {w: i for i, w in enumerate(factors)}
    def prod(x, y):
        if x == 4 or y == 4:
            return 4
        w = factors[x] + factors[y]
        return index.get(w, 4)
    table = tuple(tuple(prod(x, y) for y in range(5)) for x in range(5))
    return FiniteMonoid(names, table, identity_elt=0, zero_elt=4)


def _transformations_j2() -> FiniteMonoid:
    # order-preserving and extensive self-maps of the chain 1 < 2 < 3,
    # composed left to right
    maps = [
        f
        for f in itertools.product((1, 2, 3), repeat=3)
        if all(f[i] >= i + 1 for i in range(3)) and f[0] <= f[1] <= f[2]
    ]
    maps.sort()
    index = {f: i for i, f in enumerate(maps)}
    def compose(f, g):
        return tuple(g[f[i] - 1] for i in range(3))
    table = tuple(
        tuple(index[compose(f, g)] for g in maps) for f in maps
    )
    names = tuple("".join(map(str, f)) for f in maps)
    return FiniteMonoid(names, table, identity_elt=index[(1, 2, 3)])


def builtin(name: str) -> FiniteMonoid:
    """One of the built-in monoids: J1, J1dual, FlipL, FlipR, SAB, J2."""
    key = name.strip().lower()
    if key == "j1":
        return _presented_monoid(
            ("a", "b"),
            [(("a", "b"), ("0",)), (("b", "a"), ("a",)), (("b", "b"), ("b",))],
            zero="0",
            expected_size=4,
        )
    if key == "j1dual":
        return _presented_monoid(
            ("a", "b"),
            [(("a", "b"), ("a",)), (("b", "a"), ("0",)), (("b", "b"), ("b",))],
            zero="0",
            expected_size=4,
        )
    if key == "flipl":
        return _flip_flop(left=True)
    if key == "flipr":
        return _flip_flop(left=False)
    if key == "sab":
        return _rees_sab()
    if key == "j2":
        return _transformations_j2()
    raise UnknownNameError(f"unknown builtin monoid {name!r}")


BUILTIN_NAMES = ("J1", "J1dual", "FlipL", "FlipR", "SAB", "J2")


def direct_product(m: FiniteMonoid, n: FiniteMonoid) -> FiniteMonoid:
    """Componentwise product; associativity is inherited from the factors."""
    if m.size * n.size > 10**6:
        raise BoundExceededError(
            f"product would have {m.size * n.size} elements"
        )
    pairs = [(i, j) for i in range(m.size) for j in range(n.size)]
    index = {p: k for k, p in enumerate(pairs)}
    table = tuple(
        tuple(
            index[(m.table[i1][i2], n.table[j1][j2])]
            for (i2, j2) in pairs
        )
        for (i1, j1) in pairs
    )
    names = tuple(f"({m.names[i]},{n.names[j]})" for (i, j) in pairs)
    zero = None
    if m.zero_elt is not None and n.zero_elt is not None:
        zero = index[(m.zero_elt, n.zero_elt)]
    return FiniteMonoid(
        names=names,
        table=table,
        identity_elt=index[(m.identity_elt, n.identity_elt)],
        zero_elt=zero,
    )


def _assignments(monoid: FiniteMonoid, variables: Sequence[str]):
    if len(variables) > 6:
        raise BoundExceededError(
            f"{len(variables)} variables would need {monoid.size ** len(variables)} evaluations"
        )
    return itertools.product(range(monoid.size), repeat=len(variables))


def satisfies(monoid: FiniteMonoid, identity: Identity) -> bool:
    """True iff every evaluation of the variables gives equal products."""
    variables = sorted(identity.variables, key=str)
    for values in _assignments(monoid, variables):
        env = dict(zip(variables, values))
        left = monoid.eval_word([env[x] for x in identity.lhs])
        right = monoid.eval_word([env[x] for x in identity.rhs])
        if left != right:
            return False
    return True


def falsify(monoid: FiniteMonoid, identity: Identity) -> Optional[Evaluation]:
    """First falsifying evaluation in mixed-radix order, or None."""
    variables = sorted(identity.variables, key=str)
    for values in _assignments(monoid, variables):
        env = dict(zip(variables, values))
        left = monoid.eval_word([env[x] for x in identity.lhs])
        right = monoid.eval_word([env[x] for x in identity.rhs])
        if left != right:
            return Evaluation(
                tuple((x, monoid.names[env[x]]) for x in variables)
            )
    return None


def falsify_in_quotient(
    kind: CongruenceKind,
    rank: int,
    identity: Identity,
    max_sub_len: int,
) -> Optional[Dict[str, Word]]:
    """Search for letter-word substitutions separating the sides modulo the congruence.

    Sound for refutation only: ``None`` means no witness within the bounds,
    not that the factor monoid satisfies the identity.
    """
    if rank > 3 or max_sub_len > 3:
        raise BoundExceededError("guards: rank <= 3 and substitution length <= 3")
    letters = range(1, rank + 1)
    images: List[Word] = [()]
    for length in range(1, max_sub_len + 1):
        images.extend(itertools.product(letters, repeat=length))
    variables = sorted(identity.variables, key=str)
    for choice in itertools.product(images, repeat=len(variables)):
        env = dict(zip(variables, choice))
        left = sum((env[x] for x in identity.lhs), ())
        right = sum((env[x] for x in identity.rhs), ())
        if not equivalent(kind, left, right):
            return env
    return None
