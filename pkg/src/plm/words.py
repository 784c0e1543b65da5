"""Words over letter or variable alphabets, their statistics, and identities.

Words are plain tuples of symbols.  A symbol is either a positive integer (a
letter, its value being its rank in the ordered alphabet) or a short string (a
variable).  The same combinatorics serve both alphabets, so every operation
here is symbol-kind agnostic unless stated otherwise.
"""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping, Tuple, Union

from .errors import ParseError, SymbolAbsentError

Symbol = Union[int, str]
Word = Tuple[Symbol, ...]

EMPTY: Word = ()

#: Canonical variable names, in the order they are assigned by canonical
#: renaming: first appearance gets "x", the next "y", and so on.
_VARIABLE_SEQ = ("x", "y", "z", "t", "r", "s")


def variable_name(index: int) -> str:
    if index < len(_VARIABLE_SEQ):
        return _VARIABLE_SEQ[index]
    return f"x{index - len(_VARIABLE_SEQ) + 1}"


@dataclass(frozen=True)
class Content:
    """Multiplicity map of a word together with its support and simple symbols."""

    counts: Tuple[Tuple[Symbol, int], ...]

    @property
    def support(self) -> frozenset:
        return frozenset(s for s, _ in self.counts)

    @property
    def simple(self) -> frozenset:
        return frozenset(s for s, n in self.counts if n == 1)

    @property
    def length(self) -> int:
        return sum(n for _, n in self.counts)

    def as_dict(self) -> dict:
        return dict(self.counts)

    def __getitem__(self, symbol: Symbol) -> int:
        return dict(self.counts).get(symbol, 0)


def content(w: Word) -> Content:
    """Multiplicities of all symbols of ``w``; empty for the empty word."""
    counts = Counter(w)
    return Content(tuple(sorted(counts.items(), key=_symbol_key)))


def _symbol_key(item):
    s = item[0] if isinstance(item, tuple) else item
    return (0, s, "") if isinstance(s, int) else (1, 0, s)


def support(w: Word) -> frozenset:
    return frozenset(w)


def simple_symbols(w: Word) -> frozenset:
    """Symbols occurring exactly once in ``w``."""
    counts = Counter(w)
    return frozenset(s for s, n in counts.items() if n == 1)


def is_subsequence(u: Word, v: Word) -> bool:
    """True iff ``u`` embeds order-preservingly into ``v``."""
    it = iter(v)
    return all(s in it for s in u)


def subsequences2(w: Word) -> frozenset:
    """The set of length-2 subsequences of ``w``.

    ``ab`` is a subsequence exactly when the first occurrence of ``a``
    precedes the last occurrence of ``b``, so the set is computed from the
    first/last occurrence indices in O(n + k^2).
    """
    first: dict = {}
    last: dict = {}
    for i, s in enumerate(w):
        first.setdefault(s, i)
        last[s] = i
    return frozenset(
        (a, b) for a in first for b in last if first[a] < last[b]
    )


def restrict_to(w: Word, symbols: Iterable[Symbol]) -> Word:
    """Subsequence of ``w`` keeping exactly the occurrences of ``symbols``."""
    keep = frozenset(symbols)
    return tuple(s for s in w if s in keep)


def prefix_to_first(w: Word, x: Symbol) -> Word:
    """Shortest prefix of ``w`` in which ``x`` occurs (inclusive)."""
    try:
        return w[: w.index(x) + 1]
    except ValueError:
        raise SymbolAbsentError(f"symbol {x!r} does not occur in {w!r}") from None


def suffix_from_last(w: Word, x: Symbol) -> Word:
    """Shortest suffix of ``w`` in which ``x`` occurs (inclusive)."""
    for i in range(len(w) - 1, -1, -1):
        if w[i] == x:
            return w[i:]
    raise SymbolAbsentError(f"symbol {x!r} does not occur in {w!r}")


def first_occurrence_order(w: Word) -> Word:
    """Symbols of ``w`` in order of their first occurrence."""
    seen: dict = {}
    for s in w:
        seen.setdefault(s, None)
    return tuple(seen)


def last_occurrence_order(w: Word) -> Word:
    """Symbols of ``w`` in order of their last occurrence."""
    rev = first_occurrence_order(w[::-1])
    return rev[::-1]


# ---------------------------------------------------------------------------
# identities


@dataclass(frozen=True)
class Identity:
    """A formal equality of two variable words."""

    lhs: Word
    rhs: Word

    @property
    def is_trivial(self) -> bool:
        return self.lhs == self.rhs

    @property
    def is_balanced(self) -> bool:
        return Counter(self.lhs) == Counter(self.rhs)

    @property
    def variables(self) -> frozenset:
        return frozenset(self.lhs) | frozenset(self.rhs)

    @property
    def simple_variables(self) -> frozenset:
        """Variables simple on both sides (occurring once in each)."""
        return simple_symbols(self.lhs) & simple_symbols(self.rhs)

    def canonical(self) -> "Identity":
        """Canonical representative under variable renaming and side swap.

        Variables are renamed in order of first appearance (left side first),
        and the lexicographically smaller side becomes the left one.
        """
        a = _rename_pair(self.lhs, self.rhs)
        b = _rename_pair(self.rhs, self.lhs)
        return Identity(*min(a, b))

    def swapped(self) -> "Identity":
        return Identity(self.rhs, self.lhs)

    def rename(self, mapping: Mapping[Symbol, Symbol]) -> "Identity":
        return Identity(
            tuple(mapping[s] for s in self.lhs),
            tuple(mapping[s] for s in self.rhs),
        )

    def __str__(self) -> str:
        return f"{word_str(self.lhs)} = {word_str(self.rhs)}"


def _rename_pair(first: Word, second: Word) -> Tuple[Word, Word]:
    mapping: dict = {}
    for s in first + second:
        if s not in mapping:
            mapping[s] = variable_name(len(mapping))
    return (
        tuple(mapping[s] for s in first),
        tuple(mapping[s] for s in second),
    )


# ---------------------------------------------------------------------------
# parsing and printing

_INT_WORD = re.compile(r"^[\d\s]*$")


def parse_word(text: str) -> Word:
    """Parse a word: ``"xzyt"`` (variables) or ``"2 1 1"`` (letters)."""
    text = text.strip()
    if text == "":
        return EMPTY
    if _INT_WORD.match(text):
        letters = []
        for tok in text.split():
            value = int(tok)
            if value < 1:
                raise ParseError(f"letters must be positive integers, got {tok}")
            letters.append(value)
        return tuple(letters)
    for i, ch in enumerate(text):
        if not ("a" <= ch <= "z"):
            raise ParseError(f"expected variable letter a-z, got {ch!r}", i)
    return tuple(text)


def parse_identity(text: str):
    """Parse ``word '=' word`` or a named identity tag; returns it canonicalized."""
    from .varieties import NAMED_IDENTITIES  # tags live with the variety table

    stripped = text.strip()
    if stripped in NAMED_IDENTITIES:
        return NAMED_IDENTITIES[stripped].canonical()
    if "=" not in stripped:
        raise ParseError(f"expected 'word = word' or a named identity, got {text!r}")
    left, _, right = stripped.partition("=")
    if not left.strip():
        raise ParseError("missing left-hand side", 0)
    if not right.strip():
        raise ParseError("missing right-hand side", len(stripped))
    lhs, rhs = parse_word(left), parse_word(right)
    if any(isinstance(s, int) for s in lhs + rhs):
        raise ParseError("identities are over variables, not letters")
    return Identity(lhs, rhs).canonical()


def word_str(w: Word) -> str:
    if not w:
        return "ε"
    if all(isinstance(s, int) for s in w):
        return " ".join(str(s) for s in w)
    if all(isinstance(s, str) and len(s) == 1 for s in w):
        return "".join(w)
    return " ".join(str(s) for s in w)


def is_balanced(identity: Identity) -> bool:
    """True iff both sides have the same content."""
    return identity.is_balanced


# ---------------------------------------------------------------------------
# bounded enumeration over content classes

def multinomial(counts: Iterable[int]) -> int:
    """Number of distinct words with the given multiplicities."""
    total, result = 0, 1
    for c in counts:
        for i in range(1, c + 1):
            total += 1
            result = result * total // i
    return result


def words_with_content(counts: Mapping[Symbol, int]) -> Iterator[Word]:
    """All distinct words with the given content, in lexicographic order."""
    symbols = sorted(counts, key=lambda s: _symbol_key(s))
    remaining = {s: counts[s] for s in symbols}
    length = sum(remaining.values())
    word: list = []

    def emit() -> Iterator[Word]:
        if len(word) == length:
            yield tuple(word)
            return
        for s in symbols:
            if remaining[s] > 0:
                remaining[s] -= 1
                word.append(s)
                yield from emit()
                word.pop()
                remaining[s] += 1

    yield from emit()


def iter_multiplicity_vectors(n_symbols: int, length: int) -> Iterator[Tuple[int, ...]]:
    """All vectors of ``n_symbols`` positive multiplicities summing to ``length``."""
    if n_symbols == 0:
        if length == 0:
            yield ()
        return
    for head in range(1, length - n_symbols + 2):
        for tail in iter_multiplicity_vectors(n_symbols - 1, length - head):
            yield (head,) + tail


def iter_sorted_multiplicities(n_symbols: int, length: int) -> Iterator[Tuple[int, ...]]:
    """Multiplicity vectors up to symbol renaming (weakly decreasing)."""

    def rec(k: int, total: int, cap: int) -> Iterator[Tuple[int, ...]]:
        if k == 0:
            if total == 0:
                yield ()
            return
        for head in range(min(cap, total - k + 1), 0, -1):
            for tail in rec(k - 1, total - head, head):
                yield (head,) + tail

    yield from rec(n_symbols, length, length)
