"""Coloured integers and coloured permutations with their descent statistics.

A coloured integer is a positive symbol decorated with a nonnegative colour;
colour 0 means "uncoloured".  Coloured integers are totally ordered by the
*colour order*: entries with a larger colour sort strictly below entries with
a smaller colour, and entries of equal colour sort by symbol,

    ... < 1^2 < 2^2 < ... < 1^1 < 2^1 < ... < 1^0 < 2^0 < ...

(Colours are encoded as nonnegative machine integers whose comparison is
reversed; the dual convention of encoding colours as negative integers would
turn this into the plain lexicographic order on (colour, symbol).)

A coloured permutation is a string of coloured integers with pairwise
distinct symbols.  The module computes descent sets, the descent number
``des``, the comajor index ``comaj``, the colour multiplicity vector ``col``,
the coloured descent set (which refines all three), and shuffles.
"""

from __future__ import annotations

import itertools
import json
import re
from typing import Iterable, Iterator, NamedTuple

from .errors import ParseError, SymbolOverlap

__all__ = [
    "ColouredInteger",
    "ColouredPermutation",
    "StatTriple",
    "ColouredDescentSet",
    "compare",
    "descent_set",
    "stat_triple",
    "stat_triple_raw",
    "s_des",
    "s_des_raw",
    "descent_data",
    "shuffles",
    "canonical_statistics_class",
    "parse_permutation",
    "all_coloured_permutations",
]


class ColouredInteger(NamedTuple):
    """A symbol with a colour, ordered by the colour order."""

    symbol: int
    colour: int

    def __lt__(self, other):
        return (-self.colour, self.symbol) < (-other.colour, other.symbol)

    def __le__(self, other):
        return (-self.colour, self.symbol) <= (-other.colour, other.symbol)

    def __gt__(self, other):
        return (-self.colour, self.symbol) > (-other.colour, other.symbol)

    def __ge__(self, other):
        return (-self.colour, self.symbol) >= (-other.colour, other.symbol)

    def __str__(self):
        return f"{self.symbol}^{self.colour}"


def compare(a: ColouredInteger, b: ColouredInteger) -> int:
    """Colour-order comparison: -1, 0 or 1."""
    ka = (-a.colour, a.symbol)
    kb = (-b.colour, b.symbol)
    return (ka > kb) - (ka < kb)


class StatTriple(NamedTuple):
    """The (des, comaj, col) value of a permutation.

    ``col`` is the sparse colour multiplicity vector, stored as a sorted
    tuple of (colour, count) pairs so the triple is hashable.
    """

    des: int
    comaj: int
    col: tuple[tuple[int, int], ...]

    def col_dict(self) -> dict[int, int]:
        return dict(self.col)


class ColouredDescentSet:
    """A coloured subset of [n]: positions with a colour each.

    Distinct positions; ``length`` is the largest recorded position (0 when
    empty).  For a nonempty permutation the final position n is always
    recorded, so ``length`` recovers the permutation length.
    """

    __slots__ = ("elements",)

    def __init__(self, elements: Iterable[tuple[int, int]]):
        elems = frozenset((int(p), int(c)) for p, c in elements)
        positions = [p for p, _ in elems]
        if len(positions) != len(set(positions)):
            raise ValueError("coloured subset has a repeated position")
        if any(p < 1 or c < 0 for p, c in elems):
            raise ValueError("positions must be >= 1 and colours >= 0")
        object.__setattr__(self, "elements", elems)

    @property
    def length(self) -> int:
        return max((p for p, _ in self.elements), default=0)

    def sorted_elements(self) -> list[tuple[int, int]]:
        return sorted(self.elements)

    def __eq__(self, other):
        return isinstance(other, ColouredDescentSet) and self.elements == other.elements

    def __hash__(self):
        return hash(self.elements)

    def __iter__(self):
        return iter(self.sorted_elements())

    def __len__(self):
        return len(self.elements)

    def __repr__(self):
        inner = ", ".join(f"{p}^{c}" for p, c in self.sorted_elements())
        return "{" + inner + "}"


_TOKEN = re.compile(r"(\d+)(?:\^(\d+))?$")


class ColouredPermutation:
    """An immutable string of coloured integers with distinct symbols."""

    __slots__ = ("entries",)

    def __init__(self, entries: Iterable[tuple[int, int] | ColouredInteger]):
        ents = tuple(ColouredInteger(int(s), int(c)) for s, c in entries)
        symbols = [e.symbol for e in ents]
        if any(s < 1 for s in symbols):
            raise ValueError("symbols must be positive integers")
        if any(e.colour < 0 for e in ents):
            raise ValueError("colours must be nonnegative integers")
        if len(symbols) != len(set(symbols)):
            raise ValueError("symbols must be pairwise distinct")
        object.__setattr__(self, "entries", ents)

    @classmethod
    def _raw(cls, entries: tuple[ColouredInteger, ...]) -> "ColouredPermutation":
        # fast constructor for internally generated, already-valid entries
        self = object.__new__(cls)
        object.__setattr__(self, "entries", entries)
        return self

    def __setattr__(self, name, value):
        raise AttributeError("ColouredPermutation is immutable")

    def __len__(self) -> int:
        return len(self.entries)

    def __eq__(self, other):
        return isinstance(other, ColouredPermutation) and self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def __iter__(self) -> Iterator[ColouredInteger]:
        return iter(self.entries)

    def __repr__(self):
        return f"ColouredPermutation({str(self)!r})"

    def __str__(self):
        return " ".join(f"{e.symbol}^{e.colour}" for e in self.entries)

    # sort key: length first, then entrywise colour order
    def sort_key(self):
        return (len(self.entries),
                tuple((-e.colour, e.symbol) for e in self.entries))

    def symbols(self) -> frozenset[int]:
        return frozenset(e.symbol for e in self.entries)

    def palette(self) -> frozenset[int]:
        return frozenset(e.colour for e in self.entries)

    def palette_star(self) -> frozenset[int]:
        return frozenset(e.colour for e in self.entries if e.colour != 0)

    def descent_set(self) -> frozenset[int]:
        return descent_set(self)

    def stat_triple(self) -> StatTriple:
        return stat_triple(self)

    def s_des(self) -> ColouredDescentSet:
        return s_des(self)

    def relabel(self, symbol_map, colour_map=None) -> "ColouredPermutation":
        """Apply maps to symbols and (optionally) nonzero colours."""
        if colour_map is None:
            return ColouredPermutation(
                (symbol_map[e.symbol], e.colour) for e in self.entries)
        return ColouredPermutation(
            (symbol_map[e.symbol],
             colour_map[e.colour] if e.colour != 0 else 0)
            for e in self.entries)

    def to_pairs(self) -> list[list[int]]:
        return [[e.symbol, e.colour] for e in self.entries]

    @classmethod
    def from_pairs(cls, pairs) -> "ColouredPermutation":
        return cls(pairs)

    def to_json(self) -> str:
        return json.dumps(self.to_pairs())

    @classmethod
    def from_json(cls, text: str) -> "ColouredPermutation":
        return cls.from_pairs(json.loads(text))


EMPTY = ColouredPermutation(())


def parse_permutation(text: str) -> ColouredPermutation:
    """Parse ``"1^1 2^2"``; a missing ``^colour`` means colour 0.

    The empty (or all-whitespace) string parses to the empty permutation.
    """
    entries = []
    pos = 0
    for token in text.split():
        pos = text.index(token, pos)
        m = _TOKEN.match(token)
        if not m:
            raise ParseError(f"bad coloured integer {token!r}", position=pos)
        symbol = int(m.group(1))
        colour = int(m.group(2)) if m.group(2) is not None else 0
        if symbol < 1:
            raise ParseError(f"symbol must be >= 1 in {token!r}", position=pos)
        entries.append((symbol, colour))
        pos += len(token)
    try:
        return ColouredPermutation(entries)
    except ValueError as exc:
        raise ParseError(str(exc)) from exc


def descent_set(a: ColouredPermutation) -> frozenset[int]:
    """Positions i in [n-1] where entry i exceeds entry i+1 in colour order,
    together with 0 whenever the first colour is nonzero."""
    ents = a.entries
    if not ents:
        return frozenset()
    des = set()
    if ents[0].colour != 0:
        des.add(0)
    for i in range(len(ents) - 1):
        s1, c1 = ents[i]
        s2, c2 = ents[i + 1]
        # colour order: larger colour sorts lower
        if c1 < c2 or (c1 == c2 and s1 > s2):
            des.add(i + 1)
    return frozenset(des)


def stat_triple_raw(entries) -> tuple[int, int, tuple[tuple[int, int], ...]]:
    """(des, comaj, col) from a sequence of (symbol, colour) pairs.

    Allocation-light path used by exhaustive sweeps; ``stat_triple`` wraps
    it for the public type.
    """
    n = len(entries)
    des = 0
    comaj = 0
    counts: dict[int, int] = {}
    if n:
        if entries[0][1] != 0:
            des += 1
            comaj += n
        for i in range(n - 1):
            s1, c1 = entries[i]
            s2, c2 = entries[i + 1]
            if c1 < c2 or (c1 == c2 and s1 > s2):
                des += 1
                comaj += n - (i + 1)
        for _, c in entries:
            counts[c] = counts.get(c, 0) + 1
    return (des, comaj, tuple(sorted(counts.items())))


def stat_triple(a: ColouredPermutation) -> StatTriple:
    """des, comaj = sum of (n - i) over descents i, and colour multiplicities."""
    return StatTriple(*stat_triple_raw(a.entries))


def s_des_raw(entries) -> tuple[tuple[int, int], ...]:
    """Sorted (position, colour) pairs of the coloured descent set."""
    n = len(entries)
    if not n:
        return ()
    elems = []
    for i in range(n - 1):
        s1, c1 = entries[i]
        s2, c2 = entries[i + 1]
        if c1 != c2 or s1 > s2:
            elems.append((i + 1, c1))
    elems.append((n, entries[n - 1][1]))
    return tuple(elems)


def s_des(a: ColouredPermutation) -> ColouredDescentSet:
    """The coloured descent set: interior positions where the colour changes
    or an equal-colour symbol descent occurs, each recorded with the colour
    at that position, plus the final position with the final colour."""
    return ColouredDescentSet(s_des_raw(a.entries))


def descent_data(A: ColouredDescentSet) -> tuple[frozenset[int], tuple[int, ...]]:
    """Recover (descent set, colour word) from a coloured descent set.

    The colour word is constant between recorded positions; a recorded
    interior position is a descent exactly when its colour is <= the next
    recorded colour (equal colours force a symbol descent, a larger
    following colour in integer order means a drop in colour order).
    """
    elems = A.sorted_elements()
    if not elems:
        return frozenset(), ()
    n = elems[-1][0]
    colours = []
    prev = 0
    for p, c in elems:
        colours.extend([c] * (p - prev))
        prev = p
    des = set()
    if colours[0] != 0:
        des.add(0)
    for (p, c), (_, c_next) in zip(elems, elems[1:]):
        if c <= c_next:
            des.add(p)
    return frozenset(des), tuple(colours)


def shuffles(a: ColouredPermutation, b: ColouredPermutation) -> list[ColouredPermutation]:
    """All interleavings of a and b preserving both relative orders.

    Requires disjoint symbol sets.  The output order is deterministic:
    lexicographic in the set of positions occupied by entries of ``a``.
    """
    sa, sb = a.symbols(), b.symbols()
    if sa & sb:
        raise SymbolOverlap(f"shared symbols: {sorted(sa & sb)}")
    ea, eb = a.entries, b.entries
    n, m = len(ea), len(eb)
    total = n + m
    out = []
    for pattern in itertools.combinations(range(total), n):
        word: list = [None] * total
        for ent, p in zip(ea, pattern):
            word[p] = ent
        it = iter(eb)
        for p in range(total):
            if word[p] is None:
                word[p] = next(it)
        out.append(ColouredPermutation._raw(tuple(word)))
    return out


def canonical_statistics_class(a: ColouredPermutation) -> tuple[int, StatTriple]:
    """The (length, (des, comaj, col)) key indexing the statistic class of a."""
    return (len(a), stat_triple(a))


def all_coloured_permutations(length: int, colours: int,
                              first_symbol: int = 1) -> Iterator[ColouredPermutation]:
    """All coloured permutations of the given length with colours < ``colours``,
    over the symbols first_symbol .. first_symbol+length-1."""
    symbols = range(first_symbol, first_symbol + length)
    for order in itertools.permutations(symbols):
        for cols in itertools.product(range(colours), repeat=length):
            yield ColouredPermutation._raw(
                tuple(ColouredInteger(s, c) for s, c in zip(order, cols)))
