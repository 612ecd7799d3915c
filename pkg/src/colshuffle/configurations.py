"""Coloured configurations: finite multisets of coloured permutations,
signed-monomial labels on colours, order-preserving equivalence, coherence,
and the bi-additive shuffle.

A label assigns a signed monomial ``±X^k`` to each colour, with finite
support excluding colour 0 (uncoloured entries always pick up the factor 1).
A labelled configuration pairs a configuration with a label supported on the
nonzero colours that actually occur.
"""

from __future__ import annotations

import json
import re
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, NamedTuple

from .errors import NotCoherent, ParseError, SymbolOverlap
from .permutations import ColouredPermutation, parse_permutation, shuffles

__all__ = [
    "SignedMonomial",
    "Label",
    "ColouredConfiguration",
    "LabelledConfiguration",
    "evaluate_label",
    "config_shuffle",
    "canonicalize",
    "make_strongly_disjoint",
    "check_coherence",
    "merge_labels",
    "parse_labelled_configuration",
]


class SignedMonomial(NamedTuple):
    """``sign * X**exponent`` with sign in {+1, -1}."""

    sign: int
    exponent: int

    @classmethod
    def one(cls) -> "SignedMonomial":
        return cls(1, 0)

    @classmethod
    def x_power(cls, k: int) -> "SignedMonomial":
        return cls(1, k)

    def is_one(self) -> bool:
        return self.sign == 1 and self.exponent == 0

    def __mul__(self, other: "SignedMonomial") -> "SignedMonomial":
        return SignedMonomial(self.sign * other.sign,
                              self.exponent + other.exponent)

    def __pow__(self, k: int) -> "SignedMonomial":
        return SignedMonomial(self.sign if k % 2 else 1, self.exponent * k)

    def value_at(self, q: Fraction) -> Fraction:
        return self.sign * Fraction(q) ** self.exponent

    def __str__(self):
        s = "-" if self.sign < 0 else ""
        if self.exponent == 0:
            return s + "1"
        if self.exponent == 1:
            return s + "X"
        return f"{s}X^{self.exponent}"

    @classmethod
    def parse(cls, text: str) -> "SignedMonomial":
        m = re.fullmatch(r"\s*([+-]?)\s*(?:(1)|X(?:\^(-?\d+))?)\s*", text)
        if not m:
            raise ParseError(f"bad signed monomial {text!r}")
        sign = -1 if m.group(1) == "-" else 1
        if m.group(2):
            return cls(sign, 0)
        exp = int(m.group(3)) if m.group(3) is not None else 1
        return cls(sign, exp)


class Label:
    """Finitely supported map colour -> SignedMonomial; default +X^0.

    The support never contains colour 0.
    """

    __slots__ = ("assignments",)

    def __init__(self, assignments: Mapping[int, SignedMonomial] | None = None):
        cleaned = {}
        for colour, value in (assignments or {}).items():
            value = SignedMonomial(*value)
            if value.is_one():
                continue
            if colour == 0:
                raise ValueError("colour 0 cannot carry a nontrivial label")
            if colour < 0:
                raise ValueError("colours are nonnegative")
            cleaned[int(colour)] = value
        object.__setattr__(self, "assignments", cleaned)

    def __setattr__(self, name, value):
        raise AttributeError("Label is immutable")

    def __call__(self, colour: int) -> SignedMonomial:
        return self.assignments.get(colour, SignedMonomial.one())

    def support(self) -> frozenset[int]:
        return frozenset(self.assignments)

    def __eq__(self, other):
        return isinstance(other, Label) and self.assignments == other.assignments

    def __hash__(self):
        return hash(tuple(sorted(self.assignments.items())))

    def __repr__(self):
        inner = ", ".join(f"{c} -> {v}" for c, v in sorted(self.assignments.items()))
        return "Label{" + inner + "}"

    def restrict(self, colours: Iterable[int]) -> "Label":
        keep = set(colours)
        return Label({c: v for c, v in self.assignments.items() if c in keep})

    def to_json_obj(self) -> list[dict]:
        return [{"colour": c, "sign": v.sign, "exponent": v.exponent}
                for c, v in sorted(self.assignments.items())]

    @classmethod
    def from_json_obj(cls, obj) -> "Label":
        return cls({int(e["colour"]): SignedMonomial(int(e["sign"]), int(e["exponent"]))
                    for e in obj})


def evaluate_label(label: Label, a: ColouredPermutation) -> SignedMonomial:
    """Product of the label values over the colours of ``a`` (1 when empty)."""
    sign, exp = 1, 0
    for entry in a.entries:
        v = label(entry.colour)
        sign *= v.sign
        exp += v.exponent
    return SignedMonomial(sign, exp)


class ColouredConfiguration:
    """A finite multiset of coloured permutations.

    Stored in normal form: distinct permutations with multiplicities >= 1,
    sorted by (length, entrywise colour order) for canonical serialisation.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: Iterable[tuple[ColouredPermutation, int]] = ()):
        acc: dict[ColouredPermutation, int] = {}
        for perm, mult in terms:
            mult = int(mult)
            if mult < 0:
                raise ValueError("multiplicities must be nonnegative")
            if mult:
                acc[perm] = acc.get(perm, 0) + mult
        ordered = tuple(sorted(acc.items(), key=lambda kv: kv[0].sort_key()))
        object.__setattr__(self, "terms", ordered)

    def __setattr__(self, name, value):
        raise AttributeError("ColouredConfiguration is immutable")

    @classmethod
    def from_permutations(cls, perms: Iterable[ColouredPermutation]) -> "ColouredConfiguration":
        return cls((p, 1) for p in perms)

    def support(self) -> tuple[ColouredPermutation, ...]:
        return tuple(p for p, _ in self.terms)

    def multiplicity(self, perm: ColouredPermutation) -> int:
        for p, m in self.terms:
            if p == perm:
                return m
        return 0

    def total_multiplicity(self) -> int:
        return sum(m for _, m in self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def symbols(self) -> frozenset[int]:
        out: set[int] = set()
        for p, _ in self.terms:
            out |= p.symbols()
        return frozenset(out)

    def palette_star(self) -> frozenset[int]:
        out: set[int] = set()
        for p, _ in self.terms:
            out |= p.palette_star()
        return frozenset(out)

    def max_length(self) -> int:
        return max((len(p) for p, _ in self.terms), default=0)

    def __add__(self, other: "ColouredConfiguration") -> "ColouredConfiguration":
        return ColouredConfiguration(self.terms + other.terms)

    def __eq__(self, other):
        return (isinstance(other, ColouredConfiguration)
                and self.terms == other.terms)

    def __hash__(self):
        return hash(self.terms)

    def __iter__(self) -> Iterator[tuple[ColouredPermutation, int]]:
        return iter(self.terms)

    def __repr__(self):
        inner = " + ".join(
            (f"{m}*{p}" if m != 1 else str(p)) if len(p) else
            (f"{m}*()" if m != 1 else "()")
            for p, m in self.terms)
        return inner or "0"


def config_shuffle(f: ColouredConfiguration,
                   g: ColouredConfiguration) -> ColouredConfiguration:
    """Bi-additive extension of the shuffle to configurations."""
    if f.symbols() & g.symbols():
        raise SymbolOverlap(
            f"shared symbols: {sorted(f.symbols() & g.symbols())}")
    terms = []
    for a, fa in f.terms:
        for b, gb in g.terms:
            mult = fa * gb
            for c in shuffles(a, b):
                terms.append((c, mult))
    return ColouredConfiguration(terms)


class LabelledConfiguration:
    """A configuration together with a label supported on its nonzero colours."""

    __slots__ = ("config", "label")

    def __init__(self, config: ColouredConfiguration, label: Label | None = None):
        label = label or Label()
        stray = label.support() - config.palette_star()
        if stray:
            raise ValueError(
                f"label supported outside the configuration's colours: {sorted(stray)}")
        object.__setattr__(self, "config", config)
        object.__setattr__(self, "label", label)

    def __setattr__(self, name, value):
        raise AttributeError("LabelledConfiguration is immutable")

    def __eq__(self, other):
        return (isinstance(other, LabelledConfiguration)
                and self.config == other.config and self.label == other.label)

    def __hash__(self):
        return hash((self.config, self.label))

    def __repr__(self):
        return f"LabelledConfiguration({self.config!r}, {self.label!r})"

    # -- serialisation ----------------------------------------------------

    def to_json_obj(self) -> dict:
        return {
            "config": [{"perm": p.to_pairs(), "mult": m}
                       for p, m in self.config.terms],
            "label": self.label.to_json_obj(),
        }

    @classmethod
    def from_json_obj(cls, obj) -> "LabelledConfiguration":
        config = ColouredConfiguration(
            (ColouredPermutation.from_pairs(t["perm"]), int(t["mult"]))
            for t in obj["config"])
        return cls(config, Label.from_json_obj(obj.get("label", [])))

    def to_text(self) -> str:
        lines = [f"{m} * {p}" if len(p) else f"{m} *" for p, m in self.config.terms]
        lines += [f"{c} -> {v}" for c, v in sorted(self.label.assignments.items())]
        return "\n".join(lines) + "\n"


_LABEL_LINE = re.compile(r"(\d+)\s*->\s*(.+)")
_CONFIG_LINE = re.compile(r"(?:(\d+)\s*\*)?\s*([^*]*)")


def parse_labelled_configuration(text: str) -> LabelledConfiguration:
    """Parse the line-based text form (or JSON when the text is an object).

    Configuration lines look like ``2 * 1^0 2^2`` (multiplicity optional),
    label lines like ``1 -> -X^2``.  ``#`` starts a comment.
    """
    stripped = text.lstrip()
    if stripped.startswith("{"):
        try:
            return LabelledConfiguration.from_json_obj(json.loads(text))
        except (json.JSONDecodeError, KeyError, TypeError, ValueError) as exc:
            raise ParseError(f"bad JSON configuration: {exc}") from exc
    terms = []
    assignments: dict[int, SignedMonomial] = {}
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        m = _LABEL_LINE.fullmatch(line)
        if m:
            colour = int(m.group(1))
            try:
                assignments[colour] = SignedMonomial.parse(m.group(2))
            except ParseError as exc:
                raise ParseError(f"line {lineno}: {exc}") from exc
            continue
        m = _CONFIG_LINE.fullmatch(line)
        if not m:
            raise ParseError(f"line {lineno}: unrecognised line {line!r}")
        mult = int(m.group(1)) if m.group(1) else 1
        try:
            perm = parse_permutation(m.group(2))
        except ParseError as exc:
            raise ParseError(f"line {lineno}: {exc}") from exc
        terms.append((perm, mult))
    try:
        return LabelledConfiguration(ColouredConfiguration(terms),
                                     Label(assignments))
    except ValueError as exc:
        raise ParseError(str(exc)) from exc


def canonicalize(lc: LabelledConfiguration) -> LabelledConfiguration:
    """The canonical representative of the equivalence class of ``lc``.

    Symbols are relabelled order-preservingly onto 1..k and nonzero colours
    onto 1..m (order-preserving on positive colours is the usual integer
    order); the label is transported along.  Two labelled configurations are
    equivalent exactly when their canonical forms coincide.
    """
    config, label = lc.config, lc.label
    symbol_map = {s: i for i, s in enumerate(sorted(config.symbols()), start=1)}
    colour_map = {c: i for i, c in enumerate(sorted(config.palette_star()), start=1)}
    new_config = ColouredConfiguration(
        (p.relabel(symbol_map, colour_map), m) for p, m in config.terms)
    new_label = Label({colour_map[c]: v for c, v in label.assignments.items()})
    return LabelledConfiguration(new_config, new_label)


def make_strongly_disjoint(lhs: LabelledConfiguration,
                           rhs: LabelledConfiguration) -> LabelledConfiguration:
    """An equivalent copy of ``rhs`` sharing no symbol and no nonzero colour
    with ``lhs`` (symbols and colours are shifted above those of ``lhs``)."""
    symbol_off = max(lhs.config.symbols(), default=0)
    colour_off = max(lhs.config.palette_star(), default=0)
    canon = canonicalize(rhs)
    symbol_map = {s: s + symbol_off for s in canon.config.symbols()}
    colour_map = {c: c + colour_off for c in canon.config.palette_star()}
    config = ColouredConfiguration(
        (p.relabel(symbol_map, colour_map), m) for p, m in canon.config.terms)
    label = Label({colour_map[c]: v
                   for c, v in canon.label.assignments.items()})
    return LabelledConfiguration(config, label)


def check_coherence(lhs: LabelledConfiguration,
                    rhs: LabelledConfiguration) -> bool:
    """Symbol-disjoint with labels agreeing on every shared nonzero colour."""
    if lhs.config.symbols() & rhs.config.symbols():
        return False
    shared = lhs.config.palette_star() & rhs.config.palette_star()
    return all(lhs.label(c) == rhs.label(c) for c in shared)


def merge_labels(lhs: LabelledConfiguration,
                 rhs: LabelledConfiguration) -> Label:
    """The merged label: lhs's values on lhs's colours, rhs's on the rest.

    For strongly disjoint operands this is the pointwise product.  Raises
    NotCoherent when the operands share a symbol or disagree on a shared
    colour.
    """
    if not check_coherence(lhs, rhs):
        raise NotCoherent("configurations share symbols or disagree on a colour")
    merged: dict[int, SignedMonomial] = {}
    left_palette = lhs.config.palette_star()
    for c in left_palette:
        v = lhs.label(c)
        if not v.is_one():
            merged[c] = v
    for c in rhs.config.palette_star() - left_palette:
        v = rhs.label(c)
        if not v.is_one():
            merged[c] = v
    return Label(merged)
