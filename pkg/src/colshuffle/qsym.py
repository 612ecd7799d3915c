"""Truncated coloured quasisymmetric functions.

``expand_F`` expands the fundamental function of a coloured permutation in
the doubly indexed variables x_i^(j) (i a positive index up to a cutoff m,
j a colour below a cutoff r): the sum over weakly increasing index
sequences i_1 <= ... <= i_n <= m that increase strictly at every interior
descent, of the monomials x_{i_1}^(c_1) ... x_{i_n}^(c_n).

``psi_m`` specialises x_i^(0) -> x^(i-1) p_0 for i <= m and
x_i^(j) -> x^(i-1) p_j for 1 < i <= m (all other variables, including every
x_1^(j) with j >= 1, go to zero).  Summing psi_m against t^(m-1) over m
recovers, per permutation class, the closed form

    p^col x^comaj t^des / ((1-t)(1-xt)...(1-x^n t)),

which ``psi_closed_form_check`` verifies through a given t-order.
"""

from __future__ import annotations

from typing import Iterator

from .errors import ColourOutOfRange, SymbolOverlap
from .mpoly import MPoly, Monomial, monomial
from .permutations import ColouredPermutation, descent_set, shuffles, stat_triple
from .shuffle_algebra import HImage, X_VAR, p_var

__all__ = [
    "TruncatedQSym",
    "expand_F",
    "verify_product_rule",
    "psi_m",
    "psi_closed_form_check",
]


def qvar(index: int, colour: int) -> tuple:
    """The variable x_index^(colour)."""
    return ("x", index, colour)


class TruncatedQSym:
    """A homogeneous polynomial truncation of a coloured quasisymmetric
    function: only variables with index <= m and colour < r appear."""

    __slots__ = ("poly", "m", "r", "degree")

    def __init__(self, poly: MPoly, m: int, r: int, degree: int):
        object.__setattr__(self, "poly", poly)
        object.__setattr__(self, "m", int(m))
        object.__setattr__(self, "r", int(r))
        object.__setattr__(self, "degree", int(degree))

    def __setattr__(self, name, value):
        raise AttributeError("TruncatedQSym is immutable")

    def __eq__(self, other):
        return (isinstance(other, TruncatedQSym)
                and self.m == other.m and self.poly == other.poly)

    def __hash__(self):
        return hash((self.poly, self.m))

    def __mul__(self, other: "TruncatedQSym") -> "TruncatedQSym":
        if self.m != other.m:
            raise ValueError("cutoffs differ")
        return TruncatedQSym(self.poly * other.poly, self.m,
                             max(self.r, other.r), self.degree + other.degree)

    def __add__(self, other: "TruncatedQSym") -> "TruncatedQSym":
        if self.m != other.m:
            raise ValueError("cutoffs differ")
        if self.degree != other.degree:
            raise ValueError("degrees differ")
        return TruncatedQSym(self.poly + other.poly, self.m,
                             max(self.r, other.r), self.degree)

    def monomial_count(self) -> int:
        return len(self.poly.coeffs)

    def __repr__(self):
        return f"TruncatedQSym(m={self.m}, r={self.r}, deg={self.degree}, {self.poly!r})"


def _index_sequences(n: int, m: int, strict: frozenset[int]) -> Iterator[tuple[int, ...]]:
    """Weakly increasing sequences i_1 <= ... <= i_n <= m with a strict
    increase after each position in ``strict``."""
    if n == 0:
        yield ()
        return
    seq = [0] * n

    def rec(pos: int, lo: int) -> Iterator[tuple[int, ...]]:
        if pos == n:
            yield tuple(seq)
            return
        for v in range(lo, m + 1):
            seq[pos] = v
            yield from rec(pos + 1, v + 1 if (pos + 1) in strict else v)

    yield from rec(0, 1)


def expand_F(a: ColouredPermutation, m: int, r: int | None = None) -> TruncatedQSym:
    """Monomial expansion of the fundamental function of ``a`` truncated to
    variable indices <= m.  ``r`` defaults to (max colour of a) + 1."""
    colours = [e.colour for e in a.entries]
    if r is None:
        r = max(colours, default=0) + 1
    if any(c >= r for c in colours):
        raise ColourOutOfRange(f"colour >= {r} present")
    if m < 1:
        raise ValueError("cutoff m must be >= 1")
    n = len(a)
    strict = frozenset(i for i in descent_set(a) if i != 0)
    coeffs: dict[Monomial, int] = {}
    for seq in _index_sequences(n, m, strict):
        mono = monomial(*[(qvar(i, c), 1) for i, c in zip(seq, colours)])
        coeffs[mono] = coeffs.get(mono, 0) + 1
    return TruncatedQSym(MPoly(coeffs), m, r, n)


def verify_product_rule(a: ColouredPermutation, b: ColouredPermutation,
                        m: int) -> bool:
    """Check F_a * F_b against the sum of F_c over all shuffles c, both
    truncated at cutoff m (truncation commutes with the product, so this
    compares every monomial in variables with index <= m)."""
    if a.symbols() & b.symbols():
        raise SymbolOverlap("operands share a symbol")
    r = max([e.colour for e in a.entries] + [e.colour for e in b.entries],
            default=0) + 1
    product = expand_F(a, m, r) * expand_F(b, m, r)
    total = MPoly.zero()
    for c in shuffles(a, b):
        total = total + expand_F(c, m, r).poly
    return product.poly == total


def psi_m(F: TruncatedQSym, m: int) -> MPoly:
    """Specialise a truncated expansion; requires F.m >= m so that every
    surviving monomial (all indices <= m) is present in the truncation."""
    if m < 1:
        raise ValueError("m must be >= 1")
    if F.m < m:
        raise ValueError(f"truncation cutoff {F.m} is below m = {m}")
    out = MPoly.zero()
    for mono, coeff in F.poly.coeffs.items():
        x_exp = 0
        p_exps: dict[int, int] = {}
        dead = False
        for var, exp in mono:
            _, index, colour = var
            if index > m or (index == 1 and colour >= 1):
                dead = True
                break
            x_exp += (index - 1) * exp
            p_exps[colour] = p_exps.get(colour, 0) + exp
        if dead:
            continue
        target = monomial(*[(p_var(c), e) for c, e in p_exps.items()],
                          (X_VAR, x_exp))
        out = out + MPoly.term(target, coeff)
    return out


def psi_closed_form_check(a: ColouredPermutation, t_order: int) -> bool:
    """Compare sum_m psi_m(F_a) t^(m-1) with the closed form
    p^col x^comaj t^des / ((1-t)(1-xt)...(1-x^n t)) through t^t_order."""
    st = stat_triple(a)
    cutoff = t_order + 1
    F = expand_F(a, cutoff)
    lhs = [psi_m(F, m) for m in range(1, cutoff + 1)]
    numerator = MPoly.term(monomial(*[(p_var(c), k) for c, k in st.col],
                                    (X_VAR, st.comaj)))
    closed = HImage(numerator, st.des, tuple(range(len(a) + 1)))
    return lhs == closed.series(t_order)
