import pytest
from hypothesis import given, settings, strategies as st

from colshuffle import (ColourOutOfRange, MPoly, SymbolOverlap, expand_F,
                        parse_permutation, psi_closed_form_check, psi_m,
                        s_des, verify_product_rule)
from colshuffle.mpoly import monomial
from colshuffle.qsym import qvar
from colshuffle.shuffle_algebra import X_VAR, p_var
from colshuffle.permutations import all_coloured_permutations, descent_set
from conftest import coloured_permutations

P = parse_permutation


# -- test-local oracles ------------------------------------------------------

def count_sequences(n, m, strict):
    """Independent recursive count of weakly increasing sequences of length
    n bounded by m with strict rises after positions in ``strict``."""
    def rec(pos, lo):
        if pos == n:
            return 1
        total = 0
        for v in range(lo, m + 1):
            total += rec(pos + 1, v + 1 if (pos + 1) in strict else v)
        return total
    return rec(0, 1) if n else 1


def psi_by_direct_enumeration(a, m):
    """Oracle for the specialisation: sum over sequences
    1 = i_0 <= i_1 <= ... <= i_n <= m with strict rises at every descent
    (including the artificial position 0), of p^col x^(sum i_k - n)."""
    ents = a.entries
    n = len(ents)
    des = descent_set(a)
    out = MPoly.zero()

    def rec(pos, lo, total):
        nonlocal out
        if pos == n:
            col = {}
            for _, c in ents:
                col[c] = col.get(c, 0) + 1
            mono = monomial(*[(p_var(c), k) for c, k in col.items()],
                            (X_VAR, total - n))
            out = out + MPoly.term(mono)
            return
        for v in range(lo, m + 1):
            rec(pos + 1, v + 1 if (pos + 1) in des else v, total + v)

    start = 2 if 0 in des else 1
    rec(0, start, 0)
    return out


# -- the fundamental expansion --------------------------------------------------

def test_expand_F_empty():
    F = expand_F(P(""), 3)
    assert F.poly == MPoly.one()
    assert F.degree == 0


def test_expand_F_golden_two_letters():
    F = expand_F(P("1 2"), 2)
    expected = (MPoly.term(monomial((qvar(1, 0), 2)))
                + MPoly.term(monomial((qvar(1, 0), 1), (qvar(2, 0), 1)))
                + MPoly.term(monomial((qvar(2, 0), 2))))
    assert F.poly == expected


def test_expand_F_colour_out_of_range():
    with pytest.raises(ColourOutOfRange):
        expand_F(P("1^3"), 2, r=3)


@given(coloured_permutations(max_len=4, max_colour=2), st.integers(1, 4))
def test_expand_F_homogeneous_with_counted_monomials(a, m):
    F = expand_F(a, m)
    n = len(a)
    for mono in F.poly.coeffs:
        assert sum(e for _, e in mono) == n
    strict = frozenset(i for i in descent_set(a) if i != 0)
    assert F.monomial_count() == count_sequences(n, m, strict)
    # distinct sequences produce distinct monomials, so coefficients are 1
    assert all(c == 1 for c in F.poly.coeffs.values())


@given(coloured_permutations(max_len=4, max_colour=2),
       coloured_permutations(max_len=4, max_colour=2), st.integers(1, 3))
def test_expand_F_depends_only_on_coloured_descents(a, b, m):
    if len(a) == len(b) and s_des(a) == s_des(b):
        assert expand_F(a, m, r=3) == expand_F(b, m, r=3)
    # and a permutation always agrees with itself relabelled
    relabelled = a.relabel({s: s + 5 for s in a.symbols()})
    assert expand_F(a, m, r=3) == expand_F(relabelled, m, r=3)


# -- the product rule ------------------------------------------------------------

def test_product_rule_examples():
    assert verify_product_rule(P("1"), P("2^2"), 3)
    assert verify_product_rule(P(""), P("1^1 2^0"), 3)
    with pytest.raises(SymbolOverlap):
        verify_product_rule(P("1"), P("1^1"), 3)


@settings(deadline=None)
@given(coloured_permutations(max_len=2, max_colour=2, symbol_pool=4),
       coloured_permutations(max_len=2, max_colour=2, symbol_pool=4))
def test_product_rule_random_pairs(a, b):
    if a.symbols() & b.symbols():
        b = b.relabel({s: s + 10 for s in b.symbols()})
    assert verify_product_rule(a, b, 4)


# -- the specialisations -----------------------------------------------------------

def test_psi_boundary_cases():
    assert psi_m(expand_F(P("1^1"), 1), 1) == MPoly.zero()
    assert psi_m(expand_F(P(""), 1), 1) == MPoly.one()
    # first index substitutes to p with x^0: psi_1 of an uncoloured letter
    assert psi_m(expand_F(P("1"), 1), 1) == MPoly.variable(p_var(0))


def test_psi_requires_cutoff():
    with pytest.raises(ValueError):
        psi_m(expand_F(P("1"), 2), 3)


@given(coloured_permutations(max_len=3, max_colour=2), st.integers(1, 4))
def test_psi_matches_direct_enumeration(a, m):
    assert psi_m(expand_F(a, m), m) == psi_by_direct_enumeration(a, m)


@given(coloured_permutations(max_len=2, max_colour=2, symbol_pool=4),
       coloured_permutations(max_len=2, max_colour=2, symbol_pool=4),
       st.integers(1, 3))
def test_psi_is_multiplicative(a, b, m):
    if a.symbols() & b.symbols():
        b = b.relabel({s: s + 10 for s in b.symbols()})
    r = 3
    F, G = expand_F(a, m, r), expand_F(b, m, r)
    assert psi_m(F * G, m) == psi_m(F, m) * psi_m(G, m)


# -- the closed form ---------------------------------------------------------------

def test_closed_form_small_cases():
    assert psi_closed_form_check(P("1"), 5)
    assert psi_closed_form_check(P(""), 4)
    assert psi_closed_form_check(P("1^1 2^2"), 6)


def test_closed_form_exhaustive_short():
    for n in range(0, 3):
        for a in all_coloured_permutations(n, 2):
            assert psi_closed_form_check(a, 6), str(a)
