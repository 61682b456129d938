from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from helpers import brute_lct_diagonal, m_primary_exponent_sets, monomial_exponent_sets
from thresholds.newton import (
    INFINITY,
    MonomialIdeal,
    NewtonPolyhedron,
    NotMPrimaryError,
    check_amgm,
    contains_point,
    covolume,
    diagonal_entry_min,
    lct_monomial,
    monomial_valuation,
    multiplicity_monomial,
)


def test_minimal_generators():
    a = MonomialIdeal(2, [(2, 0), (2, 1), (0, 3), (4, 4)])
    assert a.gens == ((0, 3), (2, 0))


def test_parse():
    a = MonomialIdeal.parse("x^2, y^3")
    assert a.gens == ((0, 3), (2, 0))
    with pytest.raises(ValueError):
        MonomialIdeal.parse("x + y")


def test_m_primary_detection():
    assert MonomialIdeal(2, [(2, 0), (0, 3)]).is_m_primary()
    assert not MonomialIdeal(2, [(2, 0), (1, 1)]).is_m_primary()
    assert MonomialIdeal(1, [(4,)]).is_m_primary()


def test_containment_and_power():
    a = MonomialIdeal(2, [(2, 0), (0, 2)])
    b = MonomialIdeal(2, [(1, 0), (0, 1)])
    assert b.contains_ideal(a)
    assert not a.contains_ideal(b)
    assert a.power(2).gens == ((0, 4), (2, 2), (4, 0))


def test_lct_cusp_exponents():
    assert lct_monomial(MonomialIdeal.parse("x^2, y^3")) == Fraction(5, 6)


def test_lct_maximal_ideal_is_dimension():
    for n in (1, 2, 3, 4):
        gens = [tuple(1 if j == i else 0 for j in range(n)) for i in range(n)]
        assert lct_monomial(MonomialIdeal(n, gens)) == n


def test_lct_improper_is_infinite():
    assert lct_monomial(MonomialIdeal(2, [(0, 0)])) == INFINITY


def test_lct_non_diagonal():
    # (x^3, xy, y^2): the generator (1,1) puts the diagonal point at t = 1
    a = MonomialIdeal(2, [(3, 0), (1, 1), (0, 2)])
    assert lct_monomial(a) == Fraction(1)
    # without it the diagonal meets the segment (3,0)-(0,2) at t = 6/5
    b = MonomialIdeal(2, [(3, 0), (0, 2)])
    assert lct_monomial(b) == Fraction(5, 6)


@given(st.lists(st.integers(1, 10), min_size=1, max_size=4))
def test_lct_diagonal_formula(exps):
    n = len(exps)
    gens = [tuple(a if j == i else 0 for j in range(n)) for i, a in enumerate(exps)]
    assert lct_monomial(MonomialIdeal(n, gens)) == brute_lct_diagonal(exps)


@given(monomial_exponent_sets(2), st.integers(2, 4))
def test_lct_scaling(gens, r):
    a = MonomialIdeal(2, gens)
    if not a.is_proper():
        return
    assert lct_monomial(a.scaled(r)) == lct_monomial(a) / r


@given(monomial_exponent_sets(2, max_exp=4, max_gens=3))
def test_lct_bounds_and_monotonicity(gens):
    a = MonomialIdeal(2, gens)
    if not a.is_proper():
        return
    lct = lct_monomial(a)
    ord_a = a.ord()
    assert Fraction(1, ord_a) <= lct <= Fraction(2, ord_a)
    # dropping to a subideal (multiply one generator) can only lower lct
    smaller = MonomialIdeal(2, [tuple(x + 1 for x in gens[0])] + gens[1:])
    if a.contains_ideal(smaller):
        assert lct_monomial(smaller) <= lct


def test_lct_disjoint_variables_add():
    # (x^2) in x and (y^3, z^3) in (y, z), combined in 3 variables
    a = MonomialIdeal(3, [(2, 0, 0), (0, 3, 0), (0, 0, 3)])
    assert lct_monomial(a) == Fraction(1, 2) + Fraction(2, 3)


def test_contains_point_tight_at_threshold():
    a = MonomialIdeal.parse("x^2, y^3")
    P = a.newton_polyhedron()
    lct = lct_monomial(a)
    assert contains_point(P, [1 / lct, 1 / lct])
    tighter = lct + Fraction(1, 1000)
    assert not contains_point(P, [1 / tighter, 1 / tighter])


def test_diagonal_entry_min_value():
    P = NewtonPolyhedron(2, [(2, 0), (0, 3)])
    assert diagonal_entry_min(P) == Fraction(6, 5)


def test_monomial_valuation():
    a = MonomialIdeal.parse("x^2, y^3")
    assert monomial_valuation((1, 1), a) == 2
    assert monomial_valuation((3, 2), a) == 6
    with pytest.raises(ValueError):
        monomial_valuation((-1, 0), a)


def test_covolume_diagonal():
    assert covolume([(2, 0), (0, 3)], 2) == 3
    assert covolume([(2, 0, 0), (0, 3, 0), (0, 0, 5)], 3) == 5


def test_multiplicity_known_values():
    assert multiplicity_monomial(MonomialIdeal.parse("x^2, y^3")) == 6
    assert multiplicity_monomial(MonomialIdeal(2, [(3, 0), (1, 1), (0, 2)])) == 5
    assert multiplicity_monomial(MonomialIdeal(3, [(1, 0, 0), (0, 1, 0), (0, 0, 1)])) == 1


def test_multiplicity_of_powers_scales():
    a = MonomialIdeal.parse("x^2, y^3")
    assert multiplicity_monomial(a.power(2)) == 4 * 6


def test_multiplicity_requires_m_primary():
    with pytest.raises(NotMPrimaryError):
        multiplicity_monomial(MonomialIdeal(2, [(1, 1)]))


def test_amgm_equality_on_equal_diagonals():
    for n, a in [(1, 3), (2, 4), (3, 2)]:
        gens = [tuple(a if j == i else 0 for j in range(n)) for i in range(n)]
        ideal = MonomialIdeal(n, gens)
        e = multiplicity_monomial(ideal)
        lct = lct_monomial(ideal)
        assert e * lct**n == n**n


@given(m_primary_exponent_sets(2))
def test_amgm_random_2d(gens):
    assert check_amgm(MonomialIdeal(2, gens))


@given(m_primary_exponent_sets(3, max_exp=4, max_extra=1))
def test_amgm_random_3d(gens):
    assert check_amgm(MonomialIdeal(3, gens))
