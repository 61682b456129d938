from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from helpers import nonzero_polynomials
from thresholds.frobenius import (
    FrobeniusContext,
    NuSequence,
    fpt_cubic_cone,
    fpt_enclosure,
    fpt_monomial,
    in_frobenius_power,
    is_ordinary_cubic,
    nu,
    nu_sequence,
)
from thresholds.newton import MonomialIdeal, lct_monomial
from thresholds.rings import Polynomial, Ring, parse_polynomial

F2 = Ring.prime_field(2, 2)
F3 = Ring.prime_field(2, 3)
F5 = Ring.prime_field(2, 5)
F7 = Ring.prime_field(2, 7)


def _mono(ring, exp):
    return Polynomial(ring, {exp: 1})


def test_in_frobenius_power():
    f = parse_polynomial("x^4 + x^2*y^2", F2)
    assert in_frobenius_power(f, 1)
    assert not in_frobenius_power(f, 2)
    assert in_frobenius_power(Polynomial.zero(F2), 3)


def test_nu_validates_input():
    with pytest.raises(ValueError):
        nu([parse_polynomial("x+1", F2)], 1)  # constant term
    with pytest.raises(ValueError):
        nu([Polynomial.zero(F2)], 1)
    with pytest.raises(ValueError):
        nu([parse_polynomial("x", Ring.rationals(1))], 1)


def _nu_bruteforce(gens, e):
    """Oracle: expand every degree-i product until all land in m^[p^e]."""
    from itertools import combinations_with_replacement

    i = 0
    while True:
        i += 1
        hit = False
        for combo in combinations_with_replacement(gens, i):
            prod = combo[0]
            for g in combo[1:]:
                prod = prod * g
            if not in_frobenius_power(prod, e):
                hit = True
                break
        if not hit:
            return i - 1


def test_nu_cusp_small_primes():
    for ring, p in [(F5, 5), (F7, 7)]:
        f = parse_polynomial("x^2+y^3", ring)
        assert nu(f, 1) == (p - 1) // 2 + (p - 1) // 3


@given(
    st.lists(
        st.tuples(st.integers(0, 3), st.integers(0, 3)).filter(lambda g: any(g)),
        min_size=1,
        max_size=3,
    ),
    st.integers(1, 2),
)
def test_nu_monomial_path_matches_bruteforce(exps, e):
    gens = [_mono(F3, g) for g in exps]
    assert nu(gens, e) == _nu_bruteforce(gens, e)


@given(nonzero_polynomials(F3, max_terms=3, max_exp=3), st.integers(1, 2))
def test_nu_principal_path_matches_bruteforce(f, e):
    if (0, 0) in f.terms:
        return
    assert nu(f, e) == _nu_bruteforce([f], e)


def test_nu_multigenerator_polynomial_path():
    f = parse_polynomial("x^2+y^3", F3)
    g = parse_polynomial("x*y", F3)
    assert nu([f, g], 1) == _nu_bruteforce([f, g], 1)
    assert nu([f, g], 2) == _nu_bruteforce([f, g], 2)


@given(nonzero_polynomials(F3, max_terms=3, max_exp=2))
def test_nu_growth_bounds_principal(f):
    if (0, 0) in f.terms:
        return
    n1, n2 = nu(f, 1), nu(f, 2)
    assert 3 * n1 <= n2 <= 3 * n1 + 2  # p*nu(e) <= nu(e+1) <= p*nu(e)+p-1


@given(
    st.lists(
        st.tuples(st.integers(0, 3), st.integers(0, 3)).filter(lambda g: any(g)),
        min_size=1,
        max_size=2,
    )
)
def test_nu_monotone_in_ideal(exps):
    gens = [_mono(F3, g) for g in exps]
    bigger = gens + [_mono(F3, (1, 1))]
    assert nu(gens, 1) <= nu(bigger, 1)


def test_nu_power_identity():
    # r*nu_{a^r}(e) <= nu_a(e) <= r*(nu_{a^r}(e)+1) - 1
    a = MonomialIdeal(2, [(2, 0), (0, 3)])
    for r in (2, 3):
        gens = [_mono(F5, g) for g in a.gens]
        gens_r = [_mono(F5, g) for g in a.power(r).gens]
        for e in (1, 2):
            lo = nu(gens_r, e)
            mid = nu(gens, e)
            assert r * lo <= mid <= r * (lo + 1) - 1


def test_nu_subadditive_in_ideal_sum():
    a = [parse_polynomial("x^2+y^3", F5)]
    b = [_mono(F5, (1, 1))]
    assert nu(a + b, 1) <= nu(a, 1) + nu(b, 1) + 1


def test_nu_sequence_regression_guard():
    seq = nu_sequence([parse_polynomial("x^2+y^3", F5)], FrobeniusContext(5, 2, e_max=3))
    assert seq.values == (3, 19, 99)
    with pytest.raises(ValueError):
        NuSequence(5, (3, 14))  # violates nu(e+1) >= p*nu(e)


def test_fpt_monomial_is_lct():
    a = MonomialIdeal.parse("x^2, y^3")
    assert fpt_monomial(a) == lct_monomial(a) == Fraction(5, 6)


def test_fpt_enclosure_certified_monomial():
    gens = [_mono(F5, (2, 0)), _mono(F5, (0, 3))]
    res = fpt_enclosure(gens, FrobeniusContext(5, 2))
    assert res.is_exact and res.value == Fraction(5, 6)


def test_fpt_enclosure_one_variable_principal():
    f = parse_polynomial("x^3 + x^5", F5)
    res = fpt_enclosure([f], FrobeniusContext(5, 2))
    assert res.is_exact and res.value == Fraction(1, 3)


def test_fpt_enclosure_interval_bounds():
    f = parse_polynomial("x^2+y^3", F7)
    res = fpt_enclosure([f], FrobeniusContext(7, 2, e_max=2))
    assert res.contains(Fraction(5, 6))
    assert Fraction(1, 2) <= res.lo <= res.hi <= Fraction(2, 2)
    assert not res.certified


def test_fpt_enclosure_multigenerator():
    gens = [parse_polynomial("x^2+y^3", F5), parse_polynomial("x*y", F5)]
    res = fpt_enclosure(gens, FrobeniusContext(5, 2, e_max=2))
    ord_a = 2
    assert Fraction(1, ord_a) <= res.lo <= res.hi <= Fraction(2, ord_a)


def test_cubic_validation():
    ring3 = Ring.prime_field(3, 7)
    with pytest.raises(ValueError):
        is_ordinary_cubic(parse_polynomial("x^2+y^3", F7))
    with pytest.raises(ValueError):
        is_ordinary_cubic(parse_polynomial("x^3+y^3+z^2", ring3))


def test_fermat_cubic_ordinarity():
    for p, expected in [(5, False), (7, True), (11, False), (13, True)]:
        ring = Ring.prime_field(3, p)
        f = parse_polynomial("x^3+y^3+z^3", ring)
        assert is_ordinary_cubic(f) == expected
        assert fpt_cubic_cone(f) == (1 if expected else Fraction(p - 1, p))


def test_non_fermat_cubic():
    # y^2*z = x^3 + x*z^2 over F_5: supersingular iff the (xyz)^{p-1}
    # coefficient vanishes; cross-checked by direct expansion
    ring = Ring.prime_field(3, 5)
    f = parse_polynomial("y^2*z - x^3 - x*z^2", ring)
    expanded = f.pow(4)
    oracle = expanded.coefficient((4, 4, 4)) != 0
    assert is_ordinary_cubic(f) == oracle
