"""Shared hypothesis strategies and small oracles for the test suite."""

from fractions import Fraction

from hypothesis import strategies as st

from thresholds.rings import Polynomial, Ring


def exponents(nvars, max_exp=4):
    return st.tuples(*[st.integers(0, max_exp)] * nvars)


def polynomials(ring: Ring, max_terms=4, max_exp=4, max_coeff=7):
    """Random sparse polynomials over the given ring (possibly zero)."""
    if ring.fieldtag == "Fp":
        coeffs = st.integers(1, ring.p - 1)
    else:
        coeffs = st.integers(-max_coeff, max_coeff).filter(bool)
    term = st.tuples(exponents(ring.nvars, max_exp), coeffs)
    return st.lists(term, min_size=0, max_size=max_terms).map(
        lambda ts: Polynomial(ring, dict(ts))
    )


def nonzero_polynomials(ring: Ring, **kw):
    return polynomials(ring, **kw).filter(lambda f: not f.is_zero())


def ideal_members(gens):
    """Random elements h1*g1 + ... + hk*gk of the ideal."""
    ring = gens[0].ring
    mults = st.tuples(*[polynomials(ring, max_terms=2, max_exp=2) for _ in gens])
    def combine(hs):
        out = Polynomial.zero(ring)
        for h, g in zip(hs, gens):
            out = out + h * g
        return out
    return mults.map(combine)


def monomial_exponent_sets(nvars, max_exp=5, max_gens=4):
    return st.lists(
        st.tuples(*[st.integers(0, max_exp)] * nvars).filter(lambda g: any(g)),
        min_size=1,
        max_size=max_gens,
    )


def m_primary_exponent_sets(nvars, max_exp=5, max_extra=2):
    """Pure powers of every variable plus a few mixed generators."""
    pure = st.tuples(*[st.integers(1, max_exp)] * nvars)
    extra = st.lists(
        st.tuples(*[st.integers(0, max_exp)] * nvars).filter(lambda g: any(g)),
        max_size=max_extra,
    )
    def build(args):
        powers, mixed = args
        gens = [
            tuple(r if j == i else 0 for j in range(nvars))
            for i, r in enumerate(powers)
        ]
        return gens + mixed
    return st.tuples(pure, extra).map(build)


def brute_lct_diagonal(exps):
    """Threshold of the ideal (x_1^{a_1}, ..., x_n^{a_n}): sum of 1/a_i."""
    return sum(Fraction(1, a) for a in exps)
