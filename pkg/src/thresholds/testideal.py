"""Test ideals over F_p via Frobenius roots.

``frobenius_root(b, e)`` is the smallest ideal J with b contained in
J^[p^e]; it comes from writing each generator as a sum of p^e-th powers
times monomials with exponents below p^e.

``tau(a, lam)`` dispatches on the shape of the ideal:

* monomial ideals have an exact polyhedral description: tau is generated
  by the monomials u with u + (1,...,1) in the interior of lam * P(a);
* principal ideals use that (f^a)^[1/p^e] is exactly tau(f^{a/p^e}),
  together with the Skoda recursion tau(f^{1+s}) = f*tau(f^s) and the
  scaling tau(f^{s/p}) = tau(f^s)^[1/p]; starting from the exact value at
  a p-adic rounding of lam, the monotone iteration Y -> (f^c Y)^[1/p^b]
  (with c = lam*(p^b - 1) an integer) increases to tau(f^lam) by right
  continuity, so the first repeat is a sound stopping point;
* anything else falls back to the ascending chain
  (a^{ceil(lam p^e)})^[1/p^e], whose members are lower bounds; the result
  is certified only when the chain reaches the unit ideal.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import ceil

from thresholds.grobner import PolyIdeal, ideal_power
from thresholds.lp import OPTIMAL, solve_lp
from thresholds.newton import MonomialIdeal
from thresholds.rings import (
    BudgetExceededError,
    Polynomial,
    frobenius_decompose,
)

DEFAULT_E_MAX = 5
DEFAULT_ITER_MAX = 40


def _gens_of(a) -> list:
    gens = list(a.gens) if isinstance(a, PolyIdeal) else list(a)
    if not gens:
        raise ValueError("empty generator list")
    ring = gens[0].ring
    if ring.fieldtag != "Fp":
        raise ValueError("test ideals need an F_p ring")
    return gens


def frobenius_root(b, e: int) -> PolyIdeal:
    """Smallest ideal whose e-th Frobenius power contains the ideal b.

    For monomial generators this is componentwise floor division of the
    exponents by p^e; in general it is generated by the coefficient
    polynomials of the base-p^e decomposition of every generator.
    """
    if e < 0:
        raise ValueError("e must be >= 0")
    gens = _gens_of(b)
    ring = gens[0].ring
    if e == 0:
        return PolyIdeal(gens)
    q = ring.p**e
    out = []
    for g in gens:
        if len(g.terms) == 1:
            (exp,) = g.terms
            out.append(Polynomial(ring, {tuple(x // q for x in exp): 1}))
        else:
            out.extend(frobenius_decompose(g, e).values())
    return PolyIdeal([g for g in out if not g.is_zero()])


def frobenius_bracket_power(b: PolyIdeal, e: int) -> PolyIdeal:
    """b^[p^e]: the ideal generated by the p^e-th powers of the generators."""
    q = b.ring.p**e
    return PolyIdeal([g.pow(q) for g in b.gens])


@dataclass(frozen=True)
class TauResult:
    ideal: PolyIdeal
    lam: Fraction
    stabilized: bool  # True only with a certificate of exactness
    e_used: int


def ascending_chain(a, lam, e_max: int = DEFAULT_E_MAX, *,
                    power_budget: int = 10**5) -> list:
    """The chain I_e = (a^{ceil(lam p^e)})^[1/p^e], e = 1..e_max.

    Ascends to tau(a^lam); each member is a certified lower bound but the
    chain can plateau before its limit, so equality of two members is not
    by itself a stabilization proof.
    """
    gens = _gens_of(a)
    p = gens[0].ring.p
    lam = Fraction(lam)
    chain = []
    for e in range(1, e_max + 1):
        r = ceil(lam * p**e)
        cur = frobenius_root(ideal_power(gens, r, power_budget), e)
        if chain and not cur.contains(chain[-1]):
            raise AssertionError("Frobenius-root chain failed to ascend")
        chain.append(cur)
    return chain


# ----------------------------------------------------------------------
# Exact monomial test ideals
# ----------------------------------------------------------------------

def _interior_point(ideal: MonomialIdeal, lam: Fraction, v) -> bool:
    """Is v in the interior of lam * P(ideal)?  Exact LP on the slack."""
    k = len(ideal.gens)
    n = ideal.n
    # vars: mu_1..mu_k, eps; maximize eps s.t. lam*sum mu g <= v - eps
    c = [Fraction(0)] * k + [Fraction(-1)]
    A_ub = [
        [lam * ideal.gens[j][i] for j in range(k)] + [Fraction(1)]
        for i in range(n)
    ]
    b_ub = [Fraction(v[i]) for i in range(n)]
    A_eq = [[Fraction(1)] * k + [Fraction(0)]]
    res = solve_lp(c, A_ub, b_ub, A_eq, [Fraction(1)])
    return res.status == OPTIMAL and -res.objective > 0


def tau_monomial(ideal: MonomialIdeal, lam) -> MonomialIdeal:
    """tau(a^lam) for monomial a: monomials u with u+1 interior to lam*P(a).

    The description is characteristic-free, so no prime appears here.
    """
    lam = Fraction(lam)
    if lam < 0:
        raise ValueError("lambda must be >= 0")
    n = ideal.n
    if lam == 0:
        return MonomialIdeal(n, [(0,) * n])
    bound = int(ceil(lam * max(max(g) for g in ideal.gens))) + 1
    from itertools import product

    gens = []
    for u in product(range(bound + 1), repeat=n):
        if any(all(x >= y for x, y in zip(u, g)) for g in gens):
            continue  # already inside a found generator's shadow
        if _interior_point(ideal, lam, [x + 1 for x in u]):
            gens.append(u)
    if not gens:
        raise AssertionError("tau search box too small")  # pragma: no cover
    return MonomialIdeal(n, gens)


def _monomial_to_polyideal(ideal: MonomialIdeal, ring) -> PolyIdeal:
    return PolyIdeal([Polynomial(ring, {g: 1}) for g in ideal.gens])


# ----------------------------------------------------------------------
# Exact principal test ideals
# ----------------------------------------------------------------------

def _multiplicative_order(p: int, d: int) -> int:
    if d == 1:
        return 1
    b, x = 1, p % d
    while x != 1:
        x = x * p % d
        b += 1
        if b > d:
            raise AssertionError("order computation ran past the modulus")
    return b


def _tau_principal(f: Polynomial, lam: Fraction, iter_max: int) -> TauResult:
    ring = f.ring
    p = ring.p
    if lam == 0:
        return TauResult(PolyIdeal([Polynomial.one(ring)]), lam, True, 0)
    if lam >= 1:
        # Skoda: tau(f^{1+s}) = f * tau(f^s)
        inner = _tau_principal(f, lam - 1, iter_max)
        return TauResult(
            PolyIdeal([f * g for g in inner.ideal.gens]),
            lam, inner.stabilized, inner.e_used,
        )
    d = lam.denominator
    m = 0
    while d % p == 0:
        d //= p
        m += 1
    if m:
        # tau(f^{s/p^m}) = tau(f^s)^[1/p^m]
        inner = _tau_principal(f, lam * p**m, iter_max)
        return TauResult(
            frobenius_root(inner.ideal, m),
            lam, inner.stabilized, inner.e_used,
        )
    # p does not divide the denominator: fixed-point iteration at level q
    b = _multiplicative_order(p, d)
    q = p**b
    c = lam * (q - 1)
    assert c.denominator == 1
    c = c.numerator
    # exact starting value tau(f^{ceil(lam q)/q}) = (f^{ceil(lam q)})^[1/q]
    Y = frobenius_root([f.pow(ceil(lam * q))], b)
    fc = f.pow(c)
    for it in range(1, iter_max + 1):
        Z = frobenius_root([fc * g for g in Y.gens], b)
        if Z.equal(Y):
            return TauResult(Y, lam, True, it)
        if not Z.contains(Y):
            raise AssertionError("principal tau iteration failed to ascend")
        Y = Z
    return TauResult(Y, lam, False, iter_max)


def tau(a, lam, *, e_max: int = DEFAULT_E_MAX,
        iter_max: int = DEFAULT_ITER_MAX, power_budget: int = 10**5) -> TauResult:
    """Test ideal tau(a^lam) with a certificate whenever one is available."""
    lam = Fraction(lam)
    if lam < 0:
        raise ValueError("lambda must be >= 0")
    gens = _gens_of(a)
    ring = gens[0].ring
    if lam == 0:
        return TauResult(PolyIdeal([Polynomial.one(ring)]), lam, True, 0)
    if all(len(g.terms) == 1 for g in gens):
        ideal = MonomialIdeal(ring.nvars, [next(iter(g.terms)) for g in gens])
        result = tau_monomial(ideal, lam)
        return TauResult(_monomial_to_polyideal(result, ring), lam, True, 0)
    if len(gens) == 1:
        return _tau_principal(gens[0], lam, iter_max)
    chain = ascending_chain(gens, lam, e_max, power_budget=power_budget)
    one = Polynomial.one(ring)
    for e, cur in enumerate(chain, start=1):
        if cur.member(one):
            # an ascending chain that reaches (1) stays there
            return TauResult(PolyIdeal([one]), lam, True, e)
    return TauResult(chain[-1], lam, False, e_max)


# ----------------------------------------------------------------------
# Identities used as cross-checks
# ----------------------------------------------------------------------

def check_skoda(a, lam, **kw) -> bool:
    """tau(a^lam) = a * tau(a^{lam-1}) for lam >= number of generators."""
    gens = _gens_of(a)
    lam = Fraction(lam)
    if lam < len(gens):
        raise ValueError("Skoda needs lambda >= number of generators")
    left = tau(gens, lam, **kw).ideal
    right = PolyIdeal(gens).product(tau(gens, lam - 1, **kw).ideal)
    return left.equal(right)


def check_p_scaling(a, lam, **kw) -> bool:
    """tau(a^{lam/p}) = tau(a^lam)^[1/p]."""
    gens = _gens_of(a)
    p = gens[0].ring.p
    left = tau(gens, Fraction(lam) / p, **kw).ideal
    right = frobenius_root(tau(gens, lam, **kw).ideal, 1)
    return left.equal(right)


# ----------------------------------------------------------------------
# Jumping numbers by grid scan
# ----------------------------------------------------------------------

@dataclass(frozen=True)
class JumpingReport:
    """Grid scan of lambda -> tau(a^lam) on {k/grid : 0 <= k <= grid*span}.

    ``jumps`` holds the grid values where the ideal strictly drops; a true
    jumping number in (prev, k/grid] is reported as k/grid, so locations
    are exact when they lie on the grid and otherwise rounded up by less
    than 1/grid.
    """

    grid: int
    jumps: tuple
    certified: bool
    resolution: Fraction


def fjump_scan(a, grid: int, span=1, *, e_max: int = DEFAULT_E_MAX,
               iter_max: int = DEFAULT_ITER_MAX) -> JumpingReport:
    gens = _gens_of(a)
    if grid < 1:
        raise ValueError("grid must be >= 1")
    span = Fraction(span)
    jumps = []
    certified = True
    prev_ideal = tau(gens, Fraction(0), e_max=e_max, iter_max=iter_max).ideal
    k = 1
    while Fraction(k, grid) <= span:
        res = tau(gens, Fraction(k, grid), e_max=e_max, iter_max=iter_max)
        certified = certified and res.stabilized
        if not res.ideal.equal(prev_ideal):
            if not prev_ideal.contains(res.ideal):
                raise AssertionError("test ideals failed to decrease in lambda")
            jumps.append(Fraction(k, grid))
        prev_ideal = res.ideal
        k += 1
    return JumpingReport(grid, tuple(jumps), certified, Fraction(1, grid))
