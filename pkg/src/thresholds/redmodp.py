"""Reduction mod p and comparison of the two thresholds.

For a polynomial with rational coefficients, the F-pure threshold of the
reduction mod p never exceeds the characteristic-zero threshold, and the two
agree for infinitely many p.  ``compare_at_prime`` produces one certified row
of that comparison; ``compare_diagonal`` runs it across a prime range for
diagonal polynomials, where equality has a clean congruence description.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import prod

from thresholds.frobenius import FrobeniusContext, fpt_enclosure
from thresholds.lct0 import Diagonal, ThresholdResult, lct_closed_form
from thresholds.rings import Polynomial, Ring, is_prime

EQUAL = "equal"
FPT_LESS = "fpt-less"
INCONCLUSIVE = "inconclusive"


class BadReductionError(ValueError):
    """A coefficient denominator vanishes mod p."""


def reduce_mod_p(f: Polynomial, p: int) -> Polynomial:
    """Coefficientwise reduction of a Q- or Z-polynomial to F_p."""
    if f.ring.fieldtag == "Fp":
        raise ValueError("polynomial is already in characteristic p")
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    target = Ring.prime_field(f.ring.nvars, p, f.ring.names)
    terms = {}
    for exp, c in f.terms.items():
        c = Fraction(c)
        if c.denominator % p == 0:
            raise BadReductionError(f"denominator of {c} vanishes mod {p}")
        num = c.numerator % p
        if num:
            terms[exp] = target.coeff(num * pow(c.denominator % p, -1, p))
    return Polynomial(target, terms)


@dataclass(frozen=True)
class ComparisonRow:
    p: int
    fpt: ThresholdResult
    lct0: Fraction
    relation: str  # EQUAL | FPT_LESS | INCONCLUSIVE
    residue: int | None = None  # p mod N when a congruence class is relevant


def compare_at_prime(f: Polynomial, p: int, lct0: Fraction, *,
                     e_max: int = 3, equal_modulus: int | None = None) -> ComparisonRow:
    """One comparison row: certified fpt data for f mod p against lct0.

    ``equal_modulus`` asserts that the two thresholds agree exactly when
    p = 1 mod that modulus (valid for diagonal polynomials with the product
    of the exponents); other primes get a nu-based enclosure, intersected
    with the a-priori bound fpt <= lct0.
    """
    lct0 = Fraction(lct0)
    residue = p % equal_modulus if equal_modulus else None
    if equal_modulus and residue == 1:
        return ComparisonRow(p, ThresholdResult.exact(lct0), lct0, EQUAL, residue)
    fp = reduce_mod_p(f, p)
    # grow e only until the relation is decided; the interval narrows as 1/p^e
    enc = None
    for e in range(1, e_max + 1):
        ctx = FrobeniusContext(p, fp.ring.nvars, e_max=e)
        enc = fpt_enclosure(fp, ctx)
        if enc.hi < lct0 or (enc.is_exact and enc.certified):
            break
    if enc.lo > lct0:
        raise AssertionError(
            f"fpt lower bound {enc.lo} exceeds the char-0 threshold {lct0}"
        )
    enc = ThresholdResult(enc.lo, min(enc.hi, lct0), enc.certified, enc.method)
    if enc.is_exact and enc.lo == lct0 and enc.certified:
        relation = EQUAL
    elif enc.hi < lct0:
        relation = FPT_LESS
    else:
        relation = INCONCLUSIVE
    return ComparisonRow(p, enc, lct0, relation, residue)


def compare_diagonal(exponents, primes, *, e_max: int = 3) -> list:
    """Comparison rows for x_1^{a_1} + ... + x_n^{a_n} across the given primes.

    Primes dividing some exponent are skipped: the reduction is then a p-th
    power times a unit pattern and the diagonal closed forms do not apply.
    """
    fam = Diagonal(tuple(exponents))
    lct0 = lct_closed_form(fam).value
    n = len(fam.exponents)
    modulus = prod(fam.exponents)
    ring = Ring.rationals(n)
    f = Polynomial(ring, {
        tuple(a if j == i else 0 for j in range(n)): 1
        for i, a in enumerate(fam.exponents)
    })
    rows = []
    for p in primes:
        if any(a % p == 0 for a in fam.exponents):
            continue
        rows.append(
            compare_at_prime(f, p, lct0, e_max=e_max, equal_modulus=modulus)
        )
    return rows
