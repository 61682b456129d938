"""Groebner bases over F_p in graded reverse lexicographic order.

Buchberger's algorithm with the coprimality and chain criteria, followed by
reduction to the unique reduced basis, so ideal equality is a tuple
comparison.  Ideals generated by monomials skip all of this: containment is
plain divisibility.
"""

from __future__ import annotations

from dataclasses import dataclass

from thresholds.rings import BudgetExceededError, Polynomial, Ring, grevlex_key

DEFAULT_PAIR_BUDGET = 10**5


def _leading(f: Polynomial):
    """(exponent, coefficient) of the grevlex-leading term."""
    exp = max(f.terms, key=grevlex_key)
    return exp, f.terms[exp]


def _divides(a, b) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


def _monomial(ring: Ring, exp, coeff=1) -> Polynomial:
    return Polynomial(ring, {tuple(exp): coeff})


def normal_form(f: Polynomial, basis) -> Polynomial:
    """Remainder of f on division by the basis (full reduction)."""
    ring = f.ring
    remainder: dict = {}
    work = dict(f.terms)
    leads = [(_leading(g)[0], _leading(g)[1], g) for g in basis]
    while work:
        exp = max(work, key=grevlex_key)
        coeff = work.pop(exp)
        for lexp, lc, g in leads:
            if _divides(lexp, exp):
                factor = _monomial(
                    ring,
                    tuple(a - b for a, b in zip(exp, lexp)),
                    ring.coeff(coeff * ring.coeff_inv(lc)),
                )
                for e2, c2 in (factor * g).terms.items():
                    if e2 == exp:
                        continue
                    c = ring.coeff(work.get(e2, 0) - c2)
                    if c == 0:
                        work.pop(e2, None)
                    else:
                        work[e2] = c
                break
        else:
            remainder[exp] = coeff
    return Polynomial(ring, remainder)


def _s_poly(f: Polynomial, g: Polynomial) -> Polynomial:
    ring = f.ring
    (fe, fc), (ge, gc) = _leading(f), _leading(g)
    lcm = _lcm(fe, ge)
    mf = _monomial(ring, tuple(a - b for a, b in zip(lcm, fe)), ring.coeff_inv(fc))
    mg = _monomial(ring, tuple(a - b for a, b in zip(lcm, ge)), ring.coeff_inv(gc))
    return mf * f - mg * g


def groebner_basis(gens, pair_budget: int | None = None) -> tuple:
    """Reduced grevlex Groebner basis, monic, sorted by leading term."""
    if pair_budget is None:
        pair_budget = DEFAULT_PAIR_BUDGET
    gens = [g for g in gens if not g.is_zero()]
    if not gens:
        raise ValueError("zero ideal has no generators here")
    ring = gens[0].ring
    if ring.fieldtag != "Fp":
        raise ValueError("groebner_basis expects an F_p ring")
    if any(g.ring != ring for g in gens):
        raise ValueError("generators live in different rings")

    basis = list(gens)
    pairs = [(i, j) for i in range(len(basis)) for j in range(i)]
    processed = 0
    while pairs:
        # prefer the pair with the grevlex-smallest lcm (normal selection)
        pairs.sort(
            key=lambda ij: grevlex_key(
                _lcm(_leading(basis[ij[0]])[0], _leading(basis[ij[1]])[0])
            ),
            reverse=True,
        )
        i, j = pairs.pop()
        processed += 1
        if processed > pair_budget:
            raise BudgetExceededError("S-pair budget exceeded")
        fe, ge = _leading(basis[i])[0], _leading(basis[j])[0]
        lcm = _lcm(fe, ge)
        if lcm == tuple(a + b for a, b in zip(fe, ge)):
            continue  # coprime leading terms: S-poly reduces to zero
        if _chain_criterion(basis, pairs, i, j, lcm):
            continue
        r = normal_form(_s_poly(basis[i], basis[j]), basis)
        if not r.is_zero():
            basis.append(r)
            k = len(basis) - 1
            pairs.extend((k, t) for t in range(k))
    return _reduce_basis(basis)


def _chain_criterion(basis, pairs, i, j, lcm) -> bool:
    pairset = {frozenset(p) for p in pairs}
    for k in range(len(basis)):
        if k in (i, j):
            continue
        if not _divides(_leading(basis[k])[0], lcm):
            continue
        if frozenset((i, k)) not in pairset and frozenset((j, k)) not in pairset:
            return True
    return False


def _reduce_basis(basis) -> tuple:
    ring = basis[0].ring
    # drop members whose leading term is divisible by another's
    leads = [_leading(g)[0] for g in basis]
    keep = []
    for i, g in enumerate(basis):
        if any(
            j != i and _divides(leads[j], leads[i])
            and (leads[j] != leads[i] or j < i)
            for j in range(len(basis))
        ):
            continue
        keep.append(g)
    # fully reduce each survivor against the others and make it monic
    out = []
    for i, g in enumerate(keep):
        others = keep[:i] + keep[i + 1 :]
        r = normal_form(g, others) if others else g
        lc = _leading(r)[1]
        out.append(_monomial(ring, (0,) * ring.nvars, ring.coeff_inv(lc)) * r)
    out.sort(key=lambda g: grevlex_key(_leading(g)[0]))
    return tuple(out)


@dataclass(frozen=True)
class PolyIdeal:
    """Ideal in F_p[x] with a lazily computed reduced Groebner basis."""

    ring: Ring
    gens: tuple

    def __init__(self, gens, pair_budget: int | None = None):
        gens = [g for g in gens if not g.is_zero()]
        if not gens:
            raise ValueError("need at least one nonzero generator")
        object.__setattr__(self, "ring", gens[0].ring)
        object.__setattr__(self, "gens", tuple(gens))
        object.__setattr__(self, "_budget", pair_budget)
        object.__setattr__(self, "_gb", None)

    def groebner(self) -> tuple:
        if self._gb is None:
            if self.is_monomial():
                gb = _monomial_reduce(self.ring, [next(iter(g.terms)) for g in self.gens])
            else:
                gb = groebner_basis(list(self.gens), self._budget)
            object.__setattr__(self, "_gb", gb)
        return self._gb

    def is_monomial(self) -> bool:
        return all(len(g.terms) == 1 for g in self.gens)

    def member(self, f: Polynomial) -> bool:
        if f.is_zero():
            return True
        if self.is_monomial():
            exps = [next(iter(g.terms)) for g in self.gens]
            return all(
                any(_divides(e, t) for e in exps) for t in f.terms
            )
        return normal_form(f, self.groebner()).is_zero()

    def contains(self, other: "PolyIdeal") -> bool:
        return all(self.member(g) for g in other.gens)

    def equal(self, other: "PolyIdeal") -> bool:
        if self.ring != other.ring:
            return False
        if self.is_monomial() and other.is_monomial():
            return self.contains(other) and other.contains(self)
        return self.groebner() == other.groebner()

    def product(self, other: "PolyIdeal") -> "PolyIdeal":
        return PolyIdeal(
            [f * g for f in self.gens for g in other.gens], self._budget
        )


def _monomial_reduce(ring: Ring, exps) -> tuple:
    minimal = [
        e for e in exps
        if not any(h != e and _divides(h, e) for h in exps)
    ]
    out = [_monomial(ring, e) for e in set(minimal)]
    out.sort(key=lambda g: grevlex_key(_leading(g)[0]))
    return tuple(out)


def ideal_power(gens, r: int, budget: int = 10**5) -> list:
    """Generators of the r-th power: all degree-r products of generators."""
    from itertools import combinations_with_replacement

    if r < 1:
        raise ValueError("power must be >= 1")
    out = []
    seen = set()
    count = 0
    for combo in combinations_with_replacement(gens, r):
        prod = combo[0]
        for g in combo[1:]:
            prod = prod * g
        count += 1
        if count > budget:
            raise BudgetExceededError("ideal power budget exceeded")
        if prod not in seen:
            seen.add(prod)
            out.append(prod)
    return out
