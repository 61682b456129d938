"""Characteristic-zero log canonical thresholds for closed-form families.

Only the families with known closed forms are computed: diagonal forms,
homogeneous polynomials with isolated singularity, nonsingular subschemes,
monomial ideals (delegated to :mod:`thresholds.newton`), and plane nodes.
Anything else raises :class:`UnsupportedFamilyError`; computing a general
threshold would need a log resolution, which is out of scope.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from thresholds.newton import INFINITY, MonomialIdeal, lct_monomial


class UnsupportedFamilyError(ValueError):
    """Input is outside the closed-form family catalog."""


@dataclass(frozen=True)
class Diagonal:
    """x_1^{a_1} + ... + x_n^{a_n}."""

    exponents: tuple

    def __post_init__(self):
        exps = tuple(int(a) for a in self.exponents)
        if not exps or any(a < 1 for a in exps):
            raise ValueError("diagonal exponents must be >= 1")
        object.__setattr__(self, "exponents", exps)


@dataclass(frozen=True)
class HomogeneousIsolated:
    """Homogeneous of degree d in n variables, isolated singularity at 0."""

    n: int
    d: int

    def __post_init__(self):
        if self.n < 1 or self.d < 1:
            raise ValueError("need n >= 1 and d >= 1")


@dataclass(frozen=True)
class SmoothSubscheme:
    """Ideal of a nonsingular subscheme of pure codimension r."""

    codim: int

    def __post_init__(self):
        if self.codim < 1:
            raise ValueError("codimension must be >= 1")


@dataclass(frozen=True)
class Monomial:
    ideal: MonomialIdeal


@dataclass(frozen=True)
class Node:
    """Plane curve with a node."""


@dataclass(frozen=True)
class ThresholdResult:
    """Exact value or certified enclosing interval for a threshold."""

    lo: Fraction
    hi: Fraction
    certified: bool
    method: str  # 'closed-form' | 'LP' | 'nu-limit' | 'asymptotic'

    def __post_init__(self):
        if self.lo > self.hi:
            raise ValueError(f"inverted interval [{self.lo}, {self.hi}]")

    @staticmethod
    def exact(value, method: str = "closed-form") -> "ThresholdResult":
        value = Fraction(value)
        return ThresholdResult(value, value, True, method)

    @property
    def is_exact(self) -> bool:
        return self.lo == self.hi

    @property
    def value(self) -> Fraction:
        if not self.is_exact:
            raise ValueError("interval result has no single value")
        return self.lo

    def contains(self, value) -> bool:
        return self.lo <= value <= self.hi

    def width(self) -> Fraction:
        return self.hi - self.lo


def lct_closed_form(family) -> ThresholdResult:
    """Closed-form log canonical threshold at the origin for a catalog family."""
    if isinstance(family, Diagonal):
        total = sum(Fraction(1, a) for a in family.exponents)
        return ThresholdResult.exact(min(Fraction(1), total))
    if isinstance(family, HomogeneousIsolated):
        return ThresholdResult.exact(min(Fraction(1), Fraction(family.n, family.d)))
    if isinstance(family, SmoothSubscheme):
        return ThresholdResult.exact(Fraction(family.codim))
    if isinstance(family, Node):
        return ThresholdResult.exact(Fraction(1))
    if isinstance(family, Monomial):
        value = lct_monomial(family.ideal)
        if value == INFINITY:
            raise ValueError("improper monomial ideal has infinite threshold")
        return ThresholdResult(value, value, True, "LP")
    raise UnsupportedFamilyError(f"no closed form for {family!r}")


def truncation_bound(lct_f: Fraction, n: int, N: int) -> tuple:
    """Certified range of the threshold of any polynomial sharing a truncation.

    Two polynomials agreeing up to degree N have thresholds within n/(N+1)
    of each other, so the result is [max(0, lct - n/(N+1)), lct + n/(N+1)].
    """
    if n < 1 or N < 1:
        raise ValueError("need n >= 1 and N >= 1")
    lct_f = Fraction(lct_f)
    if not 0 <= lct_f <= n:
        raise ValueError(f"threshold {lct_f} outside [0, {n}]")
    slack = Fraction(n, N + 1)
    return (max(Fraction(0), lct_f - slack), lct_f + slack)


def lct_general_combination(ideal_lct) -> Fraction:
    """Threshold of a general linear combination of the ideal's generators.

    Valid for generic coefficients only: specific coefficient choices can have
    a smaller threshold, and genericity is not decidable from the input.
    """
    if ideal_lct == INFINITY:
        return Fraction(1)
    return min(Fraction(ideal_lct), Fraction(1))
