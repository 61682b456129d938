"""Exact-arithmetic singularity thresholds.

Log canonical thresholds for closed-form families, F-pure thresholds and
nu-sequences in characteristic p, test ideals via Frobenius roots, F-jumping
scans, asymptotic thresholds of graded monomial sequences, and a
reduction-mod-p comparison harness.  All values are exact rationals
(``fractions.Fraction``); no floating point enters any computation.
"""

from thresholds.rings import Ring, Polynomial, parse_polynomial, render_polynomial
from thresholds.newton import MonomialIdeal, NewtonPolyhedron, lct_monomial
from thresholds.lct0 import ThresholdResult

__all__ = [
    "Ring",
    "Polynomial",
    "parse_polynomial",
    "render_polynomial",
    "MonomialIdeal",
    "NewtonPolyhedron",
    "lct_monomial",
    "ThresholdResult",
]

__version__ = "0.1.0"
