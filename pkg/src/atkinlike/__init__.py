"""Exact rational computations with Atkin-like orthogonal polynomials, extremal
quasimodular forms, generalized Faber polynomials and the Atkin inner product."""

from .atkin import adjoint_poly, atkin_poly, atkin_poly_closed, atkin_poly_recursive
from .congruence import supersingular_poly, thm24_check
from .errors import AtkinError
from .extremal import G, extremal_form, normalizing_factor
from .faber import expansion_coeffs, faber_poly, weight_decompose
from .functional import apply_functional, inner_product, moments
from .modforms import E2, E4, E6, delta, j_invariant
from .rogers import atkin_cf
from .series import BiSeries, Poly, QSeries

__version__ = "0.1.0"

__all__ = [
    "AtkinError",
    "BiSeries",
    "E2",
    "E4",
    "E6",
    "G",
    "Poly",
    "QSeries",
    "adjoint_poly",
    "apply_functional",
    "atkin_cf",
    "atkin_poly",
    "atkin_poly_closed",
    "atkin_poly_recursive",
    "delta",
    "expansion_coeffs",
    "extremal_form",
    "faber_poly",
    "inner_product",
    "j_invariant",
    "moments",
    "normalizing_factor",
    "supersingular_poly",
    "thm24_check",
    "weight_decompose",
]
