"""Exact local computer algebra for the kernels of monomial-curve maps.

Thin string-based bindings over the C++ core: polynomials go in and come out
as text in the canonical form of the library ("3*y^3 - 4*x*y*z + x^4");
fixture names f1..f4, g1, g2, h1..h3 resolve anywhere a polynomial is
expected.
"""

from ._core import (
    MohpolyError,
    artinian_length,
    complete_tail,
    evaluate,
    factorizations,
    find_min_sigma_order,
    frobenius,
    is_standard_basis,
    lower_bound,
    lucas_binomial,
    moh_generators,
    mora_nf,
    sally_check,
    sigma_split,
    spoly,
    standard_basis,
    verify,
    vr_upper_bound,
    w_basis,
)

__all__ = [
    "MohpolyError",
    "artinian_length",
    "complete_tail",
    "evaluate",
    "factorizations",
    "find_min_sigma_order",
    "frobenius",
    "is_standard_basis",
    "lower_bound",
    "lucas_binomial",
    "moh_generators",
    "mora_nf",
    "sally_check",
    "sigma_split",
    "spoly",
    "standard_basis",
    "verify",
    "vr_upper_bound",
    "w_basis",
]
