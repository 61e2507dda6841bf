"""Symbolic equivariant differential-operator families for o(2,n) ⊃ o(2,n−1).

Thin wrapper around the C++ extension module. All computation is exact
(rational arithmetic); coefficients are returned as strings in the spectral
parameter ``L``.
"""

from ._adsfam import (
    asymptotic_coefficients,
    coefficients,
    coincidence_constant,
    family,
    run_suite,
    suite_names,
)

__all__ = [
    "asymptotic_coefficients",
    "coefficients",
    "coincidence_constant",
    "family",
    "run_suite",
    "suite_names",
]
