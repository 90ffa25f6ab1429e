"""Exact computer algebra for the algebra generated by odd power sums."""

from ._core import (
    Decomposition,
    Poly,
    ProperProduct,
    basis,
    complete_h,
    decompose,
    delta,
    dim,
    dim_kernel,
    elementary,
    is_member,
    is_symmetric,
    monomial_sym,
    parse,
    power_sum,
    repr_in_power_sums,
    run_suite,
    schur,
)

__all__ = [
    "Decomposition",
    "Poly",
    "ProperProduct",
    "basis",
    "complete_h",
    "decompose",
    "delta",
    "dim",
    "dim_kernel",
    "elementary",
    "is_member",
    "is_symmetric",
    "monomial_sym",
    "parse",
    "power_sum",
    "repr_in_power_sums",
    "run_suite",
    "schur",
]
