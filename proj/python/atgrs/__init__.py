"""Exact finite-field toolkit for arbitrary-twist generalized Reed-Solomon codes."""

from ._core import (
    CodeSpec,
    Error,
    Field,
    bordered_vandermonde_ratio,
    classify_novelty,
    classify_novelty_eta,
    criterion_det,
    det,
    encode,
    gaussian_inverse,
    generator_matrix,
    is_mds,
    make_field,
    parity_check_zhang,
    poly_derivative,
    poly_eval,
    poly_from_roots,
    search,
    special_case_mds,
    toeplitz_inverse_reversed,
    toeplitz_inverse_unit,
    toeplitz_lower,
    u_weights,
    vandermonde,
    vandermonde_inverse_explicit,
    vandermonde_inverse_factored,
    wseq_direct,
    wseq_window,
    zhang_generator,
)
from ._core import __version__

__all__ = [
    "CodeSpec",
    "Error",
    "Field",
    "bordered_vandermonde_ratio",
    "classify_novelty",
    "classify_novelty_eta",
    "criterion_det",
    "det",
    "encode",
    "gaussian_inverse",
    "generator_matrix",
    "is_mds",
    "make_field",
    "parity_check_zhang",
    "poly_derivative",
    "poly_eval",
    "poly_from_roots",
    "search",
    "special_case_mds",
    "toeplitz_inverse_reversed",
    "toeplitz_inverse_unit",
    "toeplitz_lower",
    "u_weights",
    "vandermonde",
    "vandermonde_inverse_explicit",
    "vandermonde_inverse_factored",
    "wseq_direct",
    "wseq_window",
    "zhang_generator",
    "__version__",
]
