"""Exact scalars, polynomials and matrices over Q and Q(i)."""
from .canonical import (characteristic_polynomial, companion_matrix, jordan_block,
                        minimal_polynomial, realified_jordan, realify)
from .matrix import Matrix, SingularMatrixError, det, inverse, kernel, rank, solve
from .poly import (Polynomial, binomial_power_linear, factor_irreducible, is_irreducible,
                   poly_gcd, poly_lcm)
from .scalar import (FIELDS, Q, QI, GaussianRational, Scalar, field_of, join_fields,
                     parse_scalar, scalar_key, to_field)
from .smith import smith_form_poly

__all__ = [
    "FIELDS", "Q", "QI", "GaussianRational", "Matrix", "Polynomial", "Scalar",
    "SingularMatrixError", "binomial_power_linear", "characteristic_polynomial",
    "companion_matrix", "det", "factor_irreducible", "field_of", "inverse",
    "is_irreducible", "jordan_block", "join_fields", "kernel", "minimal_polynomial",
    "parse_scalar", "poly_gcd", "poly_lcm", "rank", "realified_jordan", "realify",
    "scalar_key", "smith_form_poly", "solve", "to_field",
]
