"""ringlab: exact structural analysis of finite-dimensional unital algebras.

Decides, over prime fields and the rationals with no floating point:
centers and central essentiality, Jacobson radicals with validated
certificates, maximal/minimal one-sided ideals, socles, essential and
closed submodules, intersection complements, quasi-invariance, and
field-independent polynomial witness certificates.
"""

from .algebra import (
    Algebra,
    MatrixRep,
    QuotientMap,
    TruncatedExtension,
    build_algebra,
    from_matrix_basis,
    quotient_algebra,
    truncated_polynomial_algebra,
)
from .central import CEReport, center, check_centrally_essential, is_central
from .fields import GF2, GF3, GF5, QQ, PrimeField, RationalField, Scalar
from .linalg import Matrix, Subspace, kernel, rref, subspace_intersect, subspace_sum
from . import errors

__all__ = [
    "Algebra",
    "MatrixRep",
    "QuotientMap",
    "TruncatedExtension",
    "build_algebra",
    "from_matrix_basis",
    "quotient_algebra",
    "truncated_polynomial_algebra",
    "CEReport",
    "center",
    "check_centrally_essential",
    "is_central",
    "GF2",
    "GF3",
    "GF5",
    "QQ",
    "PrimeField",
    "RationalField",
    "Scalar",
    "Matrix",
    "Subspace",
    "kernel",
    "rref",
    "subspace_intersect",
    "subspace_sum",
    "errors",
]
