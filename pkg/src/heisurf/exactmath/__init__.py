"""Exact scalars and dense linear algebra."""

from .matrix import (ExactMatrix, det_bareiss, det_cofactor, inverse, minors, mul,
                     nullspace, rank, rref, submatrix, transpose)
from .scalars import (QQ, Cyclotomic, CyclotomicField, PrimeField, PrimeFieldElement,
                      RationalField, cyclo_reduce, cyclotomic_polynomial, euler_phi,
                      field_from_spec, is_prime)

__all__ = [
    "ExactMatrix", "det_bareiss", "det_cofactor", "inverse", "minors", "mul", "nullspace",
    "rank", "rref", "submatrix", "transpose", "QQ", "Cyclotomic", "CyclotomicField",
    "PrimeField", "PrimeFieldElement", "RationalField", "cyclo_reduce",
    "cyclotomic_polynomial", "euler_phi", "field_from_spec", "is_prime",
]
