"""Exact arithmetic: Laurent polynomials, rational functions, series, matrices."""

from .matrix import Matrix, NotSquare, column_space_basis, det_cofactor, matrix_det, matrix_kernel, matrix_rank
from .multipoly import (RING_VARS, MultiPoly, SubstitutionPole, SymtabMismatch, from_unipoly, poly_arith,
                        poly_partial, poly_substitute, ratfunc_from_laurent, to_unipoly)
from .series import SeriesDomainError, TruncSeries, series_exp, series_inverse, series_log
from .unipoly import RatFunc, UniPoly, as_ratfunc, unipoly_gcd


def ratfunc_reduce(num: UniPoly, den: UniPoly) -> RatFunc:
    """num/den reduced by their gcd, denominator made monic."""
    return RatFunc(num, den)


__all__ = [
    "Matrix", "NotSquare", "column_space_basis", "det_cofactor", "matrix_det", "matrix_kernel",
    "matrix_rank", "RING_VARS", "MultiPoly", "SubstitutionPole", "SymtabMismatch", "from_unipoly",
    "poly_arith", "poly_partial", "poly_substitute", "ratfunc_from_laurent", "to_unipoly",
    "SeriesDomainError", "TruncSeries", "series_exp", "series_inverse", "series_log", "RatFunc",
    "UniPoly", "as_ratfunc", "unipoly_gcd", "ratfunc_reduce",
]
