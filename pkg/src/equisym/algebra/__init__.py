"""Exact-arithmetic kernel: cyclotomic numbers, polynomials, series, matrices."""

from .cyclotomic import (
    CycField,
    CycNum,
    common_field,
    cyc_inverse,
    cyclo_field,
    cyclotomic_poly,
    euler_phi,
    imag_unit,
    sqrt2,
    sqrt5,
    sqrt_minus3,
)
from .matrix import FMatrix, mat_inverse
from .mpoly import MPoly, mpoly_gcd
from .series import DEFAULT_PRECISION, TruncSeries, series_div
from .upoly import UPoly, roots_in_field, upoly_factor_q

__all__ = [
    "CycField", "CycNum", "common_field", "cyc_inverse", "cyclo_field",
    "cyclotomic_poly", "euler_phi", "imag_unit", "sqrt2", "sqrt5",
    "sqrt_minus3", "FMatrix", "mat_inverse", "MPoly", "mpoly_gcd",
    "DEFAULT_PRECISION", "TruncSeries", "series_div", "UPoly",
    "roots_in_field", "upoly_factor_q",
]
