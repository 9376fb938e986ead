"""Boys function F(n, z) = int_0^1 exp(-z t^2) t^(2n) dt for real and complex z."""
from .constants import (
    REGION,
    ExpSumTable,
    F0QuadTable,
    RegionParams,
    SeriesCoeffs,
    build_expsum_table,
    build_f0_table,
    build_series_coeffs,
    compute_z_star,
    load_expsum_table,
)
from .errors import BoysError, ConvergenceError, DomainError, OracleError, TableError
from .f0 import (
    F0Result,
    Region,
    arctan_complex,
    f0_eval,
    f0_neg_scaled,
    f0_nonneg,
    fresnel,
    q_eval,
)
from .fntop import fn_top_neg_scaled, fn_top_nonneg, fn_top_real
from .quadrature import QuadRule, build_gauss_legendre
from .real import boys_all_real, f0_real
from .recursion import BoysVector, backward_sweep, boys_all, forward_sweep

__version__ = "0.1.0"

__all__ = [
    "REGION", "ExpSumTable", "F0QuadTable", "RegionParams", "SeriesCoeffs",
    "build_expsum_table", "build_f0_table", "build_series_coeffs", "compute_z_star",
    "load_expsum_table", "BoysError", "ConvergenceError", "DomainError", "OracleError",
    "TableError", "F0Result", "Region", "arctan_complex", "f0_eval", "f0_neg_scaled",
    "f0_nonneg", "fresnel", "q_eval", "fn_top_neg_scaled", "fn_top_nonneg", "fn_top_real",
    "QuadRule", "build_gauss_legendre", "boys_all_real", "f0_real", "BoysVector",
    "backward_sweep", "boys_all", "forward_sweep",
]
