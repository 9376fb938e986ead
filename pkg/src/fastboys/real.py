"""Real-argument fast path, x >= 0, entirely in float arithmetic."""
from __future__ import annotations

import math

from .constants import ExpSumTable, compute_z_star
from .errors import DomainError, TableError
from .f0 import f0_taylor
from .fntop import DEFAULT_TABLE, fn_top_real
from .recursion import recursion_coeffs

# erf(x) reference values from the quadrature oracle: 2 x F(0, x^2) / sqrt(pi)
_ERF_REFERENCE = (
    (0.25, 0.27632639016823696),
    (0.75, 0.7111556336535152),
    (1.0, 0.8427007929497149),
    (2.0, 0.9953222650189528),
    (4.0, 0.9999999845827422),
)


def check_platform_erf(tol: float = 1e-14) -> None:
    """Refuse to run on a math library whose erf is visibly off."""
    for x, ref in _ERF_REFERENCE:
        if abs(math.erf(x) - ref) > tol:
            raise RuntimeError(f"platform erf({x}) = {math.erf(x)!r} differs from {ref!r}")


check_platform_erf()

_HALF_SQRT_PI = 0.5 * math.sqrt(math.pi)
# the shared ten-term Taylor series is good to ~4e-13 at r0 but to ~1e-18 here
REAL_TAYLOR_MAX = 0.1


def f0_real(x: float) -> float:
    """F(0, x) = sqrt(pi) erf(sqrt(x)) / (2 sqrt(x)); Taylor series for small x."""
    x = float(x)
    if x < 0:
        raise DomainError("f0_real needs x >= 0; use the complex scaled path for x < 0")
    if x <= REAL_TAYLOR_MAX:
        return f0_taylor(x)
    sx = math.sqrt(x)
    return _HALF_SQRT_PI * math.erf(sx) / sx


def boys_all_real(x: float, n_max: int = 12, table: ExpSumTable = DEFAULT_TABLE) -> list[float]:
    """[F(0, x), ..., F(n_max, x)] for real x >= 0."""
    x = float(x)
    if x < 0:
        raise DomainError("boys_all_real needs x >= 0; use boys_all for negative arguments")
    if n_max > table.n_max:
        raise TableError(f"no approximation table for n_max={n_max} (table has {table.n_max})")
    top = table.n_max
    co = recursion_coeffs(top)
    emx = math.exp(-x)
    if x >= compute_z_star(top):
        inv_x = 1.0 / x
        shift = 0.5 * emx * inv_x
        prev = f0_real(x)
        vals = [prev]
        for n in range(1, top + 1):
            prev = co.a[n] * inv_x * prev - shift
            vals.append(prev)
    else:
        cur = fn_top_real(x, table)
        vals = [cur]
        for n in range(top, 0, -1):
            cur = co.c[n] * x * cur + co.b[n] * emx
            vals.append(cur)
        vals.reverse()
    return vals[:n_max + 1]
