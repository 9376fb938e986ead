"""Full vectors F(0..n_max, z) by upward or downward recursion from one seed.

Upward (|z| >= z*):    F(n) = (n - 1/2)/z F(n-1) - e^{-z}/(2z)
Downward (|z| < z*):   F(n-1) = 2z/(2n-1) F(n) + e^{-z}/(2n-1)

For Re(z) < 0 the same recursions run on e^z F(n, z), with e^{-z} replaced
by 1. The seed is F(0, z) for the upward sweep and F(n_max, z) from the
exponential-sum table for the downward one.
"""
from __future__ import annotations

import cmath
from dataclasses import dataclass
from functools import lru_cache

from .constants import ExpSumTable, compute_z_star
from .errors import DomainError, TableError
from .f0 import _f0_neg_scaled, _f0_nonneg
from .fntop import DEFAULT_TABLE, fn_top_neg_scaled, fn_top_nonneg


@dataclass(frozen=True)
class RecursionCoeffs:
    """a_n = n - 1/2, b_n = 1/(2n - 1), c_n = 2/(2n - 1) for n = 1..n_max (index 0 unused)."""

    n_max: int
    a: tuple[float, ...]
    b: tuple[float, ...]
    c: tuple[float, ...]


@lru_cache(maxsize=None)
def recursion_coeffs(n_max: int) -> RecursionCoeffs:
    a = (0.0,) + tuple(n - 0.5 for n in range(1, n_max + 1))
    b = (0.0,) + tuple(1.0 / (2 * n - 1) for n in range(1, n_max + 1))
    c = (0.0,) + tuple(2.0 / (2 * n - 1) for n in range(1, n_max + 1))
    return RecursionCoeffs(n_max, a, b, c)


@dataclass(frozen=True)
class BoysVector:
    values: tuple
    z: complex
    scaled: bool
    n_max: int

    def __getitem__(self, n):
        return self.values[n]

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self):
        return iter(self.values)


def forward_sweep(f0, z, n_max: int, scaled: bool, exp_neg_z=None) -> BoysVector:
    """Fill F(1..n_max) upward from ``f0``.

    ``exp_neg_z`` lets a caller that already has e^{-z} pass it in; it is
    ignored for scaled sweeps.
    """
    if z == 0:
        raise DomainError("upward recursion divides by z; z = 0 must use the downward sweep")
    co = recursion_coeffs(n_max)
    inv_z = 1.0 / z
    if scaled:
        shift = 0.5 * inv_z
    else:
        if exp_neg_z is None:
            exp_neg_z = cmath.exp(-z)
        shift = exp_neg_z * (0.5 * inv_z)
    vals = [f0]
    prev = f0
    for n in range(1, n_max + 1):
        prev = co.a[n] * inv_z * prev - shift
        vals.append(prev)
    return BoysVector(tuple(vals), z, scaled, n_max)


def backward_sweep(f_top, z, n_max: int, scaled: bool, exp_neg_z=None) -> BoysVector:
    """Fill F(n_max-1..0) downward from ``f_top``."""
    co = recursion_coeffs(n_max)
    if scaled:
        shift = 1.0
    else:
        shift = cmath.exp(-z) if exp_neg_z is None else exp_neg_z
    vals = [f_top]
    cur = f_top
    for n in range(n_max, 0, -1):
        cur = co.c[n] * z * cur + co.b[n] * shift
        vals.append(cur)
    vals.reverse()
    return BoysVector(tuple(vals), z, scaled, n_max)


def boys_all(z: complex, n_max: int = 12, table: ExpSumTable | None = None,
             force: str | None = None) -> BoysVector:
    """F(n, z) for n = 0..n_max, or e^z F(n, z) when Re(z) < 0.

    The recursion direction follows |z| >= z*(table.n_max); ``force`` may be
    "forward" or "backward" to override it (used to cross-check the two).
    Asking for fewer orders than the table provides truncates the vector.
    """
    table = DEFAULT_TABLE if table is None else table
    if n_max > table.n_max:
        raise TableError(f"no approximation table for n_max={n_max} (table has {table.n_max})")
    if n_max < 0:
        raise DomainError("n_max must be >= 0")
    z = complex(z)
    top = table.n_max
    scaled = z.real < 0
    if force is None:
        forward = abs(z) >= compute_z_star(top)
    elif force in ("forward", "backward"):
        forward = force == "forward"
    else:
        raise ValueError(f"force must be 'forward', 'backward' or None, got {force!r}")

    if forward:
        if scaled:
            seed, _ = _f0_neg_scaled(z)
            vec = forward_sweep(seed, z, top, True)
        else:
            seed, _, emz = _f0_nonneg(z)
            vec = forward_sweep(seed, z, top, False, emz)
    elif scaled:
        vec = backward_sweep(fn_top_neg_scaled(z, table), z, top, True)
    else:
        vec = backward_sweep(fn_top_nonneg(z, table), z, top, False)

    if n_max < top:
        vec = BoysVector(vec.values[:n_max + 1], z, scaled, n_max)
    return vec
