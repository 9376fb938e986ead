"""F(0, z) for complex z.

For Re(z) >= 0 the value returned is F(0, z); for Re(z) < 0 it is the
bounded quantity e^z F(0, z). Four evaluation regions:

* |z| <= r0: ten-term Taylor series.
* r0 < |z| < 100, Re(z) >= 0: 22-term pole sum, one exponential per call.
* r0 < |z| < 100, Re(z) < 0: Gauss-Legendre on [0, T] of e^z q(t^2 + z) plus
  a closed-form arctangent tail, with T switched from t_max to t_max,1 near
  z = -t_max^2.
* |z| >= 100: seven-term large-argument series with incomplete-gamma
  corrected coefficients.
"""
from __future__ import annotations

import cmath
import enum
import math
from dataclasses import dataclass

from .constants import REGION, build_f0_table, build_rules, build_series_coeffs
from .errors import DomainError

SQRT_PI = math.sqrt(math.pi)
GUARD_RADIUS = REGION.guard_radius

_F0_TABLE = build_f0_table()
_POLES = _F0_TABLE.poles
_POLE_WEIGHTS = _F0_TABLE.weights

# sum_{j<10} (-z)^j / (j! (2j + 1)), highest power first for Horner
_F0_TAYLOR = tuple(reversed([(-1) ** j / (math.factorial(j) * (2 * j + 1))
                             for j in range(REGION.taylor_terms_f0)]))
# q(xi) = sum_{k<=14} (-xi)^k / (k + 1)!
_Q_TAYLOR = tuple(reversed([1.0 / math.factorial(k + 1)
                            for k in range(REGION.q_taylor_degree + 1)]))

_SERIES = build_series_coeffs(REGION.t_max, REGION.J)
_SERIES_C = tuple(reversed(_SERIES.coeffs))


class _GLTerms:
    """A quadrature rule pre-digested for the scaled branch."""

    def __init__(self, rule, t_hi: float):
        self.t_hi = t_hi
        self.rule = rule
        self.t2 = tuple(t * t for t in rule.nodes)
        self.exp_neg_t2 = tuple(math.exp(-x) for x in self.t2)
        self.weights = tuple(w / SQRT_PI for w in rule.weights)


_RULE, _RULE_SHIFTED = build_rules(REGION)
_GL = _GLTerms(_RULE, REGION.t_max)
_GL_SHIFTED = _GLTerms(_RULE_SHIFTED, REGION.t_max1)


class Region(enum.Enum):
    TAYLOR = "Taylor"
    POLE_SUM = "PoleSum"
    GL_ARCTAN = "GLArctan"
    GL_ARCTAN_SHIFTED = "GLArctanShifted"
    LARGE_SERIES = "LargeSeries"
    LARGE_SERIES_SCALED = "LargeSeriesScaled"


@dataclass(frozen=True)
class F0Result:
    value: complex
    scaled: bool
    region: Region


def _horner(coeffs, x):
    acc = 0.0
    for c in coeffs:
        acc = acc * x + c
    return acc


def q_taylor(xi: complex) -> complex:
    return _horner(_Q_TAYLOR, -xi)


def q_eval(xi: complex) -> complex:
    """q(xi) = (1 - e^{-xi}) / xi, with a Taylor polynomial for |xi| <= 0.5."""
    if abs(xi) <= GUARD_RADIUS:
        return complex(q_taylor(xi))
    return (1.0 - cmath.exp(-xi)) / xi


def q_real(x: float) -> float:
    if abs(x) <= GUARD_RADIUS:
        return _horner(_Q_TAYLOR, -x)
    return -math.expm1(-x) / x


def f0_taylor(z: complex) -> complex:
    return _horner(_F0_TAYLOR, z)


def arctan_complex(w: complex) -> complex:
    """Arctan(w) = (i/2) log((1 - i w) / (1 + i w)), principal branch."""
    if w == 1j or w == -1j:
        raise DomainError(f"arctangent has a pole at w = {w}")
    return 0.5j * cmath.log((1.0 - 1j * w) / (1.0 + 1j * w))


def _large_series_sum(z: complex) -> complex:
    return _horner(_SERIES_C, -1.0 / z)


def _f0_nonneg(z: complex):
    """F(0, z) for Re(z) >= 0 as (value, region, e^{-z} or None)."""
    az = abs(z)
    if az <= REGION.r0:
        return complex(f0_taylor(z)), Region.TAYLOR, None
    emz = cmath.exp(-z)
    sz = cmath.sqrt(z)
    if az >= REGION.big_z:
        val = 0.5 * SQRT_PI / sz - emz / (2.0 * SQRT_PI * z) * _large_series_sum(z)
        return val, Region.LARGE_SERIES, emz
    acc = 0j
    for eta, v in zip(_POLES, _POLE_WEIGHTS):
        acc += v / (eta + z)
    return 0.5 * SQRT_PI / sz - 0.5 * emz * acc, Region.POLE_SUM, emz


def _f0_neg_scaled(z: complex):
    """e^z F(0, z) for Re(z) < 0 as (value, region)."""
    az = abs(z)
    ez = cmath.exp(z)
    if az <= REGION.r0:
        return ez * f0_taylor(z), Region.TAYLOR
    sz = cmath.sqrt(z)
    if az >= REGION.big_z:
        val = ez * SQRT_PI / (2.0 * sz) - _large_series_sum(z) / (2.0 * SQRT_PI * z)
        return val, Region.LARGE_SERIES_SCALED
    if abs(z + REGION.t_max_sq) <= REGION.switch_radius:
        gl, region = _GL_SHIFTED, Region.GL_ARCTAN_SHIFTED
    else:
        gl, region = _GL, Region.GL_ARCTAN
    acc = 0j
    for t2, et2, w in zip(gl.t2, gl.exp_neg_t2, gl.weights):
        xi = t2 + z
        if abs(xi) <= GUARD_RADIUS:
            acc += w * ez * q_taylor(xi)
        else:
            acc += w * (ez - et2) / xi
    tail = ez / (SQRT_PI * sz) * arctan_complex(sz / gl.t_hi)
    return acc + tail, region


def f0_nonneg(z: complex) -> complex:
    """F(0, z) for Re(z) >= 0, absolute error below 1e-12."""
    z = complex(z)
    if z.real < 0:
        raise DomainError("f0_nonneg needs Re(z) >= 0; use f0_neg_scaled for Re(z) < 0")
    return _f0_nonneg(z)[0]


def f0_neg_scaled(z: complex) -> complex:
    """e^z F(0, z) for Re(z) < 0, absolute error below 1e-12."""
    z = complex(z)
    if not z.real < 0:
        raise DomainError("f0_neg_scaled needs Re(z) < 0; use f0_nonneg for Re(z) >= 0")
    return _f0_neg_scaled(z)[0]


def f0_eval(z: complex) -> F0Result:
    """Dispatch on the sign of Re(z); the result says which quantity it holds."""
    z = complex(z)
    if z.real < 0:
        val, region = _f0_neg_scaled(z)
        return F0Result(val, True, region)
    val, region, _ = _f0_nonneg(z)
    return F0Result(val, False, region)


def fresnel(y: float) -> tuple[float, float]:
    """Fresnel integrals (C(y), S(y)) from C - iS = y F(0, i pi y^2 / 2).

    Odd in y.
    """
    y = float(y)
    if y < 0:
        c, s = fresnel(-y)
        return -c, -s
    if y == 0:
        return 0.0, 0.0
    w = y * f0_nonneg(complex(0.0, 0.5 * math.pi * y * y))
    return w.real, -w.imag
