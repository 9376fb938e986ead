"""Brute-force reference values for the Boys function and related integrals.

Everything here integrates the defining integrals directly with composite
Gauss-Legendre rules carried out in extended (x87 80-bit) precision. Nothing
is shared with the fast evaluators: the oracle has its own node generator,
never calls a series, and never touches the tabulated constants. It is slow
on purpose.

A value is returned only after a panel-doubling refinement changes it by
less than the configured tolerance.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, replace
from functools import lru_cache

import numpy as np

from .errors import DomainError, OracleError

_LD = np.longdouble
_CLD = np.clongdouble
_PI = np.longdouble("3.14159265358979323846264338327950288")


@dataclass(frozen=True)
class OracleConfig:
    panels: int = 64
    nodes_per_panel: int = 32
    target_abs_err: float = 1e-15
    # successive refinements must agree to this (absolute, for |z| <= 500)
    refine_tol: float = 1e-16
    max_doublings: int = 4

    def panels_for(self, z: complex) -> int:
        return max(self.panels, math.ceil(self.panels * (1.0 + math.sqrt(abs(z)) / 10.0)))

    def tolerance_for(self, z: complex, magnitude: float) -> float:
        # the integrand phase is only known to |z| * eps_ld, so relax past |z| = 500
        return self.refine_tol * max(1.0, abs(z) / 500.0) * max(1.0, magnitude)


DEFAULT_CONFIG = OracleConfig()


@lru_cache(maxsize=None)
def _legendre_rule_ld(m: int) -> tuple[np.ndarray, np.ndarray]:
    """m-point Gauss-Legendre rule on [-1, 1] polished in extended precision."""
    x0, _ = np.polynomial.legendre.leggauss(m)
    x = x0.astype(_LD)
    for _ in range(6):
        p_prev = np.ones_like(x)
        p = x.copy()
        for k in range(2, m + 1):
            p_prev, p = p, ((2 * k - 1) * x * p - (k - 1) * p_prev) / k
        dp = m * (x * p - p_prev) / (x * x - 1)
        dx = p / dp
        x = x - dx
        if np.max(np.abs(dx)) < 4 * np.finfo(_LD).eps:
            break
    p_prev = np.ones_like(x)
    p = x.copy()
    for k in range(2, m + 1):
        p_prev, p = p, ((2 * k - 1) * x * p - (k - 1) * p_prev) / k
    dp = m * (x * p - p_prev) / (x * x - 1)
    w = 2 / ((1 - x * x) * dp * dp)
    return x, w


def _composite_nodes(a, b, panels: int, nodes: int, grading=None):
    x, w = _legendre_rule_ld(nodes)
    if grading is None:
        edges = np.linspace(_LD(a), _LD(b), panels + 1, dtype=_LD)
    else:
        uniform = np.linspace(_LD(grading[-1]), _LD(b), panels + 1, dtype=_LD)
        edges = np.concatenate([np.asarray([a] + list(grading[:-1]), dtype=_LD), uniform])
    half = (edges[1:] - edges[:-1]) / 2
    mid = (edges[1:] + edges[:-1]) / 2
    t = (mid[:, None] + half[:, None] * x[None, :]).ravel()
    wt = (half[:, None] * w[None, :]).ravel()
    return t, wt


def _refine(integrate, z, config: OracleConfig, panels: int):
    """Run ``integrate(panels)`` with panel doubling until two results agree."""
    prev = integrate(panels)
    for _ in range(config.max_doublings):
        panels *= 2
        cur = integrate(panels)
        diff = float(np.max(np.abs(cur - prev)))
        mag = float(np.max(np.abs(cur)))
        if diff <= config.tolerance_for(z, mag):
            return cur
        prev = cur
    raise OracleError(f"oracle did not converge for z={z!r} (last change {diff:.3e})")


def _boys_moments(n_max: int, z: complex, scaled: bool, config: OracleConfig) -> np.ndarray:
    zl = _CLD(complex(z))

    def integrate(panels):
        t, wt = _composite_nodes(0, 1, panels, config.nodes_per_panel)
        t2 = t * t
        if scaled:
            base = np.exp(zl * (1 - t2)) * wt
        else:
            base = np.exp(-zl * t2) * wt
        out = np.empty(n_max + 1, dtype=_CLD)
        for n in range(n_max + 1):
            out[n] = np.sum(base)
            base = base * t2
        return out

    return _refine(integrate, z, config, config.panels_for(z))


def oracle_boys_vector(n_max: int, z: complex, scaled: bool = False,
                       config: OracleConfig = DEFAULT_CONFIG) -> list[complex]:
    """Reference values F(n, z) (or e^z F(n, z) when ``scaled``) for n = 0..n_max.

    The scaled form integrates e^{z(1-t^2)} t^{2n}, which never overflows when
    Re(z) < 0. The unscaled form is accepted for any z, but only makes sense
    when e^{-z} is representable.
    """
    if not 0 <= n_max <= 64:
        raise DomainError(f"oracle supports 0 <= n <= 64, got {n_max}")
    if abs(z) > 1e4:
        raise DomainError(f"oracle supports |z| <= 1e4, got |z|={abs(z):.6g}")
    return [complex(v) for v in _boys_moments(n_max, z, scaled, config)]


def oracle_boys(n: int, z: complex, scaled: bool = False,
                config: OracleConfig = DEFAULT_CONFIG) -> complex:
    return oracle_boys_vector(n, z, scaled, config)[n]


def oracle_tail_integral(z: complex, t_hi: float,
                         config: OracleConfig = DEFAULT_CONFIG) -> complex:
    """(1/sqrt(pi)) * integral over [0, t_hi] of e^{-t^2} / (t^2 + z) dt."""
    if z.real < 0:
        raise DomainError("tail integral needs Re(z) >= 0")
    zl = _CLD(complex(z))

    def integrate(panels):
        t, wt = _composite_nodes(0, t_hi, panels, config.nodes_per_panel)
        t2 = t * t
        return np.asarray([np.sum(wt * np.exp(-t2) / (t2 + zl))])

    val = _refine(integrate, z, config, config.panels)[0]
    return complex(val / np.sqrt(_PI))


def oracle_upper_incomplete_gamma(j: int, x: float,
                                  config: OracleConfig = DEFAULT_CONFIG) -> float:
    """Upper incomplete gamma Gamma(j + 1/2, x) by direct quadrature.

    Uses t = x + v^2 so the integrand 2 v (x + v^2)^(j - 1/2) e^{-v^2} is
    smooth even when x is tiny, and truncates at u = v^2 = 60 + 10 j.
    Panels are graded geometrically towards v = 0.
    """
    if not 0 <= j <= 8:
        raise DomainError(f"j must lie in 0..8, got {j}")
    if x <= 0:
        raise DomainError("x must be positive")
    xl = _LD(x)
    v_hi = math.sqrt(60.0 + 10.0 * j)
    grading = [10.0 ** k for k in range(-12, 1)]

    def integrate(panels):
        v, wt = _composite_nodes(0, v_hi, panels, config.nodes_per_panel, grading)
        v2 = v * v
        f = 2 * v * (xl + v2) ** (_LD(j) - _LD(0.5)) * np.exp(-v2)
        return np.asarray([np.sum(f * wt)])

    cfg = replace(config, refine_tol=5e-18)
    val = _refine(integrate, 0.0, cfg, config.panels)[0]
    return float(val * np.exp(-xl))


def oracle_fresnel(y: float, config: OracleConfig = DEFAULT_CONFIG) -> tuple[float, float]:
    """C(y), S(y) by direct quadrature of cos(pi t^2/2) and sin(pi t^2/2)."""
    sign = -1.0 if y < 0 else 1.0
    y = abs(y)
    if y == 0:
        return 0.0, 0.0
    z = 0.5j * math.pi * y * y

    def integrate(panels):
        t, wt = _composite_nodes(0, y, panels, config.nodes_per_panel)
        arg = _PI / 2 * t * t
        return np.asarray([np.sum(wt * np.cos(arg)), np.sum(wt * np.sin(arg))])

    c, s = _refine(integrate, z, config, config.panels_for(z))
    return sign * float(c), sign * float(s)
