"""Gauss-Legendre rules by Newton iteration on the Legendre polynomial roots."""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import ConvergenceError, DomainError


@dataclass(frozen=True)
class QuadRule:
    nodes: tuple[float, ...]
    weights: tuple[float, ...]
    interval: tuple[float, float]

    def __len__(self) -> int:
        return len(self.nodes)

    def integrate(self, f) -> float:
        """Apply the rule to a scalar callable (compensated sum)."""
        return math.fsum(w * f(t) for t, w in zip(self.nodes, self.weights))


def _legendre_and_derivative(n: int, x: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    p0 = np.ones_like(x)
    p1 = x.copy()
    for k in range(2, n + 1):
        p0, p1 = p1, ((2 * k - 1) * x * p1 - (k - 1) * p0) / k
    dp = n * (x * p1 - p0) / (x * x - 1)
    return p1, dp


def build_gauss_legendre(M: int, a: float = -1.0, b: float = 1.0,
                         tol: float = 1e-15, max_iter: int = 100) -> QuadRule:
    """M-point Gauss-Legendre rule mapped affinely onto (a, b).

    Roots of P_M are found by Newton's method from the Chebyshev-angle
    guesses cos(pi (k - 1/4) / (M + 1/2)). Only the positive half is iterated;
    the negative half is its mirror image, which keeps the rule exactly
    symmetric.
    """
    if M < 1:
        raise DomainError(f"need M >= 1, got {M}")
    if not a < b:
        raise DomainError(f"need a < b, got ({a}, {b})")
    if M == 1:
        return QuadRule((0.5 * (a + b),), (b - a,), (a, b))

    half = (M + 1) // 2
    k = np.arange(1, half + 1)
    x = np.cos(np.pi * (k - 0.25) / (M + 0.5))
    for _ in range(max_iter):
        p, dp = _legendre_and_derivative(M, x)
        dx = p / dp
        x = x - dx
        if np.max(np.abs(dx)) <= tol:
            break
    else:
        raise ConvergenceError(f"Legendre root iteration did not converge for M={M}")
    if M % 2:
        x[-1] = 0.0
    _, dp = _legendre_and_derivative(M, x)
    w = 2.0 / ((1.0 - x * x) * dp * dp)

    # ascending order: mirrored negative roots first
    xs = np.concatenate([-x, x[::-1][M % 2:]])
    ws = np.concatenate([w, w[::-1][M % 2:]])
    c, h = 0.5 * (a + b), 0.5 * (b - a)
    return QuadRule(tuple(float(v) for v in c + h * xs),
                    tuple(float(v) for v in h * ws), (a, b))
