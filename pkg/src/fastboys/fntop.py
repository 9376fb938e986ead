"""Top-order value F(n_max, z) from an exponential-sum table.

With (1 - s)^(n - 1/2) ~ sum_m w_m e^{eta_m s} on [0, 1], the defining
integral reduces to one q-function per term:

    F(n, z)     ~ 1/2 sum_m w_m e^{eta_m} q(z + eta_m)      Re(z) >= 0
    e^z F(n, z) ~ 1/2 sum_m w_m q(-(z + eta_m))             Re(z) < 0

where q(xi) = (1 - e^{-xi}) / xi. The weights of the shipped table span 25
orders of magnitude, so the terms are accumulated with ``math.fsum``.
"""
from __future__ import annotations

import math

from .constants import ExpSumTable, build_expsum_table
from .errors import DomainError
from .f0 import q_eval, q_real

DEFAULT_TABLE = build_expsum_table(12)


def _half_fsum(terms) -> complex:
    terms = list(terms)
    return complex(0.5 * math.fsum(t.real for t in terms),
                   0.5 * math.fsum(t.imag for t in terms))


def fn_top_nonneg(z: complex, table: ExpSumTable = DEFAULT_TABLE) -> complex:
    """F(table.n_max, z) for Re(z) >= 0."""
    z = complex(z)
    if z.real < 0:
        raise DomainError("fn_top_nonneg needs Re(z) >= 0; use fn_top_neg_scaled")
    return _half_fsum(we * q_eval(z + eta) for eta, we in zip(table.exponents, table.exp_weights))


def fn_top_neg_scaled(z: complex, table: ExpSumTable = DEFAULT_TABLE) -> complex:
    """e^z F(table.n_max, z) for Re(z) < 0."""
    z = complex(z)
    if not z.real < 0:
        raise DomainError("fn_top_neg_scaled needs Re(z) < 0; use fn_top_nonneg")
    return _half_fsum(w * q_eval(-(z + eta)) for eta, w in zip(table.exponents, table.weights))


def fn_top_real(x: float, table: ExpSumTable = DEFAULT_TABLE) -> float:
    """F(table.n_max, x) for real x >= 0.

    Each conjugate pair of terms contributes 2 Re(w e^eta q(x + eta)), so
    only one member of the pair is evaluated; real terms use real arithmetic.
    """
    x = float(x)
    if x < 0:
        raise DomainError("fn_top_real needs x >= 0; negative x goes through fn_top_neg_scaled")
    eta, we = table.exponents, table.exp_weights
    terms = [2.0 * (we[i] * q_eval(x + eta[i])).real for i in table.pair_terms]
    terms += [we[i].real * q_real(x + eta[i].real) for i in table.real_terms]
    terms += [(we[i] * q_eval(x + eta[i])).real for i in table.unpaired_terms]
    return 0.5 * math.fsum(terms)
