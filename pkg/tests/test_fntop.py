import cmath
import math
import random

import numpy as np
import pytest
from hypothesis import given, strategies as st

from fastboys import DomainError, fn_top_neg_scaled, fn_top_nonneg, fn_top_real
from fastboys.fntop import DEFAULT_TABLE as T12
from fastboys.oracle import oracle_boys

ETA_3 = T12.exponents[2]
ETA_12 = T12.exponents[11].real


def unguarded(z: complex) -> complex:
    """Same sums with the plain (1 - e^{-xi}) / xi everywhere."""
    z = complex(z)
    if z.real >= 0:
        terms = [we * (1 - cmath.exp(-(z + e))) / (z + e) for e, we in zip(T12.exponents, T12.exp_weights)]
    else:
        terms = [w * (cmath.exp(z + e) - 1) / (z + e) for e, w in zip(T12.exponents, T12.weights)]
    return 0.5 * complex(math.fsum(t.real for t in terms), math.fsum(t.imag for t in terms))


def sample(count, left, seed):
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        z = complex(rng.uniform(-50, 50), rng.uniform(-50, 50))
        if (z.real < 0) == left:
            out.append(z)
    return out


class TestNonneg:
    def test_at_zero(self):
        assert abs(fn_top_nonneg(0) - 0.04) <= 2.5e-14

    def test_at_ten(self):
        assert abs(fn_top_nonneg(10) - oracle_boys(12, 10)) <= 5e-13

    def test_near_table_pole(self):
        z = complex(0.571, -13.279)
        assert abs(z + ETA_3) < 0.5
        v = fn_top_nonneg(z)
        assert math.isfinite(abs(v))
        assert abs(v - oracle_boys(12, z)) <= 5e-13

    def test_sampled(self):
        for z in sample(500, False, 21):
            assert abs(fn_top_nonneg(z) - oracle_boys(12, z)) <= 5e-13, z

    def test_contract(self):
        with pytest.raises(DomainError):
            fn_top_nonneg(-0.5)


class TestScaled:
    def test_continuity_at_zero(self):
        assert abs(fn_top_neg_scaled(-1e-12) - 0.04) <= 5e-13

    def test_real_negative(self):
        assert abs(fn_top_neg_scaled(-20) - oracle_boys(12, -20, True)) <= 5e-13

    def test_at_real_exponent(self):
        # z = eta_12; the removable pole of this term sits at -eta_12 > 0
        z = complex(-3.2424239255921954)
        assert z.real == ETA_12
        v = fn_top_neg_scaled(z)
        assert math.isfinite(abs(v))
        assert abs(v - oracle_boys(12, z, True)) <= 5e-13

    def test_sampled(self):
        for z in sample(500, True, 22):
            assert abs(fn_top_neg_scaled(z) - oracle_boys(12, z, True)) <= 5e-13, z

    def test_contract(self):
        with pytest.raises(DomainError):
            fn_top_neg_scaled(0.0)


@pytest.mark.parametrize("m", range(13))
def test_guard_seam(m):
    eta = T12.exponents[m]
    for k in range(12):
        z = -eta + 0.5 * cmath.exp(2j * math.pi * (k + 0.5) / 12)
        guarded = fn_top_nonneg(z) if z.real >= 0 else fn_top_neg_scaled(z)
        assert abs(guarded - unguarded(z)) <= 1e-14


class TestReal:
    def test_at_zero(self):
        assert abs(fn_top_real(0.0) - 0.04) <= 2.5e-14

    def test_real_pole(self):
        x = 3.2424239255921954
        assert abs(fn_top_real(x) - oracle_boys(12, x).real) <= 5e-13

    @pytest.mark.parametrize("x", [0.0, 0.25, 1.0, 3.2424239255921954, 4.5, 17.0, 60.0])
    def test_matches_complex_path(self, x):
        assert abs(fn_top_real(x) - fn_top_nonneg(complex(x)).real) <= 1e-15

    def test_monotone_and_bounded(self):
        vals = [fn_top_real(x) for x in np.linspace(0.0, 60.0, 601)]
        assert all(0 < v <= 0.04 + 2.5e-14 for v in vals)
        assert all(b < a for a, b in zip(vals, vals[1:]))

    def test_contract(self):
        with pytest.raises(DomainError):
            fn_top_real(-1.0)


finite = st.floats(-60, 60, allow_nan=False)


@given(finite, finite)
def test_conjugate_symmetry(a, b):
    z = complex(a, b)
    f = fn_top_nonneg if a >= 0 else fn_top_neg_scaled
    assert abs(f(z.conjugate()) - f(z).conjugate()) <= 1e-15


@given(st.floats(-60, 60, allow_nan=False))
def test_real_axis_is_real(x):
    f = fn_top_nonneg if x >= 0 else fn_top_neg_scaled
    assert abs(f(complex(x)).imag) <= 1e-15
