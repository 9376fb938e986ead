import cmath
import math

import mpmath
import pytest
from hypothesis import given, settings, strategies as st

from fastboys import REGION, DomainError, Region, arctan_complex, f0_eval, f0_neg_scaled, f0_nonneg, fresnel
from fastboys.f0 import q_eval, q_real, q_taylor
from fastboys.oracle import oracle_boys, oracle_fresnel

mpmath.mp.dps = 40

finite = st.floats(-400, 400, allow_nan=False, allow_infinity=False)
zs = st.builds(complex, finite, finite)


def mp_f0(z, scaled):
    """sqrt(pi) erf(sqrt z) / (2 sqrt z), times e^z if scaled."""
    z = mpmath.mpc(z)
    if z == 0:
        return 1.0 + 0j
    s = mpmath.sqrt(z)
    v = mpmath.sqrt(mpmath.pi) * mpmath.erf(s) / (2 * s)
    return complex(v * mpmath.exp(z) if scaled else v)


class TestQ:
    def test_values(self):
        assert q_eval(0j) == 1.0
        assert abs(q_eval(1 + 0j) - 0.63212055882856) <= 1e-14
        assert abs(q_eval(1 + 0j) - (1 - math.exp(-1))) <= 1e-16

    def test_branches_agree_inside_guard(self):
        xi = 0.1 + 0j
        assert abs(q_taylor(xi) - (1 - cmath.exp(-xi)) / xi) <= 1e-15

    @pytest.mark.parametrize("k", range(16))
    def test_guard_seam(self, k):
        xi = 0.5 * cmath.exp(2j * math.pi * k / 16)
        assert abs(q_taylor(xi) - (1 - cmath.exp(-xi)) / xi) <= 1e-14

    @given(st.floats(0, 50), st.floats(-50, 50))
    def test_bounded_right_half_plane(self, a, b):
        assert abs(q_eval(complex(a, b))) <= 1 + 1e-15

    @given(st.floats(-30, 30))
    def test_real_version(self, x):
        assert abs(q_real(x) - q_eval(complex(x)).real) <= 1e-15 * max(1.0, abs(q_real(x)))


class TestNonneg:
    def test_examples(self):
        assert f0_nonneg(0) == 1.0
        assert abs(f0_nonneg(1) - 0.7468241328124271) <= 1e-15
        c1, s1 = 0.779893400377, 0.438259147390
        assert abs(f0_nonneg(0.5j * math.pi) - complex(c1, -s1)) <= 1e-11

    @pytest.mark.parametrize("z,region", [
        (0.35, Region.TAYLOR), (0.3500001, Region.POLE_SUM), (99.9j, Region.POLE_SUM),
        (100.0, Region.LARGE_SERIES), (60 + 80j, Region.LARGE_SERIES),
    ])
    def test_regions(self, z, region):
        r = f0_eval(z)
        assert r.region is region and not r.scaled

    @pytest.mark.parametrize("z", [0.2 - 0.1j, 0.5 + 0.5j, 7 - 30j, 45j, 99 + 1j, 150 - 200j, 2000 + 7j])
    def test_against_mpmath(self, z):
        assert abs(f0_nonneg(z) - mp_f0(z, False)) <= 1e-12

    def test_contract(self):
        with pytest.raises(DomainError):
            f0_nonneg(-1e-300)


class TestScaled:
    def test_examples(self):
        assert abs(f0_neg_scaled(-1) - 0.53807950691276) <= 1e-12
        assert abs(f0_neg_scaled(-1) - oracle_boys(0, -1, True)) <= 1e-12

    def test_switch_point(self):
        z = complex(-REGION.t_max_sq)
        r = f0_eval(z)
        assert r.region is Region.GL_ARCTAN_SHIFTED and r.scaled
        assert math.isfinite(abs(r.value))
        assert abs(r.value - oracle_boys(0, z, True)) <= 1e-12

    def test_switch_boundary(self):
        inside = complex(-REGION.t_max_sq + 0.5)
        outside = complex(-REGION.t_max_sq + 0.5000001)
        assert f0_eval(inside).region is Region.GL_ARCTAN_SHIFTED
        assert f0_eval(outside).region is Region.GL_ARCTAN

    def test_continuity_at_zero(self):
        for x in (-1e-6, -1e-10, -1e-15):
            assert abs(f0_neg_scaled(x) - 1.0) <= 2 * abs(x)

    @pytest.mark.parametrize("z,region", [
        (-0.35, Region.TAYLOR), (-0.36, Region.GL_ARCTAN), (-100.0, Region.LARGE_SERIES_SCALED),
    ])
    def test_regions(self, z, region):
        assert f0_eval(z).region is region

    @pytest.mark.parametrize("z", [-0.2 + 0.1j, -3 - 1j, -33.1 + 0.2j, -20 + 60j, -99j - 1e-3, -500 + 30j])
    def test_against_mpmath(self, z):
        assert abs(f0_neg_scaled(z) - mp_f0(z, True)) <= 1e-12

    def test_near_imaginary_axis(self):
        z = complex(-1e-8, 20.0)
        assert abs(f0_neg_scaled(z) - oracle_boys(0, z, True)) <= 1e-12

    def test_contract(self):
        with pytest.raises(DomainError):
            f0_neg_scaled(0.0)


@pytest.mark.parametrize("rho", [REGION.r0, REGION.big_z])
@pytest.mark.parametrize("theta", [0.0, 0.7, 1.5, 1.6, 2.5, math.pi, -2.0, -1.4])
def test_region_boundary_continuity(rho, theta):
    # the jump across the seam, after removing the function's own first-order change
    z = rho * cmath.exp(1j * theta)
    z_lo, z_hi = z * (1 - 1e-9), z * (1 + 1e-9)
    lo, hi = f0_eval(z_lo), f0_eval(z_hi)
    assert lo.region is not hi.region
    f0, f1 = oracle_boys(0, z, lo.scaled), oracle_boys(1, z, lo.scaled)
    slope = f0 - f1 if lo.scaled else -f1
    assert abs(hi.value - lo.value - slope * (z_hi - z_lo)) <= 1e-11


@settings(max_examples=300)
@given(zs)
def test_bounded(z):
    assert abs(f0_eval(z).value) <= 1 + 1e-12


@settings(max_examples=300)
@given(zs)
def test_conjugate_symmetry(z):
    a = f0_eval(z).value
    b = f0_eval(z.conjugate()).value
    assert abs(b - a.conjugate()) <= 1e-15


@given(finite)
def test_real_axis_is_real(x):
    assert abs(f0_eval(complex(x, 0.0)).value.imag) <= 1e-15


class TestArctan:
    def test_values(self):
        assert arctan_complex(0) == 0
        assert abs(arctan_complex(1) - math.pi / 4) <= 1e-16
        assert abs(arctan_complex(0.5j) - 0.5j * math.log(3)) <= 1e-16
        assert abs(arctan_complex(0.5j) - 0.5493061443340549j) <= 1e-15

    @given(finite, finite)
    def test_matches_cmath(self, a, b):
        w = complex(a, b)
        if abs(abs(w.imag) - 1) < 1e-3 and abs(w.real) < 1e-3:
            return
        assert abs(arctan_complex(w) - cmath.atan(w)) <= 1e-14 * max(1.0, abs(cmath.atan(w)))

    @pytest.mark.parametrize("w", [1j, -1j])
    def test_poles(self, w):
        with pytest.raises(DomainError):
            arctan_complex(w)


class TestFresnel:
    def test_zero(self):
        assert fresnel(0) == (0.0, 0.0)

    def test_one(self):
        c, s = fresnel(1.0)
        assert abs(c - 0.779893400377) <= 1e-11
        assert abs(s - 0.438259147390) <= 1e-11

    @pytest.mark.parametrize("y", [0.3, 1.7, 4.0, 9.5, 20.0])
    def test_against_oracle_and_mpmath(self, y):
        c, s = fresnel(y)
        oc, os_ = oracle_fresnel(y)
        assert abs(c - oc) <= 1e-11 and abs(s - os_) <= 1e-11
        assert abs(c - float(mpmath.fresnelc(y))) <= 1e-11
        assert abs(s - float(mpmath.fresnels(y))) <= 1e-11

    def test_far_limit(self):
        c, s = fresnel(20.0)
        assert abs(c - 0.5) <= 0.02 and abs(s - 0.5) <= 0.02

    @given(st.floats(-30, 30))
    def test_odd(self, y):
        c, s = fresnel(y)
        mc, ms = fresnel(-y)
        assert (mc, ms) == (-c, -s)
