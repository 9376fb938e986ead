"""Oracle-backed checks shared by ``boys selftest`` and the acceptance tests.

Each check returns a :class:`CheckResult` holding the largest observed error
and the case that produced it; the caller decides the tolerance.
"""
from __future__ import annotations

import cmath
import math
import random
from dataclasses import dataclass, field

import numpy as np

from . import constants
from .constants import REGION, build_expsum_table, build_f0_table, compute_z_star
from .errors import BoysError
from .f0 import SQRT_PI, f0_eval, fresnel
from .fntop import fn_top_nonneg
from .oracle import oracle_boys, oracle_boys_vector, oracle_fresnel
from .real import boys_all_real
from .recursion import boys_all

POLAR_RADII = (0.0, 0.1, 0.34, 0.36, 1.0, 5.0, 33.1, 50.0, 99.0, 101.0, 300.0)
CALIBRATION_POINTS = (1.0, 10.0, 50.0, 10j, 3 + 4j)
ALTERNATIVE_PREFACTORS = {"1": 1.0, "1/(2 sqrt(pi))": 0.5 / SQRT_PI, "1/sqrt(pi)": 1.0 / SQRT_PI}
FRESNEL_AT_ONE = (0.779893400377, 0.438259147390)


@dataclass
class CheckResult:
    name: str
    max_error: float = 0.0
    worst: dict = field(default_factory=dict)
    count: int = 0
    note: str = ""
    failed: bool = False

    def update(self, err: float, **case) -> None:
        self.count += 1
        if math.isnan(self.max_error):
            return
        if math.isnan(err) or err > self.max_error:
            self.max_error = err
            self.worst = case


def polar_grid(n_angles: int = 182, radii=POLAR_RADII) -> list[complex]:
    """z = rho e^{i theta}, theta uniform on [-pi, pi)."""
    thetas = np.linspace(-math.pi, math.pi, n_angles, endpoint=False)
    return [rho * cmath.exp(1j * th) for rho in radii for th in thetas]


def switch_points(count: int = 40) -> list[complex]:
    """Points within 1/2 of -t_max^2, where the shifted rule takes over."""
    rng = random.Random(7)
    pts = [complex(-REGION.t_max_sq, 0.0)]
    for _ in range(count - 1):
        r = 0.5 * math.sqrt(rng.random())
        pts.append(-REGION.t_max_sq + r * cmath.exp(1j * rng.uniform(-math.pi, math.pi)))
    return pts


def vector_points(count: int = 500, r_max: float = 300.0, seed: int = 11) -> list[complex]:
    rng = random.Random(seed)
    pts = []
    for _ in range(count):
        r = r_max * rng.random() ** 2
        pts.append(r * cmath.exp(1j * rng.uniform(-math.pi, math.pi)))
    return pts


def overlap_points(count: int = 100, seed: int = 5) -> list[complex]:
    rng = random.Random(seed)
    zs = compute_z_star(12)
    return [zs * rng.uniform(0.8, 1.2) * cmath.exp(1j * rng.uniform(-math.pi, math.pi))
            for _ in range(count)]


def check_pole_weight_sum() -> CheckResult:
    res = CheckResult("pole weight sum |sum v_m - 1|")
    try:
        table = build_f0_table(constants.F0_TABLE_ROWS)
    except BoysError as exc:
        res.max_error, res.failed, res.note = math.inf, True, str(exc)
        return res
    res.update(abs(math.fsum(table.weights) - 1.0), observed=math.fsum(table.weights), expected=1.0)
    return res


def pole_sum_f0(z: complex, prefactor: float = 0.5) -> complex:
    """sqrt(pi/z)/2 - prefactor e^{-z} sum_m v_m / (eta_m + z), for the calibration gate."""
    table = build_f0_table()
    acc = sum(v / (e + z) for e, v in zip(table.poles, table.weights))
    return 0.5 * SQRT_PI / cmath.sqrt(z) - prefactor * cmath.exp(-z) * acc


def check_calibration(prefactor: float = 0.5) -> CheckResult:
    res = CheckResult(f"pole-sum prefactor {prefactor:.6g}")
    for z in CALIBRATION_POINTS:
        z = complex(z)
        ref = oracle_boys(0, z)
        val = pole_sum_f0(z, prefactor)
        res.update(abs(val - ref), z=z, n=0, observed=val, expected=ref)
    return res


def check_calibration_gate() -> CheckResult:
    """Prefactor 1/2 must match the oracle; the alternatives must miss by 10^4 x 1e-12."""
    res = check_calibration(0.5)
    res.name = "calibration gate, prefactor 1/2"
    for label, pref in ALTERNATIVE_PREFACTORS.items():
        alt = check_calibration(pref)
        if alt.max_error < 1e-12 * 1e4:
            res.failed = True
            res.note = f"prefactor {label} unexpectedly passes (max error {alt.max_error:.3e})"
    return res


def check_expsum_residual() -> CheckResult:
    res = CheckResult("exp-sum residual max |g_12(s) - sum w e^{eta s}|")
    table = build_expsum_table(12)
    res.update(table.residual(10_000), n=12)
    return res


def check_f12_at_zero() -> CheckResult:
    res = CheckResult("|F(12, 0) - 1/25|")
    val = fn_top_nonneg(0j)
    res.update(abs(val - 0.04), z=0j, n=12, observed=val, expected=0.04)
    return res


def check_f0_grid(points, want_scaled: bool) -> CheckResult:
    label = "e^z F(0, z), Re(z) < 0" if want_scaled else "F(0, z), Re(z) >= 0"
    res = CheckResult(label)
    for z in points:
        r = f0_eval(z)
        if r.scaled != want_scaled:
            continue
        ref = oracle_boys(0, z, r.scaled)
        res.update(abs(r.value - ref), z=z, n=0, observed=r.value, expected=ref, region=r.region.value)
    return res


def check_vectors(points) -> CheckResult:
    res = CheckResult("boys_all vs oracle, n = 0..12")
    for z in points:
        vec = boys_all(z)
        ref = oracle_boys_vector(12, z, vec.scaled)
        for n, (a, b) in enumerate(zip(vec, ref)):
            res.update(abs(a - b), z=z, n=n, observed=a, expected=b)
    return res


def check_overlap(points) -> CheckResult:
    res = CheckResult("forced forward vs forced backward near z*")
    for z in points:
        fwd = boys_all(z, force="forward")
        bwd = boys_all(z, force="backward")
        for n, (a, b) in enumerate(zip(fwd, bwd)):
            res.update(abs(a - b), z=z, n=n, observed=a, expected=b)
    return res


def check_fresnel() -> CheckResult:
    res = CheckResult("Fresnel C, S")
    c, s = fresnel(1.0)
    res.update(max(abs(c - FRESNEL_AT_ONE[0]), abs(s - FRESNEL_AT_ONE[1])),
               y=1.0, observed=(c, s), expected=FRESNEL_AT_ONE)
    for y in (0.5, 1.0, 3.0, 20.0):
        c, s = fresnel(y)
        ref = oracle_fresnel(y)
        res.update(max(abs(c - ref[0]), abs(s - ref[1])), y=y, observed=(c, s), expected=ref)
    return res


def fresnel_far_limit(y: float = 20.0) -> float:
    c, s = fresnel(y)
    return max(abs(c - 0.5), abs(s - 0.5))


def check_real_path(points) -> CheckResult:
    res = CheckResult("boys_all_real vs complex path")
    for x in points:
        real = boys_all_real(x)
        cplx = boys_all(complex(x))
        for n, (a, b) in enumerate(zip(real, cplx)):
            res.update(max(abs(a - b.real), abs(b.imag)), z=x, n=n, observed=a, expected=b)
    return res


@dataclass
class Suite:
    key: str
    tol: float
    run: object


def suites(quick: bool = False) -> list[Suite]:
    n_angles = 24 if quick else 182
    grid = polar_grid(n_angles)
    neg_grid = grid + switch_points(8 if quick else 40)
    n_vec = 60 if quick else 500
    n_overlap = 30 if quick else 100
    xs = list(np.linspace(0.0, 200.0, 40 if quick else 200))
    return [
        Suite("pole-weight-sum", 1e-12, check_pole_weight_sum),
        Suite("calibration", 1e-12, check_calibration_gate),
        Suite("expsum-residual", 5e-13, check_expsum_residual),
        Suite("f12-zero", 5e-14, check_f12_at_zero),
        Suite("f0-nonneg", 1e-12, lambda: check_f0_grid(grid, False)),
        Suite("f0-scaled", 1e-12, lambda: check_f0_grid(neg_grid, True)),
        Suite("vector", 1e-11, lambda: check_vectors(vector_points(n_vec))),
        Suite("overlap", 1e-10, lambda: check_overlap(overlap_points(n_overlap))),
        Suite("fresnel", 1e-11, check_fresnel),
        Suite("real-path", 1e-13, lambda: check_real_path(xs)),
    ]


def run_selftest(quick: bool = False, out=print) -> bool:
    ok = True
    for suite in suites(quick):
        try:
            res = suite.run()
        except BoysError as exc:
            res = CheckResult(suite.key, math.inf, failed=True, note=str(exc))
        passed = not res.failed and res.max_error <= suite.tol
        ok &= passed
        out(f"{'PASS' if passed else 'FAIL'}  {suite.key:16s} max_err={res.max_error:.3e}  "
            f"tol={suite.tol:.1e}  ({res.name})")
        if not passed:
            detail = res.note or ", ".join(f"{k}={v}" for k, v in res.worst.items())
            out(f"      failing case: {detail}")
    return ok
