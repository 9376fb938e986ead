"""Numeric constants of the method and the immutable tables built from them.

The two coefficient tables are embedded as the decimal strings they were
published with and parsed with ``float``; every other constant is derived
from those and a handful of region parameters.
"""
from __future__ import annotations

import cmath
import math
import os
from dataclasses import dataclass, field

import numpy as np

from .errors import DomainError, TableError
from .oracle import oracle_upper_incomplete_gamma
from .quadrature import QuadRule, build_gauss_legendre

# (eta_m, w_m * exp(-eta_m)) for the 22-term pole sum in F(0, z), Re(z) >= 0.
F0_TABLE_ROWS: tuple[tuple[str, str], ...] = (
    ("0.14778782637969565E-02", "0.86643102720141654E-01"),
    ("0.13317276413725817E-01", "0.85772060843439468E-01"),
    ("0.37063591452052541E-01", "0.83935043682917876E-01"),
    ("0.72752512422882762E-01", "0.80966197041322921E-01"),
    ("0.12023694122878568E+00", "0.76908954849297856E-01"),
    ("0.17957429395893773E+00", "0.73155207871182168E-01"),
    ("0.25353404698408727E+00", "0.72695003516315720E-01"),
    ("0.35038865278072195E+00", "0.75284255608930400E-01"),
    ("0.48210957593127668E+00", "0.77094395364519633E-01"),
    ("0.66302899315837416E+00", "0.75425062567753040E-01"),
    ("0.91181473685659087E+00", "0.68968619265031533E-01"),
    ("0.12539502287919293E+01", "0.57444804221430223E-01"),
    ("0.17244634233573395E+01", "0.42081994346945442E-01"),
    ("0.23715248262781863E+01", "0.25838539448223272E-01"),
    ("0.32613796996078355E+01", "0.12445024157255560E-01"),
    ("0.44851301690595911E+01", "0.42925415925998368E-02"),
    ("0.61680621351224838E+01", "0.93543429877359686E-03"),
    ("0.84824718723178698E+01", "0.10840885466502505E-03"),
    ("0.11665305486296793E+02", "0.52718679667616736E-05"),
    ("0.16042417132288328E+02", "0.77659740397504190E-07"),
    ("0.22061929518147089E+02", "0.22138172422680093E-09"),
    ("0.30340112094708307E+02", "0.65941617600377069E-13"),
)

# (Re eta, Im eta, Re w, Im w) approximating (1 - s)^(11.5) on [0, 1].
EXPSUM12_ROWS: tuple[tuple[str, str, str, str], ...] = (
    ("0.70719431320570010e1", "0.16487291250752115e2", "0.36443632402898501e-10", "0.26411751072107504e-10"),
    ("0.70719431320570010e1", "-0.16487291250752115e2", "0.36443632402898501e-10", "-0.26411751072107504e-10"),
    ("-0.57143271715191635", "0.13278579453233633e2", "0.18185250346753633e-6", "-0.21860458971399352e-5"),
    ("-0.57143271715191635", "-0.13278579453233633e2", "0.18185250346753633e-6", "0.21860458971399352e-5"),
    ("-0.47193021330392506e1", "0.99835257112371032e1", "-0.99489169272055748e-3", "-0.23049079105203073e-3"),
    ("-0.47193021330392506e1", "-0.99835257112371032e1", "-0.99489169272055748e-3", "0.23049079105203073e-3"),
    ("-0.71704662772895089e1", "0.66712360839820768e1", "-0.25625216985879006e-1", "0.35818335274876982e-1"),
    ("-0.71704662772895089e1", "-0.66712360839820768e1", "-0.25625216985879006e-1", "-0.35818335274876982e-1"),
    ("-0.84899747054724699e1", "0.33434804168467491e1", "0.16506801544880723", "0.32273964471776045"),
    ("-0.84899747054724699e1", "-0.33434804168467491e1", "0.16506801544880723", "-0.32273964471776045"),
    ("0.36564414363150973e2", "0", "-0.20104641661565164e-25", "0"),
    ("-0.32424239255921954e1", "0", "-0.39563536955042078e-3", "0"),
    ("-0.89066047733100753e1", "0", "0.72349945805085292", "0"),
)
EXPSUM12_EPS = 2.5e-13

# certified accuracy of the 22-term pole sum
F0_QUAD_EPS = 1e-13

TABLE_PATH_ENV = "BOYS_TABLE_PATH"


@dataclass(frozen=True)
class RegionParams:
    r0: float = 0.35
    t_max: float = math.exp(7.0 / 4.0)
    switch_radius: float = 0.5
    big_z: float = 100.0
    J: int = 6
    M_gl: int = 22
    taylor_terms_f0: int = 10
    guard_radius: float = 0.5
    q_taylor_degree: int = 14

    @property
    def t_max_sq(self) -> float:
        return self.t_max * self.t_max

    @property
    def t_max1(self) -> float:
        return math.sqrt(self.t_max_sq + 1.0)

    @property
    def t_max1_sq(self) -> float:
        return self.t_max_sq + 1.0

    def z_star(self, n_max: int) -> float:
        return compute_z_star(n_max)


REGION = RegionParams()


def compute_z_star(n_max: int) -> float:
    """Recursion crossover (prod_{j=1..n}(j - 1/2))^(1/n), via logarithms."""
    if n_max < 1:
        raise DomainError(f"n_max must be >= 1, got {n_max}")
    return math.exp(math.fsum(math.log(j - 0.5) for j in range(1, n_max + 1)) / n_max)


@dataclass(frozen=True)
class F0QuadTable:
    poles: tuple[float, ...]
    weights: tuple[float, ...]
    eps_quad: float
    eps_tail: float

    def __len__(self) -> int:
        return len(self.poles)


def tail_bound(t_max: float) -> float:
    """Bound on the dropped piece (1/sqrt(pi)) int_{t_max}^inf e^{-t^2}/|t^2+z| dt."""
    return (math.exp(-t_max * t_max) / t_max - math.sqrt(math.pi) * math.erfc(t_max)) / math.sqrt(math.pi)


def build_f0_table(rows=None) -> F0QuadTable:
    """Parse the 22-term pole table and check it.

    The weights are values of an exponential approximation of s^(-1/2) at
    s = 1, so they must sum to one; a transcription error shows up there.
    """
    rows = F0_TABLE_ROWS if rows is None else rows
    poles = tuple(float(e) for e, _ in rows)
    weights = tuple(float(v) for _, v in rows)
    if any(p <= 0 for p in poles) or any(b <= a for a, b in zip(poles, poles[1:])):
        raise TableError("pole table: poles must be positive and strictly ascending")
    if any(v <= 0 for v in weights):
        raise TableError("pole table: weights must be positive")
    total = math.fsum(weights)
    if abs(total - 1.0) > 1e-12:
        raise TableError(f"pole weight sum check failed: sum v_m - 1 = {total - 1.0:.3e}")
    return F0QuadTable(poles, weights, F0_QUAD_EPS, tail_bound(REGION.t_max))


@dataclass(frozen=True)
class ExpSumTable:
    """Exponential-sum approximation (1 - s)^(n - 1/2) ~ sum_m w_m exp(eta_m s)."""

    n_max: int
    exponents: tuple[complex, ...]
    weights: tuple[complex, ...]
    eps: float
    # derived, filled in __post_init__
    exp_weights: tuple[complex, ...] = field(init=False, repr=False)
    pair_terms: tuple[int, ...] = field(init=False, repr=False)
    real_terms: tuple[int, ...] = field(init=False, repr=False)
    unpaired_terms: tuple[int, ...] = field(init=False, repr=False)

    def __post_init__(self):
        if len(self.exponents) != len(self.weights):
            raise TableError("exponent and weight counts differ")
        set_ = object.__setattr__
        set_(self, "exp_weights", tuple(w * cmath.exp(e) for e, w in zip(self.exponents, self.weights)))
        pairs, reals, unpaired = [], [], []
        used: set[int] = set()
        for i, (e, w) in enumerate(zip(self.exponents, self.weights)):
            if i in used:
                continue
            if e.imag == 0.0 and w.imag == 0.0:
                reals.append(i)
                continue
            mate = next((j for j in range(i + 1, len(self.exponents))
                         if j not in used
                         and self.exponents[j] == e.conjugate()
                         and self.weights[j] == w.conjugate()), None)
            if mate is None:
                unpaired.append(i)
            else:
                pairs.append(i)
                used.add(mate)
        set_(self, "pair_terms", tuple(pairs))
        set_(self, "real_terms", tuple(reals))
        set_(self, "unpaired_terms", tuple(unpaired))

    @property
    def M(self) -> int:
        return len(self.exponents)

    def evaluate(self, s):
        """sum_m w_m exp(eta_m s) for an array of s."""
        s = np.asarray(s, dtype=float)
        eta = np.asarray(self.exponents)
        w = np.asarray(self.weights)
        return (w[None, :] * np.exp(np.multiply.outer(s, eta))).sum(axis=1)

    def residual(self, samples: int = 10_001) -> float:
        """max |(1 - s)^(n - 1/2) - sum_m w_m e^{eta_m s}| on a uniform grid of [0, 1]."""
        s = np.linspace(0.0, 1.0, samples)
        return float(np.max(np.abs((1.0 - s) ** (self.n_max - 0.5) - self.evaluate(s))))


def _shipped_expsum12() -> ExpSumTable:
    exps = tuple(complex(float(a), float(b)) for a, b, _, _ in EXPSUM12_ROWS)
    ws = tuple(complex(float(c), float(d)) for _, _, c, d in EXPSUM12_ROWS)
    return ExpSumTable(12, exps, ws, EXPSUM12_EPS)


def validate_expsum_table(table: ExpSumTable, tol: float | None = None) -> float:
    tol = 10.0 * table.eps if tol is None else tol
    res = table.residual()
    if not res <= tol:
        raise TableError(f"table validation failed: residual {res:.3e} exceeds {tol:.3e}")
    return res


def format_expsum_table(table: ExpSumTable) -> str:
    lines = [f"{table.n_max} {table.M} {table.eps!r}"]
    for e, w in zip(table.exponents, table.weights):
        lines.append(" ".join(f"{v:.17e}" for v in (e.real, e.imag, w.real, w.imag)))
    return "\n".join(lines) + "\n"


def parse_expsum_table(text: str) -> ExpSumTable:
    """Parse the plain-text table format.

    Line one holds ``n_max M eps``; then M lines ``eta_re eta_im w_re w_im``.
    Blank lines and ``#`` comments are skipped.
    """
    rows = [ln.split() for ln in text.splitlines()
            if ln.strip() and not ln.lstrip().startswith("#")]
    if not rows or len(rows[0]) != 3:
        raise TableError("table header must be 'n_max M eps'")
    try:
        n_max, m, eps = int(rows[0][0]), int(rows[0][1]), float(rows[0][2])
        body = [[float(v) for v in r] for r in rows[1:]]
    except ValueError as exc:
        raise TableError(f"malformed table: {exc}") from None
    if len(body) != m or any(len(r) != 4 for r in body):
        raise TableError(f"expected {m} rows of 4 numbers")
    exps = tuple(complex(r[0], r[1]) for r in body)
    ws = tuple(complex(r[2], r[3]) for r in body)
    return ExpSumTable(n_max, exps, ws, eps)


def load_expsum_table(path) -> ExpSumTable:
    try:
        with open(path, encoding="ascii") as fh:
            table = parse_expsum_table(fh.read())
    except OSError as exc:
        raise TableError(f"cannot read table file {path}: {exc}") from None
    validate_expsum_table(table)
    return table


def build_expsum_table(n_max: int = 12, path=None) -> ExpSumTable:
    """Return the exponential-sum table for ``n_max``.

    n_max = 12 is shipped. Anything else needs a table file, given either as
    ``path`` or through the BOYS_TABLE_PATH environment variable.
    """
    path = path or os.environ.get(TABLE_PATH_ENV)
    if path:
        table = load_expsum_table(path)
        if table.n_max != n_max:
            raise TableError(f"table file holds n_max={table.n_max}, requested {n_max}")
        return table
    if n_max == 12:
        return _shipped_expsum12()
    raise TableError(f"no approximation table for n_max={n_max}")


@dataclass(frozen=True)
class SeriesCoeffs:
    """c_j = Gamma(j + 1/2) - Gamma(j + 1/2, t_max^2), j = 0..J."""

    t_max: float
    coeffs: tuple[float, ...]
    gamma_half: tuple[float, ...]
    upper_gamma: tuple[float, ...]


def build_series_coeffs(t_max: float = REGION.t_max, J: int = REGION.J) -> SeriesCoeffs:
    if J < 0:
        raise DomainError("J must be >= 0")
    gamma_half = [math.sqrt(math.pi)]
    for j in range(1, J + 1):
        gamma_half.append((j - 0.5) * gamma_half[-1])
    x = t_max * t_max
    upper = [oracle_upper_incomplete_gamma(j, x) for j in range(J + 1)]
    coeffs = tuple(g - u for g, u in zip(gamma_half, upper))
    return SeriesCoeffs(t_max, coeffs, tuple(gamma_half), tuple(upper))


def build_rules(params: RegionParams = REGION) -> tuple[QuadRule, QuadRule]:
    """Gauss-Legendre rules on [0, t_max] and on the shifted [0, t_max,1]."""
    return (build_gauss_legendre(params.M_gl, 0.0, params.t_max),
            build_gauss_legendre(params.M_gl, 0.0, params.t_max1))
