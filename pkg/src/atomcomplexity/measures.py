"""Information-content and complexity functionals.

Discrete measures act on a :class:`ProbabilityVector`; continuous ones act on
a spherically symmetric :class:`RadialDensity` normalized to one.  All
entropies are in nats.
"""
import math
from dataclasses import dataclass, field, replace
from typing import Callable, NamedTuple

import numpy as np

from .quadrature import QuadratureError, QuadratureSpec, integrate_semi_infinite

__all__ = [
    "ProbabilityVector",
    "RadialDensity",
    "GammaParams",
    "EntropyBounds",
    "OrderDisorder",
    "GammaMax",
    "MeasureSet",
    "NormalizationError",
    "BoundViolation",
    "shannon_discrete",
    "shannon_max_discrete",
    "onicescu_discrete",
    "disequilibrium_discrete",
    "renyi_discrete",
    "normalization",
    "shannon_radial",
    "onicescu_radial",
    "entropy_bounds",
    "order_disorder",
    "sdl_gamma",
    "sdl_gamma_max",
    "lmc_complexity",
    "S_MIN",
    "DEFAULT_GAMMAS",
]

PROBABILITY_TOL = 1e-12
DENSITY_TOL = 1e-8
LOG_FLOOR = 1e-300

# 3(1 + ln pi): lower bound of S_r + S_k for any normalized 3-D density pair.
S_MIN = 3.0 * (1.0 + math.log(math.pi))


class NormalizationError(ValueError):
    pass


class BoundViolation(ValueError):
    """An entropy exceeds its rigorous upper bound (or undercuts the lower)."""


# -- discrete -----------------------------------------------------------------


@dataclass(frozen=True)
class ProbabilityVector:
    p: np.ndarray

    def __post_init__(self):
        p = np.array(self.p, dtype=float).ravel()
        if p.size < 1:
            raise ValueError("a probability vector needs at least one outcome")
        if not np.all(np.isfinite(p)) or np.any(p < 0):
            raise ValueError("probabilities must be finite and non-negative")
        if abs(p.sum() - 1.0) > PROBABILITY_TOL:
            raise NormalizationError(f"probabilities sum to {p.sum():.15g}, not 1")
        p.flags.writeable = False
        object.__setattr__(self, "p", p)

    @property
    def k(self):
        return self.p.size


def _pv(p):
    return p if isinstance(p, ProbabilityVector) else ProbabilityVector(p)


def shannon_discrete(p):
    """H = -sum p_i ln p_i, with 0 ln 0 = 0."""
    p = _pv(p).p
    nz = p[p > 0]
    return float(-np.sum(nz * np.log(nz)))


def shannon_max_discrete(k):
    if int(k) != k or k < 1:
        raise ValueError("k must be a positive integer")
    return math.log(k)


def onicescu_discrete(p):
    """Information energy E = sum p_i**2."""
    p = _pv(p).p
    return float(np.dot(p, p))


def disequilibrium_discrete(p):
    """Quadratic distance sum (p_i - 1/k)**2 to the equiprobable vector."""
    p = _pv(p).p
    d = p - 1.0 / p.size
    return float(np.dot(d, d))


def renyi_discrete(p, q):
    """Renyi entropy ln(sum p_i**q) / (1 - q) for q >= 0, q != 1.

    At ``q = 0`` only outcomes with p_i > 0 are counted.
    """
    if q < 0:
        raise ValueError("Renyi order must be non-negative")
    if q == 1:
        raise ValueError("q = 1 is the Shannon limit; use shannon_discrete")
    p = _pv(p).p
    nz = p[p > 0]
    return float(math.log(np.sum(nz**q)) / (1.0 - q))


# -- continuous ---------------------------------------------------------------


@dataclass(frozen=True)
class RadialDensity:
    """Spherically averaged one-particle density normalized to one.

    ``eval`` maps radii (bohr) or momenta (1/bohr) to density values and must
    accept numpy arrays.  ``tail_scale`` is the decay length used to place the
    quadrature breakpoint and tail map.
    """

    eval: Callable[[np.ndarray], np.ndarray]
    space: str = "position"
    tail_scale: float = 1.0

    def __post_init__(self):
        if self.space not in ("position", "momentum"):
            raise ValueError(f"unknown space {self.space!r}")
        if not self.tail_scale > 0:
            raise ValueError("tail_scale must be positive")

    def __call__(self, x):
        return self.eval(np.asarray(x, dtype=float))


def _integrate(rho, integrand, spec, what):
    spec = replace(spec or QuadratureSpec(), tail_scale=rho.tail_scale)
    res = integrate_semi_infinite(integrand, spec)
    if not res.converged:
        raise QuadratureError(f"{what} did not converge", res.value, res.error_estimate)
    return res.value


def normalization(rho, spec=None):
    """Return int rho(x) 4 pi x**2 dx."""
    return _integrate(rho, lambda x: 4.0 * np.pi * x * x * rho.eval(x), spec, "normalization")


def _check_normalized(rho, spec):
    norm = normalization(rho, spec)
    if abs(norm - 1.0) > DENSITY_TOL:
        raise NormalizationError(f"{rho.space} density integrates to {norm:.12g}, not 1")


def _xlogx(v):
    out = np.zeros_like(v)
    mask = v > LOG_FLOOR
    out[mask] = v[mask] * np.log(v[mask])
    return out


def shannon_radial(rho, spec=None, check=True):
    """S = -int rho ln rho d^3x over a spherically symmetric density."""
    if check:
        _check_normalized(rho, spec)
    return _integrate(
        rho, lambda x: -4.0 * np.pi * x * x * _xlogx(rho.eval(x)), spec, f"{rho.space} entropy"
    )


def onicescu_radial(rho, spec=None, check=True):
    """E = int rho**2 d^3x (E_r or E_k depending on the density's space)."""
    if check:
        _check_normalized(rho, spec)
    return _integrate(
        rho, lambda x: 4.0 * np.pi * x * x * rho.eval(x) ** 2, spec, f"{rho.space} information energy"
    )


# -- bounds, order, complexity ------------------------------------------------


@dataclass(frozen=True)
class EntropyBounds:
    S_r_min: float
    S_r_max: float
    S_k_min: float
    S_k_max: float
    S_min: float
    S_max: float


def entropy_bounds(r2, T):
    """Rigorous entropy bounds from <r^2> (bohr^2) and kinetic energy T (hartree).

    Both moments refer to densities normalized to one, so ``T`` is the kinetic
    energy per electron.
    """
    if not (r2 > 0 and T > 0):
        raise ValueError("<r^2> and T must be positive")
    base = 1.5 * (1.0 + math.log(math.pi))
    lr = 1.5 * math.log(2.0 / 3.0 * r2)
    lt = 1.5 * math.log(4.0 / 3.0 * T)
    b = EntropyBounds(
        S_r_min=base - lt,
        S_r_max=base + lr,
        S_k_min=base - lr,
        S_k_max=base + lt,
        S_min=S_MIN,
        S_max=S_MIN + 1.5 * math.log(8.0 / 9.0 * r2 * T),
    )
    tol = 1e-12 * max(1.0, abs(b.S_max))
    # the max bounds add up to S_max, the position min and momentum max to S_min
    assert abs(b.S_r_max + b.S_k_max - b.S_max) <= tol
    assert abs(b.S_r_min + b.S_k_max - b.S_min) <= tol
    assert abs(b.S_r_max + b.S_k_min - b.S_min) <= tol
    return b


class OrderDisorder(NamedTuple):
    delta: float
    omega: float


def order_disorder(S, S_max):
    """Landsberg disorder Delta = S/S_max and order Omega = 1 - Delta."""
    if not S > 0:
        raise ValueError("entropy must be positive")
    if S > S_max:
        raise BoundViolation(
            f"S = {S:.10g} exceeds S_max = {S_max:.10g}; density and moments are inconsistent"
        )
    delta = S / S_max
    return OrderDisorder(delta, 1.0 - delta)


def _render(x):
    return format(float(x), "g")


@dataclass(frozen=True)
class GammaParams:
    """Disorder strength ``alpha`` and order strength ``beta``.

    ``label`` keeps the textual form used for CSV column names; it defaults
    to the shortest float rendering ("1", "0.25").
    """

    alpha: float
    beta: float
    label: str = field(default=None, compare=False)

    def __post_init__(self):
        if self.alpha < 0 or self.beta < 0:
            raise ValueError("alpha and beta must be non-negative")
        if self.alpha == 0 and self.beta == 0:
            raise ValueError("alpha and beta cannot both be zero")
        if self.label is None:
            object.__setattr__(self, "label", f"{_render(self.alpha)}_{_render(self.beta)}")

    @classmethod
    def parse(cls, text):
        """Parse ``"alpha,beta"`` (e.g. ``"1,0.25"``)."""
        parts = [s.strip() for s in text.split(",")]
        if len(parts) != 2 or not all(parts):
            raise ValueError(f"expected 'alpha,beta', got {text!r}")
        return cls(float(parts[0]), float(parts[1]), label=f"{parts[0]}_{parts[1]}")

    @property
    def column(self):
        return f"Gamma_{self.label}"


DEFAULT_GAMMAS = (
    GammaParams(1.0, 1.0),
    GammaParams(1.0, 0.25),
    GammaParams(0.25, 0.0),
    GammaParams(0.0, 4.0),
)


def sdl_gamma(delta, params):
    """Simple complexity Delta**alpha * (1 - Delta)**beta, with 0**0 = 1."""
    if not 0.0 <= delta <= 1.0:
        raise ValueError(f"disorder {delta!r} outside [0, 1]")
    return float(delta**params.alpha * (1.0 - delta) ** params.beta)


class GammaMax(NamedTuple):
    value: float
    argmax_delta: float


def sdl_gamma_max(params):
    """Interior maximum of Gamma for alpha > 0 and beta > 0."""
    a, b = params.alpha, params.beta
    if a <= 0 or b <= 0:
        raise ValueError("maximum is interior only when alpha > 0 and beta > 0")
    value = math.exp(a * math.log(a) + b * math.log(b) - (a + b) * math.log(a + b))
    return GammaMax(value, a / (a + b))


def lmc_complexity(S, E_r, E_k):
    """C = S * D with disequilibrium D = E_r * E_k."""
    if not (S > 0 and E_r > 0 and E_k > 0):
        raise ValueError("S, E_r and E_k must be positive")
    return S * (E_r * E_k)


@dataclass(frozen=True)
class MeasureSet:
    """All measures of one atom; ``gammas`` maps GammaParams to values."""

    Z: int
    symbol: str
    S_r: float
    S_k: float
    S: float
    E_r: float
    E_k: float
    D: float
    O: float  # noqa: E741
    r2: float
    T: float
    S_r_min: float
    S_r_max: float
    S_k_min: float
    S_k_max: float
    S_min: float
    S_max: float
    Delta: float
    Omega: float
    gammas: dict
    C: float

    def gamma(self, params):
        return self.gammas[params]

    def bound_violations(self):
        """Names of the bound inequalities that fail (empty when consistent)."""
        checks = (
            ("S_r_min <= S_r", self.S_r_min <= self.S_r),
            ("S_r <= S_r_max", self.S_r <= self.S_r_max),
            ("S_k_min <= S_k", self.S_k_min <= self.S_k),
            ("S_k <= S_k_max", self.S_k <= self.S_k_max),
            ("S_min <= S", self.S_min <= self.S),
            ("S <= S_max", self.S <= self.S_max),
        )
        return [name for name, ok in checks if not ok]
