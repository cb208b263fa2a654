"""Closed-form stability coefficients and integral-inequality evaluators.

The central object is the exponential envelope with rate k = (2 + L*T)/2,
where L is the state Lipschitz constant of the right-hand side and T the
horizon.  Writing q = 2/(2 + L*T), the deviation of a perturbed solution
from the nominal one is bounded at time t by

    c1(t)*|dx0| + c2(t)*|dv0| + c3(t)*|dlam|,

    c1(t) = 1 + L*q^2*(e^(k*t) - 1 - t)
    c2(t) = q*(e^(k*t) - 1)
    c3(t) = Lp*q^2*(e^(k*t) - 1 - t)

and the velocity gap by  dv0*e^(k*t) + (L*dx0 + Lp*dlam)*q*(e^(k*t) - 1).
All evaluators accept scalars or numpy arrays for t.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Union

import numpy as np
from scipy.integrate import cumulative_simpson, simpson

from .errors import BadInitialError, InvalidAlphaError
from .ode import NormKind

ScalarFunc = Union[float, Callable[[float], float]]


@dataclass(frozen=True)
class LipschitzData:
    """State constant L (in (x, v), jointly) and parameter constant Lp (in lambda)."""

    L: float
    Lp: float

    def __post_init__(self):
        for name, value in (("L", self.L), ("Lp", self.Lp)):
            if not (np.isfinite(value) and value >= 0):
                raise ValueError(f"{name} must be finite and >= 0, got {value}")


@dataclass(frozen=True)
class BoundCoefficients:
    """Evaluable deviation-bound coefficients for one (L, Lp, T) triple."""

    lip: LipschitzData
    T: float

    def __post_init__(self):
        if not (np.isfinite(self.T) and self.T > 0):
            raise ValueError("T must be positive and finite")

    @property
    def rate(self) -> float:
        """Exponential growth rate k = (2 + L*T)/2."""
        return 0.5 * (2.0 + self.lip.L * self.T)

    @property
    def _q(self) -> float:
        return 2.0 / (2.0 + self.lip.L * self.T)

    def _bump(self, t):
        # e^(k*t) - 1 - t via expm1 to avoid cancellation near t = 0
        t = np.asarray(t, dtype=float)
        with np.errstate(over="ignore"):
            return np.expm1(self.rate * t) - t

    def c1(self, t):
        """Multiplier of the initial-position gap."""
        return 1.0 + self.lip.L * self._q**2 * self._bump(t)

    def c2(self, t):
        """Multiplier of the initial-velocity gap."""
        t = np.asarray(t, dtype=float)
        with np.errstate(over="ignore"):
            return self._q * np.expm1(self.rate * t)

    def c3(self, t):
        """Multiplier of the parameter gap."""
        return self.lip.Lp * self._q**2 * self._bump(t)

    def total(self, t, dx0: float, dv0: float, dlam: float):
        """Full state-deviation bound at time t.

        Terms with a zero gap are dropped outright, so an overflowed
        (infinite) coefficient cannot poison an absent perturbation.
        """
        out = np.zeros_like(np.asarray(t, dtype=float))
        for coeff, gap in ((self.c1, dx0), (self.c2, dv0), (self.c3, dlam)):
            if gap != 0.0:
                out = out + coeff(t) * gap
        return out

    def velocity(self, t, dx0: float, dv0: float, dlam: float):
        """Velocity-deviation bound at time t."""
        t = np.asarray(t, dtype=float)
        out = np.zeros_like(t)
        with np.errstate(over="ignore"):
            if dv0 != 0.0:
                out = out + dv0 * np.exp(self.rate * t)
            forced = self.lip.L * dx0 + self.lip.Lp * dlam
            if forced != 0.0:
                out = out + forced * self._q * np.expm1(self.rate * t)
        return out


def main_coefficients(lip: LipschitzData, T: float) -> BoundCoefficients:
    """Coefficients of the general second-order stability estimate."""
    return BoundCoefficients(lip=lip, T=T)


def velocity_bound(
    lip: LipschitzData, T: float, t, dx0: float, dv0: float, dlam: float
):
    """Velocity-deviation bound at time t (scalar or array)."""
    for name, value in (("dx0", dx0), ("dv0", dv0), ("dlam", dlam)):
        if value < 0:
            raise ValueError(f"{name} must be >= 0")
    return main_coefficients(lip, T).velocity(t, dx0, dv0, dlam)


def cocoercive_coefficients(gamma: float, Lp: float, T: float) -> BoundCoefficients:
    """Coefficients for damped systems driven by a cocoercive operator.

    The right-hand side -A(x) - gamma*v is gamma-Lipschitz in (x, v) once
    the operator's inverse modulus is below gamma, so this is the general
    estimate with L = gamma.
    """
    if gamma <= 0:
        raise ValueError("gamma must be > 0")
    return main_coefficients(LipschitzData(L=gamma, Lp=Lp), T)


def rlc_coefficients(beta: float, tau: float, Lp: float) -> BoundCoefficients:
    """Coefficients for the RLC current equation on [0, 1].

    beta is the x-Lipschitz constant of the forcing, tau = R/L the damping
    ratio; the combined right-hand side g(t, x) - tau*v is Lipschitz with
    constant max(beta, tau).
    """
    if beta <= 0 or tau <= 0:
        raise ValueError("beta and tau must be > 0")
    return main_coefficients(LipschitzData(L=max(beta, tau), Lp=Lp), 1.0)


def lcs_constants(
    normC: float,
    L: float,
    Lp: float,
    T: float,
    beta: float,
    conservative: bool = False,
) -> tuple[float, float, float]:
    """Sup-over-time constants bounding the observation gap of a linear
    control system:  |z_pert - z|_inf <= c1*|dx0| + c2*|dv0| + c3*|dlam|.

    The literal c3 contains the factor Lp*(1 - Lp), which goes negative
    for Lp > 1; ``conservative=True`` replaces it with Lp*(1 + Lp), which
    dominates the literal value and is the variant used for certification.
    """
    k = 0.5 * (2.0 + L * T)
    try:
        growth = math.exp(k * T)
    except OverflowError:
        growth = math.inf
    denom = 2.0 + L * T

    def scaled(coef: float) -> float:
        # avoid 0*inf when a term drops out entirely
        return coef * growth if coef != 0.0 else 0.0

    c1 = normC * (denom - 2.0 * L) / denom + scaled(normC * 2.0 * L * (4.0 + L * T) / denom**2)
    c2 = scaled(normC * (4.0 + L * T) / denom)
    factor = Lp * (1.0 + Lp) if conservative else Lp * (1.0 - Lp)
    c3 = beta + scaled(4.0 * normC * factor / denom**2)
    return (c1, c2, c3)


@dataclass(frozen=True)
class PerovInput:
    """Data of the integral inequality u(t) <= c + int(a*u + b*u^alpha).

    ``a`` and ``b`` may be nonnegative constants or callables of time;
    constants get an exact closed-form evaluation.
    """

    c: float
    alpha: float
    a: ScalarFunc
    b: ScalarFunc
    t0: float = 0.0

    def __post_init__(self):
        if not (np.isfinite(self.c) and self.c >= 0):
            raise ValueError("c must be finite and >= 0")
        if not (0.0 <= self.alpha < 1.0):
            raise InvalidAlphaError(f"alpha must lie in [0, 1), got {self.alpha}")


def _sample(f: ScalarFunc, grid: np.ndarray, name: str) -> np.ndarray:
    if callable(f):
        vals = np.array([float(f(s)) for s in grid])
    else:
        vals = np.full(grid.shape, float(f))
    if np.any(vals < 0) or not np.all(np.isfinite(vals)):
        raise ValueError(f"{name}(t) must be finite and >= 0 on the queried range")
    return vals


def perov_bound(p: PerovInput, t: float, panels: int = 1024) -> float:
    """Evaluate the explicit solution bound of the nonlinear integral
    inequality at time t >= t0:

        { c^(1-a) * e^((1-a)*int_t0^t a)
          + (1-a) * int_t0^t b(s) * e^((1-a)*int_s^t a) ds }^(1/(1-a))

    Constant a, b take a closed-form branch; callables are integrated with
    composite Simpson quadrature on ``panels`` uniform subintervals.
    """
    if t < p.t0:
        raise ValueError("t must be >= t0")
    if t == p.t0:
        return float(p.c)
    one_m = 1.0 - p.alpha
    if not callable(p.a) and not callable(p.b):
        a = float(p.a)
        b = float(p.b)
        if a < 0 or b < 0:
            raise ValueError("constant a, b must be >= 0")
        grow = math.exp(one_m * a * (t - p.t0))
        term1 = p.c**one_m * grow
        term2 = b * (grow - 1.0) / a if a > 0 else one_m * b * (t - p.t0)
        return float((term1 + term2) ** (1.0 / one_m))
    if panels < 2 or panels % 2:
        raise ValueError("panels must be an even integer >= 2")
    grid = np.linspace(p.t0, t, panels + 1)
    a_vals = _sample(p.a, grid, "a")
    b_vals = _sample(p.b, grid, "b")
    # cumulative integral A(s) = int_t0^s a; the inner exponent is A(t) - A(s)
    acc = cumulative_simpson(a_vals, x=grid, initial=0.0)
    inner = np.exp(one_m * (acc[-1] - acc))
    outer = simpson(b_vals * inner, x=grid)
    term1 = p.c**one_m * math.exp(one_m * acc[-1])
    return float((term1 + one_m * outer) ** (1.0 / one_m))


def lemma_gap(
    f_samples: np.ndarray,
    grid: np.ndarray,
    df_samples: np.ndarray | None = None,
    norm: NormKind = NormKind.SUP,
) -> tuple[float, float]:
    """Both sides of the path inequality

        int_0^t |f| |f'| ds  <=  (t/2) * int_0^t |f'|^2 ds

    for a sampled smooth path with f(0) = 0, by trapezoid quadrature on
    the given grid.  Derivative samples are optional; missing ones are
    filled by second-order finite differences.

    Returns (lhs, rhs) at t = grid[-1].  Raises BadInitialError when the
    first sample is not the zero vector.
    """
    grid = np.asarray(grid, dtype=float)
    f = np.asarray(f_samples, dtype=float)
    if f.ndim == 1:
        f = f[:, None]
    if grid.ndim != 1 or f.shape[0] != grid.size:
        raise ValueError("f_samples must have one row per grid point")
    if grid[0] != 0.0 or np.any(np.diff(grid) <= 0):
        raise ValueError("grid must be strictly increasing and start at 0")
    if norm.of(f[0]) > 0:
        raise BadInitialError("path must start at the zero vector")
    if df_samples is None:
        df = np.gradient(f, grid, axis=0)
    else:
        df = np.asarray(df_samples, dtype=float)
        if df.ndim == 1:
            df = df[:, None]
        if df.shape != f.shape:
            raise ValueError("df_samples must match f_samples in shape")
    fn = norm.rows(f)
    dfn = norm.rows(df)
    lhs = float(np.trapezoid(fn * dfn, grid))
    rhs = float(0.5 * grid[-1] * np.trapezoid(dfn * dfn, grid))
    return (lhs, rhs)
