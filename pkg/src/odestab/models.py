"""Built-in parametric problem families and their hypothesis validators.

Three families ship with the package:

* damped systems  x'' + gamma*x' + A_lam(x) = 0  driven by a cocoercive
  operator (here realized by positive-semidefinite matrices),
* the RLC tuning-circuit current equation  x'' + tau*x' = g_lam(t, x)
  on [0, 1] (plus a series-circuit variant with a voltage source),
* second-order linear control systems  x'' = A_lam x + gamma*x' + B_lam u
  with observation  z = C(x + x') + D_lam u.

Each builder validates the structural hypotheses its stability estimate
relies on (by deterministic sampling) and returns a ParametricFamily with
declared Lipschitz data, ready for perturbation sweeps.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Callable

import numpy as np

from .bounds import LipschitzData, lcs_constants
from .errors import (
    ConfigError,
    DimMismatchError,
    GridMismatchError,
    HypothesisViolationError,
)
from .ode import NormKind, SecondOrderIVP, Trajectory, as_vector

Param = np.ndarray  # parameter vector, sup norm


def as_param(value) -> Param:
    return as_vector(value, name="lambda")


def param_distance(a, b) -> float:
    """Sup-norm distance in parameter space."""
    return float(np.max(np.abs(as_param(a) - as_param(b))))


@dataclass(frozen=True)
class ObservationSpec:
    """Observation map z(t) = C(x(t) + v(t)) + D_lam u(t) plus its
    sup-over-time gap constants (conservative variant first, literal kept
    for reporting)."""

    C: np.ndarray
    D_of_lambda: Callable[[Param], np.ndarray]
    u_ctl: Callable[[float], np.ndarray]
    constants: tuple[float, float, float]
    constants_literal: tuple[float, float, float]


@dataclass(frozen=True)
class ParametricFamily:
    """A parametric second-order problem: lam -> SecondOrderIVP.

    ``build(lambda_bar)`` is the nominal problem; all built problems share
    dimension and horizon.  ``lip`` holds the Lipschitz constants declared
    valid on the closed ball of ``neighborhood_radius`` around
    ``lambda_bar`` (sup norm in parameter space).
    """

    name: str
    lambda_bar: Param
    build: Callable[[Param], SecondOrderIVP]
    lip: LipschitzData
    neighborhood_radius: float
    observation: ObservationSpec | None = None

    def __post_init__(self):
        object.__setattr__(self, "lambda_bar", as_param(self.lambda_bar))
        if not (np.isfinite(self.neighborhood_radius) and self.neighborhood_radius > 0):
            raise ValueError("neighborhood_radius must be positive")

    def problem(self, lam) -> SecondOrderIVP:
        return self.build(as_param(lam))


def _ic_shift(lam: Param, lambda_bar: Param, enabled: bool, n: int) -> np.ndarray:
    """Initial-condition perturbation: shift every component of x0 by the
    first parameter offset (the two-panel experiment's convention)."""
    if not enabled:
        return np.zeros(n)
    return float(lam[0] - lambda_bar[0]) * np.ones(n)


# ---------------------------------------------------------------------------
# cocoercive operator systems


@dataclass(frozen=True)
class CocoerciveModel:
    """Damped second-order system driven by a parametric cocoercive operator.

    ``alpha_of_lambda`` returns the cocoercivity modulus of A_lam; the
    stability estimate requires 1/alpha < gamma throughout the
    neighborhood.
    """

    A_of_lambda: Callable[[Param], np.ndarray]
    gamma: float
    u0: np.ndarray
    v0: np.ndarray
    alpha_of_lambda: Callable[[Param], float]
    horizon: float = 1.0
    lambda_bar: Param = 0.0
    radius: float = 0.25
    perturb_initial: bool = False

    def __post_init__(self):
        object.__setattr__(self, "u0", as_vector(self.u0, name="u0"))
        object.__setattr__(self, "v0", as_vector(self.v0, self.u0.size, name="v0"))
        object.__setattr__(self, "lambda_bar", as_param(self.lambda_bar))
        if self.gamma <= 0:
            raise ValueError("gamma must be > 0")


@dataclass(frozen=True)
class CocoercivityCheck:
    passed: bool
    worst_residual: float
    samples: int


def validate_cocoercivity(
    A, alpha: float, samples: int, seed: int = 42, tol: float = -1e-12
) -> CocoercivityCheck:
    """Sample-based check of <A(u)-A(v), u-v> >= alpha*|A(u)-A(v)|^2.

    Draws ``samples`` uniform pairs in [-1,1]^n x [-1,1]^n and reports the
    minimum residual (Euclidean inner product and norm); passes iff the
    minimum stays above ``tol``.
    """
    if samples < 1:
        raise ValueError("samples must be >= 1")
    mat = np.asarray(A, dtype=float)
    n = mat.shape[0]
    rng = np.random.default_rng(seed)
    draws = rng.uniform(-1.0, 1.0, size=(samples, 2 * n))
    diff = draws[:, :n] - draws[:, n:]
    a_diff = diff @ mat.T
    residuals = np.sum(a_diff * diff, axis=1) - alpha * np.sum(a_diff * a_diff, axis=1)
    worst = float(np.min(residuals))
    return CocoercivityCheck(passed=worst >= tol, worst_residual=worst, samples=samples)


def _neighborhood_lambdas(lambda_bar: Param, radius: float, rng, count: int) -> list[Param]:
    """Deterministic probe set: the center, the axis extremes, and random
    interior points of the sup-norm ball."""
    probes = [np.array(lambda_bar)]
    for j in range(lambda_bar.size):
        for sign in (-1.0, 1.0):
            lam = np.array(lambda_bar)
            lam[j] += sign * radius
            probes.append(lam)
    for _ in range(count):
        probes.append(lambda_bar + rng.uniform(-radius, radius, lambda_bar.size))
    return probes


def cocoercive_family(
    m: CocoerciveModel, samples: int = 2000, seed: int = 42
) -> ParametricFamily:
    """Build the parametric family with right-hand side -A_lam x - gamma*v.

    Validates the cocoercivity condition and 1/alpha < gamma on a probe
    set of parameters; the parameter Lipschitz constant is the sampled
    supremum of |A_lam(u) - A_mu(u)| / |lam - mu|.

    Raises HypothesisViolationError when a probe parameter fails either
    condition.
    """
    rng = np.random.default_rng(seed)
    n = m.u0.size
    probes = _neighborhood_lambdas(m.lambda_bar, m.radius, rng, count=8)
    for lam in probes:
        alpha = float(m.alpha_of_lambda(lam))
        if alpha <= 0 or not 1.0 / alpha < m.gamma:
            raise HypothesisViolationError(
                f"need 1/alpha < gamma; got alpha={alpha:.6g}, gamma={m.gamma:.6g} at lam={lam}"
            )
        check = validate_cocoercivity(m.A_of_lambda(lam), alpha, samples, seed=seed)
        if not check.passed:
            raise HypothesisViolationError(
                f"cocoercivity residual {check.worst_residual:.3e} < -1e-12 at lam={lam}"
            )

    lp_hat = 0.0
    for _ in range(max(64, samples // 16)):
        lam_a = m.lambda_bar + rng.uniform(-m.radius, m.radius, m.lambda_bar.size)
        lam_b = m.lambda_bar + rng.uniform(-m.radius, m.radius, m.lambda_bar.size)
        dist = param_distance(lam_a, lam_b)
        if dist == 0.0:
            continue
        u = rng.uniform(-1.0, 1.0, n)
        gap = NormKind.SUP.of(m.A_of_lambda(lam_a) @ u - m.A_of_lambda(lam_b) @ u)
        lp_hat = max(lp_hat, gap / dist)

    gamma = float(m.gamma)

    def build(lam: Param) -> SecondOrderIVP:
        lam = as_param(lam)
        A = np.asarray(m.A_of_lambda(lam), dtype=float)

        def rhs(t: float, x: np.ndarray, v: np.ndarray) -> np.ndarray:
            return -(A @ x) - gamma * v

        x0 = m.u0 + _ic_shift(lam, m.lambda_bar, m.perturb_initial, n)
        return SecondOrderIVP(dim=n, rhs=rhs, x0=x0, v0=m.v0, horizon=m.horizon)

    return ParametricFamily(
        name="cocoercive",
        lambda_bar=m.lambda_bar,
        build=build,
        lip=LipschitzData(L=gamma, Lp=lp_hat),
        neighborhood_radius=m.radius,
    )


def psd_modulus(A) -> float:
    """Cocoercivity modulus of a symmetric PSD matrix: 1/lambda_max."""
    eigs = np.linalg.eigvalsh(np.asarray(A, dtype=float))
    top = float(eigs[-1])
    if top <= 0:
        raise ValueError("matrix must have a positive top eigenvalue")
    return 1.0 / top


def default_cocoercive_model(
    A=((1.0, 0.0), (0.0, 2.0)),
    gamma: float = 2.5,
    u0=(1.0, 1.0),
    v0=(0.0, 1.0),
    horizon: float = 1.0,
    lambda_bar: float = 0.0,
    radius: float = 0.1,
    perturb_initial: bool = False,
) -> CocoerciveModel:
    """Shipped instance: A_lam = A + (lam - lam_bar)*I, modulus from the
    actual top eigenvalue, so the gamma margin is checked honestly."""
    base = np.asarray(A, dtype=float)

    def A_of_lambda(lam: Param) -> np.ndarray:
        return base + float(lam[0] - np.atleast_1d(lambda_bar)[0]) * np.eye(base.shape[0])

    def alpha_of_lambda(lam: Param) -> float:
        return psd_modulus(A_of_lambda(lam))

    return CocoerciveModel(
        A_of_lambda=A_of_lambda,
        gamma=gamma,
        u0=u0,
        v0=v0,
        alpha_of_lambda=alpha_of_lambda,
        horizon=horizon,
        lambda_bar=lambda_bar,
        radius=radius,
        perturb_initial=perturb_initial,
    )


# ---------------------------------------------------------------------------
# RLC circuits


class RLCVariant(Enum):
    PARALLEL = "parallel"
    SERIES = "series"


@dataclass(frozen=True)
class RLCModel:
    """Current (parallel/tuning) or charge (series) equation of an RLC
    circuit on [0, 1]:  x'' + tau*x' = g_lam(t, x),  x(0) = x'(0) = 0.

    For the parallel variant the forcing must obey the smallness envelope
    |g_lam(s, x)| <= (tau/2)*w(s)*|x| with max w = e^(-alpha0), alpha0 > e,
    which underpins existence of the equivalent integral-equation solution.
    ``beta``/``Lp`` may declare the x- and lambda-Lipschitz constants of
    g; when absent they are estimated by sampling on |x| <= x_box.
    """

    tau: float
    g_lambda: Callable[[float, float, Param], float]
    variant: RLCVariant = RLCVariant.PARALLEL
    w: Callable[[float], float] = lambda s: math.exp(-3.0)
    alpha0: float = 3.0
    lambda_bar: Param = 0.0
    radius: float = 0.25
    perturb_initial: bool = False
    beta: float | None = None
    Lp: float | None = None
    x_box: float = 1.0
    horizon: float = 1.0

    def __post_init__(self):
        object.__setattr__(self, "lambda_bar", as_param(self.lambda_bar))
        if self.tau <= 0:
            raise ValueError("tau must be > 0")


def default_rlc_model(
    tau: float = 1.0,
    lambda_bar: float = 0.0,
    radius: float = 0.25,
    perturb_initial: bool = True,
) -> RLCModel:
    """Shipped tuning-circuit forcing g(t, x) = (tau/2)*e^(-3)*sin(x + lam*t)*x.

    |sin| <= 1 gives the envelope with w = e^(-3) and alpha0 = 3 > e;
    derivative bounds on |x| <= x_box give the declared Lipschitz data:
    |dg/dx| <= (tau/2)e^(-3)(x_box + 1), |dg/dlam| <= (tau/2)e^(-3)*x_box.
    """
    scale = 0.5 * tau * math.exp(-3.0)
    x_box = 1.0

    def g(t: float, x: float, lam: Param) -> float:
        return scale * math.sin(x + float(lam[0]) * t) * x

    return RLCModel(
        tau=tau,
        g_lambda=g,
        variant=RLCVariant.PARALLEL,
        w=lambda s: math.exp(-3.0),
        alpha0=3.0,
        lambda_bar=lambda_bar,
        radius=radius,
        perturb_initial=perturb_initial,
        beta=scale * (x_box + 1.0),
        Lp=scale * x_box,
        x_box=x_box,
    )


def series_rlc_model(
    R: float = 5.0,
    L: float = 10.0,
    C: float = 10.0,
    v_amp: float = 1.0,
    lambda_bar: float = 0.0,
    radius: float = 0.25,
    perturb_initial: bool = False,
) -> RLCModel:
    """Series-circuit charge equation with voltage source V(t) = v_amp*sin(2*pi*t),
    perturbed multiplicatively: V_lam = (1 + lam)*V.  The forcing is
    g_lam(t, x) = V_lam(t)/L - x/(L*C), linear in x and lam, so the
    Lipschitz data is exact: beta = 1/(L*C), Lp = v_amp/L.

    The smallness envelope of the tuning circuit does not apply to a
    nonzero source; only the Lipschitz hypotheses are declared (and they
    are all the stability estimate needs).
    """
    tau = R / L
    inv_lc = 1.0 / (L * C)

    def g(t: float, x: float, lam: Param) -> float:
        voltage = (1.0 + float(lam[0])) * v_amp * math.sin(2.0 * math.pi * t)
        return voltage / L - inv_lc * x

    return RLCModel(
        tau=tau,
        g_lambda=g,
        variant=RLCVariant.SERIES,
        lambda_bar=lambda_bar,
        radius=radius,
        perturb_initial=perturb_initial,
        beta=inv_lc,
        Lp=v_amp / L,
        x_box=1.0,
    )


def rlc_family(m: RLCModel, samples: int = 10000, seed: int = 42) -> ParametricFamily:
    """Build the RLC family with right-hand side g_lam(t, x) - tau*v on [0, 1].

    Parallel variant: validates the envelope |g_lam(s,x)| <= (tau/2)w(s)|x|
    on ``samples`` random (s, x, lam) triples and the normalization
    max w <= e^(-alpha0) with alpha0 > e.  Raises HypothesisViolationError
    on any sampled failure.
    """
    rng = np.random.default_rng(seed)
    if m.variant is RLCVariant.PARALLEL:
        if not m.alpha0 > math.e:
            raise HypothesisViolationError(f"alpha0 must exceed e, got {m.alpha0}")
        cap = math.exp(-m.alpha0)
        s_grid = np.linspace(0.0, 1.0, 2001)
        w_vals = np.array([float(m.w(s)) for s in s_grid])
        if np.any(w_vals <= 0) or float(np.max(w_vals)) > cap * (1.0 + 1e-9):
            raise HypothesisViolationError(
                f"envelope w exceeds e^(-alpha0)={cap:.6g} (max {np.max(w_vals):.6g})"
            )
        draws = rng.uniform(0.0, 1.0, size=(samples, 3))
        for s, ux, ul in draws:
            x = (2.0 * ux - 1.0) * m.x_box
            lam = m.lambda_bar + (2.0 * ul - 1.0) * m.radius
            if abs(m.g_lambda(s, x, lam)) > 0.5 * m.tau * m.w(s) * abs(x) + 1e-12:
                raise HypothesisViolationError(
                    f"forcing envelope violated at s={s:.4g}, x={x:.4g}, lam={lam}"
                )

    beta = m.beta
    lp = m.Lp
    if beta is None or lp is None:
        beta_hat = 0.0
        lp_hat = 0.0
        for _ in range(samples):
            s = rng.uniform(0.0, 1.0)
            xa, xb = rng.uniform(-m.x_box, m.x_box, 2)
            lam_a = m.lambda_bar + rng.uniform(-m.radius, m.radius, m.lambda_bar.size)
            lam_b = m.lambda_bar + rng.uniform(-m.radius, m.radius, m.lambda_bar.size)
            if xa != xb:
                beta_hat = max(
                    beta_hat,
                    abs(m.g_lambda(s, xa, lam_a) - m.g_lambda(s, xb, lam_a)) / abs(xa - xb),
                )
            dist = param_distance(lam_a, lam_b)
            if dist > 0:
                lp_hat = max(
                    lp_hat,
                    abs(m.g_lambda(s, xa, lam_a) - m.g_lambda(s, xa, lam_b)) / dist,
                )
        beta = beta if beta is not None else beta_hat
        lp = lp if lp is not None else lp_hat

    tau = float(m.tau)

    def build(lam: Param) -> SecondOrderIVP:
        lam = as_param(lam)

        def rhs(t: float, x: np.ndarray, v: np.ndarray) -> np.ndarray:
            return np.array([m.g_lambda(t, float(x[0]), lam) - tau * float(v[0])])

        x0 = np.zeros(1) + _ic_shift(lam, m.lambda_bar, m.perturb_initial, 1)
        return SecondOrderIVP(dim=1, rhs=rhs, x0=x0, v0=np.zeros(1), horizon=1.0)

    return ParametricFamily(
        name=f"rlc-{m.variant.value}",
        lambda_bar=m.lambda_bar,
        build=build,
        lip=LipschitzData(L=max(beta, tau), Lp=lp),
        neighborhood_radius=m.radius,
    )


def green_kernel(tau: float, t, s):
    """Kernel converting the zero-data RLC problem into an integral equation:
    (1/tau)*(1 - e^(tau*(s - t))) for 0 <= s <= t <= 1, zero for s > t."""
    if tau <= 0:
        raise ValueError("tau must be > 0")
    t = np.asarray(t, dtype=float)
    s = np.asarray(s, dtype=float)
    value = -np.expm1(tau * (s - t)) / tau
    out = np.where(s <= t, value, 0.0)
    if out.ndim == 0:
        return float(out)
    return out


def rlc_integral_residual(traj: Trajectory, m: RLCModel, lam) -> float:
    """Max over the grid of |x(t) - int_0^1 G(t,s) g_lam(s, x(s)) ds|
    (trapezoid quadrature).  Small residuals certify that the integrated
    trajectory also solves the equivalent integral equation; the
    representation assumes zero initial data.
    """
    lam = as_param(lam)
    grid = traj.grid
    if abs(grid[-1] - 1.0) > 1e-12:
        raise GridMismatchError("RLC trajectories live on [0, 1]")
    if traj.dim != 1:
        raise DimMismatchError("RLC state is scalar")
    x = traj.states[:, 0]
    forcing = np.array([m.g_lambda(float(s), float(xs), lam) for s, xs in zip(grid, x)])
    kernel = green_kernel(m.tau, grid[:, None], grid[None, :])
    reconstructed = np.trapezoid(kernel * forcing[None, :], grid, axis=1)
    return float(np.max(np.abs(x - reconstructed)))


# ---------------------------------------------------------------------------
# linear control systems


@dataclass(frozen=True)
class LCSModel:
    """Second-order linear control system with observation:

        x'' = A x + gamma*x' + B u(t)
        z   = C (x + x') + D u(t)

    ``perturbation`` maps a parameter to (A_lam, B_lam, D_lam, x0_lam,
    v0_lam); the nominal problem is recovered at lambda_bar.  ``r`` is the
    radius of the state ball on which the parameter Lipschitz constant of
    the right-hand side is declared.
    """

    A: np.ndarray
    B: np.ndarray
    C: np.ndarray
    D: np.ndarray
    gamma: float
    u_ctl: Callable[[float], np.ndarray]
    x0: np.ndarray
    v0: np.ndarray
    perturbation: Callable[[Param], tuple]
    lambda_bar: Param = 0.0
    radius: float = 0.2
    r: float = 0.5
    horizon: float = 1.0

    def __post_init__(self):
        for name in ("A", "B", "C", "D"):
            mat = np.asarray(getattr(self, name), dtype=float)
            if mat.shape != (2, 2):
                raise DimMismatchError(f"{name} must be 2x2, got {mat.shape}")
            object.__setattr__(self, name, mat)
        object.__setattr__(self, "x0", as_vector(self.x0, 2, "x0"))
        object.__setattr__(self, "v0", as_vector(self.v0, 2, "v0"))
        object.__setattr__(self, "lambda_bar", as_param(self.lambda_bar))
        if self.gamma < 0:
            raise ValueError("gamma must be >= 0")


def section5_model(
    gamma: float = 1.0,
    horizon: float = 1.0,
    r: float = 0.5,
    radius: float = 0.2,
    u=(1.0, 1.0),
    perturb_initial: bool = False,
    A=((0.0, -3.0), (1.0, -4.0)),
    B=((0.0, 0.0), (0.0, 0.0)),
    C=((1.0, 1.0), (1.0, 1.0)),
    D=((0.0, 0.0), (0.0, 0.0)),
    x0=(1.0, 1.0),
    v0=(0.0, 1.0),
    lambda_bar: float = 0.0,
) -> LCSModel:
    """The worked numerical example: diagonal perturbation of A and a
    shared scalar perturbation of B and D,

        A_lam = A + (lam - lam_bar)*I,   B_lam = D_lam = (lam - lam_bar)*I,

    constant control u, and (optionally) initial position perturbed to
    x0 + (lam - lam_bar)*(1, 1) with the velocity held fixed.
    """
    base_A = np.asarray(A, dtype=float)
    base_B = np.asarray(B, dtype=float)
    base_D = np.asarray(D, dtype=float)
    base_x0 = np.asarray(x0, dtype=float)
    base_v0 = np.asarray(v0, dtype=float)
    u_vec = np.asarray(u, dtype=float)
    lam_bar = np.atleast_1d(np.asarray(lambda_bar, dtype=float))

    def perturbation(lam: Param):
        delta = float(lam[0] - lam_bar[0])
        eye = np.eye(2)
        x0_lam = base_x0 + (delta * np.ones(2) if perturb_initial else 0.0)
        return (base_A + delta * eye, base_B + delta * eye, base_D + delta * eye, x0_lam, base_v0)

    return LCSModel(
        A=base_A,
        B=base_B,
        C=C,
        D=base_D,
        gamma=gamma,
        u_ctl=lambda t: u_vec,
        x0=base_x0,
        v0=base_v0,
        perturbation=perturbation,
        lambda_bar=lambda_bar,
        radius=radius,
        r=r,
        horizon=horizon,
    )


def lcs_family(
    m: LCSModel, norm: NormKind = NormKind.SUP, samples: int = 200, seed: int = 42
) -> ParametricFamily:
    """Build the control-system family with right-hand side
    A_lam x + gamma*v + B_lam u(t).

    Declared constants: L = max(alpha, gamma) with alpha the sampled
    supremum of |A_lam| over the neighborhood, and Lp = r + |x0| + beta
    with beta the sampled parameter-Lipschitz constant of B_lam and D_lam.
    Raises HypothesisViolationError when the control exceeds unit norm on
    a sampled grid.
    """
    rng = np.random.default_rng(seed)
    for t in np.linspace(0.0, m.horizon, 101):
        if norm.of(m.u_ctl(float(t))) > 1.0 + 1e-12:
            raise HypothesisViolationError(f"control norm exceeds 1 at t={t:.4g}")

    probes = _neighborhood_lambdas(m.lambda_bar, m.radius, rng, count=32)
    alpha = 0.0
    beta = 0.0
    for lam in probes:
        A_lam, B_lam, D_lam, _, _ = m.perturbation(lam)
        alpha = max(alpha, norm.matrix(A_lam))
        for mu in probes:
            dist = param_distance(lam, mu)
            if dist == 0.0:
                continue
            _, B_mu, D_mu, _, _ = m.perturbation(mu)
            beta = max(
                beta,
                norm.matrix(B_lam - B_mu) / dist,
                norm.matrix(D_lam - D_mu) / dist,
            )

    L = max(alpha, m.gamma)
    Lp = m.r + norm.of(m.x0) + beta
    lip = LipschitzData(L=L, Lp=Lp)
    normC = norm.matrix(m.C)
    constants = lcs_constants(normC, L, Lp, m.horizon, beta, conservative=True)
    constants_literal = lcs_constants(normC, L, Lp, m.horizon, beta, conservative=False)
    gamma = float(m.gamma)

    def build(lam: Param) -> SecondOrderIVP:
        lam = as_param(lam)
        A_lam, B_lam, _, x0_lam, v0_lam = m.perturbation(lam)
        A_lam = np.asarray(A_lam, dtype=float)
        B_lam = np.asarray(B_lam, dtype=float)

        def rhs(t: float, x: np.ndarray, v: np.ndarray) -> np.ndarray:
            return A_lam @ x + gamma * v + B_lam @ m.u_ctl(t)

        return SecondOrderIVP(dim=2, rhs=rhs, x0=x0_lam, v0=v0_lam, horizon=m.horizon)

    def D_of_lambda(lam: Param) -> np.ndarray:
        return np.asarray(m.perturbation(as_param(lam))[2], dtype=float)

    return ParametricFamily(
        name="lcs",
        lambda_bar=m.lambda_bar,
        build=build,
        lip=lip,
        neighborhood_radius=m.radius,
        observation=ObservationSpec(
            C=m.C,
            D_of_lambda=D_of_lambda,
            u_ctl=m.u_ctl,
            constants=constants,
            constants_literal=constants_literal,
        ),
    )


def observe(traj: Trajectory, C, D_lam, u_ctl: Callable[[float], np.ndarray]) -> np.ndarray:
    """Observation path z_i = C(x(t_i) + v(t_i)) + D_lam u(t_i) on the grid."""
    C = np.asarray(C, dtype=float)
    D_lam = np.asarray(D_lam, dtype=float)
    if C.ndim != 2 or C.shape[1] != traj.dim:
        raise DimMismatchError(f"C must map states of length {traj.dim}")
    if D_lam.ndim != 2 or D_lam.shape[0] != C.shape[0]:
        raise DimMismatchError("D must have the same output dimension as C")
    z = np.empty((traj.grid.size, C.shape[0]))
    for i, t in enumerate(traj.grid):
        u = np.asarray(u_ctl(float(t)), dtype=float)
        if u.shape != (D_lam.shape[1],):
            raise DimMismatchError("control dimension does not match D")
        z[i] = C @ (traj.states[i] + traj.velocities[i]) + D_lam @ u
    return z


# ---------------------------------------------------------------------------
# JSON model configuration

_COMMON_KEYS = {"model", "lambda_bar", "lambdas", "perturb_initial", "steps", "norm", "seed", "radius"}
_ALLOWED_KEYS = {
    "lcs": _COMMON_KEYS | {"T", "gamma", "matrices", "x0", "v0", "u", "r"},
    "rlc": _COMMON_KEYS | {"tau", "alpha0", "variant", "R", "L", "C", "v_amp"},
    "cocoercive": _COMMON_KEYS | {"T", "gamma", "matrices", "x0", "v0"},
}

_DEFAULTS = {
    "T": 1.0,
    "r": 0.5,
    "lambda_bar": 0.0,
    "lambdas": [0.2, 0.1, 0.05, 0.01],
    "perturb_initial": False,
    "steps": 1000,
    "norm": "sup",
    "seed": 42,
    "tau": 1.0,
    "alpha0": 3.0,
    "variant": "parallel",
}

# gamma defaults differ: the worked control example uses 1; the shipped
# cocoercive instance needs gamma above 1/alpha = 2 to satisfy its margin
_GAMMA_DEFAULT = {"lcs": 1.0, "cocoercive": 2.5}


def _matrix_from(entry, name: str) -> np.ndarray:
    arr = np.asarray(entry, dtype=float)
    if arr.size != 4:
        raise ConfigError(f"matrix {name} must have 4 entries (row-major 2x2)")
    return arr.reshape(2, 2)


def validate_model_config(cfg: dict) -> dict:
    """Normalize a model-config dict, filling defaults and rejecting
    unknown keys (fail-closed).  Returns a plain JSON-serializable dict.
    """
    if not isinstance(cfg, dict):
        raise ConfigError("config must be a JSON object")
    model = cfg.get("model")
    if model not in _ALLOWED_KEYS:
        raise ConfigError(f"config key 'model' must be one of {sorted(_ALLOWED_KEYS)}, got {model!r}")
    unknown = set(cfg) - _ALLOWED_KEYS[model]
    if unknown:
        raise ConfigError(f"unknown config keys for model {model!r}: {sorted(unknown)}")
    out = {k: (list(v) if isinstance(v, list) else dict(v) if isinstance(v, dict) else v) for k, v in cfg.items()}
    for key in _ALLOWED_KEYS[model]:
        if key in out or key in ("matrices", "x0", "v0", "u", "radius", "gamma", "R", "L", "C", "v_amp"):
            continue
        if key in _DEFAULTS:
            value = _DEFAULTS[key]
            out[key] = list(value) if isinstance(value, list) else value
    if "gamma" in _ALLOWED_KEYS[model]:
        out.setdefault("gamma", _GAMMA_DEFAULT[model])
    try:
        if "radius" not in out:
            lams = np.atleast_1d(np.asarray(out["lambdas"], dtype=float))
            bar = float(np.atleast_1d(np.asarray(out["lambda_bar"], dtype=float))[0])
            spread = float(np.max(np.abs(lams - bar))) if lams.size else 0.0
            out["radius"] = max(spread, 1e-6)
        NormKind.from_tag(out["norm"])
    except (TypeError, ValueError) as exc:
        raise ConfigError(str(exc)) from None
    if not isinstance(out.get("lambdas"), list) or not out["lambdas"]:
        raise ConfigError("config key 'lambdas' must be a nonempty list")
    if isinstance(out["steps"], bool) or not isinstance(out["steps"], int) or out["steps"] < 2:
        raise ConfigError("config key 'steps' must be an integer >= 2")
    if model == "lcs":
        out.setdefault("matrices", {"A": [0.0, -3.0, 1.0, -4.0], "B": [0.0] * 4, "C": [1.0] * 4, "D": [0.0] * 4})
        out.setdefault("x0", [1.0, 1.0])
        out.setdefault("v0", [0.0, 1.0])
        out.setdefault("u", [1.0, 1.0])
        mats = out["matrices"]
        if not isinstance(mats, dict) or set(mats) - {"A", "B", "C", "D"}:
            raise ConfigError("config key 'matrices' must be an object with keys among A,B,C,D")
    if model == "cocoercive":
        out.setdefault("matrices", {"A": [1.0, 0.0, 0.0, 2.0]})
        out.setdefault("x0", [1.0, 1.0])
        out.setdefault("v0", [0.0, 1.0])
        out.setdefault("gamma", 2.5)
        if set(out["matrices"]) - {"A"}:
            raise ConfigError("cocoercive config accepts only matrix A")
    if model == "rlc":
        if out["variant"] not in ("parallel", "series"):
            raise ConfigError("config key 'variant' must be 'parallel' or 'series'")
        if out["variant"] == "series":
            out.setdefault("R", 5.0)
            out.setdefault("L", 10.0)
            out.setdefault("C", 10.0)
            out.setdefault("v_amp", 1.0)
    return out


def family_from_config(cfg: dict) -> tuple[ParametricFamily, list, int, NormKind, int]:
    """Build the configured family.

    Returns (family, lambdas, steps, norm, seed).  ``cfg`` must already be
    validated by validate_model_config.
    """
    cfg = validate_model_config(cfg)
    norm = NormKind.from_tag(cfg["norm"])
    steps = int(cfg["steps"])
    seed = int(cfg["seed"])
    try:
        lambdas = [float(v) for v in cfg["lambdas"]]
    except (TypeError, ValueError):
        raise ConfigError("config key 'lambdas' must contain numbers") from None
    model = cfg["model"]
    try:
        return _build_family(cfg, model, norm, seed), lambdas, steps, norm, seed
    except (DimMismatchError, TypeError, ValueError) as exc:
        raise ConfigError(f"invalid model data: {exc}") from exc


def _build_family(cfg: dict, model: str, norm: NormKind, seed: int) -> ParametricFamily:
    if model == "lcs":
        mats = cfg["matrices"]
        m = section5_model(
            gamma=float(cfg["gamma"]),
            horizon=float(cfg["T"]),
            r=float(cfg["r"]),
            radius=float(cfg["radius"]),
            u=cfg["u"],
            perturb_initial=bool(cfg["perturb_initial"]),
            A=_matrix_from(mats.get("A", [0.0, -3.0, 1.0, -4.0]), "A"),
            B=_matrix_from(mats.get("B", [0.0] * 4), "B"),
            C=_matrix_from(mats.get("C", [1.0] * 4), "C"),
            D=_matrix_from(mats.get("D", [0.0] * 4), "D"),
            x0=cfg["x0"],
            v0=cfg["v0"],
            lambda_bar=float(cfg["lambda_bar"]),
        )
        family = lcs_family(m, norm=norm, seed=seed)
    elif model == "cocoercive":
        m = default_cocoercive_model(
            A=_matrix_from(cfg["matrices"].get("A", [1.0, 0.0, 0.0, 2.0]), "A"),
            gamma=float(cfg["gamma"]),
            u0=cfg["x0"],
            v0=cfg["v0"],
            horizon=float(cfg["T"]),
            lambda_bar=float(cfg["lambda_bar"]),
            radius=float(cfg["radius"]),
            perturb_initial=bool(cfg["perturb_initial"]),
        )
        family = cocoercive_family(m, seed=seed)
    else:
        if cfg["variant"] == "parallel":
            m = default_rlc_model(
                tau=float(cfg["tau"]),
                lambda_bar=float(cfg["lambda_bar"]),
                radius=float(cfg["radius"]),
                perturb_initial=bool(cfg["perturb_initial"]),
            )
        else:
            m = series_rlc_model(
                R=float(cfg["R"]),
                L=float(cfg["L"]),
                C=float(cfg["C"]),
                v_amp=float(cfg["v_amp"]),
                lambda_bar=float(cfg["lambda_bar"]),
                radius=float(cfg["radius"]),
                perturb_initial=bool(cfg["perturb_initial"]),
            )
        family = rlc_family(m, seed=seed)
    return family
