"""Second-order initial-value problems and their fixed-step integration.

A second-order problem  x'' = f(t, x, x')  is integrated by augmenting the
state to u = (x, v) and running the classical 4th-order Runge-Kutta method
on the equivalent first-order system.  A uniform step keeps grids aligned
across problems that share a horizon, so trajectory deviations can be
compared sample-by-sample without interpolation.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Callable

import numpy as np

from .errors import DimMismatchError, GridMismatchError, NonfiniteStateError

# Right-hand side of x'' = f(t, x, v); returns the acceleration vector.
SecondOrderRhs = Callable[[float, np.ndarray, np.ndarray], np.ndarray]
# Right-hand side of u' = F(t, u) on the augmented state.
FirstOrderRhs = Callable[[float, np.ndarray], np.ndarray]


def as_vector(value, dim: int | None = None, name: str = "vector") -> np.ndarray:
    """Coerce to a finite, read-only float64 1-D array of length >= 1."""
    arr = np.array(value, dtype=float, copy=True)
    arr = np.atleast_1d(arr)
    if arr.ndim != 1:
        raise DimMismatchError(f"{name} must be 1-D, got shape {arr.shape}")
    if arr.size < 1:
        raise DimMismatchError(f"{name} must have length >= 1")
    if dim is not None and arr.size != dim:
        raise DimMismatchError(f"{name} must have length {dim}, got {arr.size}")
    if not np.all(np.isfinite(arr)):
        raise ValueError(f"{name} has non-finite entries")
    arr.setflags(write=False)
    return arr


class NormKind(Enum):
    """Working vector norm: max-abs component or Euclidean length."""

    SUP = "sup"
    EUCLIDEAN = "euclid"

    @classmethod
    def from_tag(cls, tag: str) -> "NormKind":
        for kind in cls:
            if kind.value == tag:
                return kind
        raise ValueError(f"unknown norm tag {tag!r} (expected 'sup' or 'euclid')")

    def of(self, v) -> float:
        v = np.asarray(v, dtype=float)
        if self is NormKind.SUP:
            return float(np.max(np.abs(v))) if v.size else 0.0
        return float(np.sqrt(np.sum(v * v)))

    def rows(self, arr: np.ndarray) -> np.ndarray:
        """Norm of each row of a 2-D array."""
        arr = np.asarray(arr, dtype=float)
        if self is NormKind.SUP:
            return np.max(np.abs(arr), axis=1)
        return np.sqrt(np.sum(arr * arr, axis=1))

    def matrix(self, m: np.ndarray) -> float:
        """Induced operator norm (max abs row sum for SUP, spectral for EUCLIDEAN)."""
        m = np.asarray(m, dtype=float)
        if self is NormKind.SUP:
            return float(np.max(np.sum(np.abs(m), axis=1)))
        return float(np.linalg.norm(m, 2))


@dataclass(frozen=True)
class SecondOrderIVP:
    """x'' = rhs(t, x, v) on [0, horizon] with x(0) = x0, x'(0) = v0."""

    dim: int
    rhs: SecondOrderRhs
    x0: np.ndarray
    v0: np.ndarray
    horizon: float

    def __post_init__(self):
        if self.dim < 1:
            raise DimMismatchError("dim must be >= 1")
        object.__setattr__(self, "x0", as_vector(self.x0, self.dim, "x0"))
        object.__setattr__(self, "v0", as_vector(self.v0, self.dim, "v0"))
        if not (np.isfinite(self.horizon) and self.horizon > 0):
            raise ValueError("horizon must be positive and finite")


@dataclass(frozen=True)
class FirstOrderIVP:
    """u' = rhs(t, u) on [0, horizon] with u(0) = u0."""

    dim: int
    rhs: FirstOrderRhs
    u0: np.ndarray
    horizon: float

    def __post_init__(self):
        object.__setattr__(self, "u0", as_vector(self.u0, self.dim, "u0"))


@dataclass(frozen=True)
class Trajectory:
    """Sampled solution on a strictly increasing grid t_0 = 0 < ... < t_M = T.

    ``err_est`` is the integrator's global error estimate in the working
    norm, obtained from a step-halving comparison.
    """

    grid: np.ndarray
    states: np.ndarray
    velocities: np.ndarray
    err_est: float

    def __post_init__(self):
        grid = np.asarray(self.grid, dtype=float)
        states = np.asarray(self.states, dtype=float)
        velocities = np.asarray(self.velocities, dtype=float)
        if grid.ndim != 1 or states.ndim != 2 or velocities.ndim != 2:
            raise DimMismatchError("grid must be 1-D; states/velocities 2-D")
        if not (states.shape == velocities.shape and states.shape[0] == grid.size):
            raise DimMismatchError("states/velocities must be (len(grid), n)")
        if grid[0] != 0.0 or np.any(np.diff(grid) <= 0):
            raise ValueError("grid must be strictly increasing and start at 0")
        if not (np.isfinite(self.err_est) and self.err_est >= 0):
            raise ValueError("err_est must be a nonnegative finite scalar")
        for name, arr in (("grid", grid), ("states", states), ("velocities", velocities)):
            arr = arr.copy()
            arr.setflags(write=False)
            object.__setattr__(self, name, arr)

    @property
    def dim(self) -> int:
        return self.states.shape[1]

    @property
    def horizon(self) -> float:
        return float(self.grid[-1])


def augment(ivp: SecondOrderIVP) -> FirstOrderIVP:
    """Rewrite x'' = f(t, x, v) as u' = (v, f(t, x, v)) with u = (x, v)."""
    n = ivp.dim
    f = ivp.rhs

    def rhs(t: float, u: np.ndarray) -> np.ndarray:
        x = u[:n]
        v = u[n:]
        return np.concatenate((v, np.asarray(f(t, x, v), dtype=float)))

    u0 = np.concatenate((ivp.x0, ivp.v0))
    return FirstOrderIVP(dim=2 * n, rhs=rhs, u0=u0, horizon=ivp.horizon)


def _rk4_path(rhs: FirstOrderRhs, u0: np.ndarray, horizon: float, steps: int) -> np.ndarray:
    h = horizon / steps
    out = np.empty((steps + 1, u0.size))
    out[0] = u0
    u = np.array(u0, dtype=float)
    # overflow surfaces as the explicit finiteness check, not a warning
    with np.errstate(over="ignore", invalid="ignore"):
        for i in range(steps):
            t = i * h
            k1 = rhs(t, u)
            k2 = rhs(t + 0.5 * h, u + (0.5 * h) * k1)
            k3 = rhs(t + 0.5 * h, u + (0.5 * h) * k2)
            k4 = rhs(t + h, u + h * k3)
            u = u + (h / 6.0) * (k1 + 2.0 * (k2 + k3) + k4)
            if not np.all(np.isfinite(u)):
                t_bad = (i + 1) * h
                raise NonfiniteStateError(
                    f"non-finite state at t={t_bad:.6g} (step {i + 1}/{steps})", time=t_bad
                )
            out[i + 1] = u
    return out


def integrate(ivp: SecondOrderIVP, steps: int, norm: NormKind = NormKind.SUP) -> Trajectory:
    """Integrate with classical RK4 at uniform step h = horizon/steps.

    The returned samples come from the requested grid; the global error
    estimate is the maximum deviation, in the working norm on the
    augmented state, between this run and a second run at half the step.

    Raises NonfiniteStateError as soon as any step produces NaN/Inf.
    """
    if steps < 2:
        raise ValueError("steps must be >= 2")
    aug = augment(ivp)
    coarse = _rk4_path(aug.rhs, aug.u0, aug.horizon, steps)
    fine = _rk4_path(aug.rhs, aug.u0, aug.horizon, 2 * steps)
    err = float(np.max(norm.rows(coarse - fine[::2])))
    n = ivp.dim
    grid = np.linspace(0.0, ivp.horizon, steps + 1)
    return Trajectory(grid=grid, states=coarse[:, :n], velocities=coarse[:, n:], err_est=err)


@dataclass(frozen=True)
class DeviationResult:
    """Per-grid-time deviations between two trajectories and their suprema."""

    state_dev: np.ndarray
    state_sup: float
    velocity_dev: np.ndarray
    velocity_sup: float


def deviation(a: Trajectory, b: Trajectory, norm: NormKind = NormKind.SUP) -> DeviationResult:
    """Pointwise norm of the state/velocity gaps on the shared grid.

    Raises GridMismatchError unless both trajectories were sampled on the
    identical grid with identical dimension.
    """
    if a.grid.shape != b.grid.shape or not np.array_equal(a.grid, b.grid):
        raise GridMismatchError("trajectories sampled on different grids")
    if a.dim != b.dim:
        raise DimMismatchError(f"dimension mismatch: {a.dim} vs {b.dim}")
    sd = norm.rows(a.states - b.states)
    vd = norm.rows(a.velocities - b.velocities)
    return DeviationResult(
        state_dev=sd,
        state_sup=float(np.max(sd)),
        velocity_dev=vd,
        velocity_sup=float(np.max(vd)),
    )


def trajectory_csv(traj: Trajectory) -> str:
    """CSV serialization: header ``t,x_1..x_n,v_1..v_n``, 17 significant digits."""
    n = traj.dim
    header = ",".join(["t"] + [f"x_{j + 1}" for j in range(n)] + [f"v_{j + 1}" for j in range(n)])
    lines = [header]
    for i in range(traj.grid.size):
        cells = [format(traj.grid[i], ".17g")]
        cells += [format(v, ".17g") for v in traj.states[i]]
        cells += [format(v, ".17g") for v in traj.velocities[i]]
        lines.append(",".join(cells))
    return "\n".join(lines) + "\n"
