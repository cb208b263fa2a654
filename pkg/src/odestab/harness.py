"""Perturbation sweeps: integrate, compare against bounds, certify, report.

A sweep integrates the nominal problem once, then each perturbed problem
on the same grid, and tabulates empirical sup deviations next to the
theoretical bounds evaluated at the horizon with the family's declared
Lipschitz constants.  Certification asserts that every margin
(bound - deviation) stays above ``-slack``, where the slack absorbs the
integrator's estimated error:

    slack = max(1e-8, 10*(err_est_nominal + err_est_perturbed))

Failed rows (blow-ups, hypothesis violations) are recorded, not fatal.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .bounds import main_coefficients
from .errors import DegenerateBoxError, OdeStabError
from .models import ParametricFamily, as_param, observe, param_distance
from .ode import NormKind, deviation, integrate

_FMT = ".17g"


def _fmt(value: float | None) -> str:
    return "" if value is None else format(value, _FMT)


@dataclass(frozen=True)
class SamplingBox:
    """Uniform sampling region for Lipschitz estimation: time in
    [0, t_hi], states/velocities/parameters in per-coordinate intervals."""

    x_lo: np.ndarray
    x_hi: np.ndarray
    v_lo: np.ndarray
    v_hi: np.ndarray
    lam_lo: np.ndarray
    lam_hi: np.ndarray
    t_hi: float

    @classmethod
    def for_family(cls, family: ParametricFamily, halfwidth: float = 1.0) -> "SamplingBox":
        """Box centered at the nominal initial data with the family's
        parameter neighborhood."""
        nominal = family.build(family.lambda_bar)
        n = nominal.dim
        x0, v0 = nominal.x0, nominal.v0
        rad = family.neighborhood_radius
        return cls(
            x_lo=x0 - halfwidth * np.ones(n),
            x_hi=x0 + halfwidth * np.ones(n),
            v_lo=v0 - halfwidth * np.ones(n),
            v_hi=v0 + halfwidth * np.ones(n),
            lam_lo=family.lambda_bar - rad,
            lam_hi=family.lambda_bar + rad,
            t_hi=nominal.horizon,
        )

    def validate(self):
        widths = [
            np.asarray(self.x_hi) - np.asarray(self.x_lo),
            np.asarray(self.v_hi) - np.asarray(self.v_lo),
            np.asarray(self.lam_hi) - np.asarray(self.lam_lo),
        ]
        if any(np.any(w < 0) for w in widths):
            raise ValueError("box bounds must satisfy lo <= hi")
        if all(np.all(w == 0) for w in widths):
            raise DegenerateBoxError("sampling box has zero volume")


@dataclass(frozen=True)
class LipschitzEstimate:
    """Sampled lower estimates of the state and parameter constants."""

    L_hat: float
    Lp_hat: float
    samples: int
    box: str
    seed: int


def estimate_lipschitz(
    family: ParametricFamily,
    box: SamplingBox | None = None,
    samples: int = 10000,
    seed: int = 42,
    norm: NormKind = NormKind.SUP,
) -> LipschitzEstimate:
    """Empirical difference-quotient maxima of the family right-hand side.

    Per sample: one quotient |f_lam(t,x,v) - f_lam(t,x',v')| over
    |x-x'| + |v-v'| for the state constant, and one quotient over a
    parameter pair at a shared point for the parameter constant.  The
    sample stream is a single seeded uniform draw, so estimates are
    deterministic and nested sample sets give nondecreasing maxima.
    """
    if samples < 2:
        raise ValueError("samples must be >= 2")
    if box is None:
        box = SamplingBox.for_family(family)
    box.validate()
    nominal = family.build(family.lambda_bar)
    n = nominal.dim
    p = family.lambda_bar.size
    rng = np.random.default_rng(seed)
    # one draw, fixed column layout, so shorter runs are exact prefixes
    cols = 2 + 6 * n + 3 * p
    unit = rng.uniform(0.0, 1.0, size=(samples, cols))

    def span(lo, hi, u):
        lo = np.asarray(lo, dtype=float)
        hi = np.asarray(hi, dtype=float)
        return lo + (hi - lo) * u

    l_hat = 0.0
    lp_hat = 0.0
    for row in unit:
        i = 0
        t = float(box.t_hi * row[i]); i += 1
        x = span(box.x_lo, box.x_hi, row[i : i + n]); i += n
        x2 = span(box.x_lo, box.x_hi, row[i : i + n]); i += n
        v = span(box.v_lo, box.v_hi, row[i : i + n]); i += n
        v2 = span(box.v_lo, box.v_hi, row[i : i + n]); i += n
        lam = span(box.lam_lo, box.lam_hi, row[i : i + p]); i += p
        ivp = family.build(lam)
        den = norm.of(x - x2) + norm.of(v - v2)
        if den > 0:
            num = norm.of(np.asarray(ivp.rhs(t, x, v)) - np.asarray(ivp.rhs(t, x2, v2)))
            l_hat = max(l_hat, num / den)
        t2 = float(box.t_hi * row[i]); i += 1
        x3 = span(box.x_lo, box.x_hi, row[i : i + n]); i += n
        v3 = span(box.v_lo, box.v_hi, row[i : i + n]); i += n
        lam_a = span(box.lam_lo, box.lam_hi, row[i : i + p]); i += p
        lam_b = span(box.lam_lo, box.lam_hi, row[i : i + p]); i += p
        dist = param_distance(lam_a, lam_b)
        if dist > 0:
            fa = np.asarray(family.build(lam_a).rhs(t2, x3, v3))
            fb = np.asarray(family.build(lam_b).rhs(t2, x3, v3))
            lp_hat = max(lp_hat, norm.of(fa - fb) / dist)
    return LipschitzEstimate(
        L_hat=l_hat, Lp_hat=lp_hat, samples=samples, box=repr(box), seed=seed
    )


@dataclass
class SweepRow:
    """One perturbed problem's deviations, bounds, and margins."""

    lam: np.ndarray
    dev_x: float | None = None
    dev_v: float | None = None
    dev_z: float | None = None
    bound_x: float | None = None
    bound_v: float | None = None
    bound_z: float | None = None
    margin_x: float | None = None
    margin_v: float | None = None
    margin_z: float | None = None
    slack: float = 1e-8
    status: str = "ok"

    def lam_text(self) -> str:
        return ";".join(format(v, _FMT) for v in np.atleast_1d(self.lam))


@dataclass
class SweepReport:
    """Rows in input order plus run metadata (model id, steps, norm, seed,
    declared constants, defaults used)."""

    rows: list[SweepRow]
    meta: dict


def sweep(
    family: ParametricFamily,
    lambdas: Sequence,
    steps: int,
    norm: NormKind = NormKind.SUP,
    seed: int = 42,
) -> SweepReport:
    """Integrate nominal and perturbed problems on a shared grid and fill
    a report row per parameter value.

    Integrator or hypothesis errors in a perturbed run mark that row
    ``failed:<CODE>`` instead of aborting the sweep.  A failure of the
    nominal run is fatal (there is nothing to compare against).
    """
    lam_list = [as_param(lam) for lam in lambdas]
    for lam in lam_list:
        if param_distance(lam, family.lambda_bar) > family.neighborhood_radius * (1 + 1e-12):
            raise ValueError(
                f"lambda {lam} outside the declared neighborhood "
                f"(radius {family.neighborhood_radius})"
            )
    nominal_ivp = family.build(family.lambda_bar)
    nominal = integrate(nominal_ivp, steps, norm)
    coeffs = main_coefficients(family.lip, nominal_ivp.horizon)
    horizon = nominal_ivp.horizon
    obs = family.observation
    z_nom = None
    if obs is not None:
        z_nom = observe(nominal, obs.C, obs.D_of_lambda(family.lambda_bar), obs.u_ctl)

    rows: list[SweepRow] = []
    for lam in lam_list:
        row = SweepRow(lam=lam)
        try:
            ivp = family.build(lam)
            traj = integrate(ivp, steps, norm)
            dev = deviation(nominal, traj, norm)
            dx0 = norm.of(ivp.x0 - nominal_ivp.x0)
            dv0 = norm.of(ivp.v0 - nominal_ivp.v0)
            dlam = param_distance(lam, family.lambda_bar)
            row.dev_x = dev.state_sup
            row.dev_v = dev.velocity_sup
            row.bound_x = float(coeffs.total(horizon, dx0, dv0, dlam))
            row.bound_v = float(coeffs.velocity(horizon, dx0, dv0, dlam))
            row.slack = max(1e-8, 10.0 * (nominal.err_est + traj.err_est))
            row.margin_x = row.bound_x - row.dev_x
            row.margin_v = row.bound_v - row.dev_v
            if obs is not None:
                z = observe(traj, obs.C, obs.D_of_lambda(lam), obs.u_ctl)
                row.dev_z = float(np.max(norm.rows(z - z_nom)))
                # skip zero gaps so overflowed constants cannot produce 0*inf
                row.bound_z = sum(
                    c * gap
                    for c, gap in zip(obs.constants, (dx0, dv0, dlam))
                    if gap != 0.0
                )
                row.margin_z = row.bound_z - row.dev_z
        except OdeStabError as exc:
            row.status = f"failed:{exc.code}"
        rows.append(row)

    meta = {
        "model": family.name,
        "steps": int(steps),
        "norm": norm.value,
        "seed": int(seed),
        "lambda_bar": [float(v) for v in family.lambda_bar],
        "neighborhood_radius": float(family.neighborhood_radius),
        "L": float(family.lip.L),
        "Lp": float(family.lip.Lp),
        "slack_rule": "max(1e-8, 10*(err_nominal + err_perturbed))",
    }
    if obs is not None:
        meta["z_constants_conservative"] = [float(v) for v in obs.constants]
        meta["z_constants_literal"] = [float(v) for v in obs.constants_literal]
    return SweepReport(rows=rows, meta=meta)


@dataclass(frozen=True)
class Verdict:
    passed: bool
    message: str
    row: int | None = None
    column: str | None = None
    margin: float | None = None
    slack: float | None = None


def certify(report: SweepReport) -> Verdict:
    """PASS iff every computed margin stays above -slack in every row.

    Failed rows (no margins) fail certification outright; the verdict
    pinpoints the first offending row and column.
    """
    for idx, row in enumerate(report.rows):
        if row.status != "ok":
            return Verdict(
                passed=False,
                message=f"row {idx} (lambda={row.lam_text()}) {row.status}",
                row=idx,
                column="status",
            )
        for column in ("margin_x", "margin_v", "margin_z"):
            margin = getattr(row, column)
            if margin is None:
                continue
            # the negated comparison makes NaN margins fail certification
            if not (margin >= -row.slack):
                return Verdict(
                    passed=False,
                    message=(
                        f"row {idx} (lambda={row.lam_text()}) {column}={margin:.6g} "
                        f"below -slack={-row.slack:.6g}"
                    ),
                    row=idx,
                    column=column,
                    margin=margin,
                    slack=row.slack,
                )
    return Verdict(passed=True, message=f"all {len(report.rows)} rows within bounds")


CSV_HEADER = "lambda,dev_x,dev_v,dev_z,bound_x,bound_v,bound_z,margin_x,margin_v,margin_z,status"


def report_csv(report: SweepReport) -> str:
    """CSV serialization, one row per parameter, 17 significant digits."""
    lines = [CSV_HEADER]
    for row in report.rows:
        cells = [row.lam_text()]
        cells += [
            _fmt(row.dev_x), _fmt(row.dev_v), _fmt(row.dev_z),
            _fmt(row.bound_x), _fmt(row.bound_v), _fmt(row.bound_z),
            _fmt(row.margin_x), _fmt(row.margin_v), _fmt(row.margin_z),
        ]
        cells.append(row.status)
        lines.append(",".join(cells))
    return "\n".join(lines) + "\n"


def report_json(report: SweepReport) -> str:
    """JSON variant mirroring the CSV columns plus the meta block."""
    rows = []
    for row in report.rows:
        rows.append(
            {
                "lambda": [float(v) for v in np.atleast_1d(row.lam)],
                "dev_x": row.dev_x,
                "dev_v": row.dev_v,
                "dev_z": row.dev_z,
                "bound_x": row.bound_x,
                "bound_v": row.bound_v,
                "bound_z": row.bound_z,
                "margin_x": row.margin_x,
                "margin_v": row.margin_v,
                "margin_z": row.margin_z,
                "slack": row.slack,
                "status": row.status,
            }
        )
    return json.dumps({"meta": report.meta, "rows": rows}, indent=2, sort_keys=True) + "\n"
