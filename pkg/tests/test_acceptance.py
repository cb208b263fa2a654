"""Acceptance suite: one test per release criterion, each printing a
PASS/FAIL line (run with ``pytest -s tests/test_acceptance.py`` to see
them unconditionally)."""

import json
import math
import time

import numpy as np
from mpmath import mp, mpf

from odestab import (
    LipschitzData,
    PerovInput,
    cli,
    default_rlc_model,
    integrate,
    main_coefficients,
    perov_bound,
    rlc_family,
    rlc_integral_residual,
    validate_cocoercivity,
)
from odestab.repro import run_fig3
from odestab.verify import fig3_panel_stats, lemma_suite, soundness_suite


def report(num: int, name: str, passed: bool, detail: str = ""):
    tag = "PASS" if passed else "FAIL"
    suffix = f" ({detail})" if detail else ""
    print(f"criterion {num} [{tag}] {name}{suffix}")
    assert passed, f"criterion {num} {name}{suffix}"


def test_criterion_1_figure3_reproduction(tmp_path):
    start = time.perf_counter()
    results = run_fig3(out_dir=str(tmp_path), plot=True)
    elapsed = time.perf_counter() - start
    ok = elapsed < 5.0
    details = [f"{elapsed:.2f}s"]
    for panel in ("panel1", "panel2"):
        rep, verdict = results[panel]
        lams, devs = fig3_panel_stats(rep)
        assert lams == [0.2, 0.1, 0.05, 0.01]
        decreasing = all(a > b for a, b in zip(devs, devs[1:]))
        ratios = [d / l for d, l in zip(devs, lams)]
        near_linear = max(ratios) <= 2.0 * min(ratios)
        ok = ok and decreasing and near_linear and verdict.passed
        details.append(f"{panel} ratios {min(ratios):.2f}-{max(ratios):.2f}")
    svg_written = (tmp_path / "fig3_panel1.svg").exists() and (
        tmp_path / "fig3_panel2.svg"
    ).exists()
    ok = ok and svg_written
    report(1, "figure-3 reproduction", ok, ", ".join(details))


def test_criterion_2_bound_soundness():
    start = time.perf_counter()
    violations, worst, rows = soundness_suite(count=100)
    elapsed = time.perf_counter() - start
    ok = violations == 0 and elapsed < 60.0
    report(
        2,
        "bound soundness suite",
        ok,
        f"{rows} rows, 0 expected violations, got {violations}; "
        f"worst excess-slack {worst:.2e}; {elapsed:.1f}s",
    )


def test_criterion_3_integrator_order():
    from odestab import SecondOrderIVP

    def harmonic():
        return SecondOrderIVP(
            dim=1, rhs=lambda t, x, v: -x, x0=np.ones(1), v0=np.zeros(1), horizon=math.pi
        )

    def err(steps):
        traj = integrate(harmonic(), steps)
        return float(np.max(np.abs(traj.states[:, 0] - np.cos(traj.grid))))

    order = math.log2(err(500) / err(1000))
    endpoint = abs(integrate(harmonic(), 2000).states[-1, 0] - math.cos(math.pi))
    ok = order >= 3.8 and endpoint <= 1e-8
    report(3, "integrator order", ok, f"order={order:.2f}, endpoint err={endpoint:.2e}")


def test_criterion_4_perov_oracles():
    gaps = []
    for a, b in ((1.0, 0.0), (lambda s: 1.0, lambda s: 0.0)):
        got = perov_bound(PerovInput(c=1.0, alpha=0.5, a=a, b=b), 1.0)
        gaps.append(abs(got - math.e) / math.e)
    for a, b in ((0.0, 2.0), (lambda s: 0.0, lambda s: 2.0)):
        got = perov_bound(PerovInput(c=0.0, alpha=0.5, a=a, b=b), 1.0)
        gaps.append(abs(got - 1.0))
    ok = max(gaps) <= 1e-9
    report(4, "nonlinear integral inequality oracles", ok, f"worst rel err {max(gaps):.2e}")


def test_criterion_5_path_inequality_suite():
    violations, worst = lemma_suite(count=1000, tol=1e-8, seed=42)
    report(
        5,
        "path inequality on 1000 random polynomial paths",
        violations == 0,
        f"worst lhs-rhs {worst:.2e}",
    )


def test_criterion_6_coefficient_anchors():
    mp.dps = 40
    k = (2 + mpf(1)) / 2
    bump = mp.e**k - 1 - 1
    q = mpf(2) / 3
    oracle = (float(1 + q**2 * bump), float(q * (mp.e**k - 1)), float(q**2 * bump))
    coeffs = main_coefficients(LipschitzData(1.0, 1.0), 1.0)
    got_one = (float(coeffs.c1(1.0)), float(coeffs.c2(1.0)), float(coeffs.c3(1.0)))
    got_zero = (float(coeffs.c1(0.0)), float(coeffs.c2(0.0)), float(coeffs.c3(0.0)))
    frozen = (2.1029729, 2.3211260, 1.1029729)
    ok = all(abs(g - o) <= 1e-6 for g, o in zip(got_one, oracle))
    ok = ok and all(abs(g - f) <= 1e-6 for g, f in zip(got_one, frozen))
    ok = ok and got_zero == (1.0, 0.0, 0.0)
    report(
        6,
        "coefficient anchors",
        ok,
        f"t=1: ({got_one[0]:.7f}, {got_one[1]:.7f}, {got_one[2]:.7f}); t=0: {got_zero}",
    )


def test_criterion_7_rlc_consistency():
    model = default_rlc_model(perturb_initial=False)
    family = rlc_family(model)  # validator runs here (alpha0 = 3)
    traj = integrate(family.build(family.lambda_bar), 2000)
    residual = rlc_integral_residual(traj, model, family.lambda_bar)
    ok = residual <= 1e-4 and model.alpha0 == 3.0
    report(7, "RLC integral-equation consistency", ok, f"residual {residual:.2e} at 2000 steps")


def test_criterion_8_cocoercivity_validator():
    good = validate_cocoercivity(np.diag([1.0, 2.0]), 0.5, samples=10000)
    bad = validate_cocoercivity(np.diag([1.0, 2.0]), 1.0, samples=10000)
    ok = good.passed and not bad.passed
    report(
        8,
        "cocoercivity validator pass/fail pair",
        ok,
        f"alpha=1/2 worst {good.worst_residual:.1e}; alpha=1 worst {bad.worst_residual:.1e}",
    )


def test_criterion_9_sweep_determinism(tmp_path):
    from odestab import load_default_config

    cfg_path = tmp_path / "cfg.json"
    cfg_path.write_text(json.dumps(load_default_config()))
    outs = []
    for name in ("a", "b"):
        out = tmp_path / name
        code = cli.main(["sweep", "--config", str(cfg_path), "--out", str(out)])
        assert code == 0
        outs.append((out / "sweep.csv").read_bytes())
    ok = outs[0] == outs[1] and len(outs[0]) > 0
    report(9, "byte-identical sweep determinism", ok, f"{len(outs[0])} bytes")
