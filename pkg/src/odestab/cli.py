"""Command-line front end.

Exit codes: 0 success, 1 certification failure, 2 configuration error,
3 integrator blow-up (non-finite state).
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .bounds import LipschitzData, main_coefficients
from .errors import ConfigError, HypothesisViolationError, NonfiniteStateError, OdeStabError
from .harness import certify, report_csv, report_json, sweep
from .ioutil import atomic_write_text
from .models import family_from_config, validate_model_config
from .ode import integrate, trajectory_csv
from .repro import load_default_config, run_fig3
from . import verify as verify_mod

_FMT = ".17g"


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="odestab",
        description=(
            "Simulate parametric second-order initial-value problems, evaluate "
            "their Lipschitz stability bounds, and certify perturbation sweeps."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, config_required=True):
        p.add_argument("--config", required=config_required, help="JSON model configuration")
        p.add_argument("--out", default="out", help="output directory (default: ./out)")
        p.add_argument("--seed", type=int, default=None, help="override the config seed")
        p.add_argument("--steps", type=int, default=None, help="override the config step count")
        p.add_argument("--norm", choices=["sup", "euclid"], default=None, help="working norm")
        p.add_argument(
            "--dump-config",
            action="store_true",
            help="print the effective config as JSON and exit",
        )

    p_int = sub.add_parser("integrate", help="integrate one problem and write a trajectory CSV")
    add_common(p_int)
    p_int.add_argument("--lam", type=float, default=None, help="parameter value (default: nominal)")

    p_bounds = sub.add_parser("bounds", help="print stability coefficients for given constants")
    p_bounds.add_argument("--L", type=float, required=True, help="state Lipschitz constant")
    p_bounds.add_argument("--Lp", type=float, required=True, help="parameter Lipschitz constant")
    p_bounds.add_argument("--T", type=float, required=True, help="horizon")
    p_bounds.add_argument("--t", type=float, required=True, help="evaluation time in [0, T]")
    p_bounds.add_argument("--dx0", type=float, default=0.0, help="initial-position gap")
    p_bounds.add_argument("--dv0", type=float, default=0.0, help="initial-velocity gap")
    p_bounds.add_argument("--dlam", type=float, default=0.0, help="parameter gap")
    p_bounds.add_argument("--norm", choices=["sup", "euclid"], default="sup")
    p_bounds.add_argument("--csv", action="store_true", help="also print a CSV header + row")

    p_sweep = sub.add_parser("sweep", help="run a perturbation sweep and certify it")
    add_common(p_sweep)
    p_sweep.add_argument("--plot", action="store_true", help="also write an SVG chart")
    p_sweep.add_argument("--log-log", action="store_true", help="log-log axes for the chart")

    p_verify = sub.add_parser("verify", help="run the full property suite")

    p_fig3 = sub.add_parser(
        "reproduce-fig3", help="run the canned two-panel experiment (charts + CSVs)"
    )
    add_common(p_fig3, config_required=False)
    p_fig3.add_argument("--plot", action="store_true", default=True, help=argparse.SUPPRESS)
    p_fig3.add_argument("--no-plot", dest="plot", action="store_false", help="skip SVG output")
    p_fig3.add_argument("--log-log", action="store_true", help="log-log axes for the charts")

    return parser


def _effective_config(args) -> dict:
    if getattr(args, "config", None):
        try:
            with open(args.config) as handle:
                cfg = json.load(handle)
        except OSError as exc:
            raise ConfigError(f"cannot read config {args.config}: {exc}") from exc
        except json.JSONDecodeError as exc:
            raise ConfigError(f"config {args.config} is not valid JSON: {exc}") from exc
    else:
        cfg = load_default_config()
    if not isinstance(cfg, dict):
        raise ConfigError("config must be a JSON object")
    cfg = dict(cfg)
    if args.seed is not None:
        cfg["seed"] = args.seed
    if args.steps is not None:
        cfg["steps"] = args.steps
    if args.norm is not None:
        cfg["norm"] = args.norm
    return validate_model_config(cfg)


def _maybe_dump(args, cfg: dict) -> bool:
    if getattr(args, "dump_config", False):
        print(json.dumps(cfg, indent=2, sort_keys=True))
        return True
    return False


def _cmd_integrate(args) -> int:
    cfg = _effective_config(args)
    if _maybe_dump(args, cfg):
        return 0
    family, _, steps, norm, _ = family_from_config(cfg)
    lam = family.lambda_bar if args.lam is None else args.lam
    traj = integrate(family.problem(lam), steps, norm)
    path = os.path.join(args.out, "trajectory.csv")
    atomic_write_text(path, trajectory_csv(traj))
    print(f"wrote {path} ({traj.grid.size} samples, err_est={traj.err_est:.3e})")
    return 0


def _cmd_bounds(args) -> int:
    if args.t < 0 or args.t > args.T:
        raise ConfigError("--t must lie in [0, T]")
    coeffs = main_coefficients(LipschitzData(L=args.L, Lp=args.Lp), args.T)
    c1 = float(coeffs.c1(args.t))
    c2 = float(coeffs.c2(args.t))
    c3 = float(coeffs.c3(args.t))
    total = float(coeffs.total(args.t, args.dx0, args.dv0, args.dlam))
    vel = float(coeffs.velocity(args.t, args.dx0, args.dv0, args.dlam))
    print(f"norm      = {args.norm}")
    print(f"c1({args.t:g})   = {format(c1, _FMT)}")
    print(f"c2({args.t:g})   = {format(c2, _FMT)}")
    print(f"c3({args.t:g})   = {format(c3, _FMT)}")
    print(f"total     = {format(total, _FMT)}")
    print(f"velocity  = {format(vel, _FMT)}")
    if args.csv:
        print("t,c1,c2,c3,total,velocity")
        cells = [args.t, c1, c2, c3, total, vel]
        print(",".join(format(v, _FMT) for v in cells))
    return 0


def _cmd_sweep(args) -> int:
    cfg = _effective_config(args)
    if _maybe_dump(args, cfg):
        return 0
    family, lambdas, steps, norm, seed = family_from_config(cfg)
    report = sweep(family, lambdas, steps, norm=norm, seed=seed)
    atomic_write_text(os.path.join(args.out, "sweep.csv"), report_csv(report))
    atomic_write_text(os.path.join(args.out, "sweep.json"), report_json(report))
    if args.plot:
        from .plots import sweep_chart

        sweep_chart(report, os.path.join(args.out, "sweep.svg"), log_log=args.log_log)
    verdict = certify(report)
    print(f"certify: {'PASS' if verdict.passed else 'FAIL'} ({verdict.message})")
    return 0 if verdict.passed else 1


def _cmd_verify(_args) -> int:
    failures = 0
    for result in verify_mod.run_all():
        tag = "PASS" if result.passed else "FAIL"
        print(f"{tag}  {result.name}: {result.detail}")
        failures += 0 if result.passed else 1
    print(f"{len(verify_mod.ALL_CHECKS) - failures}/{len(verify_mod.ALL_CHECKS)} checks passed")
    return 0 if failures == 0 else 1


def _cmd_fig3(args) -> int:
    cfg = _effective_config(args)
    if _maybe_dump(args, cfg):
        return 0
    results = run_fig3(out_dir=args.out, config=cfg, plot=args.plot, log_log=args.log_log)
    ok = True
    for panel in ("panel1", "panel2"):
        _, verdict = results[panel]
        ok &= verdict.passed
        print(f"{panel}: certify {'PASS' if verdict.passed else 'FAIL'} ({verdict.message})")
    for path in results["files"]:
        print(f"wrote {path}")
    return 0 if ok else 1


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    handlers = {
        "integrate": _cmd_integrate,
        "bounds": _cmd_bounds,
        "sweep": _cmd_sweep,
        "verify": _cmd_verify,
        "reproduce-fig3": _cmd_fig3,
    }
    try:
        return handlers[args.command](args)
    except (ConfigError, HypothesisViolationError) as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return 2
    except NonfiniteStateError as exc:
        print(f"integrator failure: {exc}", file=sys.stderr)
        return 3
    except OdeStabError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"output path error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
