import numpy as np
import pytest

from odestab import (
    DegenerateBoxError,
    LipschitzData,
    ParametricFamily,
    SamplingBox,
    SecondOrderIVP,
    certify,
    estimate_lipschitz,
    lcs_family,
    report_csv,
    report_json,
    section5_model,
    sweep,
)
from odestab.harness import CSV_HEADER, SweepReport, SweepRow


def pure_damping_family(gamma=1.0):
    def build(lam):
        def rhs(t, x, v):
            return -gamma * v

        return SecondOrderIVP(dim=1, rhs=rhs, x0=np.zeros(1), v0=np.ones(1), horizon=1.0)

    return ParametricFamily(
        name="pure-damping",
        lambda_bar=0.0,
        build=build,
        lip=LipschitzData(L=gamma, Lp=0.0),
        neighborhood_radius=0.5,
    )


class TestEstimateLipschitz:
    def test_pure_damping_approaches_exact_constant(self):
        est = estimate_lipschitz(pure_damping_family(), samples=10000)
        assert 0.95 <= est.L_hat <= 1.0 + 1e-12
        assert est.Lp_hat == 0.0

    def test_nested_streams_nondecreasing(self):
        family = pure_damping_family()
        small = estimate_lipschitz(family, samples=1000, seed=7)
        large = estimate_lipschitz(family, samples=10000, seed=7)
        assert small.L_hat <= large.L_hat

    def test_deterministic_given_seed(self):
        family = pure_damping_family()
        a = estimate_lipschitz(family, samples=2000, seed=3)
        b = estimate_lipschitz(family, samples=2000, seed=3)
        assert a.L_hat == b.L_hat and a.Lp_hat == b.Lp_hat

    def test_lcs_estimate_below_declared(self):
        family = lcs_family(section5_model())
        est = estimate_lipschitz(family, samples=4000)
        assert est.L_hat <= family.lip.L + 1e-9

    def test_degenerate_box_rejected(self):
        family = pure_damping_family()
        box = SamplingBox(
            x_lo=np.zeros(1),
            x_hi=np.zeros(1),
            v_lo=np.zeros(1),
            v_hi=np.zeros(1),
            lam_lo=np.zeros(1),
            lam_hi=np.zeros(1),
            t_hi=1.0,
        )
        with pytest.raises(DegenerateBoxError):
            estimate_lipschitz(family, box=box, samples=10)

    def test_samples_validation(self):
        with pytest.raises(ValueError):
            estimate_lipschitz(pure_damping_family(), samples=1)


class TestSweep:
    def test_nominal_row_is_zero(self):
        family = lcs_family(section5_model())
        report = sweep(family, [0.0], 100)
        row = report.rows[0]
        assert row.status == "ok"
        assert row.dev_x == 0.0 and row.dev_v == 0.0 and row.dev_z == 0.0
        assert row.bound_x == 0.0  # all three gaps vanish at the base parameter
        assert certify(report).passed

    def test_rows_in_input_order_with_meta(self):
        family = lcs_family(section5_model())
        report = sweep(family, [0.2, 0.05], 100)
        assert [float(np.atleast_1d(r.lam)[0]) for r in report.rows] == [0.2, 0.05]
        assert report.meta["model"] == "lcs"
        assert report.meta["steps"] == 100
        assert report.meta["L"] == pytest.approx(5.2)
        assert "z_constants_literal" in report.meta
        for row in report.rows:
            assert row.slack >= 1e-8
            assert row.margin_x == row.bound_x - row.dev_x

    def test_lambda_outside_neighborhood_rejected(self):
        family = lcs_family(section5_model(radius=0.1))
        with pytest.raises(ValueError):
            sweep(family, [0.2], 50)

    def test_failed_row_does_not_abort(self):
        # a perturbation large enough to overflow mid-integration
        model = section5_model(
            gamma=0.0,
            horizon=12.0,
            radius=50000.0,
            A=((0.0, 0.0), (0.0, 0.0)),
            C=((1.0, 1.0), (1.0, 1.0)),
        )
        family = lcs_family(model)
        report = sweep(family, [0.0, 40000.0], 100)
        assert report.rows[0].status == "ok"
        assert report.rows[1].status == "failed:NONFINITE_STATE"
        verdict = certify(report)
        assert not verdict.passed
        assert verdict.row == 1


class TestCertify:
    def _report(self, margin_x):
        row = SweepRow(
            lam=np.array([0.1]),
            dev_x=3.0,
            dev_v=1.0,
            bound_x=4.0,
            bound_v=2.0,
            margin_x=margin_x,
            margin_v=1.0,
            slack=1e-8,
        )
        return SweepReport(rows=[row], meta={})

    def test_all_margins_positive_passes(self):
        assert certify(self._report(margin_x=1.0)).passed

    def test_corrupted_deviation_fails_at_row(self):
        # doubling the deviation past its bound flips the margin negative
        verdict = certify(self._report(margin_x=4.0 - 6.0))
        assert not verdict.passed
        assert verdict.row == 0 and verdict.column == "margin_x"

    def test_nan_margin_fails(self):
        assert not certify(self._report(margin_x=float("nan"))).passed

    def test_infinite_bound_passes(self):
        assert certify(self._report(margin_x=float("inf"))).passed


class TestReports:
    def test_csv_shape_and_precision(self):
        family = lcs_family(section5_model())
        report = sweep(family, [0.1], 100)
        text = report_csv(report)
        lines = text.strip().split("\n")
        assert lines[0] == CSV_HEADER
        cells = lines[1].split(",")
        assert len(cells) == 11
        assert cells[-1] == "ok"
        assert float(cells[1]) == report.rows[0].dev_x  # 17g round-trips exactly

    def test_csv_empty_observation_columns(self):
        report = sweep(pure_damping_family(), [0.1], 50)
        line = report_csv(report).strip().split("\n")[1]
        cells = line.split(",")
        assert cells[3] == "" and cells[6] == "" and cells[9] == ""

    def test_json_mirrors_columns(self):
        import json

        family = lcs_family(section5_model())
        report = sweep(family, [0.1], 100)
        data = json.loads(report_json(report))
        assert set(data) == {"meta", "rows"}
        row = data["rows"][0]
        assert row["dev_z"] == report.rows[0].dev_z
        assert row["slack"] == report.rows[0].slack
        assert data["meta"]["norm"] == "sup"

    def test_determinism_bytes(self):
        def once():
            family = lcs_family(section5_model(), seed=42)
            return report_csv(sweep(family, [0.2, 0.1, 0.05, 0.01], 250, seed=42))

        assert once() == once()
