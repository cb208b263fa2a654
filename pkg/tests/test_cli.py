import json

import pytest

from odestab import cli, verify
from odestab.verify import CheckResult


def run_cli(*argv):
    return cli.main(list(argv))


@pytest.fixture()
def fig3_config(tmp_path):
    from odestab import load_default_config

    path = tmp_path / "fig3.json"
    path.write_text(json.dumps(load_default_config()))
    return str(path)


class TestBoundsCommand:
    def test_labeled_output(self, capsys):
        assert run_cli("bounds", "--L", "1", "--Lp", "1", "--T", "1", "--t", "1") == 0
        out = capsys.readouterr().out
        assert "c1(1)" in out and "2.1029729" in out
        assert "2.3211260" in out and "1.1029729" in out

    def test_csv_row(self, capsys):
        assert (
            run_cli(
                "bounds", "--L", "1", "--Lp", "1", "--T", "1", "--t", "1",
                "--dx0", "0.1", "--dlam", "0.1", "--csv",
            )
            == 0
        )
        out = capsys.readouterr().out
        assert "t,c1,c2,c3,total,velocity" in out

    def test_time_outside_horizon(self, capsys):
        assert run_cli("bounds", "--L", "1", "--Lp", "1", "--T", "1", "--t", "2") == 2


class TestSweepCommand:
    def test_writes_artifacts_and_passes(self, tmp_path, fig3_config, capsys):
        out = tmp_path / "run"
        code = run_cli("sweep", "--config", fig3_config, "--out", str(out), "--steps", "250")
        assert code == 0
        assert (out / "sweep.csv").exists()
        assert (out / "sweep.json").exists()
        assert "PASS" in capsys.readouterr().out
        header = (out / "sweep.csv").read_text().split("\n")[0]
        assert header == (
            "lambda,dev_x,dev_v,dev_z,bound_x,bound_v,bound_z,"
            "margin_x,margin_v,margin_z,status"
        )

    def test_determinism_two_runs(self, tmp_path, fig3_config):
        out1, out2 = tmp_path / "a", tmp_path / "b"
        assert run_cli("sweep", "--config", fig3_config, "--out", str(out1), "--steps", "250") == 0
        assert run_cli("sweep", "--config", fig3_config, "--out", str(out2), "--steps", "250") == 0
        assert (out1 / "sweep.csv").read_bytes() == (out2 / "sweep.csv").read_bytes()

    def test_dump_config_roundtrip(self, tmp_path, fig3_config, capsys):
        out1 = tmp_path / "a"
        assert run_cli("sweep", "--config", fig3_config, "--out", str(out1), "--steps", "200") == 0
        capsys.readouterr()
        assert run_cli("sweep", "--config", fig3_config, "--steps", "200", "--dump-config") == 0
        dumped = capsys.readouterr().out
        echoed = tmp_path / "echoed.json"
        echoed.write_text(dumped)
        out2 = tmp_path / "b"
        assert run_cli("sweep", "--config", str(echoed), "--out", str(out2)) == 0
        assert (out1 / "sweep.csv").read_bytes() == (out2 / "sweep.csv").read_bytes()

    def test_plot_writes_svg(self, tmp_path, fig3_config):
        out = tmp_path / "run"
        code = run_cli(
            "sweep", "--config", fig3_config, "--out", str(out), "--steps", "100", "--plot"
        )
        assert code == 0
        svg = (out / "sweep.svg").read_text()
        assert svg.lstrip().startswith("<?xml")
        assert "<svg" in svg


class TestExitCodes:
    def test_unknown_key_is_config_error(self, tmp_path, capsys):
        bad = tmp_path / "bad.json"
        bad.write_text('{"model": "lcs", "bogus_key": 1}')
        assert run_cli("sweep", "--config", str(bad), "--out", str(tmp_path / "x")) == 2
        assert "bogus_key" in capsys.readouterr().err

    def test_unreadable_config(self, tmp_path):
        assert run_cli("sweep", "--config", str(tmp_path / "missing.json")) == 2

    def test_invalid_json_config(self, tmp_path):
        bad = tmp_path / "bad.json"
        bad.write_text("{not json")
        assert run_cli("sweep", "--config", str(bad)) == 2

    def test_blowup_on_integrate_is_exit_3(self, tmp_path):
        cfg = tmp_path / "blowup.json"
        cfg.write_text(
            json.dumps(
                {
                    "model": "lcs",
                    "T": 10.0,
                    "gamma": 80.0,
                    "matrices": {"A": [0, 0, 0, 0], "B": [0, 0, 0, 0],
                                 "C": [1, 1, 1, 1], "D": [0, 0, 0, 0]},
                    "lambdas": [0.0],
                    "steps": 100,
                }
            )
        )
        assert run_cli("integrate", "--config", str(cfg), "--out", str(tmp_path / "x")) == 3

    def test_failed_certification_is_exit_1(self, tmp_path):
        cfg = tmp_path / "pert.json"
        cfg.write_text(
            json.dumps(
                {
                    "model": "lcs",
                    "T": 12.0,
                    "gamma": 0.0,
                    "matrices": {"A": [0, 0, 0, 0], "B": [0, 0, 0, 0],
                                 "C": [1, 1, 1, 1], "D": [0, 0, 0, 0]},
                    "lambdas": [40000.0],
                    "radius": 50000.0,
                    "steps": 100,
                }
            )
        )
        assert run_cli("sweep", "--config", str(cfg), "--out", str(tmp_path / "x")) == 1


class TestIntegrateCommand:
    def test_writes_trajectory(self, tmp_path, fig3_config):
        out = tmp_path / "run"
        code = run_cli(
            "integrate", "--config", fig3_config, "--out", str(out), "--steps", "100"
        )
        assert code == 0
        lines = (out / "trajectory.csv").read_text().strip().split("\n")
        assert lines[0] == "t,x_1,x_2,v_1,v_2"
        assert len(lines) == 102

    def test_perturbed_parameter_flag(self, tmp_path, fig3_config):
        out = tmp_path / "run"
        assert (
            run_cli(
                "integrate", "--config", fig3_config, "--out", str(out),
                "--steps", "100", "--lam", "0.1",
            )
            == 0
        )


class TestReproduceFig3Command:
    def test_writes_both_panels(self, tmp_path, capsys):
        out = tmp_path / "fig3"
        code = run_cli("reproduce-fig3", "--out", str(out), "--no-plot", "--steps", "250")
        assert code == 0
        stdout = capsys.readouterr().out
        assert "panel1: certify PASS" in stdout
        assert "panel2: certify PASS" in stdout
        assert (out / "fig3_panel1.csv").exists()
        assert (out / "fig3_panel2.csv").exists()


class TestVerifyCommand:
    def test_reports_and_exit_codes(self, monkeypatch, capsys):
        fake_pass = lambda: CheckResult("alpha", True, "fine")
        fake_fail = lambda: CheckResult("beta", False, "broken")
        monkeypatch.setattr(verify, "ALL_CHECKS", [fake_pass, fake_fail])
        assert run_cli("verify") == 1
        out = capsys.readouterr().out
        assert "PASS  alpha" in out and "FAIL  beta" in out
        monkeypatch.setattr(verify, "ALL_CHECKS", [fake_pass])
        assert run_cli("verify") == 0
