import math

import numpy as np
import pytest

from odestab import (
    GridMismatchError,
    NonfiniteStateError,
    NormKind,
    SecondOrderIVP,
    Trajectory,
    augment,
    deviation,
    integrate,
    lcs_family,
    section5_model,
    trajectory_csv,
)
from odestab.verify import rk4_second_order_direct


def make_ivp(rhs, x0, v0, horizon=1.0):
    x0 = np.atleast_1d(np.asarray(x0, dtype=float))
    return SecondOrderIVP(dim=x0.size, rhs=rhs, x0=x0, v0=v0, horizon=horizon)


class TestAugment:
    def test_zero_rhs(self):
        ivp = make_ivp(lambda t, x, v: np.zeros(1), [1.0], [2.0])
        aug = augment(ivp)
        assert aug.dim == 2
        assert np.array_equal(aug.u0, [1.0, 2.0])
        assert np.array_equal(aug.rhs(0.0, np.array([1.0, 2.0])), [2.0, 0.0])

    def test_harmonic(self):
        ivp = make_ivp(lambda t, x, v: -x, [1.0], [0.0])
        aug = augment(ivp)
        u = np.array([0.3, -0.7])
        assert np.array_equal(aug.rhs(0.1, u), [-0.7, -0.3])

    def test_control_system_rhs(self):
        A = np.array([[0.0, -3.0], [1.0, -4.0]])
        gamma = 1.0
        u_ctl = np.array([1.0, 1.0])
        B = np.array([[0.5, 0.0], [0.0, 0.5]])
        ivp = make_ivp(lambda t, x, v: A @ x + gamma * v + B @ u_ctl, [1.0, 1.0], [0.0, 1.0])
        aug = augment(ivp)
        u = np.array([1.0, 1.0, 0.0, 1.0])
        expected = np.concatenate(([0.0, 1.0], A @ u[:2] + gamma * u[2:] + B @ u_ctl))
        assert np.array_equal(aug.rhs(0.0, u), expected)


class TestIntegrate:
    def test_pure_damping_closed_form(self):
        # x'' = -x' with x(0)=0, x'(0)=1 has x(t) = 1 - e^(-t)
        ivp = make_ivp(lambda t, x, v: -v, [0.0], [1.0])
        traj = integrate(ivp, 1000)
        assert abs(traj.states[-1, 0] - (1.0 - math.exp(-1.0))) <= 1e-9
        assert abs(traj.velocities[-1, 0] - math.exp(-1.0)) <= 1e-9

    def test_harmonic_endpoint(self):
        ivp = make_ivp(lambda t, x, v: -x, [1.0], [0.0], horizon=math.pi)
        traj = integrate(ivp, 2000)
        assert abs(traj.states[-1, 0] - (-1.0)) <= 1e-8

    def test_free_motion_exact_on_dyadic_grid(self):
        # zero acceleration: every RK4 stage is exact, and with a power-of-two
        # step count the accumulated dyadic sums are exact in floating point
        ivp = make_ivp(lambda t, x, v: np.zeros(2), [1.0, 1.0], [0.0, 1.0])
        traj = integrate(ivp, 1024)
        assert traj.states[-1].tolist() == [1.0, 2.0]
        assert traj.velocities[-1].tolist() == [0.0, 1.0]

    def test_initial_samples_match_data(self):
        ivp = make_ivp(lambda t, x, v: -x, [0.5, -0.5], [1.0, 2.0])
        traj = integrate(ivp, 16)
        assert np.array_equal(traj.states[0], ivp.x0)
        assert np.array_equal(traj.velocities[0], ivp.v0)
        assert traj.grid[0] == 0.0 and traj.grid[-1] == ivp.horizon

    def test_err_est_brackets_true_error(self):
        ivp = make_ivp(lambda t, x, v: -x, [1.0], [0.0], horizon=math.pi)
        traj = integrate(ivp, 500)
        true_err = float(np.max(np.abs(traj.states[:, 0] - np.cos(traj.grid))))
        assert traj.err_est > 0
        # step halving sees ~15/16 of the coarse error for a 4th-order method
        assert true_err <= 2.0 * traj.err_est

    def test_blowup_raises_with_time(self):
        ivp = make_ivp(lambda t, x, v: 80.0 * v, [0.0], [1.0], horizon=10.0)
        with pytest.raises(NonfiniteStateError) as info:
            integrate(ivp, 100)
        assert info.value.time is not None and 0 < info.value.time <= 10.0

    def test_steps_validation(self):
        ivp = make_ivp(lambda t, x, v: -x, [1.0], [0.0])
        with pytest.raises(ValueError):
            integrate(ivp, 1)


class TestOrder:
    def test_observed_order_about_four(self):
        def err(steps):
            ivp = make_ivp(lambda t, x, v: -x, [1.0], [0.0], horizon=math.pi)
            traj = integrate(ivp, steps)
            return float(np.max(np.abs(traj.states[:, 0] - np.cos(traj.grid))))

        errors = [err(m) for m in (250, 500, 1000)]
        assert errors[0] / errors[1] >= 2**3.8
        assert errors[1] / errors[2] >= 2**3.8


class TestAugmentationEquivalence:
    def test_matches_direct_second_order_scheme(self):
        family = lcs_family(section5_model())
        ivp = family.build(family.lambda_bar)
        traj = integrate(ivp, 250)
        xs, vs = rk4_second_order_direct(ivp, 250)
        gap = max(
            float(np.max(np.abs(traj.states - xs))),
            float(np.max(np.abs(traj.velocities - vs))),
        )
        assert gap <= max(traj.err_est, 1e-13)


class TestDeviation:
    def _traj(self, states, velocities, grid=None):
        states = np.asarray(states, dtype=float)
        if grid is None:
            grid = np.linspace(0.0, 1.0, states.shape[0])
        return Trajectory(grid=grid, states=states, velocities=velocities, err_est=0.0)

    def test_identical_is_zero(self):
        a = self._traj(np.ones((5, 2)), np.zeros((5, 2)))
        b = self._traj(np.ones((5, 2)), np.zeros((5, 2)))
        res = deviation(a, b)
        assert res.state_sup == 0.0 and res.velocity_sup == 0.0
        assert np.all(res.state_dev == 0.0)

    def test_constant_offset(self):
        rng = np.random.default_rng(0)
        base = rng.normal(size=(9, 3))
        delta = np.array([0.3, -0.1, 0.2])
        a = self._traj(base, np.zeros((9, 3)))
        b = self._traj(base + delta, np.zeros((9, 3)))
        for norm in NormKind:
            res = deviation(a, b, norm)
            assert res.state_sup == pytest.approx(norm.of(delta), abs=1e-15)

    def test_grid_mismatch_raises(self):
        a = self._traj(np.ones((5, 1)), np.zeros((5, 1)))
        b = self._traj(np.ones((6, 1)), np.zeros((6, 1)))
        with pytest.raises(GridMismatchError):
            deviation(a, b)

    def test_fine_step_reference(self):
        # the coarse-grid deviation of the worked control example must agree
        # with a 10x finer re-integration sampled at the same times
        family = lcs_family(section5_model())
        coarse_n = integrate(family.build(family.lambda_bar), 500)
        coarse_p = integrate(family.problem(0.1), 500)
        dev = deviation(coarse_n, coarse_p)
        fine_n = integrate(family.build(family.lambda_bar), 5000)
        fine_p = integrate(family.problem(0.1), 5000)
        ref = float(
            np.max(NormKind.SUP.rows(fine_n.states[::10] - fine_p.states[::10]))
        )
        assert dev.state_sup > 0
        assert abs(dev.state_sup - ref) <= 1e-6


class TestTrajectoryCsv:
    def test_header_and_roundtrip(self):
        ivp = make_ivp(lambda t, x, v: -x, [1.0, 0.5], [0.0, -0.25])
        traj = integrate(ivp, 8)
        text = trajectory_csv(traj)
        lines = text.strip().split("\n")
        assert lines[0] == "t,x_1,x_2,v_1,v_2"
        assert len(lines) == 10
        cells = [float(c) for c in lines[3].split(",")]
        assert cells[0] == traj.grid[2]
        assert cells[1:3] == list(traj.states[2])
        assert cells[3:5] == list(traj.velocities[2])


class TestNormKind:
    def test_values(self):
        v = np.array([3.0, -4.0])
        assert NormKind.SUP.of(v) == 4.0
        assert NormKind.EUCLIDEAN.of(v) == 5.0
        assert NormKind.from_tag("sup") is NormKind.SUP
        assert NormKind.from_tag("euclid") is NormKind.EUCLIDEAN
        with pytest.raises(ValueError):
            NormKind.from_tag("l1")

    def test_matrix_norms(self):
        m = np.array([[1.0, -2.0], [0.5, 0.25]])
        assert NormKind.SUP.matrix(m) == 3.0
        assert NormKind.EUCLIDEAN.matrix(m) == pytest.approx(np.linalg.norm(m, 2))

    def test_axioms_random(self):
        rng = np.random.default_rng(11)
        for norm in NormKind:
            for _ in range(100):
                x = rng.normal(size=4)
                y = rng.normal(size=4)
                s = rng.normal()
                assert norm.of(s * x) == pytest.approx(abs(s) * norm.of(x), rel=1e-12, abs=1e-12)
                assert norm.of(x + y) <= norm.of(x) + norm.of(y) + 1e-12
