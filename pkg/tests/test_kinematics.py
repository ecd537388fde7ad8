import math

import numpy as np
import pytest

from rodvec import (
    EXACT_STEP,
    FIRST_ORDER,
    AngularVelocity,
    AngularVelocitySample,
    HalfTurn,
    NonMonotonicTime,
    RodriguesVector,
    StepTooLarge,
    UnitVector,
    Vec3,
    bisector_intersection,
    compose,
    compose_general,
    compose_infinitesimal,
    infinitesimal_displacement,
    integrate_attitude,
    matrix_from_rodrigues,
    rodrigues_increment,
    small_rotation_matrix,
    velocity_field,
)
from conftest import rand_rod, rand_vec, to_np, vec_np


def _const_samples(w=(0.0, 0.0, 1.0), t1=math.pi / 2):
    return [
        AngularVelocitySample(0.0, AngularVelocity(*w)),
        AngularVelocitySample(t1, AngularVelocity(*w)),
    ]


class TestSmallRotationMatrix:
    def test_zero_is_identity(self):
        assert to_np(small_rotation_matrix(RodriguesVector(0, 0, 0))) == pytest.approx(
            np.eye(3), abs=0
        )

    def test_second_order_remainder(self):
        q = RodriguesVector(0, 0, 1e-6)
        d = np.abs(to_np(small_rotation_matrix(q)) - to_np(matrix_from_rodrigues(q)))
        assert np.max(d) <= 4e-12

    def test_breaks_down_at_finite_angle(self):
        q = RodriguesVector(0, 0, 0.5)
        d = np.abs(to_np(small_rotation_matrix(q)) - to_np(matrix_from_rodrigues(q)))
        assert np.max(d) > 0.1

    def test_error_ratio_under_halving(self, rng):
        # remainder is O(||Q||^2): halving the magnitude divides it by ~4
        for _ in range(20):
            u = vec_np(rand_rod(rng, 2.0))
            n = np.linalg.norm(u)
            if n < 1e-2:
                continue
            u = u / n
            errs = []
            for s in (1e-2, 5e-3, 2.5e-3):
                q = RodriguesVector(*(s * u))
                errs.append(
                    np.max(np.abs(to_np(small_rotation_matrix(q)) - to_np(matrix_from_rodrigues(q))))
                )
            assert errs[0] / errs[1] == pytest.approx(4.0, rel=0.1)
            assert errs[1] / errs[2] == pytest.approx(4.0, rel=0.1)


class TestInfinitesimalDisplacement:
    def test_direct_value(self):
        assert infinitesimal_displacement(RodriguesVector(0, 0, 1e-8), Vec3(1, 0, 0)) == Vec3(
            0, 2e-8, 0
        )

    def test_zero(self):
        assert infinitesimal_displacement(RodriguesVector(0, 0, 0), Vec3(1, 2, 3)) == Vec3(0, 0, 0)

    def test_second_order_against_exact(self):
        q = RodriguesVector(0, 0, 1e-6)
        x = Vec3(1, 0, 0)
        dx = infinitesimal_displacement(q, x)
        rx = matrix_from_rodrigues(q).apply(x)
        assert (x + dx - rx).norm() <= 4e-12

    def test_half_way_identity_all_magnitudes(self, rng):
        # (1 + Qx)x - x = dx/2 is algebraic, not a small-angle statement
        for _ in range(500):
            q = rand_rod(rng, 3.0)
            x = rand_vec(rng)
            lhs = bisector_intersection(q, x) - x
            rhs = 0.5 * infinitesimal_displacement(q, x)
            tol = 1e-15 * (1.0 + x.norm() + rhs.norm())
            assert (lhs - rhs).norm() <= tol


class TestComposeInfinitesimal:
    def test_vector_addition(self):
        got = compose_infinitesimal(RodriguesVector(1e-8, 0, 0), RodriguesVector(0, 1e-8, 0))
        assert got == RodriguesVector(1e-8, 1e-8, 0)

    def test_zero_identity(self):
        q = RodriguesVector(0.1, -0.2, 0.3)
        assert compose_infinitesimal(RodriguesVector(0, 0, 0), q) == q

    def test_commutes(self):
        a = RodriguesVector(1e-5, 2e-5, -1e-5)
        b = RodriguesVector(-3e-5, 1e-5, 2e-5)
        assert compose_infinitesimal(a, b) == compose_infinitesimal(b, a)

    def test_agrees_with_exact_to_second_order(self):
        a = RodriguesVector(1e-4, 0, 0)
        b = RodriguesVector(0, 1e-4, 0)
        exact = compose(b, a)
        approx = compose_infinitesimal(a, b)
        assert (exact.vec - approx.vec).norm() <= 2e-8

    def test_second_order_constant_stable_under_halving(self, rng):
        # ||compose - sum|| <= C (||Q1|| + ||Q2||)^2 with C stable
        for _ in range(20):
            u1 = rand_rod(rng, 1.0)
            u2 = rand_rod(rng, 1.0)
            if u1.norm() < 0.1 or u2.norm() < 0.1:
                continue
            cs = []
            for s in (1e-3, 5e-4):
                q1 = RodriguesVector(s * u1.x, s * u1.y, s * u1.z)
                q2 = RodriguesVector(s * u2.x, s * u2.y, s * u2.z)
                err = (compose(q2, q1).vec - (q1 + q2).vec).norm()
                cs.append(err / (q1.norm() + q2.norm()) ** 2)
            assert cs[0] == pytest.approx(cs[1], rel=0.01)


class TestVelocityField:
    def test_unit_circular_motion(self):
        assert velocity_field(AngularVelocity(0, 0, 1), Vec3(1, 0, 0)) == Vec3(0, 1, 0)

    def test_point_on_axis(self):
        assert velocity_field(AngularVelocity(0, 0, 3), Vec3(0, 0, 5)) == Vec3(0, 0, 0)

    def test_hand_cross_product(self):
        assert velocity_field(AngularVelocity(0, 0, 2), Vec3(0, 3, 0)) == Vec3(-6, 0, 0)

    def test_orthogonality(self, rng):
        for _ in range(100):
            w = AngularVelocity(*rand_vec(rng).as_tuple())
            x = rand_vec(rng)
            v = velocity_field(w, x)
            scale = max(1.0, v.norm()) * max(1.0, x.norm(), w.vec.norm())
            assert abs(v.dot(x)) <= 1e-12 * scale
            assert abs(v.dot(w.vec)) <= 1e-12 * scale


class TestRodriguesIncrement:
    def test_exact_quarter_turn(self):
        q = rodrigues_increment(AngularVelocity(0, 0, 1), math.pi / 2, EXACT_STEP)
        assert vec_np(q) == pytest.approx([0, 0, 1], abs=1e-15)

    def test_schemes_agree_for_tiny_steps(self):
        w = AngularVelocity(0, 0, 1)
        a = rodrigues_increment(w, 1e-6, FIRST_ORDER)
        b = rodrigues_increment(w, 1e-6, EXACT_STEP)
        assert (a.vec - b.vec).norm() <= 1e-19

    def test_zero_omega(self):
        for scheme in (FIRST_ORDER, EXACT_STEP):
            assert rodrigues_increment(AngularVelocity(0, 0, 0), 1.0, scheme) == RodriguesVector(
                0, 0, 0
            )

    def test_step_too_large(self):
        with pytest.raises(StepTooLarge):
            rodrigues_increment(AngularVelocity(0, 0, 1), math.pi, EXACT_STEP)
        # first-order has no pole
        rodrigues_increment(AngularVelocity(0, 0, 1), math.pi, FIRST_ORDER)

    def test_rejects_bad_args(self):
        with pytest.raises(ValueError):
            rodrigues_increment(AngularVelocity(0, 0, 1), -1.0, EXACT_STEP)
        with pytest.raises(ValueError):
            rodrigues_increment(AngularVelocity(0, 0, 1), 1.0, "midpoint")


class TestIntegrateAttitude:
    def test_constant_omega_exact_any_step_count(self):
        want = to_np(matrix_from_rodrigues(RodriguesVector(0, 0, 1)))
        for substeps in (1, 2, 10, 1000):
            traj = integrate_attitude(_const_samples(), EXACT_STEP, substeps=substeps)
            got = traj.final
            assert isinstance(got, RodriguesVector)
            assert np.max(np.abs(to_np(matrix_from_rodrigues(got)) - want)) <= 1e-10

    def test_first_order_second_order_convergence(self):
        errs = []
        for substeps in (64, 128, 256):
            traj = integrate_attitude(_const_samples(), FIRST_ORDER, substeps=substeps)
            errs.append(abs(traj.final.angle() - math.pi / 2))
        assert errs[0] / errs[1] == pytest.approx(4.0, rel=0.2)
        assert errs[1] / errs[2] == pytest.approx(4.0, rel=0.2)

    def test_all_zero_omega_stays_at_initial(self):
        samples = [
            AngularVelocitySample(0.0, AngularVelocity(0, 0, 0)),
            AngularVelocitySample(1.0, AngularVelocity(0, 0, 0)),
            AngularVelocitySample(2.0, AngularVelocity(0, 0, 0)),
        ]
        init = RodriguesVector(0.2, -0.4, 0.8)
        traj = integrate_attitude(samples, EXACT_STEP, initial=init)
        assert len(traj) == 3
        for _, orient in traj:
            assert orient == init

    def test_records_at_sample_times(self):
        samples = [
            AngularVelocitySample(0.0, AngularVelocity(0, 0, 1)),
            AngularVelocitySample(0.5, AngularVelocity(0, 0, 1)),
            AngularVelocitySample(1.5, AngularVelocity(0, 0, 1)),
        ]
        traj = integrate_attitude(samples, EXACT_STEP, substeps=4)
        assert [t for t, _ in traj] == [0.0, 0.5, 1.5]
        assert traj.points[0][1] == RodriguesVector(0, 0, 0)

    def test_non_monotonic_time(self):
        samples = [
            AngularVelocitySample(0.0, AngularVelocity(0, 0, 1)),
            AngularVelocitySample(-1.0, AngularVelocity(0, 0, 1)),
        ]
        with pytest.raises(NonMonotonicTime):
            integrate_attitude(samples, EXACT_STEP)

    def test_trajectory_can_pass_through_half_turn(self):
        # a full pi of accumulated angle lands exactly on the half-turn state
        traj = integrate_attitude(_const_samples(t1=math.pi), EXACT_STEP, substeps=2)
        assert isinstance(traj.final, HalfTurn)
        assert traj.final.axis == UnitVector(0, 0, 1)

    def test_angular_velocity_addition(self):
        # integrating wa + wb approaches the composition of the separate
        # increments at O(dt^2): the defect ratio under halving is ~4
        wa = Vec3(0.7, 0.0, 0.4)
        wb = Vec3(-0.2, 0.5, 0.1)
        defects = []
        for dt in (2e-2, 1e-2):
            samples = [
                AngularVelocitySample(0.0, AngularVelocity(*(wa + wb).as_tuple())),
                AngularVelocitySample(dt, AngularVelocity(*(wa + wb).as_tuple())),
            ]
            combined = integrate_attitude(samples, EXACT_STEP).final
            qa = rodrigues_increment(AngularVelocity(*wa.as_tuple()), dt, EXACT_STEP)
            qb = rodrigues_increment(AngularVelocity(*wb.as_tuple()), dt, EXACT_STEP)
            separate = compose_general(qb, qa)
            defects.append((combined.vec - separate.vec).norm())
        assert defects[0] / defects[1] == pytest.approx(4.0, rel=0.25)
