import math

import numpy as np
import pytest

from mimicarm.errors import BehindCamera, InvalidDepth, OutOfBounds
from mimicarm.geom import (CameraIntrinsics, DepthFrame, RigidTransform,
                           compose, look_at, matrix_to_quat, project,
                           quat_from_axis_angle, quat_slerp, quat_to_matrix,
                           rotvec_from_matrix, unproject)

from oracles import homogeneous

INTR = CameraIntrinsics(fx=500.0, fy=500.0, cx=320.0, cy=240.0, width=640, height=480)


def random_transform(rng) -> RigidTransform:
    axis = rng.normal(size=3)
    angle = rng.uniform(-np.pi, np.pi)
    return RigidTransform(quat_from_axis_angle(axis, angle), rng.uniform(-2, 2, 3))


class TestProjection:
    def test_unproject_principal_point(self):
        assert np.allclose(unproject((320, 240), 1.0, INTR), [0.0, 0.0, 1.0])

    def test_unproject_off_axis(self):
        # (820-320)*2/500 = 2.0
        intr = CameraIntrinsics(500.0, 500.0, 320.0, 240.0, width=1000, height=480)
        assert np.allclose(unproject((820, 240), 2.0, intr), [2.0, 0.0, 2.0])

    def test_project_principal_point(self):
        assert project((0, 0, 1), INTR) == (320.0, 240.0)

    def test_project_off_axis(self):
        assert project((1, 0, 2), INTR) == (570.0, 240.0)

    def test_project_behind_camera(self):
        with pytest.raises(BehindCamera):
            project((0, 0, -1), INTR)

    def test_unproject_invalid_depth(self):
        with pytest.raises(InvalidDepth):
            unproject((320, 240), 0.0, INTR)
        with pytest.raises(InvalidDepth):
            unproject((320, 240), float("nan"), INTR)

    def test_unproject_out_of_bounds(self):
        with pytest.raises(OutOfBounds):
            unproject((640, 240), 1.0, INTR)

    def test_round_trip_identity(self):
        rng = np.random.default_rng(7)
        for _ in range(200):
            u = rng.uniform(0, INTR.width - 1e-6)
            v = rng.uniform(0, INTR.height - 1e-6)
            z = rng.uniform(0.1, 5.0)
            pu, pv = project(unproject((u, v), z, INTR), INTR)
            assert abs(pu - u) < 1e-9 and abs(pv - v) < 1e-9


class TestRigidTransform:
    def test_compose_identity(self):
        rng = np.random.default_rng(0)
        t = random_transform(rng)
        out = compose(t, RigidTransform.identity())
        assert np.allclose(out.rotation, t.rotation, atol=1e-12)
        assert np.allclose(out.translation, t.translation, atol=1e-12)

    def test_compose_translations(self):
        a = RigidTransform(translation=[1, 0, 0])
        b = RigidTransform(translation=[0, 2, 0])
        assert np.allclose(compose(a, b).translation, [1, 2, 0])

    def test_compose_matches_matrix_oracle(self):
        rng = np.random.default_rng(1)
        for _ in range(100):
            a, b = random_transform(rng), random_transform(rng)
            expected = homogeneous(a.rotation, a.translation) @ homogeneous(b.rotation, b.translation)
            assert np.abs(compose(a, b).as_matrix() - expected).max() < 1e-9

    def test_inverse_round_trip(self):
        rng = np.random.default_rng(2)
        for _ in range(100):
            t = random_transform(rng)
            p = rng.uniform(-3, 3, 3)
            assert np.abs(t.inverse().apply(t.apply(p)) - p).max() < 1e-9
            ident = compose(t, t.inverse())
            assert np.abs(ident.as_matrix() - np.eye(4)).max() < 1e-9

    def test_composition_associative(self):
        rng = np.random.default_rng(3)
        for _ in range(100):
            a, b, c = (random_transform(rng) for _ in range(3))
            left = compose(compose(a, b), c).as_matrix()
            right = compose(a, compose(b, c)).as_matrix()
            assert np.abs(left - right).max() < 1e-9

    def test_quat_matrix_round_trip_preserves_action(self):
        rng = np.random.default_rng(4)
        for _ in range(100):
            q = quat_from_axis_angle(rng.normal(size=3), rng.uniform(-np.pi, np.pi))
            q2 = matrix_to_quat(quat_to_matrix(q))
            p = rng.uniform(-1, 1, 3)
            assert np.abs(quat_to_matrix(q2) @ p - quat_to_matrix(q) @ p).max() < 1e-9

    def test_quaternion_normalized_after_compose(self):
        rng = np.random.default_rng(5)
        t = RigidTransform.identity()
        for _ in range(500):
            t = compose(t, random_transform(rng))
            assert abs(np.linalg.norm(t.rotation) - 1.0) < 1e-9

    def test_rotvec_round_trip(self):
        rng = np.random.default_rng(6)
        for angle in list(rng.uniform(1e-8, np.pi - 1e-7, 50)) + [1e-12, np.pi - 1e-9, np.pi]:
            axis = rng.normal(size=3)
            axis /= np.linalg.norm(axis)
            rv = rotvec_from_matrix(quat_to_matrix(quat_from_axis_angle(axis, angle)))
            expected = axis * angle
            # axis sign is free at exactly pi
            err = min(np.abs(rv - expected).max(), np.abs(rv + expected).max())
            assert err < 1e-7


class TestFrames:
    def test_depth_frame_normalizes_invalid(self):
        d = DepthFrame(np.array([[1.0, 0.0], [np.nan, 2.0]], dtype=np.float32))
        assert np.isnan(d.depth[0, 1]) and np.isnan(d.depth[1, 0])
        assert d.depth[0, 0] == 1.0

    def test_intrinsics_validation(self):
        with pytest.raises(ValueError):
            CameraIntrinsics(-1.0, 500.0, 320.0, 240.0, 640, 480)
        with pytest.raises(ValueError):
            CameraIntrinsics(500.0, 500.0, 640.0, 240.0, 640, 480)

    def test_look_at_points_camera_at_target(self):
        cam = look_at([1.0, 2.0, 3.0], [0.0, 0.0, 0.0])
        fwd_world = quat_to_matrix(cam.rotation)[:, 2]
        expected = -np.array([1.0, 2.0, 3.0]) / np.linalg.norm([1.0, 2.0, 3.0])
        assert np.abs(fwd_world - expected).max() < 1e-12

    def test_slerp_endpoints(self):
        qa = quat_from_axis_angle([0, 0, 1], 0.3)
        qb = quat_from_axis_angle([0, 1, 0], 1.1)
        assert np.allclose(quat_slerp(qa, qb, 0.0), qa, atol=1e-12)
        assert np.allclose(quat_slerp(qa, qb, 1.0), qb, atol=1e-12)
