import math

import numpy as np
import pytest

from mimicarm.demo import GRIPPER_CLOSED, GRIPPER_OPEN, Trajectory, build_demonstration
from mimicarm.errors import DimensionMismatch, MissingMask, OutOfWorkspace
from mimicarm.export import (Action, composite_frame, discretize_action,
                             euler_xyz_intrinsic, export_imagebc, export_peract,
                             load_demonstration, render_robot,
                             undiscretize_action, voxel_grid_from_bytes,
                             voxel_grid_to_bytes, write_dataset)
from mimicarm.geom import (CameraIntrinsics, DepthFrame, RgbdFrame,
                           RigidTransform, quat_from_axis_angle,
                           quat_multiply, quat_to_matrix)
from mimicarm.kinematics import JointState, forward_kinematics
from mimicarm.scene import VoxelGrid


def workspace_grid():
    return VoxelGrid.empty(np.zeros(3), 0.01, (100, 100, 100))


class TestDiscretize:
    def test_voxel_center_maps_to_index(self):
        grid = workspace_grid()
        tcp = RigidTransform(translation=[0.105, 0.205, 0.305])
        action = discretize_action(tcp, True, grid)
        assert action.trans_index == (10, 20, 30)
        assert action.gripper == 1

    def test_identity_rotation_zero_bins(self):
        action = discretize_action(RigidTransform(translation=[0.5, 0.5, 0.5]),
                                   False, workspace_grid())
        assert action.rot_bins == (0, 0, 0)
        assert action.gripper == 0

    def test_seven_degrees_about_x(self):
        tcp = RigidTransform(quat_from_axis_angle([1, 0, 0], math.radians(7.0)),
                             [0.5, 0.5, 0.5])
        action = discretize_action(tcp, True, workspace_grid(), rot_bin_deg=5.0)
        assert action.rot_bins == (1, 0, 0)

    def test_out_of_workspace(self):
        with pytest.raises(OutOfWorkspace):
            discretize_action(RigidTransform(translation=[2.0, 0.5, 0.5]),
                              True, workspace_grid())

    def test_round_trip_bounds_random_poses(self):
        rng = np.random.default_rng(61)
        grid = workspace_grid()
        bin_deg = 5.0
        for _ in range(1000):
            quat = quat_from_axis_angle(rng.normal(size=3), rng.uniform(-np.pi, np.pi))
            pos = rng.uniform(0.0, 1.0 - 1e-9, 3)
            tcp = RigidTransform(quat, pos)
            action = discretize_action(tcp, True, grid, bin_deg)
            trans, angles = undiscretize_action(action, grid, bin_deg)
            assert np.abs(trans - pos).max() <= 0.005 + 1e-12  # resolution / 2
            orig = np.degrees(euler_xyz_intrinsic(quat)) % 360.0
            diff = (orig - angles + 180.0) % 360.0 - 180.0
            assert np.abs(diff).max() <= bin_deg / 2 + 1e-9

    def test_euler_xyz_reconstructs_rotation(self):
        rng = np.random.default_rng(62)
        for _ in range(200):
            q = quat_from_axis_angle(rng.normal(size=3), rng.uniform(-np.pi, np.pi))
            a, b, c = euler_xyz_intrinsic(q)
            rx = quat_from_axis_angle([1, 0, 0], a)
            ry = quat_from_axis_angle([0, 1, 0], b)
            rz = quat_from_axis_angle([0, 0, 1], c)
            rebuilt = quat_multiply(quat_multiply(rx, ry), rz)
            assert np.abs(quat_to_matrix(rebuilt) - quat_to_matrix(q)).max() < 1e-9


INTR = CameraIntrinsics(200.0, 200.0, 63.5, 47.5, 128, 96)


class TestRenderRobot:
    def single_sphere_chain(self, radius=0.05):
        from mimicarm.kinematics import CollisionSphere, KinematicChain, Link

        link = Link("l", "revolute", RigidTransform(), axis=[0, 0, 1],
                    lower=-1, upper=1,
                    spheres=(CollisionSphere(np.zeros(3), radius),))
        return KinematicChain([link], RigidTransform(), home=np.zeros(1))

    def test_sphere_projects_to_disk(self):
        chain = self.single_sphere_chain(0.05)
        cam = RigidTransform(translation=[0.0, 0.0, -1.0])  # sphere 1 m ahead
        rgba, depth = render_robot(chain, JointState(np.zeros(1)), INTR, cam)
        filled = rgba[:, :, 3] > 0
        ys, xs = np.nonzero(filled)
        assert filled.any()
        cx, cy = xs.mean(), ys.mean()
        assert abs(cx - INTR.cx) < 1.0 and abs(cy - INTR.cy) < 1.0
        r_px = 0.5 * (xs.max() - xs.min())
        assert abs(r_px - INTR.fx * 0.05) < 1.5
        # nearest rendered depth approaches the front surface
        assert abs(np.nanmin(depth) - 0.95) < 5e-3

    def test_sphere_behind_wall_empty(self):
        chain = self.single_sphere_chain(0.05)
        cam = RigidTransform(translation=[0.0, 0.0, -1.0])
        wall = DepthFrame(np.full((96, 128), 0.5, dtype=np.float32))
        rgba, _ = render_robot(chain, JointState(np.zeros(1)), INTR, cam, wall)
        assert not (rgba[:, :, 3] > 0).any()

    def test_sphere_behind_camera_empty(self):
        chain = self.single_sphere_chain(0.05)
        cam = RigidTransform(translation=[0.0, 0.0, 1.0])  # sphere 1 m behind
        rgba, _ = render_robot(chain, JointState(np.zeros(1)), INTR, cam)
        assert not (rgba[:, :, 3] > 0).any()

    def test_occlusion_strictly_nearer_scene_wins(self):
        chain = self.single_sphere_chain(0.05)
        cam = RigidTransform(translation=[0.0, 0.0, -1.0])
        scene = np.full((96, 128), 2.0, dtype=np.float32)
        scene[:, :64] = 0.5  # left half of the image occludes
        rgba, _ = render_robot(chain, JointState(np.zeros(1)), INTR,
                               cam, DepthFrame(scene))
        assert not (rgba[:, :64, 3] > 0).any()
        assert (rgba[:, 64:, 3] > 0).any()


class TestComposite:
    def test_empty_mask_empty_overlay_bit_exact(self):
        rng = np.random.default_rng(63)
        frame = rng.integers(0, 256, (8, 8, 3), dtype=np.uint8)
        out = composite_frame(frame, np.zeros((8, 8), dtype=bool), frame * 0,
                              np.zeros((8, 8, 4), dtype=np.uint8))
        assert np.array_equal(out, frame)

    def test_full_mask_returns_plate(self):
        rng = np.random.default_rng(64)
        frame = rng.integers(0, 256, (8, 8, 3), dtype=np.uint8)
        plate = rng.integers(0, 256, (8, 8, 3), dtype=np.uint8)
        out = composite_frame(frame, np.ones((8, 8), dtype=bool), plate, None)
        assert np.array_equal(out, plate)

    def test_two_by_two_hand_computed(self):
        frame = np.array([[[10, 10, 10], [20, 20, 20]],
                          [[30, 30, 30], [40, 40, 40]]], dtype=np.uint8)
        plate = np.full((2, 2, 3), 99, dtype=np.uint8)
        mask = np.array([[True, False], [False, False]])
        overlay = np.zeros((2, 2, 4), dtype=np.uint8)
        overlay[1, 1] = [200, 0, 0, 255]  # opaque red on one pixel
        out = composite_frame(frame, mask, plate, overlay)
        assert out[0, 0].tolist() == [99, 99, 99]      # plate fill
        assert out[0, 1].tolist() == [20, 20, 20]      # untouched
        assert out[1, 0].tolist() == [30, 30, 30]      # untouched
        assert out[1, 1].tolist() == [200, 0, 0]       # overlay
    def test_half_alpha_blend(self):
        frame = np.full((1, 1, 3), 100, dtype=np.uint8)
        overlay = np.zeros((1, 1, 4), dtype=np.uint8)
        overlay[0, 0] = [200, 200, 200, 128]
        out = composite_frame(frame, None, None, overlay)
        expected = round(200 * 128 / 255 + 100 * (1 - 128 / 255))
        assert out[0, 0, 0] == expected

    def test_mask_without_plate(self):
        frame = np.zeros((4, 4, 3), dtype=np.uint8)
        with pytest.raises(MissingMask):
            composite_frame(frame, np.ones((4, 4), dtype=bool), None, None)

    def test_dimension_mismatch(self):
        frame = np.zeros((4, 4, 3), dtype=np.uint8)
        with pytest.raises(DimensionMismatch):
            composite_frame(frame, np.ones((2, 2), dtype=bool), frame, None)


class TestVoxelPayload:
    def test_bit_exact_round_trip(self):
        rng = np.random.default_rng(65)
        occ = rng.random((13, 9, 17)) < 0.3
        color = rng.integers(0, 256, (13, 9, 17, 3), dtype=np.uint8)
        grid = VoxelGrid(np.array([0.1, -0.4, 2.5]), 0.025, (13, 9, 17), occ, color=color)
        blob = voxel_grid_to_bytes(grid)
        back = voxel_grid_from_bytes(blob)
        assert np.array_equal(back.occupancy, occ)
        assert np.array_equal(back.color, color)
        assert np.array_equal(back.origin, grid.origin)
        assert back.resolution == grid.resolution
        assert voxel_grid_to_bytes(back) == blob

    def test_no_color_round_trip(self):
        occ = np.zeros((4, 4, 4), dtype=bool)
        occ[1, 2, 3] = True
        grid = VoxelGrid(np.zeros(3), 0.1, (4, 4, 4), occ)
        back = voxel_grid_from_bytes(voxel_grid_to_bytes(grid))
        assert back.color is None
        assert np.array_equal(back.occupancy, occ)

    def test_little_endian_header(self):
        grid = VoxelGrid(np.zeros(3), 0.1, (2, 2, 2), np.zeros((2, 2, 2), dtype=bool))
        blob = voxel_grid_to_bytes(grid)
        assert blob[:4] == b"MAVX"
        assert int.from_bytes(blob[4:8], "little") == 1  # version

    def test_bad_magic_rejected(self):
        with pytest.raises(ValueError):
            voxel_grid_from_bytes(b"XXXX" + b"\x00" * 64)


def tabletop_demo(franka, n_keyframes=3):
    """Small demonstration around the home config with gripper flips."""
    n = 30 * (n_keyframes - 1) + 1
    t = np.linspace(0, 1, n)
    delta = np.array([0.25, 0.15, -0.1, 0.2, 0.1, -0.15, 0.1])
    joints = franka.home[None, :] + np.sin(np.pi * t)[:, None] * delta[None, :]
    gripper = np.ones(n, dtype=bool)
    for k in range(1, n_keyframes - 1):
        gripper[k * 30:] = ~gripper[k * 30 - 1]
    traj = Trajectory(np.arange(n) / 30.0, joints, np.where(gripper, 0.08, 0.0),
                      gripper, np.zeros(n, dtype=bool))
    return build_demonstration(franka, traj, "move the thing", "scene", "kinesthetic")


def scene_frame():
    rng = np.random.default_rng(66)
    color = rng.integers(0, 256, (96, 128, 3), dtype=np.uint8)
    depth = np.full((96, 128), 1.5, dtype=np.float32)
    cam = RigidTransform(translation=[0.3, 0.0, -1.0])
    return RgbdFrame(color, DepthFrame(depth), cam, INTR)


class TestExporters:
    def test_peract_sample_count(self, franka):
        demo = tabletop_demo(franka, n_keyframes=3)
        bounds = (np.array([-0.7, -0.7, -0.1]), np.array([0.7, 0.7, 1.0]))
        samples = export_peract(demo, [scene_frame()], bounds, 0.02)
        assert len(samples) == len(demo.keyframes) - 1

    def test_peract_action_round_trip_inside_workspace(self, franka):
        demo = tabletop_demo(franka, n_keyframes=4)
        bounds = (np.array([-0.7, -0.7, -0.1]), np.array([0.7, 0.7, 1.0]))
        samples = export_peract(demo, [scene_frame()], bounds, 0.02)
        for sample, kf in zip(samples, demo.keyframes[1:]):
            grid = sample.voxel_obs
            trans, _ = undiscretize_action(sample.action, grid)
            assert np.abs(trans - kf.tcp.translation).max() <= 0.01 + 1e-12
            assert grid.contains(trans)

    def test_peract_masked_pixels_excluded(self, franka):
        demo = tabletop_demo(franka, n_keyframes=3)
        bounds = (np.array([-0.7, -0.7, -0.1]), np.array([0.7, 0.7, 1.0]))
        frame = scene_frame()
        full = export_peract(demo, [frame], bounds, 0.02)[0]
        mask = np.ones((96, 128), dtype=bool)  # hand covers everything
        with pytest.raises(Exception):
            export_peract(demo, [frame], bounds, 0.02, masks=[mask])

    def test_imagebc_stride_ceil(self, franka):
        demo = tabletop_demo(franka, n_keyframes=3)
        n = len(demo.trajectory)
        frames = [scene_frame()]
        out = export_imagebc(demo, frames, None, None, franka, stride=1)
        assert len(out) == n
        out10 = export_imagebc(demo, frames, None, None, franka, stride=10)
        assert len(out10) == math.ceil(n / 10)

    def test_imagebc_95_frames_stride_10(self, franka):
        n = 95
        traj = Trajectory(np.arange(n) / 30.0, np.tile(franka.home, (n, 1)),
                          np.full(n, 0.08), np.ones(n, dtype=bool),
                          np.zeros(n, dtype=bool))
        demo = build_demonstration(franka, traj, "hold still", "scene", "kinesthetic")
        out = export_imagebc(demo, [scene_frame()], None, None, franka, stride=10)
        assert len(out) == 10  # ceil(95 / 10)

    def test_imagebc_last_action_is_final_keyframe(self, franka):
        demo = tabletop_demo(franka, n_keyframes=3)
        out = export_imagebc(demo, [scene_frame()], None, None, franka, stride=1)
        final = demo.keyframes[-1]
        assert np.abs(out[-1].action_tcp.translation - final.tcp.translation).max() < 1e-12

    def test_imagebc_requires_masks_when_told(self, franka):
        demo = tabletop_demo(franka, n_keyframes=3)
        with pytest.raises(MissingMask):
            export_imagebc(demo, [scene_frame()], [None], None, franka,
                           require_masks=True)

    def test_dataset_write_and_reload(self, franka, tmp_path):
        demo = tabletop_demo(franka, n_keyframes=3)
        bounds = (np.array([-0.7, -0.7, -0.1]), np.array([0.7, 0.7, 1.0]))
        peract = export_peract(demo, [scene_frame()], bounds, 0.02)
        imagebc = export_imagebc(demo, [scene_frame()], None, None, franka, stride=10)
        manifest = write_dataset(tmp_path / "ds", demo, peract, imagebc)
        assert manifest.exists()
        from mimicarm.archive import validate_dataset
        assert validate_dataset(tmp_path / "ds").ok
        back = load_demonstration(tmp_path / "ds" / "demonstration.json")
        assert np.array_equal(back.trajectory.joints, demo.trajectory.joints)
        assert len(back.keyframes) == len(demo.keyframes)
        assert back.language_goal == demo.language_goal
