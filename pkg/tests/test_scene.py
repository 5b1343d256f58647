import math

import numpy as np
import pytest

from mimicarm.errors import EmptyFrame, GridTooLarge, NoPlaneFound
from mimicarm.geom import (CameraIntrinsics, DepthFrame, RgbdFrame,
                           RigidTransform, quat_from_axis_angle, unproject)
from mimicarm.kinematics import JointState
from mimicarm.scene import (PointCloud, VoxelGrid, build_point_cloud, collide,
                            detect_dominant_plane, voxelize)

from oracles import brute_collide, brute_voxelize


def make_frame(depth, pose=None, intr=None):
    h, w = depth.shape
    intr = intr or CameraIntrinsics(100.0, 100.0, (w - 1) / 2, (h - 1) / 2, w, h)
    color = np.zeros((h, w, 3), dtype=np.uint8)
    color[..., 0] = 200
    return RgbdFrame(color, DepthFrame(np.asarray(depth, dtype=np.float32)),
                     pose or RigidTransform.identity(), intr)


class TestBuildPointCloud:
    def test_constant_depth(self):
        frame = make_frame(np.ones((4, 4)))
        cloud = build_point_cloud(frame)
        assert len(cloud) == 16
        assert np.abs(cloud.points[:, 2] - 1.0).max() < 1e-12

    def test_half_invalid(self):
        depth = np.ones((4, 4))
        depth[:2] = 0.0  # normalized to NaN at ingest
        cloud = build_point_cloud(make_frame(depth))
        assert len(cloud) == 8

    def test_matches_per_pixel_oracle_with_pose(self):
        rng = np.random.default_rng(21)
        depth = rng.uniform(0.5, 2.0, (6, 8)).astype(np.float32)
        pose = RigidTransform(quat_from_axis_angle([0.3, -1.0, 0.2], 0.8), [0.4, -0.1, 1.3])
        frame = make_frame(depth, pose)
        cloud = build_point_cloud(frame)
        intr = frame.intrinsics
        k = 0
        for v in range(6):
            for u in range(8):
                expected = pose.apply(unproject((u, v), float(depth[v, u]), intr))
                assert np.abs(cloud.points[k] - expected).max() < 1e-9
                k += 1

    def test_empty_frame(self):
        with pytest.raises(EmptyFrame):
            build_point_cloud(make_frame(np.zeros((4, 4))))

    def test_stride_subsampling(self):
        cloud = build_point_cloud(make_frame(np.ones((8, 8))), stride=2)
        assert len(cloud) == 16

    def test_colors_follow_pixels(self):
        cloud = build_point_cloud(make_frame(np.ones((4, 4))))
        assert cloud.colors is not None and (cloud.colors[:, 0] == 200).all()


class TestDominantPlane:
    def test_noisy_tabletop(self):
        rng = np.random.default_rng(42)
        n = 10_000
        pts = np.empty((n, 3))
        pts[:, 0] = rng.uniform(-1, 1, n)
        pts[:, 1] = rng.uniform(-1, 1, n)
        pts[:, 2] = 0.75 + rng.normal(0.0, 0.002, n)
        outliers = rng.random(n) < 0.10
        pts[outliers, 2] = rng.uniform(0.0, 2.0, int(outliers.sum()))
        plane = detect_dominant_plane(PointCloud(pts), iterations=200,
                                      inlier_dist=0.01, min_inliers=100, seed=3,
                                      view_point=[0.0, 0.0, 5.0])
        angle = math.degrees(math.acos(min(1.0, abs(float(plane.normal @ [0, 0, 1])))))
        assert angle < 1.0
        assert abs(plane.offset - 0.75) < 0.005

    def test_three_points_exact(self):
        pts = np.array([[0.0, 0, 0], [1.0, 0, 0], [0.0, 1.0, 0.0]])
        plane = detect_dominant_plane(PointCloud(pts), iterations=50, min_inliers=3, seed=0)
        assert np.abs(np.abs(plane.normal) - [0, 0, 1]).max() < 1e-12
        assert abs(plane.offset) < 1e-12
        assert plane.inlier_count == 3

    def test_two_points_no_plane(self):
        with pytest.raises(NoPlaneFound):
            detect_dominant_plane(PointCloud(np.array([[0.0, 0, 0], [1.0, 0, 0]])))

    def test_seeded_determinism(self):
        rng = np.random.default_rng(5)
        pts = rng.uniform(-1, 1, (500, 3))
        pts[:, 2] *= 0.01
        a = detect_dominant_plane(PointCloud(pts), seed=9)
        b = detect_dominant_plane(PointCloud(pts), seed=9)
        assert np.array_equal(a.normal, b.normal) and a.offset == b.offset

    def test_normal_faces_view_point(self):
        pts = np.array([[0.0, 0, 0.5], [1.0, 0, 0.5], [0.0, 1.0, 0.5], [1.0, 1.0, 0.5]])
        above = detect_dominant_plane(PointCloud(pts), min_inliers=3, seed=0,
                                      view_point=[0, 0, 3.0])
        below = detect_dominant_plane(PointCloud(pts), min_inliers=3, seed=0,
                                      view_point=[0, 0, -3.0])
        assert above.normal[2] > 0 > below.normal[2]


class TestVoxelize:
    BOUNDS = (np.zeros(3), np.ones(3))

    def test_single_point_at_voxel_center(self):
        grid = voxelize(PointCloud(np.array([[0.155, 0.255, 0.355]])), self.BOUNDS, 0.01)
        assert grid.occupied_count == 1
        assert grid.occupancy[15, 25, 35]

    def test_point_outside_bounds_ignored(self):
        grid = voxelize(PointCloud(np.array([[1.5, 0.5, 0.5]])), self.BOUNDS, 0.01)
        assert grid.occupied_count == 0

    def test_matches_bruteforce_50k(self):
        rng = np.random.default_rng(31)
        pts = rng.uniform(-0.1, 1.1, (50_000, 3))
        grid = voxelize(PointCloud(pts), self.BOUNDS, 0.05)
        expected = brute_voxelize(pts, np.zeros(3), 0.05, grid.dims)
        got = {tuple(ijk) for ijk in grid.occupied_indices()}
        assert got == expected

    def test_occupancy_min_points(self):
        pts = np.array([[0.5, 0.5, 0.5], [0.501, 0.5, 0.5], [0.9, 0.9, 0.9]])
        grid = voxelize(PointCloud(pts), self.BOUNDS, 0.1, occupancy_min_points=2)
        assert grid.occupied_count == 1

    def test_color_mean(self):
        pts = np.array([[0.5, 0.5, 0.5], [0.5, 0.5, 0.5]])
        colors = np.array([[100, 0, 0], [200, 0, 0]], dtype=np.uint8)
        grid = voxelize(PointCloud(pts, colors), self.BOUNDS, 0.1)
        idx = grid.index_of([0.5, 0.5, 0.5])
        assert grid.color[idx][0] == 150

    def test_translation_consistency(self):
        rng = np.random.default_rng(32)
        pts = rng.uniform(0.05, 0.95, (5000, 3))
        shift = np.array([1.37, -2.11, 0.59])
        a = voxelize(PointCloud(pts), self.BOUNDS, 0.03)
        b = voxelize(PointCloud(pts + shift), (self.BOUNDS[0] + shift, self.BOUNDS[1] + shift), 0.03)
        assert np.array_equal(a.occupancy, b.occupancy)

    def test_monotone_in_points(self):
        rng = np.random.default_rng(33)
        pts = rng.uniform(0, 1, (2000, 3))
        a = voxelize(PointCloud(pts[:1000]), self.BOUNDS, 0.05)
        b = voxelize(PointCloud(pts), self.BOUNDS, 0.05)
        assert not (a.occupancy & ~b.occupancy).any()

    def test_grid_too_large(self):
        with pytest.raises(GridTooLarge):
            voxelize(PointCloud(np.array([[0.5, 0.5, 0.5]])), self.BOUNDS, 0.01,
                     voxel_cap=1000)


class TestCollide:
    def test_empty_grid_empty_report(self, franka):
        grid = VoxelGrid.empty(np.array([-1.0, -1, -1]), 0.05, (40, 40, 40))
        report = collide(franka, JointState(franka.home), grid)
        assert report.collision_free

    def test_voxel_at_sphere_center(self, franka):
        from mimicarm.kinematics import forward_kinematics

        link_mats, _ = franka.fk_raw(franka.home)
        centers = franka.sphere_centers_world(link_mats)
        res = 0.05
        target = centers[0]
        origin = target - 0.5 * res  # voxel (0,0,0) center lands on the sphere center
        grid = VoxelGrid.empty(origin, res, (1, 1, 1))
        grid.occupancy[0, 0, 0] = True
        report = collide(franka, JointState(franka.home), grid)
        pen = [c.penetration_depth for c in report.contacts
               if c.sphere_index == 0]
        expected = franka._sphere_radius[0] + 0.5 * res * math.sqrt(3)
        assert pen and abs(pen[0] - expected) < 1e-12

    def test_matches_bruteforce_random_scenes(self, franka):
        rng = np.random.default_rng(34)
        for _ in range(25):
            q = franka.lower + rng.random(7) * (franka.upper - franka.lower)
            occ = rng.random((12, 12, 12)) < 0.04
            lo = rng.uniform(-0.6, 0.0, 3)
            res = rng.uniform(0.03, 0.09)
            grid = VoxelGrid(lo, res, (12, 12, 12), occ)
            report = collide(franka, JointState(q), grid)
            link_mats, _ = franka.fk_raw(q)
            centers = franka.sphere_centers_world(link_mats)
            expected = brute_collide(centers, franka._sphere_radius, occ, lo, res)
            got = {(c.sphere_index, *c.voxel_index) for c in report.contacts}
            assert got == expected

    def test_penetrations_positive(self, franka):
        rng = np.random.default_rng(35)
        occ = rng.random((10, 10, 10)) < 0.2
        grid = VoxelGrid(np.array([-0.4, -0.4, 0.0]), 0.08, (10, 10, 10), occ)
        report = collide(franka, JointState(franka.home), grid)
        assert all(c.penetration_depth > 0 for c in report.contacts)
