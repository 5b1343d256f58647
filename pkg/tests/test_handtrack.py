import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mimicarm.errors import DegenerateHand, TooFewValidPoints
from mimicarm.geom import (CameraIntrinsics, DepthFrame, RgbdFrame,
                           RigidTransform, quat_from_axis_angle, project,
                           rotation_angle_between)
from mimicarm.handtrack import (FRAME_LANDMARKS, INDEX_TIP, MIDDLE_MCP,
                                N_LANDMARKS, THUMB_TIP, WRIST, HandKeypoints2D,
                                HandPose6D, HandTrack, estimate_hand_frame,
                                gripper_state, lift_keypoints, smooth_track)
from mimicarm.synthetic import canonical_hand_points

INTR = CameraIntrinsics(100.0, 100.0, 31.5, 23.5, 64, 48)


def flat_frame(depth_value=0.8):
    depth = np.full((48, 64), depth_value, dtype=np.float32)
    color = np.zeros((48, 64, 3), dtype=np.uint8)
    return RgbdFrame(color, DepthFrame(depth), RigidTransform.identity(), INTR)


def spread_keypoints():
    pts = np.zeros((N_LANDMARKS, 2))
    pts[:, 0] = np.linspace(5, 58, N_LANDMARKS)
    pts[:, 1] = np.linspace(5, 42, N_LANDMARKS)
    return pts


class TestLiftKeypoints:
    def test_valid_depth_reduces_to_unprojection(self):
        frame = flat_frame(0.8)
        kp = HandKeypoints2D(spread_keypoints(), np.ones(N_LANDMARKS), 0.0)
        points, valid = lift_keypoints(kp, frame)
        assert valid.all()
        from mimicarm.geom import unproject
        u, v = int(round(kp.points[3, 0])), int(round(kp.points[3, 1]))
        z = float(frame.depth.depth[v, u])  # float32 storage is the source of truth
        expected = unproject(kp.points[3], z, INTR)
        assert np.abs(points[3] - expected).max() < 1e-12

    def test_hole_filled_with_window_median(self):
        frame = flat_frame(0.8)
        pts = spread_keypoints()
        u, v = int(round(pts[0, 0])), int(round(pts[0, 1]))
        frame.depth.depth[v, u] = np.nan  # hole under the wrist
        kp = HandKeypoints2D(pts, np.ones(N_LANDMARKS), 0.0)
        points, valid = lift_keypoints(kp, frame, hole_radius_px=5)
        assert valid[0]
        assert abs(points[0][2] - 0.8) < 1e-6

    def test_all_confidence_zero(self):
        kp = HandKeypoints2D(spread_keypoints(), np.zeros(N_LANDMARKS), 0.0)
        with pytest.raises(TooFewValidPoints):
            lift_keypoints(kp, flat_frame())

    def test_window_empty_marks_invalid(self):
        frame = flat_frame(0.8)
        pts = spread_keypoints()
        u, v = int(round(pts[0, 0])), int(round(pts[0, 1]))
        frame.depth.depth[max(0, v - 6):v + 7, max(0, u - 6):u + 7] = np.nan
        kp = HandKeypoints2D(pts, np.ones(N_LANDMARKS), 0.0)
        points, valid = lift_keypoints(kp, frame, hole_radius_px=5)
        assert not valid[0]
        assert valid.sum() == N_LANDMARKS - 1

    def test_low_confidence_point_invalid(self):
        conf = np.ones(N_LANDMARKS)
        conf[7] = 0.1
        kp = HandKeypoints2D(spread_keypoints(), conf, 0.0)
        _, valid = lift_keypoints(kp, flat_frame(), conf_min=0.5)
        assert not valid[7]

    def test_timestamp_mismatch_rejected(self):
        kp = HandKeypoints2D(spread_keypoints(), np.ones(N_LANDMARKS), 1.0)
        with pytest.raises(ValueError):
            lift_keypoints(kp, flat_frame())

    def test_valid_points_always_finite(self):
        rng = np.random.default_rng(41)
        frame = flat_frame(1.2)
        holes = rng.random((48, 64)) < 0.4
        frame.depth.depth[holes] = np.nan
        kp = HandKeypoints2D(spread_keypoints(), np.ones(N_LANDMARKS), 0.0)
        try:
            points, valid = lift_keypoints(kp, frame)
        except TooFewValidPoints:
            return
        assert np.isfinite(points[valid]).all()


class TestHandFrame:
    def test_canonical_layout_gives_identity(self):
        pts = canonical_hand_points(aperture=0.05)
        pose = estimate_hand_frame(pts, np.ones(N_LANDMARKS, dtype=bool))
        assert np.abs(pose.frame.translation).max() < 1e-12
        assert rotation_angle_between(pose.frame.rotation, [1, 0, 0, 0]) < 1e-9
        assert abs(pose.aperture - 0.05) < 1e-12

    def test_rigid_equivariance(self):
        rng = np.random.default_rng(42)
        base_pts = canonical_hand_points(aperture=0.04)
        valid = np.ones(N_LANDMARKS, dtype=bool)
        base = estimate_hand_frame(base_pts, valid)
        for _ in range(100):
            t = RigidTransform(quat_from_axis_angle(rng.normal(size=3), rng.uniform(-np.pi, np.pi)),
                               rng.uniform(-1, 1, 3))
            moved = estimate_hand_frame(t.apply(base_pts), valid)
            expected = t @ base.frame
            assert np.abs(moved.frame.translation - expected.translation).max() < 1e-9
            qd = min(np.abs(moved.frame.rotation - expected.rotation).max(),
                     np.abs(moved.frame.rotation + expected.rotation).max())
            assert qd < 1e-9
            assert abs(moved.aperture - base.aperture) < 1e-9

    def test_degenerate_wrist_equals_middle_mcp(self):
        pts = canonical_hand_points(0.05)
        pts[MIDDLE_MCP] = pts[WRIST]
        with pytest.raises(DegenerateHand):
            estimate_hand_frame(pts, np.ones(N_LANDMARKS, dtype=bool))

    def test_collinear_palm(self):
        pts = np.zeros((N_LANDMARKS, 3))
        pts[:, 0] = np.arange(N_LANDMARKS) * 0.01  # everything on the x-axis
        with pytest.raises(DegenerateHand):
            estimate_hand_frame(pts, np.ones(N_LANDMARKS, dtype=bool))

    def test_missing_required_landmark(self):
        pts = canonical_hand_points(0.05)
        valid = np.ones(N_LANDMARKS, dtype=bool)
        valid[THUMB_TIP] = False
        with pytest.raises(TooFewValidPoints):
            estimate_hand_frame(pts, valid)


class TestGripperState:
    def test_stays_open_above_band(self):
        assert gripper_state([0.10, 0.09]).tolist() == [True, True]

    def test_hysteresis_suppresses_jitter(self):
        out = gripper_state([0.10, 0.02, 0.04, 0.02], close_below=0.03, open_above=0.06)
        assert out.tolist() == [True, False, False, False]

    def test_inside_band_keeps_initial_state(self):
        out = gripper_state([0.04, 0.05, 0.045, 0.05], close_below=0.03, open_above=0.06)
        assert out.all()  # initial state open, never leaves the band

    def test_band_must_be_ordered(self):
        with pytest.raises(ValueError):
            gripper_state([0.05], close_below=0.06, open_above=0.03)

    @settings(max_examples=200, deadline=None)
    @given(st.lists(st.floats(0.0301, 0.0599), min_size=1, max_size=50))
    def test_never_toggles_inside_band(self, apertures):
        out = gripper_state(apertures, close_below=0.03, open_above=0.06)
        assert out.all()


def make_track(translations, rotations=None, apertures=None, rate=30.0):
    n = len(translations)
    rotations = rotations or [[1, 0, 0, 0]] * n
    apertures = apertures if apertures is not None else [0.05] * n
    samples = [HandPose6D(RigidTransform(np.asarray(r), np.asarray(t)), a,
                          timestamp=i / rate)
               for i, (t, r, a) in enumerate(zip(translations, rotations, apertures))]
    return HandTrack(samples, rate)


class TestSmoothTrack:
    def test_constant_track_unchanged(self):
        track = make_track([[0.1, 0.2, 0.3]] * 10)
        out = smooth_track(track, alpha=0.3)
        assert len(out) == 10
        for s in out.samples:
            assert np.abs(s.frame.translation - [0.1, 0.2, 0.3]).max() < 1e-12

    def test_step_no_overshoot_monotone(self):
        track = make_track([[0, 0, 0]] * 3 + [[0.1, 0, 0]] * 20)
        out = smooth_track(track, alpha=0.3)
        xs = [s.frame.translation[0] for s in out.samples]
        assert all(b >= a - 1e-15 for a, b in zip(xs, xs[1:]))
        assert all(x <= 0.1 + 1e-12 for x in xs)

    def test_noise_rms_reduced(self):
        # slow clean motion: the filter's lag must stay below the noise floor
        rng = np.random.default_rng(43)
        t = np.linspace(0, 4, 120)
        clean = np.stack([0.02 * np.sin(2 * np.pi * 0.25 * t), 0.01 * t, 0.3 + 0 * t], axis=1)
        noisy = clean + rng.normal(0, 0.005, clean.shape)
        out = smooth_track(make_track(noisy.tolist()), alpha=0.3, outlier_jump=1.0)
        sm = np.stack([s.frame.translation for s in out.samples])
        rms_in = np.sqrt(((noisy - clean) ** 2).mean())
        rms_out = np.sqrt(((sm - clean) ** 2).mean())
        assert rms_out < rms_in

    def test_outlier_dropped(self):
        translations = [[0, 0, 0]] * 5 + [[5.0, 0, 0]] + [[0, 0, 0]] * 5
        out = smooth_track(make_track(translations), alpha=0.3, outlier_jump=0.3)
        assert len(out) == 10  # the jump sample is gone
        assert max(abs(s.frame.translation[0]) for s in out.samples) < 1e-9

    def test_timestamps_preserved(self):
        track = make_track([[0, 0, float(i)] for i in range(8)], rate=10.0)
        out = smooth_track(track, alpha=0.5, outlier_jump=100.0)
        assert np.array_equal(out.timestamps(), track.timestamps())

    def test_deterministic(self):
        rng = np.random.default_rng(44)
        tr = rng.uniform(-0.2, 0.2, (30, 3)).tolist()
        a = smooth_track(make_track(tr), alpha=0.4)
        b = smooth_track(make_track(tr), alpha=0.4)
        assert all(np.array_equal(x.frame.translation, y.frame.translation)
                   for x, y in zip(a.samples, b.samples))
