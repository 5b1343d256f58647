import numpy as np
import pytest

from mimicarm.demo import (GRIPPER_CLOSED, GRIPPER_OPEN, KeyPoint, Trajectory,
                           build_demonstration, extract_keyframes, frame_with_z,
                           mimic_hand, plan_segment, solve_keypoint,
                           top_down_pose)
from mimicarm.errors import (AllSamplesUnreachable, EmptySession,
                             UnreachableKeypoint)
from mimicarm.geom import RigidTransform, rotation_angle_between
from mimicarm.handtrack import HandPose6D, HandTrack
from mimicarm.kinematics import JointState, check_limits, forward_kinematics
from mimicarm.scene import VoxelGrid


def empty_grid():
    return VoxelGrid.empty(np.array([-1.0, -1.0, -0.1]), 0.02, (100, 100, 55))


def keypoint_at(franka, target, seed=None, gripper=GRIPPER_OPEN, dwell=0.0):
    return solve_keypoint(franka, target, JointState(seed if seed is not None else franka.home),
                          gripper, dwell)


class TestSolveKeypoint:
    def test_tabletop_point_reachable(self, franka):
        target = top_down_pose([0.4, 0.0, 0.05], [0, 0, 1.0])
        kp = keypoint_at(franka, target)
        fk = forward_kinematics(franka, kp.solved_q).tcp
        assert np.linalg.norm(fk.translation - target.translation) <= 1e-4
        assert rotation_angle_between(fk.rotation, target.rotation) <= 1e-3

    def test_far_point_unreachable(self, franka):
        target = top_down_pose([10.0, 0.0, 0.0], [0, 0, 1.0])
        with pytest.raises(UnreachableKeypoint):
            keypoint_at(franka, target)

    def test_current_pose_converges_to_seed(self, franka):
        current = forward_kinematics(franka, franka.home).tcp
        kp = keypoint_at(franka, current)
        assert np.abs(kp.solved_q.angles - franka.home).max() < 1e-3

    def test_top_down_orientation(self):
        pose = top_down_pose([0.3, 0.1, 0.0], [0, 0, 1.0])
        z_axis = pose.apply([0, 0, 1.0]) - pose.translation
        assert np.abs(z_axis - [0, 0, -1.0]).max() < 1e-12


class TestPlanSegment:
    def test_same_pose_single_sample(self, franka):
        kp = keypoint_at(franka, forward_kinematics(franka, franka.home).tcp)
        seg = plan_segment(franka, JointState(franka.home), kp, empty_grid())
        assert len(seg) == 1

    def test_straight_reach_waypoints_collinear(self, franka):
        start = forward_kinematics(franka, franka.home).tcp
        target = RigidTransform(start.rotation, start.translation + [0.2, 0.0, 0.0])
        kp = keypoint_at(franka, target)
        seg = plan_segment(franka, JointState(franka.home), kp, empty_grid())
        assert len(seg) >= 20
        # every waypoint TCP within 1e-3 m of the start->target line
        d = target.translation - start.translation
        d = d / np.linalg.norm(d)
        for i in range(len(seg)):
            p = forward_kinematics(franka, seg.joints[i]).tcp.translation
            off = (p - start.translation) - ((p - start.translation) @ d) * d
            assert np.linalg.norm(off) < 1e-3

    def test_collision_flag_at_block_crossing(self, franka):
        start = forward_kinematics(franka, franka.home).tcp
        target = RigidTransform(start.rotation, start.translation + [0.2, 0.0, 0.0])
        kp = keypoint_at(franka, target)
        # occupied block straddling the straight path midpoint
        grid = empty_grid()
        mid = 0.5 * (start.translation + target.translation)
        ijk = grid.index_of(mid)
        grid.occupancy[ijk[0] - 1:ijk[0] + 2, ijk[1] - 1:ijk[1] + 2, ijk[2] - 1:ijk[2] + 2] = True
        seg = plan_segment(franka, JointState(franka.home), kp, grid)
        assert seg.collided.any()
        # the crossing is mid-path: flags appear away from the endpoints
        flagged = np.nonzero(seg.collided)[0]
        assert 0 < flagged[0] < len(seg) - 1

    def test_empty_grid_zero_flags(self, franka):
        start = forward_kinematics(franka, franka.home).tcp
        target = RigidTransform(start.rotation, start.translation + [0.15, 0.1, -0.05])
        kp = keypoint_at(franka, target)
        seg = plan_segment(franka, JointState(franka.home), kp, empty_grid())
        assert not seg.collided.any()

    def test_limits_respected_on_every_sample(self, franka):
        start = forward_kinematics(franka, franka.home).tcp
        target = RigidTransform(start.rotation, start.translation + [0.25, -0.2, 0.1])
        kp = keypoint_at(franka, target)
        seg = plan_segment(franka, JointState(franka.home), kp, empty_grid())
        for i in range(len(seg)):
            assert (check_limits(franka, seg.joints[i]) >= -1e-12).all()

    def test_dwell_appends_hold(self, franka):
        start = forward_kinematics(franka, franka.home).tcp
        target = RigidTransform(start.rotation, start.translation + [0.1, 0.0, 0.0])
        kp = keypoint_at(franka, target, dwell=0.2)
        seg = plan_segment(franka, JointState(franka.home), kp, empty_grid())
        held = seg.joints[-int(0.2 * 30):]
        assert np.abs(held - held[0]).max() < 1e-12

    def test_gripper_command_applies_at_arrival(self, franka):
        start = forward_kinematics(franka, franka.home).tcp
        target = RigidTransform(start.rotation, start.translation + [0.1, 0.0, 0.0])
        kp = keypoint_at(franka, target, gripper=GRIPPER_CLOSED, dwell=0.1)
        seg = plan_segment(franka, JointState(franka.home), kp, empty_grid(),
                           prev_gripper_open=True)
        assert seg.gripper_open[0]
        assert not seg.gripper_open[-1]


def fk_track(chain, joint_path, rate=30.0, apertures=None):
    samples = []
    for i, q in enumerate(joint_path):
        tcp = forward_kinematics(chain, q).tcp
        ap = apertures[i] if apertures is not None else 0.08
        samples.append(HandPose6D(tcp, ap, timestamp=i / rate))
    return HandTrack(samples, rate)


class TestMimicHand:
    def test_recovers_generating_path(self, franka):
        t = np.linspace(0, 1, 40)
        delta = np.array([0.3, 0.2, -0.2, 0.25, 0.15, -0.25, 0.2])
        path = franka.home[None, :] + (3 * t**2 - 2 * t**3)[:, None] * delta[None, :]
        track = fk_track(franka, path)
        traj = mimic_hand(franka, track, RigidTransform.identity())
        assert not traj.ik_failed.any()
        for i in range(len(traj)):
            got = forward_kinematics(franka, traj.joints[i]).tcp
            want = forward_kinematics(franka, path[i]).tcp
            assert np.linalg.norm(got.translation - want.translation) <= 1e-4
            assert rotation_angle_between(got.rotation, want.rotation) <= 1e-3

    def test_single_sample_track(self, franka):
        track = fk_track(franka, [franka.home])
        traj = mimic_hand(franka, track, RigidTransform.identity())
        assert len(traj) == 1

    def test_out_of_reach_track(self, franka):
        samples = [HandPose6D(RigidTransform(translation=[5.0, 5.0, 5.0]), 0.05, timestamp=0.0)]
        with pytest.raises(AllSamplesUnreachable):
            mimic_hand(franka, HandTrack(samples, 30.0), RigidTransform.identity())

    def test_failed_samples_carry_forward(self, franka):
        good = forward_kinematics(franka, franka.home).tcp
        samples = [HandPose6D(good, 0.08, timestamp=0.0),
                   HandPose6D(RigidTransform(translation=[6.0, 0, 0]), 0.08, timestamp=0.1),
                   HandPose6D(good, 0.08, timestamp=0.2)]
        traj = mimic_hand(franka, HandTrack(samples, 30.0), RigidTransform.identity())
        assert traj.ik_failed.tolist() == [False, True, False]
        assert np.array_equal(traj.joints[0], traj.joints[1])

    def test_aperture_maps_through_hysteresis(self, franka):
        path = [franka.home] * 4
        track = fk_track(franka, path, apertures=[0.08, 0.02, 0.04, 0.07])
        traj = mimic_hand(franka, track, RigidTransform.identity())
        assert traj.gripper_open.tolist() == [True, False, False, True]

    def test_offset_applied(self, franka):
        offset = RigidTransform(translation=[0.0, 0.0, -0.05])
        track = fk_track(franka, [franka.home])
        traj = mimic_hand(franka, track, offset)
        got = forward_kinematics(franka, traj.joints[0]).tcp
        want = forward_kinematics(franka, franka.home).tcp @ offset
        assert np.linalg.norm(got.translation - want.translation) <= 1e-4


def constant_traj(chain, n=20, q=None, rate=30.0):
    q = chain.home if q is None else q
    return Trajectory(np.arange(n) / rate, np.tile(q, (n, 1)),
                      np.full(n, 0.08), np.ones(n, dtype=bool), np.zeros(n, dtype=bool))


class TestExtractKeyframes:
    def test_constant_trajectory_endpoints_only(self, franka):
        frames = extract_keyframes(franka, constant_traj(franka, 40))
        assert [k.index for k in frames] == [0, 39]

    def test_gripper_change_is_keyframe(self, franka):
        traj = constant_traj(franka, 30)
        traj.gripper_open[12:] = False
        frames = extract_keyframes(franka, traj)
        assert 12 in [k.index for k in frames]

    def test_velocity_plateau_selected(self, franka):
        # triangle wave: move out, reverse at sample m, move back
        n, m = 61, 30
        delta = np.array([0.2, 0.1, -0.15, 0.2, 0.1, -0.1, 0.15])
        s = np.concatenate([np.linspace(0, 1, m + 1), np.linspace(1, 0, n - m)[1:]])
        joints = franka.home[None, :] + s[:, None] * delta[None, :]
        traj = Trajectory(np.arange(n) / 30.0, joints, np.full(n, 0.08),
                          np.ones(n, dtype=bool), np.zeros(n, dtype=bool))
        frames = extract_keyframes(franka, traj, vel_eps=0.01, min_gap=5)
        plateau = [k.index for k in frames if k.index not in (0, n - 1)]
        assert plateau and abs(plateau[0] - m) <= 1

    def test_first_last_always_present(self, franka):
        rng = np.random.default_rng(51)
        n = 25
        joints = franka.home[None, :] + 0.1 * rng.standard_normal((n, 7)).cumsum(axis=0) / 10
        joints = np.clip(joints, franka.lower[None, :], franka.upper[None, :])
        traj = Trajectory(np.arange(n) / 30.0, joints, np.full(n, 0.08),
                          np.ones(n, dtype=bool), np.zeros(n, dtype=bool))
        idx = [k.index for k in extract_keyframes(franka, traj)]
        assert idx[0] == 0 and idx[-1] == n - 1

    def test_keyframe_gripper_transitions_match_stream(self, franka):
        traj = constant_traj(franka, 50)
        traj.gripper_open[10:30] = False
        frames = extract_keyframes(franka, traj)
        stream_transitions = set((np.nonzero(np.diff(traj.gripper_open.astype(int)))[0] + 1).tolist())
        kf_by_index = {k.index: k for k in frames}
        assert stream_transitions <= set(kf_by_index)
        # and the keyframe sequence flips state exactly at those indices
        for t in stream_transitions:
            assert (kf_by_index[t].gripper == GRIPPER_OPEN) == bool(traj.gripper_open[t])


class TestSessionFlow:
    def make_session(self, franka):
        from mimicarm.demo import DemoSession
        from mimicarm.scene import Plane, PointCloud

        rng = np.random.default_rng(52)
        pts = np.column_stack([rng.uniform(-0.8, 0.8, 4000),
                               rng.uniform(-0.8, 0.8, 4000),
                               np.zeros(4000)])
        cloud = PointCloud(pts)
        plane = Plane(np.array([0.0, 0.0, 1.0]), 0.0, 4000)
        return DemoSession(franka, cloud, plane, "test-scene")

    def test_full_flow_and_finalize_idempotent(self, franka):
        session = self.make_session(franka)
        session.anchor([0.0, 0.0, 0.001])
        session.set_mode("pointing")
        p1 = session.submit_keypoint(point=[0.4, 0.0, 0.0], gripper_command=GRIPPER_CLOSED)
        session.accept_preview(p1.id)
        p2 = session.submit_keypoint(point=[0.35, 0.2, 0.0], gripper_command=GRIPPER_OPEN)
        session.accept_preview(p2.id)
        demo = session.finalize("stack the cubes")
        # both keypoint arrivals are keyframes (gripper transitions at arrival)
        kf_idx = {k.index for k in demo.keyframes}
        assert len(demo.keypoints) == 2
        assert demo.trajectory.times[0] == 0.0
        assert 0 in kf_idx and len(demo.trajectory) - 1 in kf_idx
        transitions = np.nonzero(np.diff(demo.trajectory.gripper_open.astype(int)))[0] + 1
        assert set(transitions.tolist()) <= kf_idx
        again = session.finalize()
        assert again is demo

    def test_discard_leaves_state_hash_unchanged(self, franka):
        session = self.make_session(franka)
        session.anchor([0.0, 0.0, 0.0])
        session.set_mode("pointing")
        h0 = session.state_hash()
        p = session.submit_keypoint(point=[0.4, 0.1, 0.0])
        assert session.state_hash() == h0
        session.discard_preview(p.id)
        assert session.state_hash() == h0

    def test_finalize_empty_session(self, franka):
        session = self.make_session(franka)
        session.anchor([0, 0, 0])
        session.set_mode("pointing")
        with pytest.raises(EmptySession):
            session.finalize("goal")

    def test_accept_stale_preview_rejected(self, franka):
        from mimicarm.errors import SessionStateError

        session = self.make_session(franka)
        session.anchor([0, 0, 0])
        session.set_mode("pointing")
        p1 = session.submit_keypoint(point=[0.4, 0.0, 0.0])
        p2 = session.submit_keypoint(point=[0.4, 0.1, 0.0])
        session.accept_preview(p1.id)
        with pytest.raises(SessionStateError):
            session.accept_preview(p2.id)

    def test_point_off_plane_rejected(self, franka):
        from mimicarm.errors import PointOffPlane

        session = self.make_session(franka)
        with pytest.raises(PointOffPlane):
            session.anchor([0.0, 0.0, 0.5])

    def test_frame_with_z_orientation(self):
        base = frame_with_z([1.0, 2.0, 0.5], [0, 0, 1.0])
        z = base.apply([0, 0, 1.0]) - base.translation
        assert np.abs(z - [0, 0, 1.0]).max() < 1e-12
