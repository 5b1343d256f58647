"""Demonstration sessions: the three interaction modes (keypoint pointing,
direct pose entry, hand mirroring), collision-checked trajectory synthesis,
keyframe extraction, and assembly of the final demonstration record.
"""
from __future__ import annotations

import hashlib
import math
import uuid
from dataclasses import dataclass, field, replace

import numpy as np

from .errors import (AllSamplesUnreachable, EmptySession, NoPlane,
                     PlanningFailed, PointOffPlane, SessionStateError,
                     Unreachable, UnreachableKeypoint, WrongMode)
from .geom import RigidTransform, compose, quat_slerp, quat_to_matrix, matrix_to_quat
from .handtrack import HandTrack, gripper_state
from .kinematics import (IkOptions, JointState, KinematicChain,
                         forward_kinematics, inverse_kinematics)
from .scene import Plane, PointCloud, VoxelGrid, collides_any, voxelize, workspace_bounds_on_plane

GRIPPER_OPEN = "open"
GRIPPER_CLOSED = "closed"

MODE_POINTING = "pointing"
MODE_GUI = "gui"
MODE_KINESTHETIC = "kinesthetic"
MODES = (MODE_POINTING, MODE_GUI, MODE_KINESTHETIC)

STATES = ("created", "scene_loaded", "anchored", "collecting", "finalized")


@dataclass
class KeyPoint:
    target: RigidTransform  # TCP, world
    gripper_command: str  # "open" | "closed"
    solved_q: JointState
    dwell: float = 0.0  # seconds of hold after arrival

    def __post_init__(self):
        if self.gripper_command not in (GRIPPER_OPEN, GRIPPER_CLOSED):
            raise ValueError(f"bad gripper command {self.gripper_command!r}")


@dataclass
class Trajectory:
    """Column arrays over samples: strictly increasing times, limit-respecting
    joints, commanded apertures, binary gripper state, and feedback flags."""

    times: np.ndarray  # (N,)
    joints: np.ndarray  # (N, R)
    apertures: np.ndarray  # (N,)
    gripper_open: np.ndarray  # (N,) bool
    collided: np.ndarray  # (N,) bool
    ik_failed: np.ndarray | None = None  # (N,) bool, mimic mode only

    def __post_init__(self):
        self.times = np.asarray(self.times, dtype=np.float64).reshape(-1)
        n = len(self.times)
        self.joints = np.asarray(self.joints, dtype=np.float64).reshape(n, -1)
        self.apertures = np.asarray(self.apertures, dtype=np.float64).reshape(n)
        self.gripper_open = np.asarray(self.gripper_open, dtype=bool).reshape(n)
        self.collided = np.asarray(self.collided, dtype=bool).reshape(n)
        if self.ik_failed is None:
            self.ik_failed = np.zeros(n, dtype=bool)
        if n > 1 and not (np.diff(self.times) > 0).all():
            raise ValueError("trajectory timestamps must be strictly increasing")

    def __len__(self) -> int:
        return len(self.times)

    def joint_state(self, i: int) -> JointState:
        return JointState(self.joints[i], float(self.apertures[i]))

    def shifted(self, dt: float) -> "Trajectory":
        return Trajectory(self.times + dt, self.joints, self.apertures,
                          self.gripper_open, self.collided, self.ik_failed)


def concat_trajectories(segments: list[Trajectory]) -> Trajectory:
    if not segments:
        raise ValueError("no segments")
    return Trajectory(
        np.concatenate([s.times for s in segments]),
        np.concatenate([s.joints for s in segments]),
        np.concatenate([s.apertures for s in segments]),
        np.concatenate([s.gripper_open for s in segments]),
        np.concatenate([s.collided for s in segments]),
        np.concatenate([s.ik_failed for s in segments]),
    )


@dataclass
class KeyFrame:
    t: float
    tcp: RigidTransform
    gripper: str  # "open" | "closed"
    q: JointState
    index: int  # sample index in the owning trajectory


@dataclass
class Demonstration:
    language_goal: str
    scene_ref: str
    keypoints: list[KeyPoint]
    trajectory: Trajectory
    keyframes: list[KeyFrame]
    mode: str


@dataclass(frozen=True)
class PlanOptions:
    cartesian_step: float = 0.01  # m between straight-line waypoints
    rot_step: float = 0.05  # rad between waypoints for rotation-only moves
    max_joint_jump: float = 0.2  # rad; larger consecutive jumps fall back to joint lerp
    preview_rate: float = 30.0  # Hz sample spacing of synthesized segments
    ik: IkOptions = field(default_factory=lambda: IkOptions(restarts=0, max_iters=100))


def frame_with_z(origin, z_dir) -> RigidTransform:
    """Deterministic frame at origin with +z along z_dir (x projected from world x)."""
    z = np.asarray(z_dir, dtype=np.float64)
    z = z / np.linalg.norm(z)
    x = np.array([1.0, 0.0, 0.0])
    x = x - (x @ z) * z
    if np.linalg.norm(x) < 1e-6:
        x = np.array([0.0, 1.0, 0.0])
        x = x - (x @ z) * z
    x = x / np.linalg.norm(x)
    y = np.cross(z, x)
    rot = np.column_stack([x, y, z])
    return RigidTransform(matrix_to_quat(rot), np.asarray(origin, dtype=np.float64))


def top_down_pose(point, plane_normal) -> RigidTransform:
    """Complete a bare 3-D point to a TCP pose: z anti-parallel to the support
    normal, x chosen deterministically in the plane."""
    return frame_with_z(point, -np.asarray(plane_normal, dtype=np.float64))


def solve_keypoint(chain: KinematicChain, target: RigidTransform, seed: JointState,
                   gripper_command: str, dwell: float = 0.2,
                   ik: IkOptions | None = None) -> KeyPoint:
    """IK from the current configuration; surfaces failure as UnreachableKeypoint."""
    try:
        res = inverse_kinematics(chain, target, seed, ik)
    except Unreachable as e:
        raise UnreachableKeypoint(str(e)) from e
    aperture = chain.max_aperture if gripper_command == GRIPPER_OPEN else 0.0
    solved = JointState(res.state.angles, aperture)
    return KeyPoint(target, gripper_command, solved, dwell)


def plan_segment(chain: KinematicChain, from_q: JointState, to: KeyPoint,
                 grid: VoxelGrid | None, opts: PlanOptions | None = None,
                 prev_gripper_open: bool = True) -> Trajectory:
    """Straight-line TCP sweep to a keypoint, IK warm-seeded waypoint to
    waypoint, joint-space lerp over any sub-span where IK fails or jumps.

    Collisions are feedback: flagged per sample, never an error. The returned
    segment excludes the start sample (it duplicates the caller's last state)
    and appends ``to.dwell`` seconds of hold at arrival.
    """
    opts = opts or PlanOptions()
    if to.solved_q is None:
        raise PlanningFailed("keypoint has no solved configuration")
    start = forward_kinematics(chain, from_q).tcp
    d_pos = float(np.linalg.norm(to.target.translation - start.translation))
    d_rot = 2.0 * math.acos(min(1.0, abs(float(np.dot(start.rotation, to.target.rotation)))))
    n = max(1, int(math.ceil(d_pos / opts.cartesian_step)),
            int(math.ceil(d_rot / opts.rot_step)))

    anchors = [(0, np.asarray(from_q.angles, dtype=np.float64))]
    qs: list[np.ndarray | None] = [None] * (n + 1)
    qs[0] = anchors[0][1]
    for i in range(1, n):
        s = i / n
        pose = RigidTransform(
            quat_slerp(start.rotation, to.target.rotation, s),
            (1 - s) * start.translation + s * to.target.translation)
        try:
            res = inverse_kinematics(chain, pose, JointState(anchors[-1][1]), opts.ik)
        except Unreachable:
            continue
        jump = float(np.max(np.abs(res.state.angles - anchors[-1][1])))
        if jump > opts.max_joint_jump * (i - anchors[-1][0]):
            continue
        qs[i] = res.state.angles
        anchors.append((i, res.state.angles))
    qs[n] = np.asarray(to.solved_q.angles, dtype=np.float64)
    anchors.append((n, qs[n]))

    # joint-space lerp across unsolved sub-spans
    for (i0, q0), (i1, q1) in zip(anchors, anchors[1:]):
        for i in range(i0 + 1, i1):
            if qs[i] is None:
                s = (i - i0) / (i1 - i0)
                qs[i] = (1 - s) * q0 + s * q1

    n_dwell = int(round(to.dwell * opts.preview_rate))
    count = n + n_dwell
    dt = 1.0 / opts.preview_rate
    times = np.arange(1, count + 1) * dt
    joints = np.stack([qs[min(i + 1, n)] for i in range(count)])
    open_cmd = to.gripper_command == GRIPPER_OPEN
    gripper = np.empty(count, dtype=bool)
    gripper[:n - 1] = prev_gripper_open
    gripper[n - 1:] = open_cmd  # command applies at arrival
    apertures = np.where(gripper, chain.max_aperture, 0.0)
    collided = np.zeros(count, dtype=bool)
    if grid is not None:
        for i in range(count):
            collided[i] = collides_any(chain, joints[i], grid)
    return Trajectory(times, joints, apertures, gripper, collided)


def mimic_hand(chain: KinematicChain, track: HandTrack, offset: RigidTransform,
               grid: VoxelGrid | None = None, start_q: JointState | None = None,
               ik: IkOptions | None = None, close_below: float = 0.03,
               open_above: float = 0.06) -> Trajectory:
    """Mirror the hand: per-sample IK on sample.frame o offset, warm-seeded.

    Samples whose IK fails carry the previous configuration forward and are
    flagged; the hand aperture stream maps to the binary gripper through the
    hysteresis band.
    """
    if not len(track):
        raise ValueError("empty hand track")
    # track tighter than the 1e-4/1e-3 contract: lift/anchor error stacks on
    # top of the IK residual and the sum must stay inside the contract
    ik = ik or IkOptions(pos_tol=2e-5, rot_tol=2e-4, restarts=2, max_iters=200)
    q_prev = np.asarray((start_q or JointState(chain.home)).angles, dtype=np.float64)
    n = len(track)
    joints = np.empty((n, chain.n_joints))
    failed = np.zeros(n, dtype=bool)
    for i, sample in enumerate(track.samples):
        target = compose(sample.frame, offset)
        try:
            res = inverse_kinematics(chain, target, JointState(q_prev), ik)
            q_prev = res.state.angles
        except Unreachable:
            failed[i] = True
        joints[i] = q_prev
    if failed.all():
        raise AllSamplesUnreachable(f"IK failed on all {n} samples")
    open_flags = gripper_state(track.apertures(), close_below, open_above)
    apertures = np.where(open_flags, chain.max_aperture, 0.0)
    collided = np.zeros(n, dtype=bool)
    if grid is not None:
        for i in range(n):
            collided[i] = collides_any(chain, joints[i], grid)
    return Trajectory(track.timestamps(), joints, apertures, open_flags, collided, failed)


def extract_keyframes(chain: KinematicChain, traj: Trajectory,
                      vel_eps: float = 0.01, min_gap: int = 5) -> list[KeyFrame]:
    """Keyframes: gripper transitions, onsets of velocity plateaus after
    motion, and always the first and last samples.

    A plateau onset is the first sample where every central-difference joint
    velocity drops below vel_eps, provided the arm moved since the previous
    keyframe and that keyframe is at least min_gap samples back.
    """
    if not len(traj):
        raise ValueError("empty trajectory")
    n = len(traj)
    selected = [0]
    last_kf = 0
    moved = False
    for i in range(1, n):
        if traj.gripper_open[i] != traj.gripper_open[i - 1]:
            selected.append(i)
            last_kf = i
            moved = False
            continue
        if 1 <= i <= n - 2:
            dt = traj.times[i + 1] - traj.times[i - 1]
            vel = np.abs(traj.joints[i + 1] - traj.joints[i - 1]) / dt
            if (vel >= vel_eps).any():
                moved = True
            elif moved and i - last_kf >= min_gap:
                selected.append(i)
                last_kf = i
                moved = False
    if selected[-1] != n - 1:
        selected.append(n - 1)
    indices = sorted(set(selected))
    frames = []
    for i in indices:
        fk = forward_kinematics(chain, traj.joints[i], limits_checked=False)
        frames.append(KeyFrame(
            t=float(traj.times[i]), tcp=fk.tcp,
            gripper=GRIPPER_OPEN if traj.gripper_open[i] else GRIPPER_CLOSED,
            q=traj.joint_state(i), index=i))
    return frames


def build_demonstration(chain: KinematicChain, trajectory: Trajectory,
                        language_goal: str, scene_ref: str, mode: str,
                        keypoints: list[KeyPoint] | None = None,
                        vel_eps: float = 0.01, min_gap: int = 5) -> Demonstration:
    keyframes = extract_keyframes(chain, trajectory, vel_eps, min_gap)
    return Demonstration(language_goal, scene_ref, list(keypoints or []),
                         trajectory, keyframes, mode)


# ---------------------------------------------------------------------------
# interactive session
# ---------------------------------------------------------------------------

@dataclass
class Preview:
    id: str
    kind: str  # "keypoint" | "hand"
    keypoint: KeyPoint | None
    segment: Trajectory
    parent_hash: str  # session hash the preview was planned against


class DemoSession:
    """Single-writer session state machine.

    States advance created -> scene_loaded -> anchored -> collecting ->
    finalized; mode is settable while collecting. Previews are staged
    trajectories: accepting one mutates the session, discarding leaves it
    bit-identical (verified by state_hash).
    """

    def __init__(self, chain: KinematicChain, cloud: PointCloud, plane: Plane | None,
                 scene_ref: str, plan_opts: PlanOptions | None = None,
                 plane_inlier_dist: float = 0.01, collision_resolution: float = 0.01,
                 workspace_side: float = 1.0):
        self._chain_template = chain
        self.cloud = cloud
        self.plane = plane
        self.scene_ref = scene_ref
        self.plan_opts = plan_opts or PlanOptions()
        self.plane_inlier_dist = plane_inlier_dist
        self.collision_resolution = collision_resolution
        self.workspace_side = workspace_side

        self.state = "scene_loaded"
        self.mode: str | None = None
        self.chain: KinematicChain | None = None
        self.grid: VoxelGrid | None = None
        self.workspace: tuple[np.ndarray, np.ndarray] | None = None
        self.current_q: JointState | None = None
        self.gripper_open = True
        self.keypoints: list[KeyPoint] = []
        self.segments: list[Trajectory] = []
        self.language_goal: str | None = None
        self.previews: dict[str, Preview] = {}
        self._demo: Demonstration | None = None

    # -- state helpers ------------------------------------------------------

    def _require_state(self, *allowed: str):
        if self.state not in allowed:
            raise SessionStateError(f"operation invalid in state {self.state!r} "
                                    f"(requires {'/'.join(allowed)})")

    def state_hash(self) -> str:
        """Deterministic digest of everything acceptance can mutate."""
        h = hashlib.sha256()
        h.update(self.state.encode())
        h.update((self.mode or "").encode())
        h.update((self.language_goal or "").encode())
        h.update(b"\x01" if self.gripper_open else b"\x00")
        if self.chain is not None:
            h.update(self.chain.base_pose.as_matrix().tobytes())
        if self.current_q is not None:
            h.update(self.current_q.angles.tobytes())
            h.update(np.float64(self.current_q.gripper_aperture).tobytes())
        for kp in self.keypoints:
            h.update(kp.target.as_matrix().tobytes())
            h.update(kp.gripper_command.encode())
            h.update(kp.solved_q.angles.tobytes())
        for seg in self.segments:
            h.update(seg.times.tobytes())
            h.update(seg.joints.tobytes())
            h.update(seg.gripper_open.tobytes())
            h.update(seg.collided.tobytes())
        return h.hexdigest()

    # -- lifecycle ----------------------------------------------------------

    def anchor(self, point, off_plane_threshold: float = 0.05) -> RigidTransform:
        """Place the robot base on the support plane at (the projection of) point."""
        self._require_state("scene_loaded", "anchored")
        if self.plane is None:
            raise NoPlane("scene has no detected support plane")
        dist = abs(float(self.plane.distance(point)))
        if dist > off_plane_threshold:
            raise PointOffPlane(f"point {dist:.3f} m off plane > {off_plane_threshold} m")
        base = frame_with_z(self.plane.project(point), self.plane.normal)
        self.chain = self._chain_template.with_base(base)
        self.current_q = JointState(self.chain.home, self.chain.max_aperture)
        self.workspace = workspace_bounds_on_plane(self.plane, point, self.workspace_side)
        self.grid = self._collision_grid()
        self.state = "anchored"
        return base

    def _collision_grid(self) -> VoxelGrid:
        # the support plane itself is not an obstacle: the arm works on it
        keep = np.abs(self.plane.distance(self.cloud.points)) > 2 * self.plane_inlier_dist
        pts = self.cloud.points[keep]
        cloud = PointCloud(pts) if len(pts) else PointCloud(np.zeros((0, 3)))
        if not len(cloud):
            lo, hi = self.workspace
            dims = np.maximum(1, np.ceil((hi - lo) / self.collision_resolution)).astype(int)
            return VoxelGrid.empty(lo, self.collision_resolution, tuple(dims))
        return voxelize(cloud, self.workspace, self.collision_resolution)

    def set_mode(self, mode: str):
        if mode not in MODES:
            raise WrongMode(f"unknown mode {mode!r}")
        self._require_state("anchored", "collecting")
        self.mode = mode
        self.state = "collecting"

    # -- keypoint / preview flow ---------------------------------------------

    def submit_keypoint(self, point=None, pose: RigidTransform | None = None,
                        gripper_command: str = GRIPPER_OPEN, dwell: float = 0.2) -> Preview:
        """Pointing mode takes a bare 3-D point (completed to a top-down pose);
        GUI mode takes a full pose. Returns a staged preview."""
        self._require_state("collecting")
        if (point is None) == (pose is None):
            raise ValueError("exactly one of point/pose required")
        if point is not None:
            if self.mode != MODE_POINTING:
                raise WrongMode(f"point input requires {MODE_POINTING} mode, session is {self.mode}")
            if self.plane is None:
                raise NoPlane("cannot complete a point without a support plane")
            target = top_down_pose(point, self.plane.normal)
        else:
            if self.mode != MODE_GUI:
                raise WrongMode(f"pose input requires {MODE_GUI} mode, session is {self.mode}")
            target = pose
        kp = solve_keypoint(self.chain, target, self.current_q, gripper_command, dwell)
        segment = plan_segment(self.chain, self.current_q, kp, self.grid,
                               self.plan_opts, self.gripper_open)
        return self._stage(Preview(uuid.uuid4().hex, "keypoint", kp, segment,
                                   self.state_hash()))

    def submit_hand_track(self, track: HandTrack, offset: RigidTransform | None = None) -> Preview:
        self._require_state("collecting")
        if self.mode != MODE_KINESTHETIC:
            raise WrongMode(f"hand frames require {MODE_KINESTHETIC} mode, session is {self.mode}")
        segment = mimic_hand(self.chain, track, offset or RigidTransform.identity(),
                             self.grid, self.current_q)
        return self._stage(Preview(uuid.uuid4().hex, "hand", None, segment,
                                   self.state_hash()))

    def _stage(self, preview: Preview) -> Preview:
        self.previews[preview.id] = preview
        return preview

    def get_preview(self, preview_id: str) -> Preview:
        if preview_id not in self.previews:
            raise SessionStateError(f"unknown or consumed preview {preview_id!r}")
        return self.previews[preview_id]

    def accept_preview(self, preview_id: str):
        """Apply a staged preview; the token is consumed and stale previews
        (planned against an older session state) are rejected."""
        self._require_state("collecting")
        preview = self.get_preview(preview_id)
        if preview.parent_hash != self.state_hash():
            raise SessionStateError("preview is stale: session changed since planning")
        prev_end = float(self.segments[-1].times[-1]) if self.segments else 0.0
        if preview.kind == "keypoint":
            # keypoint segments carry relative times starting one tick after 0
            segment = preview.segment.shifted(prev_end)
            self.keypoints.append(preview.keypoint)
        else:
            dt = 1.0 / self.plan_opts.preview_rate
            segment = preview.segment.shifted(
                prev_end + dt - float(preview.segment.times[0]))
        self.segments.append(segment)
        self.current_q = segment.joint_state(len(segment) - 1)
        self.gripper_open = bool(segment.gripper_open[-1])
        self.previews.clear()  # earlier previews are stale by construction

    def discard_preview(self, preview_id: str):
        self.get_preview(preview_id)
        del self.previews[preview_id]

    # -- finalize -------------------------------------------------------------

    def finalize(self, language_goal: str | None = None) -> Demonstration:
        """Assemble the immutable record; idempotent once finalized."""
        if self.state == "finalized":
            return self._demo
        self._require_state("collecting")
        if language_goal is not None:
            self.language_goal = language_goal
        if not self.segments:
            raise EmptySession("no accepted segments")
        if not self.language_goal:
            raise EmptySession("language goal not set")
        start = Trajectory(
            np.array([0.0]), self.chain.home[None, :],
            np.array([self.chain.max_aperture]), np.array([True]),
            np.array([collides_any(self.chain, self.chain.home, self.grid)]))
        full = concat_trajectories([start] + self.segments)
        self._demo = build_demonstration(
            self.chain, full, self.language_goal, self.scene_ref,
            self.mode or MODE_POINTING, self.keypoints)
        self.state = "finalized"
        self.previews.clear()
        return self._demo
