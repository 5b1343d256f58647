"""Analytic synthetic sessions: a ray-cast tabletop scene plus a scripted hand
following the arm's own FK, so every acceptance test is self-contained and the
generating joint path is known exactly.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .demo import frame_with_z
from .geom import (CameraIntrinsics, DepthFrame, RgbdFrame, RigidTransform,
                   look_at, quat_to_matrix)
from .handtrack import (FRAME_LANDMARKS, INDEX_TIP, N_LANDMARKS, THUMB_TIP,
                        HandKeypoints2D)
from .kinematics import KinematicChain, forward_kinematics, franka_chain

_SKIN = np.array([204, 164, 132], dtype=np.uint8)
_TABLE_A = np.array([168, 168, 170], dtype=np.uint8)
_TABLE_B = np.array([128, 128, 132], dtype=np.uint8)
_BOX_COLOR = np.array([52, 98, 180], dtype=np.uint8)

# canonical 21-landmark hand in its own palm frame (identity pose, see
# handtrack.estimate_hand_frame for the frame convention); thumb tip is
# positioned per-frame from the scripted aperture
_PALM = {
    "wrist": (0.0, 0.0, 0.0),
    "thumb": [(0.02, -0.03, 0.0), (0.05, -0.05, 0.0), (0.07, -0.06, 0.0)],
    "index": [(0.09, -0.025, 0.0), (0.125, -0.028, 0.0), (0.15, -0.029, 0.0), (0.17, -0.03, 0.0)],
    "middle": [(0.095, 0.0, 0.0), (0.13, 0.0, 0.0), (0.155, 0.0, 0.0), (0.175, 0.0, 0.0)],
    "ring": [(0.09, 0.025, 0.0), (0.125, 0.028, 0.0), (0.15, 0.029, 0.0), (0.17, 0.03, 0.0)],
    "pinky": [(0.085, 0.05, 0.0), (0.115, 0.055, 0.0), (0.135, 0.058, 0.0), (0.15, 0.06, 0.0)],
}


def canonical_hand_points(aperture: float) -> np.ndarray:
    """21 landmarks in the palm frame; estimate_hand_frame of these is identity."""
    pts = np.zeros((N_LANDMARKS, 3))
    pts[0] = _PALM["wrist"]
    pts[1:4] = _PALM["thumb"]
    pts[5:9] = _PALM["index"]
    pts[9:13] = _PALM["middle"]
    pts[13:17] = _PALM["ring"]
    pts[17:21] = _PALM["pinky"]
    centroid = np.mean([pts[0], pts[5], pts[9], pts[17]], axis=0)
    pts -= centroid
    pts[THUMB_TIP] = pts[INDEX_TIP] + np.array([0.0, -1.0, 0.0]) * aperture
    return pts


def min_jerk(tau: np.ndarray) -> np.ndarray:
    """Smooth 0->1 ramp with zero boundary velocity/acceleration."""
    tau = np.clip(tau, 0.0, 1.0)
    return 10 * tau ** 3 - 15 * tau ** 4 + 6 * tau ** 5


@dataclass
class SyntheticSpec:
    n_frames: int = 90
    width: int = 640
    height: int = 480
    rate: float = 30.0
    fx: float = 525.0
    fy: float = 525.0
    camera_eye: tuple = (1.35, 0.05, 0.85)
    camera_target: tuple = (0.30, 0.0, 0.18)
    anchor: tuple = (0.0, 0.0, 0.0)
    box_lo: tuple = (0.42, -0.34, 0.0)
    box_hi: tuple = (0.58, -0.16, 0.12)
    aperture_open: float = 0.08
    aperture_closed: float = 0.015


def scripted_joint_path(chain: KinematicChain, n_frames: int):
    """Hold -> reach -> dwell (grasp) -> move -> dwell (release): the dwells
    create velocity plateaus and the grasp/release flip the gripper state."""
    home = chain.home
    d_a = np.array([0.25, 0.18, 0.10, 0.22, -0.12, -0.20, 0.15])
    d_b = np.array([-0.30, 0.05, -0.15, 0.10, 0.10, 0.12, -0.25])
    q_a = np.clip(home + d_a, chain.lower + 0.05, chain.upper - 0.05)
    q_b = np.clip(home + d_b, chain.lower + 0.05, chain.upper - 0.05)
    # phase boundaries scale with the session length
    f = n_frames / 90.0
    hold0, reach_end = int(5 * f), int(34 * f)
    dwell1_end, move_end = int(44 * f), int(74 * f)
    joints = np.empty((n_frames, chain.n_joints))
    for i in range(n_frames):
        if i < hold0:
            joints[i] = home
        elif i <= reach_end:
            s = min_jerk(np.array([(i - hold0) / max(1, reach_end - hold0)]))[0]
            joints[i] = home + s * (q_a - home)
        elif i <= dwell1_end:
            joints[i] = q_a
        elif i <= move_end:
            s = min_jerk(np.array([(i - dwell1_end) / max(1, move_end - dwell1_end)]))[0]
            joints[i] = q_a + s * (q_b - q_a)
        else:
            joints[i] = q_b
    return joints, {"hold0": hold0, "reach_end": reach_end,
                    "dwell1_end": dwell1_end, "move_end": move_end}


def scripted_apertures(n_frames: int, phases: dict, spec: SyntheticSpec) -> np.ndarray:
    """Close during the first dwell, reopen during the final dwell."""
    close_at = phases["reach_end"] + 2
    open_at = phases["move_end"] + 3
    ap = np.full(n_frames, spec.aperture_open)
    ramp = 3
    for i in range(n_frames):
        if i >= open_at:
            s = min(1.0, (i - open_at) / ramp)
            ap[i] = spec.aperture_closed + s * (spec.aperture_open - spec.aperture_closed)
        elif i >= close_at:
            s = min(1.0, (i - close_at) / ramp)
            ap[i] = spec.aperture_open + s * (spec.aperture_closed - spec.aperture_open)
    return ap


def _render_scene_depth_rgb(spec: SyntheticSpec, cam: RigidTransform):
    """Ray-cast the table plane (z=0) and one box; returns depth map (camera-z
    meters, 0 = sky) and an RGB render."""
    w, h = spec.width, spec.height
    cx, cy = (w - 1) / 2.0, (h - 1) / 2.0
    us, vs = np.meshgrid(np.arange(w), np.arange(h))
    rays = np.stack([(us - cx) / spec.fx, (vs - cy) / spec.fy, np.ones_like(us, dtype=np.float64)], axis=-1)
    rot = quat_to_matrix(cam.rotation)
    dirs = rays @ rot.T  # world direction per unit camera depth
    eye = cam.translation

    # plane z=0: eye_z + t * dz = 0
    dz = dirs[..., 2]
    with np.errstate(divide="ignore", invalid="ignore"):
        t_plane = np.where(dz < -1e-9, -eye[2] / dz, np.inf)

    # axis-aligned box, slab method in the camera-depth parameterization
    lo = np.asarray(spec.box_lo)
    hi = np.asarray(spec.box_hi)
    t0 = np.full((h, w), -np.inf)
    t1 = np.full((h, w), np.inf)
    for ax in range(3):
        d = dirs[..., ax]
        near = np.where(np.abs(d) > 1e-12, (lo[ax] - eye[ax]) / np.where(d == 0, 1, d), -np.inf)
        far = np.where(np.abs(d) > 1e-12, (hi[ax] - eye[ax]) / np.where(d == 0, 1, d), np.inf)
        parallel_ok = (np.abs(dirs[..., ax]) > 1e-12) | ((eye[ax] >= lo[ax]) & (eye[ax] <= hi[ax]))
        lo_t = np.minimum(near, far)
        hi_t = np.maximum(near, far)
        t0 = np.maximum(t0, np.where(parallel_ok, lo_t, np.inf))
        t1 = np.minimum(t1, np.where(parallel_ok, hi_t, -np.inf))
    box_hit = (t1 >= t0) & (t0 > 1e-6)
    t_box = np.where(box_hit, t0, np.inf)

    depth = np.minimum(t_plane, t_box)
    rgb = np.zeros((h, w, 3), dtype=np.uint8)
    plane_vis = (t_plane <= t_box) & np.isfinite(t_plane)
    hit_pts = eye + dirs * t_plane[..., None]
    checker = ((np.floor(hit_pts[..., 0] / 0.1) + np.floor(hit_pts[..., 1] / 0.1)) % 2).astype(bool)
    rgb[plane_vis & checker] = _TABLE_A
    rgb[plane_vis & ~checker] = _TABLE_B
    rgb[t_box < t_plane] = _BOX_COLOR
    depth = np.where(np.isfinite(depth), depth, 0.0).astype(np.float32)
    return depth, rgb


def _paint_disk(img: np.ndarray, u: float, v: float, radius: int, value):
    h, w = img.shape[:2]
    u0, u1 = max(0, int(u - radius)), min(w - 1, int(u + radius))
    v0, v1 = max(0, int(v - radius)), min(h - 1, int(v + radius))
    if u0 > u1 or v0 > v1:
        return
    uu, vv = np.meshgrid(np.arange(u0, u1 + 1), np.arange(v0, v1 + 1))
    disk = (uu - u) ** 2 + (vv - v) ** 2 <= radius ** 2
    img[v0:v1 + 1, u0:u1 + 1][disk] = value


def generate_session(out_dir, spec: SyntheticSpec | None = None,
                     chain: KinematicChain | None = None):
    """Build the bundled synthetic session archive; returns its manifest path.

    The hand track is the FK of a scripted joint path (offset identity), so
    the kinesthetic pipeline can be checked against exact ground truth.
    """
    from .archive import write_archive

    spec = spec or SyntheticSpec()
    base = frame_with_z(np.asarray(spec.anchor, dtype=np.float64), np.array([0.0, 0.0, 1.0]))
    chain = (chain or franka_chain()).with_base(base)
    cam = look_at(spec.camera_eye, spec.camera_target)
    w, h = spec.width, spec.height
    intr = CameraIntrinsics(spec.fx, spec.fy, (w - 1) / 2.0, (h - 1) / 2.0, w, h)
    scene_depth, scene_rgb = _render_scene_depth_rgb(spec, cam)

    joints, phases = scripted_joint_path(chain, spec.n_frames)
    apertures = scripted_apertures(spec.n_frames, phases, spec)
    world_to_cam = cam.inverse()
    cam_rot = quat_to_matrix(world_to_cam.rotation)

    frames, keypoints, masks = [], [], []
    tcp_poses = []
    for i in range(spec.n_frames):
        t = i / spec.rate
        fk = forward_kinematics(chain, joints[i])
        tcp_poses.append(fk.tcp)
        hand_world = fk.tcp.apply(canonical_hand_points(apertures[i]))
        hand_cam = hand_world @ cam_rot.T + world_to_cam.translation
        if (hand_cam[:, 2] <= 0.05).any():
            raise RuntimeError(f"frame {i}: hand behind camera; adjust the spec")
        us = intr.fx * hand_cam[:, 0] / hand_cam[:, 2] + intr.cx
        vs = intr.fy * hand_cam[:, 1] / hand_cam[:, 2] + intr.cy
        if (us < 8).any() or (us > w - 9).any() or (vs < 8).any() or (vs > h - 9).any():
            raise RuntimeError(f"frame {i}: hand leaves the view; adjust the spec")

        depth = scene_depth.copy()
        rgb = scene_rgb.copy()
        mask = np.zeros((h, w), dtype=bool)
        for j in range(N_LANDMARKS):
            zj = float(hand_cam[j, 2])
            uj, vj = float(us[j]), float(vs[j])
            radius = max(3, int(round(intr.fx * 0.012 / zj)))
            _paint_disk(mask, uj, vj, radius, True)
            _paint_disk(rgb, uj, vj, radius, _SKIN)
            _paint_disk(depth, uj, vj, 2, np.float32(zj))
        # exact depth at the sampled pixel of each landmark; critical frame
        # landmarks written last so overlaps cannot corrupt them
        order = [j for j in range(N_LANDMARKS) if j not in FRAME_LANDMARKS] + list(FRAME_LANDMARKS)
        crit_pixels = set()
        for j in order:
            pu = min(w - 1, max(0, int(round(us[j]))))
            pv = min(h - 1, max(0, int(round(vs[j]))))
            if j in FRAME_LANDMARKS:
                if (pu, pv) in crit_pixels:
                    raise RuntimeError(f"frame {i}: frame landmarks collide at one pixel")
                crit_pixels.add((pu, pv))
            depth[pv, pu] = np.float32(hand_cam[j, 2])
        pts = np.column_stack([us, vs])
        keypoints.append(HandKeypoints2D(pts, np.ones(N_LANDMARKS), t))
        frames.append(RgbdFrame(rgb, DepthFrame(depth, t), cam, intr, t))
        masks.append(mask)

    ground_truth = {
        "joints": joints.tolist(),
        "apertures": apertures.tolist(),
        "base_pose": {"quat_wxyz": [float(v) for v in base.rotation],
                      "xyz": [float(v) for v in base.translation]},
        "tcp": [{"quat_wxyz": [float(v) for v in p.rotation],
                 "xyz": [float(v) for v in p.translation]} for p in tcp_poses],
        "phases": phases,
        "hand_offset": "identity",
    }
    return write_archive(out_dir, intr, spec.rate, frames, keypoints, masks,
                         plate=scene_rgb, anchor_point=spec.anchor,
                         ground_truth=ground_truth)
