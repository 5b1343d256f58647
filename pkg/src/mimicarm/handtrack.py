"""Lift 2-D hand keypoints + depth to 6-D palm poses with open/closed state.

Landmark ordering follows the de-facto 21-point hand model: wrist first, then
four joints per finger (thumb, index, middle, ring, pinky), MCP->tip.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import DegenerateHand, TooFewValidPoints
from .geom import (RgbdFrame, RigidTransform, matrix_to_quat, quat_slerp,
                   quat_to_matrix, unproject)

N_LANDMARKS = 21
WRIST = 0
THUMB_TIP = 4
INDEX_MCP = 5
INDEX_TIP = 8
MIDDLE_MCP = 9
RING_MCP = 13
PINKY_MCP = 17

# landmarks the palm-frame construction cannot do without
FRAME_LANDMARKS = (WRIST, INDEX_MCP, MIDDLE_MCP, PINKY_MCP, THUMB_TIP, INDEX_TIP)


@dataclass
class HandKeypoints2D:
    points: np.ndarray  # (21, 2) pixels
    confidence: np.ndarray  # (21,) in [0, 1]
    timestamp: float

    def __post_init__(self):
        self.points = np.asarray(self.points, dtype=np.float64).reshape(N_LANDMARKS, 2)
        self.confidence = np.asarray(self.confidence, dtype=np.float64).reshape(N_LANDMARKS)
        if self.confidence.min() < 0 or self.confidence.max() > 1:
            raise ValueError("confidences must lie in [0, 1]")


@dataclass
class HandPose6D:
    """Palm frame in world coordinates plus thumb-to-index aperture."""

    frame: RigidTransform
    aperture: float
    valid: bool = True
    timestamp: float = 0.0

    def __post_init__(self):
        if self.aperture < 0:
            raise ValueError("aperture must be >= 0")


@dataclass
class HandTrack:
    samples: list[HandPose6D] = field(default_factory=list)
    nominal_rate: float = 30.0  # Hz

    def __post_init__(self):
        ts = [s.timestamp for s in self.samples]
        if any(b <= a for a, b in zip(ts, ts[1:])):
            raise ValueError("timestamps must be strictly increasing")

    def __len__(self) -> int:
        return len(self.samples)

    def timestamps(self) -> np.ndarray:
        return np.array([s.timestamp for s in self.samples])

    def apertures(self) -> np.ndarray:
        return np.array([s.aperture for s in self.samples])


def _sample_depth(depth: np.ndarray, u: float, v: float, hole_radius_px: int):
    """Depth at the rounded pixel, windowed-median fallback over holes."""
    h, w = depth.shape
    ui = min(w - 1, max(0, int(round(u))))
    vi = min(h - 1, max(0, int(round(v))))
    z = depth[vi, ui]
    if np.isfinite(z):
        return float(z)
    r = hole_radius_px
    window = depth[max(0, vi - r):vi + r + 1, max(0, ui - r):ui + r + 1]
    valid = window[np.isfinite(window)]
    if not valid.size:
        return None
    return float(np.median(valid))


def lift_keypoints(kp: HandKeypoints2D, frame: RgbdFrame, conf_min: float = 0.5,
                   hole_radius_px: int = 5, max_time_offset: float | None = None):
    """21 world-frame keypoints + validity flags from one RGB-D frame.

    max_time_offset defaults to one frame period at 30 Hz; keypoint and frame
    timestamps further apart than that are rejected.
    """
    period = max_time_offset if max_time_offset is not None else 1.0 / 30.0
    if abs(kp.timestamp - frame.timestamp) > period:
        raise ValueError(
            f"keypoints at t={kp.timestamp} vs frame t={frame.timestamp}: "
            f"offset exceeds one frame period ({period}s)")
    depth = frame.depth.depth
    intr = frame.intrinsics
    rot = quat_to_matrix(frame.camera_pose.rotation)
    trans = frame.camera_pose.translation
    points = np.zeros((N_LANDMARKS, 3))
    valid = np.zeros(N_LANDMARKS, dtype=bool)
    for i in range(N_LANDMARKS):
        if kp.confidence[i] < conf_min:
            continue
        u, v = kp.points[i]
        if not (0 <= u < intr.width and 0 <= v < intr.height):
            continue
        z = _sample_depth(depth, u, v, hole_radius_px)
        if z is None or z <= 0:
            continue
        points[i] = rot @ unproject((u, v), z, intr) + trans
        valid[i] = True
    if valid.sum() < 4:
        raise TooFewValidPoints(f"{int(valid.sum())} valid keypoints < 4")
    return points, valid


def estimate_hand_frame(points: np.ndarray, valid: np.ndarray,
                        timestamp: float = 0.0) -> HandPose6D:
    """Palm frame convention: origin at the centroid of wrist + three MCPs,
    x toward the middle MCP, z normal to the palm, y completing the frame.
    Aperture is the thumb-tip to index-tip distance.
    """
    missing = [i for i in FRAME_LANDMARKS if not valid[i]]
    if missing:
        raise TooFewValidPoints(f"frame landmarks missing: {missing}")
    wrist = points[WRIST]
    x_raw = points[MIDDLE_MCP] - wrist
    if np.linalg.norm(x_raw) < 1e-6:
        raise DegenerateHand("wrist coincides with middle MCP")
    x = x_raw / np.linalg.norm(x_raw)
    across = points[PINKY_MCP] - points[INDEX_MCP]
    z_raw = np.cross(x, across)
    if np.linalg.norm(z_raw) < 1e-6:
        raise DegenerateHand("palm construction vectors are collinear")
    z = z_raw / np.linalg.norm(z_raw)
    y = np.cross(z, x)
    centroid = points[[WRIST, INDEX_MCP, MIDDLE_MCP, PINKY_MCP]].mean(axis=0)
    rot = np.column_stack([x, y, z])
    aperture = float(np.linalg.norm(points[THUMB_TIP] - points[INDEX_TIP]))
    return HandPose6D(RigidTransform(matrix_to_quat(rot), centroid), aperture,
                      valid=True, timestamp=timestamp)


def gripper_state(apertures, close_below: float = 0.03,
                  open_above: float = 0.06) -> np.ndarray:
    """Hysteresis open/closed classification; True = open, initial state open."""
    if not open_above > close_below:
        raise ValueError("open_above must exceed close_below")
    apertures = np.asarray(apertures, dtype=np.float64)
    out = np.empty(len(apertures), dtype=bool)
    is_open = True
    for i, a in enumerate(apertures):
        if a < close_below:
            is_open = False
        elif a > open_above:
            is_open = True
        out[i] = is_open
    return out


def smooth_track(track: HandTrack, alpha: float = 0.3, rot_alpha: float | None = None,
                 outlier_jump: float = 0.30) -> HandTrack:
    """Exponential smoothing on translation/aperture, slerp toward new rotations.

    Samples whose translation jumps more than outlier_jump from the filter
    prediction are dropped; the filter carries over them unchanged.
    """
    if not len(track):
        raise ValueError("empty track")
    if not 0 < alpha <= 1:
        raise ValueError("alpha must be in (0, 1]")
    rot_alpha = alpha if rot_alpha is None else rot_alpha
    out: list[HandPose6D] = []
    s_trans = None
    s_quat = None
    s_ap = 0.0
    for sample in track.samples:
        t = sample.frame.translation
        if s_trans is None:
            s_trans, s_quat, s_ap = t.copy(), sample.frame.rotation.copy(), sample.aperture
        else:
            if np.linalg.norm(t - s_trans) > outlier_jump:
                continue  # dropped outlier
            s_trans = alpha * t + (1 - alpha) * s_trans
            s_quat = quat_slerp(s_quat, sample.frame.rotation, rot_alpha)
            s_ap = alpha * sample.aperture + (1 - alpha) * s_ap
        out.append(HandPose6D(RigidTransform(s_quat, s_trans), max(0.0, s_ap),
                              valid=sample.valid, timestamp=sample.timestamp))
    return HandTrack(out, track.nominal_rate)
