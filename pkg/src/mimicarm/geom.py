"""Rigid-body transforms, pinhole camera model, and depth projection math.

Conventions (used everywhere in this package):
  * quaternions are (w, x, y, z), kept unit-norm by construction
  * camera frame is right-handed, +z forward, +x right, +y down
  * all angles in radians, all lengths in meters
  * invalid depth is 0 or NaN on disk / at ingest, NaN internally
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import BehindCamera, InvalidDepth, OutOfBounds

_QUAT_NORM_TOL = 1e-9


# ---------------------------------------------------------------------------
# quaternion helpers (w, x, y, z)
# ---------------------------------------------------------------------------

def quat_normalize(q) -> np.ndarray:
    q = np.asarray(q, dtype=np.float64)
    n = np.linalg.norm(q)
    if n == 0.0 or not np.isfinite(n):
        raise ValueError("cannot normalize zero/non-finite quaternion")
    return q / n


def quat_multiply(a, b) -> np.ndarray:
    aw, ax, ay, az = a
    bw, bx, by, bz = b
    return np.array([
        aw * bw - ax * bx - ay * by - az * bz,
        aw * bx + ax * bw + ay * bz - az * by,
        aw * by - ax * bz + ay * bw + az * bx,
        aw * bz + ax * by - ay * bx + az * bw,
    ])


def quat_conjugate(q) -> np.ndarray:
    return np.array([q[0], -q[1], -q[2], -q[3]])


def quat_rotate(q, v) -> np.ndarray:
    """Rotate vector(s) v by quaternion q (matrix form, cheaper for arrays)."""
    return np.asarray(v, dtype=np.float64) @ quat_to_matrix(q).T


def quat_to_matrix(q) -> np.ndarray:
    w, x, y, z = q
    return np.array([
        [1 - 2 * (y * y + z * z), 2 * (x * y - w * z), 2 * (x * z + w * y)],
        [2 * (x * y + w * z), 1 - 2 * (x * x + z * z), 2 * (y * z - w * x)],
        [2 * (x * z - w * y), 2 * (y * z + w * x), 1 - 2 * (x * x + y * y)],
    ])


def matrix_to_quat(m) -> np.ndarray:
    """Shepperd's method: pick the numerically largest pivot."""
    m = np.asarray(m, dtype=np.float64)
    t = np.trace(m)
    if t > 0:
        s = math.sqrt(t + 1.0) * 2.0
        q = np.array([0.25 * s,
                      (m[2, 1] - m[1, 2]) / s,
                      (m[0, 2] - m[2, 0]) / s,
                      (m[1, 0] - m[0, 1]) / s])
    elif m[0, 0] >= m[1, 1] and m[0, 0] >= m[2, 2]:
        s = math.sqrt(1.0 + m[0, 0] - m[1, 1] - m[2, 2]) * 2.0
        q = np.array([(m[2, 1] - m[1, 2]) / s,
                      0.25 * s,
                      (m[0, 1] + m[1, 0]) / s,
                      (m[0, 2] + m[2, 0]) / s])
    elif m[1, 1] >= m[2, 2]:
        s = math.sqrt(1.0 + m[1, 1] - m[0, 0] - m[2, 2]) * 2.0
        q = np.array([(m[0, 2] - m[2, 0]) / s,
                      (m[0, 1] + m[1, 0]) / s,
                      0.25 * s,
                      (m[1, 2] + m[2, 1]) / s])
    else:
        s = math.sqrt(1.0 + m[2, 2] - m[0, 0] - m[1, 1]) * 2.0
        q = np.array([(m[1, 0] - m[0, 1]) / s,
                      (m[0, 2] + m[2, 0]) / s,
                      (m[1, 2] + m[2, 1]) / s,
                      0.25 * s])
    return quat_normalize(q)


def quat_from_axis_angle(axis, angle: float) -> np.ndarray:
    axis = np.asarray(axis, dtype=np.float64)
    n = np.linalg.norm(axis)
    if n == 0.0:
        return np.array([1.0, 0.0, 0.0, 0.0])
    half = 0.5 * angle
    return np.concatenate(([math.cos(half)], math.sin(half) * axis / n))


def rotvec_from_matrix(m) -> np.ndarray:
    """Axis-angle (rotation vector) of a rotation matrix, robust near 0 and pi."""
    m = np.asarray(m, dtype=np.float64)
    cos_a = max(-1.0, min(1.0, (np.trace(m) - 1.0) * 0.5))
    angle = math.acos(cos_a)
    vee = 0.5 * np.array([m[2, 1] - m[1, 2], m[0, 2] - m[2, 0], m[1, 0] - m[0, 1]])
    if angle < 1e-10:
        return vee  # first-order: rotvec ~ vee(R - R^T)/2
    if angle > math.pi - 1e-6:
        # R ~ 2aa^T - I; recover axis from the dominant diagonal entry
        d = np.diag(m)
        k = int(np.argmax(d))
        a = np.zeros(3)
        a[k] = math.sqrt(max(0.0, (d[k] + 1.0) * 0.5))
        i, j = [(1, 2), (0, 2), (0, 1)][k]
        a[i] = (m[k, i] + m[i, k]) / (4.0 * a[k])
        a[j] = (m[k, j] + m[j, k]) / (4.0 * a[k])
        if np.dot(a, vee) < 0:
            a = -a
        return a / np.linalg.norm(a) * angle
    return vee / math.sin(angle) * angle


def quat_slerp(qa, qb, t: float) -> np.ndarray:
    qa = np.asarray(qa, dtype=np.float64)
    qb = np.asarray(qb, dtype=np.float64)
    dot = float(np.dot(qa, qb))
    if dot < 0.0:
        qb = -qb
        dot = -dot
    if dot > 1.0 - 1e-10:
        return quat_normalize(qa + t * (qb - qa))
    theta = math.acos(min(1.0, dot))
    s = math.sin(theta)
    return quat_normalize((math.sin((1 - t) * theta) / s) * qa
                          + (math.sin(t * theta) / s) * qb)


def rotation_angle_between(qa, qb) -> float:
    """Geodesic angle between two unit quaternions, in [0, pi]."""
    dot = abs(float(np.dot(np.asarray(qa), np.asarray(qb))))
    return 2.0 * math.acos(min(1.0, dot))


# ---------------------------------------------------------------------------
# rigid transform
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class RigidTransform:
    """SE(3) pose: rotation as a unit quaternion (w,x,y,z) plus translation."""

    rotation: np.ndarray = field(default_factory=lambda: np.array([1.0, 0.0, 0.0, 0.0]))
    translation: np.ndarray = field(default_factory=lambda: np.zeros(3))

    def __post_init__(self):
        q = quat_normalize(self.rotation)
        t = np.asarray(self.translation, dtype=np.float64).reshape(3).copy()
        if not np.all(np.isfinite(t)):
            raise ValueError("non-finite translation")
        object.__setattr__(self, "rotation", q)
        object.__setattr__(self, "translation", t)
        assert abs(np.linalg.norm(q) - 1.0) < _QUAT_NORM_TOL

    @staticmethod
    def identity() -> "RigidTransform":
        return RigidTransform()

    @staticmethod
    def from_matrix(m) -> "RigidTransform":
        m = np.asarray(m, dtype=np.float64)
        return RigidTransform(matrix_to_quat(m[:3, :3]), m[:3, 3])

    @staticmethod
    def from_axis_angle(axis, angle: float, translation=(0.0, 0.0, 0.0)) -> "RigidTransform":
        return RigidTransform(quat_from_axis_angle(axis, angle), np.asarray(translation, dtype=np.float64))

    def as_matrix(self) -> np.ndarray:
        m = np.eye(4)
        m[:3, :3] = quat_to_matrix(self.rotation)
        m[:3, 3] = self.translation
        return m

    def apply(self, points) -> np.ndarray:
        """Transform one point (3,) or many points (N, 3)."""
        p = np.asarray(points, dtype=np.float64)
        return p @ quat_to_matrix(self.rotation).T + self.translation

    def inverse(self) -> "RigidTransform":
        qi = quat_conjugate(self.rotation)
        return RigidTransform(qi, -quat_rotate(qi, self.translation))

    def __matmul__(self, other: "RigidTransform") -> "RigidTransform":
        return compose(self, other)


def compose(a: RigidTransform, b: RigidTransform) -> RigidTransform:
    """Transform mapping p to a(b(p)); quaternion renormalized by construction."""
    return RigidTransform(
        quat_multiply(a.rotation, b.rotation),
        quat_rotate(a.rotation, b.translation) + a.translation,
    )


def look_at(eye, target, up=(0.0, 0.0, 1.0)) -> RigidTransform:
    """Camera-to-world pose with +z toward target, +x right, +y down."""
    eye = np.asarray(eye, dtype=np.float64)
    fwd = np.asarray(target, dtype=np.float64) - eye
    fwd = fwd / np.linalg.norm(fwd)
    right = np.cross(fwd, np.asarray(up, dtype=np.float64))
    n = np.linalg.norm(right)
    if n < 1e-9:  # looking straight along up: pick an arbitrary right
        right = np.cross(fwd, np.array([1.0, 0.0, 0.0]))
        n = np.linalg.norm(right)
    right = right / n
    down = np.cross(fwd, right)
    down = down / np.linalg.norm(down)
    m = np.eye(4)
    m[:3, 0] = right
    m[:3, 1] = down
    m[:3, 2] = fwd
    m[:3, 3] = eye
    return RigidTransform.from_matrix(m)


# ---------------------------------------------------------------------------
# camera model and frames
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CameraIntrinsics:
    fx: float
    fy: float
    cx: float
    cy: float
    width: int
    height: int

    def __post_init__(self):
        if self.fx <= 0 or self.fy <= 0:
            raise ValueError("focal lengths must be positive")
        if not (0 <= self.cx < self.width and 0 <= self.cy < self.height):
            raise ValueError("principal point outside image")


@dataclass
class DepthFrame:
    """Depth image in meters; NaN marks invalid pixels (0 normalized at ingest)."""

    depth: np.ndarray  # (height, width) float32
    timestamp: float = 0.0

    def __post_init__(self):
        d = np.asarray(self.depth, dtype=np.float32)
        if d.ndim != 2:
            raise ValueError("depth must be a 2-D array")
        d = d.copy()
        d[d <= 0.0] = np.nan
        neg = d[np.isfinite(d)]
        if neg.size and neg.min() < 0:
            raise ValueError("negative depth")
        self.depth = d

    @property
    def height(self) -> int:
        return self.depth.shape[0]

    @property
    def width(self) -> int:
        return self.depth.shape[1]


@dataclass
class RgbdFrame:
    """Registered color + depth with camera-to-world pose."""

    color: np.ndarray  # (height, width, 3) uint8
    depth: DepthFrame
    camera_pose: RigidTransform
    intrinsics: CameraIntrinsics
    timestamp: float = 0.0

    def __post_init__(self):
        c = np.asarray(self.color, dtype=np.uint8)
        if c.ndim != 3 or c.shape[2] != 3:
            raise ValueError("color must be (h, w, 3) uint8")
        if c.shape[:2] != self.depth.depth.shape:
            raise ValueError("depth dimensions must equal color dimensions")
        if (c.shape[1], c.shape[0]) != (self.intrinsics.width, self.intrinsics.height):
            raise ValueError("intrinsics size mismatch")
        self.color = c


# ---------------------------------------------------------------------------
# projection
# ---------------------------------------------------------------------------

def unproject(pixel, depth: float, intrinsics: CameraIntrinsics) -> np.ndarray:
    """Pixel (u, v) + depth -> 3-D point in the camera frame."""
    u, v = float(pixel[0]), float(pixel[1])
    if not np.isfinite(depth) or depth <= 0.0:
        raise InvalidDepth(f"depth={depth!r}")
    if not (0 <= u < intrinsics.width and 0 <= v < intrinsics.height):
        raise OutOfBounds(f"pixel ({u}, {v}) outside {intrinsics.width}x{intrinsics.height}")
    z = float(depth)
    return np.array([(u - intrinsics.cx) * z / intrinsics.fx,
                     (v - intrinsics.cy) * z / intrinsics.fy,
                     z])


def project(point, intrinsics: CameraIntrinsics) -> tuple[float, float]:
    """Camera-frame point -> pixel (u, v); may fall outside the image."""
    x, y, z = (float(c) for c in point)
    if z <= 0.0 or not np.isfinite(z):
        raise BehindCamera(f"z={z!r}")
    return (intrinsics.fx * x / z + intrinsics.cx,
            intrinsics.fy * y / z + intrinsics.cy)
