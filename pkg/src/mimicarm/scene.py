"""Environment reconstruction: point clouds from RGB-D frames, dominant
support-plane detection (RANSAC), occupancy voxelization, and robot/scene
collision queries against the voxel grid.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .backend import get_kernels
from .errors import EmptyFrame, GridTooLarge, NoPlaneFound
from .geom import RgbdFrame
from .kinematics import JointState, KinematicChain, forward_kinematics

DEFAULT_RESOLUTION = 0.01  # 1 cm voxels; 1 m^3 workspace -> 100^3 grid
DEFAULT_VOXEL_CAP = 512 ** 3


@dataclass
class PointCloud:
    points: np.ndarray  # (N, 3) world, meters
    colors: np.ndarray | None = None  # (N, 3) uint8

    def __post_init__(self):
        self.points = np.asarray(self.points, dtype=np.float64).reshape(-1, 3)
        if not np.all(np.isfinite(self.points)):
            raise ValueError("point cloud contains non-finite points")
        if self.colors is not None:
            self.colors = np.asarray(self.colors, dtype=np.uint8).reshape(-1, 3)
            if len(self.colors) != len(self.points):
                raise ValueError("colors length must match points")

    def __len__(self) -> int:
        return len(self.points)


@dataclass(frozen=True)
class Plane:
    """Plane {p : normal . p = offset} with the support of its RANSAC fit."""

    normal: np.ndarray
    offset: float
    inlier_count: int

    def __post_init__(self):
        n = np.asarray(self.normal, dtype=np.float64).reshape(3)
        norm = np.linalg.norm(n)
        object.__setattr__(self, "normal", n / norm)
        assert abs(np.linalg.norm(self.normal) - 1.0) < 1e-9

    def distance(self, points) -> np.ndarray:
        return np.asarray(points) @ self.normal - self.offset

    def project(self, point) -> np.ndarray:
        p = np.asarray(point, dtype=np.float64)
        return p - self.distance(p) * self.normal


@dataclass
class VoxelGrid:
    origin: np.ndarray  # world corner of voxel (0,0,0)
    resolution: float
    dims: tuple[int, int, int]
    occupancy: np.ndarray  # (nx, ny, nz) bool
    color: np.ndarray | None = None  # (nx, ny, nz, 3) uint8 mean of contributors
    counts: np.ndarray | None = None  # (nx, ny, nz) int64 contributing points

    def __post_init__(self):
        self.origin = np.asarray(self.origin, dtype=np.float64).reshape(3)
        if self.resolution <= 0:
            raise ValueError("resolution must be > 0")
        if any(d < 1 for d in self.dims):
            raise ValueError("dims must each be >= 1")

    @staticmethod
    def empty(origin, resolution: float, dims) -> "VoxelGrid":
        dims = tuple(int(d) for d in dims)
        return VoxelGrid(np.asarray(origin, dtype=np.float64), float(resolution), dims,
                         np.zeros(dims, dtype=bool))

    @property
    def occupied_count(self) -> int:
        return int(self.occupancy.sum())

    def occupied_indices(self) -> np.ndarray:
        return np.argwhere(self.occupancy)

    def voxel_centers(self, ijk) -> np.ndarray:
        return self.origin + (np.asarray(ijk, dtype=np.float64) + 0.5) * self.resolution

    def contains(self, point) -> bool:
        idx = np.floor((np.asarray(point) - self.origin) / self.resolution)
        return bool(np.all(idx >= 0) and np.all(idx < np.asarray(self.dims)))

    def index_of(self, point) -> tuple[int, int, int]:
        idx = np.floor((np.asarray(point) - self.origin) / self.resolution).astype(int)
        return (int(idx[0]), int(idx[1]), int(idx[2]))


@dataclass(frozen=True)
class Contact:
    link_index: int
    sphere_index: int
    voxel_index: tuple[int, int, int]
    penetration_depth: float


@dataclass(frozen=True)
class ContactReport:
    contacts: tuple[Contact, ...]

    def __post_init__(self):
        assert all(c.penetration_depth > 0 for c in self.contacts)

    def __len__(self) -> int:
        return len(self.contacts)

    @property
    def collision_free(self) -> bool:
        return not self.contacts


def build_point_cloud(frame: RgbdFrame, stride: int = 1, with_colors: bool = True) -> PointCloud:
    """One world point per valid depth pixel; camera pose applied."""
    if stride < 1:
        raise ValueError("stride must be >= 1")
    k = get_kernels()
    intr = frame.intrinsics
    pts, pix = k.depth_to_points(frame.depth.depth, intr.fx, intr.fy, intr.cx, intr.cy,
                                 frame.camera_pose.as_matrix(), stride)
    if not len(pts):
        raise EmptyFrame("no valid depth pixels")
    colors = None
    if with_colors:
        colors = frame.color.reshape(-1, 3)[pix]
    return PointCloud(pts, colors)


def detect_dominant_plane(cloud: PointCloud, iterations: int = 200,
                          inlier_dist: float = 0.01, min_inliers: int = 3,
                          seed: int = 0, view_point=None) -> Plane:
    """RANSAC plane fit, least-squares refined, normal oriented toward view_point.

    Deterministic for a fixed seed. Raises NoPlaneFound when the best
    hypothesis supports fewer than min_inliers points.
    """
    pts = cloud.points
    if len(pts) < 3:
        raise NoPlaneFound(f"{len(pts)} points < 3")
    rng = np.random.default_rng(seed)
    best_inliers = -1
    best = None
    for _ in range(iterations):
        i, j, l = rng.choice(len(pts), size=3, replace=False)
        n = np.cross(pts[j] - pts[i], pts[l] - pts[i])
        norm = np.linalg.norm(n)
        if norm < 1e-12:  # collinear sample
            continue
        n = n / norm
        d = float(n @ pts[i])
        count = int((np.abs(pts @ n - d) <= inlier_dist).sum())
        if count > best_inliers:
            best_inliers = count
            best = (n, d)
    if best is None or best_inliers < min_inliers:
        raise NoPlaneFound(f"best support {max(best_inliers, 0)} < {min_inliers}")
    n, d = best
    inliers = pts[np.abs(pts @ n - d) <= inlier_dist]
    centroid = inliers.mean(axis=0)
    # smallest principal direction of the inlier scatter
    _, _, vt = np.linalg.svd(inliers - centroid, full_matrices=False)
    n = vt[-1]
    d = float(n @ centroid)
    count = int((np.abs(pts @ n - d) <= inlier_dist).sum())
    if view_point is not None:
        if float(np.asarray(view_point) @ n - d) < 0:
            n, d = -n, -d
    elif d < 0:  # canonical orientation when no viewpoint is known
        n, d = -n, -d
    return Plane(n, d, count)


def voxelize(cloud: PointCloud, bounds, resolution: float,
             occupancy_min_points: int = 1, voxel_cap: int = DEFAULT_VOXEL_CAP) -> VoxelGrid:
    """Occupancy grid over an axis-aligned box; points outside are ignored.

    bounds: (lo, hi) world corners. A voxel is occupied when at least
    occupancy_min_points points fall inside it.
    """
    lo = np.asarray(bounds[0], dtype=np.float64).reshape(3)
    hi = np.asarray(bounds[1], dtype=np.float64).reshape(3)
    if resolution <= 0:
        raise ValueError("resolution must be > 0")
    if np.any(hi <= lo):
        raise ValueError("degenerate bounds")
    dims = np.maximum(1, np.ceil((hi - lo) / resolution - 1e-9).astype(np.int64))
    n = int(dims[0] * dims[1] * dims[2])
    if n > voxel_cap:
        raise GridTooLarge(f"{dims[0]}x{dims[1]}x{dims[2]} = {n} voxels exceeds cap {voxel_cap}")
    k = get_kernels()
    colors = cloud.colors if cloud.colors is not None else np.zeros((0, 3), dtype=np.uint8)
    counts, color_sums = k.voxel_accumulate(cloud.points, colors, lo, float(resolution),
                                            int(dims[0]), int(dims[1]), int(dims[2]))
    counts = counts.reshape(tuple(dims))
    occ = counts >= occupancy_min_points
    color = None
    if cloud.colors is not None:
        safe = np.maximum(counts.reshape(-1), 1)[:, None]
        color = np.rint(color_sums / safe).astype(np.uint8).reshape((*dims, 3))
        color[~occ] = 0
    return VoxelGrid(lo, float(resolution), tuple(int(d) for d in dims), occ,
                     color=color, counts=counts)


def collide(chain: KinematicChain, q: JointState | np.ndarray, grid: VoxelGrid) -> ContactReport:
    """Sphere-swept robot vs occupied voxels, conservative metric.

    A contact is every (link sphere, occupied voxel) pair whose center distance
    is below sphere radius + voxel half-diagonal. Empty report = collision free.
    """
    angles = q.angles if isinstance(q, JointState) else np.asarray(q, dtype=np.float64)
    link_mats, _ = chain.fk_raw(angles)
    centers = chain.sphere_centers_world(link_mats)
    if not len(centers) or not grid.occupancy.any():
        return ContactReport(())
    k = get_kernels()
    sph_idx, vox_ijk, pen = k.sphere_voxel_contacts(
        centers, chain._sphere_radius, grid.occupancy, grid.origin, grid.resolution)
    contacts = tuple(
        Contact(int(chain._sphere_link[s]), int(s),
                (int(v[0]), int(v[1]), int(v[2])), float(p))
        for s, v, p in zip(sph_idx, vox_ijk, pen))
    return ContactReport(contacts)


def collides_any(chain: KinematicChain, angles: np.ndarray, grid: VoxelGrid) -> bool:
    """Cheap boolean used per-waypoint during planning."""
    link_mats, _ = chain.fk_raw(angles)
    centers = chain.sphere_centers_world(link_mats)
    if not len(centers) or not grid.occupancy.any():
        return False
    k = get_kernels()
    sph_idx, _, _ = k.sphere_voxel_contacts(
        centers, chain._sphere_radius, grid.occupancy, grid.origin, grid.resolution)
    return len(sph_idx) > 0


def workspace_bounds_on_plane(plane: Plane, anchor_point, side: float = 1.0):
    """Axis-aligned 1 m^3 default workspace sitting on the support plane.

    Assumes a roughly horizontal plane (tabletop); the box is axis-aligned in
    world so the voxel grid stays axis-aligned for training-data export.
    """
    anchor = plane.project(anchor_point)
    half = side / 2.0
    lo = np.array([anchor[0] - half, anchor[1] - half, anchor[2] - 0.05 * side])
    hi = np.array([anchor[0] + half, anchor[1] + half, anchor[2] + 0.95 * side])
    return lo, hi


def forward_kinematics_collision(chain: KinematicChain, q: JointState,
                                 grid: VoxelGrid) -> ContactReport:
    """FK validity + collision report in one call (preview feedback path)."""
    forward_kinematics(chain, q)  # raises on limit violation
    return collide(chain, q, grid)
