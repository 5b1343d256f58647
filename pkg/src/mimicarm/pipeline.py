"""Batch pipeline shared by the CLI and the service: archive -> scene
reconstruction -> hand track -> mirrored trajectory -> demonstration record.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from .archive import SessionArchive
from .demo import (Demonstration, build_demonstration, frame_with_z,
                   mimic_hand, MODE_KINESTHETIC)
from .errors import ArchiveError, NoPlane, TooFewValidPoints
from .geom import RigidTransform
from .handtrack import HandTrack, estimate_hand_frame, lift_keypoints, smooth_track
from .kinematics import KinematicChain, franka_chain, load_chain
from .scene import (Plane, PointCloud, VoxelGrid, build_point_cloud,
                    detect_dominant_plane, voxelize, workspace_bounds_on_plane)


@dataclass
class PipelineOptions:
    chain_file: str | None = None
    language_goal: str = "demonstration"
    smooth_alpha: float = 1.0  # pass-through; lower it for noisy captures
    outlier_jump: float = 0.30
    conf_min: float = 0.5
    hole_radius_px: int = 5
    hand_offset: RigidTransform = field(default_factory=RigidTransform.identity)
    plane_seed: int = 0
    plane_iterations: int = 200
    plane_inlier_dist: float = 0.01
    plane_min_inliers: int = 500
    cloud_stride: int = 2
    resolution: float = 0.01
    rot_bin_deg: float = 5.0
    workspace_side: float = 1.0
    vel_eps: float = 0.01
    min_gap: int = 5
    close_below: float = 0.03
    open_above: float = 0.06


def load_pipeline_chain(opts: PipelineOptions) -> KinematicChain:
    return load_chain(opts.chain_file) if opts.chain_file else franka_chain()


def scene_from_archive(archive: SessionArchive, opts: PipelineOptions):
    """Point cloud + dominant plane from the first frame (static-camera
    setting); hand-masked pixels never become scene geometry."""
    frame = archive.frame(0)
    mask = archive.mask(0)
    if mask is not None:
        from .geom import DepthFrame, RgbdFrame
        depth = frame.depth.depth.copy()
        depth[mask] = np.nan
        frame = RgbdFrame(frame.color, DepthFrame(depth, frame.depth.timestamp),
                          frame.camera_pose, frame.intrinsics, frame.timestamp)
    cloud = build_point_cloud(frame, stride=opts.cloud_stride)
    plane = detect_dominant_plane(
        cloud, iterations=opts.plane_iterations, inlier_dist=opts.plane_inlier_dist,
        min_inliers=opts.plane_min_inliers, seed=opts.plane_seed,
        view_point=frame.camera_pose.translation)
    return cloud, plane


def anchored_chain(archive: SessionArchive, plane: Plane, opts: PipelineOptions,
                   anchor=None) -> tuple[KinematicChain, np.ndarray]:
    anchor = np.asarray(anchor if anchor is not None else archive.anchor_point,
                        dtype=np.float64) if (anchor is not None or archive.anchor_point is not None) else None
    if anchor is None:
        raise ArchiveError("archive carries no anchor point; pass one explicitly")
    base = frame_with_z(plane.project(anchor), plane.normal)
    return load_pipeline_chain(opts).with_base(base), anchor


def collision_grid(cloud: PointCloud, plane: Plane, workspace, opts: PipelineOptions) -> VoxelGrid:
    """Occupancy grid for collision feedback; support-plane inliers excluded
    (the arm is supposed to work on the table, not collide with it)."""
    keep = np.abs(plane.distance(cloud.points)) > 2 * opts.plane_inlier_dist
    pts = cloud.points[keep]
    if not len(pts):
        lo, hi = workspace
        dims = np.maximum(1, np.ceil((hi - lo) / opts.resolution - 1e-9)).astype(int)
        return VoxelGrid.empty(lo, opts.resolution, tuple(dims))
    return voxelize(PointCloud(pts), workspace, opts.resolution)


def lift_track(archive: SessionArchive, opts: PipelineOptions):
    """Per-frame lift + palm-frame estimation; returns the smoothed track and
    the archive frame index behind each surviving sample."""
    keypoints = archive.hand_keypoints()
    period = 1.0 / archive.nominal_rate
    samples = []
    frame_indices = []
    for i in range(archive.frame_count):
        frame = archive.frame(i)
        try:
            pts, valid = lift_keypoints(keypoints[i], frame, opts.conf_min,
                                        opts.hole_radius_px, max_time_offset=period)
            pose = estimate_hand_frame(pts, valid, timestamp=keypoints[i].timestamp)
        except TooFewValidPoints:
            continue
        samples.append(pose)
        frame_indices.append(i)
    if not samples:
        raise ArchiveError("no frame yielded a liftable hand")
    track = HandTrack(samples, archive.nominal_rate)
    before = track.timestamps()
    track = smooth_track(track, alpha=opts.smooth_alpha, outlier_jump=opts.outlier_jump)
    kept = set(np.searchsorted(before, track.timestamps()))
    frame_indices = [frame_indices[k] for k in sorted(kept)]
    return track, frame_indices


def run_kinesthetic(archive: SessionArchive, opts: PipelineOptions,
                    anchor=None, with_collision: bool = True):
    """Full batch pipeline (deterministic): returns the demonstration plus the
    scene pieces exporters need."""
    cloud, plane = scene_from_archive(archive, opts)
    chain, anchor_pt = anchored_chain(archive, plane, opts, anchor)
    workspace = workspace_bounds_on_plane(plane, anchor_pt, opts.workspace_side)
    grid = collision_grid(cloud, plane, workspace, opts) if with_collision else None
    track, frame_indices = lift_track(archive, opts)
    traj = mimic_hand(chain, track, opts.hand_offset, grid,
                      close_below=opts.close_below, open_above=opts.open_above)
    demo = build_demonstration(chain, traj, opts.language_goal,
                               scene_ref=archive.root.name, mode=MODE_KINESTHETIC,
                               vel_eps=opts.vel_eps, min_gap=opts.min_gap)
    return demo, chain, plane, workspace, grid, frame_indices
