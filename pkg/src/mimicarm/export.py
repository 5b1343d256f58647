"""Turn a demonstration plus scene frames into training data.

Two outputs: voxel-observation/discretized-action pairs for 3-D agents, and
composited image sequences (hand masked out, plate fill, virtual arm rendered
in) for image-based behavior cloning. Also owns the binary voxel payload
format (little-endian header + packed occupancy bitset + optional color
plane, bit-exact round trip).
"""
from __future__ import annotations

import hashlib
import json
import math
import struct
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .demo import Demonstration, GRIPPER_OPEN
from .errors import DimensionMismatch, MissingMask, OutOfWorkspace
from .geom import (CameraIntrinsics, DepthFrame, RgbdFrame, RigidTransform,
                   quat_to_matrix)
from .kinematics import JointState, KinematicChain
from .scene import PointCloud, VoxelGrid, build_point_cloud, voxelize

VOXEL_MAGIC = b"MAVX"
VOXEL_VERSION = 1
_FLAG_COLOR = 1

DATASET_VERSION = 1

# flat per-link palette for the sphere-rendered arm (RGB)
_LINK_PALETTE = np.array([
    [228, 116, 36], [72, 130, 199], [90, 174, 97], [196, 78, 82],
    [129, 103, 177], [147, 120, 96], [210, 139, 184], [140, 140, 140],
    [220, 180, 60],
], dtype=np.uint8)


@dataclass
class Action:
    trans_index: tuple[int, int, int]
    rot_bins: tuple[int, int, int]
    gripper: int  # 1 = open

    def to_dict(self) -> dict:
        return {"trans_index": list(self.trans_index),
                "rot_bins": list(self.rot_bins),
                "gripper": self.gripper}


@dataclass
class PerActSample:
    voxel_obs: VoxelGrid
    language_goal: str
    action: Action


@dataclass
class ImageBCSample:
    image: np.ndarray  # (h, w, 3) uint8 composited
    action_tcp: RigidTransform  # next-keyframe TCP
    action_gripper: int  # 1 = open


# ---------------------------------------------------------------------------
# rotation discretization (intrinsic xyz Euler)
# ---------------------------------------------------------------------------

def euler_xyz_intrinsic(quat) -> np.ndarray:
    """Intrinsic x-y-z Euler angles (rad) with R = Rx(a) Ry(b) Rz(c)."""
    m = quat_to_matrix(quat)
    sb = max(-1.0, min(1.0, float(m[0, 2])))
    b = math.asin(sb)
    if abs(sb) > 1.0 - 1e-9:  # gimbal lock: fold everything into a
        a = math.atan2(float(m[1, 0]), float(m[1, 1]))
        c = 0.0
    else:
        a = math.atan2(-float(m[1, 2]), float(m[2, 2]))
        c = math.atan2(-float(m[0, 1]), float(m[0, 0]))
    return np.array([a, b, c])


def discretize_action(tcp: RigidTransform, gripper_open: bool, grid: VoxelGrid,
                      rot_bin_deg: float = 5.0) -> Action:
    """Voxel index of the TCP translation, per-axis Euler bins, binary gripper."""
    if not grid.contains(tcp.translation):
        raise OutOfWorkspace(f"TCP {tcp.translation} outside workspace grid")
    n_bins = int(round(360.0 / rot_bin_deg))
    angles_deg = np.degrees(euler_xyz_intrinsic(tcp.rotation)) % 360.0
    bins = tuple(int(round(a / rot_bin_deg)) % n_bins for a in angles_deg)
    return Action(grid.index_of(tcp.translation), bins, int(gripper_open))


def undiscretize_action(action: Action, grid: VoxelGrid,
                        rot_bin_deg: float = 5.0) -> tuple[np.ndarray, np.ndarray]:
    """Voxel-center translation and Euler angles (deg) for round-trip checks."""
    trans = grid.voxel_centers(np.asarray(action.trans_index))
    angles = np.array(action.rot_bins, dtype=np.float64) * rot_bin_deg
    return trans, angles


# ---------------------------------------------------------------------------
# rendering and compositing
# ---------------------------------------------------------------------------

def render_robot(chain: KinematicChain, q: JointState | np.ndarray,
                 intrinsics: CameraIntrinsics, camera_pose: RigidTransform,
                 scene_depth: DepthFrame | None = None):
    """Rasterize the arm's collision spheres with a z-buffer.

    Returns (rgba (h, w, 4) uint8, depth (h, w) float32). A pixel is written
    only where the robot is in front of the scene depth (NaN scene depth means
    free space).
    """
    angles = q.angles if isinstance(q, JointState) else np.asarray(q, dtype=np.float64)
    link_mats, _ = chain.fk_raw(angles)
    centers_w = chain.sphere_centers_world(link_mats)
    radii = chain._sphere_radius
    links = chain._sphere_link
    h, w = intrinsics.height, intrinsics.width
    rgba = np.zeros((h, w, 4), dtype=np.uint8)
    zbuf = np.full((h, w), np.inf, dtype=np.float32)
    world_to_cam = camera_pose.inverse()
    centers_c = world_to_cam.apply(centers_w)
    order = np.argsort(-centers_c[:, 2])  # far to near, z-buffer settles ties
    for s in order:
        cx, cy, cz = centers_c[s]
        r = radii[s]
        if cz <= r * 1e-3 or cz <= 0:
            continue  # behind or at the camera
        pu = intrinsics.fx * cx / cz + intrinsics.cx
        pv = intrinsics.fy * cy / cz + intrinsics.cy
        pr_u = intrinsics.fx * r / cz
        pr_v = intrinsics.fy * r / cz
        u0 = max(0, int(math.floor(pu - pr_u)))
        u1 = min(w - 1, int(math.ceil(pu + pr_u)))
        v0 = max(0, int(math.floor(pv - pr_v)))
        v1 = min(h - 1, int(math.ceil(pv + pr_v)))
        if u0 > u1 or v0 > v1:
            continue
        us = np.arange(u0, u1 + 1)
        vs = np.arange(v0, v1 + 1)
        uu, vv = np.meshgrid(us, vs)
        # normalized elliptical disk footprint of the sphere
        rho2 = ((uu - pu) / pr_u) ** 2 + ((vv - pv) / pr_v) ** 2
        inside = rho2 <= 1.0
        if not inside.any():
            continue
        depth_px = (cz - r * np.sqrt(np.clip(1.0 - rho2, 0.0, 1.0))).astype(np.float32)
        color = _LINK_PALETTE[links[s] % len(_LINK_PALETTE)]
        patch_z = zbuf[v0:v1 + 1, u0:u1 + 1]
        write = inside & (depth_px < patch_z)
        if scene_depth is not None:
            sd = scene_depth.depth[v0:v1 + 1, u0:u1 + 1]
            write &= ~(np.isfinite(sd) & (depth_px >= sd))
        patch_z[write] = depth_px[write]
        patch_c = rgba[v0:v1 + 1, u0:u1 + 1]
        patch_c[write, :3] = color
        patch_c[write, 3] = 255
    out_depth = np.where(np.isinf(zbuf), np.nan, zbuf).astype(np.float32)
    return rgba, out_depth


def composite_frame(color: np.ndarray, mask: np.ndarray | None,
                    plate: np.ndarray | None, overlay: np.ndarray | None) -> np.ndarray:
    """Mask pixels replaced by the background plate, then overlay alpha-blended."""
    out = np.asarray(color, dtype=np.uint8).copy()
    if mask is not None:
        mask = np.asarray(mask).astype(bool)
        if mask.shape != out.shape[:2]:
            raise DimensionMismatch(f"mask {mask.shape} vs frame {out.shape[:2]}")
        if mask.any():
            if plate is None:
                raise MissingMask("mask present but no background plate supplied")
            plate = np.asarray(plate, dtype=np.uint8)
            if plate.shape != out.shape:
                raise DimensionMismatch(f"plate {plate.shape} vs frame {out.shape}")
            out[mask] = plate[mask]
    if overlay is not None:
        if overlay.shape[:2] != out.shape[:2] or overlay.shape[2] != 4:
            raise DimensionMismatch(f"overlay {overlay.shape} vs frame {out.shape}")
        alpha = overlay[:, :, 3:4].astype(np.float64) / 255.0
        blended = overlay[:, :, :3].astype(np.float64) * alpha + out.astype(np.float64) * (1 - alpha)
        out = np.rint(blended).astype(np.uint8)
    return out


# ---------------------------------------------------------------------------
# exporters
# ---------------------------------------------------------------------------

def observation_grid(frame: RgbdFrame, bounds, resolution: float,
                     mask: np.ndarray | None = None,
                     occupancy_min_points: int = 1) -> VoxelGrid:
    """Voxel observation for one frame; hand-masked pixels never contribute."""
    if mask is None:
        cloud = build_point_cloud(frame)
    else:
        mask = np.asarray(mask).astype(bool)
        if mask.shape != frame.depth.depth.shape:
            raise DimensionMismatch("mask/depth shape mismatch")
        depth = frame.depth.depth.copy()
        depth[mask] = np.nan
        masked = RgbdFrame(frame.color, DepthFrame(depth, frame.depth.timestamp),
                           frame.camera_pose, frame.intrinsics, frame.timestamp)
        cloud = build_point_cloud(masked)
    return voxelize(cloud, bounds, resolution, occupancy_min_points)


def export_peract(demo: Demonstration, frames: list[RgbdFrame], bounds,
                  resolution: float = 0.01, rot_bin_deg: float = 5.0,
                  masks: list[np.ndarray | None] | None = None) -> list[PerActSample]:
    """One sample per consecutive keyframe pair: observation voxelized at
    keyframe i, action discretized from keyframe i+1.

    frames/masks are indexed per keyframe (one entry each, or a single frame
    reused for static scenes).
    """
    kfs = demo.keyframes
    if len(frames) == 1:
        frames = frames * len(kfs)
    if len(frames) < len(kfs):
        raise ValueError(f"{len(frames)} frames for {len(kfs)} keyframes")
    if masks is None:
        masks = [None] * len(kfs)
    elif len(masks) == 1:
        masks = masks * len(kfs)
    samples = []
    for i in range(len(kfs) - 1):
        grid = observation_grid(frames[i], bounds, resolution, masks[i])
        action = discretize_action(kfs[i + 1].tcp, kfs[i + 1].gripper == GRIPPER_OPEN,
                                   grid, rot_bin_deg)
        samples.append(PerActSample(grid, demo.language_goal, action))
    return samples


def export_imagebc(demo: Demonstration, frames: list[RgbdFrame],
                   masks: list[np.ndarray | None] | None,
                   plate: np.ndarray | None, chain: KinematicChain,
                   stride: int = 1, require_masks: bool = False) -> list[ImageBCSample]:
    """One composited sample per trajectory frame at the given stride
    (ceil semantics: indices 0, stride, 2*stride, ...); the action is the next
    keyframe's TCP pose + gripper."""
    if stride < 1:
        raise ValueError("stride must be >= 1")
    n = len(demo.trajectory)
    if len(frames) == 1:
        frames = frames * n
    if len(frames) < n:
        raise ValueError(f"{len(frames)} frames for {n} trajectory samples")
    if masks is not None and len(masks) == 1:
        masks = masks * n
    kf_indices = [k.index for k in demo.keyframes]
    samples = []
    for i in range(0, n, stride):
        frame = frames[i]
        mask = masks[i] if masks is not None else None
        if mask is None and require_masks:
            raise MissingMask(f"frame {i} has no hand mask")
        overlay, _ = render_robot(chain, demo.trajectory.joints[i], frame.intrinsics,
                                  frame.camera_pose, frame.depth)
        image = composite_frame(frame.color, mask, plate, overlay)
        nxt = next((k for k, kf_i in enumerate(kf_indices) if kf_i > i),
                   len(kf_indices) - 1)
        kf = demo.keyframes[nxt]
        samples.append(ImageBCSample(image, kf.tcp, int(kf.gripper == GRIPPER_OPEN)))
    return samples


# ---------------------------------------------------------------------------
# voxel payload format
# ---------------------------------------------------------------------------

def voxel_grid_to_bytes(grid: VoxelGrid) -> bytes:
    """Header (magic, version, dims, origin, resolution, flags; little-endian)
    + packed occupancy bitset + optional per-voxel RGB plane."""
    nx, ny, nz = grid.dims
    flags = _FLAG_COLOR if grid.color is not None else 0
    header = struct.pack("<4sII III ddd d I", VOXEL_MAGIC, VOXEL_VERSION, flags,
                         nx, ny, nz,
                         float(grid.origin[0]), float(grid.origin[1]), float(grid.origin[2]),
                         float(grid.resolution), nx * ny * nz)
    bits = np.packbits(grid.occupancy.reshape(-1).astype(np.uint8), bitorder="little")
    parts = [header, bits.tobytes()]
    if grid.color is not None:
        parts.append(np.ascontiguousarray(grid.color, dtype=np.uint8).tobytes())
    return b"".join(parts)


def voxel_grid_from_bytes(data: bytes) -> VoxelGrid:
    head_size = struct.calcsize("<4sII III ddd d I")
    magic, version, flags, nx, ny, nz, ox, oy, oz, res, count = struct.unpack(
        "<4sII III ddd d I", data[:head_size])
    if magic != VOXEL_MAGIC:
        raise ValueError("bad voxel payload magic")
    if version != VOXEL_VERSION:
        raise ValueError(f"unsupported voxel payload version {version}")
    if count != nx * ny * nz:
        raise ValueError("voxel count mismatch")
    n_bytes = (count + 7) // 8
    off = head_size
    bits = np.frombuffer(data[off:off + n_bytes], dtype=np.uint8)
    occ = np.unpackbits(bits, count=count, bitorder="little").astype(bool).reshape(nx, ny, nz)
    off += n_bytes
    color = None
    if flags & _FLAG_COLOR:
        color = np.frombuffer(data[off:off + count * 3], dtype=np.uint8).reshape(nx, ny, nz, 3).copy()
    return VoxelGrid(np.array([ox, oy, oz]), res, (nx, ny, nz), occ, color=color)


def save_voxel_grid(grid: VoxelGrid, path: str | Path):
    Path(path).write_bytes(voxel_grid_to_bytes(grid))


def load_voxel_grid(path: str | Path) -> VoxelGrid:
    return voxel_grid_from_bytes(Path(path).read_bytes())


# ---------------------------------------------------------------------------
# dataset directory layout
# ---------------------------------------------------------------------------

def _pose_to_dict(t: RigidTransform) -> dict:
    return {"quat_wxyz": [float(v) for v in t.rotation],
            "xyz": [float(v) for v in t.translation]}


def _sha256(path: Path) -> str:
    return hashlib.sha256(path.read_bytes()).hexdigest()


def write_dataset(out_dir: str | Path, demo: Demonstration,
                  peract: list[PerActSample] | None,
                  imagebc: list[ImageBCSample] | None,
                  rot_bin_deg: float = 5.0) -> Path:
    """One directory per demonstration: numbered sample records plus a
    versioned manifest with payload checksums. Returns the manifest path."""
    from PIL import Image

    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    manifest = {
        "format": "mimicarm-dataset",
        "version": DATASET_VERSION,
        "language_goal": demo.language_goal,
        "scene_ref": demo.scene_ref,
        "mode": demo.mode,
        "keyframe_count": len(demo.keyframes),
        "trajectory_samples": len(demo.trajectory),
        "rot_bin_deg": rot_bin_deg,
        "files": {},
    }

    demo_record = {
        "language_goal": demo.language_goal,
        "scene_ref": demo.scene_ref,
        "mode": demo.mode,
        "keypoints": [{"target": _pose_to_dict(kp.target),
                       "gripper_command": kp.gripper_command,
                       "solved_q": [float(a) for a in kp.solved_q.angles],
                       "dwell": kp.dwell} for kp in demo.keypoints],
        "trajectory": {
            "times": demo.trajectory.times.tolist(),
            "joints": demo.trajectory.joints.tolist(),
            "apertures": demo.trajectory.apertures.tolist(),
            "gripper_open": demo.trajectory.gripper_open.astype(int).tolist(),
            "collided": demo.trajectory.collided.astype(int).tolist(),
            "ik_failed": demo.trajectory.ik_failed.astype(int).tolist(),
        },
        "keyframes": [{"t": kf.t, "index": kf.index, "gripper": kf.gripper,
                       "tcp": _pose_to_dict(kf.tcp),
                       "q": [float(a) for a in kf.q.angles]}
                      for kf in demo.keyframes],
    }
    demo_path = out / "demonstration.json"
    demo_path.write_text(json.dumps(demo_record, sort_keys=True, indent=1))
    manifest["files"]["demonstration.json"] = _sha256(demo_path)

    if peract is not None:
        pdir = out / "peract"
        pdir.mkdir(exist_ok=True)
        entries = []
        for i, sample in enumerate(peract):
            sdir = pdir / f"sample_{i:04d}"
            sdir.mkdir(exist_ok=True)
            vox = sdir / "voxels.bin"
            vox.write_bytes(voxel_grid_to_bytes(sample.voxel_obs))
            act = sdir / "action.json"
            act.write_text(json.dumps(
                {"language_goal": sample.language_goal, "action": sample.action.to_dict()},
                sort_keys=True))
            rel_v = str(vox.relative_to(out))
            rel_a = str(act.relative_to(out))
            manifest["files"][rel_v] = _sha256(vox)
            manifest["files"][rel_a] = _sha256(act)
            entries.append({"voxels": rel_v, "action": rel_a})
        manifest["peract"] = {"sample_count": len(peract), "samples": entries}

    if imagebc is not None:
        idir = out / "imagebc"
        idir.mkdir(exist_ok=True)
        entries = []
        for i, sample in enumerate(imagebc):
            img_path = idir / f"frame_{i:04d}.png"
            Image.fromarray(sample.image).save(img_path)
            act_path = idir / f"frame_{i:04d}.json"
            act_path.write_text(json.dumps(
                {"tcp": _pose_to_dict(sample.action_tcp), "gripper": sample.action_gripper},
                sort_keys=True))
            rel_i = str(img_path.relative_to(out))
            rel_a = str(act_path.relative_to(out))
            manifest["files"][rel_i] = _sha256(img_path)
            manifest["files"][rel_a] = _sha256(act_path)
            entries.append({"image": rel_i, "action": rel_a})
        manifest["imagebc"] = {"sample_count": len(imagebc), "samples": entries}

    manifest_path = out / "manifest.json"
    manifest_path.write_text(json.dumps(manifest, sort_keys=True, indent=1))
    return manifest_path


def load_demonstration(path: str | Path) -> Demonstration:
    """Rebuild a Demonstration from a dataset's demonstration.json."""
    from .demo import KeyFrame, KeyPoint, Trajectory

    rec = json.loads(Path(path).read_text())
    tr = rec["trajectory"]
    trajectory = Trajectory(
        np.asarray(tr["times"]), np.asarray(tr["joints"]),
        np.asarray(tr["apertures"]), np.asarray(tr["gripper_open"], dtype=bool),
        np.asarray(tr["collided"], dtype=bool), np.asarray(tr["ik_failed"], dtype=bool))
    keyframes = [KeyFrame(t=k["t"],
                          tcp=RigidTransform(np.asarray(k["tcp"]["quat_wxyz"]),
                                             np.asarray(k["tcp"]["xyz"])),
                          gripper=k["gripper"],
                          q=JointState(np.asarray(k["q"])),
                          index=int(k["index"]))
                 for k in rec["keyframes"]]
    keypoints = [KeyPoint(RigidTransform(np.asarray(k["target"]["quat_wxyz"]),
                                         np.asarray(k["target"]["xyz"])),
                          k["gripper_command"],
                          JointState(np.asarray(k["solved_q"])),
                          k["dwell"])
                 for k in rec["keypoints"]]
    return Demonstration(rec["language_goal"], rec["scene_ref"], keypoints,
                         trajectory, keyframes, rec["mode"])
