"""Session archives: the on-disk recording format the pipeline consumes.

A session is a directory tree (diff-able, partially readable):

    manifest.json          version, intrinsics, rate, per-frame index, checksums
    frames/frame_NNNNNN.png   color
    frames/depth_NNNNNN.npy   float32 meters, 0 = invalid
    hand_keypoints.jsonl   one line per frame: 21 x (u, v, confidence)
    masks/mask_NNNNNN.png  optional hand masks (nonzero = hand)
    plate.png              optional hand-free background plate
    ground_truth.json      optional (synthetic sessions)
"""
from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np
from PIL import Image

from .errors import ArchiveError, SceneCorrupt, SceneNotFound
from .geom import CameraIntrinsics, DepthFrame, RgbdFrame, RigidTransform
from .handtrack import N_LANDMARKS, HandKeypoints2D

ARCHIVE_FORMAT = "mimicarm-session"
ARCHIVE_VERSION = 1


def _sha256(path: Path) -> str:
    return hashlib.sha256(path.read_bytes()).hexdigest()


def _pose_to_dict(t: RigidTransform) -> dict:
    return {"quat_wxyz": [float(v) for v in t.rotation],
            "xyz": [float(v) for v in t.translation]}


def _pose_from_dict(d: dict) -> RigidTransform:
    return RigidTransform(np.asarray(d["quat_wxyz"], dtype=np.float64),
                          np.asarray(d["xyz"], dtype=np.float64))


@dataclass
class SessionArchive:
    """Loaded manifest plus lazy frame payload accessors."""

    root: Path
    manifest: dict

    @property
    def frame_count(self) -> int:
        return int(self.manifest["frame_count"])

    @property
    def nominal_rate(self) -> float:
        return float(self.manifest["nominal_rate"])

    @property
    def intrinsics(self) -> CameraIntrinsics:
        d = self.manifest["intrinsics"]
        return CameraIntrinsics(d["fx"], d["fy"], d["cx"], d["cy"],
                                int(d["width"]), int(d["height"]))

    @property
    def anchor_point(self) -> np.ndarray | None:
        pt = self.manifest.get("anchor_point")
        return None if pt is None else np.asarray(pt, dtype=np.float64)

    @property
    def has_masks(self) -> bool:
        return any(f.get("mask") for f in self.manifest["frames"])

    def frame(self, i: int) -> RgbdFrame:
        meta = self.manifest["frames"][i]
        color = np.asarray(Image.open(self.root / meta["color"]).convert("RGB"))
        depth = np.load(self.root / meta["depth"])
        return RgbdFrame(color, DepthFrame(depth, meta["timestamp"]),
                         _pose_from_dict(meta["camera_pose"]), self.intrinsics,
                         meta["timestamp"])

    def mask(self, i: int) -> np.ndarray | None:
        meta = self.manifest["frames"][i]
        if not meta.get("mask"):
            return None
        return np.asarray(Image.open(self.root / meta["mask"]).convert("L")) > 0

    def plate(self) -> np.ndarray | None:
        rel = self.manifest.get("background_plate")
        if not rel:
            return None
        return np.asarray(Image.open(self.root / rel).convert("RGB"))

    def hand_keypoints(self) -> list[HandKeypoints2D]:
        path = self.root / self.manifest["hand_keypoints"]
        out = []
        for line in path.read_text().splitlines():
            rec = json.loads(line)
            arr = np.asarray(rec["points"], dtype=np.float64)
            out.append(HandKeypoints2D(arr[:, :2], arr[:, 2], rec["timestamp"]))
        return out

    def ground_truth(self) -> dict | None:
        path = self.root / "ground_truth.json"
        return json.loads(path.read_text()) if path.exists() else None


def write_archive(root: str | Path, intrinsics: CameraIntrinsics, rate: float,
                  frames: list[RgbdFrame], keypoints: list[HandKeypoints2D],
                  masks: list[np.ndarray | None] | None = None,
                  plate: np.ndarray | None = None,
                  anchor_point=None, ground_truth: dict | None = None) -> Path:
    """Write a session directory and its checksummed manifest."""
    root = Path(root)
    (root / "frames").mkdir(parents=True, exist_ok=True)
    if masks and any(m is not None for m in masks):
        (root / "masks").mkdir(exist_ok=True)
    frame_entries = []
    checksums = {}
    for i, frame in enumerate(frames):
        color_rel = f"frames/frame_{i:06d}.png"
        depth_rel = f"frames/depth_{i:06d}.npy"
        Image.fromarray(frame.color).save(root / color_rel)
        depth_raw = np.nan_to_num(frame.depth.depth, nan=0.0).astype(np.float32)
        np.save(root / depth_rel, depth_raw)
        mask_rel = None
        if masks and masks[i] is not None:
            mask_rel = f"masks/mask_{i:06d}.png"
            Image.fromarray((masks[i].astype(np.uint8)) * 255).save(root / mask_rel)
            checksums[mask_rel] = _sha256(root / mask_rel)
        checksums[color_rel] = _sha256(root / color_rel)
        checksums[depth_rel] = _sha256(root / depth_rel)
        frame_entries.append({
            "index": i, "timestamp": float(frame.timestamp),
            "color": color_rel, "depth": depth_rel, "mask": mask_rel,
            "camera_pose": _pose_to_dict(frame.camera_pose),
        })
    kp_rel = "hand_keypoints.jsonl"
    lines = []
    for rec in keypoints:
        pts = np.column_stack([rec.points, rec.confidence])
        lines.append(json.dumps({"timestamp": float(rec.timestamp),
                                 "points": pts.tolist()}, sort_keys=True))
    (root / kp_rel).write_text("\n".join(lines) + "\n")
    checksums[kp_rel] = _sha256(root / kp_rel)
    plate_rel = None
    if plate is not None:
        plate_rel = "plate.png"
        Image.fromarray(plate).save(root / plate_rel)
        checksums[plate_rel] = _sha256(root / plate_rel)
    if ground_truth is not None:
        (root / "ground_truth.json").write_text(json.dumps(ground_truth, sort_keys=True))
    intr = intrinsics
    manifest = {
        "format": ARCHIVE_FORMAT,
        "version": ARCHIVE_VERSION,
        "intrinsics": {"fx": intr.fx, "fy": intr.fy, "cx": intr.cx, "cy": intr.cy,
                       "width": intr.width, "height": intr.height},
        "frame_count": len(frames),
        "nominal_rate": rate,
        "frames": frame_entries,
        "hand_keypoints": kp_rel,
        "background_plate": plate_rel,
        "anchor_point": None if anchor_point is None else [float(v) for v in anchor_point],
        "checksums": checksums,
    }
    path = root / "manifest.json"
    path.write_text(json.dumps(manifest, sort_keys=True, indent=1))
    return path


def load_archive(root: str | Path) -> SessionArchive:
    root = Path(root)
    manifest_path = root / "manifest.json"
    if not manifest_path.exists():
        raise SceneNotFound(f"no session archive at {root}")
    try:
        manifest = json.loads(manifest_path.read_text())
    except json.JSONDecodeError as e:
        raise SceneCorrupt(f"unparseable manifest: {e}") from e
    if manifest.get("format") != ARCHIVE_FORMAT:
        raise SceneCorrupt(f"not a session archive: format={manifest.get('format')!r}")
    if manifest.get("version") != ARCHIVE_VERSION:
        raise SceneCorrupt(f"unsupported archive version {manifest.get('version')!r}")
    return SessionArchive(root, manifest)


@dataclass
class ValidationReport:
    issues: list[str] = field(default_factory=list)
    checked_files: int = 0

    @property
    def ok(self) -> bool:
        return not self.issues

    def add(self, msg: str):
        self.issues.append(msg)


def validate_archive(root: str | Path) -> ValidationReport:
    """Schema, checksum, monotone-timestamp, and dimension checks."""
    report = ValidationReport()
    try:
        archive = load_archive(root)
    except (SceneNotFound, SceneCorrupt) as e:
        report.add(str(e))
        return report
    m = archive.manifest
    root = archive.root
    for key in ("intrinsics", "frame_count", "nominal_rate", "frames",
                "hand_keypoints", "checksums"):
        if key not in m:
            report.add(f"manifest missing key {key!r}")
    if report.issues:
        return report
    if len(m["frames"]) != m["frame_count"]:
        report.add(f"frame_count {m['frame_count']} != {len(m['frames'])} frame entries")
    for rel, expect in m["checksums"].items():
        path = root / rel
        if not path.exists():
            report.add(f"missing payload {rel}")
            continue
        actual = _sha256(path)
        report.checked_files += 1
        if actual != expect:
            report.add(f"checksum mismatch for {rel}")
    ts = [f["timestamp"] for f in m["frames"]]
    if any(b <= a for a, b in zip(ts, ts[1:])):
        report.add("frame timestamps not strictly increasing")
    try:
        intr = archive.intrinsics
    except Exception as e:
        report.add(f"bad intrinsics: {e}")
        return report
    if not report.issues:
        for i in range(archive.frame_count):
            try:
                frame = archive.frame(i)
            except Exception as e:
                report.add(f"frame {i}: unreadable ({e})")
                continue
            if frame.color.shape[:2] != (intr.height, intr.width):
                report.add(f"frame {i}: color {frame.color.shape[:2]} != intrinsics size")
            mask = archive.mask(i)
            if mask is not None and mask.shape != (intr.height, intr.width):
                report.add(f"frame {i}: mask {mask.shape} != intrinsics size")
        try:
            kps = archive.hand_keypoints()
            if len(kps) != archive.frame_count:
                report.add(f"{len(kps)} keypoint records != {archive.frame_count} frames")
            kts = [k.timestamp for k in kps]
            if any(b <= a for a, b in zip(kts, kts[1:])):
                report.add("keypoint timestamps not strictly increasing")
        except Exception as e:
            report.add(f"hand keypoints unreadable: {e}")
    return report


def validate_dataset(root: str | Path) -> ValidationReport:
    """Dataset-directory checks: manifest schema, checksums, sample arithmetic,
    voxel payload parseability."""
    from .export import DATASET_VERSION, voxel_grid_from_bytes

    report = ValidationReport()
    root = Path(root)
    manifest_path = root / "manifest.json"
    if not manifest_path.exists():
        report.add(f"no dataset manifest at {root}")
        return report
    try:
        m = json.loads(manifest_path.read_text())
    except json.JSONDecodeError as e:
        report.add(f"unparseable manifest: {e}")
        return report
    if m.get("format") != "mimicarm-dataset":
        report.add(f"not a dataset: format={m.get('format')!r}")
        return report
    if m.get("version") != DATASET_VERSION:
        report.add(f"unsupported dataset version {m.get('version')!r}")
    for rel, expect in m.get("files", {}).items():
        path = root / rel
        if not path.exists():
            report.add(f"missing payload {rel}")
            continue
        report.checked_files += 1
        if _sha256(path) != expect:
            report.add(f"checksum mismatch for {rel}")
    if "peract" in m and not report.issues:
        expected = m["keyframe_count"] - 1
        if m["peract"]["sample_count"] != expected:
            report.add(f"peract sample_count {m['peract']['sample_count']} != "
                       f"keyframes-1 ({expected})")
        for entry in m["peract"]["samples"]:
            try:
                voxel_grid_from_bytes((root / entry["voxels"]).read_bytes())
            except Exception as e:
                report.add(f"{entry['voxels']}: bad voxel payload ({e})")
    return report


def validate_any(root: str | Path) -> ValidationReport:
    """Dispatch on manifest format: session archive or exported dataset."""
    root = Path(root)
    manifest = root / "manifest.json"
    if manifest.exists():
        try:
            fmt = json.loads(manifest.read_text()).get("format")
        except json.JSONDecodeError:
            fmt = None
        if fmt == "mimicarm-dataset":
            return validate_dataset(root)
    return validate_archive(root)
