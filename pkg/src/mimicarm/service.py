"""Local HTTP service exposing the session lifecycle to the browser UI.

Request/response bodies are schema-versioned pydantic models that reject
unknown fields; previews and hand frames travel over line-delimited JSON.
Each session serializes its mutations through one lock; reads serve
snapshots. Errors map to structured {error: {code, message}} bodies.
"""
from __future__ import annotations

import json
import threading
import uuid
from pathlib import Path
from typing import Iterator, Literal

import numpy as np
from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse, StreamingResponse
from pydantic import BaseModel, ConfigDict, Field

from .archive import load_archive, validate_archive
from .demo import (DemoSession, MODES, PlanOptions, Preview)
from .errors import (MimicArmError, SceneCorrupt, SceneNotFound,
                     SessionStateError, TooFewValidPoints, WrongMode)
from .geom import RigidTransform
from .handtrack import (HandKeypoints2D, HandTrack, estimate_hand_frame,
                        lift_keypoints, smooth_track)
from .kinematics import forward_kinematics, franka_chain
from .pipeline import PipelineOptions, scene_from_archive
from .export import export_imagebc, export_peract, write_dataset
from .scene import workspace_bounds_on_plane

SCHEMA_VERSION = 1

_HTTP_CODES = {
    "scene_not_found": 404,
    "scene_corrupt": 422,
    "session_state": 409,
    "wrong_mode": 409,
    "unreachable_keypoint": 409,
    "planning_failed": 409,
    "all_samples_unreachable": 409,
    "empty_session": 409,
    "no_plane": 409,
    "point_off_plane": 409,
    "too_few_valid_points": 422,
    "out_of_bounds": 422,
    "archive_invalid": 422,
}


class ApiModel(BaseModel):
    model_config = ConfigDict(extra="forbid")


class CreateSessionRequest(ApiModel):
    schema_version: int = SCHEMA_VERSION
    scene_archive: str


class AnchorRequest(ApiModel):
    schema_version: int = SCHEMA_VERSION
    point: list[float] = Field(min_length=3, max_length=3)


class ModeRequest(ApiModel):
    schema_version: int = SCHEMA_VERSION
    mode: Literal["pointing", "gui", "kinesthetic"]


class PoseBody(ApiModel):
    quat_wxyz: list[float] = Field(min_length=4, max_length=4)
    xyz: list[float] = Field(min_length=3, max_length=3)

    def to_transform(self) -> RigidTransform:
        return RigidTransform(np.asarray(self.quat_wxyz), np.asarray(self.xyz))


class KeypointRequest(ApiModel):
    schema_version: int = SCHEMA_VERSION
    point: list[float] | None = Field(default=None, min_length=3, max_length=3)
    pose: PoseBody | None = None
    gripper: Literal["open", "closed"] = "open"
    dwell: float = 0.2


class FinalizeRequest(ApiModel):
    schema_version: int = SCHEMA_VERSION
    language_goal: str
    peract: bool = True
    imagebc: bool = False
    stride: int = 1


class IkCheckRequest(ApiModel):
    schema_version: int = SCHEMA_VERSION
    pose: PoseBody


def _pose_dict(t: RigidTransform) -> dict:
    return {"quat_wxyz": [float(v) for v in t.rotation],
            "xyz": [float(v) for v in t.translation]}


class SessionRuntime:
    """One collected session plus everything the endpoints need around it."""

    def __init__(self, session_id: str, archive, session: DemoSession,
                 pipeline_opts: PipelineOptions):
        self.id = session_id
        self.archive = archive
        self.session = session
        self.pipeline_opts = pipeline_opts
        self.lock = threading.Lock()
        self.manifest_path: Path | None = None
        self.export_summary: dict | None = None


class ServiceState:
    def __init__(self, data_root: Path, export_root: Path | None = None):
        self.data_root = Path(data_root)
        self.export_root = Path(export_root) if export_root else self.data_root / "exports"
        self.sessions: dict[str, SessionRuntime] = {}
        self.lock = threading.Lock()

    def get(self, session_id: str) -> SessionRuntime:
        with self.lock:
            if session_id not in self.sessions:
                raise SessionStateError(f"unknown session {session_id!r}")
            return self.sessions[session_id]


def _snapshot(rt: SessionRuntime) -> dict:
    s = rt.session
    return {
        "schema_version": SCHEMA_VERSION,
        "session_id": rt.id,
        "state": s.state,
        "mode": s.mode,
        "base_pose": _pose_dict(s.chain.base_pose) if s.chain else None,
        "current_joints": [float(v) for v in s.current_q.angles] if s.current_q else None,
        "gripper_open": s.gripper_open,
        "keypoint_count": len(s.keypoints),
        "segment_count": len(s.segments),
        "pending_previews": sorted(s.previews.keys()),
        "language_goal": s.language_goal,
        "state_hash": s.state_hash(),
    }


def create_app(data_root: str | Path = ".", export_root: str | Path | None = None,
               ui_dir: str | Path | None = None) -> FastAPI:
    state = ServiceState(Path(data_root), Path(export_root) if export_root else None)
    app = FastAPI(title="mimicarm session service", version=str(SCHEMA_VERSION))
    app.state.service = state

    if ui_dir is not None and Path(ui_dir).is_dir():
        from fastapi.staticfiles import StaticFiles
        app.mount("/app", StaticFiles(directory=str(ui_dir), html=True), name="ui")

    @app.exception_handler(MimicArmError)
    async def _domain_error(request: Request, exc: MimicArmError):
        return JSONResponse(
            status_code=_HTTP_CODES.get(exc.code, 400),
            content={"schema_version": SCHEMA_VERSION,
                     "error": {"code": exc.code, "message": str(exc)}})

    @app.get("/health")
    def health():
        return {"schema_version": SCHEMA_VERSION, "status": "ok",
                "sessions": len(state.sessions)}

    @app.post("/sessions", status_code=201)
    def create_session(body: CreateSessionRequest):
        path = Path(body.scene_archive)
        if not path.is_absolute():
            path = state.data_root / path
        if not path.exists():
            raise SceneNotFound(f"no archive at {path}")
        report = validate_archive(path)
        if not report.ok:
            raise SceneCorrupt("; ".join(report.issues[:3]))
        archive = load_archive(path)
        opts = PipelineOptions()
        cloud, plane = scene_from_archive(archive, opts)
        session = DemoSession(franka_chain(), cloud, plane, scene_ref=path.name,
                              plane_inlier_dist=opts.plane_inlier_dist,
                              collision_resolution=opts.resolution)
        rt = SessionRuntime(uuid.uuid4().hex[:12], archive, session, opts)
        with state.lock:
            state.sessions[rt.id] = rt
        return _snapshot(rt)

    @app.get("/sessions/{session_id}")
    def get_session(session_id: str):
        rt = state.get(session_id)
        with rt.lock:
            return _snapshot(rt)

    @app.get("/sessions/{session_id}/scene")
    def get_scene(session_id: str, max_points: int = 20000):
        rt = state.get(session_id)
        with rt.lock:
            s = rt.session
            pts = s.cloud.points
            stride = max(1, len(pts) // max_points)
            sub = pts[::stride]
            colors = (s.cloud.colors[::stride].tolist()
                      if s.cloud.colors is not None else None)
            chain = s.chain or s._chain_template
            spheres = [{"link": int(l), "center": c.tolist(), "radius": float(r)}
                       for l, c, r in zip(chain._sphere_link, chain._sphere_local,
                                          chain._sphere_radius)]
            return {
                "schema_version": SCHEMA_VERSION,
                "points": sub.tolist(),
                "colors": colors,
                "plane": {"normal": s.plane.normal.tolist(),
                          "offset": s.plane.offset,
                          "inlier_count": s.plane.inlier_count} if s.plane else None,
                "robot": {
                    "joint_count": chain.n_joints,
                    "home": chain.home.tolist(),
                    "lower": chain.lower.tolist(),
                    "upper": chain.upper.tolist(),
                    "spheres": spheres,
                },
            }

    @app.get("/sessions/{session_id}/robot_pose")
    def robot_pose(session_id: str, joints: str | None = None):
        """World sphere centers for a configuration (default: current)."""
        rt = state.get(session_id)
        with rt.lock:
            s = rt.session
            if s.chain is None or s.current_q is None:
                raise SessionStateError("robot not anchored yet")
            angles = (np.asarray(json.loads(joints), dtype=np.float64)
                      if joints else s.current_q.angles)
            link_mats, tcp = s.chain.fk_raw(angles)
            centers = s.chain.sphere_centers_world(link_mats)
            return {"schema_version": SCHEMA_VERSION,
                    "sphere_centers": centers.tolist(),
                    "sphere_radii": s.chain._sphere_radius.tolist(),
                    "sphere_links": s.chain._sphere_link.tolist(),
                    "tcp": _pose_dict(forward_kinematics(s.chain, angles).tcp)}

    @app.get("/sessions/{session_id}/hand_keypoints")
    def hand_keypoints(session_id: str):
        """Recorded hand-keypoint stream as NDJSON (kinesthetic replay source)."""
        rt = state.get(session_id)
        lines = []
        for rec in rt.archive.hand_keypoints():
            pts = np.column_stack([rec.points, rec.confidence])
            lines.append(json.dumps({"timestamp": rec.timestamp,
                                     "points": pts.tolist()}) + "\n")
        return StreamingResponse(iter(lines), media_type="application/x-ndjson")

    @app.post("/sessions/{session_id}/ik_check")
    def ik_check(session_id: str, body: IkCheckRequest):
        """Reachability dry run for the pose gizmo; never mutates the session."""
        from .errors import Unreachable
        from .kinematics import inverse_kinematics

        rt = state.get(session_id)
        with rt.lock:
            s = rt.session
            if s.chain is None or s.current_q is None:
                raise SessionStateError("robot not anchored yet")
            try:
                res = inverse_kinematics(s.chain, body.pose.to_transform(), s.current_q)
                return {"schema_version": SCHEMA_VERSION, "reachable": True,
                        "pos_err": res.pos_err, "rot_err": res.rot_err}
            except Unreachable as e:
                return {"schema_version": SCHEMA_VERSION, "reachable": False,
                        "pos_err": None, "rot_err": None, "reason": str(e)}

    @app.post("/sessions/{session_id}/anchor")
    def anchor(session_id: str, body: AnchorRequest):
        rt = state.get(session_id)
        with rt.lock:
            base = rt.session.anchor(np.asarray(body.point))
            return {"schema_version": SCHEMA_VERSION, "base_pose": _pose_dict(base),
                    "state": rt.session.state}

    @app.post("/sessions/{session_id}/mode")
    def set_mode(session_id: str, body: ModeRequest):
        rt = state.get(session_id)
        with rt.lock:
            rt.session.set_mode(body.mode)
            return _snapshot(rt)

    @app.post("/sessions/{session_id}/keypoints", status_code=201)
    def submit_keypoint(session_id: str, body: KeypointRequest):
        rt = state.get(session_id)
        with rt.lock:
            preview = rt.session.submit_keypoint(
                point=body.point,
                pose=body.pose.to_transform() if body.pose else None,
                gripper_command=body.gripper, dwell=body.dwell)
            seg = preview.segment
            return {
                "schema_version": SCHEMA_VERSION,
                "preview_id": preview.id,
                "reachable": True,
                "sample_count": len(seg),
                "collision_count": int(seg.collided.sum()),
                "keypoint_target": _pose_dict(preview.keypoint.target),
            }

    @app.post("/sessions/{session_id}/hand_frames", status_code=201)
    async def stream_hand_frames(session_id: str, request: Request):
        """Kinesthetic ingest: NDJSON body, one line per frame:
        {"timestamp": t, "points": [[u, v, confidence] x 21]}."""
        raw = await request.body()
        rt = state.get(session_id)
        with rt.lock:
            session = rt.session
            if session.state != "collecting":
                raise SessionStateError(f"hand frames invalid in state {session.state!r}")
            if session.mode != "kinesthetic":
                raise WrongMode(f"hand frames require kinesthetic mode, session is {session.mode}")
            samples = []
            period = 1.0 / rt.archive.nominal_rate
            for line in raw.decode().splitlines():
                if not line.strip():
                    continue
                rec = json.loads(line)
                arr = np.asarray(rec["points"], dtype=np.float64)
                kp = HandKeypoints2D(arr[:, :2], arr[:, 2], rec["timestamp"])
                idx = min(range(rt.archive.frame_count),
                          key=lambda i: abs(rt.archive.manifest["frames"][i]["timestamp"]
                                            - rec["timestamp"]))
                frame = rt.archive.frame(idx)
                try:
                    pts, valid = lift_keypoints(kp, frame, max_time_offset=period)
                    samples.append(estimate_hand_frame(pts, valid, timestamp=kp.timestamp))
                except TooFewValidPoints:
                    continue
            if not samples:
                raise TooFewValidPoints("no liftable hand frames in stream")
            track = smooth_track(HandTrack(samples, rt.archive.nominal_rate),
                                 alpha=rt.pipeline_opts.smooth_alpha,
                                 outlier_jump=rt.pipeline_opts.outlier_jump)
            preview = session.submit_hand_track(track)
            return {
                "schema_version": SCHEMA_VERSION,
                "preview_id": preview.id,
                "sample_count": len(preview.segment),
                "collision_count": int(preview.segment.collided.sum()),
                "ik_failed_count": int(preview.segment.ik_failed.sum()),
            }

    @app.get("/sessions/{session_id}/previews/{preview_id}")
    def stream_preview(session_id: str, preview_id: str):
        """Line-delimited preview samples, in timestamp order."""
        rt = state.get(session_id)
        with rt.lock:
            preview = rt.session.get_preview(preview_id)
            chain = rt.session.chain
            seg = preview.segment

            def lines() -> Iterator[str]:
                for i in range(len(seg)):
                    fk = forward_kinematics(chain, seg.joints[i], limits_checked=False)
                    yield json.dumps({
                        "index": i,
                        "t": float(seg.times[i]),
                        "joints": [float(v) for v in seg.joints[i]],
                        "gripper_open": bool(seg.gripper_open[i]),
                        "collided": bool(seg.collided[i]),
                        "tcp": _pose_dict(fk.tcp),
                    }, sort_keys=True) + "\n"

            payload = "".join(lines())  # materialized under the lock: consistent snapshot
        return StreamingResponse(iter(payload.splitlines(keepends=True)),
                                 media_type="application/x-ndjson")

    @app.post("/sessions/{session_id}/previews/{preview_id}/accept")
    def accept_preview(session_id: str, preview_id: str):
        rt = state.get(session_id)
        with rt.lock:
            rt.session.accept_preview(preview_id)
            return _snapshot(rt)

    @app.post("/sessions/{session_id}/previews/{preview_id}/discard")
    def discard_preview(session_id: str, preview_id: str):
        rt = state.get(session_id)
        with rt.lock:
            rt.session.discard_preview(preview_id)
            return _snapshot(rt)

    @app.post("/sessions/{session_id}/finalize")
    def finalize(session_id: str, body: FinalizeRequest):
        rt = state.get(session_id)
        with rt.lock:
            session = rt.session
            if session.state == "finalized" and rt.manifest_path is not None:
                return rt.export_summary  # idempotent
            demo = session.finalize(body.language_goal)
            opts = rt.pipeline_opts
            anchor_pt = session.chain.base_pose.translation
            workspace = workspace_bounds_on_plane(session.plane, anchor_pt,
                                                  session.workspace_side)
            frame0 = rt.archive.frame(0)
            peract = None
            if body.peract:
                peract = export_peract(demo, [frame0], workspace, opts.resolution,
                                       opts.rot_bin_deg)
            imagebc = None
            if body.imagebc:
                imagebc = export_imagebc(demo, [frame0], None, rt.archive.plate(),
                                         session.chain, stride=body.stride)
            out_dir = state.export_root / rt.id
            manifest = write_dataset(out_dir, demo, peract, imagebc, opts.rot_bin_deg)
            rt.manifest_path = manifest
            rt.export_summary = {
                "schema_version": SCHEMA_VERSION,
                "state": session.state,
                "manifest": str(manifest),
                "keyframe_count": len(demo.keyframes),
                "peract_samples": len(peract) if peract else 0,
                "imagebc_samples": len(imagebc) if imagebc else 0,
            }
            return rt.export_summary

    return app
