"""Batch entry point.

Subcommands: gen-synthetic, validate, process, replay, bench, export, serve.
Flag values come from defaults, then command-line flags, then --config file
entries (the config file has the last word). MIMICARM_DATA_ROOT anchors
relative data paths.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
import time
from pathlib import Path

import numpy as np

from . import __version__
from .archive import load_archive, validate_any
from .backend import ENV_VAR as BACKEND_ENV, active_backend
from .errors import MimicArmError
from .export import (export_imagebc, export_peract, load_demonstration,
                     render_robot, composite_frame, write_dataset)
from .pipeline import PipelineOptions, run_kinesthetic
from .synthetic import SyntheticSpec, generate_session

DATA_ROOT_ENV = "MIMICARM_DATA_ROOT"


def _resolve(path: str) -> Path:
    p = Path(path)
    if p.is_absolute():
        return p
    root = os.environ.get(DATA_ROOT_ENV)
    return (Path(root) / p) if root else p


def _apply_config(args: argparse.Namespace):
    """Config file entries override parsed flags (documented precedence)."""
    if not getattr(args, "config", None):
        return
    doc = json.loads(Path(args.config).read_text())
    for key, value in doc.items():
        attr = key.replace("-", "_")
        if not hasattr(args, attr):
            raise SystemExit(f"config key {key!r} is not a flag of this subcommand")
        setattr(args, attr, value)


def _pipeline_options(args) -> PipelineOptions:
    return PipelineOptions(
        chain_file=args.chain,
        language_goal=args.language_goal,
        smooth_alpha=args.smooth_alpha,
        resolution=args.resolution,
        rot_bin_deg=args.rot_bin_deg,
        plane_seed=args.seed,
    )


def cmd_gen_synthetic(args) -> int:
    scale = args.width / 640.0  # keep the field of view fixed across sizes
    spec = SyntheticSpec(n_frames=args.frames, width=args.width, height=args.height,
                         fx=525.0 * scale, fy=525.0 * scale)
    manifest = generate_session(_resolve(args.out), spec)
    print(f"synthetic session written: {manifest.parent}")
    return 0


def cmd_validate(args) -> int:
    report = validate_any(_resolve(args.path))
    for issue in report.issues:
        print(f"FAIL: {issue}")
    if report.ok:
        print(f"OK: {report.checked_files} payload files verified")
        return 0
    return 1


def cmd_process(args) -> int:
    # validate and process must agree on what is consumable
    report = validate_any(_resolve(args.archive))
    if not report.ok:
        for issue in report.issues:
            print(f"FAIL: {issue}", file=sys.stderr)
        return 1
    archive = load_archive(_resolve(args.archive))
    opts = _pipeline_options(args)
    anchor = np.asarray(args.anchor, dtype=np.float64) if args.anchor else None
    demo, chain, plane, workspace, grid, frame_indices = run_kinesthetic(
        archive, opts, anchor=anchor)
    out = _resolve(args.out)

    peract = None
    if not args.imagebc_only:
        kf_frames = [archive.frame(frame_indices[min(k.index, len(frame_indices) - 1)])
                     for k in demo.keyframes]
        kf_masks = [archive.mask(frame_indices[min(k.index, len(frame_indices) - 1)])
                    for k in demo.keyframes]
        peract = export_peract(demo, kf_frames, workspace, opts.resolution,
                               opts.rot_bin_deg, kf_masks)
    imagebc = None
    if not args.peract_only:
        frames = [archive.frame(i) for i in frame_indices]
        masks = [archive.mask(i) for i in frame_indices]
        imagebc = export_imagebc(demo, frames, masks, archive.plate(), chain,
                                 stride=args.stride, require_masks=True)
    manifest = write_dataset(out, demo, peract, imagebc, opts.rot_bin_deg)
    print(f"dataset written: {manifest.parent}")
    print(f"keyframes: {len(demo.keyframes)}  peract samples: "
          f"{len(peract) if peract else 0}  imagebc samples: "
          f"{len(imagebc) if imagebc else 0}")
    return 0


def cmd_export(args) -> int:
    # re-export a processed demonstration with different options
    archive = load_archive(_resolve(args.archive))
    demo = load_demonstration(_resolve(args.demonstration))
    opts = _pipeline_options(args)
    from .pipeline import anchored_chain, scene_from_archive
    from .scene import workspace_bounds_on_plane
    cloud, plane = scene_from_archive(archive, opts)
    chain, anchor_pt = anchored_chain(archive, plane, opts)
    workspace = workspace_bounds_on_plane(plane, anchor_pt, opts.workspace_side)
    n = archive.frame_count
    kf_frames = [archive.frame(min(k.index, n - 1)) for k in demo.keyframes]
    kf_masks = [archive.mask(min(k.index, n - 1)) for k in demo.keyframes]
    peract = export_peract(demo, kf_frames, workspace, opts.resolution,
                           opts.rot_bin_deg, kf_masks)
    imagebc = None
    if not args.peract_only:
        frames = [archive.frame(min(i, n - 1)) for i in range(len(demo.trajectory))]
        masks = [archive.mask(min(i, n - 1)) for i in range(len(demo.trajectory))]
        imagebc = export_imagebc(demo, frames, masks, archive.plate(), chain,
                                 stride=args.stride)
    manifest = write_dataset(_resolve(args.out), demo, peract, imagebc, opts.rot_bin_deg)
    print(f"dataset written: {manifest.parent}")
    return 0


def cmd_replay(args) -> int:
    from PIL import Image

    archive = load_archive(_resolve(args.archive))
    demo = load_demonstration(_resolve(args.demonstration))
    opts = _pipeline_options(args)
    from .pipeline import anchored_chain, scene_from_archive
    cloud, plane = scene_from_archive(archive, opts)
    chain, _ = anchored_chain(archive, plane, opts)
    out = _resolve(args.out)
    out.mkdir(parents=True, exist_ok=True)
    n_frames = archive.frame_count
    count = 0
    for i in range(0, len(demo.trajectory), args.stride):
        frame = archive.frame(min(i, n_frames - 1))
        overlay, _ = render_robot(chain, demo.trajectory.joints[i], frame.intrinsics,
                                  frame.camera_pose, frame.depth)
        image = composite_frame(frame.color, None, None, overlay)
        Image.fromarray(image).save(out / f"replay_{count:06d}.png")
        count += 1
    print(f"{count} frames rendered to {out}")
    return 0


def _bench_one_backend(archive, opts: PipelineOptions, parallel_workers: int):
    from concurrent.futures import ThreadPoolExecutor

    from .demo import mimic_hand
    from .handtrack import HandTrack, estimate_hand_frame, lift_keypoints, smooth_track
    from .pipeline import anchored_chain, scene_from_archive

    kernels_backend = active_backend()
    if kernels_backend == "numba":
        from .kernels import numba_impl
        numba_impl.warmup()
    frames = [archive.frame(i) for i in range(archive.frame_count)]
    keypoints = archive.hand_keypoints()
    cloud, plane = scene_from_archive(archive, opts)
    chain, _ = anchored_chain(archive, plane, opts)
    period = 1.0 / archive.nominal_rate
    n = len(frames)

    def lift_one(i):
        pts, valid = lift_keypoints(keypoints[i], frames[i], opts.conf_min,
                                    opts.hole_radius_px, max_time_offset=period)
        return estimate_hand_frame(pts, valid, timestamp=keypoints[i].timestamp)

    t0 = time.perf_counter()
    samples = [lift_one(i) for i in range(n)]
    t_lift = time.perf_counter() - t0

    t0 = time.perf_counter()
    track = smooth_track(HandTrack(samples, archive.nominal_rate),
                         alpha=opts.smooth_alpha, outlier_jump=opts.outlier_jump)
    t_smooth = time.perf_counter() - t0

    t0 = time.perf_counter()
    mimic_hand(chain, track, opts.hand_offset)
    t_ik = time.perf_counter() - t0

    t0 = time.perf_counter()
    with ThreadPoolExecutor(max_workers=parallel_workers) as pool:
        par_samples = list(pool.map(lift_one, range(n)))
    t_lift_par = time.perf_counter() - t0
    assert len(par_samples) == n

    single = n / (t_lift + t_smooth + t_ik)
    parallel = n / (t_lift_par + t_smooth + t_ik)
    return {
        "backend": kernels_backend,
        "frames": n,
        "lift_fps": n / t_lift,
        "smooth_fps": n / t_smooth,
        "ik_fps": n / t_ik,
        "pipeline_fps_single_thread": single,
        "pipeline_fps_parallel": parallel,
    }


def cmd_bench(args) -> int:
    archive = load_archive(_resolve(args.archive))
    opts = _pipeline_options(args)
    report = {
        "schema": "mimicarm-bench/1",
        "archive": str(archive.root),
        "frames": archive.frame_count,
        "image_size": [archive.intrinsics.width, archive.intrinsics.height],
        "backends": {},
    }
    backends = ["numba", "numpy"] if args.both_backends else [active_backend()]
    previous = os.environ.get(BACKEND_ENV)
    try:
        for backend in backends:
            os.environ[BACKEND_ENV] = backend
            report["backends"][backend] = _bench_one_backend(
                archive, opts, args.parallel_workers)
    finally:
        if previous is None:
            os.environ.pop(BACKEND_ENV, None)
        else:
            os.environ[BACKEND_ENV] = previous
    default = report["backends"][backends[0]]
    report["frames_per_second"] = default["pipeline_fps_single_thread"]
    report["sustains_input_rate_30fps"] = default["pipeline_fps_single_thread"] >= 30.0
    report["sustains_300fps_single_thread"] = default["pipeline_fps_single_thread"] >= 300.0
    print(json.dumps(report, indent=2, sort_keys=True))
    return 0


def cmd_serve(args) -> int:
    import uvicorn

    from .service import create_app

    app = create_app(Path(os.environ.get(DATA_ROOT_ENV, ".")), ui_dir=args.ui)
    uvicorn.run(app, host=args.host, port=args.port, log_level="info")
    return 0


def _add_common_pipeline_flags(p: argparse.ArgumentParser):
    p.add_argument("--chain", default=None, help="chain description file (default: bundled arm)")
    p.add_argument("--language-goal", default="demonstration", help="language goal text")
    p.add_argument("--smooth-alpha", type=float, default=1.0,
                   help="track smoothing factor; 1.0 = pass-through (clean recordings)")
    p.add_argument("--resolution", type=float, default=0.01, help="voxel size, meters")
    p.add_argument("--rot-bin-deg", type=float, default=5.0, help="rotation bin width, degrees")
    p.add_argument("--stride", type=int, default=1, help="image-BC frame stride")
    p.add_argument("--seed", type=int, default=0, help="RANSAC seed")
    p.add_argument("--config", default=None,
                   help="JSON config file; entries override command-line flags")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mimicarm",
        description="Robot-free demonstration collection and dataset export")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen-synthetic", help="write the bundled synthetic session")
    p.add_argument("--out", required=True)
    p.add_argument("--frames", type=int, default=90)
    p.add_argument("--width", type=int, default=640)
    p.add_argument("--height", type=int, default=480)
    p.add_argument("--config", default=None)
    p.set_defaults(func=cmd_gen_synthetic)

    p = sub.add_parser("validate", help="validate a session archive or dataset")
    p.add_argument("path")
    p.add_argument("--config", default=None)
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("process", help="run the kinesthetic pipeline end to end")
    p.add_argument("archive")
    p.add_argument("--out", required=True)
    p.add_argument("--anchor", type=float, nargs=3, default=None,
                   help="robot anchor point (default: archive anchor)")
    group = p.add_mutually_exclusive_group()
    group.add_argument("--peract-only", action="store_true")
    group.add_argument("--imagebc-only", action="store_true")
    _add_common_pipeline_flags(p)
    p.set_defaults(func=cmd_process)

    p = sub.add_parser("export", help="re-export datasets from a saved demonstration")
    p.add_argument("archive")
    p.add_argument("demonstration", help="path to demonstration.json")
    p.add_argument("--out", required=True)
    p.add_argument("--peract-only", action="store_true")
    _add_common_pipeline_flags(p)
    p.set_defaults(func=cmd_export)

    p = sub.add_parser("replay", help="render a demonstration over the scene")
    p.add_argument("archive")
    p.add_argument("demonstration")
    p.add_argument("--out", required=True)
    _add_common_pipeline_flags(p)
    p.set_defaults(func=cmd_replay)

    p = sub.add_parser("bench", help="throughput report for the lift->smooth->IK pipeline")
    p.add_argument("archive")
    p.add_argument("--both-backends", action="store_true",
                   help="measure numba and pure-numpy kernels")
    p.add_argument("--parallel-workers", type=int, default=4)
    _add_common_pipeline_flags(p)
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("serve", help="run the local session service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8423)
    p.add_argument("--ui", default=None,
                   help="built frontend directory to serve at /app (e.g. ./frontend)")
    p.add_argument("--config", default=None)
    p.set_defaults(func=cmd_serve)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    _apply_config(args)
    try:
        return args.func(args)
    except MimicArmError as e:
        print(f"error [{e.code}]: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
