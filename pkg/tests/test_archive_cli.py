import hashlib
import json
from pathlib import Path

import numpy as np
import pytest

from mimicarm.archive import (load_archive, validate_any, validate_archive,
                              validate_dataset)
from mimicarm.cli import main
from mimicarm.pipeline import PipelineOptions, run_kinesthetic


def tree_hash(root: Path, exclude=()) -> str:
    h = hashlib.sha256()
    for p in sorted(Path(root).rglob("*")):
        if p.is_file() and p.name not in exclude:
            h.update(str(p.relative_to(root)).encode())
            h.update(p.read_bytes())
    return h.hexdigest()


class TestValidate:
    def test_bundled_session_passes(self, small_session):
        assert validate_archive(small_session).ok

    def test_corrupted_checksum_names_file(self, small_session, tmp_path):
        import shutil
        bad = tmp_path / "bad"
        shutil.copytree(small_session, bad)
        victim = bad / "frames" / "depth_000003.npy"
        victim.write_bytes(victim.read_bytes()[:-4] + b"\x00\x00\x00\x00")
        report = validate_archive(bad)
        assert not report.ok
        assert any("depth_000003.npy" in issue for issue in report.issues)

    def test_out_of_order_timestamps(self, small_session, tmp_path):
        import shutil
        bad = tmp_path / "bad_ts"
        shutil.copytree(small_session, bad)
        manifest = json.loads((bad / "manifest.json").read_text())
        manifest["frames"][1]["timestamp"] = -1.0
        (bad / "manifest.json").write_text(json.dumps(manifest, sort_keys=True))
        report = validate_archive(bad)
        assert any("timestamps" in issue for issue in report.issues)

    def test_missing_archive(self, tmp_path):
        report = validate_archive(tmp_path / "nope")
        assert not report.ok

    def test_validate_any_dispatches_to_dataset(self, small_session, tmp_path):
        rc = main(["process", str(small_session), "--out", str(tmp_path / "ds"),
                   "--language-goal", "g", "--peract-only"])
        assert rc == 0
        assert validate_any(tmp_path / "ds").ok
        assert validate_any(small_session).ok


class TestProcess:
    def test_deterministic_runs_byte_identical(self, small_session, tmp_path):
        for name in ("a", "b"):
            rc = main(["process", str(small_session), "--out", str(tmp_path / name),
                       "--language-goal", "pick", "--stride", "5"])
            assert rc == 0
        assert tree_hash(tmp_path / "a") == tree_hash(tmp_path / "b")

    def test_peract_only_skips_images(self, small_session, tmp_path):
        rc = main(["process", str(small_session), "--out", str(tmp_path / "ds"),
                   "--language-goal", "pick", "--peract-only"])
        assert rc == 0
        assert not (tmp_path / "ds" / "imagebc").exists()
        assert (tmp_path / "ds" / "peract").exists()
        m = json.loads((tmp_path / "ds" / "manifest.json").read_text())
        assert m["peract"]["sample_count"] == m["keyframe_count"] - 1

    def test_missing_masks_faults_imagebc(self, small_session, tmp_path):
        import shutil
        stripped = tmp_path / "nomasks"
        shutil.copytree(small_session, stripped)
        manifest = json.loads((stripped / "manifest.json").read_text())
        for entry in manifest["frames"]:
            entry["mask"] = None
        manifest["checksums"] = {k: v for k, v in manifest["checksums"].items()
                                 if not k.startswith("masks/")}
        (stripped / "manifest.json").write_text(json.dumps(manifest, sort_keys=True))
        rc = main(["process", str(stripped), "--out", str(tmp_path / "ds"),
                   "--language-goal", "pick"])
        assert rc == 2  # MissingMask surfaces as a CLI error

    def test_rejects_what_validate_rejects(self, small_session, tmp_path):
        import shutil
        bad = tmp_path / "corrupt"
        shutil.copytree(small_session, bad)
        victim = bad / "frames" / "depth_000002.npy"
        victim.write_bytes(victim.read_bytes()[:-2] + b"\x00\x00")
        assert not validate_any(bad).ok
        rc = main(["process", str(bad), "--out", str(tmp_path / "ds"),
                   "--language-goal", "g", "--peract-only"])
        assert rc == 1

    def test_recovers_ground_truth_keyframes(self, small_session, tmp_path):
        archive = load_archive(small_session)
        gt = archive.ground_truth()
        demo, chain, plane, ws, grid, fi = run_kinesthetic(
            archive, PipelineOptions(language_goal="x"))
        transitions = np.nonzero(np.diff(demo.trajectory.gripper_open.astype(int)))[0] + 1
        assert len(transitions) == 2  # one close, one reopen
        kf_idx = {k.index for k in demo.keyframes}
        assert set(transitions.tolist()) <= kf_idx


class TestReplay:
    def test_frame_count_and_determinism(self, small_session, tmp_path):
        rc = main(["process", str(small_session), "--out", str(tmp_path / "ds"),
                   "--language-goal", "g", "--peract-only"])
        assert rc == 0
        demo_json = tmp_path / "ds" / "demonstration.json"
        for name in ("r1", "r2"):
            rc = main(["replay", str(small_session), str(demo_json),
                       "--out", str(tmp_path / name)])
            assert rc == 0
        n_traj = len(json.loads(demo_json.read_text())["trajectory"]["times"])
        frames = sorted((tmp_path / "r1").glob("replay_*.png"))
        assert len(frames) == n_traj  # stride 1
        assert tree_hash(tmp_path / "r1") == tree_hash(tmp_path / "r2")

    def test_stride_divides_count(self, small_session, tmp_path):
        main(["process", str(small_session), "--out", str(tmp_path / "ds"),
              "--language-goal", "g", "--peract-only"])
        demo_json = tmp_path / "ds" / "demonstration.json"
        rc = main(["replay", str(small_session), str(demo_json),
                   "--out", str(tmp_path / "r4"), "--stride", "4"])
        assert rc == 0
        n_traj = len(json.loads(demo_json.read_text())["trajectory"]["times"])
        expected = -(-n_traj // 4)
        assert len(list((tmp_path / "r4").glob("replay_*.png"))) == expected


class TestBench:
    def test_report_schema_stable(self, small_session, capsys):
        rc = main(["bench", str(small_session)])
        assert rc == 0
        report = json.loads(capsys.readouterr().out)
        assert report["schema"] == "mimicarm-bench/1"
        for key in ("archive", "frames", "image_size", "backends",
                    "frames_per_second", "sustains_input_rate_30fps",
                    "sustains_300fps_single_thread"):
            assert key in report
        backend = next(iter(report["backends"].values()))
        for key in ("lift_fps", "smooth_fps", "ik_fps",
                    "pipeline_fps_single_thread", "pipeline_fps_parallel"):
            assert key in backend

    def test_processing_matches_without_bench(self, small_session, tmp_path, capsys):
        # bench must not perturb subsequent processing (same seeds, same outputs)
        main(["bench", str(small_session)])
        capsys.readouterr()
        main(["process", str(small_session), "--out", str(tmp_path / "after"),
              "--language-goal", "g", "--peract-only"])
        main(["process", str(small_session), "--out", str(tmp_path / "clean"),
              "--language-goal", "g", "--peract-only"])
        assert tree_hash(tmp_path / "after") == tree_hash(tmp_path / "clean")


class TestGenSynthetic:
    def test_generated_session_validates(self, tmp_path):
        rc = main(["gen-synthetic", "--out", str(tmp_path / "s"), "--frames", "30",
                   "--width", "320", "--height", "240"])
        assert rc == 0
        assert validate_archive(tmp_path / "s").ok

    def test_ground_truth_shipped(self, small_session):
        gt = load_archive(small_session).ground_truth()
        assert gt is not None
        assert len(gt["joints"]) == load_archive(small_session).frame_count


class TestConfigPrecedence:
    def test_config_file_overrides_flags(self, small_session, tmp_path):
        cfg = tmp_path / "cfg.json"
        cfg.write_text(json.dumps({"language-goal": "from-config"}))
        rc = main(["process", str(small_session), "--out", str(tmp_path / "ds"),
                   "--language-goal", "from-flag", "--peract-only",
                   "--config", str(cfg)])
        assert rc == 0
        rec = json.loads((tmp_path / "ds" / "demonstration.json").read_text())
        assert rec["language_goal"] == "from-config"

    def test_unknown_config_key_rejected(self, small_session, tmp_path):
        cfg = tmp_path / "cfg.json"
        cfg.write_text(json.dumps({"no-such-flag": 1}))
        with pytest.raises(SystemExit):
            main(["process", str(small_session), "--out", str(tmp_path / "ds"),
                  "--config", str(cfg)])

    def test_data_root_env(self, small_session, tmp_path, monkeypatch, capsys):
        monkeypatch.setenv("MIMICARM_DATA_ROOT", str(small_session.parent))
        rc = main(["validate", small_session.name])
        assert rc == 0
