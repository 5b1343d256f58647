import json
import random

import numpy as np
import pytest
from fastapi.testclient import TestClient

from mimicarm.service import create_app


@pytest.fixture(scope="module")
def service(small_session, tmp_path_factory):
    exports = tmp_path_factory.mktemp("exports")
    app = create_app(small_session.parent, export_root=exports)
    with TestClient(app, raise_server_exceptions=False) as client:
        client.archive_name = small_session.name
        yield client


def new_session(service) -> str:
    r = service.post("/sessions", json={"scene_archive": service.archive_name})
    assert r.status_code == 201
    return r.json()["session_id"]


def ready_session(service) -> str:
    sid = new_session(service)
    assert service.post(f"/sessions/{sid}/anchor",
                        json={"point": [0.0, 0.0, 0.001]}).status_code == 200
    assert service.post(f"/sessions/{sid}/mode",
                        json={"mode": "pointing"}).status_code == 200
    return sid


class TestLifecycle:
    def test_health(self, service):
        r = service.get("/health")
        assert r.status_code == 200 and r.json()["status"] == "ok"

    def test_create_loads_scene(self, service):
        sid = new_session(service)
        snap = service.get(f"/sessions/{sid}").json()
        assert snap["state"] == "scene_loaded"
        scene = service.get(f"/sessions/{sid}/scene").json()
        assert scene["plane"] is not None
        assert len(scene["points"]) > 100
        assert scene["robot"]["joint_count"] == 7

    def test_missing_archive_404(self, service):
        r = service.post("/sessions", json={"scene_archive": "no-such-dir"})
        assert r.status_code == 404
        assert r.json()["error"]["code"] == "scene_not_found"

    def test_corrupt_archive_422(self, service, tmp_path_factory):
        bad = tmp_path_factory.mktemp("corrupt") / "arch"
        bad.mkdir()
        (bad / "manifest.json").write_text("{not json")
        r = service.post("/sessions", json={"scene_archive": str(bad)})
        assert r.status_code == 422

    def test_anchor_off_plane_rejected(self, service):
        sid = new_session(service)
        r = service.post(f"/sessions/{sid}/anchor", json={"point": [0.0, 0.0, 0.5]})
        assert r.status_code == 409
        assert r.json()["error"]["code"] == "point_off_plane"

    def test_reanchor_allowed_before_collecting(self, service):
        sid = new_session(service)
        p1 = service.post(f"/sessions/{sid}/anchor", json={"point": [0.0, 0.0, 0.0]}).json()
        p2 = service.post(f"/sessions/{sid}/anchor", json={"point": [0.1, 0.0, 0.0]}).json()
        assert p1["base_pose"]["xyz"] != p2["base_pose"]["xyz"]

    def test_out_of_order_rejected_structurally(self, service):
        sid = new_session(service)
        r = service.post(f"/sessions/{sid}/keypoints", json={"point": [0.4, 0, 0]})
        assert r.status_code == 409
        assert r.json()["error"]["code"] in ("session_state", "wrong_mode")

    def test_unknown_fields_rejected(self, service):
        sid = new_session(service)
        r = service.post(f"/sessions/{sid}/anchor",
                         json={"point": [0, 0, 0], "bogus": True})
        assert r.status_code == 422


class TestPreviewFlow:
    def test_keypoint_preview_accept(self, service):
        sid = ready_session(service)
        r = service.post(f"/sessions/{sid}/keypoints",
                         json={"point": [0.35, 0.1, 0.0], "gripper": "closed"})
        assert r.status_code == 201
        body = r.json()
        assert body["reachable"] and body["sample_count"] >= 1
        r = service.post(f"/sessions/{sid}/previews/{body['preview_id']}/accept")
        assert r.status_code == 200
        assert r.json()["segment_count"] == 1

    def test_preview_stream_in_order(self, service):
        sid = ready_session(service)
        pid = service.post(f"/sessions/{sid}/keypoints",
                           json={"point": [0.4, 0.0, 0.0]}).json()["preview_id"]
        r = service.get(f"/sessions/{sid}/previews/{pid}")
        records = [json.loads(line) for line in r.text.splitlines() if line.strip()]
        times = [rec["t"] for rec in records]
        assert times == sorted(times)
        assert [rec["index"] for rec in records] == list(range(len(records)))

    def test_discard_leaves_state_hash_unchanged(self, service):
        sid = ready_session(service)
        h0 = service.get(f"/sessions/{sid}").json()["state_hash"]
        pid = service.post(f"/sessions/{sid}/keypoints",
                           json={"point": [0.4, 0.0, 0.0]}).json()["preview_id"]
        assert service.get(f"/sessions/{sid}").json()["state_hash"] == h0
        service.post(f"/sessions/{sid}/previews/{pid}/discard")
        assert service.get(f"/sessions/{sid}").json()["state_hash"] == h0

    def test_accept_token_single_use(self, service):
        sid = ready_session(service)
        pid = service.post(f"/sessions/{sid}/keypoints",
                           json={"point": [0.4, 0.0, 0.0]}).json()["preview_id"]
        assert service.post(f"/sessions/{sid}/previews/{pid}/accept").status_code == 200
        assert service.post(f"/sessions/{sid}/previews/{pid}/accept").status_code == 409

    def test_unreachable_keypoint_surfaced(self, service):
        sid = ready_session(service)
        r = service.post(f"/sessions/{sid}/keypoints", json={"point": [5.0, 5.0, 0.0]})
        assert r.status_code == 409
        assert r.json()["error"]["code"] == "unreachable_keypoint"

    def test_wrong_mode_for_pose(self, service):
        sid = ready_session(service)  # pointing mode
        r = service.post(f"/sessions/{sid}/keypoints",
                         json={"pose": {"quat_wxyz": [0, 1, 0, 0], "xyz": [0.4, 0, 0.3]}})
        assert r.status_code == 409
        assert r.json()["error"]["code"] == "wrong_mode"

    def test_hand_stream_kinesthetic(self, service, small_session):
        from mimicarm.archive import load_archive

        sid = new_session(service)
        service.post(f"/sessions/{sid}/anchor", json={"point": [0.0, 0.0, 0.0]})
        service.post(f"/sessions/{sid}/mode", json={"mode": "kinesthetic"})
        archive = load_archive(small_session)
        kps = archive.hand_keypoints()
        lines = []
        for rec in kps[:12]:
            pts = np.column_stack([rec.points, rec.confidence])
            lines.append(json.dumps({"timestamp": rec.timestamp, "points": pts.tolist()}))
        r = service.post(f"/sessions/{sid}/hand_frames", content="\n".join(lines))
        assert r.status_code == 201
        body = r.json()
        assert body["sample_count"] == 12
        r = service.post(f"/sessions/{sid}/previews/{body['preview_id']}/accept")
        assert r.status_code == 200

    def test_hand_stream_wrong_mode(self, service):
        sid = ready_session(service)  # pointing
        r = service.post(f"/sessions/{sid}/hand_frames", content="")
        assert r.status_code == 409


class TestFinalize:
    def run_two_keypoints(self, service):
        sid = ready_session(service)
        for point, grip in ([0.35, 0.1, 0.0], "closed"), ([0.45, -0.05, 0.0], "open"):
            pid = service.post(f"/sessions/{sid}/keypoints",
                               json={"point": point, "gripper": grip}).json()["preview_id"]
            assert service.post(f"/sessions/{sid}/previews/{pid}/accept").status_code == 200
        return sid

    def test_finalize_exports_and_is_idempotent(self, service):
        sid = self.run_two_keypoints(service)
        r = service.post(f"/sessions/{sid}/finalize",
                         json={"language_goal": "press the box"})
        assert r.status_code == 200
        body = r.json()
        assert body["state"] == "finalized"
        assert body["peract_samples"] == body["keyframe_count"] - 1
        assert body["peract_samples"] >= 1
        again = service.post(f"/sessions/{sid}/finalize",
                             json={"language_goal": "press the box"}).json()
        assert again == body
        from mimicarm.archive import validate_dataset
        from pathlib import Path
        assert validate_dataset(Path(body["manifest"]).parent).ok

    def test_finalize_empty_session(self, service):
        sid = ready_session(service)
        r = service.post(f"/sessions/{sid}/finalize", json={"language_goal": "g"})
        assert r.status_code == 409
        assert r.json()["error"]["code"] == "empty_session"

    def test_mutations_after_finalize_rejected(self, service):
        sid = self.run_two_keypoints(service)
        service.post(f"/sessions/{sid}/finalize", json={"language_goal": "g"})
        r = service.post(f"/sessions/{sid}/keypoints", json={"point": [0.4, 0, 0]})
        assert r.status_code == 409


class TestFuzz:
    def test_random_call_sequences_never_crash(self, service):
        rng = random.Random(77)
        sid = new_session(service)
        endpoints = []

        def call_create():
            return service.post("/sessions", json={"scene_archive": service.archive_name})

        def call_anchor():
            p = [rng.uniform(-0.3, 0.6), rng.uniform(-0.4, 0.4),
                 rng.choice([0.0, 0.001, 0.4])]
            return service.post(f"/sessions/{sid}/anchor", json={"point": p})

        def call_mode():
            return service.post(f"/sessions/{sid}/mode",
                                json={"mode": rng.choice(["pointing", "gui", "kinesthetic"])})

        def call_keypoint():
            if rng.random() < 0.5:
                body = {"point": [rng.uniform(0.2, 0.6), rng.uniform(-0.3, 0.3), 0.0]}
            else:
                body = {"pose": {"quat_wxyz": [0, 1, 0, 0],
                                 "xyz": [rng.uniform(0.2, 0.6), 0.0, rng.uniform(0.1, 0.5)]}}
            body["gripper"] = rng.choice(["open", "closed"])
            return service.post(f"/sessions/{sid}/keypoints", json=body)

        previews = []

        def call_accept():
            pid = previews.pop() if previews and rng.random() < 0.7 else "bogus"
            return service.post(f"/sessions/{sid}/previews/{pid}/accept")

        def call_discard():
            pid = previews.pop() if previews and rng.random() < 0.7 else "bogus"
            return service.post(f"/sessions/{sid}/previews/{pid}/discard")

        def call_snapshot():
            return service.get(f"/sessions/{sid}")

        def call_finalize():
            return service.post(f"/sessions/{sid}/finalize",
                                json={"language_goal": "fuzz", "peract": False})

        def call_bad_body():
            return service.post(f"/sessions/{sid}/anchor", json={"nope": 1})

        endpoints = [call_create, call_anchor, call_mode, call_keypoint,
                     call_accept, call_discard, call_snapshot, call_finalize,
                     call_bad_body]
        weights = [1, 3, 3, 6, 4, 2, 3, 1, 1]
        valid_states = {"created", "scene_loaded", "anchored", "collecting", "finalized"}
        for i in range(1000):
            call = rng.choices(endpoints, weights)[0]
            r = call()
            assert r.status_code < 500, f"call {i}: {call.__name__} -> {r.status_code}: {r.text[:200]}"
            if r.status_code == 201 and "preview_id" in r.text:
                previews.append(r.json()["preview_id"])
            snap = service.get(f"/sessions/{sid}")
            assert snap.status_code == 200
            assert snap.json()["state"] in valid_states
