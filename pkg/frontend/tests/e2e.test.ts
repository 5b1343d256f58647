// Scripted end-to-end smoke flow against the real service: load the bundled
// scene, anchor, place three keypoints (one deliberately unreachable), accept
// two previews, finalize, then check the exported dataset with the CLI.

import { dirname } from 'node:path';
import { afterAll, beforeAll, describe, expect, it } from 'vitest';

import { ServiceClient } from '../src/api.js';
import { AppController } from '../src/controller.js';
import { RecordingView } from './fakes.js';
import { startHarness, type Harness } from './harness.js';

let harness: Harness;

beforeAll(async () => {
    harness = await startHarness();
});

afterAll(() => {
    harness?.stop();
});

describe('UI smoke flow', () => {
    it('collects a demonstration end to end', async () => {
        const client = new ServiceClient(harness.baseUrl);
        const view = new RecordingView();
        const app = new AppController(client, view);

        // load bundled scene
        await app.start(harness.archiveName);
        expect(app.state.serverState).toBe('scene_loaded');
        expect(view.scenes).toHaveLength(1);
        expect(view.scenes[0].points.length).toBeGreaterThan(100);
        expect(view.scenes[0].robot.joint_count).toBe(7);

        // anchor the robot on the detected plane
        await app.anchor([0.0, 0.0, 0.001]);
        expect(app.state.serverState).toBe('anchored');
        await app.setMode('pointing');
        expect(app.state.serverState).toBe('collecting');

        // keypoint 1: reachable; play the preview, then accept
        app.gripper = 'closed';
        const p1 = await app.pickPoint([0.35, 0.1, 0.0]);
        expect(p1).not.toBeNull();
        const samples1 = await app.playPendingPreview();
        expect(samples1.length).toBeGreaterThanOrEqual(1);
        // playback order equals stream order
        expect(view.playedIndexOrder[0]).toEqual(samples1.map((s) => s.index));
        expect(view.playedIndexOrder[0]).toEqual(
            [...view.playedIndexOrder[0]].sort((a, b) => a - b));
        await app.acceptPreview();
        expect(app.state.pendingPreviewId).toBeNull();

        // keypoint 2: deliberately unreachable, error state shown inline
        const p2 = await app.pickPoint([5.0, 5.0, 0.0]);
        expect(p2).toBeNull();
        const statuses = [...view.markers.values()].map((m) => m.status);
        expect(statuses).toContain('unreachable');
        expect(app.state.lastError).toMatch(/unreachable/);
        expect(view.toasts.some((t) => t.kind === 'error')).toBe(true);

        // keypoint 3: reachable again; accept the second preview
        app.gripper = 'open';
        const p3 = await app.pickPoint([0.45, -0.05, 0.0]);
        expect(p3).not.toBeNull();
        await app.playPendingPreview();
        await app.acceptPreview();

        // a click that hit no geometry is a no-op with a hint
        const before = app.state.markers.length;
        await app.pickPoint(null);
        expect(app.state.markers.length).toBe(before);
        expect(view.toasts.some((t) => t.message.includes('no geometry'))).toBe(true);

        // finalize and verify the dataset with the batch CLI
        const result = await app.finalize('press the box');
        expect(result.state).toBe('finalized');
        expect(result.peract_samples).toBe(result.keyframe_count - 1);
        expect(result.peract_samples).toBeGreaterThanOrEqual(1);
        const report = harness.validate(dirname(result.manifest));
        expect(report.output).toContain('OK');
        expect(report.ok).toBe(true);
    });

    it('discard returns the robot to its pre-preview pose and leaves state unchanged', async () => {
        const client = new ServiceClient(harness.baseUrl);
        const view = new RecordingView();
        const app = new AppController(client, view);
        await app.start(harness.archiveName);
        await app.anchor([0.0, 0.0, 0.0]);
        await app.setMode('pointing');

        const hashBefore = (await client.getSession(app.state.sessionId!)).state_hash;
        const preJoints = view.jointHistory.at(-1)!;
        await app.pickPoint([0.4, 0.0, 0.0]);
        await app.discardPreview();
        expect(view.jointHistory.at(-1)).toEqual(preJoints);
        const hashAfter = (await client.getSession(app.state.sessionId!)).state_hash;
        expect(hashAfter).toBe(hashBefore);
    });

    it('page reload reconstructs identical state from the server', async () => {
        const client = new ServiceClient(harness.baseUrl);
        const view = new RecordingView();
        const app = new AppController(client, view);
        await app.start(harness.archiveName);
        await app.anchor([0.05, 0.0, 0.0]);
        await app.setMode('gui');
        const sid = app.state.sessionId!;
        const before = {
            state: app.state.serverState,
            mode: app.state.mode,
            hash: app.state.stateHash,
        };

        const view2 = new RecordingView();
        const app2 = new AppController(client, view2);
        await app2.reloadFromServer(sid);
        expect({
            state: app2.state.serverState,
            mode: app2.state.mode,
            hash: app2.state.stateHash,
        }).toEqual(before);
        expect(view2.scenes).toHaveLength(1);
    });

    it('gui mode: gizmo feasibility probe and pose submission', async () => {
        const client = new ServiceClient(harness.baseUrl);
        const view = new RecordingView();
        const app = new AppController(client, view);
        await app.start(harness.archiveName);
        await app.anchor([0.0, 0.0, 0.0]);
        await app.setMode('gui');

        app.gizmoMoved({ quat_wxyz: [0, 1, 0, 0], xyz: [0.4, 0.0, 0.3] }, 10);
        await new Promise((resolve) => setTimeout(resolve, 400));
        expect(view.feasibility.at(-1)).toBe(true);

        app.gizmoMoved({ quat_wxyz: [0, 1, 0, 0], xyz: [4.0, 0.0, 0.3] }, 10);
        await new Promise((resolve) => setTimeout(resolve, 400));
        expect(view.feasibility.at(-1)).toBe(false);

        const pid = await app.submitPose({ quat_wxyz: [0, 1, 0, 0], xyz: [0.4, 0.0, 0.3] });
        expect(pid).not.toBeNull();
        await app.acceptPreview();
        expect(app.state.serverState).toBe('collecting');
    });

    it('kinesthetic mode replays a recorded hand stream', async () => {
        const client = new ServiceClient(harness.baseUrl);
        const view = new RecordingView();
        const app = new AppController(client, view);
        await app.start(harness.archiveName);
        await app.anchor([0.0, 0.0, 0.0]);
        await app.setMode('kinesthetic');

        const ndjson = await client.getHandKeypoints(app.state.sessionId!);
        const lines = ndjson.split('\n').filter((l) => l.trim()).slice(0, 10);
        const pid = await app.replayHandStream(lines.join('\n'));
        expect(pid).not.toBeNull();
        const samples = await app.playPendingPreview();
        expect(samples).toHaveLength(10);
        await app.acceptPreview();
    });
});
