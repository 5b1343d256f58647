// Orchestrates the service client, the view state, and whatever renders the
// scene. All session mutations go through the service; the controller never
// invents state the server does not confirm.

import {
    Gripper, Mode, Pose, PreviewSample, ScenePayload, ServiceClient,
    ServiceError, Snapshot, Vec3,
} from './api.js';
import {
    ViewState, addMarker, applySnapshot, assertModeConsistent, clearPreview,
    initialViewState, setMarkerStatus, stagePreview,
} from './state.js';

/** The rendering surface, WebGL in the browser and a recording fake in tests. */
export interface SceneView {
    loadScene(scene: ScenePayload): void;
    setRobotJoints(joints: number[]): void;
    upsertMarker(id: string, point: Vec3, status: 'pending' | 'ok' | 'unreachable'): void;
    playPreview(samples: PreviewSample[]): Promise<void>;
    showToast(kind: 'info' | 'error', message: string): void;
    setFeasibility(reachable: boolean | null): void;
}

let markerCounter = 0;

export class AppController {
    state: ViewState = initialViewState();
    gripper: Gripper = 'open';
    private currentJoints: number[] | null = null;
    private gizmoTimer: ReturnType<typeof setTimeout> | null = null;

    constructor(private client: ServiceClient, private view: SceneView) {}

    private fold(snap: Snapshot): void {
        assertModeConsistent(this.state, snap);
        this.state = applySnapshot(this.state, snap);
        if (snap.current_joints) {
            this.currentJoints = snap.current_joints;
            this.view.setRobotJoints(snap.current_joints);
        }
    }

    private reportError(err: unknown): ServiceError {
        const e = err instanceof ServiceError
            ? err
            : new ServiceError(0, 'network', String(err));
        const message = `${e.code}: ${e.message}`;
        this.state = { ...this.state, lastError: message };
        this.view.showToast('error', message);
        return e;
    }

    async start(sceneArchive: string): Promise<void> {
        const snap = await this.client.createSession(sceneArchive);
        this.fold(snap);
        const scene = await this.client.getScene(snap.session_id);
        this.view.loadScene(scene);
    }

    /** Rebuild the mirror from the server (page-reload path). */
    async reloadFromServer(sessionId: string): Promise<void> {
        this.state = initialViewState();
        this.currentJoints = null;
        const snap = await this.client.getSession(sessionId);
        this.fold(snap);
        const scene = await this.client.getScene(sessionId);
        this.view.loadScene(scene);
        this.state = { ...this.state, mode: snap.mode };
    }

    private get sid(): string {
        if (!this.state.sessionId) {
            throw new Error('no session');
        }
        return this.state.sessionId;
    }

    async anchor(point: Vec3): Promise<void> {
        try {
            await this.client.anchor(this.sid, point);
            this.fold(await this.client.getSession(this.sid));
            this.view.showToast('info', 'robot anchored');
        } catch (err) {
            throw this.reportError(err);
        }
    }

    async setMode(mode: Mode): Promise<void> {
        try {
            const snap = await this.client.setMode(this.sid, mode);
            this.state = { ...this.state, mode };
            this.fold(snap);
        } catch (err) {
            throw this.reportError(err);
        }
    }

    /**
     * Pointing mode: a click resolved to a world point (null when the pick
     * ray hit no geometry). Submits, renders the reachability verdict inline,
     * and stages the motion preview on success.
     */
    async pickPoint(point: Vec3 | null): Promise<string | null> {
        if (point === null) {
            this.view.showToast('info', 'no geometry under cursor');
            return null;
        }
        const markerId = `kp-${markerCounter++}`;
        this.state = addMarker(this.state, { id: markerId, point, status: 'pending' });
        this.view.upsertMarker(markerId, point, 'pending');
        try {
            const resp = await this.client.submitKeypoint(this.sid, {
                point, gripper: this.gripper,
            });
            this.state = setMarkerStatus(this.state, markerId, 'ok');
            this.view.upsertMarker(markerId, point, 'ok');
            this.state = stagePreview(this.state, resp.preview_id, this.currentJoints);
            if (resp.collision_count > 0) {
                this.view.showToast('info',
                    `path collides at ${resp.collision_count} samples; review the preview`);
            }
            return resp.preview_id;
        } catch (err) {
            this.state = setMarkerStatus(this.state, markerId, 'unreachable');
            this.view.upsertMarker(markerId, point, 'unreachable');
            this.reportError(err);
            return null;
        }
    }

    /** GUI mode: debounced live feasibility while the gizmo drags. */
    gizmoMoved(pose: Pose, debounceMs = 150): void {
        if (this.gizmoTimer !== null) {
            clearTimeout(this.gizmoTimer);
        }
        this.gizmoTimer = setTimeout(() => {
            this.client.ikCheck(this.sid, pose)
                .then((r) => this.view.setFeasibility(r.reachable))
                .catch(() => this.view.setFeasibility(null));
        }, debounceMs);
    }

    /** GUI mode: gizmo released, submit the full pose. */
    async submitPose(pose: Pose): Promise<string | null> {
        try {
            const resp = await this.client.submitKeypoint(this.sid, {
                pose, gripper: this.gripper,
            });
            this.state = stagePreview(this.state, resp.preview_id, this.currentJoints);
            return resp.preview_id;
        } catch (err) {
            this.reportError(err);
            return null;
        }
    }

    /** Kinesthetic mode is replay-only: feed a recorded stream back in. */
    async replayHandStream(ndjson: string): Promise<string | null> {
        try {
            const resp = await this.client.streamHandFrames(this.sid, ndjson);
            this.state = stagePreview(this.state, resp.preview_id, this.currentJoints);
            return resp.preview_id;
        } catch (err) {
            this.reportError(err);
            return null;
        }
    }

    /** Stream and animate the pending preview; collided samples highlighted. */
    async playPendingPreview(): Promise<PreviewSample[]> {
        const previewId = this.state.pendingPreviewId;
        if (!previewId) {
            throw new Error('no pending preview');
        }
        const samples = await this.client.streamPreview(this.sid, previewId);
        this.state = {
            ...this.state,
            collisionHighlights: samples.filter((s) => s.collided).map((s) => s.index),
        };
        await this.view.playPreview(samples);
        return samples;
    }

    async acceptPreview(): Promise<void> {
        const previewId = this.state.pendingPreviewId;
        if (!previewId) {
            throw new Error('no pending preview');
        }
        try {
            const snap = await this.client.acceptPreview(this.sid, previewId);
            this.state = clearPreview(this.state);
            this.fold(snap);
        } catch (err) {
            throw this.reportError(err);
        }
    }

    async discardPreview(): Promise<void> {
        const previewId = this.state.pendingPreviewId;
        if (!previewId) {
            throw new Error('no pending preview');
        }
        const restore = this.state.prePreviewJoints;
        try {
            const snap = await this.client.discardPreview(this.sid, previewId);
            this.state = clearPreview(this.state);
            this.fold(snap);
            if (restore) {
                this.view.setRobotJoints(restore);  // robot returns to pre-preview pose
            }
        } catch (err) {
            throw this.reportError(err);
        }
    }

    async finalize(languageGoal: string) {
        try {
            const result = await this.client.finalize(this.sid, languageGoal);
            this.fold(await this.client.getSession(this.sid));
            this.view.showToast('info',
                `finalized: ${result.peract_samples} samples from ${result.keyframe_count} keyframes`);
            return result;
        } catch (err) {
            throw this.reportError(err);
        }
    }
}
