// Recording stand-in for the WebGL view: same interface, no canvas.

import type { PreviewSample, ScenePayload, Vec3 } from '../src/api.js';
import type { SceneView } from '../src/controller.js';

export class RecordingView implements SceneView {
    scenes: ScenePayload[] = [];
    jointHistory: number[][] = [];
    markers = new Map<string, { point: Vec3; status: string }>();
    toasts: { kind: string; message: string }[] = [];
    playedIndexOrder: number[][] = [];
    feasibility: (boolean | null)[] = [];

    loadScene(scene: ScenePayload): void {
        this.scenes.push(scene);
    }

    setRobotJoints(joints: number[]): void {
        this.jointHistory.push([...joints]);
    }

    upsertMarker(id: string, point: Vec3, status: 'pending' | 'ok' | 'unreachable'): void {
        this.markers.set(id, { point, status });
    }

    async playPreview(samples: PreviewSample[]): Promise<void> {
        this.playedIndexOrder.push(samples.map((s) => s.index));
    }

    showToast(kind: 'info' | 'error', message: string): void {
        this.toasts.push({ kind, message });
    }

    setFeasibility(reachable: boolean | null): void {
        this.feasibility.push(reachable);
    }
}
