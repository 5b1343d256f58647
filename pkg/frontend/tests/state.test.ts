import { describe, expect, it } from 'vitest';

import type { Snapshot } from '../src/api.js';
import {
    addMarker, applySnapshot, assertModeConsistent, clearPreview,
    initialViewState, setMarkerStatus, stagePreview,
} from '../src/state.js';

function snapshot(overrides: Partial<Snapshot> = {}): Snapshot {
    return {
        schema_version: 1,
        session_id: 's1',
        state: 'collecting',
        mode: 'pointing',
        base_pose: null,
        current_joints: null,
        gripper_open: true,
        keypoint_count: 0,
        segment_count: 0,
        pending_previews: [],
        language_goal: null,
        state_hash: 'h',
        ...overrides,
    };
}

describe('view state', () => {
    it('folds server snapshots in', () => {
        const s = applySnapshot(initialViewState(), snapshot());
        expect(s.sessionId).toBe('s1');
        expect(s.serverState).toBe('collecting');
        expect(s.mode).toBe('pointing');
    });

    it('allows at most one pending preview', () => {
        let s = initialViewState();
        s = stagePreview(s, 'p1', [0, 0, 0]);
        expect(() => stagePreview(s, 'p2', null)).toThrow(/already pending/);
        s = clearPreview(s);
        expect(stagePreview(s, 'p2', null).pendingPreviewId).toBe('p2');
    });

    it('drops a pending preview the server no longer knows', () => {
        let s = stagePreview(initialViewState(), 'p1', [1, 2, 3]);
        s = applySnapshot(s, snapshot({ pending_previews: [] }));
        expect(s.pendingPreviewId).toBeNull();
        expect(s.prePreviewJoints).toBeNull();
    });

    it('keeps a pending preview the server confirms', () => {
        let s = stagePreview(initialViewState(), 'p1', null);
        s = applySnapshot(s, snapshot({ pending_previews: ['p1'] }));
        expect(s.pendingPreviewId).toBe('p1');
    });

    it('detects mode divergence', () => {
        const s = { ...initialViewState(), mode: 'gui' as const };
        expect(() => assertModeConsistent(s, snapshot({ mode: 'pointing' })))
            .toThrow(/diverged/);
        expect(() => assertModeConsistent(s, snapshot({ mode: 'gui' }))).not.toThrow();
    });

    it('tracks marker status transitions', () => {
        let s = addMarker(initialViewState(), { id: 'm1', point: [0, 0, 0], status: 'pending' });
        s = setMarkerStatus(s, 'm1', 'unreachable');
        expect(s.markers[0].status).toBe('unreachable');
    });
});
