// View-side state. The server owns the session; this mirror only tracks what
// the renderer and panel need, and is rebuilt wholesale from a snapshot on
// page reload (statelessness invariant).

import type { Mode, SessionState, Snapshot, Vec3 } from './api.js';

export type MarkerStatus = 'pending' | 'ok' | 'unreachable';

export interface KeypointMarker {
    id: string;
    point: Vec3;
    status: MarkerStatus;
}

export interface OrbitParams {
    target: Vec3;
    radius: number;
    azimuth: number;
    elevation: number;
}

export interface ViewState {
    sessionId: string | null;
    serverState: SessionState | 'disconnected';
    mode: Mode | null;
    pendingPreviewId: string | null;
    prePreviewJoints: number[] | null;
    collisionHighlights: number[];
    markers: KeypointMarker[];
    orbit: OrbitParams;
    lastError: string | null;
    stateHash: string | null;
}

export function initialViewState(): ViewState {
    return {
        sessionId: null,
        serverState: 'disconnected',
        mode: null,
        pendingPreviewId: null,
        prePreviewJoints: null,
        collisionHighlights: [],
        markers: [],
        orbit: { target: [0.3, 0, 0.2], radius: 1.8, azimuth: 0.8, elevation: 0.5 },
        lastError: null,
        stateHash: null,
    };
}

/** Fold a server snapshot in; the server is always right. */
export function applySnapshot(state: ViewState, snap: Snapshot): ViewState {
    const next = { ...state };
    next.sessionId = snap.session_id;
    next.serverState = snap.state;
    next.mode = snap.mode;
    next.stateHash = snap.state_hash;
    if (next.pendingPreviewId && !snap.pending_previews.includes(next.pendingPreviewId)) {
        next.pendingPreviewId = null;
        next.prePreviewJoints = null;
        next.collisionHighlights = [];
    }
    return next;
}

/** Invariant: at most one pending preview in the view at a time. */
export function stagePreview(state: ViewState, previewId: string,
                             currentJoints: number[] | null): ViewState {
    if (state.pendingPreviewId !== null) {
        throw new Error('a preview is already pending; accept or discard it first');
    }
    return {
        ...state,
        pendingPreviewId: previewId,
        prePreviewJoints: currentJoints ? [...currentJoints] : null,
        collisionHighlights: [],
    };
}

export function clearPreview(state: ViewState): ViewState {
    return { ...state, pendingPreviewId: null, prePreviewJoints: null, collisionHighlights: [] };
}

export function addMarker(state: ViewState, marker: KeypointMarker): ViewState {
    return { ...state, markers: [...state.markers, marker] };
}

export function setMarkerStatus(state: ViewState, id: string, status: MarkerStatus): ViewState {
    return {
        ...state,
        markers: state.markers.map((m) => (m.id === id ? { ...m, status } : m)),
    };
}

/** Server mode and view mode must agree whenever both are known. */
export function assertModeConsistent(state: ViewState, snap: Snapshot): void {
    if (state.mode !== null && snap.mode !== null && state.mode !== snap.mode) {
        throw new Error(`view mode ${state.mode} diverged from server mode ${snap.mode}`);
    }
}
