// Browser bootstrap: ?archive=<name> picks the scene, ?session=<id> reattaches
// to an existing one (the server is the source of truth on reload).

import { ServiceClient } from './api.js';
import { AppController } from './controller.js';
import { buildPanel, renderStatus } from './panel.js';
import { WebGlView } from './viewer.js';

const params = new URLSearchParams(window.location.search);
const archive = params.get('archive') ?? 'session';
const existing = params.get('session');

const client = new ServiceClient('');
const container = document.getElementById('scene')!;
let controller: AppController;
const view = new WebGlView(container, client, () => controller?.state.sessionId ?? null);
controller = new AppController(client, view);

let lastPick: [number, number, number] = [0, 0, 0];
view.onPick = (point) => {
    if (controller.state.mode === 'pointing') {
        void controller.pickPoint(point).then(() => refresh());
    }
    if (point) {
        lastPick = point;
    }
};
view.onGizmoMove = (pose) => controller.gizmoMoved(pose);
view.onGizmoRelease = (pose) => {
    if (controller.state.mode === 'gui' && !controller.state.pendingPreviewId) {
        void controller.submitPose(pose).then(() => refresh());
    }
};

const panel = buildPanel(document, controller, () => lastPick);
document.getElementById('panel-slot')!.appendChild(panel.root);
panel.modeSelect.addEventListener('change', () => {
    view.enableGizmo(panel.modeSelect.value === 'gui');
});

function refresh(): void {
    renderStatus(controller, panel);
    const url = new URL(window.location.href);
    if (controller.state.sessionId) {
        url.searchParams.set('session', controller.state.sessionId);
        window.history.replaceState(null, '', url.toString());
    }
}

(existing
    ? controller.reloadFromServer(existing)
    : controller.start(archive)
).then(refresh).catch((err) => view.showToast('error', String(err)));
