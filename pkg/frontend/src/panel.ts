// Control panel DOM: buttons and status line wired to the controller.
// Kept renderer-free so jsdom tests can drive it like a browser would.

import type { Gripper, Mode } from './api.js';
import type { AppController } from './controller.js';

export interface PanelElements {
    root: HTMLElement;
    status: HTMLElement;
    modeSelect: HTMLSelectElement;
    gripperButton: HTMLButtonElement;
    anchorButton: HTMLButtonElement;
    playButton: HTMLButtonElement;
    acceptButton: HTMLButtonElement;
    discardButton: HTMLButtonElement;
    goalInput: HTMLInputElement;
    finalizeButton: HTMLButtonElement;
}

export function renderStatus(controller: AppController, els: PanelElements): void {
    const s = controller.state;
    els.status.textContent =
        `session ${s.sessionId ?? '-'} | state ${s.serverState} | mode ${s.mode ?? '-'}` +
        ` | gripper ${controller.gripper}` +
        (s.pendingPreviewId ? ' | preview pending' : '') +
        (s.lastError ? ` | last error: ${s.lastError}` : '');
    const collecting = s.serverState === 'collecting';
    els.acceptButton.disabled = !s.pendingPreviewId;
    els.discardButton.disabled = !s.pendingPreviewId;
    els.playButton.disabled = !s.pendingPreviewId;
    els.finalizeButton.disabled = !collecting;
}

export function buildPanel(doc: Document, controller: AppController,
                           anchorPoint: () => [number, number, number]): PanelElements {
    const root = doc.createElement('div');
    root.className = 'panel';

    const status = doc.createElement('div');
    status.id = 'status';
    root.appendChild(status);

    const anchorButton = doc.createElement('button');
    anchorButton.id = 'anchor';
    anchorButton.textContent = 'Anchor robot';
    root.appendChild(anchorButton);

    const modeSelect = doc.createElement('select');
    modeSelect.id = 'mode';
    for (const mode of ['pointing', 'gui', 'kinesthetic']) {
        const opt = doc.createElement('option');
        opt.value = mode;
        opt.textContent = mode;
        modeSelect.appendChild(opt);
    }
    root.appendChild(modeSelect);

    const gripperButton = doc.createElement('button');
    gripperButton.id = 'gripper';
    gripperButton.textContent = 'gripper: open';
    root.appendChild(gripperButton);

    const playButton = doc.createElement('button');
    playButton.id = 'play';
    playButton.textContent = 'Play preview';
    root.appendChild(playButton);

    const acceptButton = doc.createElement('button');
    acceptButton.id = 'accept';
    acceptButton.textContent = 'Accept';
    root.appendChild(acceptButton);

    const discardButton = doc.createElement('button');
    discardButton.id = 'discard';
    discardButton.textContent = 'Discard';
    root.appendChild(discardButton);

    const goalInput = doc.createElement('input');
    goalInput.id = 'goal';
    goalInput.placeholder = 'language goal';
    root.appendChild(goalInput);

    const finalizeButton = doc.createElement('button');
    finalizeButton.id = 'finalize';
    finalizeButton.textContent = 'Finalize';
    root.appendChild(finalizeButton);

    const els: PanelElements = {
        root, status, modeSelect, gripperButton, anchorButton, playButton,
        acceptButton, discardButton, goalInput, finalizeButton,
    };

    anchorButton.addEventListener('click', () => {
        void controller.anchor(anchorPoint()).then(() => renderStatus(controller, els));
    });
    modeSelect.addEventListener('change', () => {
        void controller.setMode(modeSelect.value as Mode)
            .then(() => renderStatus(controller, els));
    });
    gripperButton.addEventListener('click', () => {
        controller.gripper = (controller.gripper === 'open' ? 'closed' : 'open') as Gripper;
        gripperButton.textContent = `gripper: ${controller.gripper}`;
        renderStatus(controller, els);
    });
    playButton.addEventListener('click', () => {
        void controller.playPendingPreview().then(() => renderStatus(controller, els));
    });
    acceptButton.addEventListener('click', () => {
        void controller.acceptPreview().then(() => renderStatus(controller, els));
    });
    discardButton.addEventListener('click', () => {
        void controller.discardPreview().then(() => renderStatus(controller, els));
    });
    finalizeButton.addEventListener('click', () => {
        void controller.finalize(goalInput.value || 'demonstration')
            .then(() => renderStatus(controller, els));
    });
    return els;
}
