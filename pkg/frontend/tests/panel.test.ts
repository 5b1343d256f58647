// @vitest-environment jsdom
// Panel DOM behavior driven through real click events against the live service.

import { afterAll, beforeAll, describe, expect, it } from 'vitest';

import { ServiceClient } from '../src/api.js';
import { AppController } from '../src/controller.js';
import { buildPanel, renderStatus } from '../src/panel.js';
import { RecordingView } from './fakes.js';
import { startHarness, type Harness } from './harness.js';

let harness: Harness;

beforeAll(async () => {
    harness = await startHarness();
});

afterAll(() => {
    harness?.stop();
});

function flush(ms = 700): Promise<void> {
    return new Promise((resolve) => setTimeout(resolve, ms));
}

describe('control panel', () => {
    it('drives the session through button clicks', async () => {
        const client = new ServiceClient(harness.baseUrl);
        const view = new RecordingView();
        const app = new AppController(client, view);
        await app.start(harness.archiveName);

        const els = buildPanel(document, app, () => [0.0, 0.0, 0.001]);
        document.body.appendChild(els.root);
        renderStatus(app, els);
        expect(els.status.textContent).toContain('scene_loaded');
        expect(els.finalizeButton.disabled).toBe(true);

        els.anchorButton.dispatchEvent(new MouseEvent('click', { bubbles: true }));
        await flush(3000);
        renderStatus(app, els);
        expect(els.status.textContent).toContain('anchored');

        els.modeSelect.value = 'pointing';
        els.modeSelect.dispatchEvent(new Event('change', { bubbles: true }));
        await flush();
        renderStatus(app, els);
        expect(els.status.textContent).toContain('collecting');
        expect(els.finalizeButton.disabled).toBe(false);

        els.gripperButton.dispatchEvent(new MouseEvent('click', { bubbles: true }));
        expect(app.gripper).toBe('closed');
        expect(els.gripperButton.textContent).toContain('closed');

        // simulate a pick, then accept through the button
        await app.pickPoint([0.38, 0.05, 0.0]);
        renderStatus(app, els);
        expect(els.acceptButton.disabled).toBe(false);
        expect(els.status.textContent).toContain('preview pending');
        els.acceptButton.dispatchEvent(new MouseEvent('click', { bubbles: true }));
        await flush(3000);
        renderStatus(app, els);
        expect(app.state.pendingPreviewId).toBeNull();
        expect(els.acceptButton.disabled).toBe(true);

        els.goalInput.value = 'push the block';
        els.finalizeButton.dispatchEvent(new MouseEvent('click', { bubbles: true }));
        await flush(8000);
        renderStatus(app, els);
        expect(els.status.textContent).toContain('finalized');
    });
});
