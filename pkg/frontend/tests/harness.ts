// Spawns the real Python service on a scratch data root with a freshly
// generated synthetic session; the UI tests run against it end to end.

import { execFileSync, spawn, type ChildProcess } from 'node:child_process';
import { mkdtempSync } from 'node:fs';
import { tmpdir } from 'node:os';
import { join } from 'node:path';

export interface Harness {
    baseUrl: string;
    dataRoot: string;
    archiveName: string;
    exportRoot: string;
    stop(): void;
    validate(path: string): { ok: boolean; output: string };
}

const PYTHON = process.env.MIMICARM_PYTHON ?? 'python3';

export async function startHarness(): Promise<Harness> {
    const dataRoot = mkdtempSync(join(tmpdir(), 'mimicarm-ui-'));
    const archiveName = 'scene';
    execFileSync(PYTHON, ['-m', 'mimicarm.cli', 'gen-synthetic',
        '--out', join(dataRoot, archiveName),
        '--frames', '45', '--width', '320', '--height', '240'],
        { stdio: 'pipe' });

    const port = 8700 + Math.floor(Math.random() * 800);
    const proc: ChildProcess = spawn(PYTHON, ['-m', 'mimicarm.cli', 'serve',
        '--host', '127.0.0.1', '--port', String(port)], {
        env: { ...process.env, MIMICARM_DATA_ROOT: dataRoot },
        stdio: 'pipe',
    });
    let stderr = '';
    proc.stderr?.on('data', (chunk) => { stderr += String(chunk); });

    const baseUrl = `http://127.0.0.1:${port}`;
    const deadline = Date.now() + 120_000;
    for (;;) {
        try {
            const r = await fetch(`${baseUrl}/health`);
            if (r.ok) {
                break;
            }
        } catch {
            // not up yet
        }
        if (Date.now() > deadline) {
            proc.kill();
            throw new Error(`service did not come up on ${baseUrl}\n${stderr}`);
        }
        await new Promise((resolve) => setTimeout(resolve, 250));
    }
    return {
        baseUrl,
        dataRoot,
        archiveName,
        exportRoot: join(dataRoot, 'exports'),
        stop() {
            proc.kill('SIGTERM');
        },
        validate(path: string) {
            try {
                const output = execFileSync(PYTHON,
                    ['-m', 'mimicarm.cli', 'validate', path],
                    { encoding: 'utf-8' });
                return { ok: true, output };
            } catch (err) {
                const e = err as { stdout?: string; stderr?: string };
                return { ok: false, output: `${e.stdout ?? ''}${e.stderr ?? ''}` };
            }
        },
    };
}
