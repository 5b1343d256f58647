// Typed client for the session service. Every session mutation in the app
// goes through here; the UI holds no authority of its own.

export type SessionState =
    'created' |
    'scene_loaded' |
    'anchored' |
    'collecting' |
    'finalized';

export type Mode = 'pointing' | 'gui' | 'kinesthetic';
export type Gripper = 'open' | 'closed';

export type Vec3 = [number, number, number];

export interface Pose {
    quat_wxyz: [number, number, number, number];
    xyz: Vec3;
}

export interface Snapshot {
    schema_version: number;
    session_id: string;
    state: SessionState;
    mode: Mode | null;
    base_pose: Pose | null;
    current_joints: number[] | null;
    gripper_open: boolean;
    keypoint_count: number;
    segment_count: number;
    pending_previews: string[];
    language_goal: string | null;
    state_hash: string;
}

export interface RobotModel {
    joint_count: number;
    home: number[];
    lower: number[];
    upper: number[];
    spheres: { link: number; center: Vec3; radius: number }[];
}

export interface ScenePayload {
    schema_version: number;
    points: Vec3[];
    colors: [number, number, number][] | null;
    plane: { normal: Vec3; offset: number; inlier_count: number } | null;
    robot: RobotModel;
}

export interface RobotPose {
    sphere_centers: Vec3[];
    sphere_radii: number[];
    sphere_links: number[];
    tcp: Pose;
}

export interface KeypointResponse {
    preview_id: string;
    reachable: boolean;
    sample_count: number;
    collision_count: number;
    keypoint_target: Pose;
}

export interface PreviewSample {
    index: number;
    t: number;
    joints: number[];
    gripper_open: boolean;
    collided: boolean;
    tcp: Pose;
}

export interface FinalizeResponse {
    state: SessionState;
    manifest: string;
    keyframe_count: number;
    peract_samples: number;
    imagebc_samples: number;
}

export interface IkCheck {
    reachable: boolean;
    pos_err: number | null;
    rot_err: number | null;
}

export class ServiceError extends Error {
    constructor(public status: number, public code: string, message: string) {
        super(message);
    }
}

async function unwrap<T>(resp: Response): Promise<T> {
    const body = await resp.json().catch(() => ({}));
    if (!resp.ok) {
        const err = (body as { error?: { code?: string; message?: string } }).error ?? {};
        throw new ServiceError(resp.status, err.code ?? 'unknown', err.message ?? resp.statusText);
    }
    return body as T;
}

export class ServiceClient {
    constructor(private baseUrl: string = '') {}

    private url(path: string): string {
        return `${this.baseUrl}${path}`;
    }

    async health(): Promise<{ status: string; sessions: number }> {
        return unwrap(await fetch(this.url('/health')));
    }

    async createSession(sceneArchive: string): Promise<Snapshot> {
        return unwrap(await fetch(this.url('/sessions'), {
            method: 'POST',
            headers: { 'content-type': 'application/json' },
            body: JSON.stringify({ scene_archive: sceneArchive }),
        }));
    }

    async getSession(id: string): Promise<Snapshot> {
        return unwrap(await fetch(this.url(`/sessions/${id}`)));
    }

    async getScene(id: string): Promise<ScenePayload> {
        return unwrap(await fetch(this.url(`/sessions/${id}/scene`)));
    }

    async getRobotPose(id: string, joints?: number[]): Promise<RobotPose> {
        const query = joints ? `?joints=${encodeURIComponent(JSON.stringify(joints))}` : '';
        return unwrap(await fetch(this.url(`/sessions/${id}/robot_pose${query}`)));
    }

    async anchor(id: string, point: Vec3): Promise<{ base_pose: Pose; state: SessionState }> {
        return unwrap(await fetch(this.url(`/sessions/${id}/anchor`), {
            method: 'POST',
            headers: { 'content-type': 'application/json' },
            body: JSON.stringify({ point }),
        }));
    }

    async setMode(id: string, mode: Mode): Promise<Snapshot> {
        return unwrap(await fetch(this.url(`/sessions/${id}/mode`), {
            method: 'POST',
            headers: { 'content-type': 'application/json' },
            body: JSON.stringify({ mode }),
        }));
    }

    async submitKeypoint(id: string, body: {
        point?: Vec3; pose?: Pose; gripper?: Gripper; dwell?: number;
    }): Promise<KeypointResponse> {
        return unwrap(await fetch(this.url(`/sessions/${id}/keypoints`), {
            method: 'POST',
            headers: { 'content-type': 'application/json' },
            body: JSON.stringify(body),
        }));
    }

    async ikCheck(id: string, pose: Pose): Promise<IkCheck> {
        return unwrap(await fetch(this.url(`/sessions/${id}/ik_check`), {
            method: 'POST',
            headers: { 'content-type': 'application/json' },
            body: JSON.stringify({ pose }),
        }));
    }

    /** Preview samples arrive as NDJSON, already in playback order. */
    async streamPreview(id: string, previewId: string): Promise<PreviewSample[]> {
        const resp = await fetch(this.url(`/sessions/${id}/previews/${previewId}`));
        if (!resp.ok) {
            await unwrap(resp);
        }
        const text = await resp.text();
        return text.split('\n').filter((l) => l.trim()).map((l) => JSON.parse(l));
    }

    async acceptPreview(id: string, previewId: string): Promise<Snapshot> {
        return unwrap(await fetch(this.url(`/sessions/${id}/previews/${previewId}/accept`), {
            method: 'POST',
        }));
    }

    async discardPreview(id: string, previewId: string): Promise<Snapshot> {
        return unwrap(await fetch(this.url(`/sessions/${id}/previews/${previewId}/discard`), {
            method: 'POST',
        }));
    }

    async streamHandFrames(id: string, ndjson: string): Promise<KeypointResponse> {
        return unwrap(await fetch(this.url(`/sessions/${id}/hand_frames`), {
            method: 'POST',
            headers: { 'content-type': 'application/x-ndjson' },
            body: ndjson,
        }));
    }

    async getHandKeypoints(id: string): Promise<string> {
        const resp = await fetch(this.url(`/sessions/${id}/hand_keypoints`));
        if (!resp.ok) {
            await unwrap(resp);
        }
        return resp.text();
    }

    async finalize(id: string, languageGoal: string, opts: {
        peract?: boolean; imagebc?: boolean; stride?: number;
    } = {}): Promise<FinalizeResponse> {
        return unwrap(await fetch(this.url(`/sessions/${id}/finalize`), {
            method: 'POST',
            headers: { 'content-type': 'application/json' },
            body: JSON.stringify({
                language_goal: languageGoal,
                peract: opts.peract ?? true,
                imagebc: opts.imagebc ?? false,
                stride: opts.stride ?? 1,
            }),
        }));
    }
}
