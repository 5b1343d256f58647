// WebGL scene: point cloud, sphere-model robot, keypoint markers, preview
// animation, and click picking. Renders the exact collision geometry the
// engine checks, so what you see is what collides.

import * as THREE from 'three';
import { OrbitControls } from 'three/examples/jsm/controls/OrbitControls.js';
import { TransformControls } from 'three/examples/jsm/controls/TransformControls.js';
import type { Pose, PreviewSample, RobotModel, ScenePayload, ServiceClient, Vec3 } from './api.js';
import type { SceneView } from './controller.js';

const MARKER_COLORS = { pending: 0xaaaa33, ok: 0x33bb44, unreachable: 0xcc3333 };
const LINK_PALETTE = [0xe47424, 0x4882c7, 0x5aae61, 0xc44e52, 0x8167b1,
    0x937860, 0xd28bb8, 0x8c8c8c, 0xdcb43c];
const COLLIDED_TINT = new THREE.Color(0xff2222);

export class WebGlView implements SceneView {
    private scene = new THREE.Scene();
    private camera: THREE.PerspectiveCamera;
    private renderer: THREE.WebGLRenderer;
    private controls: OrbitControls;
    private raycaster = new THREE.Raycaster();
    private cloud: THREE.Points | null = null;
    private robot: RobotModel | null = null;
    private sphereMeshes: THREE.Mesh[] = [];
    private markers = new Map<string, THREE.Mesh>();
    private toastEl: HTMLElement;
    private feasibilityEl: HTMLElement;
    private previewPlaying = false;
    private gizmo: TransformControls;
    private gizmoTarget = new THREE.Object3D();

    constructor(container: HTMLElement, private client: ServiceClient,
                private sessionId: () => string | null) {
        this.camera = new THREE.PerspectiveCamera(
            50, container.clientWidth / container.clientHeight, 0.01, 50);
        this.camera.position.set(1.6, -1.2, 1.1);
        this.camera.up.set(0, 0, 1);
        this.renderer = new THREE.WebGLRenderer({ antialias: true });
        this.renderer.setSize(container.clientWidth, container.clientHeight);
        container.appendChild(this.renderer.domElement);
        this.controls = new OrbitControls(this.camera, this.renderer.domElement);
        this.controls.target.set(0.3, 0.0, 0.15);
        this.scene.background = new THREE.Color(0x10141a);
        this.scene.add(new THREE.AmbientLight(0xffffff, 0.7));
        const sun = new THREE.DirectionalLight(0xffffff, 1.2);
        sun.position.set(1, -2, 3);
        this.scene.add(sun);
        this.scene.add(new THREE.AxesHelper(0.25));

        this.toastEl = document.createElement('div');
        this.toastEl.className = 'toast';
        container.appendChild(this.toastEl);
        this.feasibilityEl = document.createElement('div');
        this.feasibilityEl.className = 'feasibility';
        container.appendChild(this.feasibilityEl);

        // 6-DoF pose entry for gui mode; hidden until enableGizmo(true)
        this.gizmoTarget.position.set(0.4, 0.0, 0.3);
        this.gizmoTarget.quaternion.set(1, 0, 0, 0);  // x,y,z,w: z-down grasp
        this.scene.add(this.gizmoTarget);
        this.gizmo = new TransformControls(this.camera, this.renderer.domElement);
        this.gizmo.attach(this.gizmoTarget);
        this.gizmo.addEventListener('dragging-changed', (ev) => {
            this.controls.enabled = !ev.value;
            if (!ev.value) {
                this.onGizmoRelease(this.gizmoPose());
            }
        });
        this.gizmo.addEventListener('objectChange', () => {
            this.onGizmoMove(this.gizmoPose());
        });
        this.scene.add(this.gizmo.getHelper());
        this.enableGizmo(false);

        this.renderer.domElement.addEventListener('click', (ev) => this.onClick(ev));
        const animate = () => {
            requestAnimationFrame(animate);
            this.controls.update();
            this.renderer.render(this.scene, this.camera);
        };
        animate();
    }

    /** Click handler: depth raycast against the rendered cloud. */
    onPick: (point: Vec3 | null) => void = () => {};
    /** Gizmo drag (debounce happens in the controller). */
    onGizmoMove: (pose: Pose) => void = () => {};
    /** Gizmo release: submit the posed keypoint. */
    onGizmoRelease: (pose: Pose) => void = () => {};

    enableGizmo(on: boolean): void {
        this.gizmo.enabled = on;
        this.gizmo.getHelper().visible = on;
        this.gizmoTarget.visible = on;
    }

    setGizmoMode(mode: 'translate' | 'rotate'): void {
        this.gizmo.setMode(mode);
    }

    private gizmoPose(): Pose {
        const q = this.gizmoTarget.quaternion;
        const p = this.gizmoTarget.position;
        return { quat_wxyz: [q.w, q.x, q.y, q.z], xyz: [p.x, p.y, p.z] };
    }

    private onClick(ev: MouseEvent): void {
        if (!this.cloud || this.previewPlaying) {
            return;
        }
        const rect = this.renderer.domElement.getBoundingClientRect();
        const ndc = new THREE.Vector2(
            ((ev.clientX - rect.left) / rect.width) * 2 - 1,
            -((ev.clientY - rect.top) / rect.height) * 2 + 1);
        this.raycaster.setFromCamera(ndc, this.camera);
        this.raycaster.params.Points = { threshold: 0.01 };
        const hits = this.raycaster.intersectObject(this.cloud);
        this.onPick(hits.length ? [hits[0].point.x, hits[0].point.y, hits[0].point.z] : null);
    }

    loadScene(scene: ScenePayload): void {
        if (this.cloud) {
            this.scene.remove(this.cloud);
        }
        const n = scene.points.length;
        const positions = new Float32Array(n * 3);
        const colors = new Float32Array(n * 3);
        for (let i = 0; i < n; i++) {
            positions.set(scene.points[i], i * 3);
            const c = scene.colors ? scene.colors[i] : [160, 160, 160];
            colors[i * 3] = c[0] / 255;
            colors[i * 3 + 1] = c[1] / 255;
            colors[i * 3 + 2] = c[2] / 255;
        }
        const geom = new THREE.BufferGeometry();
        geom.setAttribute('position', new THREE.BufferAttribute(positions, 3));
        geom.setAttribute('color', new THREE.BufferAttribute(colors, 3));
        this.cloud = new THREE.Points(geom, new THREE.PointsMaterial({
            size: 0.004, vertexColors: true,
        }));
        this.scene.add(this.cloud);
        this.robot = scene.robot;
        this.buildRobotMeshes(scene.robot);
    }

    private buildRobotMeshes(robot: RobotModel): void {
        for (const mesh of this.sphereMeshes) {
            this.scene.remove(mesh);
        }
        this.sphereMeshes = robot.spheres.map((s) => {
            const mesh = new THREE.Mesh(
                new THREE.SphereGeometry(s.radius, 16, 12),
                new THREE.MeshLambertMaterial({
                    color: LINK_PALETTE[s.link % LINK_PALETTE.length],
                }));
            mesh.visible = false;
            this.scene.add(mesh);
            return mesh;
        });
    }

    setRobotJoints(joints: number[]): void {
        const sid = this.sessionId();
        if (!sid) {
            return;
        }
        this.client.getRobotPose(sid, joints).then((pose) => {
            this.placeSpheres(pose.sphere_centers);
        }).catch(() => { /* pose preview is cosmetic; errors surface elsewhere */ });
    }

    private placeSpheres(centers: Vec3[], collided = false): void {
        centers.forEach((c, i) => {
            const mesh = this.sphereMeshes[i];
            if (!mesh) {
                return;
            }
            mesh.visible = true;
            mesh.position.set(c[0], c[1], c[2]);
            const mat = mesh.material as THREE.MeshLambertMaterial;
            if (collided) {
                mat.emissive = COLLIDED_TINT;
            } else {
                mat.emissive = new THREE.Color(0x000000);
            }
        });
    }

    upsertMarker(id: string, point: Vec3, status: 'pending' | 'ok' | 'unreachable'): void {
        let marker = this.markers.get(id);
        if (!marker) {
            marker = new THREE.Mesh(
                new THREE.SphereGeometry(0.012, 12, 8),
                new THREE.MeshBasicMaterial());
            this.markers.set(id, marker);
            this.scene.add(marker);
        }
        marker.position.set(point[0], point[1], point[2]);
        (marker.material as THREE.MeshBasicMaterial).color.setHex(MARKER_COLORS[status]);
    }

    /** Animate streamed joint samples in order; collided samples tint the arm. */
    async playPreview(samples: PreviewSample[]): Promise<void> {
        const sid = this.sessionId();
        if (!sid) {
            return;
        }
        this.previewPlaying = true;
        try {
            for (const sample of samples) {
                const pose = await this.client.getRobotPose(sid, sample.joints);
                this.placeSpheres(pose.sphere_centers, sample.collided);
                await new Promise((resolve) => setTimeout(resolve, 33));
            }
        } finally {
            this.previewPlaying = false;
        }
    }

    showToast(kind: 'info' | 'error', message: string): void {
        this.toastEl.textContent = message;
        this.toastEl.dataset.kind = kind;
        this.toastEl.classList.add('visible');
        setTimeout(() => this.toastEl.classList.remove('visible'), 4000);
    }

    setFeasibility(reachable: boolean | null): void {
        this.feasibilityEl.dataset.state =
            reachable === null ? 'unknown' : reachable ? 'ok' : 'blocked';
        this.feasibilityEl.textContent =
            reachable === null ? '' : reachable ? 'reachable' : 'out of reach';
    }
}
