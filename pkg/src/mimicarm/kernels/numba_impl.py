"""numba @njit kernel implementations (default backend).

Algorithmically identical to :mod:`mimicarm.kernels.numpy_impl`; loops instead
of vectorization, nogil so per-frame stages can run under a thread pool.
"""
from __future__ import annotations

import math

import numpy as np
from numba import njit

BACKEND_NAME = "numba"

_JIT = dict(cache=True, nogil=True)


@njit(**_JIT)
def depth_to_points(depth, fx, fy, cx, cy, pose, stride=1):
    h, w = depth.shape
    n = 0
    for v in range(0, h, stride):
        for u in range(0, w, stride):
            if np.isfinite(depth[v, u]):
                n += 1
    pts = np.empty((n, 3))
    pix = np.empty(n, dtype=np.int64)
    r00, r01, r02 = pose[0, 0], pose[0, 1], pose[0, 2]
    r10, r11, r12 = pose[1, 0], pose[1, 1], pose[1, 2]
    r20, r21, r22 = pose[2, 0], pose[2, 1], pose[2, 2]
    tx, ty, tz = pose[0, 3], pose[1, 3], pose[2, 3]
    k = 0
    for v in range(0, h, stride):
        for u in range(0, w, stride):
            z = float(depth[v, u])
            if not np.isfinite(z):
                continue
            x = (u - cx) * z / fx
            y = (v - cy) * z / fy
            pts[k, 0] = r00 * x + r01 * y + r02 * z + tx
            pts[k, 1] = r10 * x + r11 * y + r12 * z + ty
            pts[k, 2] = r20 * x + r21 * y + r22 * z + tz
            pix[k] = v * w + u
            k += 1
    return pts, pix


@njit(**_JIT)
def voxel_accumulate(points, colors, lo, res, nx, ny, nz):
    n = nx * ny * nz
    counts = np.zeros(n, dtype=np.int64)
    color_sums = np.zeros((n, 3), dtype=np.int64)
    has_color = colors.shape[0] > 0
    for p in range(points.shape[0]):
        ix = int(math.floor((points[p, 0] - lo[0]) / res))
        iy = int(math.floor((points[p, 1] - lo[1]) / res))
        iz = int(math.floor((points[p, 2] - lo[2]) / res))
        if 0 <= ix < nx and 0 <= iy < ny and 0 <= iz < nz:
            flat = (ix * ny + iy) * nz + iz
            counts[flat] += 1
            if has_color:
                color_sums[flat, 0] += colors[p, 0]
                color_sums[flat, 1] += colors[p, 1]
                color_sums[flat, 2] += colors[p, 2]
    return counts, color_sums


@njit(**_JIT)
def sphere_voxel_contacts(centers, radii, occ, lo, res):
    nx, ny, nz = occ.shape
    half_diag = 0.5 * res * math.sqrt(3.0)
    # pass 1: count; pass 2: fill
    n_contacts = 0
    for s in range(centers.shape[0]):
        thr = radii[s] + half_diag
        ix0 = max(0, int(math.floor((centers[s, 0] - thr - lo[0]) / res)))
        ix1 = min(nx - 1, int(math.floor((centers[s, 0] + thr - lo[0]) / res)))
        iy0 = max(0, int(math.floor((centers[s, 1] - thr - lo[1]) / res)))
        iy1 = min(ny - 1, int(math.floor((centers[s, 1] + thr - lo[1]) / res)))
        iz0 = max(0, int(math.floor((centers[s, 2] - thr - lo[2]) / res)))
        iz1 = min(nz - 1, int(math.floor((centers[s, 2] + thr - lo[2]) / res)))
        for ix in range(ix0, ix1 + 1):
            for iy in range(iy0, iy1 + 1):
                for iz in range(iz0, iz1 + 1):
                    if not occ[ix, iy, iz]:
                        continue
                    dx = lo[0] + (ix + 0.5) * res - centers[s, 0]
                    dy = lo[1] + (iy + 0.5) * res - centers[s, 1]
                    dz = lo[2] + (iz + 0.5) * res - centers[s, 2]
                    if math.sqrt(dx * dx + dy * dy + dz * dz) < thr:
                        n_contacts += 1
    sphere_idx = np.empty(n_contacts, dtype=np.int64)
    vox_ijk = np.empty((n_contacts, 3), dtype=np.int64)
    penetration = np.empty(n_contacts)
    k = 0
    for s in range(centers.shape[0]):
        thr = radii[s] + half_diag
        ix0 = max(0, int(math.floor((centers[s, 0] - thr - lo[0]) / res)))
        ix1 = min(nx - 1, int(math.floor((centers[s, 0] + thr - lo[0]) / res)))
        iy0 = max(0, int(math.floor((centers[s, 1] - thr - lo[1]) / res)))
        iy1 = min(ny - 1, int(math.floor((centers[s, 1] + thr - lo[1]) / res)))
        iz0 = max(0, int(math.floor((centers[s, 2] - thr - lo[2]) / res)))
        iz1 = min(nz - 1, int(math.floor((centers[s, 2] + thr - lo[2]) / res)))
        for ix in range(ix0, ix1 + 1):
            for iy in range(iy0, iy1 + 1):
                for iz in range(iz0, iz1 + 1):
                    if not occ[ix, iy, iz]:
                        continue
                    dx = lo[0] + (ix + 0.5) * res - centers[s, 0]
                    dy = lo[1] + (iy + 0.5) * res - centers[s, 1]
                    dz = lo[2] + (iz + 0.5) * res - centers[s, 2]
                    d = math.sqrt(dx * dx + dy * dy + dz * dz)
                    if d < thr:
                        sphere_idx[k] = s
                        vox_ijk[k, 0] = ix
                        vox_ijk[k, 1] = iy
                        vox_ijk[k, 2] = iz
                        penetration[k] = thr - d
                        k += 1
    return sphere_idx, vox_ijk, penetration


@njit(**_JIT)
def _axis_angle_mat4(axis, angle, out):
    x, y, z = axis[0], axis[1], axis[2]
    c = math.cos(angle)
    s = math.sin(angle)
    t = 1.0 - c
    out[0, 0] = t * x * x + c
    out[0, 1] = t * x * y - s * z
    out[0, 2] = t * x * z + s * y
    out[1, 0] = t * x * y + s * z
    out[1, 1] = t * y * y + c
    out[1, 2] = t * y * z - s * x
    out[2, 0] = t * x * z - s * y
    out[2, 1] = t * y * z + s * x
    out[2, 2] = t * z * z + c
    out[0, 3] = 0.0
    out[1, 3] = 0.0
    out[2, 3] = 0.0
    out[3, 0] = 0.0
    out[3, 1] = 0.0
    out[3, 2] = 0.0
    out[3, 3] = 1.0


@njit(**_JIT)
def fk_mats(origins, axes, is_rev, base, tcp_off, angles):
    n_links = origins.shape[0]
    link_mats = np.empty((n_links, 4, 4))
    m = base.copy()
    rot = np.empty((4, 4))
    k = 0
    for i in range(n_links):
        m = m @ origins[i]
        if is_rev[i]:
            _axis_angle_mat4(axes[i], angles[k], rot)
            m = m @ rot
            k += 1
        link_mats[i] = m
    return link_mats, m @ tcp_off


@njit(**_JIT)
def _rotvec_from_mat3(m, out):
    cos_a = (m[0, 0] + m[1, 1] + m[2, 2] - 1.0) * 0.5
    cos_a = max(-1.0, min(1.0, cos_a))
    angle = math.acos(cos_a)
    vx = 0.5 * (m[2, 1] - m[1, 2])
    vy = 0.5 * (m[0, 2] - m[2, 0])
    vz = 0.5 * (m[1, 0] - m[0, 1])
    if angle < 1e-10:
        out[0] = vx
        out[1] = vy
        out[2] = vz
        return
    if angle > math.pi - 1e-6:
        d0, d1, d2 = m[0, 0], m[1, 1], m[2, 2]
        if d0 >= d1 and d0 >= d2:
            k, i, j = 0, 1, 2
        elif d1 >= d2:
            k, i, j = 1, 0, 2
        else:
            k, i, j = 2, 0, 1
        a = np.zeros(3)
        a[k] = math.sqrt(max(0.0, (m[k, k] + 1.0) * 0.5))
        a[i] = (m[k, i] + m[i, k]) / (4.0 * a[k])
        a[j] = (m[k, j] + m[j, k]) / (4.0 * a[k])
        if a[0] * vx + a[1] * vy + a[2] * vz < 0.0:
            a = -a
        norm = math.sqrt(a[0] * a[0] + a[1] * a[1] + a[2] * a[2])
        out[0] = a[0] / norm * angle
        out[1] = a[1] / norm * angle
        out[2] = a[2] / norm * angle
        return
    f = angle / math.sin(angle)
    out[0] = vx * f
    out[1] = vy * f
    out[2] = vz * f


@njit(**_JIT)
def jacobian_mats(origins, axes, is_rev, link_mats, tcp):
    n_rev = 0
    for i in range(is_rev.shape[0]):
        if is_rev[i]:
            n_rev += 1
    jac = np.zeros((6, n_rev))
    px, py, pz = tcp[0, 3], tcp[1, 3], tcp[2, 3]
    k = 0
    for i in range(origins.shape[0]):
        if not is_rev[i]:
            continue
        r = link_mats[i]
        ax = r[0, 0] * axes[i, 0] + r[0, 1] * axes[i, 1] + r[0, 2] * axes[i, 2]
        ay = r[1, 0] * axes[i, 0] + r[1, 1] * axes[i, 1] + r[1, 2] * axes[i, 2]
        az = r[2, 0] * axes[i, 0] + r[2, 1] * axes[i, 1] + r[2, 2] * axes[i, 2]
        lx = px - r[0, 3]
        ly = py - r[1, 3]
        lz = pz - r[2, 3]
        jac[0, k] = ay * lz - az * ly
        jac[1, k] = az * lx - ax * lz
        jac[2, k] = ax * ly - ay * lx
        jac[3, k] = ax
        jac[4, k] = ay
        jac[5, k] = az
        k += 1
    return jac


@njit(**_JIT)
def ik_dls(origins, axes, is_rev, base, tcp_off, lower, upper, target, seed,
           pos_tol, rot_tol, max_iters, damping, max_step_pos, max_step_rot):
    n = seed.shape[0]
    q = np.empty(n)
    for j in range(n):
        q[j] = min(max(seed[j], lower[j]), upper[j])
    lam2 = damping * damping
    e = np.empty(6)
    e_rot = np.empty(3)
    rel = np.empty((3, 3))
    it = 0
    for it in range(1, max_iters + 1):
        link_mats, tcp = fk_mats(origins, axes, is_rev, base, tcp_off, q)
        ex = target[0, 3] - tcp[0, 3]
        ey = target[1, 3] - tcp[1, 3]
        ez = target[2, 3] - tcp[2, 3]
        for r in range(3):
            for c in range(3):
                rel[r, c] = (target[r, 0] * tcp[c, 0] + target[r, 1] * tcp[c, 1]
                             + target[r, 2] * tcp[c, 2])
        _rotvec_from_mat3(rel, e_rot)
        pos_err = math.sqrt(ex * ex + ey * ey + ez * ez)
        rot_err = math.sqrt(e_rot[0] ** 2 + e_rot[1] ** 2 + e_rot[2] ** 2)
        if pos_err <= pos_tol and rot_err <= rot_tol:
            return q, it, pos_err, rot_err, True
        sp = 1.0 if pos_err <= max_step_pos else max_step_pos / pos_err
        sr = 1.0 if rot_err <= max_step_rot else max_step_rot / rot_err
        e[0] = ex * sp
        e[1] = ey * sp
        e[2] = ez * sp
        e[3] = e_rot[0] * sr
        e[4] = e_rot[1] * sr
        e[5] = e_rot[2] * sr
        jac = jacobian_mats(origins, axes, is_rev, link_mats, tcp)
        a = jac @ jac.T
        for d in range(6):
            a[d, d] += lam2
        dq = jac.T @ np.linalg.solve(a, e)
        stalled = True
        for j in range(n):
            qn = min(max(q[j] + dq[j], lower[j]), upper[j])
            if abs(qn - q[j]) >= 1e-13:
                stalled = False
            q[j] = qn
        if stalled:
            break
    _, tcp = fk_mats(origins, axes, is_rev, base, tcp_off, q)
    ex = target[0, 3] - tcp[0, 3]
    ey = target[1, 3] - tcp[1, 3]
    ez = target[2, 3] - tcp[2, 3]
    for r in range(3):
        for c in range(3):
            rel[r, c] = (target[r, 0] * tcp[c, 0] + target[r, 1] * tcp[c, 1]
                         + target[r, 2] * tcp[c, 2])
    _rotvec_from_mat3(rel, e_rot)
    pos_err = math.sqrt(ex * ex + ey * ey + ez * ez)
    rot_err = math.sqrt(e_rot[0] ** 2 + e_rot[1] ** 2 + e_rot[2] ** 2)
    return q, it, pos_err, rot_err, pos_err <= pos_tol and rot_err <= rot_tol


def warmup():
    """Trigger JIT compilation of every kernel on tiny inputs."""
    depth = np.full((2, 2), 1.0, dtype=np.float32)
    depth_to_points(depth, 1.0, 1.0, 0.5, 0.5, np.eye(4), 1)
    pts = np.zeros((1, 3))
    voxel_accumulate(pts, np.zeros((1, 3), dtype=np.uint8), np.zeros(3) - 1.0, 1.0, 2, 2, 2)
    occ = np.zeros((2, 2, 2), dtype=np.bool_)
    occ[0, 0, 0] = True
    sphere_voxel_contacts(np.zeros((1, 3)), np.ones(1), occ, np.zeros(3) - 1.0, 1.0)
    origins = np.stack([np.eye(4), np.eye(4)])
    axes = np.tile(np.array([0.0, 0.0, 1.0]), (2, 1))
    is_rev = np.ones(2, dtype=np.uint8)
    link_mats, tcp = fk_mats(origins, axes, is_rev, np.eye(4), np.eye(4), np.zeros(2))
    jacobian_mats(origins, axes, is_rev, link_mats, tcp)
    ik_dls(origins, axes, is_rev, np.eye(4), np.eye(4),
           np.full(2, -3.0), np.full(2, 3.0), np.eye(4), np.zeros(2),
           1e-4, 1e-3, 5, 0.05, 0.1, 0.5)
