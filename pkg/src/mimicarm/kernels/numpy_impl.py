"""Pure-numpy kernel implementations (fallback backend).

Same contracts as :mod:`mimicarm.kernels.numba_impl`; kept in lockstep so the
backend parity tests can compare outputs directly.
"""
from __future__ import annotations

import math

import numpy as np

BACKEND_NAME = "numpy"


def depth_to_points(depth, fx, fy, cx, cy, pose, stride=1):
    """Unproject every valid depth pixel to world coordinates.

    depth: (h, w) float32, NaN = invalid. pose: (4, 4) camera-to-world.
    Returns (points (N, 3) float64, pix_flat (N,) int64 row-major pixel index).
    """
    w = depth.shape[1]
    sub = depth[::stride, ::stride]
    vs, us = np.nonzero(np.isfinite(sub))
    z = sub[vs, us].astype(np.float64)
    u = (us * stride).astype(np.float64)
    v = (vs * stride).astype(np.float64)
    pts = np.empty((z.shape[0], 3))
    pts[:, 0] = (u - cx) * z / fx
    pts[:, 1] = (v - cy) * z / fy
    pts[:, 2] = z
    pts = pts @ pose[:3, :3].T + pose[:3, 3]
    pix = (vs.astype(np.int64) * stride) * w + us.astype(np.int64) * stride
    return pts, pix


def voxel_accumulate(points, colors, lo, res, nx, ny, nz):
    """Bin points into a dense grid; C-order flat counts plus RGB sums.

    colors may be an empty (0, 3) uint8 array to skip color accumulation.
    """
    idx = np.floor((points - lo) / res).astype(np.int64)
    ok = ((idx[:, 0] >= 0) & (idx[:, 0] < nx)
          & (idx[:, 1] >= 0) & (idx[:, 1] < ny)
          & (idx[:, 2] >= 0) & (idx[:, 2] < nz))
    idx = idx[ok]
    flat = (idx[:, 0] * ny + idx[:, 1]) * nz + idx[:, 2]
    n = nx * ny * nz
    counts = np.bincount(flat, minlength=n).astype(np.int64)
    color_sums = np.zeros((n, 3), dtype=np.int64)
    if colors.shape[0]:
        c = colors[ok]
        for ch in range(3):
            # float64 bincount sums are exact below 2**53
            color_sums[:, ch] = np.bincount(flat, weights=c[:, ch].astype(np.float64),
                                            minlength=n).astype(np.int64)
    return counts, color_sums


def sphere_voxel_contacts(centers, radii, occ, lo, res):
    """All (sphere, occupied voxel) pairs with center distance < r + half-diagonal.

    occ: (nx, ny, nz) bool. Returns (sphere_idx, vox_ijk (K, 3), penetration).
    """
    half_diag = 0.5 * res * math.sqrt(3.0)
    occ_ijk = np.argwhere(occ)  # C-order, matches the numba box scan ordering
    out_s, out_v, out_p = [], [], []
    if occ_ijk.shape[0]:
        vox_centers = lo + (occ_ijk + 0.5) * res
        for s in range(centers.shape[0]):
            thr = radii[s] + half_diag
            d = np.linalg.norm(vox_centers - centers[s], axis=1)
            hit = d < thr
            if hit.any():
                out_s.append(np.full(int(hit.sum()), s, dtype=np.int64))
                out_v.append(occ_ijk[hit])
                out_p.append(thr - d[hit])
    if not out_s:
        return (np.empty(0, dtype=np.int64), np.empty((0, 3), dtype=np.int64),
                np.empty(0))
    return np.concatenate(out_s), np.concatenate(out_v), np.concatenate(out_p)


def _axis_angle_mat(axis, angle):
    x, y, z = axis
    c = math.cos(angle)
    s = math.sin(angle)
    t = 1.0 - c
    return np.array([
        [t * x * x + c, t * x * y - s * z, t * x * z + s * y],
        [t * x * y + s * z, t * y * y + c, t * y * z - s * x],
        [t * x * z - s * y, t * y * z + s * x, t * z * z + c],
    ])


def fk_mats(origins, axes, is_rev, base, tcp_off, angles):
    """Compose the chain: world 4x4 per link frame plus the TCP pose."""
    n_links = origins.shape[0]
    link_mats = np.empty((n_links, 4, 4))
    m = base.copy()
    k = 0
    for i in range(n_links):
        m = m @ origins[i]
        if is_rev[i]:
            r = np.eye(4)
            r[:3, :3] = _axis_angle_mat(axes[i], angles[k])
            m = m @ r
            k += 1
        link_mats[i] = m
    return link_mats, m @ tcp_off


def _rotvec_from_mat3(m):
    cos_a = (m[0, 0] + m[1, 1] + m[2, 2] - 1.0) * 0.5
    cos_a = max(-1.0, min(1.0, cos_a))
    angle = math.acos(cos_a)
    vee = 0.5 * np.array([m[2, 1] - m[1, 2], m[0, 2] - m[2, 0], m[1, 0] - m[0, 1]])
    if angle < 1e-10:
        return vee
    if angle > math.pi - 1e-6:
        d = np.array([m[0, 0], m[1, 1], m[2, 2]])
        k = int(np.argmax(d))
        a = np.zeros(3)
        a[k] = math.sqrt(max(0.0, (d[k] + 1.0) * 0.5))
        i, j = [(1, 2), (0, 2), (0, 1)][k]
        a[i] = (m[k, i] + m[i, k]) / (4.0 * a[k])
        a[j] = (m[k, j] + m[j, k]) / (4.0 * a[k])
        if a @ vee < 0.0:
            a = -a
        return a / np.linalg.norm(a) * angle
    return vee * (angle / math.sin(angle))


def jacobian_mats(origins, axes, is_rev, link_mats, tcp):
    """Geometric Jacobian (6, R) about the TCP, world frame, from FK output."""
    n_rev = int(is_rev.sum())
    jac = np.zeros((6, n_rev))
    p_tcp = tcp[:3, 3]
    k = 0
    for i in range(origins.shape[0]):
        if is_rev[i]:
            axis_w = link_mats[i, :3, :3] @ axes[i]
            jac[:3, k] = np.cross(axis_w, p_tcp - link_mats[i, :3, 3])
            jac[3:, k] = axis_w
            k += 1
    return jac


def ik_dls(origins, axes, is_rev, base, tcp_off, lower, upper, target, seed,
           pos_tol, rot_tol, max_iters, damping, max_step_pos, max_step_rot):
    """Damped-least-squares IK with per-iterate joint-limit clamping.

    Returns (q, iterations, pos_err, rot_err, converged).
    """
    q = np.minimum(np.maximum(seed, lower), upper)
    lam2 = damping * damping
    pos_err = np.inf
    rot_err = np.inf
    it = 0
    for it in range(1, max_iters + 1):
        link_mats, tcp = fk_mats(origins, axes, is_rev, base, tcp_off, q)
        e_pos = target[:3, 3] - tcp[:3, 3]
        e_rot = _rotvec_from_mat3(target[:3, :3] @ tcp[:3, :3].T)
        pos_err = float(np.linalg.norm(e_pos))
        rot_err = float(np.linalg.norm(e_rot))
        if pos_err <= pos_tol and rot_err <= rot_tol:
            return q, it, pos_err, rot_err, True
        e = np.empty(6)
        e[:3] = e_pos if pos_err <= max_step_pos else e_pos * (max_step_pos / pos_err)
        e[3:] = e_rot if rot_err <= max_step_rot else e_rot * (max_step_rot / rot_err)
        jac = jacobian_mats(origins, axes, is_rev, link_mats, tcp)
        a = jac @ jac.T
        for d in range(6):
            a[d, d] += lam2
        dq = jac.T @ np.linalg.solve(a, e)
        q_new = np.minimum(np.maximum(q + dq, lower), upper)
        stalled = float(np.max(np.abs(q_new - q))) < 1e-13  # wedged against limits
        q = q_new
        if stalled:
            break
    _, tcp = fk_mats(origins, axes, is_rev, base, tcp_off, q)
    pos_err = float(np.linalg.norm(target[:3, 3] - tcp[:3, 3]))
    rot_err = float(np.linalg.norm(_rotvec_from_mat3(target[:3, :3] @ tcp[:3, :3].T)))
    return q, it, pos_err, rot_err, pos_err <= pos_tol and rot_err <= rot_tol
