"""Independent oracles for DERIVED expected values.

These deliberately avoid the package's kernel/FK/voxelization code paths:
plain homogeneous-matrix composition, finite differences, and brute-force
enumeration, so tests compare two separate routes to the same answer.
"""
import math

import numpy as np


def quat_mat(q):
    w, x, y, z = q
    return np.array([
        [1 - 2 * (y * y + z * z), 2 * (x * y - w * z), 2 * (x * z + w * y)],
        [2 * (x * y + w * z), 1 - 2 * (x * x + z * z), 2 * (y * z - w * x)],
        [2 * (x * z - w * y), 2 * (y * z + w * x), 1 - 2 * (x * x + y * y)],
    ])


def homogeneous(quat_wxyz, xyz):
    m = np.eye(4)
    m[:3, :3] = quat_mat(quat_wxyz)
    m[:3, 3] = xyz
    return m


def axis_angle_hom(axis, angle):
    axis = np.asarray(axis, dtype=np.float64)
    axis = axis / np.linalg.norm(axis)
    x, y, z = axis
    c, s = math.cos(angle), math.sin(angle)
    t = 1 - c
    m = np.eye(4)
    m[:3, :3] = [
        [t * x * x + c, t * x * y - s * z, t * x * z + s * y],
        [t * x * y + s * z, t * y * y + c, t * y * z - s * x],
        [t * x * z - s * y, t * y * z + s * x, t * z * z + c],
    ]
    return m


def chain_fk_oracle(links, flange_to_tcp, base, angles):
    """Direct matrix-chain composition from raw link descriptions.

    links: iterable of (origin_4x4, axis_or_None); revolute iff axis given.
    """
    m = base.copy()
    mats = []
    k = 0
    for origin, axis in links:
        m = m @ origin
        if axis is not None:
            m = m @ axis_angle_hom(axis, angles[k])
            k += 1
        mats.append(m.copy())
    return mats, m @ flange_to_tcp


def chain_links_from_yaml_doc(doc):
    links = []
    for node in doc["links"]:
        j = node["joint"]
        origin = homogeneous(j["origin"]["quat_wxyz"], j["origin"]["xyz"])
        axis = np.asarray(j["axis"], dtype=np.float64) if j["type"] == "revolute" else None
        links.append((origin, axis))
    tcp = homogeneous(doc["flange_to_tcp"]["quat_wxyz"], doc["flange_to_tcp"]["xyz"])
    return links, tcp


def finite_difference_jacobian(fk_tcp, q, eps=1e-6):
    """Central differences of an fk function returning a 4x4 TCP matrix."""
    q = np.asarray(q, dtype=np.float64)
    base = fk_tcp(q)
    jac = np.zeros((6, len(q)))
    for j in range(len(q)):
        qp, qm = q.copy(), q.copy()
        qp[j] += eps
        qm[j] -= eps
        tp, tm = fk_tcp(qp), fk_tcp(qm)
        jac[:3, j] = (tp[:3, 3] - tm[:3, 3]) / (2 * eps)
        dr = (tp[:3, :3] - tm[:3, :3]) / (2 * eps)
        w = dr @ base[:3, :3].T
        jac[3:, j] = [w[2, 1], w[0, 2], w[1, 0]]
    return jac


def brute_voxelize(points, lo, res, dims):
    """Occupied-index set by per-point floor division."""
    occupied = set()
    nx, ny, nz = dims
    for p in points:
        idx = np.floor((np.asarray(p) - lo) / res).astype(int)
        if 0 <= idx[0] < nx and 0 <= idx[1] < ny and 0 <= idx[2] < nz:
            occupied.add((int(idx[0]), int(idx[1]), int(idx[2])))
    return occupied


def brute_collide(sphere_centers, sphere_radii, occ, lo, res):
    """All-pairs sphere x occupied-voxel contact set."""
    half_diag = 0.5 * res * math.sqrt(3.0)
    contacts = set()
    occ_idx = np.argwhere(occ)
    for s, (c, r) in enumerate(zip(sphere_centers, sphere_radii)):
        thr = r + half_diag
        for ijk in occ_idx:
            center = lo + (ijk + 0.5) * res
            if np.linalg.norm(center - c) < thr:
                contacts.add((s, int(ijk[0]), int(ijk[1]), int(ijk[2])))
    return contacts
