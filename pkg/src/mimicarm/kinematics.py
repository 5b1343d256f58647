"""Kinematic chain of the simulated 7-DoF arm: FK, Jacobian, DLS inverse
kinematics, joint limits, and the chain description loader.

The chain is a flat list of links, each with a parent-to-joint origin
transform, a joint axis (revolute) or none (fixed), limits, and collision
spheres in the link frame. A Franka-style description ships as package data.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path

import numpy as np
import yaml

from .backend import get_kernels
from .errors import ChainFormatError, JointLimitViolation, Unreachable
from .geom import RigidTransform, rotation_angle_between

_IK_RESTART_SEED = 0x51C2  # fixed: restarts must be deterministic

REVOLUTE = "revolute"
FIXED = "fixed"
_JOINT_TYPES = (REVOLUTE, FIXED)


@dataclass(frozen=True)
class CollisionSphere:
    center: np.ndarray  # (3,) link frame
    radius: float

    def __post_init__(self):
        object.__setattr__(self, "center", np.asarray(self.center, dtype=np.float64).reshape(3))
        if self.radius <= 0:
            raise ChainFormatError(f"collision sphere radius must be > 0, got {self.radius}")


@dataclass(frozen=True)
class Link:
    name: str
    joint_type: str
    origin: RigidTransform  # parent frame -> joint frame
    axis: np.ndarray | None = None  # unit, joint frame; None for fixed
    lower: float = 0.0
    upper: float = 0.0
    spheres: tuple[CollisionSphere, ...] = ()

    def __post_init__(self):
        if self.joint_type not in _JOINT_TYPES:
            raise ChainFormatError(f"unknown joint type {self.joint_type!r}")
        if self.joint_type == REVOLUTE:
            axis = np.asarray(self.axis, dtype=np.float64).reshape(3)
            n = np.linalg.norm(axis)
            if n < 1e-9:
                raise ChainFormatError(f"link {self.name}: zero joint axis")
            object.__setattr__(self, "axis", axis / n)
            if not self.lower < self.upper:
                raise ChainFormatError(f"link {self.name}: lower limit must be < upper")


class KinematicChain:
    """Immutable after construction; FK/IK are pure, safe to share across threads."""

    def __init__(self, links, flange_to_tcp: RigidTransform,
                 base_pose: RigidTransform | None = None,
                 max_aperture: float = 0.08,
                 home: np.ndarray | None = None,
                 name: str = "chain"):
        self.links: tuple[Link, ...] = tuple(links)
        if not self.links:
            raise ChainFormatError("chain has no links")
        self.flange_to_tcp = flange_to_tcp
        self.base_pose = base_pose if base_pose is not None else RigidTransform.identity()
        self.max_aperture = float(max_aperture)
        self.name = name
        rev = [l for l in self.links if l.joint_type == REVOLUTE]
        self.n_joints = len(rev)
        self.lower = np.array([l.lower for l in rev])
        self.upper = np.array([l.upper for l in rev])
        self.home = (np.asarray(home, dtype=np.float64).reshape(self.n_joints)
                     if home is not None else 0.5 * (self.lower + self.upper))
        self._pack()

    def _pack(self):
        n = len(self.links)
        self._origins = np.stack([l.origin.as_matrix() for l in self.links])
        self._axes = np.zeros((n, 3))
        self._is_rev = np.zeros(n, dtype=np.uint8)
        for i, l in enumerate(self.links):
            if l.joint_type == REVOLUTE:
                self._axes[i] = l.axis
                self._is_rev[i] = 1
        self._tcp_off = self.flange_to_tcp.as_matrix()
        self._base = self.base_pose.as_matrix()
        sph = [(i, s) for i, l in enumerate(self.links) for s in l.spheres]
        self._sphere_link = np.array([i for i, _ in sph], dtype=np.int64)
        self._sphere_local = (np.stack([s.center for _, s in sph])
                              if sph else np.zeros((0, 3)))
        self._sphere_radius = np.array([s.radius for _, s in sph])
        # conservative reach bound: sum of segment lengths from the base
        self._max_reach = float(sum(np.linalg.norm(l.origin.translation) for l in self.links)
                                + np.linalg.norm(self.flange_to_tcp.translation))

    def with_base(self, base_pose: RigidTransform) -> "KinematicChain":
        return KinematicChain(self.links, self.flange_to_tcp, base_pose,
                              self.max_aperture, self.home, self.name)

    @property
    def max_reach(self) -> float:
        return self._max_reach

    @property
    def sphere_count(self) -> int:
        return len(self._sphere_radius)

    # raw-matrix fast path used by planning/collision/throughput code
    def fk_raw(self, angles: np.ndarray):
        k = get_kernels()
        return k.fk_mats(self._origins, self._axes, self._is_rev,
                         self._base, self._tcp_off, np.asarray(angles, dtype=np.float64))

    def sphere_centers_world(self, link_mats: np.ndarray) -> np.ndarray:
        """World centers of every collision sphere given FK link matrices."""
        if not len(self._sphere_radius):
            return np.zeros((0, 3))
        mats = link_mats[self._sphere_link]
        return (np.einsum("nij,nj->ni", mats[:, :3, :3], self._sphere_local)
                + mats[:, :3, 3])


@dataclass
class JointState:
    """Arm configuration: joint angles plus gripper aperture in meters."""

    angles: np.ndarray
    gripper_aperture: float = 0.08

    def __post_init__(self):
        self.angles = np.asarray(self.angles, dtype=np.float64).reshape(-1).copy()
        if self.gripper_aperture < 0:
            raise ValueError("gripper aperture must be >= 0")


@dataclass(frozen=True)
class FkResult:
    link_poses: tuple[RigidTransform, ...]
    tcp: RigidTransform


@dataclass(frozen=True)
class IkOptions:
    pos_tol: float = 1e-4
    rot_tol: float = 1e-3
    max_iters: int = 200
    damping: float = 0.05  # lambda > 0: the step is always defined
    max_step_pos: float = 0.1
    max_step_rot: float = 0.5
    restarts: int = 40


@dataclass(frozen=True)
class IkResult:
    state: JointState
    iterations: int
    pos_err: float
    rot_err: float


def _angles_of(q) -> np.ndarray:
    return q.angles if isinstance(q, JointState) else np.asarray(q, dtype=np.float64)


def check_limits(chain: KinematicChain, q) -> np.ndarray:
    """Per-joint margin to the nearest limit (rad); negative = violation."""
    angles = _angles_of(q)
    return np.minimum(angles - chain.lower, chain.upper - angles)


def forward_kinematics(chain: KinematicChain, q, limits_checked: bool = True) -> FkResult:
    angles = _angles_of(q)
    if angles.shape != (chain.n_joints,):
        raise ValueError(f"expected {chain.n_joints} joint angles, got {angles.shape}")
    if limits_checked:
        margins = check_limits(chain, angles)
        if (margins < -1e-12).any():
            j = int(np.argmin(margins))
            raise JointLimitViolation(f"joint {j} out of range by {-margins[j]:.6f} rad")
    link_mats, tcp = chain.fk_raw(angles)
    return FkResult(tuple(RigidTransform.from_matrix(m) for m in link_mats),
                    RigidTransform.from_matrix(tcp))


def jacobian(chain: KinematicChain, q) -> np.ndarray:
    """6 x n geometric Jacobian about the TCP, world frame (linear rows first)."""
    angles = _angles_of(q)
    k = get_kernels()
    link_mats, tcp = chain.fk_raw(angles)
    return k.jacobian_mats(chain._origins, chain._axes, chain._is_rev, link_mats, tcp)


def _restart_seeds(chain: KinematicChain, seed: np.ndarray, n: int):
    yield seed
    if not np.allclose(seed, chain.home):
        yield chain.home
    mid = 0.5 * (chain.lower + chain.upper)
    yield mid
    rng = np.random.default_rng(_IK_RESTART_SEED)
    span = chain.upper - chain.lower
    for _ in range(n):
        yield chain.lower + rng.random(chain.n_joints) * span


def inverse_kinematics(chain: KinematicChain, target: RigidTransform, seed,
                       opts: IkOptions | None = None) -> IkResult:
    """Damped-least-squares IK; joint limits enforced by clamping each iterate.

    Raises Unreachable when no attempt meets the tolerances. Singularities are
    not an error: the damping term keeps every step finite.
    """
    opts = opts or IkOptions()
    seed_angles = _angles_of(seed)
    if isinstance(seed, JointState):
        aperture = seed.gripper_aperture
    else:
        aperture = chain.max_aperture
    base_off = np.linalg.norm(target.translation - chain.base_pose.translation)
    if base_off > chain.max_reach + opts.pos_tol:
        raise Unreachable(
            f"target {base_off:.3f} m from base exceeds reach {chain.max_reach:.3f} m")
    k = get_kernels()
    tgt = target.as_matrix()
    best = None
    for attempt in _restart_seeds(chain, seed_angles, opts.restarts):
        q, iters, pos_err, rot_err, ok = k.ik_dls(
            chain._origins, chain._axes, chain._is_rev, chain._base, chain._tcp_off,
            chain.lower, chain.upper, tgt, np.asarray(attempt, dtype=np.float64),
            opts.pos_tol, opts.rot_tol, opts.max_iters, opts.damping,
            opts.max_step_pos, opts.max_step_rot)
        if ok:
            result = IkResult(JointState(q, aperture), iters, pos_err, rot_err)
            _assert_ik_sound(chain, result, target, opts)
            return result
        if best is None or pos_err + rot_err < best[1] + best[2]:
            best = (q, pos_err, rot_err)
    raise Unreachable(
        f"residual {best[1]:.2e} m / {best[2]:.2e} rad after {opts.max_iters} iterations")


def _assert_ik_sound(chain, result: IkResult, target: RigidTransform, opts: IkOptions):
    # invariant: every reported success re-verifies through FK
    fk = forward_kinematics(chain, result.state)
    pos = float(np.linalg.norm(fk.tcp.translation - target.translation))
    rot = rotation_angle_between(fk.tcp.rotation, target.rotation)
    if pos > opts.pos_tol * (1 + 1e-9) or rot > opts.rot_tol * (1 + 1e-6):
        raise AssertionError(f"IK soundness violated: {pos:.2e} m / {rot:.2e} rad")
    if (check_limits(chain, result.state) < 0).any():
        raise AssertionError("IK returned a configuration outside joint limits")


# ---------------------------------------------------------------------------
# chain description file
# ---------------------------------------------------------------------------

def _transform_from_node(node, where: str) -> RigidTransform:
    try:
        xyz = node["xyz"]
        quat = node["quat_wxyz"]
    except (KeyError, TypeError) as e:
        raise ChainFormatError(f"{where}: expected xyz + quat_wxyz") from e
    return RigidTransform(np.asarray(quat, dtype=np.float64), np.asarray(xyz, dtype=np.float64))


def load_chain(path: str | Path) -> KinematicChain:
    """Parse a chain description file; rejects unknown joint types."""
    path = Path(path)
    try:
        doc = yaml.safe_load(path.read_text())
    except yaml.YAMLError as e:
        raise ChainFormatError(f"{path}: {e}") from e
    return chain_from_dict(doc, str(path))


def chain_from_dict(doc: dict, where: str = "<chain>") -> KinematicChain:
    if not isinstance(doc, dict) or doc.get("schema_version") != 1:
        raise ChainFormatError(f"{where}: missing or unsupported schema_version")
    links = []
    for node in doc.get("links", []):
        joint = node.get("joint", {})
        jtype = joint.get("type")
        if jtype not in _JOINT_TYPES:
            raise ChainFormatError(f"{where}: link {node.get('name')!r} has unknown "
                                   f"joint type {jtype!r}")
        spheres = tuple(CollisionSphere(np.asarray(s["center"], dtype=np.float64), float(s["radius"]))
                        for s in node.get("collision_spheres", []))
        limits = joint.get("limits", {})
        links.append(Link(
            name=str(node.get("name", f"link{len(links)}")),
            joint_type=jtype,
            origin=_transform_from_node(joint["origin"], f"{where}:{node.get('name')}"),
            axis=joint.get("axis"),
            lower=float(limits.get("lower", 0.0)),
            upper=float(limits.get("upper", 0.0)),
            spheres=spheres,
        ))
    tcp = _transform_from_node(doc["flange_to_tcp"], f"{where}:flange_to_tcp")
    gripper = doc.get("gripper", {})
    return KinematicChain(
        links, tcp,
        max_aperture=float(gripper.get("max_aperture", 0.08)),
        home=doc.get("home"),
        name=str(doc.get("name", "chain")),
    )


def bundled_chain_path() -> Path:
    return Path(resources.files("mimicarm").joinpath("data/franka_style.yaml"))


def franka_chain(base_pose: RigidTransform | None = None) -> KinematicChain:
    """The bundled Franka-style 7-DoF arm."""
    chain = load_chain(bundled_chain_path())
    if chain.n_joints != 7:
        raise ChainFormatError("bundled chain must have exactly 7 revolute joints")
    return chain.with_base(base_pose) if base_pose is not None else chain
