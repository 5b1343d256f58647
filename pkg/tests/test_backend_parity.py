"""The numba kernels and the pure-numpy fallback must agree."""
import os
import subprocess
import sys

import numpy as np
import pytest

from mimicarm.backend import ENV_VAR, get_kernels

nb = get_kernels("numba")
npk = get_kernels("numpy")


def random_pose(rng):
    from mimicarm.geom import RigidTransform, quat_from_axis_angle

    return RigidTransform(quat_from_axis_angle(rng.normal(size=3), rng.uniform(-3, 3)),
                          rng.uniform(-1, 1, 3)).as_matrix()


class TestKernelParity:
    def test_depth_to_points(self):
        rng = np.random.default_rng(71)
        depth = rng.uniform(0.3, 4.0, (60, 80)).astype(np.float32)
        depth[rng.random((60, 80)) < 0.25] = np.nan
        pose = random_pose(rng)
        for stride in (1, 2, 3):
            p1, i1 = nb.depth_to_points(depth, 333.0, 333.0, 40.0, 30.0, pose, stride)
            p2, i2 = npk.depth_to_points(depth, 333.0, 333.0, 40.0, 30.0, pose, stride)
            assert np.array_equal(i1, i2)
            assert np.abs(p1 - p2).max() < 1e-12

    def test_voxel_accumulate(self):
        rng = np.random.default_rng(72)
        pts = rng.uniform(-1.2, 1.2, (20000, 3))
        colors = rng.integers(0, 256, (20000, 3), dtype=np.uint8)
        lo = np.array([-1.0, -1.0, -1.0])
        c1, s1 = nb.voxel_accumulate(pts, colors, lo, 0.07, 30, 29, 31)
        c2, s2 = npk.voxel_accumulate(pts, colors, lo, 0.07, 30, 29, 31)
        assert np.array_equal(c1, c2)
        assert np.array_equal(s1, s2)

    def test_sphere_voxel_contacts(self):
        rng = np.random.default_rng(73)
        for _ in range(10):
            occ = rng.random((14, 11, 16)) < 0.08
            centers = rng.uniform(-0.4, 1.4, (25, 3))
            radii = rng.uniform(0.02, 0.15, 25)
            lo = rng.uniform(-0.2, 0.2, 3)
            res = rng.uniform(0.04, 0.1)
            a = nb.sphere_voxel_contacts(centers, radii, occ, lo, res)
            b = npk.sphere_voxel_contacts(centers, radii, occ, lo, res)
            assert np.array_equal(a[0], b[0])
            assert np.array_equal(a[1], b[1])
            assert np.abs(a[2] - b[2]).max() < 1e-12 if len(a[2]) else True

    def test_fk_and_jacobian(self, franka):
        rng = np.random.default_rng(74)
        for _ in range(20):
            q = franka.lower + rng.random(7) * (franka.upper - franka.lower)
            m1, t1 = nb.fk_mats(franka._origins, franka._axes, franka._is_rev,
                                franka._base, franka._tcp_off, q)
            m2, t2 = npk.fk_mats(franka._origins, franka._axes, franka._is_rev,
                                 franka._base, franka._tcp_off, q)
            assert np.abs(m1 - m2).max() < 1e-12
            assert np.abs(t1 - t2).max() < 1e-12
            j1 = nb.jacobian_mats(franka._origins, franka._axes, franka._is_rev, m1, t1)
            j2 = npk.jacobian_mats(franka._origins, franka._axes, franka._is_rev, m2, t2)
            assert np.abs(j1 - j2).max() < 1e-12

    def test_ik_agreement(self, franka):
        from mimicarm.kinematics import forward_kinematics

        rng = np.random.default_rng(75)
        agree = 0
        for _ in range(20):
            q = franka.lower + rng.random(7) * (franka.upper - franka.lower)
            target = forward_kinematics(franka, q).tcp.as_matrix()
            args = (franka._origins, franka._axes, franka._is_rev, franka._base,
                    franka._tcp_off, franka.lower, franka.upper, target,
                    franka.home, 1e-4, 1e-3, 200, 0.05, 0.1, 0.5)
            qa, ia, pa, ra, oka = nb.ik_dls(*args)
            qb, ib, pb, rb, okb = npk.ik_dls(*args)
            assert oka == okb
            # identical algorithm; tiny matmul-order drift may shift iterates,
            # both must still satisfy the contract when they report success
            if oka and np.abs(qa - qb).max() < 1e-6:
                agree += 1
        assert agree >= 15


class TestBackendSelection:
    def test_env_forces_numpy(self):
        code = ("import os; os.environ['%s']='numpy'; "
                "from mimicarm.backend import get_kernels, active_backend; "
                "print(active_backend(), get_kernels().BACKEND_NAME)" % ENV_VAR)
        out = subprocess.run([sys.executable, "-c", code], capture_output=True,
                             text=True, check=True).stdout.split()
        assert out == ["numpy", "numpy"]

    def test_env_default_prefers_numba(self):
        env = {k: v for k, v in os.environ.items() if k != ENV_VAR}
        code = ("from mimicarm.backend import active_backend; print(active_backend())")
        out = subprocess.run([sys.executable, "-c", code], capture_output=True,
                             text=True, check=True, env=env).stdout.strip()
        assert out == "numba"

    def test_invalid_value_rejected(self, monkeypatch):
        from mimicarm.backend import active_backend

        monkeypatch.setenv(ENV_VAR, "cuda")
        with pytest.raises(ValueError):
            active_backend()

    def test_numpy_backend_runs_pipeline(self, small_session, monkeypatch):
        monkeypatch.setenv(ENV_VAR, "numpy")
        from mimicarm.archive import load_archive
        from mimicarm.pipeline import PipelineOptions, run_kinesthetic

        demo, *_ = run_kinesthetic(load_archive(small_session),
                                   PipelineOptions(language_goal="x"))
        assert len(demo.keyframes) >= 2
