import math

import numpy as np
import pytest
import yaml
from hypothesis import given, settings
from hypothesis import strategies as st

from mimicarm.errors import ChainFormatError, JointLimitViolation, Unreachable
from mimicarm.geom import RigidTransform, quat_from_axis_angle, rotation_angle_between
from mimicarm.kinematics import (IkOptions, JointState, bundled_chain_path,
                                 check_limits, forward_kinematics,
                                 inverse_kinematics, jacobian, load_chain)

from oracles import (chain_fk_oracle, chain_links_from_yaml_doc,
                     finite_difference_jacobian)


def random_config(chain, rng):
    return chain.lower + rng.random(chain.n_joints) * (chain.upper - chain.lower)


class TestForwardKinematics:
    def test_planar_zero_config(self, planar2):
        fk = forward_kinematics(planar2, np.zeros(2))
        assert np.abs(fk.tcp.translation - [2.0, 0.0, 0.0]).max() < 1e-12

    def test_planar_quarter_turn(self, planar2):
        fk = forward_kinematics(planar2, np.array([np.pi / 2, 0.0]))
        assert np.abs(fk.tcp.translation - [0.0, 2.0, 0.0]).max() < 1e-12

    def test_planar_elbow(self, planar2):
        fk = forward_kinematics(planar2, np.array([0.0, np.pi / 2]))
        assert np.abs(fk.tcp.translation - [1.0, 1.0, 0.0]).max() < 1e-12

    def test_bundled_chain_matches_matrix_oracle(self, franka):
        doc = yaml.safe_load(bundled_chain_path().read_text())
        links, tcp_off = chain_links_from_yaml_doc(doc)
        rng = np.random.default_rng(11)
        for _ in range(25):
            q = random_config(franka, rng)
            fk = forward_kinematics(franka, q)
            mats, tcp = chain_fk_oracle(links, tcp_off, np.eye(4), q)
            assert np.abs(fk.tcp.as_matrix() - tcp).max() < 1e-9
            for pose, mat in zip(fk.link_poses, mats):
                assert np.abs(pose.as_matrix() - mat).max() < 1e-9

    def test_zero_config_against_oracle(self, franka):
        doc = yaml.safe_load(bundled_chain_path().read_text())
        links, tcp_off = chain_links_from_yaml_doc(doc)
        q0 = np.clip(np.zeros(7), franka.lower, franka.upper)
        fk = forward_kinematics(franka, q0)
        _, tcp = chain_fk_oracle(links, tcp_off, np.eye(4), q0)
        assert np.abs(fk.tcp.as_matrix() - tcp).max() < 1e-9

    def test_determinism_bit_identical(self, franka):
        rng = np.random.default_rng(12)
        q = random_config(franka, rng)
        a = forward_kinematics(franka, q)
        b = forward_kinematics(franka, q)
        assert np.array_equal(a.tcp.as_matrix(), b.tcp.as_matrix())

    def test_limit_violation_raises(self, franka):
        q = franka.home.copy()
        q[0] = franka.upper[0] + 0.1
        with pytest.raises(JointLimitViolation):
            forward_kinematics(franka, q)
        forward_kinematics(franka, q, limits_checked=False)  # preview path

    def test_base_pose_applied(self, franka):
        base = RigidTransform(quat_from_axis_angle([0, 0, 1], 0.7), [0.5, -0.2, 0.1])
        moved = franka.with_base(base)
        fk0 = forward_kinematics(franka, franka.home).tcp
        fk1 = forward_kinematics(moved, franka.home).tcp
        expected = base.apply(fk0.translation)
        assert np.abs(fk1.translation - expected).max() < 1e-9


class TestJacobian:
    def test_planar_column0(self, planar2):
        jac = jacobian(planar2, np.zeros(2))
        assert np.abs(jac[:3, 0] - [0.0, 2.0, 0.0]).max() < 1e-12
        assert np.abs(jac[3:, 0] - [0.0, 0.0, 1.0]).max() < 1e-12

    def test_fixed_joint_contributes_no_column(self, franka):
        # bundled chain has 8 links (7 revolute + fixed flange) but 7 columns
        assert jacobian(franka, franka.home).shape == (6, 7)
        assert len(franka.links) == 8

    def test_matches_finite_differences(self, franka):
        rng = np.random.default_rng(13)

        def fk_tcp(q):
            return forward_kinematics(franka, q, limits_checked=False).tcp.as_matrix()

        for _ in range(100):
            q = random_config(franka, rng)
            assert np.abs(jacobian(franka, q) - finite_difference_jacobian(fk_tcp, q)).max() < 1e-5


class TestInverseKinematics:
    def test_seed_at_solution_converges_immediately(self, franka):
        rng = np.random.default_rng(14)
        q = random_config(franka, rng)
        target = forward_kinematics(franka, q).tcp
        res = inverse_kinematics(franka, target, JointState(q))
        assert res.iterations <= 2
        assert res.pos_err < 1e-4

    def test_success_rate_from_home(self, franka):
        rng = np.random.default_rng(15)
        fails = 0
        for _ in range(200):
            target = forward_kinematics(franka, random_config(franka, rng)).tcp
            try:
                res = inverse_kinematics(franka, target, JointState(franka.home))
            except Unreachable:
                fails += 1
                continue
            fk = forward_kinematics(franka, res.state).tcp
            assert np.linalg.norm(fk.translation - target.translation) <= 1e-4
            assert rotation_angle_between(fk.rotation, target.rotation) <= 1e-3
            assert (check_limits(franka, res.state) >= 0).all()
        assert fails <= 2  # >= 99%

    def test_far_target_unreachable(self, franka):
        target = RigidTransform(translation=[10.0, 0.0, 0.0])
        with pytest.raises(Unreachable):
            inverse_kinematics(franka, target, JointState(franka.home))

    def test_deterministic(self, franka):
        rng = np.random.default_rng(16)
        target = forward_kinematics(franka, random_config(franka, rng)).tcp
        a = inverse_kinematics(franka, target, JointState(franka.home))
        b = inverse_kinematics(franka, target, JointState(franka.home))
        assert np.array_equal(a.state.angles, b.state.angles)

    @settings(max_examples=30, deadline=None)
    @given(st.lists(st.floats(-3.0, 3.0), min_size=7, max_size=7),
           st.lists(st.floats(-1.0, 1.0), min_size=3, max_size=3))
    def test_dls_step_never_nan(self, seed_angles, target_xyz):
        from mimicarm.backend import get_kernels
        from mimicarm.kinematics import franka_chain

        chain = franka_chain()
        k = get_kernels()
        target = np.eye(4)
        target[:3, 3] = target_xyz
        q, iters, pe, re, ok = k.ik_dls(
            chain._origins, chain._axes, chain._is_rev, chain._base, chain._tcp_off,
            chain.lower, chain.upper, target, np.asarray(seed_angles),
            1e-4, 1e-3, 50, 0.05, 0.1, 0.5)
        assert np.isfinite(q).all()
        assert np.isfinite(pe) and np.isfinite(re)


class TestLimits:
    def test_midrange_margins(self, franka):
        mid = 0.5 * (franka.lower + franka.upper)
        margins = check_limits(franka, mid)
        assert np.abs(margins - 0.5 * (franka.upper - franka.lower)).max() < 1e-12

    def test_at_lower_limit(self, franka):
        q = franka.lower.copy()
        assert abs(check_limits(franka, q).min()) < 1e-12

    def test_beyond_upper(self, franka):
        q = 0.5 * (franka.lower + franka.upper)
        q[2] = franka.upper[2] + 0.1
        assert abs(check_limits(franka, q)[2] + 0.1) < 1e-12


class TestChainLoader:
    def test_bundled_chain_loads(self, franka):
        assert franka.n_joints == 7
        assert franka.sphere_count > 0
        assert franka.max_aperture == pytest.approx(0.08)

    def test_rejects_unknown_joint_type(self, tmp_path):
        doc = yaml.safe_load(bundled_chain_path().read_text())
        doc["links"][0]["joint"]["type"] = "prismatic"
        bad = tmp_path / "bad.yaml"
        bad.write_text(yaml.safe_dump(doc))
        with pytest.raises(ChainFormatError):
            load_chain(bad)

    def test_rejects_bad_limits(self, tmp_path):
        doc = yaml.safe_load(bundled_chain_path().read_text())
        doc["links"][0]["joint"]["limits"] = {"lower": 1.0, "upper": -1.0}
        bad = tmp_path / "bad.yaml"
        bad.write_text(yaml.safe_dump(doc))
        with pytest.raises(ChainFormatError):
            load_chain(bad)

    def test_rejects_unversioned(self, tmp_path):
        bad = tmp_path / "bad.yaml"
        bad.write_text("links: []\n")
        with pytest.raises(ChainFormatError):
            load_chain(bad)
