import numpy as np
import pytest

from mimicarm.backend import active_backend, get_kernels
from mimicarm.geom import RigidTransform
from mimicarm.kinematics import KinematicChain, Link, franka_chain


@pytest.fixture(scope="session", autouse=True)
def warm_kernels():
    # compile the numba kernels once up front so per-test timings stay honest
    if active_backend() == "numba":
        get_kernels("numba").warmup()


@pytest.fixture(scope="session")
def franka():
    return franka_chain()


@pytest.fixture(scope="session")
def planar2():
    """Two revolute z-joints with 1 m links along x; TCP one more meter out."""
    links = [
        Link("l1", "revolute", RigidTransform(), axis=[0, 0, 1],
             lower=-np.pi, upper=np.pi),
        Link("l2", "revolute", RigidTransform(translation=[1.0, 0, 0]), axis=[0, 0, 1],
             lower=-np.pi, upper=np.pi),
    ]
    return KinematicChain(links, RigidTransform(translation=[1.0, 0, 0]),
                          home=np.zeros(2), name="planar2")


@pytest.fixture(scope="session")
def synthetic_session(tmp_path_factory):
    from mimicarm.synthetic import generate_session

    root = tmp_path_factory.mktemp("data") / "session"
    generate_session(root)
    return root


@pytest.fixture(scope="session")
def small_session(tmp_path_factory):
    """Quarter-size synthetic session for cheaper end-to-end tests."""
    from mimicarm.synthetic import SyntheticSpec, generate_session

    root = tmp_path_factory.mktemp("data_small") / "session"
    generate_session(root, SyntheticSpec(n_frames=45, width=320, height=240,
                                         fx=262.5, fy=262.5))
    return root
