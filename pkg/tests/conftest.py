from fractions import Fraction as F

import numpy as np
import pytest

# worked four-point example with exact rational canvas points
EXAMPLE_WORLD = [(0, 0, 0), (1, 0, 0), (1, 1, 0), (0, 0, 3)]
EXAMPLE_CANVAS = [(F(2), F(1)), (F(17, 13), F(9, 13)), (F(11, 15), F(4, 5)), (F(1, 2), F(-11, 16))]
EXAMPLE_A = (1, 2, 1)
EXAMPLE_C = (9, 10, 11)
EXAMPLE_B = (F(6), F(99, 25), F(45, 8))
EXAMPLE_D = (F(9, 2), F(21, 4), F(24, 5))
EXAMPLE_Z = (F(1), F(5, 3), F(4, 3), F(3))
EXAMPLE_Z_ORIG = (F(1), F(13, 7), F(15, 7), F(16, 7))
EXAMPLE_RAYS = [
    (F(2), F(1), F(1)),
    (F(17, 7), F(9, 7), F(13, 7)),
    (F(11, 7), F(12, 7), F(15, 7)),
    (F(8, 7), F(-11, 7), F(16, 7)),
]


@pytest.fixture
def example():
    world = np.array(EXAMPLE_WORLD, dtype=float)
    canvas = np.array([[float(u), float(v)] for u, v in EXAMPLE_CANVAS])
    return world, canvas


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


def rotated_depths(world, canvas, offset=2.5):
    """Ground-truth rotated-frame depths of a synthetic scenario, computed from its construction.

    The camera-frame point ``Y_i`` has depth ``Y_i.z`` along the lifted canvas
    ray ``p_i``; turning ray 3 onto the optical axis multiplies the depth of
    ray ``i`` by ``(p_i . p_3) / |p_3|`` (and ray 3's by ``|p_3|``).
    """
    Y = np.asarray(world) + np.array([0.0, 0.0, offset])
    p = np.concatenate([canvas, np.ones(canvas.shape[:-1] + (1,))], axis=-1)
    n3 = np.linalg.norm(p[..., 3, :], axis=-1)
    dots = np.sum(p * p[..., 3:4, :], axis=-1)
    zbar = Y[..., 2] * dots / n3[..., None]
    zbar[..., 3] = Y[..., 3, 2] * n3
    return zbar


MIN_NORMALIZED_VOLUME = 1e-2


def general_position(world, min_volume=MIN_NORMALIZED_VOLUME):
    """Mask of quadruples that are far from coplanar: volume / (longest edge)^3 >= min_volume.

    A regular tetrahedron scores about 0.118. Nearly flat quadruples sit
    close to the planar locus where the quadratics become ill-conditioned.
    """
    W = np.asarray(world)
    vol = np.abs(np.linalg.det(W[..., :3, :] - W[..., 3:, :])) / 6
    edge = np.max(np.linalg.norm(W[..., :, None, :] - W[..., None, :, :], axis=-1), axis=(-2, -1))
    return vol / edge**3 >= min_volume
