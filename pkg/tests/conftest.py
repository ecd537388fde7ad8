"""Shared helpers: seeded samplers and numpy-side oracles.

The library computes everything with its own closed forms; tests rebuild
the same quantities independently through numpy (matrix products, eig,
inv) so each check has two routes.
"""

from __future__ import annotations

import math
import random

import numpy as np
import pytest

from rodvec import RodriguesVector, UnitVector, Vec3


def to_np(m) -> np.ndarray:
    """3x3 ndarray from anything with .elements or a 9-tuple."""
    e = getattr(m, "elements", m)
    return np.array(e, dtype=float).reshape(3, 3)


def vec_np(v) -> np.ndarray:
    return np.array([v.x, v.y, v.z], dtype=float)


def np_skew(v: np.ndarray) -> np.ndarray:
    return np.array(
        [[0.0, -v[2], v[1]], [v[2], 0.0, -v[0]], [-v[1], v[0], 0.0]], dtype=float
    )


def np_euler_rodrigues(axis: np.ndarray, theta: float) -> np.ndarray:
    """Independent rotation-matrix oracle."""
    c, s = math.cos(theta), math.sin(theta)
    return c * np.eye(3) + s * np_skew(axis) + (1.0 - c) * np.outer(axis, axis)


def rand_unit(rng: random.Random) -> UnitVector:
    while True:
        v = Vec3(rng.gauss(0, 1), rng.gauss(0, 1), rng.gauss(0, 1))
        if v.norm() > 1e-3:
            return UnitVector.from_vec(v)


def rand_axis_angle(rng: random.Random, max_angle: float) -> tuple[UnitVector, float]:
    return rand_unit(rng), rng.uniform(-max_angle, max_angle)


def rand_rod(rng: random.Random, max_angle: float) -> RodriguesVector:
    axis, theta = rand_axis_angle(rng, max_angle)
    t = math.tan(0.5 * theta)
    return RodriguesVector(t * axis.x, t * axis.y, t * axis.z)


def rand_vec(rng: random.Random, scale: float = 2.0) -> Vec3:
    return Vec3(
        rng.uniform(-scale, scale), rng.uniform(-scale, scale), rng.uniform(-scale, scale)
    )


@pytest.fixture
def rng() -> random.Random:
    return random.Random(20240811)
