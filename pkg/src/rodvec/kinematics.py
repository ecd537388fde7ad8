"""Infinitesimal rotations, the rigid-body velocity field, and attitude
integration from sampled angular velocity.

For small Q the rotation matrix collapses to 1 + 2(Qx) and Rodrigues vectors
compose additively; matching dx = 2(Q x x) against dx/dt = w x x gives the
per-step increment Q = w*dt/2.  The integrator uses that increment (or its
exact constant-rate form tan(|w|dt/2) * w/|w|) per step but always
accumulates with the exact composition law, so the per-step approximation
is the only error source.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from rodvec.composition import RotationResult, compose_general
from rodvec.core import Matrix3, RodriguesVector, Vec3
from rodvec.errors import NonMonotonicTime, StepTooLarge

__all__ = [
    "AngularVelocity",
    "AngularVelocitySample",
    "AttitudeTrajectory",
    "SCHEMES",
    "FIRST_ORDER",
    "EXACT_STEP",
    "small_rotation_matrix",
    "infinitesimal_displacement",
    "compose_infinitesimal",
    "velocity_field",
    "rodrigues_increment",
    "integrate_attitude",
]

FIRST_ORDER = "first-order"
EXACT_STEP = "exact-step"
SCHEMES = (FIRST_ORDER, EXACT_STEP)

#: exact-step pole guard: |w|*dt must stay below pi - this
STEP_ANGLE_MARGIN = 1e-3


@dataclass(frozen=True)
class AngularVelocity:
    """Instantaneous angular velocity, rad/s, in the fixed frame."""

    x: float
    y: float
    z: float

    def __post_init__(self) -> None:
        for v in (self.x, self.y, self.z):
            if not math.isfinite(v):
                raise ValueError("non-finite angular velocity component")

    def as_tuple(self) -> tuple[float, float, float]:
        return (self.x, self.y, self.z)

    @property
    def vec(self) -> Vec3:
        return Vec3(self.x, self.y, self.z)

    def norm(self) -> float:
        return math.sqrt(self.x * self.x + self.y * self.y + self.z * self.z)


@dataclass(frozen=True)
class AngularVelocitySample:
    t: float
    omega: AngularVelocity

    def __post_init__(self) -> None:
        if not math.isfinite(self.t):
            raise ValueError("non-finite sample time")


@dataclass(frozen=True)
class AttitudeTrajectory:
    """Orientation at each sample time; entry 0 is the initial orientation."""

    points: tuple[tuple[float, RotationResult], ...]

    @property
    def final(self) -> RotationResult:
        return self.points[-1][1]

    def __iter__(self):
        return iter(self.points)

    def __len__(self) -> int:
        return len(self.points)


def small_rotation_matrix(q: RodriguesVector) -> Matrix3:
    """First-order rotation matrix 1 + 2(Qx).

    Not orthogonal for finite Q (the defect is O(||Q||^2)), hence returned
    as a plain matrix on purpose.
    """
    x, y, z = q.as_tuple()
    return Matrix3((1.0, -2.0 * z, 2.0 * y, 2.0 * z, 1.0, -2.0 * x, -2.0 * y, 2.0 * x, 1.0))


def infinitesimal_displacement(q: RodriguesVector, x: Vec3) -> Vec3:
    """dx = 2 (Q x x).

    Exactly twice the tangent-to-bisector step: (1 + Qx) x - x = dx/2 is an
    algebraic identity at any magnitude, not an approximation.
    """
    c = q.vec.cross(x)
    return Vec3(2.0 * c.x, 2.0 * c.y, 2.0 * c.z)


def compose_infinitesimal(q1: RodriguesVector, q2: RodriguesVector) -> RodriguesVector:
    """Small-rotation composition: plain vector addition (commutative)."""
    return q1 + q2


def velocity_field(omega: AngularVelocity, x: Vec3) -> Vec3:
    """dx/dt = w x x about a fixed point at the origin."""
    return omega.vec.cross(x)


def rodrigues_increment(omega: AngularVelocity, dt: float, scheme: str = FIRST_ORDER) -> RodriguesVector:
    """Rodrigues vector of the rotation accrued over dt at rate omega.

    first-order: Q = w*dt/2.  exact-step: Q = tan(|w|dt/2) * w/|w|, exact
    when omega is constant over the step.

    Raises:
        StepTooLarge: in the exact-step scheme when |w|*dt reaches
            pi - 1e-3 (the half-angle tangent pole).
    """
    if scheme not in SCHEMES:
        raise ValueError(f"unknown scheme {scheme!r}; choose from {SCHEMES}")
    if dt <= 0.0:
        raise ValueError("dt must be positive")
    w = omega.norm()
    if scheme == FIRST_ORDER:
        s = 0.5 * dt
        return RodriguesVector(omega.x * s, omega.y * s, omega.z * s)
    if w == 0.0:
        return RodriguesVector(0.0, 0.0, 0.0)
    angle = w * dt
    if angle >= math.pi - STEP_ANGLE_MARGIN:
        raise StepTooLarge(
            f"step spans {angle:.6g} rad, at/over the half-angle tangent pole; "
            "reduce dt or add substeps"
        )
    t = math.tan(0.5 * angle) / w
    return RodriguesVector(omega.x * t, omega.y * t, omega.z * t)


def _lerp_omega(
    s0: AngularVelocitySample, s1: AngularVelocitySample, t: float
) -> AngularVelocity:
    u = (t - s0.t) / (s1.t - s0.t)
    return AngularVelocity(
        s0.omega.x + u * (s1.omega.x - s0.omega.x),
        s0.omega.y + u * (s1.omega.y - s0.omega.y),
        s0.omega.z + u * (s1.omega.z - s0.omega.z),
    )


def integrate_attitude(
    samples: list[AngularVelocitySample] | tuple[AngularVelocitySample, ...],
    scheme: str = EXACT_STEP,
    initial: RotationResult | None = None,
    substeps: int = 1,
) -> AttitudeTrajectory:
    """Propagate orientation through piecewise-linear angular velocity.

    Each sample interval is split into ``substeps`` equal steps; omega is
    evaluated at every step midpoint (removing the O(dt) quadrature error
    that would mask the scheme order), the step rotation comes from
    :func:`rodrigues_increment`, and accumulation is always the exact
    composition - never small-angle addition.  Orientations are recorded at
    the original sample times only.

    Raises:
        NonMonotonicTime: if sample times are not strictly increasing.
        StepTooLarge: propagated from the exact-step increment.
    """
    if len(samples) < 2:
        raise ValueError("need at least two samples")
    if substeps < 1:
        raise ValueError("substeps must be >= 1")
    for s0, s1 in zip(samples, samples[1:]):
        if not s1.t > s0.t:
            raise NonMonotonicTime(f"sample times must increase: {s0.t} -> {s1.t}")

    orientation: RotationResult = initial if initial is not None else RodriguesVector(0.0, 0.0, 0.0)
    points = [(samples[0].t, orientation)]
    for s0, s1 in zip(samples, samples[1:]):
        dt = (s1.t - s0.t) / substeps
        for i in range(substeps):
            mid = s0.t + (i + 0.5) * dt
            w = _lerp_omega(s0, s1, mid)
            step = rodrigues_increment(w, dt, scheme)
            orientation = compose_general(step, orientation)
        points.append((s1.t, orientation))
    return AttitudeTrajectory(tuple(points))
