"""Rotation representations and the conversions among them.

The representations are the Rodrigues vector Q = tan(theta/2)*n, the axis-angle
pair (n, theta), the 3x3 rotation matrix, and the half-turn (angle exactly pi,
the one rotation class without a Rodrigues vector).  Rotations are active
dextro-rotations: they move vectors, axes stay fixed, and the sense follows
the right-hand rule about the oriented axis.

All types are immutable values and all operations are pure functions, so
everything here is safe to share between threads.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from rodvec._backend import kernels as _k
from rodvec.errors import HalfTurnUndefined, NotARotation

__all__ = [
    "Vec3",
    "UnitVector",
    "AxisAngle",
    "RodriguesVector",
    "Matrix3",
    "SkewMatrix",
    "RotationMatrix",
    "HalfTurn",
    "skew",
    "unskew",
    "euler_rodrigues_matrix",
    "rodrigues_from_axis_angle",
    "axis_angle_from_rodrigues",
    "matrix_from_rodrigues",
    "matrix_from_half_turn",
    "apply_rotation",
    "invert_rotation",
]

_TWO_PI = 2.0 * math.pi

#: |angle - pi| at or below this raises HalfTurnUndefined in Q = tan(angle/2)*n.
HALF_TURN_ANGLE_TOL = 1e-12

#: RotationMatrix construction tolerance for R^T R = 1 and det R = 1.
ROTATION_MATRIX_TOL = 1e-9

#: Unit vectors are renormalized when within this of unit norm, rejected beyond.
UNIT_RENORM_TOL = 1e-6


def _require_finite(*values: float) -> None:
    for v in values:
        if not math.isfinite(v):
            raise ValueError(f"non-finite component: {v!r}")


@dataclass(frozen=True)
class Vec3:
    """A vector in R^3 with finite components."""

    x: float
    y: float
    z: float

    def __post_init__(self) -> None:
        _require_finite(self.x, self.y, self.z)

    def as_tuple(self) -> tuple[float, float, float]:
        return (self.x, self.y, self.z)

    def __add__(self, other: Vec3) -> Vec3:
        return Vec3(self.x + other.x, self.y + other.y, self.z + other.z)

    def __sub__(self, other: Vec3) -> Vec3:
        return Vec3(self.x - other.x, self.y - other.y, self.z - other.z)

    def __neg__(self) -> Vec3:
        return Vec3(-self.x, -self.y, -self.z)

    def __mul__(self, s: float) -> Vec3:
        return Vec3(self.x * s, self.y * s, self.z * s)

    __rmul__ = __mul__

    def __truediv__(self, s: float) -> Vec3:
        return Vec3(self.x / s, self.y / s, self.z / s)

    def dot(self, other: Vec3) -> float:
        return self.x * other.x + self.y * other.y + self.z * other.z

    def cross(self, other: Vec3) -> Vec3:
        return Vec3(*_k.cross3(self.as_tuple(), other.as_tuple()))

    def norm(self) -> float:
        return math.sqrt(self.dot(self))


@dataclass(frozen=True)
class UnitVector:
    """A vector of norm 1 (verified to 1e-12 at construction).

    Inputs within 1e-6 of unit norm are renormalized silently; anything
    farther off is rejected.  Use :meth:`from_vec` to normalize an arbitrary
    direction.
    """

    x: float
    y: float
    z: float

    def __post_init__(self) -> None:
        _require_finite(self.x, self.y, self.z)
        n = math.sqrt(self.x * self.x + self.y * self.y + self.z * self.z)
        if abs(n - 1.0) > UNIT_RENORM_TOL:
            raise ValueError(f"not a unit vector (norm {n!r}); use UnitVector.from_vec")
        if abs(n - 1.0) > 1e-12:
            object.__setattr__(self, "x", self.x / n)
            object.__setattr__(self, "y", self.y / n)
            object.__setattr__(self, "z", self.z / n)

    @classmethod
    def from_vec(cls, v: Vec3) -> UnitVector:
        n = v.norm()
        if n < 1e-15:
            raise ValueError("cannot normalize a (near-)zero vector")
        return cls(v.x / n, v.y / n, v.z / n)

    @property
    def vec(self) -> Vec3:
        return Vec3(self.x, self.y, self.z)

    def as_tuple(self) -> tuple[float, float, float]:
        return (self.x, self.y, self.z)

    def __neg__(self) -> UnitVector:
        return UnitVector(-self.x, -self.y, -self.z)

    def dot(self, other: UnitVector | Vec3) -> float:
        return self.x * other.x + self.y * other.y + self.z * other.z

    def cross(self, other: UnitVector | Vec3) -> Vec3:
        return Vec3(*_k.cross3(self.as_tuple(), (other.x, other.y, other.z)))


def _fold_angle(angle: float) -> float:
    # into (-pi, pi]; remainder returns [-pi, pi] with ties to even
    a = math.remainder(angle, _TWO_PI)
    return math.pi if a == -math.pi else a


@dataclass(frozen=True)
class AxisAngle:
    """Unit axis plus signed angle in radians, normalized into (-pi, pi]."""

    axis: UnitVector
    angle: float

    def __post_init__(self) -> None:
        _require_finite(self.angle)
        object.__setattr__(self, "angle", _fold_angle(self.angle))


@dataclass(frozen=True)
class RodriguesVector:
    """The rotation vector Q = tan(theta/2)*n.

    Any finite magnitude is legal; the encoded angle 2*atan(||Q||) lies in
    [0, pi) automatically, with the axis direction carrying the sign.
    """

    x: float
    y: float
    z: float

    def __post_init__(self) -> None:
        _require_finite(self.x, self.y, self.z)

    def as_tuple(self) -> tuple[float, float, float]:
        return (self.x, self.y, self.z)

    @property
    def vec(self) -> Vec3:
        return Vec3(self.x, self.y, self.z)

    def norm(self) -> float:
        return math.sqrt(self.x * self.x + self.y * self.y + self.z * self.z)

    def angle(self) -> float:
        """Rotation angle 2*atan(||Q||), in [0, pi)."""
        return 2.0 * math.atan(self.norm())

    def __neg__(self) -> RodriguesVector:
        return RodriguesVector(-self.x, -self.y, -self.z)

    def __add__(self, other: RodriguesVector) -> RodriguesVector:
        return RodriguesVector(self.x + other.x, self.y + other.y, self.z + other.z)


@dataclass(frozen=True)
class Matrix3:
    """A 3x3 real matrix stored as nine floats, row-major."""

    elements: tuple[float, float, float, float, float, float, float, float, float]

    def __post_init__(self) -> None:
        if len(self.elements) != 9:
            raise ValueError("Matrix3 takes exactly 9 elements")
        elems = tuple(float(e) for e in self.elements)
        _require_finite(*elems)
        object.__setattr__(self, "elements", elems)

    @classmethod
    def identity(cls) -> Matrix3:
        return cls((1.0, 0.0, 0.0, 0.0, 1.0, 0.0, 0.0, 0.0, 1.0))

    @classmethod
    def from_rows(cls, rows) -> Matrix3:
        return cls(tuple(float(v) for row in rows for v in row))

    @property
    def rows(self) -> tuple[tuple[float, float, float], ...]:
        e = self.elements
        return ((e[0], e[1], e[2]), (e[3], e[4], e[5]), (e[6], e[7], e[8]))

    def __getitem__(self, ij: tuple[int, int]) -> float:
        i, j = ij
        return self.elements[3 * i + j]

    def transpose(self) -> Matrix3:
        return Matrix3(_k.transpose9(self.elements))

    def trace(self) -> float:
        e = self.elements
        return e[0] + e[4] + e[8]

    def __matmul__(self, other):
        if isinstance(other, Matrix3):
            return Matrix3(_k.matmul(self.elements, other.elements))
        if isinstance(other, Vec3):
            return Vec3(*_k.matvec(self.elements, other.as_tuple()))
        return NotImplemented

    def __add__(self, other: Matrix3) -> Matrix3:
        return Matrix3(tuple(a + b for a, b in zip(self.elements, other.elements)))

    def __sub__(self, other: Matrix3) -> Matrix3:
        return Matrix3(tuple(a - b for a, b in zip(self.elements, other.elements)))

    def __mul__(self, s: float) -> Matrix3:
        return Matrix3(tuple(a * s for a in self.elements))

    __rmul__ = __mul__

    def inf_norm(self) -> float:
        return max(abs(e) for e in self.elements)


@dataclass(frozen=True)
class SkewMatrix:
    """The operator (v x): skew-symmetric by construction.

    Only the three generating components are stored, which makes
    M^T = -M structural rather than numerical.
    """

    generator: Vec3

    @property
    def matrix(self) -> Matrix3:
        return Matrix3(_k.skew9(self.generator.as_tuple()))

    def apply(self, x: Vec3) -> Vec3:
        return self.generator.cross(x)

    def transpose(self) -> SkewMatrix:
        return SkewMatrix(-self.generator)


@dataclass(frozen=True)
class RotationMatrix:
    """A member of SO(3), validated at construction.

    R^T R = 1 and det R = +1 must hold to 1e-9; violations raise
    :class:`NotARotation`.  Validation happens once, here, not on use.
    """

    matrix: Matrix3

    def __post_init__(self) -> None:
        ortho, det = _k.rot_residuals9(self.matrix.elements)
        if ortho > ROTATION_MATRIX_TOL or det > ROTATION_MATRIX_TOL:
            raise NotARotation(
                f"matrix fails SO(3) checks: |R^T R - 1| = {ortho:.3e}, |det - 1| = {det:.3e}"
            )

    @classmethod
    def from_elements(cls, elements) -> RotationMatrix:
        return cls(Matrix3(tuple(elements)))

    @classmethod
    def identity(cls) -> RotationMatrix:
        return cls(Matrix3.identity())

    @property
    def elements(self):
        return self.matrix.elements

    def apply(self, x: Vec3) -> Vec3:
        return Vec3(*_k.matvec(self.matrix.elements, x.as_tuple()))

    def transpose(self) -> RotationMatrix:
        return RotationMatrix(self.matrix.transpose())

    def trace(self) -> float:
        return self.matrix.trace()

    def __matmul__(self, other):
        if isinstance(other, RotationMatrix):
            return RotationMatrix(Matrix3(_k.matmul(self.elements, other.elements)))
        if isinstance(other, Vec3):
            return self.apply(other)
        return NotImplemented


def _canonical_half_axis(axis: UnitVector) -> UnitVector:
    for c in (axis.x, axis.y, axis.z):
        if c != 0.0:
            return -axis if c < 0.0 else axis
    return axis


@dataclass(frozen=True)
class HalfTurn:
    """A rotation by exactly pi about ``axis``.

    axis and -axis generate the same rotation, so the axis is canonicalized
    to have its first nonzero component positive.
    """

    axis: UnitVector

    def __post_init__(self) -> None:
        object.__setattr__(self, "axis", _canonical_half_axis(self.axis))


def skew(v: Vec3) -> SkewMatrix:
    """The matrix operator (v x), mapping x to v cross x."""
    return SkewMatrix(v)


def unskew(m: SkewMatrix) -> Vec3:
    """Inverse of :func:`skew`; exact by construction."""
    return m.generator


def euler_rodrigues_matrix(n: UnitVector, theta: float) -> RotationMatrix:
    """R(n, theta) = cos(theta)*1 + sin(theta)*(n x) + (1 - cos(theta))*n n^T."""
    _require_finite(theta)
    return RotationMatrix(Matrix3(_k.euler_rodrigues9(n.as_tuple(), theta)))


def rodrigues_from_axis_angle(aa: AxisAngle) -> RodriguesVector:
    """Q = tan(angle/2)*axis.

    Raises:
        HalfTurnUndefined: when the angle is pi (to 1e-12); tan(angle/2)
            has a pole there and the rotation has no Rodrigues vector.
    """
    if abs(abs(aa.angle) - math.pi) <= HALF_TURN_ANGLE_TOL:
        raise HalfTurnUndefined(
            "the Rodrigues vector tan(theta/2)*n has no value at theta = pi; "
            "use a HalfTurn or the matrix representation"
        )
    t = math.tan(0.5 * aa.angle)
    return RodriguesVector(t * aa.axis.x, t * aa.axis.y, t * aa.axis.z)


def axis_angle_from_rodrigues(q: RodriguesVector) -> AxisAngle:
    """Axis Q/||Q|| and angle 2*atan(||Q||) in [0, pi).

    The zero vector maps to angle 0 about the conventional axis (0, 0, 1).
    """
    n = q.norm()
    if n == 0.0:
        return AxisAngle(UnitVector(0.0, 0.0, 1.0), 0.0)
    return AxisAngle(UnitVector(q.x / n, q.y / n, q.z / n), 2.0 * math.atan(n))


def matrix_from_rodrigues(q: RodriguesVector) -> RotationMatrix:
    """R(Q) = 1 + 2*((Q x) + (Q x)^2)/(1 + Q.Q)."""
    return RotationMatrix(Matrix3(_k.rot_from_rod9(q.as_tuple())))


def matrix_from_half_turn(h: HalfTurn) -> RotationMatrix:
    """R = 2 n n^T - 1: symmetric, eigenvalues (+1, -1, -1)."""
    return RotationMatrix(Matrix3(_k.half_turn9(h.axis.as_tuple())))


def apply_rotation(r: RotationMatrix, x: Vec3) -> Vec3:
    """The rotated vector R x."""
    return r.apply(x)


def invert_rotation(q: RodriguesVector) -> RodriguesVector:
    """The inverse rotation is the negated Rodrigues vector."""
    return -q
