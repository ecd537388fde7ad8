"""The three-dimensional Cayley transform and its explicit inverse.

R = (1 - Qx)^-1 (1 + Qx) parametrizes every rotation without eigenvalue -1
by the skew-symmetric operator (Qx) of a Rodrigues vector Q, and the
reciprocal map recovers (Qx) = (R - 1)(R + 1)^-1.  The inverse of (1 - Qx)
always exists and is written in closed form, so no linear solve appears
anywhere here.
"""

from __future__ import annotations

from rodvec._backend import kernels as _k
from rodvec.core import (
    HalfTurn,
    Matrix3,
    RodriguesVector,
    RotationMatrix,
    UnitVector,
    Vec3,
)

__all__ = [
    "cayley_rotation",
    "cayley_inverse_explicit",
    "rodrigues_from_matrix",
    "cayley_residuals",
    "HALF_TURN_TRACE_TOL",
]

#: trace(R) <= -1 + this routes matrix->Rodrigues conversion to the half-turn
#: branch; beyond it tan(theta/2) stays below ~2e3 and the regular formula is
#: well conditioned.
HALF_TURN_TRACE_TOL = 1e-6


def cayley_rotation(q: RodriguesVector) -> RotationMatrix:
    """R = (1 - Qx)^-1 (1 + Qx), the inverse taken from its explicit form.

    This is a route to the rotation matrix independent of
    :func:`rodvec.core.matrix_from_rodrigues`; the two agree to ~1e-15
    elementwise, which is itself one of the package's standing checks.
    """
    return RotationMatrix(Matrix3(_k.cayley_rot9(q.as_tuple())))


def cayley_inverse_explicit(q: RodriguesVector) -> Matrix3:
    """(1 - Qx)^-1 = 1 + ((Qx) + (Qx)^2)/(1 + Q.Q).

    Returned as a plain matrix (it is not a rotation).  Multiplying by
    (1 - Qx) on either side reproduces the identity to ~1e-15.
    """
    return Matrix3(_k.cayley_inv9(q.as_tuple()))


def _half_turn_axis(r: RotationMatrix) -> UnitVector:
    # symmetric part of (R + 1)/2; at theta = pi this is exactly n n^T,
    # so its largest-norm column points along the axis.
    e = r.elements
    s = [0.0] * 9
    for i in range(3):
        for j in range(3):
            s[3 * i + j] = 0.25 * (e[3 * i + j] + e[3 * j + i])
        s[3 * i + i] += 0.5
    cols = [(s[j], s[3 + j], s[6 + j]) for j in range(3)]
    best = max(cols, key=_k.norm3)
    n = _k.norm3(best)
    return UnitVector(best[0] / n, best[1] / n, best[2] / n)


def rodrigues_from_matrix(r: RotationMatrix | Matrix3) -> RodriguesVector | HalfTurn:
    """Rodrigues vector of R, or the half-turn when R has eigenvalue -1.

    Away from the pole the unique Q with skew(Q) = (R - 1)(R + 1)^-1 is
    read off as (R - R^T)/(1 + trace R).  When trace R <= -1 + 1e-6 the
    division is ill-conditioned and the rotation is reported as a
    :class:`HalfTurn` about the +1-eigenvector instead.

    Raises:
        NotARotation: if a plain matrix is passed and fails the SO(3) checks.
    """
    if isinstance(r, Matrix3):
        r = RotationMatrix(r)
    if r.trace() <= -1.0 + HALF_TURN_TRACE_TOL:
        return HalfTurn(_half_turn_axis(r))
    return RodriguesVector(*_k.rod_from_rot9(r.elements))


def cayley_residuals(q: RodriguesVector, x: Vec3) -> tuple[float, float]:
    """Residual norms of the two bridge identities between Q and R.

    r1 = ||(1 + Qx) x - (1 - Qx) R x||   (tangents from x and Rx meet)
    r2 = ||((Qx)(R + 1) - (R - 1)) x||   (reciprocal-map identity)

    Both vanish identically; the returned values are floating-point noise,
    bounded by ~1e-15 * (1 + ||Q||) * ||x|| in practice.
    """
    qt = q.as_tuple()
    xt = x.as_tuple()
    rm = _k.rot_from_rod9(qt)
    rx = _k.matvec(rm, xt)
    qxx = _k.cross3(qt, xt)
    qxrx = _k.cross3(qt, rx)
    r1 = _k.norm3(
        (
            xt[0] + qxx[0] - (rx[0] - qxrx[0]),
            xt[1] + qxx[1] - (rx[1] - qxrx[1]),
            xt[2] + qxx[2] - (rx[2] - qxrx[2]),
        )
    )
    # (Qx)(R+1)x vs (R-1)x
    rx_plus_x = (rx[0] + xt[0], rx[1] + xt[1], rx[2] + xt[2])
    lhs = _k.cross3(qt, rx_plus_x)
    r2 = _k.norm3((lhs[0] - (rx[0] - xt[0]), lhs[1] - (rx[1] - xt[1]), lhs[2] - (rx[2] - xt[2])))
    return r1, r2
