"""The finite-rotation composition law and its half-turn branch.

Q3 = (Q1 + Q2 + Q2 x Q1) / (1 - Q2.Q1) represents R(Q2) R(Q1): the second
rotation is the FIRST argument, mirroring matrix-product order.  When the
denominator vanishes the result is a half-turn about the (never-zero)
numerator direction; that case is a result variant, not an error.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from rodvec._backend import kernels as _k
from rodvec.cayley import rodrigues_from_matrix
from rodvec.core import (
    HalfTurn,
    RodriguesVector,
    RotationMatrix,
    UnitVector,
    Vec3,
    matrix_from_half_turn,
    matrix_from_rodrigues,
)
from rodvec.errors import DegenerateComposition, NotPerpendicular

__all__ = [
    "RotationResult",
    "CompositionDiagnostics",
    "compose",
    "compose_general",
    "composition_diagnostics",
    "DEGENERACY_REL_TOL",
]

#: A composition result: either a Rodrigues vector or the half-turn the
#: formula cannot represent.  Discriminate with isinstance().
RotationResult = Union[RodriguesVector, HalfTurn]

#: |1 - Q2.Q1| <= this, scaled by (1 + ||Q1|| ||Q2||), routes to the
#: half-turn branch; near the pole the regular formula amplifies round-off
#: by 1/denominator.
DEGENERACY_REL_TOL = 1e-9


@dataclass(frozen=True)
class CompositionDiagnostics:
    """The proportionality data lambda = 1 - Q2.Q1 of the derivation.

    numerator and denominator are the two parts of the composition law;
    lambda equals the denominator and is recorded redundantly so test
    output can show both.  residual is the defect of
    lambda*(1 + Q3x) A = (1 + Q1x + Q2x + (Q2x)(Q1x)) A.
    """

    lam: float
    numerator: Vec3
    denominator: float
    residual: float


def compose(q2: RodriguesVector, q1: RodriguesVector) -> RotationResult:
    """Composition R(Q2) R(Q1): q1 is applied first.

    Returns the Rodrigues vector of the product, or a :class:`HalfTurn`
    about the numerator direction when 1 - Q2.Q1 vanishes (within
    1e-9 * (1 + ||Q1|| ||Q2||)).
    """
    num, den = _k.compose_num_den(q2.as_tuple(), q1.as_tuple())
    if abs(den) <= DEGENERACY_REL_TOL * (1.0 + q1.norm() * q2.norm()):
        n = _k.norm3(num)
        return HalfTurn(UnitVector(num[0] / n, num[1] / n, num[2] / n))
    return RodriguesVector(num[0] / den, num[1] / den, num[2] / den)


def compose_general(b: RotationResult, a: RotationResult) -> RotationResult:
    """Composition with half-turn operands allowed; a is applied first.

    Regular pairs go through :func:`compose`; any half-turn operand falls
    back to the exact matrix product, converted back afterwards.
    """
    if isinstance(b, RodriguesVector) and isinstance(a, RodriguesVector):
        return compose(b, a)
    mb = _as_matrix(b)
    ma = _as_matrix(a)
    return rodrigues_from_matrix(mb @ ma)


def _as_matrix(r: RotationResult) -> RotationMatrix:
    if isinstance(r, HalfTurn):
        return matrix_from_half_turn(r)
    return matrix_from_rodrigues(r)


def composition_diagnostics(
    q2: RodriguesVector, q1: RodriguesVector, a: UnitVector
) -> CompositionDiagnostics:
    """Verify the proportionality constant of the composition derivation.

    Requires a perpendicular to Q1 (the assumption under which lambda is
    determined); the returned residual is
    ||lambda (1 + Q3x) a - (1 + Q1x + Q2x + (Q2x)(Q1x)) a||
    and stays below 1e-10 for well-scaled inputs.

    Raises:
        NotPerpendicular: if a.Q1 exceeds 1e-9 * ||Q1||.
        DegenerateComposition: if the composition lands on the half-turn
            branch, where no finite Q3 exists.
    """
    q1t = q1.as_tuple()
    q2t = q2.as_tuple()
    at = a.as_tuple()
    n1 = q1.norm()
    if abs(_k.dot3(at, q1t)) > 1e-9 * max(n1, 1e-300):
        raise NotPerpendicular("a must be perpendicular to Q1")
    q3 = compose(q2, q1)
    if isinstance(q3, HalfTurn):
        raise DegenerateComposition("composition is a half-turn; lambda residual undefined")
    num, den = _k.compose_num_den(q2t, q1t)
    lam = den

    q3t = q3.as_tuple()
    lhs = _k.cross3(q3t, at)
    lhs = (lam * (at[0] + lhs[0]), lam * (at[1] + lhs[1]), lam * (at[2] + lhs[2]))

    c1 = _k.cross3(q1t, at)
    c2 = _k.cross3(q2t, at)
    c21 = _k.cross3(q2t, c1)
    rhs = (
        at[0] + c1[0] + c2[0] + c21[0],
        at[1] + c1[1] + c2[1] + c21[1],
        at[2] + c1[2] + c2[2] + c21[2],
    )
    residual = _k.norm3((lhs[0] - rhs[0], lhs[1] - rhs[1], lhs[2] - rhs[2]))
    return CompositionDiagnostics(
        lam=lam, numerator=Vec3(*num), denominator=den, residual=residual
    )
