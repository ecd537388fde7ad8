"""Pure-Python scalar kernels.

Vectors are 3-tuples of floats, matrices 9-tuples in row-major order.
This module is the fallback backend; ``_kernels_cy`` provides the same
functions compiled with Cython.  Keep the two implementations in lock-step.

The Cayley-route kernels (``cayley_rot9``, ``cayley_inv9``) and
``matmul_comp`` use compensated (double-double) arithmetic: the explicit
inverse times ``(1 + Qx)`` cancels terms of size ~||Q|| down to entries of
size 1, so naive evaluation loses about ||Q||*eps of absolute accuracy.
Compensation keeps the product route meaningful as a cross-check of the
direct rotation formula at large ||Q||.
"""

from __future__ import annotations

import math

BACKEND = "python"

_SPLIT = 134217729.0  # 2**27 + 1, Dekker splitting constant


def _two_sum(a, b):
    s = a + b
    t = s - a
    return s, (a - (s - t)) + (b - t)


def _quick_two_sum(a, b):
    # requires |a| >= |b| or a == 0
    s = a + b
    return s, b - (s - a)


def _two_prod(a, b):
    p = a * b
    ta = _SPLIT * a
    ahi = ta - (ta - a)
    alo = a - ahi
    tb = _SPLIT * b
    bhi = tb - (tb - b)
    blo = b - bhi
    return p, ((ahi * bhi - p) + ahi * blo + alo * bhi) + alo * blo


def _dd_add(x, y):
    s, e = _two_sum(x[0], y[0])
    e += x[1] + y[1]
    return _quick_two_sum(s, e)


def _dd_add_d(x, a):
    s, e = _two_sum(x[0], a)
    e += x[1]
    return _quick_two_sum(s, e)


def _dd_mul_d(x, a):
    p, e = _two_prod(x[0], a)
    e += x[1] * a
    return _quick_two_sum(p, e)


def _dd_div(x, y):
    q1 = x[0] / y[0]
    r = _dd_add(x, _dd_mul_d(y, -q1))
    q2 = r[0] / y[0]
    r = _dd_add(r, _dd_mul_d(y, -q2))
    q3 = r[0] / y[0]
    q, e = _quick_two_sum(q1, q2)
    return _dd_add_d((q, e), q3)


def dot3(a, b):
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]


def cross3(a, b):
    return (
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    )


def norm3(a):
    return math.sqrt(a[0] * a[0] + a[1] * a[1] + a[2] * a[2])


def matvec(m, v):
    x, y, z = v
    return (
        m[0] * x + m[1] * y + m[2] * z,
        m[3] * x + m[4] * y + m[5] * z,
        m[6] * x + m[7] * y + m[8] * z,
    )


def matmul(a, b):
    return (
        a[0] * b[0] + a[1] * b[3] + a[2] * b[6],
        a[0] * b[1] + a[1] * b[4] + a[2] * b[7],
        a[0] * b[2] + a[1] * b[5] + a[2] * b[8],
        a[3] * b[0] + a[4] * b[3] + a[5] * b[6],
        a[3] * b[1] + a[4] * b[4] + a[5] * b[7],
        a[3] * b[2] + a[4] * b[5] + a[5] * b[8],
        a[6] * b[0] + a[7] * b[3] + a[8] * b[6],
        a[6] * b[1] + a[7] * b[4] + a[8] * b[7],
        a[6] * b[2] + a[7] * b[5] + a[8] * b[8],
    )


def matmul_comp(a, b):
    """Matrix product with exact per-entry accumulation (for residual checks)."""
    out = []
    for i in (0, 3, 6):
        for j in (0, 1, 2):
            parts = []
            for k in (0, 1, 2):
                p, e = _two_prod(a[i + k], b[3 * k + j])
                parts.append(p)
                parts.append(e)
            out.append(math.fsum(parts))
    return tuple(out)


def transpose9(m):
    return (m[0], m[3], m[6], m[1], m[4], m[7], m[2], m[5], m[8])


def skew9(v):
    x, y, z = v
    return (0.0, -z, y, z, 0.0, -x, -y, x, 0.0)


def euler_rodrigues9(n, theta):
    """cos(t)*1 + sin(t)*(n x) + (1 - cos(t))*n n^T for a unit axis n."""
    x, y, z = n
    c = math.cos(theta)
    s = math.sin(theta)
    cc = 1.0 - c
    return (
        c + cc * x * x,
        cc * x * y - s * z,
        cc * x * z + s * y,
        cc * x * y + s * z,
        c + cc * y * y,
        cc * y * z - s * x,
        cc * x * z - s * y,
        cc * y * z + s * x,
        c + cc * z * z,
    )


def rot_from_rod9(q):
    """1 + 2*((Qx) + (Qx)^2)/(1 + Q.Q), diagonal in cancellation-free form."""
    x, y, z = q
    c = 2.0 / (1.0 + (x * x + y * y + z * z))
    return (
        1.0 - c * (y * y + z * z),
        c * (x * y - z),
        c * (x * z + y),
        c * (x * y + z),
        1.0 - c * (x * x + z * z),
        c * (y * z - x),
        c * (x * z - y),
        c * (y * z + x),
        1.0 - c * (x * x + y * y),
    )


def half_turn9(n):
    """2 n n^T - 1 for a unit axis n."""
    x, y, z = n
    return (
        2.0 * x * x - 1.0,
        2.0 * x * y,
        2.0 * x * z,
        2.0 * x * y,
        2.0 * y * y - 1.0,
        2.0 * y * z,
        2.0 * x * z,
        2.0 * y * z,
        2.0 * z * z - 1.0,
    )


def _den_dd(x, y, z):
    s = _dd_add(_dd_add(_two_prod(x, x), _two_prod(y, y)), _two_prod(z, z))
    return s, _dd_add_d(s, 1.0)


def cayley_inv9(q):
    """Explicit inverse of (1 - Qx): 1 + ((Qx) + (Qx)^2)/(1 + Q.Q)."""
    x, y, z = q
    _, den = _den_dd(x, y, z)
    qv = (x, y, z)
    k = skew9(qv)
    out = []
    for i in range(3):
        for j in range(3):
            num = _two_prod(qv[i], qv[j])
            if i == j:
                num = _dd_add_d(num, 1.0)
            else:
                num = _dd_add_d(num, k[3 * i + j])
            r = _dd_div(num, den)
            out.append(r[0] + r[1])
    return tuple(out)


def cayley_rot9(q):
    """(1 - Qx)^-1 (1 + Qx) with the inverse taken from its explicit form.

    Evaluated as (N @ B)/(1 + Q.Q) with N = (1+Q.Q)*1 + (Qx) + (Qx)^2 and
    B = 1 + (Qx), all in double-double arithmetic.
    """
    x, y, z = q
    qv = (x, y, z)
    s, den = _den_dd(x, y, z)
    neg_s = (-s[0], -s[1])
    k = skew9(qv)
    b = (1.0, k[1], k[2], k[3], 1.0, k[5], k[6], k[7], 1.0)
    n = []
    for i in range(3):
        for j in range(3):
            acc = _two_prod(qv[i], qv[j])
            if i == j:
                acc = _dd_add(acc, neg_s)
                acc = _dd_add(acc, den)
            else:
                acc = _dd_add_d(acc, k[3 * i + j])
            n.append(acc)
    out = []
    for i in range(3):
        for j in range(3):
            acc = (0.0, 0.0)
            for kk in range(3):
                bkj = b[3 * kk + j]
                if bkj != 0.0:
                    acc = _dd_add(acc, _dd_mul_d(n[3 * i + kk], bkj))
            r = _dd_div(acc, den)
            out.append(r[0] + r[1])
    return tuple(out)


def rod_from_rot9(m):
    """Rodrigues vector of a rotation matrix away from the angle-pi pole.

    Uses skew(Q) = (R - R^T)/(1 + trace R); the caller is responsible for
    routing trace(R) <= -1 + eps to the half-turn branch.
    """
    t = 1.0 + m[0] + m[4] + m[8]
    return ((m[7] - m[5]) / t, (m[2] - m[6]) / t, (m[3] - m[1]) / t)


def rot_residuals9(m):
    """(max |R^T R - 1| entry, |det R - 1|) for validity checks."""
    g = matmul(transpose9(m), m)
    r = max(
        abs(g[0] - 1.0),
        abs(g[4] - 1.0),
        abs(g[8] - 1.0),
        abs(g[1]),
        abs(g[2]),
        abs(g[3]),
        abs(g[5]),
        abs(g[6]),
        abs(g[7]),
    )
    det = (
        m[0] * (m[4] * m[8] - m[5] * m[7])
        - m[1] * (m[3] * m[8] - m[5] * m[6])
        + m[2] * (m[3] * m[7] - m[4] * m[6])
    )
    return r, abs(det - 1.0)


def compose_num_den(q2, q1):
    """Numerator Q1 + Q2 + Q2 x Q1 and denominator 1 - Q2.Q1 of the composition law."""
    cx, cy, cz = cross3(q2, q1)
    num = (q1[0] + q2[0] + cx, q1[1] + q2[1] + cy, q1[2] + q2[2] + cz)
    return num, 1.0 - dot3(q2, q1)
