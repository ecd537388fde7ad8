# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled scalar kernels; mirrors ``_kernels_py`` function for function.

Compensated arithmetic uses the C fma() instruction for exact products,
so do not compile this module with -ffast-math.
"""

from libc.math cimport cos, sin, sqrt, fma

BACKEND = "compiled"


cdef struct dd:
    double hi
    double lo


cdef inline dd _two_sum(double a, double b) noexcept:
    cdef dd r
    cdef double t
    r.hi = a + b
    t = r.hi - a
    r.lo = (a - (r.hi - t)) + (b - t)
    return r


cdef inline dd _quick_two_sum(double a, double b) noexcept:
    cdef dd r
    r.hi = a + b
    r.lo = b - (r.hi - a)
    return r


cdef inline dd _two_prod(double a, double b) noexcept:
    cdef dd r
    r.hi = a * b
    r.lo = fma(a, b, -r.hi)
    return r


cdef inline dd _dd_add(dd x, dd y) noexcept:
    cdef dd s = _two_sum(x.hi, y.hi)
    return _quick_two_sum(s.hi, s.lo + x.lo + y.lo)


cdef inline dd _dd_add_d(dd x, double a) noexcept:
    cdef dd s = _two_sum(x.hi, a)
    return _quick_two_sum(s.hi, s.lo + x.lo)


cdef inline dd _dd_mul_d(dd x, double a) noexcept:
    cdef dd p = _two_prod(x.hi, a)
    return _quick_two_sum(p.hi, p.lo + x.lo * a)


cdef inline dd _dd_div(dd x, dd y) noexcept:
    cdef double q1, q2, q3
    cdef dd r, q
    q1 = x.hi / y.hi
    r = _dd_add(x, _dd_mul_d(y, -q1))
    q2 = r.hi / y.hi
    r = _dd_add(r, _dd_mul_d(y, -q2))
    q3 = r.hi / y.hi
    q = _quick_two_sum(q1, q2)
    return _dd_add_d(q, q3)


def dot3(a, b):
    cdef double ax = a[0], ay = a[1], az = a[2]
    cdef double bx = b[0], by = b[1], bz = b[2]
    return ax * bx + ay * by + az * bz


def cross3(a, b):
    cdef double ax = a[0], ay = a[1], az = a[2]
    cdef double bx = b[0], by = b[1], bz = b[2]
    return (ay * bz - az * by, az * bx - ax * bz, ax * by - ay * bx)


def norm3(a):
    cdef double x = a[0], y = a[1], z = a[2]
    return sqrt(x * x + y * y + z * z)


def matvec(m, v):
    cdef double m0 = m[0], m1 = m[1], m2 = m[2], m3 = m[3], m4 = m[4]
    cdef double m5 = m[5], m6 = m[6], m7 = m[7], m8 = m[8]
    cdef double x = v[0], y = v[1], z = v[2]
    return (
        m0 * x + m1 * y + m2 * z,
        m3 * x + m4 * y + m5 * z,
        m6 * x + m7 * y + m8 * z,
    )


cdef inline void _unpack9(object m, double* o):
    cdef int i
    for i in range(9):
        o[i] = m[i]


def matmul(a, b):
    cdef double x[9]
    cdef double y[9]
    _unpack9(a, x)
    _unpack9(b, y)
    return (
        x[0] * y[0] + x[1] * y[3] + x[2] * y[6],
        x[0] * y[1] + x[1] * y[4] + x[2] * y[7],
        x[0] * y[2] + x[1] * y[5] + x[2] * y[8],
        x[3] * y[0] + x[4] * y[3] + x[5] * y[6],
        x[3] * y[1] + x[4] * y[4] + x[5] * y[7],
        x[3] * y[2] + x[4] * y[5] + x[5] * y[8],
        x[6] * y[0] + x[7] * y[3] + x[8] * y[6],
        x[6] * y[1] + x[7] * y[4] + x[8] * y[7],
        x[6] * y[2] + x[7] * y[5] + x[8] * y[8],
    )


def matmul_comp(a, b):
    cdef double x[9]
    cdef double y[9]
    cdef double out[9]
    cdef int i, j, k
    cdef dd acc, p
    _unpack9(a, x)
    _unpack9(b, y)
    for i in range(3):
        for j in range(3):
            acc.hi = 0.0
            acc.lo = 0.0
            for k in range(3):
                p = _two_prod(x[3 * i + k], y[3 * k + j])
                acc = _dd_add(acc, p)
            out[3 * i + j] = acc.hi + acc.lo
    return (out[0], out[1], out[2], out[3], out[4], out[5], out[6], out[7], out[8])


def transpose9(m):
    cdef double x[9]
    _unpack9(m, x)
    return (x[0], x[3], x[6], x[1], x[4], x[7], x[2], x[5], x[8])


def skew9(v):
    cdef double x = v[0], y = v[1], z = v[2]
    return (0.0, -z, y, z, 0.0, -x, -y, x, 0.0)


def euler_rodrigues9(n, theta):
    cdef double x = n[0], y = n[1], z = n[2]
    cdef double t = theta
    cdef double c = cos(t)
    cdef double s = sin(t)
    cdef double cc = 1.0 - c
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
    cdef double x = q[0], y = q[1], z = q[2]
    cdef double c = 2.0 / (1.0 + (x * x + y * y + z * z))
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
    cdef double x = n[0], y = n[1], z = n[2]
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


def cayley_inv9(q):
    cdef double qv[3]
    cdef double k[9]
    cdef double out[9]
    cdef int i, j
    cdef dd s, den, num
    qv[0] = q[0]
    qv[1] = q[1]
    qv[2] = q[2]
    s = _dd_add(_dd_add(_two_prod(qv[0], qv[0]), _two_prod(qv[1], qv[1])),
                _two_prod(qv[2], qv[2]))
    den = _dd_add_d(s, 1.0)
    k[0] = 0.0
    k[1] = -qv[2]
    k[2] = qv[1]
    k[3] = qv[2]
    k[4] = 0.0
    k[5] = -qv[0]
    k[6] = -qv[1]
    k[7] = qv[0]
    k[8] = 0.0
    for i in range(3):
        for j in range(3):
            num = _two_prod(qv[i], qv[j])
            if i == j:
                num = _dd_add_d(num, 1.0)
            else:
                num = _dd_add_d(num, k[3 * i + j])
            num = _dd_div(num, den)
            out[3 * i + j] = num.hi + num.lo
    return (out[0], out[1], out[2], out[3], out[4], out[5], out[6], out[7], out[8])


def cayley_rot9(q):
    cdef double qv[3]
    cdef double k[9]
    cdef double b[9]
    cdef double out[9]
    cdef int i, j, kk
    cdef double bkj
    cdef dd s, neg_s, den, acc
    cdef dd n[9]
    qv[0] = q[0]
    qv[1] = q[1]
    qv[2] = q[2]
    s = _dd_add(_dd_add(_two_prod(qv[0], qv[0]), _two_prod(qv[1], qv[1])),
                _two_prod(qv[2], qv[2]))
    den = _dd_add_d(s, 1.0)
    neg_s.hi = -s.hi
    neg_s.lo = -s.lo
    k[0] = 0.0
    k[1] = -qv[2]
    k[2] = qv[1]
    k[3] = qv[2]
    k[4] = 0.0
    k[5] = -qv[0]
    k[6] = -qv[1]
    k[7] = qv[0]
    k[8] = 0.0
    for i in range(9):
        b[i] = k[i]
    b[0] = 1.0
    b[4] = 1.0
    b[8] = 1.0
    for i in range(3):
        for j in range(3):
            acc = _two_prod(qv[i], qv[j])
            if i == j:
                acc = _dd_add(acc, neg_s)
                acc = _dd_add(acc, den)
            else:
                acc = _dd_add_d(acc, k[3 * i + j])
            n[3 * i + j] = acc
    for i in range(3):
        for j in range(3):
            acc.hi = 0.0
            acc.lo = 0.0
            for kk in range(3):
                bkj = b[3 * kk + j]
                if bkj != 0.0:
                    acc = _dd_add(acc, _dd_mul_d(n[3 * i + kk], bkj))
            acc = _dd_div(acc, den)
            out[3 * i + j] = acc.hi + acc.lo
    return (out[0], out[1], out[2], out[3], out[4], out[5], out[6], out[7], out[8])


def rod_from_rot9(m):
    cdef double x[9]
    cdef double t
    _unpack9(m, x)
    t = 1.0 + x[0] + x[4] + x[8]
    return ((x[7] - x[5]) / t, (x[2] - x[6]) / t, (x[3] - x[1]) / t)


def rot_residuals9(m):
    cdef double x[9]
    cdef double g[9]
    cdef double r, det, v
    cdef int i, j, k
    _unpack9(m, x)
    for i in range(3):
        for j in range(3):
            v = 0.0
            for k in range(3):
                v += x[3 * k + i] * x[3 * k + j]
            g[3 * i + j] = v
    r = 0.0
    for i in range(3):
        for j in range(3):
            v = g[3 * i + j] - (1.0 if i == j else 0.0)
            if v < 0.0:
                v = -v
            if v > r:
                r = v
    det = (x[0] * (x[4] * x[8] - x[5] * x[7])
           - x[1] * (x[3] * x[8] - x[5] * x[6])
           + x[2] * (x[3] * x[7] - x[4] * x[6]))
    v = det - 1.0
    if v < 0.0:
        v = -v
    return (r, v)


def compose_num_den(q2, q1):
    cdef double ax = q2[0], ay = q2[1], az = q2[2]
    cdef double bx = q1[0], by = q1[1], bz = q1[2]
    cdef double cx = ay * bz - az * by
    cdef double cy = az * bx - ax * bz
    cdef double cz = ax * by - ay * bx
    return ((bx + ax + cx, by + ay + cy, bz + az + cz),
            1.0 - (ax * bx + ay * by + az * bz))
