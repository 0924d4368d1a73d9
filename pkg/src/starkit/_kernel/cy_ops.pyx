# cython: language_level=3
# cython: boundscheck=False
# cython: wraparound=False
"""Compiled term-map kernels.

Same API and representation as py_ops: a term map is dict[exponents, coeff]
with coeff a normalized (rn, rd, jn, jd) tuple of Python ints.  Numerators
can exceed machine words, so arithmetic stays on Python ints; the speedup
comes from compiled dispatch in the loops and the tuple plumbing.
Keep this file in sync with py_ops.py.
"""

from math import gcd

CZERO = (0, 1, 0, 1)
CONE = (1, 1, 0, 1)


cpdef tuple qnorm(n, d):
    """Normalize the rational n/d. d must be nonzero."""
    if n == 0:
        return (0, 1)
    if d < 0:
        n, d = -n, -d
    g = gcd(n, d)
    if g > 1:
        return (n // g, d // g)
    return (n, d)


cpdef tuple cadd(tuple a, tuple b):
    rn, rd = qnorm(a[0] * b[1] + b[0] * a[1], a[1] * b[1])
    jn, jd = qnorm(a[2] * b[3] + b[2] * a[3], a[3] * b[3])
    return (rn, rd, jn, jd)


cpdef tuple csub(tuple a, tuple b):
    rn, rd = qnorm(a[0] * b[1] - b[0] * a[1], a[1] * b[1])
    jn, jd = qnorm(a[2] * b[3] - b[2] * a[3], a[3] * b[3])
    return (rn, rd, jn, jd)


cpdef tuple cneg(tuple a):
    return (-a[0], a[1], -a[2], a[3])


cpdef tuple cmul(tuple a, tuple b):
    # (x + yi)(u + vi) = (xu - yv) + (xv + yu)i
    xn, xd, yn, yd = a
    un, ud, vn, vd = b
    rn, rd = qnorm(xn * un * yd * vd - yn * vn * xd * ud, xd * ud * yd * vd)
    jn, jd = qnorm(xn * vn * yd * ud + yn * un * xd * vd, xd * vd * yd * ud)
    return (rn, rd, jn, jd)


cpdef dict madd(dict t1, dict t2):
    cdef dict out
    if not t1:
        return dict(t2)
    if not t2:
        return dict(t1)
    out = dict(t1)
    for e, c in t2.items():
        old = out.get(e)
        if old is None:
            out[e] = c
        else:
            s = cadd(old, c)
            if s[0] == 0 and s[2] == 0:
                del out[e]
            else:
                out[e] = s
    return out


cpdef dict msub(dict t1, dict t2):
    cdef dict out = dict(t1)
    for e, c in t2.items():
        old = out.get(e)
        if old is None:
            out[e] = (-c[0], c[1], -c[2], c[3])
        else:
            s = csub(old, c)
            if s[0] == 0 and s[2] == 0:
                del out[e]
            else:
                out[e] = s
    return out


cpdef dict mneg(dict t):
    cdef dict out = {}
    for e, c in t.items():
        out[e] = (-c[0], c[1], -c[2], c[3])
    return out


cpdef dict mscale(dict t, tuple c):
    cdef dict out = {}
    if c[0] == 0 and c[2] == 0:
        return out
    for e, a in t.items():
        p = cmul(a, c)
        if p[0] != 0 or p[2] != 0:
            out[e] = p
    return out


cdef inline tuple _eadd(tuple e1, tuple e2):
    cdef Py_ssize_t k, n = len(e1)
    cdef list out = [0] * n
    for k in range(n):
        out[k] = e1[k] + e2[k]
    return tuple(out)


cpdef dict mmul(dict t1, dict t2):
    cdef dict out = {}
    if not t1 or not t2:
        return out
    if len(t1) > len(t2):
        t1, t2 = t2, t1
    for e1, c1 in t1.items():
        for e2, c2 in t2.items():
            e = _eadd(e1, e2)
            p = cmul(c1, c2)
            old = out.get(e)
            if old is not None:
                p = cadd(old, p)
            out[e] = p
    cdef dict cleaned = {}
    for e, c in out.items():
        if c[0] != 0 or c[2] != 0:
            cleaned[e] = c
    return cleaned


cpdef dict maddmul(dict acc, dict t1, dict t2, tuple c):
    """acc += c * t1 * t2, mutating acc in place. Returns acc."""
    if not t1 or not t2 or (c[0] == 0 and c[2] == 0):
        return acc
    if len(t1) > len(t2):
        t1, t2 = t2, t1
    for e1, c1 in t1.items():
        cc = cmul(c1, c)
        for e2, c2 in t2.items():
            e = _eadd(e1, e2)
            p = cmul(cc, c2)
            old = acc.get(e)
            if old is None:
                acc[e] = p
            else:
                s = cadd(old, p)
                if s[0] == 0 and s[2] == 0:
                    del acc[e]
                else:
                    acc[e] = s
    return acc


cpdef dict mdiff(dict t, Py_ssize_t var):
    """Partial derivative with respect to variable index var (0-based)."""
    cdef dict out = {}
    for e, c in t.items():
        k = e[var]
        if k == 0:
            continue
        e2 = e[:var] + (k - 1,) + e[var + 1:]
        rn, rd = qnorm(c[0] * k, c[1])
        jn, jd = qnorm(c[2] * k, c[3])
        out[e2] = (rn, rd, jn, jd)
    return out
