# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled twin of `_kernel_py`.

Coefficients stay arbitrary-precision Python ints (PyObject arithmetic);
the speedup comes from C-level loop and index handling in the dense
polynomial and Riemann-sum inner loops.  Semantics must match
`_kernel_py` exactly; `tests/test_kernels.py` enforces parity.
"""

from math import gcd

BACKEND = "compiled"


cpdef list poly_trim(list a):
    while a and a[len(a) - 1] == 0:
        a.pop()
    return a


cpdef list poly_mul(list a, list b):
    cdef Py_ssize_t la = len(a), lb = len(b), i, j
    if la == 0 or lb == 0:
        return []
    cdef list out = [0] * (la + lb - 1)
    for i in range(la):
        ai = a[i]
        if ai == 0:
            continue
        for j in range(lb):
            out[i + j] = out[i + j] + ai * b[j]
    return poly_trim(out)


cpdef poly_content(list a):
    cdef Py_ssize_t i
    g = 0
    for i in range(len(a)):
        g = gcd(g, a[i])
        if g == 1:
            return 1
    return g


cpdef tuple poly_primitive(list a):
    cdef Py_ssize_t i
    if not a:
        return 0, []
    c = poly_content(a)
    if a[len(a) - 1] < 0:
        c = -c
    if c == 1:
        return 1, list(a)
    cdef list out = [0] * len(a)
    for i in range(len(a)):
        out[i] = a[i] // c
    return c, out


cpdef list poly_pseudo_rem(list a, list b):
    cdef Py_ssize_t db = len(b) - 1, d, i
    if db < 0:
        raise ZeroDivisionError("pseudo-remainder by zero polynomial")
    lb = b[db]
    cdef list r = list(a)
    while r and len(r) - 1 >= db:
        d = len(r) - 1 - db
        lead = r[len(r) - 1]
        for i in range(len(r)):
            r[i] = r[i] * lb
        for i in range(db + 1):
            r[i + d] = r[i + d] - lead * b[i]
        poly_trim(r)
    return r


cpdef list poly_gcd(list a, list b):
    cdef list r
    _, a = poly_primitive(a)
    _, b = poly_primitive(b)
    if not a:
        return b
    if not b:
        return a
    if len(a) < len(b):
        a, b = b, a
    while b:
        r = poly_pseudo_rem(a, b)
        _, r = poly_primitive(r)
        a, b = b, r
    return a


cpdef list poly_divexact(list a, list b):
    cdef Py_ssize_t da, db, k, i
    if not b:
        raise ZeroDivisionError("exact division by zero polynomial")
    if not a:
        return []
    da = len(a) - 1
    db = len(b) - 1
    if da < db:
        raise ArithmeticError("inexact polynomial division")
    cdef list r = list(a)
    lb = b[db]
    cdef list q = [0] * (da - db + 1)
    for k in range(da - db, -1, -1):
        lead = r[db + k]
        if lead % lb:
            raise ArithmeticError("inexact polynomial division")
        c = lead // lb
        q[k] = c
        if c != 0:
            for i in range(db + 1):
                r[i + k] = r[i + k] - c * b[i]
    for i in range(len(r)):
        if r[i] != 0:
            raise ArithmeticError("inexact polynomial division")
    return poly_trim(q)


cpdef poly_eval_int(list a, x):
    cdef Py_ssize_t i
    acc = 0
    for i in range(len(a) - 1, -1, -1):
        acc = acc * x + a[i]
    return acc


cpdef alt_weighted_int_sum(anum, bden, count, list g):
    cdef Py_ssize_t xi, n = count
    cdef int sign = 1
    total = 0
    apow = 1
    bpow = bden ** (count - 1) if bden != 1 else 1
    for xi in range(n):
        gval = poly_eval_int(g, xi)
        if gval != 0:
            if sign > 0:
                total = total + apow * bpow * gval
            else:
                total = total - apow * bpow * gval
        apow = apow * anum
        if bden != 1 and xi < n - 1:
            bpow = bpow // bden
        sign = -sign
    return total


cpdef alt_weighted_mod_sum(unit, count, list g, modulus):
    cdef Py_ssize_t xi, i, n = count
    cdef int sign = 1
    total = 0
    upow = 1
    for xi in range(n):
        acc = 0
        for i in range(len(g) - 1, -1, -1):
            acc = (acc * xi + g[i]) % modulus
        if acc != 0:
            if sign > 0:
                total = (total + upow * acc) % modulus
            else:
                total = (total - upow * acc) % modulus
        upow = (upow * unit) % modulus
        sign = -sign
    return total % modulus
