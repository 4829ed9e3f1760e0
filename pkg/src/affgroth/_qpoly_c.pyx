# cython: language_level=3, boundscheck=False
"""Compiled twin of _qpoly_py: identical functions on the same tuple-of-int
contract.  Coefficients stay Python ints (pseudo-remainders overflow any
machine word), so the gain is loop and allocation overhead, not arithmetic.
"""

from math import gcd


def pstrip(c):
    cdef list out = list(c)
    cdef Py_ssize_t n = len(out)
    while n and out[n - 1] == 0:
        out.pop()
        n -= 1
    return tuple(out)


def padd(a, b):
    if len(a) < len(b):
        a, b = b, a
    cdef list out = list(a)
    cdef Py_ssize_t i, nb = len(b)
    for i in range(nb):
        out[i] = out[i] + b[i]
    return pstrip(out)


def psub(a, b):
    cdef Py_ssize_t na = len(a), nb = len(b), i
    cdef list out = list(a)
    if nb > na:
        out.extend([0] * (nb - na))
    for i in range(nb):
        out[i] = out[i] - b[i]
    return pstrip(out)


def pneg(a):
    return tuple(-x for x in a)


def pmul(a, b):
    cdef Py_ssize_t na = len(a), nb = len(b), i, j
    if na == 0 or nb == 0:
        return ()
    cdef list out = [0] * (na + nb - 1)
    for i in range(na):
        x = a[i]
        if x:
            for j in range(nb):
                y = b[j]
                if y:
                    out[i + j] = out[i + j] + x * y
    return pstrip(out)


def pcontent(a):
    g = 0
    for x in a:
        g = gcd(g, x)
    return g


def pprimitive(a):
    if not a:
        return a
    g = pcontent(a)
    if a[len(a) - 1] < 0:
        g = -g
    return tuple(x // g for x in a)


def pdivexact(a, b):
    cdef Py_ssize_t na = len(a), nb = len(b), da, db, k, i
    if na == 0:
        return ()
    if nb == 0:
        raise ZeroDivisionError("polynomial division by zero")
    da = na - 1
    db = nb - 1
    if da < db:
        raise ValueError("inexact polynomial division")
    lb = b[nb - 1]
    cdef list r = list(a)
    cdef list q = [0] * (da - db + 1)
    for k in range(da - db, -1, -1):
        c = r[db + k]
        if c:
            if c % lb:
                raise ValueError("inexact polynomial division")
            t = c // lb
            q[k] = t
            for i in range(db + 1):
                r[k + i] = r[k + i] - t * b[i]
    for i in range(na):
        if r[i]:
            raise ValueError("inexact polynomial division")
    return pstrip(q)


cdef _prem(a, b):
    cdef Py_ssize_t da = len(a) - 1, db = len(b) - 1, k, i
    lb = b[db]
    cdef list r = list(a)
    for k in range(da - db, -1, -1):
        c = r[db + k]
        for i in range(db + k):
            r[i] = r[i] * lb
        r[db + k] = 0
        if c:
            for i in range(db):
                r[k + i] = r[k + i] - c * b[i]
    del r[db:]
    return pstrip(r)


def pgcd(a, b):
    a = pprimitive(a)
    b = pprimitive(b)
    if not a:
        return b
    if not b:
        return a
    if len(a) < len(b):
        a, b = b, a
    while b:
        r = _prem(a, b)
        a, b = b, pprimitive(r)
    return a
