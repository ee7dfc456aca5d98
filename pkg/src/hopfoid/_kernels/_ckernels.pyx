# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled integer polynomial kernels (same API as ``_pykernels``)."""

from math import gcd


cpdef list trim(list a):
    cdef Py_ssize_t n = len(a)
    while n and a[n - 1] == 0:
        n -= 1
    return a[:n] if n != len(a) else a


cpdef list mul(list a, list b):
    cdef Py_ssize_t la = len(a), lb = len(b), i, j
    if la == 0 or lb == 0:
        return []
    cdef list out = [0] * (la + lb - 1)
    cdef object ai
    for i in range(la):
        ai = a[i]
        if ai:
            for j in range(lb):
                out[i + j] = out[i + j] + ai * b[j]
    return trim(out)


cpdef list lincomb(list a, object ca, list b, object cb):
    cdef Py_ssize_t la = len(a), lb = len(b), i
    cdef Py_ssize_t n = la if la > lb else lb
    cdef list out = [0] * n
    if ca:
        for i in range(la):
            out[i] = ca * a[i]
    if cb:
        for i in range(lb):
            out[i] = out[i] + cb * b[i]
    return trim(out)


cpdef list deriv(list a):
    cdef Py_ssize_t i
    return trim([i * a[i] for i in range(1, len(a))])


cpdef object content(list a):
    cdef object g = 0
    for c in a:
        g = gcd(g, c)
        if g == 1:
            break
    return g


cpdef list exact_div(list a, object d):
    return [c // d for c in a]


def pseudo_divmod(list a, list b):
    if not b:
        raise ZeroDivisionError("pseudo-division by the zero polynomial")
    cdef Py_ssize_t db = len(b) - 1, nq, pos, i, j, shift
    cdef object lc = b[db], c
    cdef list r = list(a)
    if len(r) - 1 < db:
        return [], trim(r), 0
    nq = len(r) - db
    cdef list q = [0] * nq
    cdef long k = 0
    for pos in range(len(r) - 1, db - 1, -1):
        c = r[pos]
        for i in range(nq):
            q[i] = q[i] * lc
        if c == 0:
            for i in range(pos):
                r[i] = r[i] * lc
            r[pos] = 0
            k += 1
            continue
        for i in range(pos + 1):
            r[i] = r[i] * lc
        k += 1
        shift = pos - db
        q[shift] = q[shift] + c
        for j in range(db + 1):
            r[shift + j] = r[shift + j] - c * b[j]
    return trim(q), trim(r[:db]), k


def matvec(rows, vec):
    cdef list out = [], acc
    for row in rows:
        acc = []
        for entry, v in zip(row, vec):
            if entry and v:
                acc = lincomb(acc, 1, mul(entry, v), 1)
        out.append(acc)
    return out


def mpoly_mul(dict p, dict q):
    cdef dict out = {}
    cdef tuple ea, eb, e
    cdef Py_ssize_t n, i
    for ea, ca in p.items():
        n = len(ea)
        for eb, cb in q.items():
            e = tuple([ea[i] + eb[i] for i in range(n)])
            v = out.get(e)
            out[e] = ca * cb if v is None else v + ca * cb
    return {e: c for e, c in out.items() if c}
