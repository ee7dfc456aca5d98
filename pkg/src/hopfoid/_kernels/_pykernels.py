"""Pure-Python integer polynomial kernels.

Polynomials are little-endian lists of Python ints with no trailing zeros;
the zero polynomial is the empty list.  The compiled twin in
``_ckernels.pyx`` exposes exactly the same functions.
"""

from math import gcd


def trim(a):
    n = len(a)
    while n and a[n - 1] == 0:
        n -= 1
    return a[:n] if n != len(a) else a


def mul(a, b):
    if not a or not b:
        return []
    nb = len(b)
    out = [0] * (len(a) + nb - 1)
    for i, ai in enumerate(a):
        if ai:
            for j in range(nb):
                out[i + j] += ai * b[j]
    return trim(out)


def lincomb(a, ca, b, cb):
    """Return ``ca*a + cb*b`` for integer scalars ``ca``, ``cb``."""
    la, lb = len(a), len(b)
    n = la if la > lb else lb
    out = [0] * n
    if ca:
        for i in range(la):
            out[i] = ca * a[i]
    if cb:
        for i in range(lb):
            out[i] += cb * b[i]
    return trim(out)


def deriv(a):
    return trim([i * a[i] for i in range(1, len(a))])


def content(a):
    g = 0
    for c in a:
        g = gcd(g, c)
        if g == 1:
            break
    return g


def exact_div(a, d):
    return [c // d for c in a]


def pseudo_divmod(a, b):
    """Pseudo-division: ``lc(b)**k * a == q*b + r`` with ``deg r < deg b``.

    Returns ``(q, r, k)``.
    """
    if not b:
        raise ZeroDivisionError("pseudo-division by the zero polynomial")
    db = len(b) - 1
    lc = b[db]
    r = list(a)
    if len(r) - 1 < db:
        return [], trim(r), 0
    nq = len(r) - db
    q = [0] * nq
    k = 0
    for pos in range(len(r) - 1, db - 1, -1):
        c = r[pos]
        if c == 0:
            # still scale to keep the invariant uniform
            for i in range(nq):
                q[i] *= lc
            for i in range(pos):
                r[i] *= lc
            r[pos] = 0
            k += 1
            continue
        for i in range(nq):
            q[i] *= lc
        for i in range(pos + 1):
            r[i] *= lc
        k += 1
        shift = pos - db
        q[shift] += c
        for j in range(db + 1):
            r[shift + j] -= c * b[j]
    return trim(q), trim(r[:db]), k


def matvec(rows, vec):
    """Polynomial matrix times polynomial vector, all integer-coefficient.

    ``rows`` is a sequence of rows, each a sequence of coefficient lists.
    """
    out = []
    for row in rows:
        acc = []
        for entry, v in zip(row, vec):
            if entry and v:
                acc = lincomb(acc, 1, mul(entry, v), 1)
        out.append(acc)
    return out


def mpoly_mul(p, q):
    """Multiply sparse multivariate polynomials ``{exponent tuple: coeff}``."""
    out = {}
    get = out.get
    for ea, ca in p.items():
        for eb, cb in q.items():
            e = tuple([x + y for x, y in zip(ea, eb)])
            out[e] = get(e, 0) + ca * cb
    return {e: c for e, c in out.items() if c}
