# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled elimination kernels.

Same contract as ``moddef._kernel_py``: reduced row-echelon form plus pivot
columns. The rational routine eliminates on integer-scaled rows with content
reduction and divides by the pivots at the end, which avoids per-operation
normalization; the modular routine runs in C integers whenever the modulus
fits a machine word. The echelon form is unique, so outputs are
bit-identical to the pure kernel's.
"""

from fractions import Fraction
from math import gcd

from libc.stdlib cimport free, malloc

_ZERO = Fraction(0)
_ONE = Fraction(1)


def rref_rational(list rows, Py_ssize_t ncols):
    cdef Py_ssize_t nrows = len(rows)
    cdef Py_ssize_t r, c, i, j, pr
    cdef list irows = [], row, prow, pivots = []
    cdef object f, pv, pj, g, L, x

    for i in range(nrows):
        row = rows[i]
        L = 1
        for j in range(ncols):
            x = (<object>row[j]).denominator
            L = L * x // gcd(L, x)
        irows.append([(<object>row[j]).numerator * (L // (<object>row[j]).denominator)
                      for j in range(ncols)])

    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        pr = -1
        for i in range(r, nrows):
            if (<list>irows[i])[c] != 0:
                pr = i
                break
        if pr == -1:
            continue
        if pr != r:
            irows[pr], irows[r] = irows[r], irows[pr]
        prow = <list>irows[r]
        pv = prow[c]
        for i in range(nrows):
            if i == r:
                continue
            row = <list>irows[i]
            f = row[c]
            if f == 0:
                continue
            # whole-row update: the cross-multiplication scales every entry
            row[c] = 0
            g = 0
            for j in range(ncols):
                if j == c:
                    continue
                pj = prow[j]
                if pj != 0:
                    x = row[j] * pv - pj * f
                else:
                    x = row[j] * pv
                row[j] = x
                if x != 0:
                    g = gcd(g, x)
            if g > 1:
                for j in range(ncols):
                    x = row[j]
                    if x != 0:
                        row[j] = x // g
        pivots.append(c)
        r += 1

    out = []
    for i in range(nrows):
        row = <list>irows[i]
        if i < len(pivots):
            pv = row[<Py_ssize_t>pivots[i]]
            out.append([Fraction(row[j], pv) for j in range(ncols)])
        else:
            out.append([_ZERO] * ncols)
    return out, tuple(pivots)


cdef long long _inv_mod(long long a, long long p):
    # extended Euclid; a is nonzero mod the prime p
    cdef long long t = 0, newt = 1, r = p, newr = a, q, tmp
    while newr != 0:
        q = r // newr
        tmp = t - q * newt
        t = newt
        newt = tmp
        tmp = r - q * newr
        r = newr
        newr = tmp
    if t < 0:
        t += p
    return t


def rref_mod(list rows, Py_ssize_t ncols, object p):
    cdef Py_ssize_t nrows = len(rows)
    if int(p) <= 2147483647:
        return _rref_mod_small(rows, ncols, <long long>p)
    return _rref_mod_big(rows, ncols, p)


cdef _rref_mod_small(list rows, Py_ssize_t ncols, long long p):
    cdef Py_ssize_t nrows = len(rows)
    cdef Py_ssize_t r, c, i, j, pr, base, pbase
    cdef long long f, pv, inv, x
    cdef list pivots = []
    cdef long long *m
    if nrows == 0 or ncols == 0:
        return [list(row) for row in rows], ()
    m = <long long *>malloc(nrows * ncols * sizeof(long long))
    if m == NULL:
        raise MemoryError()
    try:
        for i in range(nrows):
            row = rows[i]
            base = i * ncols
            for j in range(ncols):
                m[base + j] = <long long>row[j]
        r = 0
        for c in range(ncols):
            if r == nrows:
                break
            pr = -1
            for i in range(r, nrows):
                if m[i * ncols + c] != 0:
                    pr = i
                    break
            if pr == -1:
                continue
            if pr != r:
                pbase = pr * ncols
                base = r * ncols
                for j in range(c, ncols):
                    x = m[pbase + j]
                    m[pbase + j] = m[base + j]
                    m[base + j] = x
            pbase = r * ncols
            pv = m[pbase + c]
            if pv != 1:
                inv = _inv_mod(pv, p)
                for j in range(c, ncols):
                    m[pbase + j] = m[pbase + j] * inv % p
            for i in range(nrows):
                if i == r:
                    continue
                base = i * ncols
                f = m[base + c]
                if f == 0:
                    continue
                for j in range(c, ncols):
                    x = m[pbase + j]
                    if x != 0:
                        m[base + j] = (m[base + j] - f * x) % p
                        if m[base + j] < 0:
                            m[base + j] += p
            pivots.append(c)
            r += 1
        out = []
        for i in range(nrows):
            base = i * ncols
            out.append([m[base + j] for j in range(ncols)])
        return out, tuple(pivots)
    finally:
        free(m)


cdef _rref_mod_big(list rows, Py_ssize_t ncols, object p):
    # object-level arithmetic; moduli beyond a machine word are rare
    cdef Py_ssize_t nrows = len(rows)
    cdef Py_ssize_t r, c, i, j, pr
    cdef list pivots = [], row, piv
    cdef object f, pval, inv, pj
    rows = [list(row) for row in rows]
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        pr = -1
        for i in range(r, nrows):
            if (<list>rows[i])[c] != 0:
                pr = i
                break
        if pr == -1:
            continue
        if pr != r:
            rows[pr], rows[r] = rows[r], rows[pr]
        piv = <list>rows[r]
        pval = piv[c]
        if pval != 1:
            inv = pow(pval, p - 2, p)
            piv[c] = 1
            for j in range(c + 1, ncols):
                if piv[j] != 0:
                    piv[j] = piv[j] * inv % p
        for i in range(nrows):
            if i == r:
                continue
            row = <list>rows[i]
            f = row[c]
            if f == 0:
                continue
            row[c] = 0
            for j in range(c + 1, ncols):
                pj = piv[j]
                if pj != 0:
                    row[j] = (row[j] - f * pj) % p
        pivots.append(c)
        r += 1
    return rows, tuple(pivots)
