# cython: language_level=3
# cython: boundscheck=False, wraparound=False
"""Compiled exact elimination kernels.

Same API as ``_pure``.  Arithmetic stays exact: the int64 fast path for
Bareiss elimination tracks magnitude bounds and falls back to
arbitrary-precision python ints the moment an intermediate could leave
the safe range, so results are identical to the pure implementation.
"""

from fractions import Fraction

cimport cython
from libc.stdlib cimport free, malloc

# Intermediates are bounded by 2*SAFE**2 < 2**63 in the int64 path.
DEF SAFE_LIMIT = 1518500249  # floor(sqrt(2**61))


def rank_int_rows(rows):
    """Rank of an integer matrix via fraction-free Bareiss elimination."""
    cdef Py_ssize_t nrows = len(rows)
    if nrows == 0:
        return 0
    cdef Py_ssize_t ncols = len(rows[0])
    if ncols == 0:
        return 0
    res = _rank_int64(rows, nrows, ncols)
    if res >= 0:
        return res
    return _rank_obj(rows, nrows, ncols)


@cython.cdivision(True)
cdef Py_ssize_t _rank_int64(rows, Py_ssize_t nrows, Py_ssize_t ncols):
    """int64 Bareiss; returns -1 when a value leaves the safe range."""
    cdef long long *m = <long long *> malloc(nrows * ncols * sizeof(long long))
    if m == NULL:
        raise MemoryError()
    cdef Py_ssize_t i, j, rank, col, piv
    cdef long long pv, f, v, prev
    cdef object x
    try:
        for i in range(nrows):
            row = rows[i]
            for j in range(ncols):
                x = row[j]
                if x > SAFE_LIMIT or x < -SAFE_LIMIT:
                    return -1
                m[i * ncols + j] = x
        rank = 0
        col = 0
        prev = 1
        while rank < nrows and col < ncols:
            piv = -1
            for i in range(rank, nrows):
                if m[i * ncols + col] != 0:
                    piv = i
                    break
            if piv < 0:
                col += 1
                continue
            if piv != rank:
                for j in range(ncols):
                    v = m[piv * ncols + j]
                    m[piv * ncols + j] = m[rank * ncols + j]
                    m[rank * ncols + j] = v
            pv = m[rank * ncols + col]
            for i in range(rank + 1, nrows):
                f = m[i * ncols + col]
                for j in range(col, ncols):
                    v = (pv * m[i * ncols + j] - f * m[rank * ncols + j]) / prev
                    if v > SAFE_LIMIT or v < -SAFE_LIMIT:
                        return -1
                    m[i * ncols + j] = v
            prev = pv
            rank += 1
            col += 1
        return rank
    finally:
        free(m)


cdef Py_ssize_t _rank_obj(rows, Py_ssize_t nrows, Py_ssize_t ncols):
    """Arbitrary-precision Bareiss with compiled loop control."""
    cdef list m = [list(r) for r in rows]
    cdef Py_ssize_t i, j, rank, col, piv
    cdef list mi, mr
    rank = 0
    col = 0
    prev = 1
    while rank < nrows and col < ncols:
        piv = -1
        for i in range(rank, nrows):
            if (<list> m[i])[col] != 0:
                piv = i
                break
        if piv < 0:
            col += 1
            continue
        if piv != rank:
            m[piv], m[rank] = m[rank], m[piv]
        mr = <list> m[rank]
        pv = mr[col]
        for i in range(rank + 1, nrows):
            mi = <list> m[i]
            f = mi[col]
            for j in range(col, ncols):
                mi[j] = (pv * mi[j] - f * mr[j]) // prev
        prev = pv
        rank += 1
        col += 1
    return rank


def rref_frac(rows):
    """Reduced row echelon form over Fraction: (rank, pivots, rref rows)."""
    cdef list m = [[Fraction(x) for x in r] for r in rows]
    cdef Py_ssize_t nrows = len(m)
    cdef Py_ssize_t ncols = len(m[0]) if nrows else 0
    cdef list pivots = []
    cdef Py_ssize_t rank = 0, col, i, piv, j
    cdef list mr, mi
    for col in range(ncols):
        piv = -1
        for i in range(rank, nrows):
            if (<list> m[i])[col] != 0:
                piv = i
                break
        if piv < 0:
            continue
        m[piv], m[rank] = m[rank], m[piv]
        mr = <list> m[rank]
        inv = 1 / mr[col]
        for j in range(ncols):
            mr[j] = mr[j] * inv
        for i in range(nrows):
            if i != rank:
                mi = <list> m[i]
                f = mi[col]
                if f != 0:
                    for j in range(ncols):
                        mi[j] = mi[j] - f * mr[j]
        pivots.append(col)
        rank += 1
        if rank == nrows:
            break
    return rank, pivots, m
