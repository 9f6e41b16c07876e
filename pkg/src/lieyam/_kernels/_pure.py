"""Pure-Python exact elimination kernels.

Same API as the compiled module ``_speed``; selected at import time when
the extension is unavailable (or LIEYAM_FORCE_PURE is set).
"""

from fractions import Fraction


def rank_int_rows(rows):
    """Rank of an integer matrix via fraction-free Bareiss elimination.

    ``rows`` is a list of lists of python ints; it is not modified.
    """
    m = [list(r) for r in rows]
    nrows = len(m)
    ncols = len(m[0]) if nrows else 0
    rank = 0
    prev = 1
    col = 0
    while rank < nrows and col < ncols:
        piv = -1
        for i in range(rank, nrows):
            if m[i][col]:
                piv = i
                break
        if piv < 0:
            col += 1
            continue
        if piv != rank:
            m[piv], m[rank] = m[rank], m[piv]
        pv = m[rank][col]
        for i in range(rank + 1, nrows):
            mi = m[i]
            mr = m[rank]
            f = mi[col]
            for j in range(col, ncols):
                # Bareiss: the division by the previous pivot is exact.
                mi[j] = (pv * mi[j] - f * mr[j]) // prev
        prev = pv
        rank += 1
        col += 1
    return rank


def rref_frac(rows):
    """Reduced row echelon form over Fraction.

    Returns (rank, pivot column list, rref rows).  ``rows`` is not
    modified; entries must be Fraction/int.
    """
    m = [[Fraction(x) for x in r] for r in rows]
    nrows = len(m)
    ncols = len(m[0]) if nrows else 0
    pivots = []
    rank = 0
    for col in range(ncols):
        piv = -1
        for i in range(rank, nrows):
            if m[i][col]:
                piv = i
                break
        if piv < 0:
            continue
        m[piv], m[rank] = m[rank], m[piv]
        inv = 1 / m[rank][col]
        m[rank] = [x * inv for x in m[rank]]
        for i in range(nrows):
            if i != rank and m[i][col]:
                f = m[i][col]
                mr = m[rank]
                m[i] = [a - f * b for a, b in zip(m[i], mr)]
        pivots.append(col)
        rank += 1
        if rank == nrows:
            break
    return rank, pivots, m
