"""Pure-Python implementations of the hot kernels.

`prismatoids.backend` prefers the compiled `_speedups` module and falls back
to this one.  Both expose the same functions:

    gauss_jordan_adjugate(rows)      fraction-free inverse data of a matrix
    product_table(rows, cols)        dense integer matrix product
    eval_functional(func, rows)      one functional against many rows
    best_ratio(hvals, uvals)         argmin of (-h/u) over u > 0
    adjacency_pairs(masks, thresh)   bitset pair scan with popcount filter
"""

from __future__ import annotations

NAME = "pure"


def gauss_jordan_adjugate(rows):
    """Fraction-free Gauss-Jordan inverse data of a square integer matrix.

    Returns (det, cols) with det != 0 and A @ cols[i] == det * e_i, i.e. the
    columns of the adjugate up to a common sign.  Returns None for singular
    input.  All divisions in the elimination are exact (entries stay minors
    of the input), so everything runs over plain integers.
    """
    a = [list(map(int, row)) for row in rows]
    n = len(a)
    rhs = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    prev = 1
    for k in range(n):
        if not a[k][k]:
            swap = next((i for i in range(k + 1, n) if a[i][k]), None)
            if swap is None:
                return None
            a[k], a[swap] = a[swap], a[k]
            rhs[k], rhs[swap] = rhs[swap], rhs[k]
        p = a[k][k]
        for i in range(n):
            if i == k:
                continue
            f = a[i][k]
            ai, ak = a[i], a[k]
            ri, rk = rhs[i], rhs[k]
            for j in range(n):
                ai[j] = (p * ai[j] - f * ak[j]) // prev
                ri[j] = (p * ri[j] - f * rk[j]) // prev
        prev = p
    det = a[0][0]
    if any(a[i][i] != det for i in range(1, n)):  # pragma: no cover - sanity
        raise ArithmeticError("fraction-free elimination lost exactness")
    cols = [tuple(rhs[i][j] for i in range(n)) for j in range(n)]
    return det, cols


def product_table(rows, cols):
    """table[i][j] = <rows[i], cols[j]> over exact integers."""
    out = []
    for r in rows:
        line = []
        for c in cols:
            s = 0
            for a, b in zip(r, c):
                if a and b:
                    s += a * b
            line.append(s)
        out.append(line)
    return out


def eval_functional(func, rows):
    """Value of one linear functional on every row."""
    out = []
    for r in rows:
        s = 0
        for a, b in zip(func, r):
            if a and b:
                s += a * b
        out.append(s)
    return out


def best_ratio(hvals, uvals):
    """Index minimizing (-h[q]) / u[q] over entries with u[q] > 0, else -1.

    h[q] <= 0 is assumed, so the ratio is nonnegative; comparisons are done
    by cross-multiplication to stay exact.
    """
    best = -1
    bh = bu = 0
    for q in range(len(uvals)):
        u = uvals[q]
        if u <= 0:
            continue
        h = -hvals[q]
        if best < 0 or h * bu < bh * u:
            best, bh, bu = q, h, u
    return best


def bareiss_echelon(rows):
    """Fraction-free row echelon form; returns (matrix rows, pivot columns).

    Intermediate entries are minors of the input, and the division by the
    previous pivot is exact.
    """
    m = [list(map(int, row)) for row in rows]
    nrows = len(m)
    ncols = len(m[0]) if nrows else 0
    pivots = []
    prev = 1
    r = 0
    for c in range(ncols):
        pivot_row = None
        for i in range(r, nrows):
            if m[i][c]:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        m[r], m[pivot_row] = m[pivot_row], m[r]
        p = m[r][c]
        for i in range(r + 1, nrows):
            f = m[i][c]
            row_i = m[i]
            row_r = m[r]
            if f:
                for j in range(c, ncols):
                    row_i[j] = (p * row_i[j] - f * row_r[j]) // prev
            else:
                for j in range(c, ncols):
                    row_i[j] = (p * row_i[j]) // prev
        pivots.append(c)
        prev = p
        r += 1
        if r == nrows:
            break
    return m[:r], pivots


def pivot_update(W, det, r, q_star):
    """Exchange matrix row r for point q_star in the inverse-value table.

    W[q][j] = <hom(q), adjugate column j> for the current basis matrix; the
    exchange is the classical integer pivot: every division is exact because
    the result is again adjugate data of an integer matrix.  Mutates W in
    place and returns the new determinant W[q_star][r].
    """
    det2 = W[q_star][r]
    row_star = list(W[q_star])
    ncols = len(row_star)
    for q in range(len(W)):
        wq = W[q]
        wqr = wq[r]
        for j in range(ncols):
            if j != r:
                wq[j] = (det2 * wq[j] - row_star[j] * wqr) // det
    return det2


def combine_hvals(W, i, hcol, q_star):
    """Support values of the neighbor facet across ridge column i.

    The new facet functional is u(q*) h - h(q*) u; its value at every point
    comes straight out of the table, with orientation signs cancelling.
    """
    wi = W[q_star][i]
    wh = W[q_star][hcol]
    return [wi * wq[hcol] - wh * wq[i] for wq in W]


def best_ratio_signed(W, i, hcol, sign):
    """best_ratio over oriented table columns: u = sign*W[:,i], h = sign*W[:,hcol]."""
    best = -1
    bh = bu = 0
    for q in range(len(W)):
        u = W[q][i]
        if sign < 0:
            u = -u
        if u <= 0:
            continue
        h = W[q][hcol]
        if sign > 0:
            h = -h
        if best < 0 or h * bu < bh * u:
            best, bh, bu = q, h, u
    return best


def adjacency_pairs(masks, threshold, nthreads=1):
    """All unordered index pairs whose masks share >= threshold set bits.

    Returns (pairs, examined) where pairs is a list of (i, j) with i < j and
    examined counts every pair scanned.  The pure version ignores nthreads.
    """
    n = len(masks)
    pairs = []
    append = pairs.append
    for i in range(n):
        mi = masks[i]
        for j in range(i + 1, n):
            if (mi & masks[j]).bit_count() >= threshold:
                append((i, j))
    return pairs, n * (n - 1) // 2
