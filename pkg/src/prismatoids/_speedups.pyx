# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled twins of the hot kernels in _fallback.py.

Arithmetic stays on Python objects (arbitrary-precision ints, or gmpy2.mpz
when the caller passes them), so exactness is untouched; the win is C-level
loops and indexing, plus a word-packed popcount pair scan that releases the
GIL and splits across OpenMP threads when available.
"""

from cpython.list cimport PyList_GET_ITEM
from cython.parallel cimport prange
from libc.stdint cimport int64_t, uint64_t
from libc.stdlib cimport free, malloc

cdef extern from *:
    """
    #if defined(__GNUC__) || defined(__clang__)
    #define PRISM_POPCOUNT(x) __builtin_popcountll(x)
    #else
    static int PRISM_POPCOUNT(unsigned long long x)
    { int c = 0; while (x) { x &= x - 1; ++c; } return c; }
    #endif
    """
    int PRISM_POPCOUNT(uint64_t x) nogil

NAME = "speedups"


def gauss_jordan_adjugate(rows):
    """Fraction-free Gauss-Jordan; returns (det, adjugate columns) or None."""
    cdef Py_ssize_t n = len(rows)
    cdef Py_ssize_t i, j, k, swap
    cdef list a = [list(row) for row in rows]
    cdef list rhs = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    cdef list ai, ak, ri, rk
    cdef object prev = 1
    cdef object p, f, zero = 0
    for k in range(n):
        ak = <list> PyList_GET_ITEM(a, k)
        if ak[k] == zero:
            swap = -1
            for i in range(k + 1, n):
                ai = <list> PyList_GET_ITEM(a, i)
                if ai[k] != zero:
                    swap = i
                    break
            if swap < 0:
                return None
            a[k], a[swap] = a[swap], a[k]
            rhs[k], rhs[swap] = rhs[swap], rhs[k]
            ak = <list> PyList_GET_ITEM(a, k)
        p = ak[k]
        rk = <list> PyList_GET_ITEM(rhs, k)
        for i in range(n):
            if i == k:
                continue
            ai = <list> PyList_GET_ITEM(a, i)
            ri = <list> PyList_GET_ITEM(rhs, i)
            f = ai[k]
            if f == zero:
                for j in range(n):
                    ai[j] = (p * ai[j]) // prev
                    ri[j] = (p * ri[j]) // prev
            else:
                for j in range(n):
                    ai[j] = (p * ai[j] - f * ak[j]) // prev
                    ri[j] = (p * ri[j] - f * rk[j]) // prev
        prev = p
    det = (<list> PyList_GET_ITEM(a, 0))[0]
    cdef list cols = []
    for j in range(n):
        cols.append(tuple((<list> PyList_GET_ITEM(rhs, i))[j] for i in range(n)))
    return det, cols


def product_table(rows, cols):
    """table[i][j] = <rows[i], cols[j]> over exact integers."""
    cdef list crows = [tuple(r) for r in rows]
    cdef list ccols = [tuple(c) for c in cols]
    cdef Py_ssize_t nr = len(crows)
    cdef Py_ssize_t nc = len(ccols)
    cdef Py_ssize_t i, j, k, m
    cdef list out = []
    cdef object s, x, y, zero = 0
    cdef tuple r, c
    cdef list line
    for i in range(nr):
        r = <tuple> PyList_GET_ITEM(crows, i)
        m = len(r)
        line = []
        for j in range(nc):
            c = <tuple> PyList_GET_ITEM(ccols, j)
            s = zero
            for k in range(m):
                x = r[k]
                if x != zero:
                    y = c[k]
                    if y != zero:
                        s = s + x * y
            line.append(s)
        out.append(line)
    return out


def eval_functional(func, rows):
    """Value of one linear functional on every row."""
    cdef tuple f = tuple(func)
    cdef list crows = [tuple(r) for r in rows]
    cdef Py_ssize_t m = len(f)
    cdef Py_ssize_t n = len(crows)
    cdef Py_ssize_t i, k
    cdef list out = []
    cdef object s, x, y, zero = 0
    cdef tuple r
    for i in range(n):
        r = <tuple> PyList_GET_ITEM(crows, i)
        s = zero
        for k in range(m):
            x = f[k]
            if x != zero:
                y = r[k]
                if y != zero:
                    s = s + x * y
        out.append(s)
    return out


def best_ratio(hvals, uvals):
    """Index minimizing (-h[q]) / u[q] over u[q] > 0, exactly; -1 if none."""
    cdef list hv = list(hvals)
    cdef list uv = list(uvals)
    cdef Py_ssize_t n = len(uv)
    cdef Py_ssize_t q
    cdef Py_ssize_t best = -1
    cdef object bh = 0, bu = 0, u, h, zero = 0
    for q in range(n):
        u = uv[q]
        if u <= zero:
            continue
        h = -hv[q]
        if best < 0 or h * bu < bh * u:
            best, bh, bu = q, h, u
    return best


def bareiss_echelon(rows):
    """Fraction-free row echelon form; returns (matrix rows, pivot columns)."""
    cdef list m = [list(row) for row in rows]
    cdef Py_ssize_t nrows = len(m)
    cdef Py_ssize_t ncols = len(m[0]) if nrows else 0
    cdef list pivots = []
    cdef object prev = 1, p, f, zero = 0
    cdef Py_ssize_t r = 0, c, i, j, pivot_row
    cdef list row_i, row_r
    for c in range(ncols):
        pivot_row = -1
        for i in range(r, nrows):
            if (<list> PyList_GET_ITEM(m, i))[c] != zero:
                pivot_row = i
                break
        if pivot_row < 0:
            continue
        m[r], m[pivot_row] = m[pivot_row], m[r]
        row_r = <list> PyList_GET_ITEM(m, r)
        p = row_r[c]
        for i in range(r + 1, nrows):
            row_i = <list> PyList_GET_ITEM(m, i)
            f = row_i[c]
            if f != zero:
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

    Exact integer pivoting; mutates W in place and returns the new
    determinant W[q_star][r].
    """
    cdef list lw = <list> W
    cdef Py_ssize_t n = len(lw)
    cdef Py_ssize_t rr = r
    cdef Py_ssize_t q, j
    cdef list wq
    cdef list row_star = list(<list> PyList_GET_ITEM(lw, q_star))
    cdef Py_ssize_t ncols = len(row_star)
    cdef object det2 = row_star[rr]
    cdef object d = det, wqr, rs
    for q in range(n):
        wq = <list> PyList_GET_ITEM(lw, q)
        wqr = wq[rr]
        for j in range(ncols):
            if j != rr:
                rs = row_star[j]
                wq[j] = (det2 * wq[j] - rs * wqr) // d
    return det2


def combine_hvals(W, i, hcol, q_star):
    """Support values of the neighbor facet across ridge column i."""
    cdef list lw = <list> W
    cdef Py_ssize_t n = len(lw)
    cdef Py_ssize_t ci = i, ch = hcol
    cdef list star = <list> PyList_GET_ITEM(lw, q_star)
    cdef object wi = star[ci]
    cdef object wh = star[ch]
    cdef list out = []
    cdef list wq
    cdef Py_ssize_t q
    for q in range(n):
        wq = <list> PyList_GET_ITEM(lw, q)
        out.append(wi * wq[ch] - wh * wq[ci])
    return out


def best_ratio_signed(W, i, hcol, sign):
    """best_ratio over oriented table columns: u = sign*W[:,i], h = sign*W[:,hcol]."""
    cdef list lw = <list> W
    cdef Py_ssize_t n = len(lw)
    cdef Py_ssize_t ci = i, ch = hcol
    cdef int s = sign
    cdef Py_ssize_t best = -1
    cdef object bh = 0, bu = 0, u, h, zero = 0
    cdef list wq
    cdef Py_ssize_t q
    for q in range(n):
        wq = <list> PyList_GET_ITEM(lw, q)
        u = wq[ci]
        if s < 0:
            u = -u
        if u <= zero:
            continue
        h = wq[ch]
        if s > 0:
            h = -h
        if best < 0 or h * bu < bh * u:
            best, bh, bu = q, h, u
    return best


def adjacency_pairs(masks, threshold, nthreads=1):
    """Unordered index pairs sharing >= threshold set bits.

    Packs the incidence masks into 64-bit words and scans all pairs without
    the GIL, splitting rows across OpenMP threads when compiled in.
    """
    cdef Py_ssize_t n = len(masks)
    cdef Py_ssize_t maxbits = 0, bits
    cdef Py_ssize_t i, j, w
    if n == 0:
        return [], 0
    for m in masks:
        bits = m.bit_length()
        if bits > maxbits:
            maxbits = bits
    cdef Py_ssize_t nwords = (maxbits + 63) // 64 if maxbits else 1
    cdef Py_ssize_t thr = threshold
    cdef int threads = max(1, int(nthreads))
    cdef uint64_t * words = <uint64_t *> malloc(n * nwords * sizeof(uint64_t))
    cdef int64_t * counts = <int64_t *> malloc(n * sizeof(int64_t))
    cdef int64_t * offsets = <int64_t *> malloc((n + 1) * sizeof(int64_t))
    if words == NULL or counts == NULL or offsets == NULL:
        free(words); free(counts); free(offsets)
        raise MemoryError()
    cdef object mask_obj, full = (1 << 64) - 1
    cdef int64_t total
    cdef int * out_j = NULL
    cdef list pairs = []
    try:
        for i in range(n):
            mask_obj = masks[i]
            for w in range(nwords):
                words[i * nwords + w] = <uint64_t> (mask_obj & full)
                mask_obj >>= 64
        for i in prange(n, nogil=True, num_threads=threads, schedule="dynamic"):
            counts[i] = _scan_row(words, n, nwords, thr, i, NULL, 0)
        offsets[0] = 0
        for i in range(n):
            offsets[i + 1] = offsets[i] + counts[i]
        total = offsets[n]
        if total:
            out_j = <int *> malloc(total * 2 * sizeof(int))
            if out_j == NULL:
                raise MemoryError()
            for i in prange(n, nogil=True, num_threads=threads, schedule="dynamic"):
                _scan_row(words, n, nwords, thr, i, out_j, offsets[i])
            for i in range(total):
                pairs.append((out_j[2 * i], out_j[2 * i + 1]))
    finally:
        free(words); free(counts); free(offsets)
        if out_j != NULL:
            free(out_j)
    return pairs, n * (n - 1) // 2


cdef int64_t _scan_row(uint64_t * words, Py_ssize_t n, Py_ssize_t nwords,
                       Py_ssize_t thr, Py_ssize_t i,
                       int * out, int64_t pos) noexcept nogil:
    cdef Py_ssize_t j, w, cnt
    cdef int64_t found = 0
    cdef uint64_t wi0
    cdef uint64_t * base = words + i * nwords
    if nwords == 1:
        wi0 = base[0]
        for j in range(i + 1, n):
            if PRISM_POPCOUNT(wi0 & words[j]) >= thr:
                if out != NULL:
                    out[2 * (pos + found)] = <int> i
                    out[2 * (pos + found) + 1] = <int> j
                found += 1
    else:
        for j in range(i + 1, n):
            cnt = 0
            for w in range(nwords):
                cnt += PRISM_POPCOUNT(base[w] & words[j * nwords + w])
            if cnt >= thr:
                if out != NULL:
                    out[2 * (pos + found)] = <int> i
                    out[2 * (pos + found) + 1] = <int> j
                found += 1
    return found
