# cython: boundscheck=False, wraparound=False, initializedcheck=False, cdivision=True
"""Compiled enumeration kernels; twin of `hyperlah._pure`.

Same recursions, same results, C speed.  `hyperlah._kernels` picks this
module when the extension is built and falls back to the pure twin
otherwise.
"""

from libc.stdlib cimport calloc, free

__all__ = ["weight_histogram", "count_box_slice"]

DEF MAX_N = 64


cdef void _whist(int e, int n, int m, int nblocks, int wsum,
                 int* sizes, int* weights, long long* hist) noexcept:
    cdef int b, s, w, p
    if e > n:
        hist[wsum] += 1
        return
    if nblocks < m:
        sizes[nblocks] = 1
        weights[nblocks] = 0
        _whist(e + 1, n, m, nblocks + 1, wsum, sizes, weights, hist)
    if nblocks + (n - e) >= m:
        for b in range(nblocks):
            s = sizes[b]
            w = weights[b]
            sizes[b] = s + 1
            weights[b] = s
            _whist(e + 1, n, m, nblocks, wsum - w + s, sizes, weights, hist)
            weights[b] = w
            for p in range(s):
                _whist(e + 1, n, m, nblocks, wsum, sizes, weights, hist)
            sizes[b] = s


def weight_histogram(int n, int m):
    """Tally ordered set partitions of {1..n} into m blocks by weight."""
    if not 1 <= m <= n:
        raise ValueError(f"weight_histogram requires 1 <= m <= n, got ({n}, {m})")
    if n > MAX_N:
        raise ValueError(f"compiled kernel supports n <= {MAX_N}, got {n}")
    cdef int sizes[MAX_N]
    cdef int weights[MAX_N]
    cdef long long* hist = <long long*> calloc(n - m + 1, sizeof(long long))
    if hist == NULL:
        raise MemoryError()
    try:
        _whist(1, n, m, 0, 0, sizes, weights, hist)
        return [hist[i] for i in range(n - m + 1)]
    finally:
        free(hist)


cdef long long _cbs(int i, long long t, long long r) noexcept:
    cdef long long v, lo, hi, total
    if i == 1:
        return 1
    lo = r - t * (i - 1)
    if lo < 0:
        lo = 0
    hi = t if t < r else r
    total = 0
    for v in range(lo, hi + 1):
        total += _cbs(i - 1, t, r - v)
    return total


def count_box_slice(int n, long long t, long long target):
    """Count vectors in {0..t}^n whose entries sum to `target`."""
    if n < 0 or t < 0:
        raise ValueError(f"count_box_slice requires n, t >= 0, got ({n}, {t})")
    if target < 0 or target > n * t:
        return 0
    if n == 0:
        return 1
    return _cbs(n, t, target)
