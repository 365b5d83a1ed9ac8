"""Pure-Python enumeration kernels; twin of the compiled `_speedups` module.

Both kernels walk full enumeration trees, one leaf per counted object.
The compiled twin implements the identical recursions in C; either can
serve, selected by `hyperlah._kernels` at import time.
"""

from __future__ import annotations

__all__ = ["weight_histogram", "count_box_slice"]


def weight_histogram(n: int, m: int) -> list:
    """Tally ordered set partitions of {1..n} into m blocks by weight.

    Returns hist with hist[l] = number of partitions of weight l, for
    0 <= l <= n - m.  Elements are inserted in increasing order, so a
    front insertion lifts the block's weight to its old size (every
    present element is smaller) and any other slot leaves it unchanged.
    Each partition corresponds to exactly one insertion path.
    """
    if not 1 <= m <= n:
        raise ValueError(f"weight_histogram requires 1 <= m <= n, got ({n}, {m})")
    hist = [0] * (n - m + 1)
    sizes = [0] * m
    weights = [0] * m

    def rec(e, nblocks, wsum):
        if e > n:
            hist[wsum] += 1
            return
        if nblocks < m:
            sizes[nblocks] = 1
            weights[nblocks] = 0
            rec(e + 1, nblocks + 1, wsum)
        if nblocks + (n - e) >= m:
            for b in range(nblocks):
                s = sizes[b]
                w = weights[b]
                sizes[b] = s + 1
                weights[b] = s
                rec(e + 1, nblocks, wsum - w + s)
                weights[b] = w
                for _ in range(s):
                    rec(e + 1, nblocks, wsum)
                sizes[b] = s

    rec(1, 0, 0)
    return hist


def count_box_slice(n: int, t: int, target: int) -> int:
    """Count vectors in {0..t}^n whose entries sum to `target`.

    Depth-first search over coordinates; at every depth the value range
    is clipped so that the remaining sum stays reachable, hence every
    explored branch ends in a counted point.
    """
    if n < 0 or t < 0:
        raise ValueError(f"count_box_slice requires n, t >= 0, got ({n}, {t})")
    if target < 0 or target > n * t:
        return 0
    if n == 0:
        return 1  # target == 0 here

    def rec(i, r):
        # i coordinates remain, their sum must be r (feasible by construction)
        if i == 1:
            return 1
        lo = r - t * (i - 1)
        if lo < 0:
            lo = 0
        hi = t if t < r else r
        total = 0
        for v in range(lo, hi + 1):
            total += rec(i - 1, r - v)
        return total

    return rec(n, target)
