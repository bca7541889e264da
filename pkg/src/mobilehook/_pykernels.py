"""Pure-Python versions of the enumeration kernels.

Same signatures and results as the compiled ``_kernels`` module; used when
the extension is not built or ``MOBILEHOOK_PURE=1`` is set.
"""

from __future__ import annotations

import sys


def extension_histograms(below: list[int], labels: list[int], last: int = -1):
    """Histogram maj and inv over all linear extensions.

    ``below[x]`` is the bitmask of elements covered by ``x``; ``labels[x]``
    is its label in 1..n.  If ``last >= 0`` only extensions ending with that
    element are counted.  Returns ``(count, maj_hist, inv_hist)``.
    """
    n = len(below)
    top = n * (n - 1) // 2
    maj_hist = [0] * (top + 1)
    inv_hist = [0] * (top + 1)
    full = (1 << n) - 1
    count = 0

    sys.setrecursionlimit(max(1000, 10 * n + 100))

    def walk(placed, placed_labels, depth, last_label, maj, inv, last_elem):
        nonlocal count
        if placed == full:
            if last < 0 or last_elem == last:
                count += 1
                maj_hist[maj] += 1
                inv_hist[inv] += 1
            return
        for x in range(n):
            bit = 1 << x
            if placed & bit or (below[x] & placed) != below[x]:
                continue
            lab = labels[x]
            m = maj + depth if last_label > lab else maj
            bigger = bin(placed_labels >> (lab + 1)).count("1")
            walk(placed | bit, placed_labels | (1 << lab), depth + 1, lab, m, inv + bigger, x)

    walk(0, 0, 0, n + 1, 0, 0, -1)
    return count, maj_hist, inv_hist


def ppartition_counts(order: list[int], upper: list[list[int]], labels: list[int],
                      N: int, s: int = -1) -> list[int]:
    """Count (P, omega)-partitions of each size 0..N.

    ``order`` lists the elements so that every element comes after all
    elements above it; ``upper[x]`` are the upper covers of ``x``.  With
    ``s >= 0`` only (P, omega; s)-partitions are counted.
    """
    n = len(order)
    counts = [0] * (N + 1)
    f = [0] * n
    slab = labels[s] if s >= 0 else 0

    def rec(k, total, s_val, s_cap):
        # s_val: value at s if assigned; s_cap: upper bound for f(s) from assigned elements
        if k == n:
            counts[total] += 1
            return
        x = order[k]
        lo = 0
        lab = labels[x]
        for y in upper[x]:
            need = f[y] + 1 if lab > labels[y] else f[y]
            if need > lo:
                lo = need
        hi = N - total
        if s >= 0:
            if x == s:
                if s_cap < hi:
                    hi = s_cap
            elif s_val >= 0:
                need = s_val + 1 if lab > slab else s_val
                if need > lo:
                    lo = need
        for v in range(lo, hi + 1):
            f[x] = v
            if s < 0:
                rec(k + 1, total + v, s_val, s_cap)
            elif x == s:
                rec(k + 1, total + v, v, s_cap)
            else:
                cap = v - 1 if lab > slab else v
                rec(k + 1, total + v, s_val, cap if cap < s_cap else s_cap)

    rec(0, 0, -1, N)
    return counts
