# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled enumeration kernels; see ``_pykernels`` for the reference versions."""

from libc.stdlib cimport free, calloc

cdef enum:
    MAXN = 31


cdef extern from *:
    int __builtin_popcount(unsigned int) nogil


cdef struct ExtState:
    int n
    unsigned int full
    unsigned int below[MAXN]
    int labels[MAXN]
    int last
    long long count
    long long *maj_hist
    long long *inv_hist


cdef void _walk(ExtState *st, unsigned int placed, unsigned int placed_labels,
                int depth, int last_label, int maj, int inv, int last_elem) nogil:
    cdef int x, lab, m, bigger
    cdef unsigned int bit
    if placed == st.full:
        if st.last < 0 or last_elem == st.last:
            st.count += 1
            st.maj_hist[maj] += 1
            st.inv_hist[inv] += 1
        return
    for x in range(st.n):
        bit = 1u << x
        if (placed & bit) or (st.below[x] & placed) != st.below[x]:
            continue
        lab = st.labels[x]
        m = maj + depth if last_label > lab else maj
        bigger = __builtin_popcount(placed_labels >> (lab + 1))
        _walk(st, placed | bit, placed_labels | (1u << lab), depth + 1, lab, m, inv + bigger, x)


def extension_histograms(below, labels, int last=-1):
    cdef ExtState st
    cdef int n = len(below)
    cdef int top, i
    if n > MAXN - 1:
        raise ValueError(f"kernel supports at most {MAXN - 1} elements")
    top = n * (n - 1) // 2
    st.n = n
    st.full = (1u << n) - 1u if n < 32 else 0xFFFFFFFFu
    st.last = last
    st.count = 0
    for i in range(n):
        st.below[i] = below[i]
        st.labels[i] = labels[i]
    st.maj_hist = <long long *>calloc(top + 1, sizeof(long long))
    st.inv_hist = <long long *>calloc(top + 1, sizeof(long long))
    if st.maj_hist == NULL or st.inv_hist == NULL:
        free(st.maj_hist)
        free(st.inv_hist)
        raise MemoryError()
    try:
        with nogil:
            _walk(&st, 0u, 0u, 0, n + 1, 0, 0, -1)
        maj = [st.maj_hist[i] for i in range(top + 1)]
        inv = [st.inv_hist[i] for i in range(top + 1)]
        return st.count, maj, inv
    finally:
        free(st.maj_hist)
        free(st.inv_hist)


cdef struct PPState:
    int n
    int N
    int s
    int slab
    int order[MAXN]
    int labels[MAXN]
    int nup[MAXN]
    int up[MAXN][MAXN]
    int f[MAXN]
    long long *counts


cdef void _pp(PPState *st, int k, int total, int s_val, int s_cap) nogil:
    cdef int x, lo, hi, lab, y, need, v, t, cap
    if k == st.n:
        st.counts[total] += 1
        return
    x = st.order[k]
    lo = 0
    lab = st.labels[x]
    for t in range(st.nup[x]):
        y = st.up[x][t]
        need = st.f[y] + 1 if lab > st.labels[y] else st.f[y]
        if need > lo:
            lo = need
    hi = st.N - total
    if st.s >= 0:
        if x == st.s:
            if s_cap < hi:
                hi = s_cap
        elif s_val >= 0:
            need = s_val + 1 if lab > st.slab else s_val
            if need > lo:
                lo = need
    for v in range(lo, hi + 1):
        st.f[x] = v
        if st.s < 0:
            _pp(st, k + 1, total + v, s_val, s_cap)
        elif x == st.s:
            _pp(st, k + 1, total + v, v, s_cap)
        else:
            cap = v - 1 if lab > st.slab else v
            _pp(st, k + 1, total + v, s_val, cap if cap < s_cap else s_cap)


def ppartition_counts(order, upper, labels, int N, int s=-1):
    cdef PPState st
    cdef int n = len(order)
    cdef int i, t
    if n > MAXN - 1:
        raise ValueError(f"kernel supports at most {MAXN - 1} elements")
    st.n = n
    st.N = N
    st.s = s
    for i in range(n):
        st.order[i] = order[i]
        st.labels[i] = labels[i]
        st.nup[i] = len(upper[i])
        for t in range(st.nup[i]):
            st.up[i][t] = upper[i][t]
        st.f[i] = 0
    st.slab = labels[s] if s >= 0 else 0
    st.counts = <long long *>calloc(N + 1, sizeof(long long))
    if st.counts == NULL:
        raise MemoryError()
    try:
        with nogil:
            _pp(&st, 0, 0, -1, N)
        return [st.counts[i] for i in range(N + 1)]
    finally:
        free(st.counts)
