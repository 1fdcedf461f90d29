# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled inner loops.  Must stay behaviourally identical to _kernels_py."""
from libc.stdlib cimport malloc, free
from math import gcd

ctypedef unsigned long long u64

cdef extern from *:
    int popcount64 "__builtin_popcountll"(u64 x) nogil
    int ctz64 "__builtin_ctzll"(u64 x) nogil

BACKEND = "cython"


def sparsest_cut_scan(int n, adj, sess_u, sess_v):
    """Scan every cut side not containing node 0.

    Returns (num, den, masks): the minimum crossing-edge / separated-session
    ratio and every side mask attaining it; (0, 0, []) if no cut separates a
    session.
    """
    if n < 2 or n > 40:
        raise ValueError("sparsest_cut_scan supports 2..40 nodes")
    cdef int k = len(sess_u)
    cdef int i, j
    cdef u64 *a = <u64 *> malloc(n * sizeof(u64))
    cdef u64 *sm = <u64 *> malloc((k + 1) * sizeof(u64))
    if a == NULL or sm == NULL:
        free(a)
        free(sm)
        raise MemoryError()
    for i in range(n):
        a[i] = adj[i]
    for j in range(k):
        sm[j] = (<u64> 1 << <int> sess_u[j]) | (<u64> 1 << <int> sess_v[j])
    cdef u64 full = (<u64> 1 << n) - 1
    cdef u64 top = <u64> 1 << (n - 1)
    cdef u64 m, side, rest, bits
    cdef long long cross, sep, best_num = 0, best_den = 0, lhs, rhs
    ties = []
    try:
        m = 1
        while m < top:
            side = m << 1
            sep = 0
            for j in range(k):
                bits = sm[j] & side
                if bits != 0 and bits != sm[j]:
                    sep += 1
            if sep != 0:
                rest = full & ~side
                cross = 0
                bits = side
                while bits:
                    i = ctz64(bits)
                    cross += popcount64(a[i] & rest)
                    bits &= bits - 1
                if best_den == 0:
                    best_num = cross
                    best_den = sep
                    ties = [side]
                else:
                    lhs = cross * best_den
                    rhs = best_num * sep
                    if lhs < rhs:
                        best_num = cross
                        best_den = sep
                        ties = [side]
                    elif lhs == rhs:
                        ties.append(side)
            m += 1
    finally:
        free(a)
        free(sm)
    if best_den:
        g = gcd(best_num, best_den)
        return best_num // g, best_den // g, ties
    return 0, 0, ties


cdef int _dfs(int x, int t, u64 visited, int cur, int best, const u64 *a,
              const unsigned char *w, int n) nogil:
    cdef u64 nb
    cdef int y, c
    if cur >= best:
        return best
    if x == t:
        return cur
    nb = a[x] & ~visited
    while nb:
        y = ctz64(nb)
        nb &= nb - 1
        c = cur + w[x * n + y]
        if c < best:
            best = _dfs(y, t, visited | (<u64> 1 << y), c, best, a, w, n)
    return best


def min_crossing_path(int n, adj, weight, int s, int t):
    """Minimum over simple s-t paths of the number of weight-1 edges used.

    ``weight`` is a flat n*n 0/1 sequence.  Returns -1 if t is unreachable.
    """
    if n < 1 or n > 64:
        raise ValueError("min_crossing_path supports at most 64 nodes")
    cdef int i, best
    cdef u64 *a = <u64 *> malloc(n * sizeof(u64))
    cdef unsigned char *w = <unsigned char *> malloc(n * n)
    if a == NULL or w == NULL:
        free(a)
        free(w)
        raise MemoryError()
    try:
        for i in range(n):
            a[i] = adj[i]
        for i in range(n * n):
            w[i] = 1 if weight[i] else 0
        # upper bound: a simple path has at most n - 1 edges
        with nogil:
            best = _dfs(s, t, <u64> 1 << s, 0, n, a, w, n)
    finally:
        free(a)
        free(w)
    return -1 if best >= n else best
