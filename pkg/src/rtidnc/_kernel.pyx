# cython: boundscheck=False, wraparound=False, cdivision=True
"""C scan over column subsets: the hot loop behind the clique search.

Mirrors _scan_py.scan exactly (same window semantics, same tie rule, same
prunes); rows are packed into 64-bit words so matrices beyond 64 users
cost one extra word per column.
"""

from libc.stdlib cimport free, malloc
from libc.stdint cimport uint64_t

cdef extern from *:
    """
    #if defined(__GNUC__) || defined(__clang__)
    #define RTIDNC_POPCNT(x) __builtin_popcountll(x)
    #else
    static int RTIDNC_POPCNT(unsigned long long x) {
        int c = 0;
        while (x) { x &= x - 1; c++; }
        return c;
    }
    #endif
    """
    int RTIDNC_POPCNT(uint64_t x) nogil


def scan(uint64_t[:, ::1] columns, int n_rows, int lo, int hi):
    """Best good-row count over column subsets of size lo..hi.

    `columns` is an (m, W) array, row i of column c packed into bit i%64 of
    word i//64.  Returns (count, tuple of winning 0-based columns).
    """
    cdef int m = columns.shape[0]
    cdef int W = columns.shape[1]
    if not 1 <= lo <= hi:
        raise ValueError(f"bad column window [{lo}, {hi}]")
    if hi > m:
        raise ValueError("window exceeds column count")

    cdef uint64_t *once = <uint64_t *> malloc((hi + 1) * W * sizeof(uint64_t))
    cdef uint64_t *twice = <uint64_t *> malloc((hi + 1) * W * sizeof(uint64_t))
    cdef int *cursor = <int *> malloc((hi + 1) * sizeof(int))
    cdef int *path = <int *> malloc((hi + 1) * sizeof(int))
    cdef int *best_cols = <int *> malloc((hi + 1) * sizeof(int))
    if once == NULL or twice == NULL or cursor == NULL or path == NULL or best_cols == NULL:
        free(once); free(twice); free(cursor); free(path); free(best_cols)
        raise MemoryError()

    cdef int best_count = 0
    cdef int best_j = 0
    cdef int d = 0, c, w, alive, cnt, nd
    cdef uint64_t t2, o2

    try:
        with nogil:
            for w in range(W):
                once[w] = 0
                twice[w] = 0
            cursor[0] = 0
            while d >= 0:
                c = cursor[d]
                if d == hi or c >= m or d + 1 + (m - c - 1) < lo:
                    d -= 1
                    continue
                cursor[d] = c + 1
                nd = d + 1
                alive = n_rows
                for w in range(W):
                    t2 = twice[d * W + w] | (once[d * W + w] & columns[c, w])
                    twice[nd * W + w] = t2
                    once[nd * W + w] = once[d * W + w] | columns[c, w]
                    alive -= RTIDNC_POPCNT(t2)
                if alive < best_count or (alive == best_count and nd >= best_j):
                    continue
                path[d] = c
                if nd >= lo:
                    cnt = 0
                    for w in range(W):
                        cnt += RTIDNC_POPCNT(once[nd * W + w] & ~twice[nd * W + w])
                    if cnt > best_count or (cnt == best_count and cnt > 0 and nd < best_j):
                        best_count = cnt
                        best_j = nd
                        for w in range(nd):
                            best_cols[w] = path[w]
                d = nd
                cursor[d] = c + 1
        if best_count == 0:
            return 0, ()
        return best_count, tuple(best_cols[i] for i in range(best_j))
    finally:
        free(once); free(twice); free(cursor); free(path); free(best_cols)
