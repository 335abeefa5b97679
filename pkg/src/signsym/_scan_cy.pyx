# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels for exhaustive statistics scans over permutation groups.

These are the hot loops of the library: a full pass over the rank-n
signed permutation group touches 2^n * n! windows, which is about ten
million at the default rank guard.  Everything here stays in C integers;
only the aggregated count dictionaries cross back into Python.
"""

from libc.stdlib cimport calloc, free

cdef enum:
    MAXN = 12


cdef inline long long _fmaj(const int* w, int n):
    cdef long long maj = 0
    cdef int neg = 0
    cdef int i
    for i in range(n - 1):
        if w[i] > w[i + 1]:
            maj += i + 1
    for i in range(n):
        if w[i] < 0:
            neg += 1
    return 2 * maj + neg


cdef inline void _invert(const int* w, int* out, int n):
    cdef int pos, v
    for pos in range(n):
        v = w[pos]
        if v > 0:
            out[v - 1] = pos + 1
        else:
            out[-v - 1] = -(pos + 1)


cdef inline bint _next_permutation(int* a, int n):
    cdef int i = n - 2
    cdef int j, t
    while i >= 0 and a[i] >= a[i + 1]:
        i -= 1
    if i < 0:
        return False
    j = n - 1
    while a[j] <= a[i]:
        j -= 1
    t = a[i]; a[i] = a[j]; a[j] = t
    i += 1
    j = n - 1
    while i < j:
        t = a[i]; a[i] = a[j]; a[j] = t
        i += 1
        j -= 1
    return True


def fmaj_pair_counts(int n):
    """Counts of (fmaj of inverse, fmaj) over the whole rank-n signed group."""
    if n < 1 or n > MAXN:
        raise ValueError(f"rank must be between 1 and {MAXN}")
    cdef int perm[MAXN]
    cdef int w[MAXN]
    cdef int winv[MAXN]
    cdef int i
    cdef int width = n * n + 1
    cdef long long* counts = <long long*> calloc(width * width, sizeof(long long))
    if counts == NULL:
        raise MemoryError()
    cdef unsigned long mask
    cdef unsigned long nmasks = (<unsigned long> 1) << n
    cdef long long fa, fb
    try:
        for i in range(n):
            perm[i] = i + 1
        while True:
            for mask in range(nmasks):
                for i in range(n):
                    if (mask >> i) & 1:
                        w[i] = -perm[i]
                    else:
                        w[i] = perm[i]
                _invert(w, winv, n)
                fa = _fmaj(winv, n)
                fb = _fmaj(w, n)
                counts[fa * width + fb] += 1
            if not _next_permutation(perm, n):
                break
        result = {}
        for fa in range(width):
            for fb in range(width):
                if counts[fa * width + fb]:
                    result[(fa, fb)] = counts[fa * width + fb]
        return result
    finally:
        free(counts)


def maj_counts(int n):
    """Distribution of the major index over plain permutations of 1..n."""
    if n < 1 or n > MAXN:
        raise ValueError(f"rank must be between 1 and {MAXN}")
    cdef int perm[MAXN]
    cdef long long counts[67]  # MAXN * (MAXN - 1) / 2 + 1
    cdef int i, top
    cdef long long maj
    top = n * (n - 1) // 2
    for i in range(top + 1):
        counts[i] = 0
    for i in range(n):
        perm[i] = i + 1
    while True:
        maj = 0
        for i in range(n - 1):
            if perm[i] > perm[i + 1]:
                maj += i + 1
        counts[maj] += 1
        if not _next_permutation(perm, n):
            break
    return {i: counts[i] for i in range(top + 1) if counts[i]}


def inv_counts(int n):
    """Distribution of the inversion number over plain permutations of 1..n."""
    if n < 1 or n > MAXN:
        raise ValueError(f"rank must be between 1 and {MAXN}")
    cdef int perm[MAXN]
    cdef long long counts[67]  # MAXN * (MAXN - 1) / 2 + 1
    cdef int i, j, top
    cdef long long inv
    top = n * (n - 1) // 2
    for i in range(top + 1):
        counts[i] = 0
    for i in range(n):
        perm[i] = i + 1
    while True:
        inv = 0
        for i in range(n):
            for j in range(i + 1, n):
                if perm[i] > perm[j]:
                    inv += 1
        counts[inv] += 1
        if not _next_permutation(perm, n):
            break
    return {i: counts[i] for i in range(top + 1) if counts[i]}
