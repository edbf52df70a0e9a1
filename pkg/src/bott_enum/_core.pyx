# cython: boundscheck=False, wraparound=False, cdivision=True, language_level=3
"""Compiled enumeration kernels.

Mirror of :mod:`bott_enum._core_py` (the reference implementation) with the
composition walk and divisibility tests in C.  The elementary-symmetric
accumulator stays in Python integers: its values exceed any machine word.
"""

from libc.stdlib cimport calloc, free


def _validate(gens, int nvars, int d):
    if d < 0:
        raise ValueError("negative degree")
    for g in gens:
        if len(g) != nvars:
            raise ValueError("generator arity mismatch")
        for e in g:
            if e < 0:
                raise ValueError("negative exponent present")


cdef long long* _pack_gens(list live, int nvars) except NULL:
    cdef long long* G = <long long*> calloc(len(live) * nvars, sizeof(long long))
    if G == NULL:
        raise MemoryError()
    cdef Py_ssize_t g
    cdef int i
    for g in range(len(live)):
        row = live[g]
        for i in range(nvars):
            G[g * nvars + i] = row[i]
    return G


def slice_count(gens, int nvars, int d):
    """Number of degree-d monomials in nvars variables divisible by a generator."""
    _validate(gens, nvars, d)
    live = sorted(tuple(g) for g in gens if sum(g) <= d)
    cdef Py_ssize_t ngens = len(live)
    if ngens == 0:
        return 0
    cdef long long* G = _pack_gens(live, nvars)
    cdef long long* c = <long long*> calloc(nvars + 1, sizeof(long long))
    if c == NULL:
        free(G)
        raise MemoryError()
    cdef unsigned long long count = 0
    cdef Py_ssize_t g
    cdef int i, j
    cdef long long v
    cdef bint hit
    try:
        c[0] = d
        c[nvars] = 1  # sentinel
        while True:
            for g in range(ngens):
                hit = True
                for i in range(nvars):
                    if c[i] < G[g * nvars + i]:
                        hit = False
                        break
                if hit:
                    count += 1
                    break
            j = 0
            while c[j] == 0:
                j += 1
            if j >= nvars - 1:
                return count
            v = c[j]
            c[j] = 0
            c[j + 1] += 1
            c[0] = v - 1
    finally:
        free(c)
        free(G)


def complement_esym(gens, int nvars, int d, weights, int k):
    """Count degree-d monomials outside the ideal and e_k of their weights."""
    _validate(gens, nvars, d)
    if len(weights) != nvars:
        raise ValueError("weight arity mismatch")
    if k < 0:
        raise ValueError("negative symmetric-function index")
    # monomial weights are kept in a C long long; reject inputs that could
    # overflow (the bound check itself runs in Python integers)
    maxw = 0
    for x in weights:
        ax = -x if x < 0 else x
        if ax > maxw:
            maxw = ax
    if (d + 1) * maxw >= 1 << 62:
        raise OverflowError("weights too large for the compiled kernel")
    live = sorted(tuple(g) for g in gens if sum(g) <= d)
    cdef Py_ssize_t ngens = len(live)
    cdef long long* G = _pack_gens(live, nvars)
    cdef long long* c = <long long*> calloc(nvars + 1, sizeof(long long))
    cdef long long* W = <long long*> calloc(nvars, sizeof(long long))
    if c == NULL or W == NULL:
        free(G); free(c); free(W)
        raise MemoryError()
    cdef list coef = [0] * (k + 1)
    coef[0] = 1
    cdef unsigned long long count = 0
    cdef Py_ssize_t g, j, top
    cdef int i, jj
    cdef long long v, wgt
    cdef bint hit
    cdef object pywgt
    try:
        for i in range(nvars):
            W[i] = weights[i]
        c[0] = d
        c[nvars] = 1  # sentinel
        wgt = d * W[0]
        while True:
            hit = False
            for g in range(ngens):
                hit = True
                for i in range(nvars):
                    if c[i] < G[g * nvars + i]:
                        hit = False
                        break
                if hit:
                    break
            if not hit:
                count += 1
                top = count if count < <unsigned long long> k else k
                pywgt = wgt
                for j in range(top, 0, -1):
                    coef[j] = coef[j] + pywgt * coef[j - 1]
            jj = 0
            while c[jj] == 0:
                jj += 1
            if jj >= nvars - 1:
                return count, coef[k]
            v = c[jj]
            c[jj] = 0
            c[jj + 1] += 1
            c[0] = v - 1
            wgt += (v - 1) * W[0] - v * W[jj] + W[jj + 1]
    finally:
        free(c)
        free(G)
        free(W)
