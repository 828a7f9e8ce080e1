# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled versions of the loops in ``_kernels.py``.

Letter sets are uint64 bitmasks, so paragraphs with more than 64 letters are
routed to the pure-Python code by :mod:`gpcheck.kernels`.
"""

from libc.stdint cimport uint64_t, int64_t
from libc.stdlib cimport malloc, free

cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil

cdef int ORDERS[6][3]
ORDERS[0][:] = [2, 1, 3]
ORDERS[1][:] = [3, 1, 2]
ORDERS[2][:] = [2, 3, 1]
ORDERS[3][:] = [3, 2, 1]
ORDERS[4][:] = [1, 2, 3]
ORDERS[5][:] = [1, 3, 2]

# span pairs per case; NTERMS gives the used rows
cdef int NTERMS[6]
NTERMS[:] = [3, 3, 2, 5, 1, 2]
cdef int TERMS[6][5][4]
_py_terms = (
    ((0, 2, 2, 1), (0, 2, 1, 3), (2, 1, 1, 3)),
    ((0, 3, 2, 0), (3, 1, 2, 0), (3, 1, 0, 3)),
    ((0, 2, 2, 3), (3, 1, 2, 3)),
    ((0, 3, 1, 0), (3, 2, 2, 1), (3, 2, 1, 0), (3, 2, 0, 3), (2, 1, 1, 0)),
    ((0, 1, 2, 3),),
    ((0, 1, 2, 0), (0, 1, 1, 3)),
)
for _c, _terms in enumerate(_py_terms):
    for _k, _t in enumerate(_terms):
        for _j in range(4):
            TERMS[_c][_k][_j] = _t[_j]


cdef inline int parity(uint64_t x) nogil:
    return __builtin_popcountll(x) & 1


def boundary_count(opp):
    cdef Py_ssize_t n = len(opp), h, g
    cdef int *o = <int *> malloc(n * sizeof(int))
    cdef char *seen = <char *> malloc(n)
    cdef long cycles = 0
    try:
        for h in range(n):
            o[h] = opp[h]
            seen[h] = 0
        for h in range(n):
            if seen[h]:
                continue
            cycles += 1
            g = h
            while not seen[g]:
                seen[g] = 1
                g = o[g]
                g = (g & ~3) | ((g + 1) & 3)
    finally:
        free(o)
        free(seen)
    return cycles


cdef inline uint64_t span_mask(uint64_t *otab, long base, long L, long a,
                               long *t, int x, int y) nogil:
    cdef long ts = 0 if x == 0 else t[x]
    cdef long te = L if y == 0 else t[y]
    if te - ts <= 1:
        return 0
    return otab[base + ((a + ts) % L) * L + (a + te) % L]


cdef int delta_parity(uint64_t *otab, long base, long L, long a, long b,
                      long y, long z) nogil:
    cdef long off[4]
    cdef long t[4]
    cdef int case, k, lab, ok
    cdef long o
    cdef uint64_t acc
    off[0] = 0
    off[1] = (b - a + L) % L
    off[2] = (y - a + L) % L
    off[3] = (z - a + L) % L
    for case in range(6):
        ok = 1
        for k in range(3):
            lab = ORDERS[case][k]
            o = off[lab]
            if o == 0:
                if k == 1:
                    ok = 0
                    break
                if k == 2:
                    o = L
            t[lab] = o
        if not ok:
            continue
        if t[ORDERS[case][0]] > t[ORDERS[case][1]] or t[ORDERS[case][1]] > t[ORDERS[case][2]]:
            continue
        acc = 0
        for k in range(NTERMS[case]):
            acc ^= (span_mask(otab, base, L, a, t, TERMS[case][k][0], TERMS[case][k][1])
                    & span_mask(otab, base, L, a, t, TERMS[case][k][2], TERMS[case][k][3]))
        return parity(acc)
    return -1


cdef inline int inside(long L, long s, long e, long q) nogil:
    cdef long dq = (q - s + L) % L
    return 0 < dq and dq < (e - s + L) % L


cdef int epsilon_parity(char *inpos, long pb, long L, long a, long b, long y,
                        long z, int dbl) nogil:
    cdef int c = 0
    if dbl:
        if inside(L, y, z, a) + inside(L, y, z, b) == 1:
            c += 1
    else:
        if inside(L, y, z, a) and inpos[pb + a] == 1:
            c += 1
        if inside(L, y, z, b) and inpos[pb + b] == 0:
            c += 1
    if inside(L, a, b, y) and inpos[pb + y] == 0:
        c += 1
    if inside(L, a, b, z) and inpos[pb + z] == 1:
        c += 1
    return c & 1


cdef uint64_t *to_u64(seq):
    cdef Py_ssize_t n = len(seq), k
    cdef uint64_t *out = <uint64_t *> malloc((n + 1) * sizeof(uint64_t))
    for k in range(n):
        out[k] = seq[k]
    return out


cdef long *to_long(seq):
    cdef Py_ssize_t n = len(seq), k
    cdef long *out = <long *> malloc((n + 1) * sizeof(long))
    for k in range(n):
        out[k] = seq[k]
    return out


def vii_scan(T):
    cdef long N = T.N, D = T.D
    cdef long nd = len(T.doubles) // 4
    cdef uint64_t *otab = to_u64(T.otab)
    cdef uint64_t *single = to_u64(T.single)
    cdef long *L = to_long(T.L)
    cdef long *off = to_long(T.off)
    cdef long *poff = to_long(T.poff)
    cdef long *ds = to_long(T.ds)
    cdef long *de = to_long(T.de)
    cdef long *dbl = to_long(T.doubles)
    cdef bytes inpos_b = bytes(T.inpos)
    cdef char *inpos = inpos_b
    cdef uint64_t *masks = <uint64_t *> malloc((D * N + 1) * sizeof(uint64_t))
    cdef uint64_t *xors = <uint64_t *> malloc((D + 1) * sizeof(uint64_t))
    cdef long n, d, d1, d2, s, e, s1, e1, s2, e2, k, a, b, Ln, base, pb
    cdef int primed, v
    cdef uint64_t x, pset, m1
    result = None
    try:
        for d in range(D):
            x = 0
            for n in range(N):
                s = ds[d * N + n]
                masks[d * N + n] = 0
                if s >= 0:
                    masks[d * N + n] = otab[off[n] + s * L[n] + de[d * N + n]]
                    x ^= masks[d * N + n]
            xors[d] = x
        for n in range(N):
            Ln = L[n]
            base = off[n]
            pb = poff[n]
            for d in range(D):
                s = ds[d * N + n]
                v = parity(single[n] & (xors[d] ^ masks[d * N + n]))
                if s >= 0:
                    e = de[d * N + n]
                    v ^= parity(otab[base + s * Ln + e] & otab[base + e * Ln + s])
                    v ^= 1 if inpos[pb + s] == inpos[pb + e] else 0
                if v:
                    result = ("W", n, d, 0)
                    return result
        for k in range(nd):
            n = dbl[4 * k]
            Ln = L[n]
            base = off[n]
            pb = poff[n]
            for primed in range(2):
                if primed:
                    a = dbl[4 * k + 2]
                    b = dbl[4 * k + 1]
                else:
                    a = dbl[4 * k + 1]
                    b = dbl[4 * k + 2]
                pset = otab[base + a * Ln + b]
                for d in range(D):
                    v = parity(pset & (xors[d] ^ masks[d * N + n]))
                    s = ds[d * N + n]
                    if s >= 0:
                        e = de[d * N + n]
                        v ^= delta_parity(otab, base, Ln, a, b, s, e)
                        v ^= epsilon_parity(inpos, pb, Ln, a, b, s, e, 1)
                        if primed == dbl[4 * k + 3]:
                            v ^= inside(Ln, a, b, s) ^ inside(Ln, a, b, e)
                    if v:
                        result = ("Q", k, primed, d)
                        return result
        for d1 in range(D):
            for d2 in range(D):
                v = 0
                for n in range(N):
                    s1 = ds[d1 * N + n]
                    if s1 < 0:
                        continue
                    m1 = masks[d1 * N + n]
                    v ^= parity(m1 & (xors[d2] ^ masks[d2 * N + n]))
                    s2 = ds[d2 * N + n]
                    if s2 >= 0:
                        e1 = de[d1 * N + n]
                        e2 = de[d2 * N + n]
                        v ^= delta_parity(otab, off[n], L[n], s1, e1, s2, e2)
                        v ^= epsilon_parity(inpos, poff[n], L[n], s1, e1, s2, e2, 0)
                if v:
                    result = ("D", d1, d2, 0)
                    return result
        return None
    finally:
        free(otab); free(single); free(L); free(off); free(poff)
        free(ds); free(de); free(dbl); free(masks); free(xors)
