"""Pure-Python versions of the hot loops (mirrors ``_ckernels.pyx``).

Both implementations work on the flat tables built by
:func:`gpcheck.cyclic._kernel_tables` and return identical results.
"""

from __future__ import annotations

# Cyclic order of (b, y, z) after a for the six delta cases, and the pairs of
# spans intersected in each.  Labels: 0 = a, 1 = b, 2 = y, 3 = z.
ORDERS = ((2, 1, 3), (3, 1, 2), (2, 3, 1), (3, 2, 1), (1, 2, 3), (1, 3, 2))
TERMS = (
    ((0, 2, 2, 1), (0, 2, 1, 3), (2, 1, 1, 3)),
    ((0, 3, 2, 0), (3, 1, 2, 0), (3, 1, 0, 3)),
    ((0, 2, 2, 3), (3, 1, 2, 3)),
    ((0, 3, 1, 0), (3, 2, 2, 1), (3, 2, 1, 0), (3, 2, 0, 3), (2, 1, 1, 0)),
    ((0, 1, 2, 3),),
    ((0, 1, 2, 0), (0, 1, 1, 3)),
)


def boundary_count(opp):
    """Number of cycles of ``h -> sigma(opp[h])`` on a 4-regular rotation system.

    ``opp`` is the arc involution on half-edges ``4 * vertex + r``; the
    rotation ``sigma`` advances ``r`` by one.
    """
    n = len(opp)
    seen = bytearray(n)
    cycles = 0
    for h in range(n):
        if seen[h]:
            continue
        cycles += 1
        while not seen[h]:
            seen[h] = 1
            g = opp[h]
            h = (g & ~3) | ((g + 1) & 3)
    return cycles


def _span(otab, base, L, a, t, x, y):
    ts = 0 if x == 0 else t[x]
    te = L if y == 0 else t[y]
    if te - ts <= 1:
        return 0
    return otab[base + ((a + ts) % L) * L + (a + te) % L]


def delta_parity(otab, base, L, a, b, y, z):
    off = (0, (b - a) % L, (y - a) % L, (z - a) % L)
    t = [0, 0, 0, 0]
    for case in range(6):
        order = ORDERS[case]
        ok = True
        for k in range(3):
            lab = order[k]
            o = off[lab]
            if o == 0:
                if k == 0:
                    o = 0
                elif k == 2:
                    o = L
                else:
                    ok = False
                    break
            t[lab] = o
        if not ok or t[order[0]] > t[order[1]] or t[order[1]] > t[order[2]]:
            continue
        acc = 0
        for x1, y1, x2, y2 in TERMS[case]:
            acc ^= _span(otab, base, L, a, t, x1, y1) & _span(otab, base, L, a, t, x2, y2)
        return bin(acc).count("1") & 1
    raise AssertionError("no delta case applies")


def _inside(L, s, e, q):
    return 0 < (q - s) % L < (e - s) % L


def epsilon_parity(inpos, pbase, L, a, b, y, z, double):
    c = 0
    if double:
        c += (_inside(L, y, z, a) + _inside(L, y, z, b)) == 1
    else:
        c += _inside(L, y, z, a) and inpos[pbase + a] == 1
        c += _inside(L, y, z, b) and inpos[pbase + b] == 0
    c += _inside(L, a, b, y) and inpos[pbase + y] == 0
    c += _inside(L, a, b, z) and inpos[pbase + z] == 1
    return c & 1


def _parity(x):
    return bin(x).count("1") & 1


def vii_scan(T):
    """First odd W, Q or D value over the family, or ``None``.

    Returns ``("W", n, d, 0)``, ``("Q", k, primed, d)`` (``k`` indexes the
    sorted double letters) or ``("D", d1, d2, 0)``.  Cross-word sums are
    reduced mod 2 with XOR, since popcount parity is bilinear.
    """
    N, D = T.N, T.D
    L, off, poff, otab, inpos = T.L, T.off, T.poff, T.otab, T.inpos
    ds, de = T.ds, T.de
    masks = [0] * (D * N)
    xors = [0] * D
    for d in range(D):
        x = 0
        for n in range(N):
            s = ds[d * N + n]
            if s >= 0:
                m = otab[off[n] + s * L[n] + de[d * N + n]]
                masks[d * N + n] = m
                x ^= m
        xors[d] = x
    for n in range(N):
        Ln, base, pb = L[n], off[n], poff[n]
        for d in range(D):
            s = ds[d * N + n]
            v = _parity(T.single[n] & (xors[d] ^ masks[d * N + n]))
            if s >= 0:
                e = de[d * N + n]
                v ^= _parity(otab[base + s * Ln + e] & otab[base + e * Ln + s])
                v ^= 1 if inpos[pb + s] == inpos[pb + e] else 0
            if v:
                return ("W", n, d, 0)
    dbl = T.doubles
    for k in range(len(dbl) // 4):
        n, i1, i2, head = dbl[4 * k:4 * k + 4]
        Ln, base, pb = L[n], off[n], poff[n]
        for primed in (0, 1):
            a, b = (i2, i1) if primed else (i1, i2)
            pset = otab[base + a * Ln + b]
            for d in range(D):
                v = _parity(pset & (xors[d] ^ masks[d * N + n]))
                s = ds[d * N + n]
                if s >= 0:
                    e = de[d * N + n]
                    v ^= delta_parity(otab, base, Ln, a, b, s, e)
                    v ^= epsilon_parity(inpos, pb, Ln, a, b, s, e, True)
                    if primed == head:
                        v ^= _inside(Ln, i1, i2, s) != _inside(Ln, i1, i2, e)
                if v:
                    return ("Q", k, primed, d)
    for d1 in range(D):
        for d2 in range(D):
            v = 0
            for n in range(N):
                s1 = ds[d1 * N + n]
                if s1 < 0:
                    continue
                m1 = masks[d1 * N + n]
                v ^= _parity(m1 & (xors[d2] ^ masks[d2 * N + n]))
                s2 = ds[d2 * N + n]
                if s2 >= 0:
                    e1, e2 = de[d1 * N + n], de[d2 * N + n]
                    v ^= delta_parity(otab, off[n], L[n], s1, e1, s2, e2)
                    v ^= epsilon_parity(inpos, poff[n], L[n], s1, e1, s2, e2, False)
            if v:
                return ("D", d1, d2, 0)
    return None
