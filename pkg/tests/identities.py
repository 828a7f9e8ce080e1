"""Exact span identities relating p-sets, w-sets and out counts.

Each checker returns a list of violation descriptions (empty when all hold).
Words are rotated so the letter under study sits at position 0, which pins
down which span is p_i and which is p_i'.
"""

from __future__ import annotations


def _rotated_to(p, n, i):
    a1, _ = p.positions(n, i)
    shifts = [0] * p.N
    shifts[n] = a1
    return p.rotated(shifts)


def _psets_from(p, n, start, end):
    """Letters once in the open spans (start, end) and (end, start) of word n."""
    L = p.length(n)
    w = p.words[n]

    def once(s, e):
        seen = {}
        k = (s + 1) % L
        while k != e:
            seen[w[k]] = seen.get(w[k], 0) + 1
            k = (k + 1) % L
        return {t for t, c in seen.items() if c == 1}

    return once(start, end), once(end, start)


def pair_identities(p, n, i, j):
    """Four intersection identities and the four-way equivalence for an
    interlaced pair i, j of word n."""
    q = _rotated_to(p, n, i)
    i1, i2 = q.positions(n, i)
    j1, j2 = q.positions(n, j)
    assert i1 == 0 and i1 < j1 < i2 < j2
    pi, pi_ = _psets_from(q, n, i1, i2)
    pj, pj_ = _psets_from(q, n, j1, j2)
    wij = len(q.w_set(n, i) & q.w_set(n, j))
    x1 = q.out_count(n, i1, j1)
    x2 = q.out_count(n, j1, i2)
    x3 = q.out_count(n, i2, j2)
    x4 = q.out_count(n, j2, i1)
    bad = []
    for name, lhs, rhs in [
        ("p_i&p_j", len(pi & pj), wij + x2),
        ("p_i&p_j'", len(pi & pj_), wij + x1),
        ("p_i'&p_j", len(pi_ & pj), wij + x3),
        ("p_i'&p_j'", len(pi_ & pj_), wij + x4),
    ]:
        if lhs != rhs:
            bad.append(f"{p.words} {i},{j}: {name} {lhs} != {rhs}")

    def same(*xs):
        return len({x % 2 for x in xs}) == 1

    s1 = same(len(pi & pj), len(pi & pj_), len(pi_ & pj), len(pi_ & pj_))
    s2 = same(x1, x2, x3, x4)
    x1jx2 = q.out_count(n, i1, i2)
    x2ix3 = q.out_count(n, j1, j2)
    x3jx4 = q.out_count(n, i2, i1)
    x4ix1 = q.out_count(n, j2, j1)
    s3 = all(x % 2 == 0 for x in (x1jx2, x2ix3, x3jx4, x4ix1))
    wi, wj = len(q.w_set(n, i)), len(q.w_set(n, j))
    s4 = same(len(pi), len(pi_), wi) and same(len(pj), len(pj_), wj)
    if not (s1 == s2 == s3 == s4):
        bad.append(f"{p.words} {i},{j}: statements {s1} {s2} {s3} {s4}")
    return bad


def letter_identities(p, n, i):
    a1, a2 = p.positions(n, i)
    pi, pi_ = _psets_from(p, n, a1, a2)
    wi = len(p.w_set(n, i))
    bad = []
    if len(pi) != wi + p.out_count(n, a1, a2):
        bad.append(f"{p.words} {i}: #p_i")
    if len(pi_) != wi + p.out_count(n, a2, a1):
        bad.append(f"{p.words} {i}: #p_i'")
    return bad


def cross_word_consequence(p, m, i, n, j):
    """Even intersection parities force even overlap with the other word."""
    pi, pi_ = p.p_sets(i)
    pj, pj_ = p.p_sets(j)
    counts = [len(pi & pj), len(pi & pj_), len(pi_ & pj), len(pi_ & pj_)]
    if len({c % 2 for c in counts}) != 1:
        return []
    other = set(p.words[n])
    bad = []
    if len(pi & other) % 2 or len(pi_ & other) % 2:
        bad.append(f"{p.words} {i},{j}: odd p-set overlap")
    if len(p.common_letters(m, n)) % 2:
        bad.append(f"{p.words} {i},{j}: odd common letters")
    return bad


def all_identities(p):
    bad = []
    for n in range(p.N):
        doubles = sorted(p.doubles(n))
        for i in doubles:
            bad += letter_identities(p, n, i)
            for j in doubles:
                if i != j and p.interlaced(n, i, j):
                    bad += pair_identities(p, n, i, j)
    for m in range(p.N):
        for n in range(p.N):
            if m == n:
                continue
            for i in p.doubles(m):
                for j in p.doubles(n):
                    bad += cross_word_consequence(p, m, i, n, j)
    return bad


def checked_pairs(p):
    """How many (letter or pair) cases all_identities visits."""
    total = 0
    for n in range(p.N):
        d = sorted(p.doubles(n))
        total += len(d) + sum(p.interlaced(n, i, j) for i in d for j in d if i != j)
    return total
