"""Cyclic sequences and the parity maps built on them.

A cyclic sequence picks at most one forward arc per word; the arcs chain
head-to-tail through single letters shared by consecutive words.  The maps
``delta``, ``epsilon``, ``W``, ``Q`` and ``D`` are evaluated here directly on
letter sets.  :func:`compatible_with_Dp` runs the same arithmetic through the
bitmask kernels in :mod:`gpcheck.kernels` (parities only) unless asked for
the set-based route.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import cached_property
from typing import Optional, Sequence

from . import kernels
from .errors import NotDoubleLetter, SpanNotInWord
from .gauss import GaussParagraph, span_positions
from .partition import WordWisePartition, gamma

DEFAULT_CAP = 100_000

Span = Optional[tuple[int, int]]

# Cyclic order after ``a`` for the six cases, and the o-set pairs summed in
# each.  Labels: 0 = a, 1 = b, 2 = y, 3 = z.
DELTA_ORDERS = (
    (2, 1, 3),  # a y b z
    (3, 1, 2),  # a z b y
    (2, 3, 1),  # a y z b
    (3, 2, 1),  # a z y b
    (1, 2, 3),  # a b y z
    (1, 3, 2),  # a b z y
)
DELTA_TERMS = (
    (((0, 2), (2, 1)), ((0, 2), (1, 3)), ((2, 1), (1, 3))),
    (((0, 3), (2, 0)), ((3, 1), (2, 0)), ((3, 1), (0, 3))),
    (((0, 2), (2, 3)), ((3, 1), (2, 3))),
    (((0, 3), (1, 0)), ((3, 2), (2, 1)), ((3, 2), (1, 0)), ((3, 2), (0, 3)), ((2, 1), (1, 0))),
    (((0, 1), (2, 3)),),
    (((0, 1), (2, 0)), ((0, 1), (1, 3))),
)


@dataclass(frozen=True)
class CyclicSequence:
    """Per-word arcs ``(start, end)`` (positions) or ``None``.

    ``chain`` lists the words carrying arcs in traversal order, rotated so
    the smallest index comes first; ``connectors[k]`` ends the arc on
    ``chain[k]`` and starts the arc on ``chain[k + 1]``.
    """

    arcs: tuple[Span, ...]
    chain: tuple[int, ...]
    connectors: tuple[str, ...]

    @classmethod
    def from_chain(cls, p: GaussParagraph, chain: Sequence[int], connectors: Sequence[str]) -> "CyclicSequence":
        M = len(chain)
        if M < 2 or len(set(chain)) != M or len(connectors) != M:
            raise ValueError("a cyclic sequence needs >= 2 distinct words and one connector per step")
        arcs: list[Span] = [None] * p.N
        for k, n in enumerate(chain):
            enter, leave = connectors[k - 1], connectors[k]
            if enter == leave:
                raise ValueError("arc endpoints must be distinct letters")
            (s,), (e,) = p.positions(n, enter), p.positions(n, leave)
            arcs[n] = (s, e)
        r = chain.index(min(chain))
        chain = tuple(chain[r:]) + tuple(chain[:r])
        connectors = tuple(connectors[r:]) + tuple(connectors[:r])
        return cls(tuple(arcs), chain, connectors)

    def __eq__(self, other):
        if not isinstance(other, CyclicSequence):
            return NotImplemented
        return self.arcs == other.arcs

    def __hash__(self):
        return hash(self.arcs)

    def to_dict(self) -> dict:
        return {"chain": [n + 1 for n in self.chain], "connectors": list(self.connectors)}


@dataclass(frozen=True)
class DpFamily:
    sequences: tuple[CyclicSequence, ...]
    truncated: bool = False

    def __len__(self):
        return len(self.sequences)

    def __iter__(self):
        return iter(self.sequences)


def enumerate_Dp(p: GaussParagraph, cap: int = DEFAULT_CAP) -> DpFamily:
    """All cyclic sequences of ``p``, or the first ``cap`` with ``truncated`` set."""
    if cap < 1:
        raise ValueError("cap must be >= 1")
    # adjacency: word -> list of (other word, connecting single letter)
    adj: list[list[tuple[int, str]]] = [[] for _ in range(p.N)]
    for t in p.letters:
        if t in p.single_letters:
            u, v = (o.word for o in p.occurrences[t])
            adj[u].append((v, t))
            adj[v].append((u, t))
    for lst in adj:
        lst.sort()

    found: list[tuple[tuple[int, ...], tuple[str, ...]]] = []
    truncated = False

    def extend(chain, conns):
        nonlocal truncated
        u = chain[-1]
        for v, t in adj[u]:
            if truncated:
                return
            if v == chain[0] and len(chain) >= 2:
                if t != conns[0] or len(chain) > 2:
                    if len(chain) == 2 and t == conns[-1]:
                        continue
                    found.append((tuple(chain), tuple(conns) + (t,)))
                    if len(found) > cap:
                        truncated = True
                        return
            elif v > chain[0] and v not in chain:
                if conns and t == conns[-1]:
                    continue
                chain.append(v)
                conns.append(t)
                extend(chain, conns)
                chain.pop()
                conns.pop()

    for s in range(p.N):
        extend([s], [])
        if truncated:
            break
    found.sort()
    if truncated:
        found = found[:cap]
    seqs = tuple(CyclicSequence.from_chain(p, c, t) for c, t in found)
    return DpFamily(seqs, truncated)


# -- set-based maps ------------------------------------------------------


def _o_interior(p: GaussParagraph, n: int, s: int, e: int) -> frozenset[str]:
    return p.o_between(n, s, e)


def _check_span(p: GaussParagraph, n: int, span: Span) -> None:
    if span is None:
        return
    L = p.length(n)
    s, e = span
    if not (0 <= s < L and 0 <= e < L) or s == e:
        raise SpanNotInWord(f"{span} is not a span of word {n + 1}")


def _inside(L: int, s: int, e: int, q: int) -> bool:
    return 0 < (q - s) % L < (e - s) % L


def delta_cases(p: GaussParagraph, n: int, span1: Span, span2: Span) -> list[tuple[int, int]]:
    """``(case number, value)`` for every case of the definition that applies."""
    _check_span(p, n, span1)
    _check_span(p, n, span2)
    if span1 is None or span2 is None:
        return []
    L = p.length(n)
    a, b = span1
    y, z = span2
    pos = (a, b, y, z)
    off = [(q - a) % L for q in pos]
    out = []
    for case, order in enumerate(DELTA_ORDERS, start=1):
        t = [0, 0, 0, 0]
        ok = True
        for k, label in enumerate(order):
            o = off[label]
            if o == 0:
                if k == 0:
                    o = 0
                elif k == 2:
                    o = L
                else:
                    ok = False
                    break
            t[label] = o
        if not ok or not (t[order[0]] <= t[order[1]] <= t[order[2]]):
            continue
        total = 0
        for (x1, y1), (x2, y2) in DELTA_TERMS[case - 1]:
            total += len(_delta_span(p, n, a, t, x1, y1) & _delta_span(p, n, a, t, x2, y2))
        out.append((case, total))
    return out


def _delta_span(p, n, a, t, x, y) -> frozenset[str]:
    L = p.length(n)
    ts = 0 if x == 0 else t[x]
    te = L if y == 0 else t[y]
    if te - ts <= 1:
        return frozenset()
    counts = Counter(p.words[n][(a + k) % L] for k in range(ts + 1, te))
    return frozenset(tok for tok, c in counts.items() if c == 1)


def delta(p: GaussParagraph, n: int, span1: Span, span2: Span) -> int:
    """The six-case count; 0 when either span is empty."""
    cases = delta_cases(p, n, span1, span2)
    if span1 is None or span2 is None:
        return 0
    if not cases:
        raise AssertionError("no delta case applies")  # unreachable for valid spans
    return cases[0][1]


def epsilon(p: GaussParagraph, P: WordWisePartition, n: int, span1: Span, span2: Span) -> int:
    """Parity of the statement list; the double-letter variant applies when
    both ends of ``span1`` carry the same letter."""
    _check_span(p, n, span1)
    _check_span(p, n, span2)
    if span1 is None or span2 is None:
        return 0
    w = p.words[n]
    L = len(w)
    a, b = span1
    y, z = span2
    inset = P.inset(n)
    count = 0
    if w[a] == w[b]:
        count += (_inside(L, y, z, a) + _inside(L, y, z, b)) == 1
        count += _inside(L, a, b, y) and w[y] not in inset
        count += _inside(L, a, b, z) and w[z] in inset
    else:
        count += _inside(L, y, z, a) and w[a] in inset
        count += _inside(L, y, z, b) and w[b] not in inset
        count += _inside(L, a, b, y) and w[y] not in inset
        count += _inside(L, a, b, z) and w[z] in inset
    return count % 2


def o_arc(p: GaussParagraph, n: int, span: Span) -> frozenset[str]:
    return frozenset() if span is None else _o_interior(p, n, *span)


def W_map(p: GaussParagraph, P: WordWisePartition, n: int, d: CyclicSequence) -> int:
    total = sum(len(p.o_word(n) & o_arc(p, k, d.arcs[k])) for k in range(p.N) if k != n)
    if d.arcs[n] is None:
        return total
    s, e = d.arcs[n]
    w = p.words[n]
    total += len(_o_interior(p, n, s, e) & _o_interior(p, n, e, s))
    return total + gamma(p, P, n, w[s], w[e])


def Q_map(
    p: GaussParagraph,
    P: WordWisePartition,
    n: int,
    i: str,
    primed: bool,
    d: CyclicSequence,
    rule: str = "oriented",
) -> int:
    """Q value of the loop of ``i`` anchored at its first (or, primed, second)
    stored occurrence against ``d``.

    With ``rule="literal"`` the same delta/epsilon formula is used for both
    anchors.  That undercounts by one when the arc of ``d`` in word ``n``
    separates the two occurrences and the anchor is the arrow's head, so the
    default ``"oriented"`` rule adds that separation term for the head anchor
    (tail and head as placed by :func:`gpcheck.vstring.tail_positions`).
    """
    if i not in p.doubles(n):
        raise NotDoubleLetter(f"{i!r} is not a double letter of word {n + 1}")
    i1, i2 = p.positions(n, i)
    span = (i2, i1) if primed else (i1, i2)
    pset = p.p_sets(i)[1 if primed else 0]
    total = delta(p, n, span, d.arcs[n]) + epsilon(p, P, n, span, d.arcs[n])
    total += sum(len(pset & o_arc(p, k, d.arcs[k])) for k in range(p.N) if k != n)
    if rule == "oriented":
        if int(primed) == head_anchor(p, P, i):
            total += separates(p.length(n), i1, i2, d.arcs[n])
    elif rule != "literal":
        raise ValueError(f"unknown rule {rule!r}")
    return total


def head_anchor(p: GaussParagraph, P: WordWisePartition, i: str) -> int:
    """The ``primed`` flag whose span starts at the head of arrow ``i``."""
    from .vstring import tail_positions  # local: vstring imports conditions

    tail, _ = tail_positions(p, P)[i]
    return 1 if tail.position == p.positions(tail.word, i)[0] else 0


def separates(L: int, i1: int, i2: int, arc: Span) -> int:
    """1 when exactly one end of ``arc`` lies strictly between ``i1`` and ``i2``."""
    if arc is None:
        return 0
    return int(_inside(L, i1, i2, arc[0]) != _inside(L, i1, i2, arc[1]))


def D_map(p: GaussParagraph, P: WordWisePartition, d1: CyclicSequence, d2: CyclicSequence) -> tuple[list[int], int]:
    values = []
    for n in range(p.N):
        v = delta(p, n, d1.arcs[n], d2.arcs[n]) + epsilon(p, P, n, d1.arcs[n], d2.arcs[n])
        own = o_arc(p, n, d1.arcs[n])
        v += sum(len(own & o_arc(p, k, d2.arcs[k])) for k in range(p.N) if k != n)
        values.append(v)
    return values, sum(values)


# -- condition (vii) -------------------------------------------------------


def _witness(kind: str, p: GaussParagraph, family: DpFamily, a: int, b: int, c: int) -> dict:
    seqs = family.sequences
    if kind == "W":
        return {"map": "W", "word": a + 1, "d": seqs[b].to_dict()}
    if kind == "Q":
        return {"map": "Q", "letter": _doubles_order(p)[a][1], "primed": bool(b), "d": seqs[c].to_dict()}
    return {"map": "D", "d1": seqs[a].to_dict(), "d2": seqs[b].to_dict()}


def _doubles_order(p: GaussParagraph) -> list[tuple[int, str]]:
    return sorted((n, t) for t, n in p.double_letters.items())


def compatible_with_Dp(
    p: GaussParagraph,
    P: WordWisePartition,
    family: DpFamily,
    engine: str = "kernel",
    rule: str = "oriented",
) -> tuple[Optional[bool], Optional[dict]]:
    """Check W, Q and D parities over the family.

    Returns ``(True, None)``, ``(False, witness)`` for the first odd value in
    scan order (all W, then all Q, then ordered pairs for D), or
    ``(None, {"reason": "truncated"})`` when the family was cut at the cap
    and no odd value was found.  ``rule`` is passed to :func:`Q_map`.
    """
    if rule not in ("oriented", "literal"):
        raise ValueError(f"unknown rule {rule!r}")
    if engine == "kernel":
        hit = kernels.vii_scan(_kernel_tables(p, P, family, rule))
        if hit is not None:
            kind, a, b, c = hit
            return False, _witness(kind, p, family, a, b, c)
    elif engine == "reference":
        hit = _reference_scan(p, P, family, rule)
        if hit is not None:
            return False, hit
    else:
        raise ValueError(f"unknown engine {engine!r}")
    if family.truncated:
        return None, {"reason": "truncated"}
    return True, None


def _reference_scan(p, P, family, rule="oriented") -> Optional[dict]:
    seqs = family.sequences
    for n in range(p.N):
        for di, d in enumerate(seqs):
            if W_map(p, P, n, d) % 2:
                return _witness("W", p, family, n, di, 0)
    for k, (n, i) in enumerate(_doubles_order(p)):
        for primed in (0, 1):
            for di, d in enumerate(seqs):
                if Q_map(p, P, n, i, bool(primed), d, rule) % 2:
                    return _witness("Q", p, family, k, primed, di)
    for a, d1 in enumerate(seqs):
        for b, d2 in enumerate(seqs):
            if D_map(p, P, d1, d2)[1] % 2:
                return _witness("D", p, family, a, b, 0)
    return None


class KernelTables:
    """Flat integer arrays consumed by the kernels.

    ``otab[off[n] + s * L[n] + t]`` is the bitmask of letters occurring once
    strictly between positions ``s`` and ``t`` of word ``n`` (``s == t``
    meaning the full circle minus ``s``).  ``doubles`` holds
    ``(word, i1, i2, head)`` per double letter, ``head`` being the primed flag
    that gets the separation term (-1 for the literal rule).
    """

    __slots__ = ("N", "L", "off", "poff", "otab", "inpos", "single", "doubles",
                 "D", "ds", "de", "nbits")


def _kernel_tables(
    p: GaussParagraph, P: WordWisePartition, family: DpFamily, rule: str = "oriented"
) -> KernelTables:
    bit = {t: 1 << k for k, t in enumerate(p.letters)}
    T = KernelTables()
    T.N = p.N
    T.nbits = len(bit)
    T.L = [p.length(n) for n in range(p.N)]
    T.off, T.poff, T.otab, T.inpos, T.single = [], [], [], [], []
    for n in range(p.N):
        w = p.words[n]
        L = len(w)
        T.off.append(len(T.otab))
        T.poff.append(len(T.inpos))
        for s in range(L):
            for e in range(L):
                mask = 0
                for k in span_positions(L, s, e):
                    mask ^= bit[w[k % L]]  # double occurrences cancel
                T.otab.append(mask)
        inset = P.inset(n)
        T.inpos.extend(1 if t in inset else 0 for t in w)
        m = 0
        for t in p.o_word(n):
            m |= bit[t]
        T.single.append(m)
    T.doubles = []
    for n, t in _doubles_order(p):
        i1, i2 = p.positions(n, t)
        T.doubles.extend((n, i1, i2, head_anchor(p, P, t) if rule == "oriented" else -1))
    T.D = len(family.sequences)
    T.ds, T.de = [], []
    for d in family.sequences:
        for arc in d.arcs:
            T.ds.append(-1 if arc is None else arc[0])
            T.de.append(-1 if arc is None else arc[1])
    return T
