"""Mod-2 intersection numbers on a generating set of first homology.

The generators are the core circles, one arrow loop per double letter and
one cyclic sequence per word-graph edge outside a fixed spanning tree.
Intersection parities come from the combinatorial formulas only; nothing
here looks at the surface.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Union

from .cyclic import CyclicSequence, D_map, DpFamily, Q_map, W_map
from .errors import PreconditionViolated
from .gauss import GaussParagraph
from .partition import WordWisePartition
from .vstring import VirtualString, construct_from_pair, tail_positions


@dataclass(frozen=True)
class BasisClass:
    kind: str  # "circle" | "arrow" | "cycle"
    word: Optional[int] = None
    letter: Optional[str] = None
    primed: bool = False
    d: Optional[CyclicSequence] = None

    @classmethod
    def circle(cls, n: int) -> "BasisClass":
        return cls("circle", word=n)

    @classmethod
    def arrow(cls, p: GaussParagraph, i: str, primed: bool = False) -> "BasisClass":
        return cls("arrow", word=p.word_of_double(i), letter=i, primed=primed)

    @classmethod
    def cycle(cls, d: CyclicSequence, letter: Optional[str] = None) -> "BasisClass":
        return cls("cycle", letter=letter, d=d)

    def to_dict(self) -> dict:
        if self.kind == "circle":
            return {"class": "circle", "word": self.word + 1}
        if self.kind == "arrow":
            return {"class": "arrow", "letter": self.letter, "primed": self.primed}
        return {"class": "cycle", "d": self.d.to_dict()}


@dataclass(frozen=True)
class NotApplicable:
    reason: str

    def __bool__(self):
        raise TypeError("NotApplicable has no parity")


BEvaluation = Union[int, NotApplicable]
_ORDER = {"circle": 0, "arrow": 1, "cycle": 2}


def spanning_tree(p: GaussParagraph) -> tuple[list[str], list[str]]:
    """Kruskal on the word graph with edges taken in letter order.

    Returns ``(tree letters, co-tree letters)``, both sorted.
    """
    parent = list(range(p.N))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    tree, cotree = [], []
    for t in p.letters:
        if t not in p.single_letters:
            continue
        u, v = (o.word for o in p.occurrences[t])
        ru, rv = find(u), find(v)
        if ru == rv:
            cotree.append(t)
        else:
            parent[ru] = rv
            tree.append(t)
    return tree, cotree


def _tree_path(p: GaussParagraph, tree: list[str], src: int, dst: int) -> tuple[list[int], list[str]]:
    adj: dict[int, list[tuple[int, str]]] = {n: [] for n in range(p.N)}
    for t in tree:
        u, v = (o.word for o in p.occurrences[t])
        adj[u].append((v, t))
        adj[v].append((u, t))
    prev: dict[int, tuple[int, str]] = {src: (-1, "")}
    stack = [src]
    while stack:
        u = stack.pop()
        for v, t in adj[u]:
            if v not in prev:
                prev[v] = (u, t)
                stack.append(v)
    words, letters = [dst], []
    while words[-1] != src:
        u, t = prev[words[-1]]
        letters.append(t)
        words.append(u)
    words.reverse()
    letters.reverse()
    return words, letters


def fundamental_cycle(p: GaussParagraph, tree: list[str], letter: str) -> CyclicSequence:
    """The cyclic sequence closing ``letter`` through the tree, arcs forward."""
    u, v = (o.word for o in p.occurrences[letter])
    words, letters = _tree_path(p, tree, v, u)  # v = words[0], ..., u = words[-1]
    chain = [u] + words[:-1]
    connectors = [letter] + letters
    return CyclicSequence.from_chain(p, chain, connectors)


def basis_cycles(p: GaussParagraph) -> tuple[list[str], list[BasisClass]]:
    tree, cotree = spanning_tree(p)
    basis = [BasisClass.circle(n) for n in range(p.N)]
    basis += [BasisClass.arrow(p, i) for i in sorted(p.double_letters)]
    basis += [BasisClass.cycle(fundamental_cycle(p, tree, t), t) for t in cotree]
    return tree, basis


# -- evaluation -------------------------------------------------------------


def _arrow_span(p: GaussParagraph, P: WordWisePartition, i: str, primed: bool) -> tuple[int, int, int]:
    """``(word, start, end)`` of the arc tail->head (or head->tail if primed)."""
    tl, hd = tail_positions(p, P)[i]
    if primed:
        tl, hd = hd, tl
    return tl.word, tl.position, hd.position


def _pset(p, P, i, primed):
    n, s, e = _arrow_span(p, P, i, primed)
    return p.o_between(n, s, e)


def _q_primed_flag(p, P, i, primed) -> bool:
    """Translate tail anchoring to the stored-position anchoring of Q_map."""
    n, s, _ = _arrow_span(p, P, i, primed)
    return s != p.positions(n, i)[0]


class Evaluator:
    """``b_mod2`` with the constructed virtual string cached."""

    def __init__(self, p: GaussParagraph, P: WordWisePartition, alpha: Optional[VirtualString] = None):
        self.p, self.P = p, P
        self._alpha = alpha

    @property
    def alpha(self) -> VirtualString:
        if self._alpha is None:
            self._alpha = construct_from_pair(self.p, self.P)
        return self._alpha

    def __call__(self, c1: BasisClass, c2: BasisClass) -> BEvaluation:
        if c1.kind != "cycle" and _ORDER[c1.kind] > _ORDER[c2.kind]:
            c1, c2 = c2, c1
        p, P = self.p, self.P
        k1, k2 = c1.kind, c2.kind
        if k1 == "circle" and k2 == "circle":
            if c1.word == c2.word:
                return 0
            return len(p.common_letters(c1.word, c2.word)) % 2
        if k1 == "circle" and k2 == "arrow":
            if c1.word == c2.word:
                return len(p.w_set(c2.word, c2.letter)) % 2
            return len(_pset(p, P, c2.letter, c2.primed) & p.o_word(c1.word)) % 2
        if k1 == "arrow" and k2 == "arrow":
            return self._arrow_arrow(c1, c2)
        if k1 == "circle" and k2 == "cycle":
            return W_map(p, P, c1.word, c2.d) % 2
        if k1 == "arrow" and k2 == "cycle":
            flag = _q_primed_flag(p, P, c1.letter, c1.primed)
            return Q_map(p, P, c1.word, c1.letter, flag, c2.d) % 2
        if k1 == "cycle" and k2 == "cycle":
            return D_map(p, P, c1.d, c2.d)[1] % 2
        # cycle first, something else second
        return self(c2, c1)

    def _arrow_arrow(self, c1: BasisClass, c2: BasisClass) -> BEvaluation:
        p, P = self.p, self.P
        i, j = c1.letter, c2.letter
        if c1.word != c2.word:
            return len(_pset(p, P, i, c1.primed) & _pset(p, P, j, c2.primed)) % 2
        n = c1.word
        circle = BasisClass.circle(n)
        # [e]* = [S] - [e]: reduce primed classes to plain ones
        if c1.primed:
            return _add(self(circle, c2), self(BasisClass.arrow(p, i), c2))
        if c2.primed:
            return _add(self(c1, circle), self(c1, BasisClass.arrow(p, j)))
        if i == j:
            return 0
        wi, wj = p.w_set(n, i), p.w_set(n, j)
        if not p.interlaced(n, i, j):
            if len(wi) % 2 or len(wj) % 2:
                return NotApplicable("w-set of odd size")
            return len(wi & wj) % 2
        alpha = self.alpha
        (ai, bi), (aj, bj) = alpha.arrows[i], alpha.arrows[j]
        L = p.length(n)
        # want cyclic order a_i, a_j, b_i, b_j; otherwise the roles swap
        if not (0 < (aj.slot - ai.slot) % L < (bi.slot - ai.slot) % L):
            i, j, ai, aj, wi = j, i, aj, ai, wj
        if len(wi) % 2:
            return NotApplicable("w-set of odd size")
        singles = p.o_word(n)
        x = p.span_letters(n, ai.slot, aj.slot)
        n_single = sum(1 for t in x if t in singles)
        q = alpha.q_pairing(n, i, j)
        return (q + n_single + len(p.w_set(n, i) & p.w_set(n, j)) + 1) % 2


def _add(x: BEvaluation, y: BEvaluation) -> BEvaluation:
    if isinstance(x, NotApplicable):
        return x
    if isinstance(y, NotApplicable):
        return y
    return (x + y) % 2


def b_mod2(p: GaussParagraph, P: WordWisePartition, c1: BasisClass, c2: BasisClass,
           alpha: Optional[VirtualString] = None) -> BEvaluation:
    return Evaluator(p, P, alpha)(c1, c2)


def all_even(p: GaussParagraph, P: WordWisePartition, family: Optional[DpFamily] = None,
             alpha: Optional[VirtualString] = None) -> tuple[Optional[bool], Optional[dict]]:
    """Whether every pair of generators has even intersection.

    With ``family`` the cycle generators are replaced by its members (a
    truncated family gives ``None``).  Needs conditions (i), (iii), (v).
    """
    from .conditions import condition_i, condition_iii
    from .partition import compatible_with_p

    for cid, ok in (("i", condition_i(p)[0]), ("iii", condition_iii(p)[0]),
                    ("v", compatible_with_p(p, P)[0])):
        if not ok:
            raise PreconditionViolated(cid)
    _, basis = basis_cycles(p)
    if family is not None:
        basis = [c for c in basis if c.kind != "cycle"] + [BasisClass.cycle(d) for d in family]
    ev = Evaluator(p, P, alpha)
    for a in range(len(basis)):
        for b in range(a, len(basis)):
            v = ev(basis[a], basis[b])
            if isinstance(v, NotApplicable):
                raise PreconditionViolated("i", v.reason)
            if v:
                return False, {"pair": [basis[a].to_dict(), basis[b].to_dict()]}
    if family is not None and family.truncated:
        return None, {"reason": "truncated"}
    return True, None
