"""Virtual strings on several core circles.

A circle is a cyclic list of endpoint slots ``(label, kind)`` with
``kind`` 0 for a tail and 1 for a head; slot order is the circle's
orientation.  Circle and slot indices are 0-based.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property
from typing import NamedTuple, Sequence

from .errors import (
    ArrowNotOnCircle,
    EndpointsNotOnCommonCircle,
    NotWordWise,
    PreconditionViolated,
    QUndefined,
    TailsNotOnCircle,
    VirtualStringError,
)
from .gauss import LETTER_RE, GaussParagraph, _connected, Occurrence
from .partition import A, WordWisePartition, is_word_wise

TAIL, HEAD = 0, 1
POSITIVE, NEGATIVE = "positive", "negative"


class EndpointRef(NamedTuple):
    circle: int
    slot: int


@dataclass(frozen=True, eq=False)
class VirtualString:
    circles: tuple[tuple[tuple[str, int], ...], ...]

    def __post_init__(self):
        if not self.circles:
            raise VirtualStringError("no core circles")
        ends: dict[str, list[int]] = {}
        for c, circle in enumerate(self.circles):
            if not circle:
                raise VirtualStringError(f"circle {c + 1} carries no endpoints")
            for label, kind in circle:
                if not isinstance(label, str) or not LETTER_RE.match(label):
                    raise VirtualStringError(f"bad arrow label {label!r}")
                if kind not in (TAIL, HEAD):
                    raise VirtualStringError(f"bad endpoint kind {kind!r}")
                ends.setdefault(label, [0, 0])[kind] += 1
        bad = sorted(t for t, (nt, nh) in ends.items() if (nt, nh) != (1, 1))
        if bad:
            raise VirtualStringError("each arrow needs one tail and one head: " + ", ".join(bad))
        occ = {}
        for c, circle in enumerate(self.circles):
            for s, (label, _) in enumerate(circle):
                occ.setdefault(label, []).append(Occurrence(c, s))
        if not _connected(len(self.circles), occ.values()):
            raise VirtualStringError("the core circles split into unlinked groups")

    # -- construction / io -----------------------------------------------

    @classmethod
    def from_tokens(cls, circles: Sequence[Sequence[str]]) -> "VirtualString":
        """From tokens like ``"a+"`` (tail) and ``"a-"`` (head)."""
        out = []
        for circle in circles:
            slots = []
            for tok in circle:
                if not isinstance(tok, str) or len(tok) < 2:
                    raise VirtualStringError(f"bad endpoint token {tok!r}")
                label, sign = tok[:-1], tok[-1]
                if sign == "+":
                    slots.append((label, TAIL))
                elif sign in ("-", "−"):
                    slots.append((label, HEAD))
                else:
                    raise VirtualStringError(f"endpoint token {tok!r} must end in + or -")
            out.append(tuple(slots))
        return cls(tuple(out))

    @classmethod
    def from_json(cls, text: str) -> "VirtualString":
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise VirtualStringError(f"invalid JSON: {exc}") from None
        if not isinstance(data, dict) or not isinstance(data.get("circles"), list):
            raise VirtualStringError('expected an object with a "circles" list')
        return cls.from_tokens(data["circles"])

    def to_tokens(self) -> list[list[str]]:
        return [[label + ("+" if kind == TAIL else "-") for label, kind in c] for c in self.circles]

    def to_json(self) -> str:
        return json.dumps({"circles": self.to_tokens()})

    def canonical(self) -> tuple:
        """Per-circle least rotation; equal for strings differing only by
        where each circle's slot list starts."""
        return tuple(min(c[k:] + c[:k] for k in range(len(c))) for c in self.circles)

    def __eq__(self, other):
        if not isinstance(other, VirtualString):
            return NotImplemented
        return self.canonical() == other.canonical()

    def __hash__(self):
        return hash(self.canonical())

    def __repr__(self):
        return f"VirtualString({self.to_tokens()!r})"

    def reversed_arrows(self) -> "VirtualString":
        """Swap tail and head of every arrow."""
        return VirtualString(tuple(tuple((t, 1 - k) for t, k in c) for c in self.circles))

    # -- structure ---------------------------------------------------------

    @property
    def N(self) -> int:
        return len(self.circles)

    @cached_property
    def arrows(self) -> dict[str, tuple[EndpointRef, EndpointRef]]:
        """``label -> (tail, head)``."""
        ends: dict[str, list] = {}
        for c, circle in enumerate(self.circles):
            for s, (label, kind) in enumerate(circle):
                ends.setdefault(label, [None, None])[kind] = EndpointRef(c, s)
        return {t: (v[0], v[1]) for t, v in sorted(ends.items())}

    @property
    def labels(self) -> tuple[str, ...]:
        return tuple(self.arrows)

    def underlying_paragraph(self) -> GaussParagraph:
        return GaussParagraph(tuple(tuple(t for t, _ in c) for c in self.circles))

    def arr(self, i: int, j: int) -> list[str]:
        """Labels of arrows with tail on circle ``i`` and head on circle ``j``."""
        return [t for t, (tl, hd) in self.arrows.items() if tl.circle == i and hd.circle == j]

    def arr_count(self, i: int, j: int) -> int:
        return len(self.arr(i, j))

    def _in_open_arc(self, start: EndpointRef, end: EndpointRef, q: EndpointRef) -> bool:
        L = len(self.circles[start.circle])
        if q.circle != start.circle:
            return False
        return 0 < (q.slot - start.slot) % L < (end.slot - start.slot) % L

    # -- linking -----------------------------------------------------------

    def links(self, e: str, f: str) -> str | None:
        """How ``f`` links ``e``: positive for cyclic order a,d,b,c with
        ``e = (a, b)``, ``f = (c, d)``; negative for a,c,b,d; else None."""
        if e == f:
            raise ValueError("links needs two distinct arrows")
        a, b = self.arrows[e]
        c, d = self.arrows[f]
        if len({a.circle, b.circle, c.circle, d.circle}) != 1:
            raise EndpointsNotOnCommonCircle(f"arrows {e}, {f} do not lie on one circle")
        c_in = self._in_open_arc(a, b, c)
        d_in = self._in_open_arc(a, b, d)
        if d_in and not c_in:
            return POSITIVE
        if c_in and not d_in:
            return NEGATIVE
        return None

    def _self_arrow(self, e: str) -> tuple[EndpointRef, EndpointRef]:
        a, b = self.arrows[e]
        if a.circle != b.circle:
            raise ArrowNotOnCircle(f"arrow {e} joins two different circles")
        return a, b

    def n_of(self, e: str) -> int:
        a, _ = self._self_arrow(e)
        total = 0
        for f in self.arr(a.circle, a.circle):
            if f != e:
                s = self.links(e, f)
                total += 1 if s == POSITIVE else -1 if s == NEGATIVE else 0
        return total

    def _n_general(self, i: int, j: int, e: str, star: bool) -> int:
        a, b = self._self_arrow(e)
        if a.circle != i:
            raise ArrowNotOnCircle(f"arrow {e} is not on circle {i + 1}")
        start, end = (b, a) if star else (a, b)
        plus = sum(self._in_open_arc(start, end, self.arrows[f][1]) for f in self.arr(j, i))
        minus = sum(self._in_open_arc(start, end, self.arrows[f][0]) for f in self.arr(i, j))
        return plus - minus

    def n_ij(self, i: int, j: int, e: str) -> int:
        return self._n_general(i, j, e, star=False)

    def n_star_ij(self, i: int, j: int, e: str) -> int:
        return self._n_general(i, j, e, star=True)

    # -- q-pairing and induced partition ------------------------------------

    def _require_even(self):
        for c, circle in enumerate(self.circles):
            if len(circle) % 2:
                raise QUndefined(f"circle {c + 1} carries {len(circle)} endpoints")

    def q_pairing(self, circle: int, e: str, f: str) -> int:
        """Heads minus tails on the semi-open arc from the tail of ``e``
        (excluded) to the tail of ``f`` (included)."""
        self._require_even()
        a, c = self.arrows[e][0], self.arrows[f][0]
        if a.circle != circle or c.circle != circle:
            raise TailsNotOnCircle(f"tails of {e}, {f} are not both on circle {circle + 1}")
        if e == f:
            return 0
        slots = self.circles[circle]
        L = len(slots)
        total = 0
        for k in range(1, (c.slot - a.slot) % L + 1):
            total += 1 if slots[(a.slot + k) % L][1] == HEAD else -1
        return total

    def induced_partition(self) -> WordWisePartition:
        """Tail classes per circle (q even within a class), canonicalized.

        The result need not be word-wise: its shared letters are split
        ``arr(i, j)`` / ``arr(j, i)``, which is even only when those counts
        agree.
        """
        self._require_even()
        sets = []
        for circle in self.circles:
            cls = ([], [])
            for s, (label, kind) in enumerate(circle):
                if kind == TAIL:
                    cls[s % 2].append(label)
            sets.append((frozenset(cls[0]), frozenset(cls[1])))
        return WordWisePartition(tuple(sets)).canonical()


def tail_positions(p: GaussParagraph, P: WordWisePartition) -> dict[str, tuple[Occurrence, Occurrence]]:
    """Where :func:`construct_from_pair` puts each arrow's tail and head."""
    out = {}
    tail_parity = []
    for n in range(p.N):
        w = p.words[n]
        a_set, b_set = P.sets[n]
        par = 0
        for k, t in enumerate(w):
            if t in p.o_word(n) and t in a_set:
                par = k % 2
                break
        else:
            for k, t in enumerate(w):
                if t in p.o_word(n) and t in b_set:
                    par = 1 - k % 2
                    break
        tail_parity.append(par)
    for t, (o1, o2) in p.occurrences.items():
        if o1.word == o2.word:
            n = o1.word
            want = tail_parity[n] if P.side(t) == A else 1 - tail_parity[n]
            out[t] = (o1, o2) if o1.position % 2 == want else (o2, o1)
        else:
            owner = P.owner(t)
            out[t] = (o1, o2) if o1.word == owner else (o2, o1)
    return out


def construct_from_pair(p: GaussParagraph, P: WordWisePartition) -> VirtualString:
    """A virtual string with underlying paragraph ``p`` and induced partition ``P``.

    Needs conditions (i), (iii) and (v); raises :class:`PreconditionViolated`
    naming the first that fails.  Circles keep the stored rotation of each
    word; the parity bookkeeping picks which occurrence takes the tail.
    """
    from .conditions import condition_i, condition_iii  # local: avoids a cycle
    from .partition import compatible_with_p

    ok, clause = is_word_wise(p, P)
    if not ok:
        raise NotWordWise(clause)
    if not condition_i(p)[0]:
        raise PreconditionViolated("i")
    if not condition_iii(p)[0]:
        raise PreconditionViolated("iii")
    if not compatible_with_p(p, P)[0]:
        raise PreconditionViolated("v")
    placed = tail_positions(p, P)
    circles = [[None] * p.length(n) for n in range(p.N)]
    for t, (tl, hd) in placed.items():
        circles[tl.word][tl.position] = (t, TAIL)
        circles[hd.word][hd.position] = (t, HEAD)
    return VirtualString(tuple(tuple(c) for c in circles))
