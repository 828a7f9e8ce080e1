"""Gauss paragraphs: parsing, validation and the primitive letter queries.

A paragraph is an ordered tuple of circular words.  Every query below is
answered from the *stored* rotation of each word, but only ever in a way
that does not depend on which rotation was stored (p-set labelling is the
one documented exception, see :meth:`GaussParagraph.p_sets`).

Positions are 0-based indices into the stored rotation; word indices are
0-based as well.
"""

from __future__ import annotations

import re
from collections import defaultdict
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, NamedTuple, Sequence

from .errors import (
    DisconnectedParagraph,
    EmptyWord,
    LetterCountError,
    NotDoubleLetter,
    ParseError,
    SpanNotInWord,
    TokenError,
)

LETTER_RE = re.compile(r"[A-Za-z0-9_]+\Z")


def canonical_rotation(letters: Sequence[str]) -> tuple[str, ...]:
    """Lexicographically least rotation of a circular word."""
    letters = tuple(letters)
    if not letters:
        return letters
    return min(letters[k:] + letters[:k] for k in range(len(letters)))


def span_positions(length: int, start: int, end: int) -> range:
    """Positions strictly between ``start`` and ``end`` walking forward.

    ``start == end`` means the whole circle except ``start``.  The result is
    a range of *unreduced* indices; take them modulo ``length``.
    """
    stop = end if end > start else end + length
    return range(start + 1, stop)


class Occurrence(NamedTuple):
    word: int
    position: int


class Arc(NamedTuple):
    """Forward circular span on one word between two distinct positions."""

    word: int
    start: int
    end: int


@dataclass(frozen=True, eq=False)
class GaussParagraph:
    """A validated Gauss paragraph.

    >>> p = GaussParagraph.from_words(["a b a c", "b c"])
    >>> p.classify_letters(0)
    (frozenset({'b', 'c'}), frozenset({'a'}))
    >>> sorted(p.p_sets("a")[0]), sorted(p.p_sets("a")[1])
    (['b'], ['c'])
    """

    words: tuple[tuple[str, ...], ...]

    def __post_init__(self):
        if not self.words:
            raise EmptyWord("a paragraph needs at least one word")
        for n, w in enumerate(self.words):
            if not w:
                raise EmptyWord(f"word {n + 1} is empty")
            for tok in w:
                if not isinstance(tok, str) or not LETTER_RE.match(tok):
                    raise TokenError(f"bad letter {tok!r} in word {n + 1}")
        counts: dict[str, int] = defaultdict(int)
        for w in self.words:
            for tok in w:
                counts[tok] += 1
        bad = sorted(t for t, c in counts.items() if c != 2)
        if bad:
            raise LetterCountError(
                "letters must occur exactly twice: "
                + ", ".join(f"{t} x{counts[t]}" for t in bad)
            )
        if not _connected(len(self.words), self.occurrences.values()):
            raise DisconnectedParagraph("the words split into groups sharing no letter")

    @classmethod
    def from_words(cls, words: Iterable) -> "GaussParagraph":
        """Build from strings (whitespace separated) or token sequences."""
        out = []
        for w in words:
            out.append(tuple(w.split()) if isinstance(w, str) else tuple(w))
        return cls(tuple(out))

    # -- identity ---------------------------------------------------------

    @cached_property
    def canonical(self) -> tuple[tuple[str, ...], ...]:
        return tuple(canonical_rotation(w) for w in self.words)

    def __eq__(self, other):
        if not isinstance(other, GaussParagraph):
            return NotImplemented
        return self.canonical == other.canonical

    def __hash__(self):
        return hash(self.canonical)

    def __repr__(self):
        return "GaussParagraph(%s)" % ", ".join(repr(" ".join(w)) for w in self.words)

    # -- basic structure --------------------------------------------------

    @property
    def N(self) -> int:
        return len(self.words)

    @cached_property
    def alphabet(self) -> frozenset[str]:
        return frozenset(self.occurrences)

    @cached_property
    def letters(self) -> tuple[str, ...]:
        """The alphabet in token byte order."""
        return tuple(sorted(self.occurrences))

    @cached_property
    def occurrences(self) -> dict[str, tuple[Occurrence, Occurrence]]:
        occ: dict[str, list[Occurrence]] = defaultdict(list)
        for n, w in enumerate(self.words):
            for pos, tok in enumerate(w):
                occ[tok].append(Occurrence(n, pos))
        return {t: tuple(v) for t, v in occ.items()}

    def length(self, n: int) -> int:
        return len(self.words[n])

    def positions(self, n: int, letter: str) -> tuple[int, ...]:
        return tuple(o.position for o in self.occurrences[letter] if o.word == n)

    def words_of(self, letter: str) -> tuple[int, ...]:
        """Word indices the letter occurs in (one entry per distinct word)."""
        return tuple(sorted({o.word for o in self.occurrences[letter]}))

    @cached_property
    def _classified(self):
        res = []
        for n in range(self.N):
            seen = defaultdict(int)
            for tok in self.words[n]:
                seen[tok] += 1
            singles = frozenset(t for t, c in seen.items() if c == 1)
            doubles = frozenset(t for t, c in seen.items() if c == 2)
            res.append((singles, doubles))
        return tuple(res)

    def classify_letters(self, n: int) -> tuple[frozenset[str], frozenset[str]]:
        """``(singles, doubles)`` of word ``n``."""
        return self._classified[n]

    def o_word(self, n: int) -> frozenset[str]:
        """Single letters of word ``n``."""
        return self._classified[n][0]

    def doubles(self, n: int) -> frozenset[str]:
        return self._classified[n][1]

    @cached_property
    def double_letters(self) -> dict[str, int]:
        """Map each double letter to the word containing it."""
        return {t: n for n in range(self.N) for t in self._classified[n][1]}

    @cached_property
    def single_letters(self) -> frozenset[str]:
        return frozenset(t for t in self.occurrences if t not in self.double_letters)

    def word_of_double(self, letter: str) -> int:
        try:
            return self.double_letters[letter]
        except KeyError:
            raise NotDoubleLetter(f"{letter!r} is not a double letter of any word") from None

    def _require_double(self, n: int, letter: str) -> tuple[int, int]:
        if letter not in self._classified[n][1]:
            raise NotDoubleLetter(f"{letter!r} is not a double letter of word {n + 1}")
        return self.positions(n, letter)

    # -- spans --------------------------------------------------------------

    def span_letters(self, n: int, start: int, end: int) -> list[str]:
        w = self.words[n]
        L = len(w)
        return [w[k % L] for k in span_positions(L, start, end)]

    def o_between(self, n: int, start: int, end: int) -> frozenset[str]:
        """Letters occurring exactly once strictly between two positions."""
        seen: dict[str, int] = defaultdict(int)
        for tok in self.span_letters(n, start, end):
            seen[tok] += 1
        return frozenset(t for t, c in seen.items() if c == 1)

    def o_span(self, arc: Arc) -> frozenset[str]:
        """Once-occurring letters in the open span of ``arc``."""
        n, s, e = arc
        if not (0 <= n < self.N) or not (0 <= s < self.length(n)) or not (0 <= e < self.length(n)):
            raise SpanNotInWord(f"{arc} is not a span of this paragraph")
        if s == e:
            raise SpanNotInWord("an arc needs two distinct endpoints")
        return self.o_between(n, s, e)

    def out_count(self, n: int, start: int, end: int) -> int:
        """Number of letters in the open span shared with other words."""
        singles = self.o_word(n)
        return len({t for t in self.span_letters(n, start, end) if t in singles})

    # -- interlacement and p-sets ----------------------------------------

    def interlaced(self, n: int, i: str, j: str) -> bool:
        """True iff double letters ``i``, ``j`` alternate around word ``n``."""
        if i == j:
            raise ValueError("interlacement needs two distinct letters")
        a1, a2 = self._require_double(n, i)
        b1, b2 = self._require_double(n, j)
        return (a1 < b1 < a2) != (a1 < b2 < a2)

    @cached_property
    def _w_sets(self) -> dict[str, frozenset[str]]:
        res = {}
        for n in range(self.N):
            dbl = sorted(self.doubles(n))
            for i in dbl:
                a1, a2 = self.positions(n, i)
                res[i] = frozenset(
                    j for j in dbl
                    if j != i and sum(a1 < q < a2 for q in self.positions(n, j)) == 1
                )
        return res

    def w_set(self, n: int, i: str) -> frozenset[str]:
        """Letters interlaced with ``i`` in word ``n``."""
        self._require_double(n, i)
        return self._w_sets[i]

    @cached_property
    def _p_sets(self) -> dict[str, tuple[frozenset[str], frozenset[str]]]:
        res = {}
        for i, n in self.double_letters.items():
            a1, a2 = self.positions(n, i)
            res[i] = (self.o_between(n, a1, a2), self.o_between(n, a2, a1))
        return res

    def p_sets(self, i: str) -> tuple[frozenset[str], frozenset[str]]:
        """``(p_i, p_i')`` for a double letter ``i``.

        ``p_i`` is read on the span that follows the occurrence of ``i`` at
        the smaller stored position.  Everything downstream uses both sets
        symmetrically, so this labelling never affects a verdict.
        """
        self.word_of_double(i)
        return self._p_sets[i]

    def common_letters(self, m: int, n: int) -> frozenset[str]:
        if m == n:
            raise ValueError("common_letters needs two distinct words")
        return frozenset(self.words[m]) & frozenset(self.words[n])

    # -- transformations ---------------------------------------------------

    def rotated(self, shifts: Sequence[int]) -> "GaussParagraph":
        """Same paragraph with word ``n`` stored starting at ``shifts[n]``."""
        return GaussParagraph(tuple(
            w[k % len(w):] + w[:k % len(w)] for w, k in zip(self.words, shifts)
        ))

    def relabeled(self, mapping: dict[str, str]) -> "GaussParagraph":
        return GaussParagraph(tuple(tuple(mapping[t] for t in w) for w in self.words))

    def serialize(self) -> str:
        return "".join(" ".join(w) + "\n" for w in self.canonical)


def _connected(n_words: int, occurrences: Iterable[Sequence[Occurrence]]) -> bool:
    parent = list(range(n_words))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for occ in occurrences:
        a, b = find(occ[0].word), find(occ[1].word)
        if a != b:
            parent[a] = b
    return len({find(k) for k in range(n_words)}) == 1


def parse_paragraph(text: str) -> GaussParagraph:
    """Parse the one-word-per-line text format.

    ``#`` starts a comment, blank lines are skipped, tokens are separated by
    ASCII whitespace.
    """
    words = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        toks = []
        for m in re.finditer(r"\S+", line):
            tok = m.group()
            if not LETTER_RE.match(tok):
                raise TokenError(f"bad token {tok!r}", line=lineno, column=m.start() + 1)
            toks.append(tok)
        if toks:
            words.append(tuple(toks))
    if not words:
        raise ParseError("no words found")
    return GaussParagraph(tuple(words))


def serialize_paragraph(p: GaussParagraph) -> str:
    return p.serialize()
