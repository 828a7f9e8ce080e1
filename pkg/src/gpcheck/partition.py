"""Word-wise partitions: representation, validity, enumeration, compatibility."""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from functools import cached_property
from typing import Iterator, Sequence

from .errors import NotSingleLetter, UnknownLetter
from .gauss import GaussParagraph

A, A_PRIME = 0, 1


@dataclass(frozen=True)
class WordWisePartition:
    """Per word ``n`` a pair ``(A_n, A'_n)`` of letter sets."""

    sets: tuple[tuple[frozenset[str], frozenset[str]], ...]

    @classmethod
    def from_lists(cls, pairs: Sequence[tuple[Sequence[str], Sequence[str]]]) -> "WordWisePartition":
        return cls(tuple((frozenset(a), frozenset(b)) for a, b in pairs))

    @property
    def N(self) -> int:
        return len(self.sets)

    @cached_property
    def _where(self) -> dict[str, tuple[int, int]]:
        where = {}
        for n, pair in enumerate(self.sets):
            for side, s in enumerate(pair):
                for t in s:
                    where.setdefault(t, (n, side))
        return where

    def owner(self, letter: str) -> int | None:
        """Index of the word whose sets contain ``letter``."""
        hit = self._where.get(letter)
        return None if hit is None else hit[0]

    def side(self, letter: str) -> int | None:
        hit = self._where.get(letter)
        return None if hit is None else hit[1]

    def inset(self, n: int) -> frozenset[str]:
        """``A_n | A'_n``."""
        a, b = self.sets[n]
        return a | b

    def same_subset(self, i: str, j: str) -> bool:
        return self._where[i] == self._where[j]

    def swapped(self, n: int) -> "WordWisePartition":
        sets = list(self.sets)
        sets[n] = (sets[n][1], sets[n][0])
        return WordWisePartition(tuple(sets))

    def canonical(self) -> "WordWisePartition":
        """Swap each pair so the least letter of ``A_n | A'_n`` sits in ``A_n``."""
        sets = []
        for a, b in self.sets:
            if b and (not a or min(b) < min(a)):
                a, b = b, a
            sets.append((a, b))
        return WordWisePartition(tuple(sets))

    def equivalent(self, other: "WordWisePartition") -> bool:
        """Equality up to per-word ``(A_n, A'_n)`` swaps."""
        return self.canonical() == other.canonical()

    def to_dict(self) -> dict:
        return {"words": [{"A": sorted(a), "Ap": sorted(b)} for a, b in self.sets]}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    @classmethod
    def from_dict(cls, data: dict) -> "WordWisePartition":
        return cls.from_lists([(w.get("A", []), w.get("Ap", [])) for w in data["words"]])

    @classmethod
    def from_json(cls, text: str) -> "WordWisePartition":
        return cls.from_dict(json.loads(text))

    def __str__(self):
        parts = []
        for a, b in self.sets:
            parts.append("{%s}|{%s}" % (",".join(sorted(a)), ",".join(sorted(b))))
        return "(" + "; ".join(parts) + ")"


def is_word_wise(p: GaussParagraph, P: WordWisePartition) -> tuple[bool, str | None]:
    """Check the three defining clauses; return ``(ok, first failing clause)``.

    Clause ``"i"`` covers the partition requirements: the ``2N`` sets are
    pairwise disjoint, cover the alphabet, and each letter sits with a word
    it occurs in.
    """
    if P.N != p.N:
        raise ValueError(f"partition has {P.N} words, paragraph has {p.N}")
    seen: set[str] = set()
    for n, (a, b) in enumerate(P.sets):
        for t in a | b:
            if t not in p.alphabet:
                raise UnknownLetter(f"{t!r} is not a letter of the paragraph")
        if a & b or (a | b) & seen:
            return False, "i"
        seen |= a | b
        if any(not p.positions(n, t) for t in a | b):
            return False, "i"
    if seen != p.alphabet:
        return False, "i"
    for n in range(p.N):
        if not p.doubles(n) <= P.inset(n):
            return False, "ii"
    for m in range(p.N):
        for n in range(m + 1, p.N):
            shared = p.common_letters(m, n)
            if len(shared) % 2:
                return False, "iii"
            if 2 * len(shared & P.inset(m)) != len(shared):
                return False, "iii"
    return True, None


def enumerate_partitions(p: GaussParagraph, canonical: bool = True) -> Iterator[WordWisePartition]:
    """Yield every word-wise partition of ``p``.

    With ``canonical`` each swap class is produced once (least owned letter
    in ``A_n``); otherwise all ``(A_n, A'_n)`` orientations are produced.
    The order is lexicographic in the vector (shared-letter split per word
    pair, then the side bit of each owned letter), so it is stable.
    """
    pairs = []
    for m in range(p.N):
        for n in range(m + 1, p.N):
            shared = sorted(p.common_letters(m, n))
            if len(shared) % 2:
                return
            if shared:
                pairs.append((m, n, shared))
    split_choices = [itertools.combinations(s, len(s) // 2) for _, _, s in pairs]
    for split in itertools.product(*split_choices):
        owned: list[set[str]] = [set(p.doubles(n)) for n in range(p.N)]
        for (m, n, shared), to_m in zip(pairs, split):
            owned[m].update(to_m)
            owned[n].update(t for t in shared if t not in to_m)
        ordered = [sorted(s) for s in owned]
        side_choices = []
        for letters in ordered:
            free = letters[1:] if canonical else letters
            side_choices.append(itertools.product((A, A_PRIME), repeat=len(free)))
        for sides in itertools.product(*side_choices):
            sets = []
            for letters, bits in zip(ordered, sides):
                if canonical and letters:
                    bits = (A,) + bits
                a = frozenset(t for t, s in zip(letters, bits) if s == A)
                b = frozenset(t for t, s in zip(letters, bits) if s == A_PRIME)
                sets.append((a, b))
            yield WordWisePartition(tuple(sets))


def _interlaced_spans(p: GaussParagraph, n: int, i: str, j: str):
    """Spans x1..x4 of ``w = i x1 j x2 i x3 j x4`` as (start, end) positions."""
    i1, i2 = p.positions(n, i)
    j1, j2 = p.positions(n, j)
    j_in, j_out = (j1, j2) if i1 < j1 < i2 else (j2, j1)
    return (i1, j_in), (j_in, i2), (i2, j_out), (j_out, i1)


def compatible_with_p(p: GaussParagraph, P: WordWisePartition) -> tuple[bool, dict | None]:
    """Both compatibility clauses; returns ``(ok, first failing pair)``.

    Interlaced pairs are read for both namings ``(i, j)`` and ``(j, i)``.
    """
    for n in range(p.N):
        dbl = sorted(p.doubles(n))
        for i, j in itertools.combinations(dbl, 2):
            if not p.interlaced(n, i, j):
                continue
            common = len(p.w_set(n, i) & p.w_set(n, j))
            target = 1 if P.same_subset(i, j) else 0
            parities = [(common + p.out_count(n, s, e)) % 2 for s, e in _interlaced_spans(p, n, i, j)]
            if any(v != target for v in parities):
                return False, {
                    "clause": "a", "word": n, "letters": [i, j],
                    "parities": parities, "expected": target,
                }
        L = p.length(n)
        mine = sorted(p.o_word(n) & P.inset(n))
        for i, j in itertools.combinations(mine, 2):
            (pi,), (pj,) = p.positions(n, i), p.positions(n, j)
            l1 = (pj - pi - 1) % L
            l2 = L - 2 - l1
            target = 1 if P.same_subset(i, j) else 0
            if l1 % 2 != target or l2 % 2 != target:
                return False, {
                    "clause": "b", "word": n, "letters": [i, j],
                    "parities": [l1 % 2, l2 % 2], "expected": target,
                }
    return True, None


def gamma(p: GaussParagraph, P: WordWisePartition, n: int, i: str, j: str) -> int:
    """0 if exactly one of ``i``, ``j`` lies in ``A_n | A'_n``, else 1."""
    singles = p.o_word(n)
    if i == j or i not in singles or j not in singles:
        raise NotSingleLetter(f"{i!r}, {j!r} must be distinct single letters of word {n + 1}")
    inset = P.inset(n)
    return 0 if (i in inset) != (j in inset) else 1
