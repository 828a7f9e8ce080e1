"""Instance generators: exhaustive small virtual strings, chord-diagram
words, and seeded random strings and paragraphs."""

from __future__ import annotations

import itertools
import random
import string
from typing import Iterator, Optional

from .errors import GaussError, VirtualStringError
from .gauss import GaussParagraph
from .vstring import HEAD, TAIL, VirtualString


def label(k: int) -> str:
    return string.ascii_lowercase[k] if k < 26 else f"x{k}"


def _relabel(circles) -> tuple:
    names: dict[str, str] = {}
    out = []
    for c in circles:
        row = []
        for t, kind in c:
            if t not in names:
                names[t] = label(len(names))
            row.append((names[t], kind))
        out.append(tuple(row))
    return tuple(out)


def canonical_form(circles) -> tuple:
    """Least relabelled form over all per-circle rotations."""
    best = None
    for shifts in itertools.product(*(range(len(c)) for c in circles)):
        rot = [c[s:] + c[:s] for c, s in zip(circles, shifts)]
        cand = _relabel(rot)
        if best is None or cand < best:
            best = cand
    return best


def _matchings(items: list[int]) -> Iterator[list[tuple[int, int]]]:
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for k, other in enumerate(rest):
        for tail in _matchings(rest[:k] + rest[k + 1:]):
            yield [(first, other)] + tail


def _even_compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    for cut in itertools.combinations(range(1, total // 2), parts - 1):
        bounds = (0,) + cut + (total // 2,)
        yield tuple(2 * (b - a) for a, b in zip(bounds, bounds[1:]))


def all_virtual_strings(max_arrows: int, max_circles: int) -> list[VirtualString]:
    """Every connected virtual string with at most the given sizes and an
    even number of endpoints on each circle, one per rotation class."""
    seen = set()
    out = []
    for k in range(1, max_arrows + 1):
        for c in range(1, min(max_circles, k) + 1):
            for sizes in _even_compositions(2 * k, c):
                where = [(ci, s) for ci, size in enumerate(sizes) for s in range(size)]
                for match in _matchings(list(range(2 * k))):
                    for dirs in itertools.product((0, 1), repeat=k):
                        circles = [[None] * size for size in sizes]
                        for a, ((x, y), d) in enumerate(zip(match, dirs)):
                            tail, head = (x, y) if d == 0 else (y, x)
                            ct, st = where[tail]
                            ch, sh = where[head]
                            circles[ct][st] = (label(a), TAIL)
                            circles[ch][sh] = (label(a), HEAD)
                        circles = [tuple(cc) for cc in circles]
                        key = canonical_form(circles)
                        if key in seen:
                            continue
                        seen.add(key)
                        try:
                            out.append(VirtualString(key))
                        except VirtualStringError:
                            pass  # disconnected
    return out


def all_gauss_words(max_letters: int) -> list[GaussParagraph]:
    """One-word paragraphs with 1..max_letters letters, up to rotation and
    relabelling."""
    seen = set()
    out = []
    for k in range(1, max_letters + 1):
        for match in _matchings(list(range(2 * k))):
            word = [None] * (2 * k)
            for a, (x, y) in enumerate(match):
                word[x] = word[y] = a
            key = min(
                tuple(_first_seen(word[s:] + word[:s])) for s in range(2 * k)
            )
            if key not in seen:
                seen.add(key)
                out.append(GaussParagraph((tuple(label(a) for a in key),)))
    return out


def _first_seen(word):
    names: dict = {}
    return [names.setdefault(t, len(names)) for t in word]


def random_virtual_string(rng: random.Random, max_arrows: int, max_circles: int,
                          tries: int = 1000) -> VirtualString:
    """Uniform arrow placement with even endpoint counts; rejects
    disconnected draws."""
    for _ in range(tries):
        c = rng.randint(1, max_circles)
        k = rng.randint(max(1, c), max(c, max_arrows))
        if k > max_arrows:
            continue
        sizes = rng.choice(list(_even_compositions(2 * k, c)))
        slots = [(ci, s) for ci, size in enumerate(sizes) for s in range(size)]
        rng.shuffle(slots)
        circles = [[None] * size for size in sizes]
        for a in range(k):
            (ct, st), (ch, sh) = slots[2 * a], slots[2 * a + 1]
            circles[ct][st] = (label(a), TAIL)
            circles[ch][sh] = (label(a), HEAD)
        try:
            return VirtualString(tuple(tuple(cc) for cc in circles))
        except VirtualStringError:
            continue
    raise RuntimeError("could not draw a connected virtual string")


def random_paragraph(rng: random.Random, max_letters: int, max_words: int,
                     tries: int = 1000) -> GaussParagraph:
    """Random connected paragraph; letters are dealt to random word slots."""
    for _ in range(tries):
        n_words = rng.randint(1, max_words)
        k = rng.randint(n_words, max(n_words, max_letters))
        tokens = [label(a) for a in range(k) for _ in range(2)]
        rng.shuffle(tokens)
        cuts = sorted(rng.sample(range(1, 2 * k), n_words - 1))
        bounds = [0] + cuts + [2 * k]
        words = [tuple(tokens[a:b]) for a, b in zip(bounds, bounds[1:])]
        try:
            return GaussParagraph(tuple(words))
        except GaussError:
            continue
    raise RuntimeError("could not draw a connected paragraph")


def random_pair(rng: random.Random, max_arrows: int = 8, max_circles: int = 4,
                need: tuple[str, ...] = ("i", "iii", "v"), tries: int = 100000
                ) -> tuple[GaussParagraph, "object", Optional[VirtualString]]:
    """A word-wise pair satisfying the conditions in ``need``.

    Draws a random virtual string and uses its induced partition; returns
    ``(p, P, alpha)``.
    """
    from .conditions import condition_i, condition_iii
    from .partition import compatible_with_p, is_word_wise

    for _ in range(tries):
        alpha = random_virtual_string(rng, max_arrows, max_circles)
        p = alpha.underlying_paragraph()
        P = alpha.induced_partition()
        if not is_word_wise(p, P)[0]:
            continue
        ok = True
        for cid in need:
            if cid == "i":
                ok = condition_i(p)[0]
            elif cid == "iii":
                ok = condition_iii(p)[0]
            elif cid == "v":
                ok = compatible_with_p(p, P)[0]
            if not ok:
                break
        if ok:
            return p, P, alpha
    raise RuntimeError("no pair found")
