"""The seven realizability conditions for a pair (paragraph, partition).

Every ``condition_*`` function returns ``(passed, witness, checked)`` where
``checked`` is the size of the condition's quantifier domain and
``witness`` describes the first failing instance (words are 1-based in
witnesses).  Conditions (i)-(iv) and (vi) do not depend on the partition.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Optional

from .cyclic import DEFAULT_CAP, DpFamily, compatible_with_Dp, enumerate_Dp
from .gauss import GaussParagraph
from .partition import WordWisePartition, compatible_with_p

CONDITION_IDS = ("i", "ii", "iii", "iv", "v", "vi", "vii")
PARTITION_FREE = ("i", "ii", "iii", "iv", "vi")


def _doubles(p: GaussParagraph) -> list[tuple[int, str]]:
    return sorted((n, t) for t, n in p.double_letters.items())


def condition_i(p: GaussParagraph):
    dbl = _doubles(p)
    for n, i in dbl:
        pi, pi2 = p.p_sets(i)
        counts = (len(p.w_set(n, i)), len(pi), len(pi2))
        if any(c % 2 for c in counts):
            return False, {"word": n + 1, "letter": i, "w": counts[0], "p": counts[1], "p_prime": counts[2]}, len(dbl)
    return True, None, len(dbl)


def condition_ii(p: GaussParagraph):
    checked = 0
    for n, i in _doubles(p):
        for m in range(p.N):
            if m == n:
                continue
            checked += 1
            ow = p.o_word(m)
            counts = tuple(len(s & ow) for s in p.p_sets(i))
            if counts[0] % 2 or counts[1] % 2:
                return False, {"letter": i, "word": m + 1, "p": counts[0], "p_prime": counts[1]}, None
    return True, None, checked


def condition_iii(p: GaussParagraph):
    checked = 0
    for m, n in itertools.combinations(range(p.N), 2):
        checked += 1
        shared = p.common_letters(m, n)
        if len(shared) % 2:
            return False, {"words": [m + 1, n + 1], "common": sorted(shared)}, None
    return True, None, checked


def condition_iv(p: GaussParagraph):
    checked = 0
    for n in range(p.N):
        for i, j in itertools.combinations(sorted(p.doubles(n)), 2):
            if p.interlaced(n, i, j):
                continue
            checked += 1
            common = p.w_set(n, i) & p.w_set(n, j)
            if len(common) % 2:
                return False, {"word": n + 1, "letters": [i, j], "common": sorted(common)}, None
    return True, None, checked


def condition_vi(p: GaussParagraph):
    checked = 0
    for (m, i), (n, j) in itertools.combinations(_doubles(p), 2):
        if m == n:
            continue
        checked += 1
        (pi, pi2), (pj, pj2) = p.p_sets(i), p.p_sets(j)
        counts = [len(pi & pj), len(pi & pj2), len(pi2 & pj), len(pi2 & pj2)]
        if any(c % 2 for c in counts):
            return False, {"letters": [i, j], "counts": counts}, None
    return True, None, checked


def _finish(result, full_count):
    """Fill in ``checked`` for conditions that stop at the first failure."""
    ok, witness, checked = result
    return ok, witness, full_count if checked is None else checked


def _domain_sizes(p: GaussParagraph) -> dict[str, int]:
    dbl = _doubles(p)
    pairs_iv = sum(
        1 for n in range(p.N) for i, j in itertools.combinations(sorted(p.doubles(n)), 2)
        if not p.interlaced(n, i, j)
    )
    return {
        "ii": len(dbl) * (p.N - 1),
        "iii": p.N * (p.N - 1) // 2,
        "iv": pairs_iv,
        "vi": sum(1 for (m, _), (n, _) in itertools.combinations(dbl, 2) if m != n),
    }


def partition_free_conditions(p: GaussParagraph) -> dict[str, "ConditionResult"]:
    sizes = _domain_sizes(p)
    out = {}
    for cid, fn in (("i", condition_i), ("ii", condition_ii), ("iii", condition_iii),
                    ("iv", condition_iv), ("vi", condition_vi)):
        ok, witness, checked = _finish(fn(p), sizes.get(cid))
        out[cid] = ConditionResult(ok, witness, checked)
    return out


def condition_v(p: GaussParagraph, P: WordWisePartition):
    ok, witness = compatible_with_p(p, P)
    checked = 0
    for n in range(p.N):
        dbl = sorted(p.doubles(n))
        checked += sum(1 for i, j in itertools.combinations(dbl, 2) if p.interlaced(n, i, j))
        k = len(p.o_word(n) & P.inset(n))
        checked += k * (k - 1) // 2
    if witness is not None:
        witness = dict(witness, word=witness["word"] + 1)
    return ok, witness, checked


def condition_vii(
    p: GaussParagraph, P: WordWisePartition, family: DpFamily, engine: str = "kernel", rule: str = "oriented"
):
    ok, witness = compatible_with_Dp(p, P, family, engine=engine, rule=rule)
    D = len(family)
    checked = p.N * D + 2 * len(p.double_letters) * D + D * D
    return ok, witness, checked


@dataclass(frozen=True)
class ConditionResult:
    passed: Optional[bool]  # None = indeterminate
    witness: Optional[dict] = None
    checked: int = 0

    def to_dict(self) -> dict:
        return {"pass": self.passed, "witness": self.witness, "checked": self.checked}


@dataclass(frozen=True)
class ConditionReport:
    results: dict[str, ConditionResult] = field(default_factory=dict)

    @property
    def verdict(self) -> Optional[bool]:
        """True if all seven pass, False if any fails, else None."""
        vals = [self.results[c].passed for c in CONDITION_IDS]
        if any(v is False for v in vals):
            return False
        if any(v is None for v in vals):
            return None
        return True

    @property
    def passed(self) -> bool:
        return self.verdict is True

    def first_failure(self) -> Optional[str]:
        for c in CONDITION_IDS:
            if self.results[c].passed is False:
                return c
        return None

    def holds(self, *ids: str) -> bool:
        return all(self.results[c].passed is True for c in ids)

    def to_dict(self) -> dict:
        return {c: self.results[c].to_dict() for c in CONDITION_IDS}


def check_conditions(
    p: GaussParagraph,
    P: WordWisePartition,
    family: Optional[DpFamily] = None,
    *,
    cap: int = DEFAULT_CAP,
    fast: bool = False,
    engine: str = "kernel",
    rule: str = "oriented",
    _static: Optional[dict] = None,
) -> ConditionReport:
    """Evaluate all seven conditions for a word-wise pair.

    ``family`` defaults to the full cyclic-sequence family (enumerated up to
    ``cap``); with ``fast`` it defaults to the basis subfamily instead.
    ``_static`` lets callers reuse the partition-free results across
    partitions of the same paragraph.  ``rule="literal"`` evaluates the Q maps
    without the head-anchor correction (see :func:`gpcheck.cyclic.Q_map`).
    """
    results = dict(_static) if _static is not None else partition_free_conditions(p)
    results["v"] = ConditionResult(*condition_v(p, P))
    if family is None:
        family = basis_family(p) if fast else enumerate_Dp(p, cap)
    results["vii"] = ConditionResult(*condition_vii(p, P, family, engine, rule))
    return ConditionReport(results)


def basis_family(p: GaussParagraph) -> DpFamily:
    from .homology import basis_cycles  # local: homology imports this module

    _, basis = basis_cycles(p)
    return DpFamily(tuple(c.d for c in basis if c.kind == "cycle"))
