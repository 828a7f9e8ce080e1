"""Realizability decisions and their cross-check against the genus oracle."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Optional

from .conditions import (
    ConditionReport,
    check_conditions,
    partition_free_conditions,
)
from .cyclic import DEFAULT_CAP
from .gauss import GaussParagraph
from .partition import WordWisePartition, enumerate_partitions, is_word_wise
from .surface import SurfaceSummary, embedding_certificate, genus
from .vstring import HEAD, TAIL, VirtualString, construct_from_pair

REALIZABLE, NOT_REALIZABLE, INDETERMINATE = "realizable", "not_realizable", "indeterminate"
SCHEMA_ID = "gpcheck/1"


@dataclass(frozen=True)
class RealizabilityCertificate:
    partition: WordWisePartition
    report: ConditionReport
    oracle: SurfaceSummary
    embedding: list[list[str]]


@dataclass(frozen=True)
class Decision:
    verdict: str
    partition: Optional[WordWisePartition] = None
    report: Optional[ConditionReport] = None
    oracle: Optional[SurfaceSummary] = None
    certificate: Optional[RealizabilityCertificate] = None
    reason: Optional[str] = None

    def to_dict(self) -> dict:
        out = {
            "schema": SCHEMA_ID,
            "verdict": self.verdict,
            "partition": None if self.partition is None else self.partition.to_dict(),
            "conditions": None if self.report is None else self.report.to_dict(),
            "oracle": None if self.oracle is None else self.oracle.to_dict(),
        }
        if self.reason is not None:
            out["reason"] = self.reason
        if self.certificate is not None:
            out["embedding"] = self.certificate.embedding
        return out


def _oracle_for(p: GaussParagraph, P: WordWisePartition, report: ConditionReport) -> Optional[SurfaceSummary]:
    if report.holds("i", "iii", "v"):
        return genus(construct_from_pair(p, P))
    return None


def decide_pair(p: GaussParagraph, P: WordWisePartition, *, cap: int = DEFAULT_CAP,
                fast: bool = False) -> Decision:
    """Check one word-wise pair and attach the oracle genus when (i), (iii)
    and (v) allow building the virtual string."""
    report = check_conditions(p, P, cap=cap, fast=fast)
    v = report.verdict
    verdict = REALIZABLE if v else INDETERMINATE if v is None else NOT_REALIZABLE
    oracle = _oracle_for(p, P, report)
    cert = None
    if v and oracle is not None:
        cert = RealizabilityCertificate(P, report, oracle, embedding_certificate(construct_from_pair(p, P)))
    return Decision(verdict, P, report, oracle, cert)


def realizable(p: GaussParagraph, *, cap: int = DEFAULT_CAP, fast: bool = False) -> Decision:
    """Try word-wise partitions in enumeration order; the first one passing
    all seven conditions wins.

    A failure of a partition-free condition rules out every partition, so
    the report for the first partition is returned straight away.
    """
    static = partition_free_conditions(p)
    static_ok = all(r.passed for r in static.values())
    first: Optional[Decision] = None
    undecided: Optional[Decision] = None
    for P in enumerate_partitions(p):
        report = check_conditions(p, P, cap=cap, fast=fast, _static=static)
        v = report.verdict
        if v:
            alpha = construct_from_pair(p, P)
            oracle = genus(alpha)
            cert = RealizabilityCertificate(P, report, oracle, embedding_certificate(alpha))
            return Decision(REALIZABLE, P, report, oracle, cert)
        if first is None:
            first = Decision(NOT_REALIZABLE, P, report, _oracle_for(p, P, report))
        if v is None and undecided is None:
            undecided = Decision(INDETERMINATE, P, report, None, reason="exceeds cap")
        if not static_ok:
            break
    if undecided is not None:
        return undecided
    if first is None:
        return Decision(NOT_REALIZABLE, reason="NoPartition")
    return first


def oracle_realizable(p: GaussParagraph) -> bool:
    """Brute force: some choice of arrow directions over ``p`` has genus 0."""
    labels = p.letters
    for bits in itertools.product((0, 1), repeat=len(labels)):
        first_tail = dict(zip(labels, bits))
        seen: set[str] = set()
        circles = []
        for w in p.words:
            slots = []
            for t in w:
                is_first = t not in seen
                seen.add(t)
                kind = TAIL if (first_tail[t] == 0) == is_first else HEAD
                slots.append((t, kind))
            circles.append(tuple(slots))
        if genus(VirtualString(tuple(circles))).genus == 0:
            return True
    return False


@dataclass(frozen=True)
class Agreement:
    agree: bool
    route: str  # "constructed" or "necessary"
    conditions_pass: Optional[bool]
    genus: Optional[int]
    alpha_genus: Optional[int]
    report: ConditionReport


def cross_validate(p: GaussParagraph, P: WordWisePartition, alpha: Optional[VirtualString] = None,
                   *, cap: int = DEFAULT_CAP, fast: bool = False) -> Agreement:
    """Compare the seven-condition verdict with the genus oracle.

    When (i), (iii), (v) hold, the constructed string must have genus 0
    exactly when all conditions pass.  Otherwise the verdict must be a
    failure.  A supplied ``alpha`` (whose underlying paragraph and induced
    partition are ``(p, P)``) is held to the same biconditional.
    """
    report = check_conditions(p, P, cap=cap, fast=fast)
    v = report.verdict
    alpha_g = None if alpha is None else genus(alpha).genus
    if report.holds("i", "iii", "v"):
        g = genus(construct_from_pair(p, P)).genus
        agree = v is None or (v == (g == 0))
        route = "constructed"
    else:
        g = None
        agree = v is False
        route = "necessary"
    if alpha_g is not None and v is not None:
        agree = agree and (v == (alpha_g == 0))
    return Agreement(agree, route, v, g, alpha_g, report)


def check_virtual_string(alpha: VirtualString, *, cap: int = DEFAULT_CAP, fast: bool = False):
    """``(verdict, genus)`` for the pair a virtual string induces.

    A string whose induced classes are not a word-wise partition gets
    verdict False: such strings always have positive genus.
    """
    p = alpha.underlying_paragraph()
    P = alpha.induced_partition()
    g = genus(alpha).genus
    if not is_word_wise(p, P)[0]:
        return False, g, None
    agreement = cross_validate(p, P, alpha, cap=cap, fast=fast)
    return agreement.conditions_pass, g, agreement
