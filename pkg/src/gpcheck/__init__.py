"""Decide whether a Gauss paragraph is realizable by a closed curve in the plane."""

from .checker import (
    Decision,
    RealizabilityCertificate,
    cross_validate,
    decide_pair,
    oracle_realizable,
    realizable,
)
from .conditions import ConditionReport, check_conditions
from .cyclic import CyclicSequence, DpFamily, compatible_with_Dp, enumerate_Dp
from .errors import GaussError
from .gauss import GaussParagraph, parse_paragraph, serialize_paragraph
from .homology import all_even, b_mod2, basis_cycles
from .partition import WordWisePartition, compatible_with_p, enumerate_partitions, is_word_wise
from .surface import SurfaceSummary, build_ribbon, genus
from .vstring import VirtualString, construct_from_pair

__version__ = "0.1.0"

__all__ = [
    "ConditionReport", "CyclicSequence", "Decision", "DpFamily", "GaussError",
    "GaussParagraph", "RealizabilityCertificate", "SurfaceSummary", "VirtualString",
    "WordWisePartition", "all_even", "b_mod2", "basis_cycles", "build_ribbon",
    "check_conditions", "compatible_with_Dp", "compatible_with_p", "construct_from_pair",
    "cross_validate", "decide_pair", "enumerate_Dp", "enumerate_partitions", "genus",
    "is_word_wise", "oracle_realizable", "parse_paragraph", "realizable", "serialize_paragraph",
]
