import random

from hypothesis import given, strategies as st

from conftest import P
from gpcheck.checker import (
    INDETERMINATE,
    NOT_REALIZABLE,
    REALIZABLE,
    check_virtual_string,
    cross_validate,
    decide_pair,
    oracle_realizable,
    realizable,
)
from gpcheck.gauss import GaussParagraph
from gpcheck.generate import all_gauss_words, random_pair, random_paragraph, random_virtual_string
from gpcheck.vstring import VirtualString

G = GaussParagraph.from_words


def test_loop_is_realizable():
    d = realizable(G(["a a"]))
    assert d.verdict == REALIZABLE
    assert d.oracle.genus == 0
    assert d.certificate is not None and d.certificate.embedding
    assert d.to_dict()["embedding"] == d.certificate.embedding


def test_abab_is_not_realizable():
    d = realizable(G(["a b a b"]))
    assert d.verdict == NOT_REALIZABLE
    assert d.report.first_failure() == "i"
    assert d.oracle is None
    assert not oracle_realizable(G(["a b a b"]))


def test_hopf_shadow_is_realizable():
    d = realizable(G(["a b", "a b"]))
    assert d.verdict == REALIZABLE and d.oracle.genus == 0


def test_no_partition():
    d = realizable(G(["a a c", "c b b"]))
    assert d.verdict == NOT_REALIZABLE and d.reason == "NoPartition"
    assert d.to_dict()["partition"] is None


def test_cap_gives_indeterminate():
    d = realizable(G(["a b c d e f", "a b c d e f"]), cap=2)
    assert d.verdict == INDETERMINATE
    assert d.reason == "exceeds cap"


def test_decide_pair_attaches_oracle():
    p = G(["a b c d", "a b c d"])
    d = decide_pair(p, P(({"a"}, {"b"}), ({"c"}, {"d"})))
    assert d.verdict == NOT_REALIZABLE
    assert d.report.first_failure() == "vii"
    assert d.oracle.genus > 0


def test_one_word_checker_matches_brute_force_small():
    for p in all_gauss_words(3):
        assert (realizable(p).verdict == REALIZABLE) == oracle_realizable(p), p


@given(st.integers(0, 10 ** 6))
def test_paragraph_verdict_matches_brute_force(seed):
    p = random_paragraph(random.Random(seed), 5, 3)
    assert (realizable(p).verdict == REALIZABLE) == oracle_realizable(p)


@given(st.integers(0, 10 ** 6))
def test_fast_path_matches_full(seed):
    p = random_paragraph(random.Random(seed), 6, 3)
    assert realizable(p, fast=True).verdict == realizable(p).verdict


@given(st.integers(0, 10 ** 6))
def test_cross_validate_agrees(seed):
    p, P_, alpha = random_pair(random.Random(seed), need=())
    a = cross_validate(p, P_, alpha)
    assert a.agree
    assert a.route in ("constructed", "necessary")


@given(st.integers(0, 10 ** 6))
def test_virtual_string_verdict_is_genus_zero(seed):
    alpha = random_virtual_string(random.Random(seed), 8, 4)
    verdict, g, _ = check_virtual_string(alpha)
    assert verdict == (g == 0)


def test_lopsided_string_fails():
    alpha = VirtualString.from_tokens([["a+", "b+"], ["a-", "b-"]])
    verdict, g, agreement = check_virtual_string(alpha)
    assert (verdict, g, agreement) == (False, 1, None)
