import itertools
import random

import pytest
from hypothesis import given, strategies as st

import oracles
from conftest import P, paragraphs
from gpcheck.cyclic import (
    CyclicSequence,
    D_map,
    DpFamily,
    Q_map,
    W_map,
    compatible_with_Dp,
    delta,
    delta_cases,
    enumerate_Dp,
    epsilon,
    head_anchor,
    separates,
)
from gpcheck.errors import NotDoubleLetter, SpanNotInWord
from gpcheck.gauss import GaussParagraph
from gpcheck.generate import random_pair, random_paragraph
from gpcheck.partition import enumerate_partitions

G = GaussParagraph.from_words


def _insets(p, P_):
    return [P_.inset(n) for n in range(p.N)]


def test_dp_two_words_two_letters():
    p = G(["a b", "a b"])
    fam = enumerate_Dp(p)
    assert not fam.truncated
    assert {d.arcs for d in fam} == {((0, 1), (1, 0)), ((1, 0), (0, 1))}
    assert [d.to_dict() for d in fam] == [
        {"chain": [1, 2], "connectors": ["a", "b"]},
        {"chain": [1, 2], "connectors": ["b", "a"]},
    ]


def test_dp_one_word_is_empty():
    assert len(enumerate_Dp(G(["a b a b"]))) == 0


def test_dp_three_words():
    p = G(["a b", "b c", "c a"])
    fam = enumerate_Dp(p)
    # one triangle, both directions
    assert len(fam) == 2
    assert {tuple(d.chain) for d in fam} == {(0, 1, 2), (0, 2, 1)}


def test_dp_cap_truncates():
    p = G(["a b c d", "a b c d"])
    full = enumerate_Dp(p)
    assert len(full) == 12
    cut = enumerate_Dp(p, cap=5)
    assert cut.truncated and len(cut) == 5
    with pytest.raises(ValueError):
        enumerate_Dp(p, cap=0)


def test_from_chain_validation():
    p = G(["a b", "a b"])
    with pytest.raises(ValueError):
        CyclicSequence.from_chain(p, [0], ["a"])
    with pytest.raises(ValueError):
        CyclicSequence.from_chain(p, [0, 1], ["a", "a"])
    d = CyclicSequence.from_chain(p, [1, 0], ["a", "b"])
    assert d.chain == (0, 1) and d.connectors == ("b", "a")


@given(paragraphs(max_letters=6))
def test_dp_matches_exhaustive_search(p):
    fam = enumerate_Dp(p)
    arcs = [d.arcs for d in fam]
    assert len(arcs) == len(set(arcs))
    assert set(arcs) == oracles.cyclic_sequences(p.words)


def test_delta_examples():
    p = G(["a b c a b c"])
    # spans (0,3) and (1,4) fall in case 1 ordering a y b z
    assert [c for c, _ in delta_cases(p, 0, (0, 3), (1, 4))] == [1]
    assert delta(p, 0, None, (1, 4)) == 0
    with pytest.raises(SpanNotInWord):
        delta(p, 0, (0, 0), (1, 4))
    with pytest.raises(SpanNotInWord):
        delta(p, 0, (0, 9), (1, 4))


def _all_span_pairs(L):
    for a, b, y, z in itertools.product(range(L), repeat=4):
        if a != b and y != z:
            yield (a, b), (y, z)


def test_delta_agrees_with_unrolling_oracle():
    rng = random.Random(11)
    checked = 0
    for _ in range(25):
        p = random_paragraph(rng, 5, 2)
        for n, w in enumerate(p.words):
            for s1, s2 in _all_span_pairs(len(w)):
                cases = delta_cases(p, n, s1, s2)
                want = oracles.delta_all(w, s1, s2)
                assert cases, (w, s1, s2)
                assert {c for c, _ in cases} <= set(want)
                # coincident endpoints may satisfy several cases; all agree
                values = set().union(*want.values())
                assert len(values) == 1
                assert {v for _, v in cases} == values
                checked += 1
    assert checked > 1000


@given(paragraphs(max_letters=6), st.data())
def test_epsilon_matches_oracle(p, data):
    n = data.draw(st.integers(0, p.N - 1))
    L = p.length(n)
    if L < 2:
        return
    parts = list(enumerate_partitions(p))
    if not parts:
        return
    P_ = data.draw(st.sampled_from(parts))
    w = p.words[n]
    for s1, s2 in itertools.islice(_all_span_pairs(L), 400):
        assert epsilon(p, P_, n, s1, s2) == oracles.epsilon(w, P_.inset(n), s1, s2)
    assert epsilon(p, P_, n, None, (0, 1)) == 0


@given(paragraphs(max_letters=6))
def test_maps_match_oracles(p):
    fam = enumerate_Dp(p)
    for P_ in itertools.islice(enumerate_partitions(p), 3):
        ins = _insets(p, P_)
        for d in itertools.islice(fam, 8):
            for n in range(p.N):
                assert W_map(p, P_, n, d) == oracles.W(p.words, ins, n, d.arcs)
            for i, n in p.double_letters.items():
                i1, i2 = p.positions(n, i)
                lit = [Q_map(p, P_, n, i, f, d, rule="literal") for f in (False, True)]
                assert lit[0] == oracles.Q(p.words, ins, n, (i1, i2), d.arcs)
                assert lit[1] == oracles.Q(p.words, ins, n, (i2, i1), d.arcs)
                h = head_anchor(p, P_, i)
                extra = separates(p.length(n), i1, i2, d.arcs[n])
                assert Q_map(p, P_, n, i, bool(h), d) == lit[h] + extra
                assert Q_map(p, P_, n, i, not h, d) == lit[1 - h]
            for d2 in itertools.islice(fam, 8):
                values, total = D_map(p, P_, d, d2)
                assert total == sum(values) == oracles.D(p.words, ins, d.arcs, d2.arcs)


def test_q_needs_double_letter():
    p = G(["a b", "a b"])
    d = enumerate_Dp(p).sequences[0]
    with pytest.raises(NotDoubleLetter):
        Q_map(p, P(({"a"}, set()), ({"b"}, set())), 0, "a", False, d)


@given(st.integers(0, 10 ** 6))
def test_kernel_matches_reference(seed):
    rng = random.Random(seed)
    p, P_, _ = random_pair(rng, max_arrows=7, max_circles=4, need=())
    fam = enumerate_Dp(p)
    assert compatible_with_Dp(p, P_, fam, "kernel") == compatible_with_Dp(p, P_, fam, "reference")


@given(st.integers(0, 10 ** 6))
def test_condition_invariant_under_swap_and_rotation(seed):
    rng = random.Random(seed)
    p, P_, _ = random_pair(rng, max_arrows=6, max_circles=3, need=())
    base = compatible_with_Dp(p, P_, enumerate_Dp(p))[0]
    for n in range(p.N):
        assert compatible_with_Dp(p, P_.swapped(n), enumerate_Dp(p))[0] == base
    q = p.rotated([rng.randrange(p.length(n)) for n in range(p.N)])
    assert compatible_with_Dp(q, P_, enumerate_Dp(q))[0] == base


def test_truncated_family_is_indeterminate():
    p = G(["a b c d", "a b c d"])
    P_ = P(({"a", "b"}, set()), ({"c", "d"}, set()))
    fam = enumerate_Dp(p, cap=1)
    ok, info = compatible_with_Dp(p, P_, fam)
    assert ok in (None, False)
    if ok is None:
        assert info == {"reason": "truncated"}
    assert compatible_with_Dp(p, P_, DpFamily(()))[0] is True
    with pytest.raises(ValueError):
        compatible_with_Dp(p, P_, fam, engine="gpu")


@given(st.integers(0, 10 ** 6))
def test_head_loop_is_circle_minus_tail_loop(seed):
    # the loop at the head plus the loop at the tail is the whole circle
    p, P_, _ = random_pair(random.Random(seed), max_arrows=7, max_circles=4, need=())
    for i, n in p.double_letters.items():
        h = head_anchor(p, P_, i)
        for d in enumerate_Dp(p, cap=40):
            head = Q_map(p, P_, n, i, bool(h), d)
            tail = Q_map(p, P_, n, i, not h, d)
            assert (head - tail - W_map(p, P_, n, d)) % 2 == 0


def test_literal_rule_rejects_a_planar_pair():
    from gpcheck.surface import genus
    from gpcheck.vstring import construct_from_pair

    p = G(["e c b d", "d e a b c a"])
    P_ = P(({"c"}, {"e"}), ({"a", "d"}, {"b"}))
    assert genus(construct_from_pair(p, P_)).planar
    fam = enumerate_Dp(p)
    assert compatible_with_Dp(p, P_, fam) == (True, None)
    for engine in ("kernel", "reference"):
        ok, witness = compatible_with_Dp(p, P_, fam, engine=engine, rule="literal")
        assert ok is False and witness["map"] == "Q"
