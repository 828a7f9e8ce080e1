import random

import pytest
from hypothesis import given, strategies as st

from conftest import P
from gpcheck.cyclic import enumerate_Dp
from gpcheck.errors import PreconditionViolated
from gpcheck.gauss import GaussParagraph
from gpcheck.generate import random_pair
from gpcheck.homology import (
    BasisClass,
    Evaluator,
    NotApplicable,
    all_even,
    b_mod2,
    basis_cycles,
    spanning_tree,
)
from gpcheck.surface import genus
from gpcheck.vstring import construct_from_pair, tail_positions

G = GaussParagraph.from_words


def test_basis_one_loop():
    tree, basis = basis_cycles(G(["a a"]))
    assert tree == []
    assert [c.kind for c in basis] == ["circle", "arrow"]
    assert basis[1].to_dict() == {"class": "arrow", "letter": "a", "primed": False}


def test_basis_hopf():
    p = G(["a b", "a b"])
    tree, cotree = spanning_tree(p)
    assert (tree, cotree) == (["a"], ["b"])
    _, basis = basis_cycles(p)
    assert [c.kind for c in basis] == ["circle", "circle", "cycle"]
    assert basis[0].to_dict() == {"class": "circle", "word": 1}
    assert basis[2].d.connectors in (("a", "b"), ("b", "a"))


@given(st.integers(0, 10 ** 6))
def test_basis_rank_matches_surface(seed):
    p, P_, alpha = random_pair(random.Random(seed), max_arrows=8, max_circles=4)
    _, basis = basis_cycles(p)
    s = genus(alpha)
    assert len(basis) == len(p.alphabet) + 1 == 2 * s.genus + s.boundary - 1


def test_hopf_values():
    p = G(["a b", "a b"])
    P_ = P(({"a"}, set()), ({"b"}, set()))
    _, basis = basis_cycles(p)
    ev = Evaluator(p, P_)
    assert ev(basis[0], basis[1]) == 0
    assert all(ev(x, y) == 0 for x in basis for y in basis)
    assert all_even(p, P_) == (True, None)


def test_trefoil_shadow_is_even():
    p = G(["a b c a b c"])
    P_ = P(({"a", "b", "c"}, set()))
    assert all_even(p, P_) == (True, None)
    assert genus(construct_from_pair(p, P_)).planar


def test_odd_circle_against_cycle():
    p = G(["a b c d", "a b c d"])
    P_ = P(({"a"}, {"b"}), ({"c"}, {"d"}))
    ok, witness = all_even(p, P_)
    assert genus(construct_from_pair(p, P_)).genus > 0
    assert ok is False
    assert witness["pair"][0] == {"class": "circle", "word": 1}
    assert witness["pair"][1]["class"] == "cycle"


def test_all_even_needs_preconditions():
    with pytest.raises(PreconditionViolated):
        all_even(G(["a b a b"]), P(({"a"}, {"b"})))


def test_not_applicable_has_no_truth_value():
    with pytest.raises(TypeError):
        bool(NotApplicable("x"))


@given(st.integers(0, 10 ** 6))
def test_all_even_iff_planar(seed):
    p, P_, alpha = random_pair(random.Random(seed), max_arrows=8, max_circles=4)
    alpha = construct_from_pair(p, P_)
    ok, _ = all_even(p, P_, alpha=alpha)
    assert ok == genus(alpha).planar
    full, _ = all_even(p, P_, family=enumerate_Dp(p), alpha=alpha)
    assert full == ok


@given(st.integers(0, 10 ** 6))
def test_pairing_symmetric_and_applicable(seed):
    p, P_, _ = random_pair(random.Random(seed), max_arrows=7, max_circles=3)
    _, basis = basis_cycles(p)
    basis += [BasisClass.arrow(p, i, primed=True) for i in sorted(p.double_letters)]
    ev = Evaluator(p, P_)
    for x in basis:
        for y in basis:
            v = ev(x, y)
            assert not isinstance(v, NotApplicable)
            assert v == ev(y, x)
    for x in basis:
        assert ev(x, x) == 0


@given(st.integers(0, 10 ** 6))
def test_pset_parity_counts_crossing_arrows(seed):
    p, P_, _ = random_pair(random.Random(seed), max_arrows=8, max_circles=4)
    alpha = construct_from_pair(p, P_)
    placed = tail_positions(p, P_)
    for i, m in p.double_letters.items():
        tl, hd = placed[i]
        p_tail = p.o_between(m, tl.position, hd.position)
        p_head = p.o_between(m, hd.position, tl.position)
        plain = sum(alpha.n_ij(m, k, i) for k in range(p.N))
        star = sum(alpha.n_star_ij(m, k, i) for k in range(p.N))
        assert len(p_tail) % 2 == plain % 2
        assert len(p_head) % 2 == star % 2


@given(st.integers(0, 10 ** 6))
def test_circle_pairing_parity(seed):
    p, P_, _ = random_pair(random.Random(seed), max_arrows=8, max_circles=4)
    alpha = construct_from_pair(p, P_)
    for m in range(p.N):
        for n in range(m + 1, p.N):
            signed = alpha.arr_count(n, m) - alpha.arr_count(m, n)
            shared = len(p.common_letters(m, n))
            assert signed % 2 == shared % 2
            assert b_mod2(p, P_, BasisClass.circle(m), BasisClass.circle(n), alpha) == shared % 2
