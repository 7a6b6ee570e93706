import random
from itertools import combinations
from math import comb

import pytest

from positroids.errors import DomainError
from positroids.families import elements, full, mask, relabel
from positroids.oracle import dual_family, enumerate_bases, pattern_Mw, rank_of
from positroids.perms import (
    all_perms, avoiders_123, avoids_123, bruhat_leq, compose, g_stat, identity,
    inverse, longest,
)
from positroids.positroid import (
    AffinePermutation, P_Kn, Q_family, affine_perm, alpha_map, catalan_matroid,
    enumerate_Pw, juggling, meet_with_longest, member, member_via_blocks,
    member_via_juggling, n_subsets, pattern_Nw, q_ground_set, reflect_family,
    reflect_set, reverse_positroid_by_intervals, star_relabel, u_perm, v_word,
)


def test_v_word_examples():
    assert v_word(mask({1, 2, 5, 7, 10, 11}), 6) == (7, 5, 2, 10, 11, 1)
    assert v_word(mask({1, 3, 4, 6, 9, 10, 15, 16, 17}), 9) == (10, 9, 6, 4, 3, 15, 16, 17, 1)
    assert v_word(mask({1, 2}), 2) == (2, 1)
    with pytest.raises(ValueError):
        v_word(mask({1}), 2)


def test_u_perm_examples():
    assert u_perm(mask({1, 3, 4, 6, 9, 10, 15, 16, 17}), 9) == (9, 8, 6, 4, 3, 7, 5, 2, 1)
    assert u_perm(mask({1, 4}), 2) == (1, 2)
    assert u_perm(mask({1, 2}), 2) == (2, 1)


@pytest.mark.parametrize("n", range(1, 7))
def test_u_perm_is_the_meet_with_longest(n):
    for I in n_subsets(2 * n, n):
        u = u_perm(I, n)
        assert u == meet_with_longest(v_word(I, n))
        assert avoids_123(u)
        assert bruhat_leq(u, v_word(I, n))


@pytest.mark.parametrize("n", range(1, 5))
def test_u_perm_is_the_largest_w(n):
    for I in n_subsets(2 * n, n):
        u = u_perm(I, n)
        for w in all_perms(n):
            assert member(w, I) == bruhat_leq(w, u)


def test_member_examples():
    assert not member((2, 1), mask({1, 4}))
    for I in n_subsets(6, 3):
        assert member((1, 2, 3), I)
    assert member((2, 1, 4, 3), mask({2, 5, 6, 8}))
    assert rank_of(pattern_Mw((2, 1, 4, 3)), mask({2, 5, 6, 8})) == 4


def test_member_via_juggling_examples():
    assert member_via_juggling((2, 1), mask({2, 3}))
    assert not member_via_juggling((2, 1), mask({1, 4}))
    assert not member_via_blocks((2, 1), mask({1, 4}))
    assert all(member_via_juggling((1, 2), I) for I in n_subsets(4, 2))


@pytest.mark.parametrize("n", range(1, 5))
def test_membership_tests_agree_exhaustively(n):
    for w in all_perms(n):
        B = enumerate_bases(pattern_Mw(w))
        for I in n_subsets(2 * n, n):
            expected = I in B
            assert member(w, I) == expected
            assert member_via_juggling(w, I) == expected
            assert member_via_blocks(w, I) == expected


@pytest.mark.parametrize("n", [5, 6])
def test_membership_tests_agree_randomly(n):
    rng = random.Random(n)
    for _ in range(400):
        w = tuple(rng.sample(range(1, n + 1), n))
        I = mask(rng.sample(range(1, 2 * n + 1), n))
        expected = rank_of(pattern_Mw(w), I) == n
        assert member(w, I) == member_via_juggling(w, I) == member_via_blocks(w, I) == expected


def test_enumerate_examples():
    assert len(enumerate_Pw((2, 1))) == 5
    for n in range(1, 5):
        assert len(enumerate_Pw(identity(n))) == comb(2 * n, n)
    expected = sum(g_stat(v) for v in avoiders_123(4) if bruhat_leq((2, 1, 4, 3), v))
    assert len(enumerate_Pw((2, 1, 4, 3))) == expected == 68
    with pytest.raises(ValueError):
        enumerate_Pw((1, 2), strategy="nope")


@pytest.mark.parametrize("n", range(1, 5))
def test_strategies_agree(n):
    for w in all_perms(n):
        assert enumerate_Pw(w) == enumerate_Pw(w, strategy="qunion")


@pytest.mark.parametrize("n", range(1, 5))
def test_families_shrink_up_bruhat(n):
    perms = list(all_perms(n))
    fam = {w: enumerate_Pw(w) for w in perms}
    for v in perms:
        for w in perms:
            if bruhat_leq(v, w):
                assert fam[w] <= fam[v]


def test_P_Kn_examples():
    assert P_Kn((1, 1), 6).sets() == [(6,), (7,)]
    assert P_Kn((4, 4), 6).sets() == [(3,), (10,)]
    assert P_Kn([3, 4], 7).sets() == [(4, 5), (4, 10), (5, 10), (5, 11), (10, 11)]
    with pytest.raises(ValueError):
        P_Kn({1, 3}, 4)


def test_Q_family_examples():
    assert Q_family((6, 4, 5, 3, 1, 2)).sets() == [
        (1, 3, 4, 6, 9, 12), (1, 3, 4, 7, 9, 12), (1, 4, 6, 9, 10, 12), (1, 4, 7, 9, 10, 12),
    ]
    assert Q_family((1, 2)).sets() == [(1, 4)]
    assert Q_family((2, 1, 4, 3)).sets() == [(1, 2, 7, 8)]
    assert len(Q_family((1, 2, 3))) == 0


@pytest.mark.parametrize("n", range(1, 6))
def test_pieces_partition_all_subsets(n):
    seen = {}
    for v in avoiders_123(n):
        Q = Q_family(v)
        assert len(Q) == g_stat(v)
        ground = q_ground_set(v)
        for I in Q:
            assert I not in seen
            assert I & ground == I
            assert u_perm(I, n) == v
            seen[I] = v
    assert len(seen) == comb(2 * n, n)


@pytest.mark.parametrize("n", range(1, 6))
def test_piece_patterns_realise_pieces(n):
    for v in avoiders_123(n):
        assert enumerate_bases(pattern_Nw(v)) == Q_family(v)
    with pytest.raises(DomainError):
        pattern_Nw((1, 2, 3))


def test_affine_permutation():
    f = affine_perm((2, 1, 4, 3))
    assert f.window == (5, 6, 7, 8, 10, 9, 12, 11)
    assert str(f) == "5678(10)9(12)(11)"
    assert f(9) == 13 and f(0) == 3
    assert f.is_bounded()
    g = affine_perm((1, 2))
    assert g.window == (3, 4, 5, 6)
    assert set(juggling(g)) == {mask({1, 2})}
    with pytest.raises(ValueError):
        AffinePermutation((1, 3))


@pytest.mark.parametrize("n", range(1, 6))
def test_juggling_sequence_shape(n):
    for w in all_perms(n):
        f = affine_perm(w)
        assert f.is_bounded()
        J = juggling(f)
        assert all(bin(j).count("1") == n for j in J)
        assert all(j == full(n) for j in J[: n + 1])


def test_reflection_examples():
    assert reflect_set({1, 4}, 2) == mask({1, 4})
    P = enumerate_Pw((2, 1, 4, 3))
    # the partner permutation of 2143 is 2143 itself
    assert reflect_family(P) == enumerate_Pw((2, 1, 4, 3))
    assert reflect_family(reflect_family(P)) == P


@pytest.mark.parametrize("n", range(1, 5))
def test_reflection_and_duality(n):
    w0 = longest(n)
    for w in all_perms(n):
        P = enumerate_Pw(w)
        assert reflect_family(P) == enumerate_Pw(compose(compose(w0, inverse(w)), w0))
        assert star_relabel(dual_family(P)) == enumerate_Pw(inverse(w))
    for I in n_subsets(2 * n, n):
        u = u_perm(I, n)
        assert u_perm(reflect_set(I, n), n) == compose(compose(w0, inverse(u)), w0)


@pytest.mark.parametrize("n", range(1, 7))
def test_interval_description_of_reverse_positroid(n):
    assert reverse_positroid_by_intervals(n) == enumerate_bases(pattern_Mw(longest(n)))


@pytest.mark.parametrize("n", range(1, 7))
def test_catalan_matroid_maps_onto_reverse_positroid(n):
    alpha = alpha_map(n)
    image = {relabel(D & ~1, alpha) for D in catalan_matroid(n + 1).members}
    assert image == enumerate_Pw(longest(n)).members


def test_catalan_matroid_small():
    assert catalan_matroid(2).sets() == [(1, 2), (1, 3)]
    assert [elements(m) for m in sorted(catalan_matroid(1).members)] == [(1,)]


def test_n_subsets():
    assert len(n_subsets(6, 3)) == 20
    assert n_subsets(3, 1) == tuple(mask(c) for c in combinations(range(1, 4), 1))
