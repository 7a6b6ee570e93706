from collections import Counter
from itertools import combinations
from math import comb

import pytest
from hypothesis import given, strategies as st

from positroids.dyck import (
    axis_returns, dyck_words, first_peak_height, half_saw_lengths, is_dyck,
    krattenthaler, path_to_word, standardization_fiber_size, standardize,
    subset_to_path, word_to_upsteps,
)
from positroids.errors import DomainError
from positroids.families import elements, mask
from positroids.perms import avoiders_123, catalan, classify_positions


def test_path_of_initial_block():
    p = subset_to_path(mask({1, 2, 3}), 3)
    assert p.steps == "UUUDDD"
    assert p.peaks == ((3, 3),)
    assert p.is_dyck and p.saws == ()


def test_path_of_alternating_set():
    p = subset_to_path(mask({1, 3, 5}), 3)
    assert p.steps == "UDUDUD"
    assert p.saws == (6,)


def test_path_below_axis_excursions():
    p = subset_to_path(mask({1, 5, 6, 7, 9, 10, 14, 16, 17}), 9)
    assert p.below == ((3, 6), (13, 14), (15, 16))
    assert not p.is_dyck and p.saws is None


def test_standardize_examples():
    got = standardize(mask({1, 5, 6, 7, 9, 10, 14, 16, 17}), 9)
    assert set(elements(got)) == {1, 3, 5, 7, 9, 10, 13, 15, 17}
    assert standardize(mask({1, 2, 3}), 3) == mask({1, 2, 3})
    assert standardize(mask({4, 5, 6}), 3) == mask({1, 3, 5})


def test_standardize_rejects_wrong_size():
    with pytest.raises(ValueError):
        standardize(mask({1, 2}), 3)


@given(st.integers(1, 7).flatmap(
    lambda n: st.sets(st.integers(1, 2 * n), min_size=n, max_size=n).map(lambda s: (n, s))))
def test_standardize_gives_dyck_and_is_idempotent(case):
    n, I = case
    s = standardize(mask(I), n)
    word = path_to_word(s, 2 * n)
    assert is_dyck(word)
    assert standardize(s, n) == s


@pytest.mark.parametrize("n", range(1, 7))
def test_standardization_fibers(n):
    fibers = Counter(standardize(mask(c), n) for c in combinations(range(1, 2 * n + 1), n))
    assert sum(fibers.values()) == comb(2 * n, n)
    words = set(dyck_words(n))
    assert {path_to_word(d, 2 * n) for d in fibers} == words
    for d, size in fibers.items():
        assert size == standardization_fiber_size(path_to_word(d, 2 * n))


def test_krattenthaler_examples():
    assert krattenthaler((6, 4, 7, 5, 3, 1, 2)) == "UUDUUDDDUDUUDD"
    assert krattenthaler((3, 2, 1)) == "UDUDUD"
    for n in range(1, 8):
        assert krattenthaler(tuple(range(n, 0, -1))) == "UD" * n


def test_krattenthaler_rejects_123():
    with pytest.raises(DomainError):
        krattenthaler((1, 2, 3))


@pytest.mark.parametrize("n", range(1, 8))
def test_krattenthaler_is_bijection(n):
    images = [krattenthaler(w) for w in avoiders_123(n)]
    assert len(set(images)) == len(images) == catalan(n)
    assert set(images) == set(dyck_words(n))


@pytest.mark.parametrize("n", range(1, 8))
def test_saws_match_anti_fixed_runs(n):
    for w in avoiders_123(n):
        runs = sorted(b - a + 1 for a, b in classify_positions(w).runs)
        assert sorted(half_saw_lengths(krattenthaler(w))) == runs


@pytest.mark.parametrize("n", range(1, 7))
def test_krattenthaler_peaks_at_minima(n):
    for w in avoiders_123(n):
        word = krattenthaler(w)
        peaks = dict(subset_to_path(word_to_upsteps(word), n).peaks)
        low = n + 1
        for j, x in enumerate(w, 1):
            if x < low:
                low = x
                assert peaks[n - x + j] == n + 2 - x - j


def test_dyck_word_helpers():
    assert list(dyck_words(2)) == ["UDUD", "UUDD"]
    assert first_peak_height("UUDDUD") == 2
    assert axis_returns("UUDDUD") == 2
    assert is_dyck("UUDD") and not is_dyck("UDDU")
