from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from helpers import counting_onegram, equal_length_pairs, texts
from textdist import DomainError, Text, onegram_distance, frequency

T = Text.from_words


def test_identical_texts():
    assert onegram_distance(T("aa bb aa"), T("aa bb aa")) == 0


def test_disjoint_equal_length():
    assert onegram_distance(T("aa bb"), T("cc dd")) == 1


def test_scaled_unequal_length_zero():
    assert onegram_distance(T("aa bb"), T("aa aa bb bb")) == 0


def test_scaled_unequal_length_one():
    assert onegram_distance(T("aa"), T("bb bb")) == 1


def test_exact_mode():
    assert onegram_distance(T("aa bb cc"), T("aa aa dd dd dd dd"), exact=True) == Fraction(2, 3)  # |1-1|+1+1+|0-2| over 6


def test_empty_rejected():
    with pytest.raises(DomainError):
        onegram_distance(T(""), T("aa"))


@given(texts(), texts())
def test_symmetric_and_in_range(a, b):
    x = onegram_distance(a, b, exact=True)
    assert x == onegram_distance(b, a, exact=True)
    assert 0 <= x <= 1


@given(equal_length_pairs())
def test_zero_iff_equal_multisets(pair):
    a, b = pair
    assert (onegram_distance(a, b) == 0) == (frequency(a) == frequency(b))


@given(equal_length_pairs())
def test_matches_counting_oracle(pair):
    a, b = pair
    assert onegram_distance(a, b, exact=True) == counting_onegram(a, b)


@given(texts(), texts(), st.randoms())
def test_permutation_invariant(a, b, rnd):
    shuffled = list(a.tokens)
    rnd.shuffle(shuffled)
    assert onegram_distance(Text("", tuple(shuffled)), b, exact=True) == onegram_distance(
        a, b, exact=True
    )
