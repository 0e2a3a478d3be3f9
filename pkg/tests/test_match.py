from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from helpers import brute_table, lambdas, summed_match, texts
from textdist import (
    DomainError,
    TableTooLargeError,
    Text,
    delta,
    directional_minima,
    position_match,
    position_match_table,
    row_minima,
)

T = Text.from_words
LAZY = T("the lazy fox")
QUICK = T("the quick fox jumps over the lazy dog")


def test_delta():
    assert delta(T("man"), T("dog"), 1, 1) == 1
    assert delta(T("dog"), T("dog"), 1, 1) == 0
    assert delta(T("dog"), T("dog"), 2, 1) == 1
    assert delta(T("dog"), T("dog"), 1, 2) == 1


@pytest.mark.parametrize(
    "a, b, expected",
    [
        ("man", "dog", 1.0),
        ("dog", "dog", 0.8),
        ("man bites dog", "man bites dog", 0.512),
        ("man bites dog", "dog bites man", 0.84),
        (
            "the quick brown fox jumps over the lazy dog",
            "the quick white fox crawls under the high dog",
            0.451616768,
        ),
    ],
)
def test_table1_values(a, b, expected):
    assert position_match(T(a), T(b), 1, 1, 0.8) == pytest.approx(expected, abs=1e-9)


def test_exact_closed_form():
    lam = Fraction(4, 5)
    got = position_match(T("man bites dog"), T("dog bites man"), 1, 1, lam)
    assert got == 1 - lam + lam**2


def test_zero_discount_is_delta():
    assert position_match(T("aa bb"), T("aa cc"), 1, 1, 0.0) == 0
    assert position_match(T("aa bb"), T("aa cc"), 2, 2, 0.0) == 1


def test_position_match_index_checks():
    with pytest.raises(IndexError):
        position_match(LAZY, QUICK, 4, 1, 0.5)
    with pytest.raises(DomainError):
        position_match(LAZY, QUICK, 1, 1, 1.0)


def test_table2():
    table = position_match_table(LAZY, QUICK, 0.8)
    expected = np.ones((3, 8))
    expected[0, 0], expected[0, 5] = 0.672, 0.64
    expected[1, 1], expected[1, 6] = 0.84, 0.80
    expected[2, 2] = 0.80
    np.testing.assert_allclose(table, expected, atol=1e-12)


def test_table2_minima():
    np.testing.assert_allclose(row_minima(LAZY, QUICK, 0.8), [0.64, 0.8, 0.8], atol=1e-12)


def test_zero_discount_table_is_raw_deltas():
    table = position_match_table(LAZY, QUICK, 0.0)
    raw = [[delta(LAZY, QUICK, i, j) for j in range(1, 9)] for i in range(1, 4)]
    np.testing.assert_array_equal(table, raw)


def test_exact_table_matches_series():
    lam = Fraction(3, 7)
    assert position_match_table(LAZY, QUICK, lam, exact=True) == brute_table(LAZY, QUICK, lam)


def test_materialization_cap():
    with pytest.raises(TableTooLargeError):
        position_match_table(LAZY, QUICK, 0.5, max_cells=23)
    position_match_table(LAZY, QUICK, 0.5, max_cells=24)


def test_empty_text_rejected():
    with pytest.raises(DomainError):
        row_minima(T(""), QUICK, 0.5)


@settings(max_examples=60, deadline=None)
@given(texts(max_size=50), texts(max_size=50), lambdas)
def test_table_matches_summation_oracle(a, b, lam):
    table = position_match_table(a, b, lam)
    oracle = np.array(brute_table(a, b, lam), dtype=float)
    np.testing.assert_allclose(table, oracle, rtol=0, atol=1e-12)


@settings(max_examples=60, deadline=None)
@given(texts(max_size=30), texts(max_size=30), lambdas)
def test_closed_form_matches_table(a, b, lam):
    table = position_match_table(a, b, lam)
    for i in range(len(a)):
        for j in range(len(b)):
            assert abs(position_match(a, b, i + 1, j + 1, lam) - table[i, j]) <= 1e-12


@settings(max_examples=80, deadline=None)
@given(texts(max_size=50), texts(max_size=50), lambdas)
def test_streaming_minima_match_table(a, b, lam):
    table = position_match_table(a, b, lam)
    rows, cols = directional_minima(a, b, lam)
    np.testing.assert_array_equal(rows, table.min(axis=1))
    np.testing.assert_array_equal(cols, table.min(axis=0))
    np.testing.assert_array_equal(row_minima(b, a, lam), cols)


@given(texts(), texts(), lambdas)
def test_range_and_finite_floor(a, b, lam):
    table = position_match_table(a, b, lam)
    assert ((table >= 0) & (table <= 1)).all()
    for i in range(len(a)):
        for j in range(len(b)):
            overlap = min(len(a) - i, len(b) - j)
            floor = lam**overlap
            suffix_equal = a.tokens[i : i + overlap] == b.tokens[j : j + overlap]
            assert table[i, j] >= floor - 1e-12
            if lam > 0:
                assert (abs(table[i, j] - floor) <= 1e-12) == suffix_equal


@given(texts(), texts(), lambdas)
def test_one_iff_all_deltas_one(a, b, lam):
    table = position_match_table(a, b, lam, exact=True)
    for i in range(len(a)):
        for j in range(len(b)):
            overlap = min(len(a) - i, len(b) - j)
            no_match = all(a[i + k] != b[j + k] for k in range(overlap))
            if lam > 0:
                assert (table[i][j] == 1) == no_match


@given(texts(min_size=1), texts(min_size=1), lambdas, st.data())
def test_prefix_sensitivity(a, b, lam, data):
    """Turning one match into a mismatch raises earlier entries on the diagonal."""
    i = data.draw(st.integers(0, len(a) - 1))
    j = data.draw(st.integers(0, len(b) - 1))
    if a[i] != b[j]:
        return
    flipped = Text("", a.tokens[:i] + ("zz",) + a.tokens[i + 1 :])
    lam = Fraction(lam)
    before = position_match_table(a, b, lam, exact=True)
    after = position_match_table(flipped, b, lam, exact=True)
    for back in range(min(i, j) + 1):
        assert after[i - back][j - back] - before[i - back][j - back] == (1 - lam) * lam**back


@given(texts(max_size=40), lambdas)
def test_self_row_minima(a, lam):
    n = len(a)
    expected = [lam ** (n - i) for i in range(n)]
    np.testing.assert_allclose(row_minima(a, a, lam), expected, rtol=0, atol=1e-12)
