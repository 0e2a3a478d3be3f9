"""Shared hypothesis strategies and independent oracles for the test suite."""
from fractions import Fraction
from itertools import permutations

from hypothesis import strategies as st
import numpy as np

from textdist import Text

WORDS = ("aa", "bb", "cc", "dd", "ee", "ff")


def texts(alphabet=4, min_size=1, max_size=12):
    return st.lists(st.sampled_from(WORDS[:alphabet]), min_size=min_size, max_size=max_size).map(
        lambda ws: Text("", tuple(ws))
    )


def equal_length_pairs(alphabet=4, max_size=8):
    return st.integers(1, max_size).flatmap(
        lambda n: st.tuples(texts(alphabet, n, n), texts(alphabet, n, n))
    )


lambdas = st.sampled_from([0.0, 0.1, 0.4, 0.5, 0.8, 0.95])


def random_text(rng, n, alphabet=4):
    return Text("", tuple(WORDS[k] for k in rng.integers(0, alphabet, size=n)))


def summed_match(a, b, i, j, lam):
    """Scaled position match by explicit series, 0-based indices, exact.

    The sum runs over the overlap and then adds the geometric tail of the
    all-ones deltas past the end, lam**K / (1 - lam), before scaling.
    """
    lam = Fraction(lam)
    total = Fraction(0)
    k = 0
    while i + k < len(a) and j + k < len(b):
        if a[i + k] != b[j + k]:
            total += lam**k
        k += 1
    total += lam**k / (1 - lam)
    return (1 - lam) * total


def brute_table(a, b, lam):
    return [[summed_match(a, b, i, j, lam) for j in range(len(b))] for i in range(len(a))]


def brute_min_total(cost):
    n = len(cost)
    return min(sum(cost[i][p[i]] for i in range(n)) for p in permutations(range(n)))


def counting_onegram(a, b):
    """1-gram distance for equal lengths via matched-word counting: 1 - shared/N."""
    shared = 0
    rest = list(b)
    for w in a:
        if w in rest:
            rest.remove(w)
            shared += 1
    return Fraction(len(a) - shared, len(a))


def recompute_average_merges(values):
    """Average linkage by recomputing mean cross distances from the raw matrix.

    Clusters occupy slots; a merge keeps the lower slot, like the library.
    Returns [(frozenset, frozenset, height), ...] in merge order.
    """
    n = len(values)
    slots = [frozenset([k]) for k in range(n)]
    out = []
    while sum(s is not None for s in slots) > 1:
        best = None
        for i in range(n):
            for j in range(i + 1, n):
                if slots[i] is None or slots[j] is None:
                    continue
                pairs = [values[p][q] for p in slots[i] for q in slots[j]]
                avg = sum(pairs) / len(pairs)
                if best is None or avg < best[0]:
                    best = (avg, i, j)
        avg, i, j = best
        out.append((slots[i], slots[j], avg))
        slots[i], slots[j] = slots[i] | slots[j], None
    return out


def random_distance_matrix(rng, n):
    m = rng.random((n, n))
    m = (m + m.T) / 2
    np.fill_diagonal(m, 0)
    return m
