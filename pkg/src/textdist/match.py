"""Discounted position matches between two texts.

The scaled position match of index pair (i, j) is

    s(i, j) = (1 - lam) * sum_k lam**k * delta(i + k, j + k)

where delta is 0 when the words agree and 1 otherwise, including every
index pair that runs past the end of either text.  Because delta is 1
forever once a text ends, the infinite sum has an exact closed-form tail,
and the whole table obeys the backward recurrence

    s(i, j) = (1 - lam) * delta(i, j) + lam * s(i + 1, j + 1)

with s = 1 outside the table.  Indices in the public per-entry functions
are 1-based, matching the usual mathematical notation; arrays are 0-based.
"""
from __future__ import annotations

from fractions import Fraction
from numbers import Real

import numpy as np

from .errors import DomainError, TableTooLargeError
from .text import Text

DEFAULT_MAX_CELLS = 2000 * 2000


def check_discount(lam: Real) -> None:
    if not 0 <= lam < 1:
        raise DomainError(f"discounting factor must satisfy 0 <= lambda < 1, got {lam}")


def _check_nonempty(a: Text, b: Text) -> None:
    for t in (a, b):
        if len(t) == 0:
            name = f" {t.id!r}" if t.id else ""
            raise DomainError(f"text{name} is empty")


def delta(a: Text, b: Text, i: int, j: int) -> int:
    """0 if the i-th word of ``a`` equals the j-th word of ``b``, else 1."""
    if i < 1 or j < 1:
        raise IndexError("indices are 1-based")
    if i > len(a) or j > len(b):
        return 1
    return 0 if a[i - 1] == b[j - 1] else 1


def position_match(a: Text, b: Text, i: int, j: int, lam: Real) -> Real:
    """Scaled position match from the 1-based index pair (i, j), by direct summation.

    The arithmetic type follows ``lam``: pass a Fraction for exact values.
    """
    check_discount(lam)
    if not (1 <= i <= len(a) and 1 <= j <= len(b)):
        raise IndexError(f"index pair ({i}, {j}) outside {len(a)}x{len(b)} table")
    overlap = min(len(a) - i, len(b) - j) + 1
    scale = 1 - lam
    total = 0 * lam
    weight = 1 + 0 * lam
    for k in range(overlap):
        if a[i - 1 + k] != b[j - 1 + k]:
            total += scale * weight
        weight *= lam
    # every delta past the shorter suffix is 1: the scaled tail is lam**overlap
    return total + weight


def encode(a: Text, b: Text) -> tuple[np.ndarray, np.ndarray]:
    """Map the words of both texts to integer codes over a shared vocabulary."""
    vocab: dict[str, int] = {}
    ca = np.fromiter((vocab.setdefault(w, len(vocab)) for w in a), dtype=np.int64, count=len(a))
    cb = np.fromiter((vocab.setdefault(w, len(vocab)) for w in b), dtype=np.int64, count=len(b))
    return ca, cb


def _sweep_rows(a: Text, b: Text, lam: float):
    """Yield (i, row) for i = N_A-1 .. 0, each row the scaled matches s(i, .).

    Only two rows of length N_B + 1 are alive at a time.  The yielded array
    is reused by the next step, so consumers must copy what they keep.
    """
    ca, cb = encode(a, b)
    nb = len(cb)
    lam = float(lam)
    scale = 1.0 - lam
    prev = np.ones(nb + 1)
    cur = np.ones(nb + 1)
    mismatch = np.empty(nb)
    for i in range(len(ca) - 1, -1, -1):
        np.not_equal(cb, ca[i], out=mismatch)
        np.multiply(mismatch, scale, out=mismatch)
        np.multiply(prev[1:], lam, out=cur[:nb])
        np.add(cur[:nb], mismatch, out=cur[:nb])
        yield i, cur[:nb]
        prev, cur = cur, prev


def position_match_table(
    a: Text,
    b: Text,
    lam: Real,
    exact: bool = False,
    max_cells: int | None = DEFAULT_MAX_CELLS,
):
    """The full N_A x N_B table of scaled position matches.

    Returns a float array, or with ``exact=True`` a list of lists of
    Fractions.  Tables larger than ``max_cells`` are refused.
    """
    check_discount(lam)
    _check_nonempty(a, b)
    cells = len(a) * len(b)
    if max_cells is not None and cells > max_cells:
        raise TableTooLargeError(
            f"refusing to materialize a {len(a)}x{len(b)} table ({cells} cells > {max_cells})"
        )
    if exact:
        return _exact_table(a, b, Fraction(lam))
    table = np.empty((len(a), len(b)))
    for i, row in _sweep_rows(a, b, lam):
        table[i] = row
    return table


def _exact_table(a: Text, b: Text, lam: Fraction) -> list[list[Fraction]]:
    na, nb = len(a), len(b)
    one = Fraction(1)
    scale = one - lam
    table = [[one] * nb for _ in range(na)]
    for i in range(na - 1, -1, -1):
        row = table[i]
        below = table[i + 1] if i + 1 < na else None
        for j in range(nb):
            nxt = below[j + 1] if below is not None and j + 1 < nb else one
            row[j] = (scale if a[i] != b[j] else 0) + lam * nxt
    return table


def row_minima(a: Text, b: Text, lam: Real) -> np.ndarray:
    """min_j s(i, j) for every i, without materializing the table."""
    return directional_minima(a, b, lam)[0]


def directional_minima(a: Text, b: Text, lam: Real) -> tuple[np.ndarray, np.ndarray]:
    """Row and column minima of the scaled table in a single sweep.

    Column minima of the (A, B) table are the row minima of the (B, A)
    table, since s is symmetric under swapping texts and indices.
    """
    check_discount(lam)
    _check_nonempty(a, b)
    rows = np.empty(len(a))
    cols = np.full(len(b), np.inf)
    for i, row in _sweep_rows(a, b, lam):
        rows[i] = row.min()
        np.minimum(cols, row, out=cols)
    return rows, cols
