"""Classical 1-gram (word frequency) distance between two texts."""
from __future__ import annotations

from fractions import Fraction

from .errors import DomainError
from .text import Text, frequency


def onegram_distance(a: Text, b: Text, exact: bool = False) -> float | Fraction:
    """Normalized sum of absolute word-frequency differences, in [0, 1].

    For texts of different length the longer text's frequencies are scaled
    down to the length of the shorter one, so the result is symmetric.
    With ``exact=True`` the value is computed as a Fraction.
    """
    if len(a) == 0 or len(b) == 0:
        raise DomainError("1-gram distance is undefined for an empty text")
    if len(a) > len(b):
        a, b = b, a
    fa, fb = frequency(a), frequency(b)
    na, nb = len(a), len(b)
    words = sorted(fa.keys() | fb.keys())  # fixed float summation order
    if na == nb:
        total = sum(abs(fa[w] - fb[w]) for w in words)
        return Fraction(total, 2 * na) if exact else total / (2 * na)
    if exact:
        ratio = Fraction(na, nb)
        return sum(abs(fa[w] - fb[w] * ratio) for w in words) / (2 * na)
    ratio = na / nb
    return sum(abs(fa[w] - fb[w] * ratio) for w in words) / (2 * na)
