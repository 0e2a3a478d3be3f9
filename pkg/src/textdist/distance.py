"""Global inter-textual distances built on discounted position matches.

``d2`` optimally pairs the positions of two equal-length texts one to one.
``d3`` lets every position of the first text pick its best partner in the
second, and ``d4`` symmetrizes ``d3`` by taking the larger direction.
All three are averages of scaled position matches and lie in [0, 1].
"""
from __future__ import annotations

from fractions import Fraction
from numbers import Real

from .assignment import brute_force_assignment, solve_assignment
from .errors import DomainError
from .match import DEFAULT_MAX_CELLS, directional_minima, position_match_table, row_minima
from .onegram import onegram_distance
from .text import Text

MEASURES = ("d4", "d3", "d2", "onegram")


def d2(
    a: Text,
    b: Text,
    lam: Real,
    exact: bool = False,
    solver: str = "lap",
    max_cells: int | None = DEFAULT_MAX_CELLS,
) -> Real:
    """Assignment distance; defined only for texts of equal length.

    ``solver`` is ``"lap"`` (cubic time) or ``"brute"`` (all permutations,
    n <= 8).  With ``exact=True`` the table and the result are Fractions.
    """
    if len(a) != len(b):
        raise DomainError(f"d2 needs equal lengths, got {len(a)} and {len(b)}")
    table = position_match_table(a, b, lam, exact=exact, max_cells=max_cells)
    solve = brute_force_assignment if solver == "brute" else solve_assignment
    _, total = solve(table)
    if exact:
        return Fraction(total) / len(a)
    return float(total) / len(a)


def d3(a: Text, b: Text, lam: Real) -> float:
    """Mean over positions of ``a`` of the best scaled match anywhere in ``b``."""
    return float(row_minima(a, b, lam).mean())


def d4(a: Text, b: Text, lam: Real) -> float:
    rows, cols = directional_minima(a, b, lam)
    return max(float(rows.mean()), float(cols.mean()))


def distance(a: Text, b: Text, lam: Real, measure: str = "d4") -> float:
    """Dispatch on a measure name from ``MEASURES``."""
    if measure == "d4":
        return d4(a, b, lam)
    if measure == "d3":
        return d3(a, b, lam)
    if measure == "d2":
        return d2(a, b, lam)
    if measure == "onegram":
        return float(onegram_distance(a, b))
    raise ValueError(f"unknown measure {measure!r}")
