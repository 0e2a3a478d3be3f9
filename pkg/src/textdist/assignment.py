"""Square linear assignment: minimum-cost perfect matching.

Float matrices go to SciPy's Jonker-Volgenant solver.  Matrices of
Fractions go through the Hungarian method below, after scaling to a
common denominator so the search runs on exact Python integers.
``brute_force_assignment`` enumerates every permutation and serves as
the test oracle for both.
"""
from __future__ import annotations

import itertools
import math
from fractions import Fraction
from numbers import Real
from typing import Sequence

import numpy as np
from scipy.optimize import linear_sum_assignment

from .errors import DomainError

BRUTE_FORCE_LIMIT = 8


def _rows(cost) -> list[list]:
    rows = [list(r) for r in cost]
    n = len(rows)
    if n == 0 or any(len(r) != n for r in rows):
        raise DomainError("cost matrix must be non-empty and square")
    for r in rows:
        for x in r:
            if isinstance(x, float) and not math.isfinite(x):
                raise DomainError("cost matrix entries must be finite")
    return rows


def _is_exact(rows) -> bool:
    return any(isinstance(x, Fraction) for r in rows for x in r)


def _integerize(rows) -> tuple[list[list[int]], int]:
    """Scale an exact matrix to integers: returns (int_rows, denominator)."""
    denom = 1
    for r in rows:
        for x in r:
            denom = math.lcm(denom, Fraction(x).denominator)
    scaled = [[int(Fraction(x) * denom) for x in r] for r in rows]
    return scaled, denom


_PERMS: dict[int, np.ndarray] = {}


def _all_permutations(n: int) -> np.ndarray:
    if n not in _PERMS:
        _PERMS[n] = np.array(list(itertools.permutations(range(n))), dtype=np.intp)
    return _PERMS[n]


def solve_assignment(cost) -> tuple[list[int], Real]:
    """Return (perm, total) with perm[i] the column assigned to row i.

    Only the optimal total is guaranteed; among tied optima any
    permutation may be returned.
    """
    if isinstance(cost, np.ndarray) and cost.dtype != object:
        arr = np.asarray(cost, dtype=float)
        if arr.ndim != 2 or arr.shape[0] != arr.shape[1] or arr.shape[0] == 0:
            raise DomainError("cost matrix must be non-empty and square")
        if not np.isfinite(arr).all():
            raise DomainError("cost matrix entries must be finite")
        rows, cols = linear_sum_assignment(arr)
        perm = [int(c) for c in cols[np.argsort(rows)]]
        return perm, float(arr[np.arange(len(perm)), perm].sum())
    rows = _rows(cost)
    if _is_exact(rows):
        return hungarian(rows)
    return solve_assignment(np.array(rows, dtype=float))


def hungarian(cost: Sequence[Sequence[Real]]) -> tuple[list[int], Real]:
    """O(n^3) Hungarian method with row/column potentials.

    Works on any ordered numeric type; Fractions are solved exactly on a
    common-denominator integer copy.
    """
    rows = _rows(cost)
    if _is_exact(rows):
        scaled, denom = _integerize(rows)
        perm, _ = hungarian(scaled)
        return perm, sum((Fraction(rows[i][perm[i]]) for i in range(len(rows))), Fraction(0))
    n = len(rows)
    zero = rows[0][0] * 0
    u = [zero] * (n + 1)
    v = [zero] * (n + 1)
    owner = [0] * (n + 1)  # owner[j]: 1-based row matched to column j, 0 if free
    way = [0] * (n + 1)
    for i in range(1, n + 1):
        owner[0] = i
        j0 = 0
        minv: list = [None] * (n + 1)  # None stands for +infinity
        used = [False] * (n + 1)
        while True:
            used[j0] = True
            i0 = owner[j0]
            best = None
            j1 = 0
            for j in range(1, n + 1):
                if used[j]:
                    continue
                reduced = rows[i0 - 1][j - 1] - u[i0] - v[j]
                if minv[j] is None or reduced < minv[j]:
                    minv[j] = reduced
                    way[j] = j0
                if best is None or minv[j] < best:
                    best = minv[j]
                    j1 = j
            for j in range(n + 1):
                if used[j]:
                    u[owner[j]] += best
                    v[j] -= best
                else:
                    minv[j] -= best
            j0 = j1
            if owner[j0] == 0:
                break
        while j0:
            j1 = way[j0]
            owner[j0] = owner[j1]
            j0 = j1
    perm = [0] * n
    for j in range(1, n + 1):
        perm[owner[j] - 1] = j - 1
    total = sum((rows[i][perm[i]] for i in range(n)), zero)
    return perm, total


def brute_force_assignment(cost) -> tuple[list[int], Real]:
    """Exhaustive minimum over all n! permutations (n <= 8).

    Exact inputs (ints, Fractions) give exact totals; the first optimal
    permutation in lexicographic order is returned.
    """
    rows = _rows(cost)
    n = len(rows)
    if n > BRUTE_FORCE_LIMIT:
        raise DomainError(f"brute force refused for n={n} > {BRUTE_FORCE_LIMIT}")
    perms = _all_permutations(n)
    exact = _is_exact(rows) or all(isinstance(x, (int, np.integer)) for r in rows for x in r)
    if exact:
        scaled, denom = _integerize(rows)
        bound = max(abs(x) for r in scaled for x in r) * n
        dtype = np.int64 if bound < 2**62 else object
        arr = np.array(scaled, dtype=dtype)
    else:
        arr = np.array(rows, dtype=float)
    totals = arr[np.arange(n), perms].sum(axis=1)
    best = int(np.argmin(totals))
    perm = [int(j) for j in perms[best]]
    if exact:
        total = Fraction(int(totals[best]), denom)
        return perm, total if denom != 1 or _is_exact(rows) else int(total)
    return perm, float(totals[best])
