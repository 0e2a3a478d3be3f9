"""Corpus distance matrices and agglomerative clustering.

Agglomeration is the plain O(n^3) procedure: find the closest pair of
active clusters, merge, update the dissimilarities with the Lance-Williams
formula for the chosen linkage.  Ward uses the squared-dissimilarity update
(R's ``ward.D2``) and reports square-rooted heights.

Clusters live in matrix slots; a merged cluster takes the lower slot of its
two children.  Ties are broken by the lexicographically smallest slot pair.
"""
from __future__ import annotations

import csv
import io
import json
import logging
import math
import re
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from numbers import Real
from pathlib import Path
from typing import Callable, Iterator, Sequence, Union

import numpy as np

from .errors import DomainError, MatrixFormatError
from .text import Text

log = logging.getLogger(__name__)

LINKAGES = ("average", "ward")


# --------------------------------------------------------------------------
# distance matrices


@dataclass(frozen=True)
class DistanceMatrix:
    labels: tuple[str, ...]
    values: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "labels", tuple(self.labels))
        values = np.array(self.values, dtype=float)
        values.setflags(write=False)
        object.__setattr__(self, "values", values)
        validate_matrix(self.labels, values)

    def __len__(self) -> int:
        return len(self.labels)

    def rounded(self, decimals: int = 6) -> "DistanceMatrix":
        return DistanceMatrix(self.labels, np.round(self.values, decimals))


def validate_matrix(labels: Sequence[str], values: np.ndarray) -> None:
    n = len(labels)
    if values.shape != (n, n):
        raise MatrixFormatError(f"matrix shape {values.shape} does not match {n} labels")
    if len(set(labels)) != n:
        raise MatrixFormatError("duplicate labels")
    if np.isnan(values).any():
        i, j = np.argwhere(np.isnan(values))[0]
        raise MatrixFormatError(f"NaN at ({labels[i]}, {labels[j]})")
    for i in range(n):
        if values[i, i] != 0:
            raise MatrixFormatError(f"diagonal entry for {labels[i]} is {values[i, i]}, not 0")
        for j in range(i + 1, n):
            if values[i, j] != values[j, i]:
                raise MatrixFormatError(
                    f"asymmetric entries ({labels[i]}, {labels[j]}) = {values[i, j]} "
                    f"vs {values[j, i]}"
                )
            if not 0 <= values[i, j] <= 1:
                raise MatrixFormatError(f"entry ({labels[i]}, {labels[j]}) outside [0, 1]")


def _pair_job(args):
    a, b, lam, measure = args
    from .distance import distance

    return distance(a, b, lam, measure)


def pairwise_matrix(
    corpus: Sequence[Text],
    lam: Real,
    measure: str = "d4",
    jobs: int = 1,
    progress: Callable[[int, int, str, str, float], None] | None = None,
) -> DistanceMatrix:
    """All mutual distances of a corpus; entry (i, j) = measure(T_i, T_j).

    Only pairs i < j are computed; the result does not depend on ``jobs``.
    ``progress(k, total, id_i, id_j, value)`` is called once per pair.
    """
    from .distance import distance

    if measure == "d3":
        raise DomainError("d3 is asymmetric and cannot fill a distance matrix")
    if len(corpus) < 2:
        raise DomainError("a distance matrix needs at least two texts")
    ids = [t.id for t in corpus]
    if len(set(ids)) != len(ids):
        dup = next(i for i in ids if ids.count(i) > 1)
        raise DomainError(f"duplicate text id {dup!r}")
    for t in corpus:
        if len(t) == 0:
            raise DomainError(f"text {t.id!r} is empty")

    pairs = [(i, j) for i in range(len(corpus)) for j in range(i + 1, len(corpus))]
    args = [(corpus[i], corpus[j], lam, measure) for i, j in pairs]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results: Iterator[float] = pool.map(_pair_job, args, chunksize=1)
            values = _collect(pairs, results, ids, progress)
    else:
        results = (distance(a, b, l, m) for a, b, l, m in args)
        values = _collect(pairs, results, ids, progress)

    n = len(corpus)
    m = np.zeros((n, n))
    for (i, j), v in zip(pairs, values):
        m[i, j] = m[j, i] = v
    return DistanceMatrix(tuple(ids), m)


def _collect(pairs, results, ids, progress) -> list[float]:
    values = []
    for k, ((i, j), v) in enumerate(zip(pairs, results), 1):
        values.append(v)
        if progress is not None:
            progress(k, len(pairs), ids[i], ids[j], v)
    return values


def write_matrix_csv(m: DistanceMatrix, out: io.TextIOBase | None = None) -> str:
    """Serialize as CSV: header ``,l1,l2,...``, then ``lk,v,v,...`` rows, 6 decimals."""
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["", *m.labels])
    for label, row in zip(m.labels, m.values):
        w.writerow([label, *(f"{v:.6f}" for v in row)])
    text = buf.getvalue()
    if out is not None:
        out.write(text)
    return text


def read_matrix_csv(source: str | Path | io.TextIOBase) -> DistanceMatrix:
    """Parse and validate a matrix CSV; errors name the file row and column."""
    if isinstance(source, (str, Path)):
        with open(source, newline="", encoding="utf-8") as f:
            rows = list(csv.reader(f))
    else:
        rows = list(csv.reader(source))
    if not rows:
        raise MatrixFormatError("empty matrix file")
    header = rows[0]
    if not header or header[0] != "":
        raise MatrixFormatError("row 1, column 1: header must start with an empty cell")
    labels = header[1:]
    n = len(labels)
    body = rows[1:]
    if len(body) != n:
        raise MatrixFormatError(f"expected {n} data rows, found {len(body)}")
    values = np.zeros((n, n))
    for r, row in enumerate(body):
        line = r + 2
        if len(row) != n + 1:
            raise MatrixFormatError(f"row {line}: expected {n + 1} columns, found {len(row)}")
        if row[0] != labels[r]:
            raise MatrixFormatError(
                f"row {line}, column 1: label {row[0]!r} does not match header {labels[r]!r}"
            )
        for c, cell in enumerate(row[1:]):
            try:
                x = float(cell)
            except ValueError:
                raise MatrixFormatError(f"row {line}, column {c + 2}: non-numeric {cell!r}") from None
            if not math.isfinite(x):
                raise MatrixFormatError(f"row {line}, column {c + 2}: non-finite {cell!r}")
            values[r, c] = x
    for r in range(n):
        if values[r, r] != 0:
            raise MatrixFormatError(f"row {r + 2}, column {r + 2}: diagonal must be 0")
        for c in range(r + 1, n):
            if values[r, c] != values[c, r]:
                raise MatrixFormatError(
                    f"row {r + 2}, column {c + 2}: asymmetric ({values[r, c]} vs {values[c, r]})"
                )
            if not 0 <= values[r, c] <= 1:
                raise MatrixFormatError(f"row {r + 2}, column {c + 2}: value outside [0, 1]")
    return DistanceMatrix(tuple(labels), values)


# --------------------------------------------------------------------------
# dendrograms


@dataclass(frozen=True)
class Leaf:
    label: str

    height = 0.0
    size = 1


@dataclass(frozen=True)
class Merge:
    left: "Node"
    right: "Node"
    height: float
    size: int


Node = Union[Leaf, Merge]


def leaves(t: Node) -> list[str]:
    """Leaf labels in left-to-right order."""
    out, stack = [], [t]
    while stack:
        node = stack.pop()
        if isinstance(node, Leaf):
            out.append(node.label)
        else:
            stack.append(node.right)
            stack.append(node.left)
    return out


def merges(t: Node) -> list[Merge]:
    out, stack = [], [t]
    while stack:
        node = stack.pop()
        if isinstance(node, Merge):
            out.append(node)
            stack.extend((node.left, node.right))
    return out


def agglomerate(m: DistanceMatrix, linkage: str = "average") -> Node:
    """Agglomerative clustering of a validated distance matrix."""
    return agglomerate_steps(m, linkage)[-1][2]


def agglomerate_steps(m: DistanceMatrix, linkage: str = "average") -> list[tuple[int, int, Merge]]:
    """Like ``agglomerate`` but returns every step as (slot_i, slot_j, merge)."""
    if linkage not in LINKAGES:
        raise ValueError(f"unknown linkage {linkage!r}")
    if not isinstance(m, DistanceMatrix):
        raise TypeError("expected a DistanceMatrix")
    n = len(m)
    if n < 2:
        raise DomainError("clustering needs at least two items")
    ward = linkage == "ward"
    d = m.values.copy()
    if ward:
        d = d * d
    d[np.tril_indices(n)] = np.inf
    nodes: list[Node | None] = [Leaf(label) for label in m.labels]
    sizes = [1] * n
    steps = []
    for _ in range(n - 1):
        flat = int(np.argmin(d))
        i, j = divmod(flat, n)
        dij = d[i, j]
        ni, nj = sizes[i], sizes[j]
        height = math.sqrt(dij) if ward else float(dij)
        node = Merge(nodes[i], nodes[j], height, ni + nj)
        steps.append((i, j, node))
        for k in range(n):
            if k in (i, j) or nodes[k] is None:
                continue
            dki = d[min(k, i), max(k, i)]
            dkj = d[min(k, j), max(k, j)]
            if ward:
                nk = sizes[k]
                new = ((ni + nk) * dki + (nj + nk) * dkj - nk * dij) / (ni + nj + nk)
            else:
                new = (ni * dki + nj * dkj) / (ni + nj)
            d[min(k, i), max(k, i)] = new
        d[j, :] = np.inf
        d[:, j] = np.inf
        nodes[i], nodes[j] = node, None
        sizes[i], sizes[j] = ni + nj, 0
    return steps


def cut(t: Node, k: int) -> list[list[str]]:
    """Split the tree into ``k`` clusters by undoing its ``k - 1`` highest merges.

    Clusters are listed in dendrogram leaf order.
    """
    total = t.size
    if not 1 <= k <= total:
        raise ValueError(f"cannot cut {total} leaves into {k} clusters")
    parts: list[Node] = [t]
    while len(parts) < k:
        best = max(
            (p for p in parts if isinstance(p, Merge)), key=lambda p: p.height
        )
        idx = next(i for i, p in enumerate(parts) if p is best)
        parts[idx : idx + 1] = [best.left, best.right]
    return [leaves(p) for p in parts]


# --------------------------------------------------------------------------
# serialization

_NEWICK_SPECIAL = re.compile(r"[\s()\[\]':;,]")


def _num(x: float) -> str:
    s = f"{x:.6f}".rstrip("0").rstrip(".")
    return "0" if s in ("", "-0") else s


def _newick_label(label: str) -> str:
    if label == "" or _NEWICK_SPECIAL.search(label):
        return "'" + label.replace("'", "''") + "'"
    return label


def to_newick(t: Node) -> str:
    """Newick text with branch lengths equal to parent minus child height."""

    def branch(child: Node, parent_height: float) -> str:
        length = parent_height - child.height
        if length < 0:
            log.warning("negative branch length %.6g clamped to 0", length)
            length = 0.0
        return f"{render(child)}:{_num(length)}"

    def render(node: Node) -> str:
        if isinstance(node, Leaf):
            return _newick_label(node.label)
        return f"({branch(node.left, node.height)},{branch(node.right, node.height)})"

    return render(t) + ";"


def from_newick(s: str) -> Node:
    """Parse binary Newick produced by ``to_newick``; leaves sit at height 0."""
    pos = 0
    s = s.strip()

    def peek() -> str:
        return s[pos] if pos < len(s) else ""

    def label() -> str:
        nonlocal pos
        if peek() == "'":
            pos += 1
            out = []
            while True:
                if pos >= len(s):
                    raise ValueError("unterminated quoted label")
                if s[pos] == "'":
                    if s[pos + 1 : pos + 2] == "'":
                        out.append("'")
                        pos += 2
                        continue
                    pos += 1
                    return "".join(out)
                out.append(s[pos])
                pos += 1
        start = pos
        while pos < len(s) and s[pos] not in "():,;":
            pos += 1
        return s[start:pos]

    def length() -> float:
        nonlocal pos
        if peek() != ":":
            return 0.0
        pos += 1
        start = pos
        while pos < len(s) and s[pos] not in "(),;":
            pos += 1
        return float(s[start:pos])

    # Parse to (node-without-heights, depth-from-leaf) then fix heights bottom-up:
    # a merge's height is its children's height plus their branch length.
    def node() -> tuple[Node, float]:
        nonlocal pos
        if peek() == "(":
            pos += 1
            left, lh = node()
            ll = length()
            if peek() != ",":
                raise ValueError(f"expected ',' at offset {pos}")
            pos += 1
            right, rh = node()
            rl = length()
            if peek() != ")":
                raise ValueError(f"expected ')' at offset {pos}")
            pos += 1
            height = max(lh + ll, rh + rl)
            return Merge(left, right, height, left.size + right.size), height
        return Leaf(label()), 0.0

    tree, _ = node()
    if peek() != ";":
        raise ValueError("Newick string must end with ';'")
    return tree


def to_dict(t: Node) -> dict:
    if isinstance(t, Leaf):
        return {"label": t.label, "height": 0.0, "size": 1}
    return {
        "children": [to_dict(t.left), to_dict(t.right)],
        "height": round(t.height, 6),
        "size": t.size,
    }


def from_dict(d: dict) -> Node:
    if "children" not in d:
        return Leaf(d["label"])
    left, right = (from_dict(c) for c in d["children"])
    return Merge(left, right, float(d["height"]), left.size + right.size)


def serialize_dendrogram(t: Node, format: str = "newick") -> str:
    if format == "newick":
        return to_newick(t)
    if format == "json":
        return json.dumps(to_dict(t), indent=1)
    raise ValueError(f"unknown dendrogram format {format!r}")


def parse_dendrogram(text: str, format: str = "newick") -> Node:
    if format == "newick":
        return from_newick(text)
    if format == "json":
        return from_dict(json.loads(text))
    raise ValueError(f"unknown dendrogram format {format!r}")
