#!/usr/bin/env python3
"""Min/max d4 per pair type across discounting factors on a synthetic two-group corpus.

Prints a table in the layout of the classic genuine/fake sweep, plus
whether Ward and average linkage split the corpus into its two groups.

    python scripts/discount_sweep.py --texts 10 --out sweep/
"""
import argparse
from pathlib import Path

import numpy as np

from textdist import agglomerate, cut, write_matrix_csv
from textdist.experiments import CorpusConfig, distance_matrices, mean_offdiagonal, two_group_corpus

LAMBDAS = [0.0, 0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 0.95]


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--texts", type=int, default=10, help="texts per group")
    ap.add_argument("--seed", type=int, default=2014)
    ap.add_argument("--jobs", type=int, default=1)
    ap.add_argument("--out", type=Path, help="directory for texts and matrix CSVs")
    args = ap.parse_args()

    corpus = two_group_corpus(CorpusConfig(texts_per_group=args.texts, seed=args.seed))
    if args.out:
        (args.out / "texts").mkdir(parents=True, exist_ok=True)
        for t in corpus.texts:
            (args.out / "texts" / f"{t.id}.txt").write_text(t.joined() + "\n")
    matrices = distance_matrices(corpus, LAMBDAS, jobs=args.jobs)

    g = np.array([corpus.groups[t.id] for t in corpus.texts])
    n = len(g)
    iu = np.triu_indices(n, 1)
    kinds = {
        "A / A": (g[:, None] == 0) & (g[None, :] == 0),
        "B / B": (g[:, None] == 1) & (g[None, :] == 1),
        "A / B": g[:, None] != g[None, :],
    }
    print("type   stat " + " ".join(f"{lam:>5g}" for lam in LAMBDAS))
    for name, mask in kinds.items():
        for stat, f in (("min", np.min), ("max", np.max)):
            row = [f(m.values[iu][mask[iu]]) for m in matrices.values()]
            print(f"{name:6} {stat:4} " + " ".join(f"{v:5.2f}" for v in row))
    print("mean        " + " ".join(f"{mean_offdiagonal(m):5.2f}" for m in matrices.values()))

    planted = {frozenset(t.id for t in corpus.texts if corpus.groups[t.id] == k) for k in (0, 1)}
    for lam, m in matrices.items():
        if args.out:
            (args.out / f"matrix-lambda{lam:g}.csv").write_text(write_matrix_csv(m))
        verdict = []
        for linkage in ("ward", "average"):
            ok = {frozenset(p) for p in cut(agglomerate(m, linkage), 2)} == planted
            verdict.append(f"{linkage}={'split' if ok else 'mixed'}")
        print(f"lambda {lam:g}: " + " ".join(verdict))


if __name__ == "__main__":
    main()
