"""Synthetic corpora for separation and discounting-sweep experiments.

A *seed language* is a first-order word chain over a shared pseudo-word
vocabulary: every word has a handful of weighted successors, and the
languages differ only in their random successor structure and word
popularity.  Seed corpora drawn from two languages are disjoint texts over
the same vocabulary.  Order-3 Markov models trained on each seed corpus
then produce the two groups of fake texts that the distances should tell
apart.
"""
from __future__ import annotations

import string
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .clustering import DistanceMatrix, pairwise_matrix
from .generator import build_model, generate
from .text import Text


@dataclass
class CorpusConfig:
    vocabulary: int = 2000
    seed_tokens: int = 25_000
    texts_per_group: int = 10
    min_length: int = 2000
    max_length: int = 4000
    successors: int = 8
    zipf: float = 1.1
    seed: int = 2014


@dataclass
class SyntheticCorpus:
    texts: list[Text]
    groups: dict[str, int]
    seed_corpora: list[Text] = field(repr=False, default_factory=list)


def pseudo_words(n: int, rng: np.random.Generator) -> list[str]:
    letters = np.array(list(string.ascii_lowercase))
    words: set[str] = set()
    while len(words) < n:
        size = int(rng.integers(2, 10))
        words.add("".join(rng.choice(letters, size)))
    return sorted(words)


def seed_language_text(
    vocab: Sequence[str], n_tokens: int, cfg: CorpusConfig, rng: np.random.Generator, id: str
) -> Text:
    v = len(vocab)
    popularity = 1.0 / np.arange(1, v + 1) ** cfg.zipf
    popularity = popularity[rng.permutation(v)]
    popularity /= popularity.sum()
    succ = np.array([rng.choice(v, cfg.successors, replace=False, p=popularity) for _ in range(v)])
    weights = rng.dirichlet(np.ones(cfg.successors), size=v)
    out = np.empty(n_tokens, dtype=np.int64)
    out[0] = rng.choice(v, p=popularity)
    for k in range(1, n_tokens):
        out[k] = succ[out[k - 1], rng.choice(cfg.successors, p=weights[out[k - 1]])]
    return Text(id, tuple(vocab[i] for i in out))


def two_group_corpus(cfg: CorpusConfig = CorpusConfig()) -> SyntheticCorpus:
    """Generate ``texts_per_group`` Markov fakes from each of two seed languages."""
    rng = np.random.default_rng(cfg.seed)
    vocab = pseudo_words(cfg.vocabulary, rng)
    texts, groups, seeds = [], {}, []
    for g in range(2):
        seed_text = seed_language_text(vocab, cfg.seed_tokens, cfg, rng, f"seed{g}")
        seeds.append(seed_text)
        model = build_model([seed_text])
        for k in range(cfg.texts_per_group):
            length = int(rng.integers(cfg.min_length, cfg.max_length + 1))
            label = f"g{g}-{k:02d}"
            texts.append(generate(model, length, cfg.seed * 1000 + 100 * g + k, id=label))
            groups[label] = g
    return SyntheticCorpus(texts, groups, seeds)


def distance_matrices(
    corpus: SyntheticCorpus, lams: Sequence[float], jobs: int = 1
) -> dict[float, DistanceMatrix]:
    """d4 matrices rounded to 6 decimals, as they would pass through a CSV file."""
    return {lam: pairwise_matrix(corpus.texts, lam, jobs=jobs).rounded(6) for lam in lams}


def mean_offdiagonal(m: DistanceMatrix) -> float:
    n = len(m)
    return float(m.values[np.triu_indices(n, 1)].mean())
