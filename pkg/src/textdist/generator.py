"""Order-3 Markov-chain fake-text generator.

Generation picks a uniformly random 3-word window of the training corpus,
then repeatedly draws the next word from the successors of the last three
words, weighted by how often each successor follows them in the corpus.

Randomness comes from Python's ``random.Random`` (Mersenne Twister,
MT19937) seeded with the integer seed, drawing only through
``randrange``, so output is reproducible across platforms and runs.
When the current context has no successor (only possible for the very
last window of the corpus) generation restarts from a fresh random start
window and the restart position is recorded.
"""
from __future__ import annotations

import logging
import random
from dataclasses import dataclass, field
from typing import Sequence

from .errors import DomainError
from .text import Text

log = logging.getLogger(__name__)

ORDER = 3
MAX_SEED = 2**64 - 1

Context = tuple[str, str, str]


@dataclass
class MarkovModel:
    contexts: dict[Context, dict[str, int]] = field(default_factory=dict)
    starts: list[Context] = field(default_factory=list)
    order: int = ORDER

    def successors(self, context: Context) -> dict[str, int]:
        return self.contexts.get(context, {})


def build_model(corpus: Sequence[Text]) -> MarkovModel:
    """Count every (3-word context, successor) pair in the concatenated corpus."""
    words: list[str] = []
    for t in corpus:
        words.extend(t.tokens)
    if len(words) < ORDER + 1:
        raise DomainError(f"corpus has {len(words)} tokens, need at least {ORDER + 1}")
    model = MarkovModel()
    for k in range(len(words) - ORDER + 1):
        ctx = tuple(words[k : k + ORDER])
        model.starts.append(ctx)
        if k + ORDER < len(words):
            succ = model.contexts.setdefault(ctx, {})
            nxt = words[k + ORDER]
            succ[nxt] = succ.get(nxt, 0) + 1
    return model


def _draw(rng: random.Random, successors: dict[str, int]) -> str:
    r = rng.randrange(sum(successors.values()))
    for word, count in successors.items():
        r -= count
        if r < 0:
            return word
    raise AssertionError("unreachable")


def generate_tokens(model: MarkovModel, length: int, seed: int) -> tuple[list[str], list[int]]:
    """Return (tokens, restarts): exactly ``length`` words and restart offsets."""
    if length < ORDER:
        raise DomainError(f"length must be at least {ORDER}")
    if not model.starts:
        raise DomainError("empty model")
    if not 0 <= seed <= MAX_SEED:
        raise DomainError(f"seed must be an unsigned 64-bit integer, got {seed}")
    rng = random.Random(seed)
    out = list(model.starts[rng.randrange(len(model.starts))])
    restarts: list[int] = []
    while len(out) < length:
        successors = model.successors(tuple(out[-ORDER:]))
        if not successors:
            restarts.append(len(out))
            log.info("dead end at token %d, restarting", len(out))
            out.extend(model.starts[rng.randrange(len(model.starts))])
            continue
        out.append(_draw(rng, successors))
    return out[:length], restarts


def generate(model: MarkovModel, length: int, seed: int, id: str = "") -> Text:
    tokens, _ = generate_tokens(model, length, seed)
    return Text(id or f"gen-{seed}", tuple(tokens))
