"""Tokens, texts and word frequencies.

A token is a lowercase, purely alphabetic word of at least two letters.
Raw input is split on whitespace; every chunk containing anything but
letters is dropped whole (so ``"3-D"`` and ``"world!"`` disappear).
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Sequence

from .errors import TokenCapError

DEFAULT_MAX_TOKENS = 15_000

FrequencyTable = Counter


@dataclass(frozen=True)
class Text:
    """A labeled, immutable sequence of tokens."""

    id: str
    tokens: tuple[str, ...]

    def __post_init__(self):
        if not isinstance(self.tokens, tuple):
            object.__setattr__(self, "tokens", tuple(self.tokens))

    def __len__(self) -> int:
        return len(self.tokens)

    def __iter__(self):
        return iter(self.tokens)

    def __getitem__(self, i):
        return self.tokens[i]

    @classmethod
    def from_words(cls, words: str | Sequence[str], id: str = "") -> "Text":
        """Build a text from already-clean words, without filtering.

        Handy for tests and for examples such as ``"man bites dog"``.
        """
        if isinstance(words, str):
            words = words.split()
        return cls(id, tuple(words))

    def joined(self) -> str:
        return " ".join(self.tokens)


def is_token(word: str, ascii_only: bool = False) -> bool:
    if len(word) < 2 or not word.isalpha():
        return False
    return word.isascii() if ascii_only else True


def tokenize(
    raw: str,
    id: str = "",
    max_tokens: int | None = DEFAULT_MAX_TOKENS,
    ascii_only: bool = False,
) -> Text:
    """Split ``raw`` on whitespace and keep the lowercase all-letter words.

    Raises TokenCapError if more than ``max_tokens`` words survive
    filtering; pass ``max_tokens=None`` to disable the cap.
    """
    tokens = []
    for chunk in raw.split():
        word = chunk.lower()
        if is_token(word, ascii_only):
            tokens.append(word)
    if max_tokens is not None and len(tokens) > max_tokens:
        raise TokenCapError(max_tokens, len(tokens), id)
    return Text(id, tuple(tokens))


def read_text(
    path: str | Path,
    max_tokens: int | None = DEFAULT_MAX_TOKENS,
    ascii_only: bool = False,
    latin1_fallback: bool = False,
) -> Text:
    """Read and tokenize a UTF-8 file; the text id is the file name."""
    path = Path(path)
    data = path.read_bytes()
    try:
        raw = data.decode("utf-8")
    except UnicodeDecodeError:
        if not latin1_fallback:
            raise
        raw = data.decode("latin-1")
    return tokenize(raw, id=path.name, max_tokens=max_tokens, ascii_only=ascii_only)


def concat(a: Text, b: Text, id: str | None = None) -> Text:
    if id is None:
        id = f"{a.id}+{b.id}" if a.id and b.id else a.id or b.id
    return Text(id, a.tokens + b.tokens)


def frequency(a: Text | Iterable[str]) -> FrequencyTable:
    """Absolute frequency of every token occurring in ``a``."""
    return Counter(a)
