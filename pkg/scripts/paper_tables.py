#!/usr/bin/env python3
"""Print the worked position-match examples (single pairs and the 3x8 table) at lambda = .8."""
from textdist import Text, d3, position_match, position_match_table

LAM = 0.8
PAIRS = [
    ("man", "dog"),
    ("dog", "dog"),
    ("man bites dog", "man bites dog"),
    ("man bites dog", "dog bites man"),
    ("the quick brown fox jumps over the lazy dog", "the quick white fox crawls under the high dog"),
]


def main():
    for a, b in PAIRS:
        value = position_match(Text.from_words(a), Text.from_words(b), 1, 1, LAM)
        print(f"{a!r:48} {b!r:50} {value:.4f}")
    print()
    a = Text.from_words("the lazy fox")
    b = Text.from_words("the quick fox jumps over the lazy dog")
    print("      " + " ".join(f"{w:>6}" for w in b))
    for word, row in zip(a, position_match_table(a, b, LAM)):
        print(f"{word:>5} " + " ".join(f"{v:6.2f}" for v in row))
    print(f"\nd3 = {d3(a, b, LAM):.6f}")


if __name__ == "__main__":
    main()
