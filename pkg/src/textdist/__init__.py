"""Global discounted inter-textual distances, clustering and fake-text generation."""
from .assignment import brute_force_assignment, hungarian, solve_assignment
from .clustering import (
    DistanceMatrix,
    Leaf,
    Merge,
    agglomerate,
    cut,
    pairwise_matrix,
    parse_dendrogram,
    read_matrix_csv,
    serialize_dendrogram,
    write_matrix_csv,
)
from .distance import d2, d3, d4, distance
from .errors import DomainError, MatrixFormatError, TableTooLargeError, TextDistError, TokenCapError
from .generator import MarkovModel, build_model, generate, generate_tokens
from .match import delta, directional_minima, position_match, position_match_table, row_minima
from .onegram import onegram_distance
from .text import Text, concat, frequency, read_text, tokenize

__version__ = "0.1.0"
