"""Exact counting of intersecting subfamilies and most probably intersecting families."""

from .counting import (brute_force_profile, inter_count, inter_profile, intersection_graph, profile_split,
                       star_count, triangle_count)
from .exactmath import binom
from .family import (SetFamily, colex_less, colex_segment, degree_sequence, disjoint_pairs, is_cover,
                     is_intersecting, lex_less, lex_rank, lex_segment, lex_unrank, make_family, replace_set)
from .probability import mc_estimate, prob_from_profile, prob_intersecting_exact
from .search import Objective, classify_structure, compress_ij, exhaustive_search, shift_local_search

__version__ = "0.1.0"

__all__ = [
    "SetFamily", "make_family", "lex_segment", "colex_segment", "lex_less", "colex_less", "lex_rank",
    "lex_unrank", "degree_sequence", "disjoint_pairs", "is_intersecting", "is_cover", "replace_set",
    "binom", "intersection_graph", "inter_profile", "inter_count", "brute_force_profile", "profile_split",
    "star_count", "triangle_count", "prob_from_profile", "prob_intersecting_exact", "mc_estimate",
    "Objective", "exhaustive_search", "shift_local_search", "compress_ij", "classify_structure",
]
