"""Exact path combinatorics for snake modules of types A and B and their
Langlands-dual characters."""
from .lattice import (Character, Family, Weight, char_add, char_dominates, char_mul, fold_char,
                      fold_weight, lpi_char, lpi_weight, map_char, pi_char, pi_weight)
from .paths import (Corner, EpsInt, PathA, PathB, corners_A, corners_B, enum_paths_A,
                    enum_paths_B, half_char_at_n, monomial_of_path, strictly_above, tau, tau_inv,
                    weight_of_path)
from .monomials import YMonomial, ZMonomial
from .snakes import (SnakeA, SnakeB, char_snake, enum_nop_tuples, fold_monomial, qchar_snake,
                     snake_to_monomial, twisted_char_snake, twisted_qchar_snake)
from .segments import (MultiSegment, NopSetSpec, Segment, ab_statistics_equal, build_nop_set,
                       det_char, identity_sides, seg_char)
from .duality import (branch_monomials, branch_tuples, dual_monomial, gap, gap0_twisted_qchar,
                      gkr_qchar, map_F, map_F_inv, map_G, map_L, map_R, verify_branching,
                      verify_dominance, verify_G_weight, verify_gkr_dominance)

__version__ = "0.1.0"

__all__ = [
    "Character",
    "Family",
    "Weight",
    "char_add",
    "char_dominates",
    "char_mul",
    "fold_char",
    "fold_weight",
    "lpi_char",
    "lpi_weight",
    "map_char",
    "pi_char",
    "pi_weight",
    "Corner",
    "EpsInt",
    "PathA",
    "PathB",
    "corners_A",
    "corners_B",
    "enum_paths_A",
    "enum_paths_B",
    "half_char_at_n",
    "monomial_of_path",
    "strictly_above",
    "tau",
    "tau_inv",
    "weight_of_path",
    "YMonomial",
    "ZMonomial",
    "SnakeA",
    "SnakeB",
    "char_snake",
    "enum_nop_tuples",
    "fold_monomial",
    "qchar_snake",
    "snake_to_monomial",
    "twisted_char_snake",
    "twisted_qchar_snake",
    "MultiSegment",
    "NopSetSpec",
    "Segment",
    "ab_statistics_equal",
    "build_nop_set",
    "det_char",
    "identity_sides",
    "seg_char",
    "branch_monomials",
    "branch_tuples",
    "dual_monomial",
    "gap",
    "gap0_twisted_qchar",
    "gkr_qchar",
    "map_F",
    "map_F_inv",
    "map_G",
    "map_L",
    "map_R",
    "verify_branching",
    "verify_dominance",
    "verify_G_weight",
    "verify_gkr_dominance",
]
