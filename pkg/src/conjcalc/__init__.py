"""Conjugacy relations, commutative congruences and their closed forms on finite semigroups."""

from .congruence import (Congruence, congruence_generated, is_compatible, least_commutative_congruence,
                         quotient)
from .partition import ElementPartition, PairRelation
from .relations import (BudgetExceeded, all_relations, containment_matrix, sim_c, sim_n, sim_o, sim_p,
                        sim_p1, sim_s, sim_s1_bounded, sim_star1, sim_w)
from .semigroup import (FiniteSemigroup, NonAssociative, SemigroupError, ShapeMismatch, TooLarge, from_json,
                        matrix_unit_semigroup, validate)

__version__ = "0.1.0"

__all__ = [
    "BudgetExceeded", "Congruence", "ElementPartition", "FiniteSemigroup", "NonAssociative", "PairRelation",
    "SemigroupError", "ShapeMismatch", "TooLarge", "all_relations", "congruence_generated",
    "containment_matrix", "from_json", "is_compatible", "least_commutative_congruence",
    "matrix_unit_semigroup", "quotient", "sim_c", "sim_n", "sim_o", "sim_p", "sim_p1", "sim_s",
    "sim_s1_bounded", "sim_star1", "sim_w", "validate",
]
