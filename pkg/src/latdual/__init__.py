"""Dualization in lattices of closed sets given by implicational bases."""
from .base import Implication, ImplicationalBase
from .dualization import (Antichain, DualEnumResult, check_dual, complementary_hypergraph,
                          dual_enum, is_in_dual_antichain, iter_dual, validate_antichain)
from .errors import (AntichainError, ContractError, InputError, LatDualError, NotAPosetError,
                     ParseError, SizeLimitError, UnsupportedDimensionError)
from .hypergraph import (DualityVerdict, Hypergraph, fk_dual_check, is_transversal,
                         minimize_transversal, transversals_berge, transversals_via_dual)
from .independence import (dex, enumerate_minimal_covering_sets, ex, independent_width,
                           is_independent_implications, is_independent_set,
                           is_minimal_covering_set, spex)
from .poset import Poset, is_interval_order

__all__ = [
    "Antichain", "AntichainError", "ContractError", "DualEnumResult", "DualityVerdict",
    "Hypergraph", "Implication", "ImplicationalBase", "InputError", "LatDualError",
    "NotAPosetError", "ParseError", "Poset", "SizeLimitError", "UnsupportedDimensionError",
    "check_dual", "complementary_hypergraph", "dex", "dual_enum",
    "enumerate_minimal_covering_sets", "ex", "fk_dual_check", "independent_width",
    "is_in_dual_antichain", "is_independent_implications", "is_independent_set",
    "is_interval_order", "is_minimal_covering_set", "is_transversal", "iter_dual",
    "minimize_transversal", "spex", "transversals_berge", "transversals_via_dual",
    "validate_antichain",
]
