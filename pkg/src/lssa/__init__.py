"""Left-symmetric superalgebra structures on sl(m|n), computed exactly."""

from .core import (Cocycle, ProductTable, check_cocycle, check_lssa, evaluation_map,
                   identity_cocycle, lssa_from_cocycle, recovers_bracket)
from .reps import Representation, find_isomorphism, standard_rep
from .superlie import LieSuperalgebra, make_algebra

__version__ = "0.1.0"

__all__ = [
    "Cocycle", "LieSuperalgebra", "ProductTable", "Representation", "check_cocycle", "check_lssa",
    "evaluation_map", "find_isomorphism", "identity_cocycle", "lssa_from_cocycle", "make_algebra",
    "recovers_bracket", "standard_rep",
]
