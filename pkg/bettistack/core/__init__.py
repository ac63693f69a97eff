from bettistack.core.complex import (
    FVector,
    SimplicialComplex,
    SquarefreeIdeal,
    VertexSet,
    complex_of_ideal,
    f_vector,
    from_facets,
    minimal_nonfaces,
    restrict,
)
from bettistack.core.errors import BettiStackError

__all__ = [
    "VertexSet",
    "SimplicialComplex",
    "SquarefreeIdeal",
    "FVector",
    "from_facets",
    "f_vector",
    "restrict",
    "minimal_nonfaces",
    "complex_of_ideal",
    "BettiStackError",
]
