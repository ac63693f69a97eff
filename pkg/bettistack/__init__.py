__version__ = "0.1.0"

from bettistack.algebra.diagram import BettiDiagram, DiagramOrder, compare, diagonal_sums, total_betti
from bettistack.algebra.hochster import betti_via_hochster, hilbert_series_check
from bettistack.core.complex import (
    FVector,
    SimplicialComplex,
    SquarefreeIdeal,
    complex_of_ideal,
    f_vector,
    from_facets,
    minimal_nonfaces,
)
from bettistack.search.poset import BettiPoset, build_poset

__all__ = [
    "SimplicialComplex",
    "SquarefreeIdeal",
    "FVector",
    "from_facets",
    "f_vector",
    "minimal_nonfaces",
    "complex_of_ideal",
    "BettiDiagram",
    "DiagramOrder",
    "betti_via_hochster",
    "hilbert_series_check",
    "compare",
    "diagonal_sums",
    "total_betti",
    "BettiPoset",
    "build_poset",
]
