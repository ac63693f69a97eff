"""
End-to-end reproduction of the incomparable six-variable pair.

Two ideals with f-vector (6,8,4,0,0,0) have incomparable Betti diagrams, and
diagonal 6 rules out a unique minimum for their Hilbert function.
"""

from __future__ import annotations

import logging
from typing import Dict, List, Tuple

from bettistack.algebra.diagram import (
    BettiDiagram,
    DiagramOrder,
    compare,
    diagonal_sums,
    render_macaulay2,
    total_betti,
)
from bettistack.algebra.field import DEFAULT_CHAR
from bettistack.algebra.hochster import betti_via_hochster, hilbert_series_check
from bettistack.core.complex import FVector, SquarefreeIdeal, complex_of_ideal, f_vector, from_facets
from bettistack.families.coning import fvector_cone_j
from bettistack.families.extremality import betti_family_index, check_diag_witness, check_sum_equals_abs_diag
from bettistack.verification.result import CheckResult

logger = logging.getLogger(__name__)

GOLDEN_N = 6
GOLDEN_FVECTOR = (6, 8, 4, 0, 0, 0)
GOLDEN_I_GENS = ((1, 2), (1, 3), (2, 3), (3, 4), (3, 5), (3, 6), (4, 5))
GOLDEN_J_GENS = ((1, 2), (1, 4), (2, 3), (2, 5), (3, 4), (4, 5), (4, 6), (1, 3, 5, 6))

GOLDEN_BETTI_I: Dict[Tuple[int, int], int] = {
    (0, 0): 1,
    (1, 2): 7,
    (2, 3): 12,
    (3, 4): 10,
    (4, 5): 5,
    (5, 6): 1,
    (2, 4): 1,
    (3, 5): 1,
}
GOLDEN_BETTI_J: Dict[Tuple[int, int], int] = {
    (0, 0): 1,
    (1, 2): 7,
    (2, 3): 12,
    (3, 4): 8,
    (4, 5): 2,
    (1, 4): 1,
    (2, 5): 2,
    (3, 6): 1,
}
GOLDEN_S_I = (1, 7, 13, 11, 5, 1)
GOLDEN_S_J = (1, 8, 14, 9, 2)
GOLDEN_D = (1, 0, -7, 12, -9, 4, -1)
GOLDEN_WITNESS = 6
GOLDEN_FAMILY_K = 3

CONING_ROOT = (4, 4, 1, 0)
CONING_FACETS = ((1, 2, 4), (3, 4))
CONING_TABLE = {
    0: (5, 4, 1, 0, 0),
    1: (5, 8, 1, 0, 0),
    2: (5, 8, 5, 0, 0),
    3: (5, 8, 5, 1, 0),
}


def golden_ideals() -> Tuple[SquarefreeIdeal, SquarefreeIdeal]:
    return (
        SquarefreeIdeal.generated_by(GOLDEN_N, GOLDEN_I_GENS),
        SquarefreeIdeal.generated_by(GOLDEN_N, GOLDEN_J_GENS),
    )


def golden_diagrams(p: int = DEFAULT_CHAR) -> Tuple[BettiDiagram, BettiDiagram]:
    ideal_i, ideal_j = golden_ideals()
    return (
        betti_via_hochster(complex_of_ideal(ideal_i), p),
        betti_via_hochster(complex_of_ideal(ideal_j), p),
    )


def _check(name: str, passed: bool, detail: str = "") -> CheckResult:
    logger.info("%s: %s %s", name, "PASS" if passed else "FAIL", detail)
    return CheckResult(name, passed, detail)


def run_golden_checks(p: int = DEFAULT_CHAR) -> List[CheckResult]:
    """Recompute both diagrams and every derived quantity; one result per item."""
    ideal_i, ideal_j = golden_ideals()
    complex_i, complex_j = complex_of_ideal(ideal_i), complex_of_ideal(ideal_j)
    beta_i, beta_j = golden_diagrams(p)
    fvec = FVector(GOLDEN_FVECTOR, GOLDEN_N)
    results = [
        _check("f-vector I", f_vector(complex_i) == fvec, str(f_vector(complex_i))),
        _check("f-vector J", f_vector(complex_j) == fvec, str(f_vector(complex_j))),
        _check("betti table I", beta_i.betti == GOLDEN_BETTI_I, "\n" + render_macaulay2(beta_i)),
        _check("betti table J", beta_j.betti == GOLDEN_BETTI_J, "\n" + render_macaulay2(beta_j)),
        _check("column sums I", total_betti(beta_i).s == GOLDEN_S_I, str(total_betti(beta_i).s)),
        _check("column sums J", total_betti(beta_j).s == GOLDEN_S_J, str(total_betti(beta_j).s)),
        _check(
            "diagonal sums",
            diagonal_sums(beta_i).d == diagonal_sums(beta_j).d == GOLDEN_D,
            str(diagonal_sums(beta_i).d),
        ),
        _check("hilbert series I", hilbert_series_check(beta_i, fvec)),
        _check("hilbert series J", hilbert_series_check(beta_j, fvec)),
        _check("incomparable", compare(beta_i, beta_j) is DiagramOrder.INCOMPARABLE),
    ]
    witness = check_diag_witness([beta_i, beta_j])
    results.append(_check("diagonal witness", witness == GOLDEN_WITNESS, f"j={witness}"))
    results.append(
        _check(
            "tight total betti J",
            check_sum_equals_abs_diag(beta_j) and not check_sum_equals_abs_diag(beta_i),
            f"sum s^J = {sum(total_betti(beta_j).s)}, sum |d| = {sum(abs(x) for x in GOLDEN_D)}",
        )
    )
    k = betti_family_index(beta_j, beta_i)
    results.append(_check("betti family (J, I)", k == GOLDEN_FAMILY_K, f"k={k}"))

    root = from_facets(len(CONING_ROOT), CONING_FACETS)
    coned = {j: fvector_cone_j(f_vector(root), j).entries for j in CONING_TABLE}
    results.append(
        _check(
            "coning table",
            f_vector(root).entries == CONING_ROOT and coned == CONING_TABLE,
            str(coned),
        )
    )
    return results
