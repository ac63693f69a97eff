"""
End-to-end reproduction of the six-variable pair with f-vector (6,8,4,0,0,0).
"""

from __future__ import annotations

import pytest

from bettistack.algebra.diagram import DiagramOrder, compare, diagonal_sums, render_macaulay2, total_betti
from bettistack.algebra.hilbert_lex import squarefree_lex_complex
from bettistack.algebra.hochster import betti_via_hochster, hilbert_series_check
from bettistack.core.complex import FVector, complex_of_ideal, f_vector
from bettistack.families.extremality import (
    betti_family_index,
    check_diag_witness,
    check_sum_equals_abs_diag,
)
from bettistack.search.poset import BettiPoset
from bettistack.verification.golden import (
    GOLDEN_BETTI_I,
    GOLDEN_BETTI_J,
    GOLDEN_D,
    GOLDEN_S_I,
    GOLDEN_S_J,
    golden_ideals,
)

F = FVector((6, 8, 4, 0, 0, 0), 6)


@pytest.mark.parametrize("p", [2, 3, 101])
def test_pair_is_characteristic_free(p: int) -> None:
    ideal_i, ideal_j = golden_ideals()
    beta_i = betti_via_hochster(complex_of_ideal(ideal_i), p)
    beta_j = betti_via_hochster(complex_of_ideal(ideal_j), p)
    assert beta_i.betti == GOLDEN_BETTI_I
    assert beta_j.betti == GOLDEN_BETTI_J
    assert total_betti(beta_i).s == GOLDEN_S_I
    assert total_betti(beta_j).s == GOLDEN_S_J
    assert diagonal_sums(beta_i).d == diagonal_sums(beta_j).d == GOLDEN_D


def test_pair_shares_the_hilbert_function(complex_pair, diagram_pair) -> None:
    for complex_, beta in zip(complex_pair, diagram_pair):
        assert f_vector(complex_) == F
        assert hilbert_series_check(beta, F)


def test_no_unique_minimum(diagram_pair) -> None:
    beta_i, beta_j = diagram_pair
    assert compare(beta_i, beta_j) is DiagramOrder.INCOMPARABLE
    assert check_diag_witness([beta_i, beta_j]) == 6
    assert check_sum_equals_abs_diag(beta_j)
    assert sum(total_betti(beta_j).s) == sum(abs(x) for x in GOLDEN_D) == 34
    assert betti_family_index(beta_j, beta_i) == 3


def test_lex_diagram_dominates_the_pair(diagram_pair) -> None:
    lex = betti_via_hochster(squarefree_lex_complex(F))
    assert hilbert_series_check(lex, F)
    for beta in diagram_pair:
        assert compare(beta, lex) is DiagramOrder.LESS


def test_pair_in_a_poset(diagram_pair) -> None:
    poset = BettiPoset(f=F)
    for beta in diagram_pair:
        poset.add(beta)
    poset.add(betti_via_hochster(squarefree_lex_complex(F)))
    assert len(poset) == 3
    assert len(poset.minimal_elements()) == 2
    assert len(poset.maximal_elements()) == 1
    assert len(poset.hasse_edges()) == 2


def test_text_rendering_contains_totals(diagram_pair) -> None:
    text = render_macaulay2(diagram_pair[0])
    assert text.splitlines()[1] == "total: 1 7 13 11 5 1"
