from __future__ import annotations

import pytest

from bettistack.algebra.diagram import BettiDiagram, DiagramOrder
from bettistack.algebra.hilbert_lex import squarefree_lex_complex
from bettistack.algebra.hochster import betti_via_hochster
from bettistack.core.complex import FVector, from_facets
from bettistack.core.errors import AmbientMismatch, NotSameHilbertFunction
from bettistack.search.poset import BettiPoset, build_poset

GOLDEN_F = FVector((6, 8, 4, 0, 0, 0), 6)


def test_single_diagram_poset() -> None:
    poset = build_poset(3, FVector((3, 0, 0), 3))
    assert len(poset) == 1
    assert poset.has_unique_min()
    assert poset.is_total_order()
    assert poset.hasse_edges() == []


def test_three_edges_on_four_vertices() -> None:
    poset = build_poset(4, FVector((4, 3, 0, 0), 4), p=2)
    assert poset.complexes_seen == 3
    assert len(poset) == 2
    assert poset.is_total_order()
    assert poset.has_unique_min()
    assert poset.hasse_edges() == [(1, 0)]
    lex = betti_via_hochster(squarefree_lex_complex(poset.f), 2)
    assert poset.maximal_elements() == [lex]
    assert poset.witness(lex) is not None


def test_labeled_search_sees_every_complex() -> None:
    poset = build_poset(4, FVector((4, 3, 0, 0), 4), mod_iso=False)
    assert poset.complexes_seen == 20
    assert len(poset) == 2
    assert not poset.truncated


def test_truncation() -> None:
    poset = build_poset(4, FVector((4, 3, 0, 0), 4), mod_iso=False, max_complexes=5)
    assert poset.truncated
    assert poset.complexes_seen == 5
    exact = build_poset(4, FVector((4, 3, 0, 0), 4), mod_iso=False, max_complexes=20)
    assert not exact.truncated


def test_injected_pair_is_incomparable(diagram_pair) -> None:
    beta_i, beta_j = diagram_pair
    poset = BettiPoset(f=GOLDEN_F)
    assert poset.add(beta_i)
    assert poset.add(beta_j)
    assert not poset.add(beta_i)
    assert beta_j in poset
    assert poset.order(beta_i, beta_j) is DiagramOrder.INCOMPARABLE
    assert poset.incomparable_pairs() == [(0, 1)]
    assert len(poset.minimal_elements()) == 2
    assert not poset.has_unique_min()
    assert not poset.is_total_order()
    assert poset.hasse_edges() == []
    poset.check_consistency()


def test_add_validates_hilbert_function(diagram_pair) -> None:
    poset = BettiPoset(f=GOLDEN_F)
    with pytest.raises(NotSameHilbertFunction):
        poset.add(diagram_pair[0].with_entry(5, 6, 0))
    with pytest.raises(AmbientMismatch):
        poset.add(BettiDiagram(2, 101, ((0, 0, 1),)))


def test_witness_is_first_complex() -> None:
    poset = BettiPoset(f=FVector((2, 0), 2))
    points = from_facets(2, [])
    poset.add(betti_via_hochster(points), points)
    assert poset.witness(betti_via_hochster(points)) == points
