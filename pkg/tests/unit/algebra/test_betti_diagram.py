from __future__ import annotations

import pytest

from bettistack.algebra.diagram import (
    BettiDiagram,
    DiagramOrder,
    compare,
    compare_betti_numbers,
    degree_sums,
    diagonal_sums,
    is_linear,
    nonzero_rows,
    render_macaulay2,
    total_betti,
)
from bettistack.core.errors import AmbientMismatch, InvalidParameter
from bettistack.verification.golden import GOLDEN_D, GOLDEN_S_I, GOLDEN_S_J


def _diagram(n: int, betti: dict) -> BettiDiagram:
    return BettiDiagram.from_mapping(n, 101, betti)


def test_entries_are_merged_sorted_and_sparse() -> None:
    diagram = BettiDiagram(3, 2, ((1, 2, 1), (0, 0, 1), (1, 2, 2), (2, 3, 0)))
    assert diagram.entries == ((0, 0, 1), (1, 2, 3))
    assert diagram[2, 3] == 0
    assert diagram.support() == [(0, 0), (1, 2)]


def test_entries_outside_range_are_rejected() -> None:
    with pytest.raises(InvalidParameter):
        BettiDiagram(3, 2, ((2, 1, 1),))
    with pytest.raises(InvalidParameter):
        BettiDiagram(3, 2, ((1, 4, 1),))
    with pytest.raises(InvalidParameter, match="negative"):
        BettiDiagram(3, 2, ((1, 2, -1),))


def test_with_entry_and_degree_restriction() -> None:
    diagram = _diagram(3, {(0, 0): 1, (1, 2): 3, (2, 3): 2})
    assert diagram.with_entry(1, 2, 0).support() == [(0, 0), (2, 3)]
    assert diagram.restricted_to_degrees(2).support() == [(0, 0), (1, 2)]


def test_canonical_key_distinguishes_characteristic() -> None:
    a = BettiDiagram(2, 2, ((0, 0, 1),))
    b = BettiDiagram(2, 3, ((0, 0, 1),))
    assert a.canonical_key() != b.canonical_key()
    assert a.canonical_key() == BettiDiagram(2, 2, ((0, 0, 1),)).canonical_key()


def test_six_variable_pair_sums(diagram_pair) -> None:
    beta_i, beta_j = diagram_pair
    assert total_betti(beta_i).s == GOLDEN_S_I
    assert total_betti(beta_j).s == GOLDEN_S_J
    assert diagonal_sums(beta_i).d == GOLDEN_D
    assert diagonal_sums(beta_j).d == GOLDEN_D
    assert total_betti(beta_j).total() == 34


def test_degree_sums_are_unsigned() -> None:
    diagram = _diagram(3, {(0, 0): 1, (1, 2): 3, (2, 3): 2})
    assert degree_sums(diagram) == (1, 0, 3, 2)
    assert diagonal_sums(diagram).d == (1, 0, -3, 2)
    assert diagonal_sums(diagram).abs_total() == 6


def test_compare_orders() -> None:
    small = _diagram(3, {(0, 0): 1, (1, 2): 1})
    big = _diagram(3, {(0, 0): 1, (1, 2): 2})
    other = _diagram(3, {(0, 0): 1, (1, 3): 1})
    assert compare(small, big) is DiagramOrder.LESS
    assert compare(big, small) is DiagramOrder.GREATER
    assert compare(small, small) is DiagramOrder.EQUAL
    assert compare(big, other) is DiagramOrder.INCOMPARABLE
    assert DiagramOrder.LESS.flipped() is DiagramOrder.GREATER
    assert DiagramOrder.INCOMPARABLE.flipped() is DiagramOrder.INCOMPARABLE


def test_compare_is_antisymmetric(diagram_pair) -> None:
    beta_i, beta_j = diagram_pair
    assert compare(beta_i, beta_j) is DiagramOrder.INCOMPARABLE
    assert compare(beta_j, beta_i) is DiagramOrder.INCOMPARABLE


def test_compare_rejects_different_ambient() -> None:
    with pytest.raises(AmbientMismatch):
        compare(_diagram(2, {(0, 0): 1}), _diagram(3, {(0, 0): 1}))


def test_ungraded_betti_numbers_are_incomparable(diagram_pair) -> None:
    assert compare_betti_numbers(*diagram_pair) is DiagramOrder.INCOMPARABLE


def test_rows_and_linearity() -> None:
    two_points = _diagram(2, {(0, 0): 1, (1, 2): 1})
    assert nonzero_rows(two_points) == (0, 1)
    assert is_linear(two_points, 2)
    assert not is_linear(_diagram(3, {(0, 0): 1, (1, 3): 1}), 2)


def test_render_zero_ideal() -> None:
    assert render_macaulay2(_diagram(2, {(0, 0): 1})) == "       0\ntotal: 1\n    0: 1"


def test_render_single_generator() -> None:
    expected = "\n".join(
        [
            "       0 1",
            "total: 1 1",
            "    0: 1 0",
            "    1: 0 1",
        ]
    )
    assert render_macaulay2(_diagram(2, {(0, 0): 1, (1, 2): 1})) == expected


def test_render_keeps_interior_zero_rows(diagram_pair) -> None:
    expected = "\n".join(
        [
            "       0 1  2 3 4",
            "total: 1 8 14 9 2",
            "    0: 1 0  0 0 0",
            "    1: 0 7 12 8 2",
            "    2: 0 0  0 0 0",
            "    3: 0 1  2 1 0",
        ]
    )
    assert render_macaulay2(diagram_pair[1]) == expected


def test_render_empty_diagram() -> None:
    assert render_macaulay2(BettiDiagram(2, 2, ())) == ""
