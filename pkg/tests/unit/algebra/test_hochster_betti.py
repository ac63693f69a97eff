from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from bettistack.algebra.hochster import betti_via_hochster, hilbert_series_check
from bettistack.core.complex import SimplicialComplex, f_vector, from_facets, full_simplex, minimal_nonfaces
from bettistack.core.errors import (
    ComplexTooLarge,
    InvalidParameter,
    LinearGeneratorUnsupported,
    VoidComplexError,
)
from bettistack.families.extremality import cycle_complex
from bettistack.verification.golden import GOLDEN_BETTI_I, GOLDEN_BETTI_J


@st.composite
def complexes(draw, max_n: int = 5):
    n = draw(st.integers(min_value=1, max_value=max_n))
    facets = draw(st.lists(st.sets(st.integers(min_value=1, max_value=n), min_size=1), max_size=6))
    return from_facets(n, facets)


def test_two_points() -> None:
    assert betti_via_hochster(from_facets(2, [])).betti == {(0, 0): 1, (1, 2): 1}


def test_simplex_has_trivial_diagram() -> None:
    assert betti_via_hochster(full_simplex(4)).betti == {(0, 0): 1}


def test_six_variable_tables(diagram_pair) -> None:
    beta_i, beta_j = diagram_pair
    assert beta_i.betti == GOLDEN_BETTI_I
    assert beta_j.betti == GOLDEN_BETTI_J


def test_six_variable_tables_in_characteristic_two(complex_pair) -> None:
    assert betti_via_hochster(complex_pair[0], 2).betti == GOLDEN_BETTI_I


def test_four_cycle() -> None:
    assert betti_via_hochster(cycle_complex(4)).betti == {(0, 0): 1, (1, 2): 2, (2, 4): 1}


def test_four_edge_complex(four_edge_complex) -> None:
    beta = betti_via_hochster(four_edge_complex)
    assert beta[1, 2] == 2
    assert beta[1, 3] == 1
    assert hilbert_series_check(beta, f_vector(four_edge_complex))


def test_errors() -> None:
    with pytest.raises(VoidComplexError):
        betti_via_hochster(SimplicialComplex(2, frozenset()))
    with pytest.raises(LinearGeneratorUnsupported):
        betti_via_hochster(SimplicialComplex(2, frozenset({0, 1 << 1})))
    with pytest.raises(InvalidParameter):
        betti_via_hochster(from_facets(2, []), p=6)


def test_vertex_cap_and_degree_cap() -> None:
    points = from_facets(21, [])
    with pytest.raises(ComplexTooLarge):
        betti_via_hochster(points)
    capped = betti_via_hochster(points, degree_cap=2)
    assert capped.betti == {(0, 0): 1, (1, 2): 210}


def test_degree_cap_truncates(diagram_pair, complex_pair) -> None:
    capped = betti_via_hochster(complex_pair[1], degree_cap=4)
    assert capped == diagram_pair[1].restricted_to_degrees(4)


def test_parallel_sweep_matches_serial(complex_pair, diagram_pair) -> None:
    parallel = betti_via_hochster(complex_pair[0], workers=2, parallel_threshold=1)
    assert parallel == diagram_pair[0]


def test_hilbert_check_detects_tampering(diagram_pair, complex_pair) -> None:
    beta_i = diagram_pair[0]
    f = f_vector(complex_pair[0])
    assert hilbert_series_check(beta_i, f)
    assert not hilbert_series_check(beta_i.with_entry(5, 6, 0), f)
    assert not hilbert_series_check(betti_via_hochster(from_facets(2, [])), f)


@given(complexes(), st.sampled_from([2, 101]))
def test_hilbert_series_identity(complex_, p) -> None:
    assert hilbert_series_check(betti_via_hochster(complex_, p), f_vector(complex_))


@given(complexes())
def test_beta_00_and_first_column(complex_) -> None:
    beta = betti_via_hochster(complex_)
    assert beta[0, 0] == 1
    gens = minimal_nonfaces(complex_).gens
    assert sum(beta[1, j] for j in range(complex_.n + 1)) == len(gens)


@given(complexes(max_n=6), st.sampled_from([2, 101]))
def test_no_linear_forms_in_the_resolution(complex_, p) -> None:
    beta = betti_via_hochster(complex_, p)
    assert all(beta[i, i] == 0 for i in range(1, complex_.n + 1))
    assert all(j > i for i, j, _ in beta.entries if i > 0)


@st.composite
def relabelled_pairs(draw, max_n: int = 5):
    n = draw(st.integers(min_value=1, max_value=max_n))
    facets = draw(st.lists(st.sets(st.integers(min_value=1, max_value=n), min_size=1), max_size=6))
    perm = draw(st.permutations(range(1, n + 1)))
    moved = [{perm[v - 1] for v in facet} for facet in facets]
    return from_facets(n, facets), from_facets(n, moved)


@given(relabelled_pairs())
def test_diagram_ignores_vertex_labels(pair) -> None:
    original, relabelled = pair
    assert betti_via_hochster(relabelled).betti == betti_via_hochster(original).betti
