from __future__ import annotations

import random

import pytest

from bettistack.core.complex import f_vector
from bettistack.core.errors import InvalidParameter
from bettistack.verification.families import (
    check_cycle_support,
    check_lex_maximum,
    check_minimal_family,
    check_path_linear,
    check_single_degree_count,
    check_single_degree_singletons,
    check_total_order,
)
from bettistack.verification.golden import run_golden_checks
from bettistack.verification.properties import check_diagonal_preservation, check_zero_cone_formula
from bettistack.verification.result import CheckResult, all_passed, failures
from bettistack.verification.sampling import random_complex, random_complexes


def test_result_helpers() -> None:
    ok, bad = CheckResult("ok", True), CheckResult("bad", False, "why")
    assert ok.status == "PASS"
    assert bad.status == "FAIL"
    assert not all_passed([ok, bad])
    assert failures([ok, bad]) == [bad]


def test_sampling_is_reproducible() -> None:
    first = [c.faces for c in random_complexes(10, seed=3, max_n=5)]
    second = [c.faces for c in random_complexes(10, seed=3, max_n=5)]
    assert first == second
    complex_ = random_complex(4, random.Random(1))
    assert f_vector(complex_).get(0) == 4


@pytest.mark.parametrize("p", [2, 101])
def test_golden_checks_pass(p: int) -> None:
    results = run_golden_checks(p)
    assert len(results) == 14
    assert all_passed(results), [r.name for r in failures(results)]


def test_small_family_checks() -> None:
    assert check_path_linear(6, 2).passed
    assert check_cycle_support(8, 101).passed
    assert check_single_degree_count(7).passed
    assert check_minimal_family(4, 2).passed


def test_family_checks_reject_degenerate_sizes() -> None:
    with pytest.raises(InvalidParameter, match="cycle"):
        check_cycle_support(2)
    with pytest.raises(InvalidParameter, match="path"):
        check_path_linear(1)


def test_small_poset_checks() -> None:
    assert check_single_degree_singletons(4).passed
    assert check_total_order(4, 2).passed
    assert check_lex_maximum(4, 101).passed


def test_property_checks_small_sample() -> None:
    assert check_diagonal_preservation(samples=5, seed=1, max_n=4).passed
    assert check_zero_cone_formula(samples=10, seed=1, max_n=5).passed
