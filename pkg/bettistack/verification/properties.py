"""
Randomized property checks on coning.

Samples come from ``sampling.random_complexes`` with an explicit seed, so any
failure reported here can be replayed.
"""

from __future__ import annotations

import logging
from typing import List, Sequence

from bettistack.algebra.hochster import betti_via_hochster
from bettistack.core.complex import f_vector
from bettistack.families.coning import cone_inf, cone_j, fvector_cone_j, zero_cone_betti
from bettistack.verification.result import CheckResult
from bettistack.verification.sampling import random_complexes

logger = logging.getLogger(__name__)

DEFAULT_CHARS = (2, 101)


def check_diagonal_preservation(
    samples: int = 200,
    seed: int = 0,
    chars: Sequence[int] = DEFAULT_CHARS,
    max_n: int = 6,
) -> CheckResult:
    """
    β of C_(j)Δ agrees with β of Δ in degrees <= j+1, and the full cone changes nothing.
    """
    problems: List[str] = []
    for idx, complex_ in enumerate(random_complexes(samples, seed, max_n=max_n)):
        for p in chars:
            base = betti_via_hochster(complex_, p)
            for j in range(max_n + 1):
                coned = betti_via_hochster(cone_j(complex_, j), p)
                if coned.restricted_to_degrees(j + 1).entries != base.restricted_to_degrees(j + 1).entries:
                    problems.append(f"sample {idx} p={p} j={j}")
                if fvector_cone_j(f_vector(complex_), j) != f_vector(cone_j(complex_, j)):
                    problems.append(f"sample {idx} j={j}: f-vector formula")
            if betti_via_hochster(cone_inf(complex_), p).entries != base.entries:
                problems.append(f"sample {idx} p={p} inf")
        logger.debug("diagonal preservation sample %d done", idx)
    detail = f"{samples} samples, seed={seed}, chars={tuple(chars)}"
    if problems:
        detail += "; failures: " + ", ".join(problems[:10])
    return CheckResult("diagonal preservation", not problems, detail)


def check_zero_cone_formula(
    samples: int = 100,
    seed: int = 0,
    chars: Sequence[int] = DEFAULT_CHARS,
    max_n: int = 6,
) -> CheckResult:
    """The closed-form diagram of C_(0)Δ matches a direct Hochster computation."""
    problems: List[str] = []
    for idx, complex_ in enumerate(random_complexes(samples, seed, max_n=max_n)):
        for p in chars:
            predicted = zero_cone_betti(betti_via_hochster(complex_, p))
            actual = betti_via_hochster(cone_j(complex_, 0), p)
            if predicted != actual:
                problems.append(f"sample {idx} p={p}")
    detail = f"{samples} samples, seed={seed}, chars={tuple(chars)}"
    if problems:
        detail += "; failures: " + ", ".join(problems[:10])
    return CheckResult("zero-cone formula", not problems, detail)
