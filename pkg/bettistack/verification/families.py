"""
Exhaustive checks over small families of f-vectors.

Each check builds full posets by enumeration, so vertex counts stay small.
"""

from __future__ import annotations

import logging
from math import comb
from typing import List, Optional

from bettistack.algebra.diagram import DiagramOrder, is_linear
from bettistack.algebra.field import DEFAULT_CHAR
from bettistack.algebra.hilbert_lex import realizable_fvectors, single_degree_lex_prefixes, squarefree_lex_complex
from bettistack.algebra.hochster import betti_via_hochster
from bettistack.core.complex import FVector, f_vector
from bettistack.core.errors import InvalidParameter
from bettistack.families.extremality import cycle_complex, cycle_support_ok, minimal_family_complex, path_complex
from bettistack.search.poset import build_poset
from bettistack.verification.result import CheckResult

logger = logging.getLogger(__name__)


def _summary(name: str, problems: List[str], detail: str) -> CheckResult:
    if problems:
        detail += "; failures: " + ", ".join(problems[:10])
    logger.info("%s: %s", name, "PASS" if not problems else "FAIL")
    return CheckResult(name, not problems, detail)


def check_minimal_family(n: int, p: int = DEFAULT_CHAR, workers: Optional[int] = 1) -> CheckResult:
    """For f = (n, k, 0, ..., 0), 0 <= k <= n, the path/cycle diagram lies below every diagram."""
    problems: List[str] = []
    for k in range(0, min(n, comb(n, 2)) + 1):
        if k == n and n < 3:
            continue
        f = FVector.of([n, k], n)
        candidate = betti_via_hochster(minimal_family_complex(n, k), p)
        poset = build_poset(n, f, p, mod_iso=True, workers=workers)
        if candidate not in poset:
            problems.append(f"k={k}: candidate missing from poset")
            continue
        if any(poset.order(candidate, d) not in (DiagramOrder.LESS, DiagramOrder.EQUAL) for d in poset.diagrams):
            problems.append(f"k={k}: candidate is not below every diagram")
    return _summary("minimal (n,k) family", problems, f"n={n}, p={p}")


def check_path_linear(n: int, p: int = DEFAULT_CHAR) -> CheckResult:
    if n < 2:
        raise InvalidParameter(f"a path needs at least 2 vertices, got n={n}")
    problems = [
        f"k={k}" for k in range(1, n) if not is_linear(betti_via_hochster(path_complex(n, k), p), 2)
    ]
    return _summary("path complexes 2-linear", problems, f"n={n}, p={p}")


def check_cycle_support(n: int, p: int = DEFAULT_CHAR) -> CheckResult:
    if n < 3:
        raise InvalidParameter(f"a cycle needs at least 3 vertices, got n={n}")
    problems = []
    for m in range(3, n + 1):
        beta = betti_via_hochster(cycle_complex(m), p)
        if not cycle_support_ok(beta, m):
            problems.append(f"n={m}: support {beta.support()}")
    return _summary("cycle support", problems, f"3 <= n <= {n}, p={p}")


def check_single_degree_count(n: int) -> CheckResult:
    count = sum(1 for _ in single_degree_lex_prefixes(n))
    expected = 2**n - n - 1
    return CheckResult("single-degree lex count", count == expected, f"n={n}: {count} prefixes, expected {expected}")


def check_single_degree_singletons(n: int, p: int = DEFAULT_CHAR, workers: Optional[int] = 1) -> CheckResult:
    """A lex ideal generated in one degree is the only diagram for its f-vector."""
    problems: List[str] = []
    for prefix in single_degree_lex_prefixes(n):
        poset = build_poset(n, prefix.fvector, p, mod_iso=True, workers=workers)
        if len(poset) != 1:
            problems.append(f"{prefix.fvector}: {len(poset)} diagrams")
    return _summary("single-degree singletons", problems, f"n={n}, p={p}")


def check_total_order(n: int, p: int = DEFAULT_CHAR, workers: Optional[int] = 1) -> CheckResult:
    """Every realizable f-vector on n vertices gives a totally ordered poset."""
    problems: List[str] = []
    total = 0
    for f in realizable_fvectors(n):
        total += 1
        poset = build_poset(n, f, p, mod_iso=True, workers=workers)
        if not poset.is_total_order():
            problems.append(str(f))
    return _summary("total order", problems, f"n={n}, p={p}, {total} f-vectors")


def check_lex_maximum(n: int, p: int = DEFAULT_CHAR, workers: Optional[int] = 1) -> CheckResult:
    """The squarefree lex diagram is the unique maximum of every poset on n vertices."""
    problems: List[str] = []
    for f in realizable_fvectors(n):
        lex = betti_via_hochster(squarefree_lex_complex(f), p)
        poset = build_poset(n, f, p, mod_iso=True, workers=workers)
        if poset.maximal_elements() != [lex]:
            problems.append(str(f))
        if f_vector(squarefree_lex_complex(f)) != f:
            problems.append(f"{f}: lex complex has the wrong f-vector")
    return _summary("lex maximum", problems, f"n={n}, p={p}")
