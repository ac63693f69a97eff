"""
Extremality criteria for the poset of Betti diagrams with a fixed Hilbert function.

Every check works on diagrams rather than ideals, so externally computed
diagrams can be fed in through the JSON schemas.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from itertools import combinations
from typing import List, Optional, Sequence, Tuple

from bettistack.algebra.diagram import (
    BettiDiagram,
    DiagramOrder,
    compare,
    degree_sums,
    diagonal_sums,
    nonzero_rows,
    total_betti,
)
from bettistack.algebra.field import DEFAULT_CHAR
from bettistack.algebra.hilbert_lex import squarefree_lex_complex
from bettistack.algebra.hochster import betti_via_hochster
from bettistack.core.complex import FVector, SimplicialComplex, f_vector, from_facets
from bettistack.core.errors import (
    AmbientMismatch,
    InvalidParameter,
    InvariantViolation,
    NotSameHilbertFunction,
)
from bettistack.families.cone_tree import cone_tree
from bettistack.families.coning import cone_seq

logger = logging.getLogger(__name__)


def _require_same_hilbert(diagrams: Sequence[BettiDiagram]) -> None:
    if len({d.n for d in diagrams}) > 1:
        raise AmbientMismatch(f"diagrams use different variable counts {sorted({d.n for d in diagrams})}")
    tuples = {diagonal_sums(d).d for d in diagrams}
    if len(tuples) > 1:
        raise NotSameHilbertFunction(f"diagonal sums differ: {sorted(tuples)}")


def diagonal_is_witness(diagrams: Sequence[BettiDiagram], j: int) -> bool:
    """d_j != 0 and, for every i, some diagram has β_{i,j} = 0."""
    if not diagrams or diagonal_sums(diagrams[0]).get(j) == 0:
        return False
    return all(min(d[i, j] for d in diagrams) == 0 for i in range(j + 1))


def check_diag_witness(diagrams: Sequence[BettiDiagram]) -> Optional[int]:
    """
    Least degree j whose diagonal rules out a unique minimum, or None.

    Raises:
        NotSameHilbertFunction: if the diagrams' diagonal sums differ.
        InvariantViolation: if a witness exists but no two inputs are incomparable.
    """
    diagrams = list(diagrams)
    if not diagrams:
        return None
    _require_same_hilbert(diagrams)
    for j in range(diagrams[0].n + 1):
        if not diagonal_is_witness(diagrams, j):
            continue
        if not any(compare(a, b) is DiagramOrder.INCOMPARABLE for a, b in combinations(diagrams, 2)):
            raise InvariantViolation(f"diagonal {j} is a witness but every pair of inputs is comparable")
        logger.info("diagonal witness at j=%d across %d diagrams", j, len(diagrams))
        return j
    return None


def check_sum_equals_abs_diag(beta: BettiDiagram) -> bool:
    """Σ_i β_{i,j} = |d_j| for every j, so the total Betti number is as small as possible."""
    d = diagonal_sums(beta).d
    return all(total == abs(dj) for total, dj in zip(degree_sums(beta), d))


def _parity_ok(beta: BettiDiagram) -> bool:
    return all((j - i) % 2 == 1 for i, j, _ in beta.entries if j > 0)


def betti_family_index(a: BettiDiagram, b: BettiDiagram, swap: bool = False) -> Optional[int]:
    """
    The least k showing the Betti numbers of a and b are incomparable, or None.

    Requires s_0 equal, s^a_1 > s^b_1, s^a_k < s^b_k and s^a_{k+i} <= s^b_{k+i}
    for all i > 0. The parity clause (no support on even rows j - i with j > 0)
    applies to a, or to b when ``swap`` is set.

    Raises:
        NotSameHilbertFunction: if the diagonal sums differ.
    """
    _require_same_hilbert([a, b])
    if not _parity_ok(b if swap else a):
        return None
    sa, sb = total_betti(a), total_betti(b)
    if sa.get(0) != sb.get(0) or sa.get(1) <= sb.get(1):
        return None
    width = max(len(sa.s), len(sb.s))
    for k in range(2, width):
        if sa.get(k) < sb.get(k) and all(sa.get(m) <= sb.get(m) for m in range(k + 1, width)):
            return k
    return None


def check_betti_family(a: BettiDiagram, b: BettiDiagram, swap: bool = False) -> bool:
    return betti_family_index(a, b, swap=swap) is not None


def check_tworow_unique_min(f: FVector, candidate: BettiDiagram, p: int = DEFAULT_CHAR) -> bool:
    """
    True when the lex diagram for f lives in rows 1 and 2 and the candidate is tight.

    Raises:
        NotAnFVector: if no complex attains f.
        NotSameHilbertFunction: if the candidate belongs to another Hilbert function.
    """
    lex = betti_via_hochster(squarefree_lex_complex(f), p)
    _require_same_hilbert([lex, candidate])
    lex_rows = set(nonzero_rows(lex)) - {0}
    return lex_rows <= {1, 2} and check_sum_equals_abs_diag(candidate)


def path_complex(n: int, k: int) -> SimplicialComplex:
    """Edges {1,2}, ..., {k,k+1} plus every vertex of 1..n."""
    if not 1 <= k <= n - 1:
        raise InvalidParameter(f"path needs 1 <= k <= n-1, got n={n}, k={k}")
    return from_facets(n, [(i, i + 1) for i in range(1, k + 1)])


def cycle_complex(n: int) -> SimplicialComplex:
    if n < 3:
        raise InvalidParameter(f"a cycle needs at least 3 vertices, got {n}")
    return from_facets(n, [(i, i + 1) for i in range(1, n)] + [(1, n)])


def minimal_family_complex(n: int, k: int) -> SimplicialComplex:
    """The complex whose diagram is minimal for f = (n, k, 0, ..., 0)."""
    if k == 0:
        return from_facets(n, [])
    if 1 <= k <= n - 1:
        return path_complex(n, k)
    if k == n and n >= 3:
        return cycle_complex(n)
    raise InvalidParameter(f"no minimal family member for n={n}, k={k}")


def cycle_support(n: int) -> set[Tuple[int, int]]:
    allowed = {(0, 0), (n - 2, n)}
    allowed.update((i, i + 1) for i in range(1, n - 1))
    return allowed


def cycle_support_ok(beta: BettiDiagram, n: int) -> bool:
    return set(beta.support()) <= cycle_support(n)


@dataclass(frozen=True)
class WitnessNode:
    key: str
    fvector: FVector
    witness_holds: bool
    least_witness: Optional[int]


def witness_family(
    complexes: Sequence[SimplicialComplex],
    j: int,
    depth: int,
    p: int = DEFAULT_CHAR,
    workers: Optional[int] = 1,
) -> List[WitnessNode]:
    """
    Cone witness complexes along the (j-1, inf) tree and recheck diagonal j.

    Raises:
        InvalidParameter: for j < 1 or complexes with differing f-vectors.
    """
    if j < 1:
        raise InvalidParameter(f"witness degree must be positive, got {j}")
    if not complexes:
        raise InvalidParameter("need at least one witness complex")
    fvecs = {f_vector(c).entries for c in complexes}
    if len(fvecs) != 1:
        raise InvalidParameter(f"witness complexes must share one f-vector, got {sorted(fvecs)}")
    tree = cone_tree(f_vector(complexes[0]), j - 1, depth)
    out = []
    for key, fvec in tree.nodes.items():
        index = tree.index_of(key)
        diagrams = [betti_via_hochster(cone_seq(c, index), p, workers=workers) for c in complexes]
        holds = diagonal_is_witness(diagrams, j)
        least = check_diag_witness(diagrams) if holds else None
        out.append(WitnessNode(key, fvec, holds, least))
        logger.debug("witness node %r: holds=%s least=%s", key, holds, least)
    return out
