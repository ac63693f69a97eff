"""
Graded Betti numbers of Stanley-Reisner rings via Hochster's formula.

β_{i,j} = Σ_{|W| = j} dim H̃_{j-i-1}(Δ_W; GF(p)), summed over vertex subsets W.
Every subset is visited once; W = ∅ contributes β_{0,0} = 1 through H̃_{-1}({∅}).
"""

from __future__ import annotations

import logging
from math import comb
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from bettistack.algebra.diagram import BettiDiagram, Entry, diagonal_sums
from bettistack.algebra.field import DEFAULT_CHAR, PrimeField
from bettistack.algebra.hilbert_lex import hilbert_from_fvector
from bettistack.algebra.homology import homology_of_faces
from bettistack.core.complex import FVector, SimplicialComplex, all_subsets_of_size
from bettistack.core.errors import ComplexTooLarge, LinearGeneratorUnsupported, VoidComplexError
from bettistack.runtime.parallel import DEFAULT_THRESHOLD, parallel_map

logger = logging.getLogger(__name__)

DEFAULT_MAX_VERTICES = 20
_CHUNK = 256

_Job = Tuple[Tuple[int, ...], Tuple[int, ...], int]


def _accumulate(faces: Sequence[int], subsets: Sequence[int], p: int) -> Dict[Entry, int]:
    betti: Dict[Entry, int] = {}
    for w in subsets:
        j = w.bit_count()
        restricted = frozenset(face for face in faces if face & ~w == 0)
        for idx, dim in enumerate(homology_of_faces(restricted, p)):
            if dim:
                # idx = l + 1, so i = j - l - 1 = j - idx
                key = (j - idx, j)
                betti[key] = betti.get(key, 0) + dim
    return betti


def _run_job(job: _Job) -> Dict[Entry, int]:
    faces, subsets, p = job
    return _accumulate(faces, subsets, p)


def betti_via_hochster(
    complex_: SimplicialComplex,
    p: int = DEFAULT_CHAR,
    degree_cap: Optional[int] = None,
    workers: Optional[int] = 1,
    max_vertices: int = DEFAULT_MAX_VERTICES,
    parallel_threshold: int = DEFAULT_THRESHOLD,
) -> BettiDiagram:
    """
    Compute β_{i,j} of the Stanley-Reisner ring of ``complex_`` over GF(p).

    Args:
        complex_: A complex containing every singleton of its ground set.
        p: Field characteristic.
        degree_cap: Only degrees j <= degree_cap are computed.
        workers: Process count for the subset sweep; None uses every core.
        max_vertices: Without a degree cap, larger complexes are refused.
        parallel_threshold: Minimum number of subset chunks before a pool is used.

    Raises:
        VoidComplexError: for the void complex.
        LinearGeneratorUnsupported: if a ground vertex is not a face.
        ComplexTooLarge: if the vertex count exceeds ``max_vertices`` and no cap is set.
    """
    PrimeField(p)
    if complex_.is_void:
        raise VoidComplexError("the void complex has no Stanley-Reisner ring")
    if not complex_.has_all_vertices():
        raise LinearGeneratorUnsupported("every vertex must be a face to apply Hochster's formula")
    size = complex_.vertex_count
    if degree_cap is None and size > max_vertices:
        raise ComplexTooLarge(f"{size} vertices exceeds the Hochster cap of {max_vertices}; pass a degree cap")
    top = size if degree_cap is None else min(size, max(degree_cap, 0))

    faces = tuple(sorted(complex_.faces))
    jobs: List[_Job] = []
    for j in range(top + 1):
        batch: List[int] = []
        for w in all_subsets_of_size(complex_.ground, j):  # type: ignore[arg-type]
            batch.append(w)
            if len(batch) == _CHUNK:
                jobs.append((faces, tuple(batch), p))
                batch = []
        if batch:
            jobs.append((faces, tuple(batch), p))
    logger.info("Hochster sweep: %d vertices, degrees 0..%d, %d jobs over GF(%d)", size, top, len(jobs), p)

    betti: Dict[Entry, int] = {}
    for partial in parallel_map(_run_job, jobs, workers=workers, threshold=parallel_threshold):
        for key, value in partial.items():
            betti[key] = betti.get(key, 0) + value
    return BettiDiagram.from_mapping(complex_.n, p, betti)


def hilbert_series_check(beta: BettiDiagram, f: FVector) -> bool:
    """
    Check Σ_j d_j t^j == (1 - t)^n Σ_m H(m) t^m through degree n.

    The numerator has degree at most n, so agreement through degree n is equality.
    """
    if beta.n != f.n:
        logger.debug("Hilbert check skipped: diagram on %d variables, f-vector on %d", beta.n, f.n)
        return False
    n = f.n
    hilbert = np.array(hilbert_from_fvector(f).values(n), dtype=object)
    denominator = np.array([(-1) ** k * comb(n, k) for k in range(n + 1)], dtype=object)
    product = np.convolve(hilbert, denominator)[: n + 1]
    expected = diagonal_sums(beta).d
    return all(int(product[k]) == expected[k] for k in range(n + 1))
