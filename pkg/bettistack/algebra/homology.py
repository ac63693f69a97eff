"""
Reduced simplicial homology over GF(p).

The augmented chain complex is always used: C_{-1} is spanned by the empty face
and the boundary of a vertex is the empty face. Faces within a degree are ordered
by mask value; a face's vertices are taken in ascending order for signs.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, FrozenSet, Mapping, Sequence, Tuple

import numpy as np
from numpy.typing import NDArray

from bettistack.algebra.field import DEFAULT_CHAR, FieldMatrix, PrimeField, rank_mod_p
from bettistack.core.complex import SimplicialComplex
from bettistack.core.errors import DimensionError, VoidComplexError

logger = logging.getLogger(__name__)

DEFAULT_CACHE_SIZE = 65536


@dataclass(frozen=True)
class ReducedHomologyProfile:
    """dim H̃_l for l = -1 .. dim; ``values[l + 1]`` holds H̃_l."""

    values: Tuple[int, ...]

    @property
    def dims(self) -> Dict[int, int]:
        return {l - 1: d for l, d in enumerate(self.values)}

    def __getitem__(self, l: int) -> int:
        idx = l + 1
        if 0 <= idx < len(self.values):
            return self.values[idx]
        return 0

    def is_acyclic(self) -> bool:
        return not any(self.values)

    def euler_characteristic(self) -> int:
        """Σ_l (-1)^l dim H̃_l, equal to the reduced Euler characteristic of the complex."""
        return sum((-1) ** (idx - 1) * d for idx, d in enumerate(self.values))

    def nonzero(self) -> Dict[int, int]:
        return {l: d for l, d in self.dims.items() if d}

    def to_json_dict(self) -> Dict[str, int]:
        return {str(l): d for l, d in self.dims.items()}


def _boundary_entries(domain: Sequence[int], codomain: Sequence[int], p: int) -> NDArray[np.int64]:
    """Matrix of the boundary from faces ``domain`` to faces ``codomain`` (columns -> rows)."""
    index = {face: r for r, face in enumerate(codomain)}
    mat = np.zeros((len(codomain), len(domain)), dtype=np.int64)
    minus_one = p - 1
    for c, face in enumerate(domain):
        positive = True
        rest = face
        while rest:
            low = rest & -rest
            mat[index[face ^ low], c] = 1 if positive else minus_one
            positive = not positive
            rest ^= low
    return mat


def _bucket(faces: FrozenSet[int]) -> Dict[int, Tuple[int, ...]]:
    buckets: Dict[int, list] = {}
    for face in faces:
        buckets.setdefault(face.bit_count(), []).append(face)
    return {k: tuple(sorted(v)) for k, v in buckets.items()}


def _homology_values(faces: FrozenSet[int], p: int) -> Tuple[int, ...]:
    buckets = _bucket(faces)
    top = max(buckets)
    # ranks[k] = rank of the boundary out of faces with cardinality k
    ranks = {0: 0, top + 1: 0}
    for k in range(1, top + 1):
        domain = buckets.get(k, ())
        codomain = buckets.get(k - 1, ())
        if not domain or not codomain:
            ranks[k] = 0
            continue
        ranks[k] = rank_mod_p(_boundary_entries(domain, codomain, p), p)
    return tuple(len(buckets.get(k, ())) - ranks[k] - ranks[k + 1] for k in range(0, top + 1))


_cached_homology_values = lru_cache(maxsize=DEFAULT_CACHE_SIZE)(_homology_values)


def configure_homology_cache(maxsize: int) -> None:
    """Replace the face-set keyed homology cache with one of the given size."""
    global _cached_homology_values
    _cached_homology_values = lru_cache(maxsize=maxsize)(_homology_values)


def homology_of_faces(faces: FrozenSet[int], p: int = DEFAULT_CHAR) -> Tuple[int, ...]:
    """
    Hot-path entry used by Hochster enumeration: H̃ dims of a face set.

    ``faces`` must be downward closed and contain the empty face; no validation
    happens here. Results are memoized on (faces, p).
    """
    return _cached_homology_values(faces, p)


def boundary_matrix(complex_: SimplicialComplex, l: int, field: PrimeField = PrimeField()) -> FieldMatrix:
    """
    Matrix of ∂_l : C_l -> C_{l-1} in the augmented chain complex.

    Columns are the l-faces, rows the (l-1)-faces, both sorted by mask value.
    Removing the t-th smallest vertex (t counted from 0) carries sign (-1)^t.

    Raises:
        VoidComplexError: for the void complex.
        DimensionError: unless -1 <= l <= dim.
    """
    if complex_.is_void:
        raise VoidComplexError("the void complex has no chain complex")
    if not -1 <= l <= complex_.dim:
        raise DimensionError(f"dimension {l} outside -1..{complex_.dim}")
    domain = complex_.faces_of_dimension(l)
    codomain = complex_.faces_of_dimension(l - 1)
    return FieldMatrix(_boundary_entries(domain, codomain, field.p), field)


def reduced_homology(complex_: SimplicialComplex, field: PrimeField = PrimeField()) -> ReducedHomologyProfile:
    """
    dim H̃_l(Δ; GF(p)) = dim ker ∂_l - rank ∂_{l+1} for l = -1 .. dim.

    Raises:
        VoidComplexError: for the void complex.
    """
    if complex_.is_void:
        raise VoidComplexError("reduced homology of the void complex is undefined here")
    values = homology_of_faces(complex_.faces, field.p)
    logger.debug("reduced homology over GF(%d): %s", field.p, values)
    return ReducedHomologyProfile(values)


def profile_from_mapping(dims: Mapping[int, int]) -> ReducedHomologyProfile:
    """Build a profile from an l -> dim mapping (missing degrees are zero)."""
    if not dims:
        return ReducedHomologyProfile(())
    top = max(dims)
    return ReducedHomologyProfile(tuple(int(dims.get(l, 0)) for l in range(-1, top + 1)))
