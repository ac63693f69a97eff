"""
Hilbert functions of Stanley-Reisner rings and squarefree lex constructions.

Lex order on squarefree monomials of one degree is the order of their sorted
index tuples: x1x2 > x1x3 > ... > x_{n-1}x_n, which is exactly the order
``itertools.combinations`` produces. Faces of the lex complex therefore take the
*last* f_{d-1} tuples of each degree, and the ideal takes the first ones.

The closure check on those face sets is the Kruskal-Katona test: the lex-smallest
segment is the compressed complex up to relabeling, so it is downward closed
exactly when some complex attains the f-vector.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from math import comb
from typing import FrozenSet, Iterator, List, Optional, Sequence, Tuple, Union

from bettistack.core.complex import (
    FVector,
    SimplicialComplex,
    SquarefreeIdeal,
    complex_of_ideal,
    f_vector,
    minimal_nonfaces,
)
from bettistack.core.errors import NotAnFVector

logger = logging.getLogger(__name__)


@lru_cache(maxsize=512)
def lex_masks(n: int, d: int) -> Tuple[int, ...]:
    """Degree-d squarefree monomials in n variables, lex-largest first."""
    out = []
    for combo in combinations(range(1, n + 1), d):
        mask = 0
        for v in combo:
            mask |= 1 << v
        out.append(mask)
    return tuple(out)


@dataclass(frozen=True)
class HilbertFunction:
    """H(R/I, m) for the Stanley-Reisner ring of a complex with the given f-vector."""

    fvector: FVector

    @property
    def n(self) -> int:
        return self.fvector.n

    def value(self, m: int) -> int:
        if m < 0:
            return 0
        if m == 0:
            return 1
        return sum(f * comb(m - 1, i) for i, f in enumerate(self.fvector))

    def __call__(self, m: int) -> int:
        return self.value(m)

    def values(self, upto: Optional[int] = None) -> Tuple[int, ...]:
        """H(0), ..., H(upto); ``upto`` defaults to n."""
        top = self.n if upto is None else upto
        return tuple(self.value(m) for m in range(top + 1))


def hilbert_from_fvector(f: FVector) -> HilbertFunction:
    return HilbertFunction(f)


def fvector_from_hilbert(values: Union[HilbertFunction, Sequence[int]], n: int) -> FVector:
    """
    Invert H(m) = Σ_i f_i C(m-1, i).

    Args:
        values: H(0), H(1), ... with at least degrees 0..n. Extra degrees are
                checked for consistency with the recovered f-vector.
        n: Number of variables.

    Raises:
        NotAnFVector: too few degrees, H(0) != 1, or a solution that is negative
                      or exceeds the binomial bound.
    """
    if isinstance(values, HilbertFunction):
        return values.fvector
    h = [int(x) for x in values]
    if len(h) < n + 1:
        raise NotAnFVector(f"need H(0..{n}), got {len(h)} values")
    if h[0] != 1:
        raise NotAnFVector(f"H(0) must be 1, got {h[0]}")
    f: List[int] = []
    for m in range(1, n + 1):
        f.append(h[m] - sum(f[i] * comb(m - 1, i) for i in range(m - 1)))
    fvec = FVector(tuple(f), n)
    hilbert = HilbertFunction(fvec)
    for m in range(n + 1, len(h)):
        if hilbert.value(m) != h[m]:
            raise NotAnFVector(f"H({m}) = {h[m]} is inconsistent with f-vector {fvec}")
    return fvec


def _segment_closed(segment: Sequence[int], below: FrozenSet[int]) -> bool:
    for face in segment:
        rest = face
        while rest:
            low = rest & -rest
            if face ^ low not in below:
                return False
            rest ^= low
    return True


def _lex_segment(n: int, d: int, count: int) -> Tuple[int, ...]:
    if count == 0:
        return ()
    return lex_masks(n, d)[-count:]


def squarefree_lex_complex(f: FVector) -> SimplicialComplex:
    """
    The complex whose degree-d faces are the f_{d-1} lex-smallest monomials.

    Raises:
        NotAnFVector: if f_0 != n (a missing vertex is a linear generator) or the
                      chosen face sets are not downward closed.
    """
    n = f.n
    if f.get(0) != n:
        raise NotAnFVector(f"f_0 = {f.get(0)} but all {n} vertices must be faces")
    faces = {0}
    below: FrozenSet[int] = frozenset({0})
    for d in range(1, n + 1):
        segment = _lex_segment(n, d, f[d - 1])
        if not _segment_closed(segment, below):
            raise NotAnFVector(f"{f} violates Kruskal-Katona at face cardinality {d}")
        below = frozenset(segment)
        faces.update(segment)
    return SimplicialComplex(n, frozenset(faces))


def squarefree_lex_ideal(f: FVector) -> SquarefreeIdeal:
    return minimal_nonfaces(squarefree_lex_complex(f))


def is_kk_valid(f: FVector) -> bool:
    """True iff some complex on all n vertices attains f."""
    try:
        squarefree_lex_complex(f)
    except NotAnFVector:
        return False
    return True


def lex_generated_in_single_degree(f: FVector) -> Optional[int]:
    """The common degree of the lex ideal's generators, or None (mixed degrees or the zero ideal)."""
    degrees = squarefree_lex_ideal(f).degrees()
    if len(degrees) == 1:
        return degrees[0]
    return None


@dataclass(frozen=True)
class LexPrefix:
    """The ideal generated by the first ``generators`` lex-largest monomials of ``degree``."""

    degree: int
    generators: int
    fvector: FVector

    def ideal(self) -> SquarefreeIdeal:
        return SquarefreeIdeal(self.fvector.n, frozenset(lex_masks(self.fvector.n, self.degree)[: self.generators]))


def single_degree_lex_prefixes(n: int) -> Iterator[LexPrefix]:
    """
    Every nonzero lex segment generated in one degree d >= 2.

    There are C(n, d) prefixes per degree, so 2^n - n - 1 in total.
    """
    for d in range(2, n + 1):
        masks = lex_masks(n, d)
        for g in range(1, len(masks) + 1):
            complex_ = complex_of_ideal(SquarefreeIdeal(n, frozenset(masks[:g])))
            yield LexPrefix(d, g, f_vector(complex_))


def realizable_fvectors(n: int) -> Iterator[FVector]:
    """
    Every f-vector with f_0 = n attained by some complex, in lex order of the entries.

    Lex segments are nested, so once a count fails the closure test every larger
    count fails as well.
    """

    def extend(prefix: List[int], below: FrozenSet[int], d: int) -> Iterator[FVector]:
        if d > n:
            yield FVector(tuple(prefix), n)
            return
        if prefix[-1] == 0:
            yield FVector(tuple(prefix) + (0,) * (n - len(prefix)), n)
            return
        for count in range(comb(n, d) + 1):
            segment = _lex_segment(n, d, count)
            if not _segment_closed(segment, below):
                break
            yield from extend(prefix + [count], frozenset(segment), d + 1)

    if n == 0:
        yield FVector((), 0)
        return
    yield from extend([n], frozenset(lex_masks(n, 1)), 2)
