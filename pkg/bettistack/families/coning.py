"""
j-cones of simplicial complexes and their effect on f-vectors and diagrams.

C_(j)Δ adds the vertex n+1 and joins it to every face of Δ with at most j
vertices. C_(0) adds an isolated point; any j >= n is the full cone, written inf.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from math import comb
from typing import Dict, Iterable, Optional, Sequence, Union

from bettistack.algebra.diagram import BettiDiagram, Entry
from bettistack.core.complex import MAX_VERTICES, FVector, SimplicialComplex
from bettistack.core.errors import InputFormatError, InvalidParameter, InvalidVertex

logger = logging.getLogger(__name__)

_INF_LABELS = ("inf", "infinity", "∞")


@dataclass(frozen=True)
class ConeIndex:
    """A coning index; ``value=None`` is inf."""

    value: Optional[int] = None

    def __post_init__(self) -> None:
        if self.value is not None and self.value < 0:
            raise InvalidParameter(f"cone index must be nonnegative, got {self.value}")

    @classmethod
    def inf(cls) -> "ConeIndex":
        return cls(None)

    @classmethod
    def parse(cls, text: str) -> "ConeIndex":
        token = text.strip().lower()
        if token in _INF_LABELS:
            return cls(None)
        try:
            return cls(int(token))
        except ValueError as exc:
            raise InputFormatError(f"cannot parse cone index {text!r}") from exc

    @property
    def is_inf(self) -> bool:
        return self.value is None

    def resolve(self, n: int) -> int:
        """The effective index on an n-vertex complex."""
        if self.value is None:
            return n
        return min(self.value, n)

    @property
    def label(self) -> str:
        return "inf" if self.value is None else str(self.value)

    def __str__(self) -> str:
        return self.label


ConeLike = Union[ConeIndex, int, str, None]


def as_cone_index(value: ConeLike) -> ConeIndex:
    if isinstance(value, ConeIndex):
        return value
    if value is None:
        return ConeIndex.inf()
    if isinstance(value, str):
        return ConeIndex.parse(value)
    return ConeIndex(int(value))


def parse_cone_sequence(text: str) -> list[ConeIndex]:
    """``"0,inf,5"`` -> indices; an empty string is the empty sequence."""
    return [ConeIndex.parse(part) for part in text.split(",") if part.strip()]


def cone_j(complex_: SimplicialComplex, j: ConeLike) -> SimplicialComplex:
    """
    Cone over the faces of size <= j with apex n+1.

    Raises:
        InvalidVertex: if the apex would exceed the bitmask width.
    """
    index = as_cone_index(j)
    n = complex_.n
    if n + 1 > MAX_VERTICES:
        raise InvalidVertex(f"coning would need vertex {n + 1} > {MAX_VERTICES}")
    limit = index.resolve(n)
    apex = 1 << (n + 1)
    faces = set(complex_.faces)
    faces.update(face | apex for face in complex_.faces if face.bit_count() <= limit)
    return SimplicialComplex(n + 1, frozenset(faces), ground=complex_.ground | apex)  # type: ignore[operator]


def cone_inf(complex_: SimplicialComplex) -> SimplicialComplex:
    return cone_j(complex_, ConeIndex.inf())


def cone_seq(complex_: SimplicialComplex, ms: Iterable[ConeLike]) -> SimplicialComplex:
    """Apply cone_j for each index, left to right."""
    out = complex_
    for m in ms:
        out = cone_j(out, m)
    return out


def fvector_cone_j(f: FVector, j: ConeLike) -> FVector:
    """
    g_k = f_k + f_{k-1} for k <= j and g_k = f_k otherwise, with f_{-1} = 1.

    The result has n+1 entries.
    """
    limit = as_cone_index(j).resolve(f.n)
    entries = [f.get(k) + (f.get(k - 1) if k <= limit else 0) for k in range(f.n + 1)]
    return FVector(tuple(entries), f.n + 1)


def fvector_cone_seq(f: FVector, ms: Sequence[ConeLike]) -> FVector:
    out = f
    for m in ms:
        out = fvector_cone_j(out, m)
    return out


def zero_cone_betti(beta: BettiDiagram) -> BettiDiagram:
    """
    Predict the diagram of C_(0)Δ from the diagram of Δ.

    With n the vertex count of Δ:
      β'_{0,j} = β_{0,j};
      β'_{i,i+1} = β_{i-1,i} + β_{i,i+1} + C(n, i) for i >= 1;
      β'_{i,j} = β_{i-1,j-1} + β_{i,j} otherwise.
    The shifted β_{0,0} never contributes: the apex alone has no H̃_{-1}.
    """
    n = beta.n
    old = beta.betti
    out: Dict[Entry, int] = {}
    for i in range(n + 2):
        for j in range(i, n + 2):
            if i == 0:
                value = old.get((0, j), 0)
            else:
                shifted = 0 if (i - 1, j - 1) == (0, 0) else old.get((i - 1, j - 1), 0)
                value = shifted + old.get((i, j), 0)
                if j == i + 1:
                    value += comb(n, i)
            if value:
                out[(i, j)] = value
    return BettiDiagram.from_mapping(n + 1, beta.p, out)
