"""
Simplicial complexes, squarefree monomial ideals and f-vectors.

Vertex sets are bitmasks: vertex ``v`` (1-based) is bit ``1 << v``, so bit 0 is
never set. A complex stores *all* of its faces (not just facets) because the
homology and Hochster code iterate faces constantly.

The Stanley-Reisner correspondence:
- ``minimal_nonfaces(complex)`` gives the ideal generated by the minimal non-faces.
- ``complex_of_ideal(ideal)`` gives the complex of sets containing no generator.

Both directions reject linear generators (a missing singleton).
"""

from __future__ import annotations

import logging
import re
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from math import comb
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Tuple, Union

from bettistack.core.errors import (
    InputFormatError,
    InvalidIdeal,
    InvalidVertex,
    LinearGeneratorUnsupported,
    NotAnFVector,
    VoidComplexError,
)

logger = logging.getLogger(__name__)

MAX_VERTICES = 63

_MONOMIAL_RE = re.compile(r"^x(\d+)$")


def full_mask(n: int) -> int:
    """Bitmask of {1, ..., n}."""
    return ((1 << n) - 1) << 1


def mask_vertices(mask: int) -> Tuple[int, ...]:
    """Vertices of a mask in ascending order."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return tuple(out)


def mask_of(vertices: Iterable[int], n: int) -> int:
    """
    Encode vertex labels as a mask, checking each lies in 1..n.

    Raises:
        InvalidVertex: if a label is outside 1..n.
    """
    mask = 0
    for v in vertices:
        v = int(v)
        if v < 1 or v > n:
            raise InvalidVertex(f"vertex {v} is outside 1..{n}")
        mask |= 1 << v
    return mask


@dataclass(frozen=True, order=True)
class VertexSet:
    """A subset of {1, ..., n} encoded as a bitmask."""

    bits: int

    def __post_init__(self) -> None:
        if self.bits < 0 or self.bits & 1 or self.bits >> (MAX_VERTICES + 1):
            raise InvalidVertex(f"bitmask {self.bits:#x} sets a position outside 1..{MAX_VERTICES}")

    @classmethod
    def of(cls, vertices: Iterable[int], n: int = MAX_VERTICES) -> "VertexSet":
        return cls(mask_of(vertices, n))

    def cardinality(self) -> int:
        return self.bits.bit_count()

    def vertices(self) -> Tuple[int, ...]:
        return mask_vertices(self.bits)

    def within(self, n: int) -> bool:
        return self.bits & ~full_mask(n) == 0

    def issubset(self, other: "VertexSet") -> bool:
        return self.bits & ~other.bits == 0

    def __iter__(self) -> Iterator[int]:
        return iter(self.vertices())

    def __len__(self) -> int:
        return self.cardinality()

    def __contains__(self, v: object) -> bool:
        return isinstance(v, int) and v >= 1 and bool(self.bits >> v & 1)

    def __str__(self) -> str:
        return "{" + ",".join(str(v) for v in self.vertices()) + "}"


VertexLike = Union[VertexSet, Iterable[int]]


def _as_mask(value: VertexLike, n: int) -> int:
    if isinstance(value, VertexSet):
        if not value.within(n):
            raise InvalidVertex(f"{value} is not contained in 1..{n}")
        return value.bits
    return mask_of(value, n)


@dataclass(frozen=True)
class FVector:
    """
    Face counts (f_0, ..., f_{n-1}) of a complex on n vertices.

    Entry i counts faces of cardinality i + 1. Trailing zeros are significant:
    they record the ambient vertex count.
    """

    entries: Tuple[int, ...]
    n: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "entries", tuple(int(x) for x in self.entries))
        if len(self.entries) != self.n:
            raise NotAnFVector(f"f-vector {self.entries} has {len(self.entries)} entries, expected n={self.n}")
        for i, value in enumerate(self.entries):
            if value < 0:
                raise NotAnFVector(f"f_{i} = {value} is negative")
            if value > comb(self.n, i + 1):
                raise NotAnFVector(f"f_{i} = {value} exceeds C({self.n},{i + 1})")

    @classmethod
    def of(cls, entries: Sequence[int], n: Optional[int] = None) -> "FVector":
        """Build from entries, padding with zeros up to ``n`` when given."""
        values = [int(x) for x in entries]
        size = len(values) if n is None else n
        if size < len(values):
            if any(values[size:]):
                raise NotAnFVector(f"f-vector {tuple(values)} has nonzero entries beyond n={size}")
            values = values[:size]
        return cls(tuple(values) + (0,) * (size - len(values)), size)

    @classmethod
    def parse(cls, text: str, n: Optional[int] = None) -> "FVector":
        """Parse ``"6,8,4,0,0,0"`` (parentheses and spaces tolerated)."""
        cleaned = text.strip().strip("()[]")
        try:
            values = [int(part) for part in cleaned.split(",") if part.strip()]
        except ValueError as exc:
            raise NotAnFVector(f"cannot parse f-vector {text!r}") from exc
        return cls.of(values, n)

    def get(self, i: int) -> int:
        """f_i with f_{-1} = 1 and f_i = 0 beyond the stored range."""
        if i == -1:
            return 1
        if 0 <= i < self.n:
            return self.entries[i]
        return 0

    def last_nonzero(self) -> int:
        """Index of the last nonzero entry, or -1 for the zero vector."""
        for i in range(self.n - 1, -1, -1):
            if self.entries[i]:
                return i
        return -1

    def total_faces(self) -> int:
        """Number of faces including the empty face."""
        return sum(self.entries) + 1

    def __getitem__(self, i: int) -> int:
        return self.entries[i]

    def __iter__(self) -> Iterator[int]:
        return iter(self.entries)

    def __len__(self) -> int:
        return self.n

    def __str__(self) -> str:
        return "(" + ",".join(str(x) for x in self.entries) + ")"


@dataclass(frozen=True)
class SimplicialComplex:
    """
    A downward-closed family of vertex sets.

    Attributes:
        n: Label range; vertices are drawn from 1..n.
        faces: Every face as a bitmask, including the empty face 0 unless void.
        ground: Mask of the ambient vertex set. Defaults to {1..n}; restrictions
                keep original labels and shrink the ground instead.
    """

    n: int
    faces: frozenset
    ground: Optional[int] = None

    def __post_init__(self) -> None:
        if not 0 <= self.n <= MAX_VERTICES:
            raise InvalidVertex(f"vertex count {self.n} is outside 0..{MAX_VERTICES}")
        object.__setattr__(self, "faces", frozenset(self.faces))
        ground = full_mask(self.n) if self.ground is None else self.ground
        if ground & ~full_mask(self.n):
            raise InvalidVertex(f"ground set {mask_vertices(ground)} is not contained in 1..{self.n}")
        object.__setattr__(self, "ground", ground)

        faces = self.faces
        if not faces:
            return
        if 0 not in faces:
            raise InvalidIdeal("a nonvoid complex must contain the empty face")
        for face in faces:
            if face & ~ground:
                raise InvalidVertex(f"face {mask_vertices(face)} leaves the ground set {mask_vertices(ground)}")
            rest = face
            while rest:
                low = rest & -rest
                if face ^ low not in faces:
                    raise InvalidIdeal(f"face family is not downward closed at {mask_vertices(face)}")
                rest ^= low

    @property
    def is_void(self) -> bool:
        return not self.faces

    @property
    def vertex_count(self) -> int:
        return self.ground.bit_count()  # type: ignore[union-attr]

    @property
    def dim(self) -> int:
        """Largest face cardinality minus one; -1 for {∅}."""
        if self.is_void:
            raise VoidComplexError("the void complex has no dimension")
        return max(face.bit_count() for face in self.faces) - 1

    @cached_property
    def faces_by_cardinality(self) -> Dict[int, Tuple[int, ...]]:
        """Faces bucketed by cardinality, each bucket sorted by mask value."""
        buckets: Dict[int, List[int]] = {}
        for face in self.faces:
            buckets.setdefault(face.bit_count(), []).append(face)
        return {k: tuple(sorted(v)) for k, v in sorted(buckets.items())}

    def faces_of_dimension(self, l: int) -> Tuple[int, ...]:
        return self.faces_by_cardinality.get(l + 1, ())

    def has_all_vertices(self) -> bool:
        return all(1 << v in self.faces for v in mask_vertices(self.ground))  # type: ignore[arg-type]

    def facets(self) -> List[VertexSet]:
        """Inclusion-maximal faces, sorted by cardinality then mask."""
        out = []
        for face in self.faces:
            free = self.ground & ~face  # type: ignore[operator]
            maximal = True
            while free:
                low = free & -free
                if face | low in self.faces:
                    maximal = False
                    break
                free ^= low
            if maximal:
                out.append(face)
        out.sort(key=lambda m: (m.bit_count(), m))
        return [VertexSet(m) for m in out]

    def __contains__(self, face: object) -> bool:
        if isinstance(face, VertexSet):
            return face.bits in self.faces
        if isinstance(face, int):
            return face in self.faces
        return mask_of(face, self.n) in self.faces  # type: ignore[arg-type]

    def __len__(self) -> int:
        return len(self.faces)


def from_facets(n: int, facets: Iterable[VertexLike]) -> SimplicialComplex:
    """
    Downward closure of a facet list, with every singleton {1}..{n} added.

    Raises:
        InvalidVertex: if a facet references a vertex outside 1..n.
    """
    if not 0 <= n <= MAX_VERTICES:
        raise InvalidVertex(f"vertex count {n} is outside 0..{MAX_VERTICES}")
    faces = {0}
    faces.update(1 << v for v in range(1, n + 1))
    for facet in facets:
        top = _as_mask(facet, n)
        if top in faces:
            continue
        # every submask of the facet
        sub = top
        while True:
            faces.add(sub)
            if sub == 0:
                break
            sub = (sub - 1) & top
    return SimplicialComplex(n, frozenset(faces))


def full_simplex(n: int) -> SimplicialComplex:
    """The simplex on {1..n}: every subset is a face."""
    return from_facets(n, [range(1, n + 1)] if n else [])


def f_vector(complex_: SimplicialComplex) -> FVector:
    """Face counts over the complex's ground set."""
    size = complex_.vertex_count
    counts = [0] * size
    for face in complex_.faces:
        k = face.bit_count()
        if k:
            counts[k - 1] += 1
    return FVector(tuple(counts), size)


def restrict(complex_: SimplicialComplex, subset: VertexLike) -> SimplicialComplex:
    """
    The induced subcomplex on ``subset``, keeping the original vertex labels.

    The result's ground set is ``subset``; its label range stays ``n``.
    """
    w = _as_mask(subset, complex_.n)
    faces = frozenset(face for face in complex_.faces if face & ~w == 0)
    return SimplicialComplex(complex_.n, faces, ground=w & complex_.ground)


def reduced_euler_characteristic(complex_: SimplicialComplex) -> int:
    """Alternating face count -1 + f_0 - f_1 + ... (the empty face counts as -1)."""
    if complex_.is_void:
        raise VoidComplexError("the void complex has no Euler characteristic")
    return sum((-1) ** (face.bit_count() - 1) for face in complex_.faces)


@dataclass(frozen=True)
class SquarefreeIdeal:
    """
    A squarefree monomial ideal without linear terms, given by its minimal generators.

    Each generator is a bitmask of the variables it uses.
    """

    n: int
    gens: frozenset

    def __post_init__(self) -> None:
        if not 0 <= self.n <= MAX_VERTICES:
            raise InvalidVertex(f"variable count {self.n} is outside 0..{MAX_VERTICES}")
        object.__setattr__(self, "gens", frozenset(self.gens))
        ambient = full_mask(self.n)
        for g in self.gens:
            if g & ~ambient:
                raise InvalidVertex(f"generator {mask_vertices(g)} uses a variable outside 1..{self.n}")
            if g == 0:
                raise InvalidIdeal("the unit ideal is not supported")
            if g.bit_count() == 1:
                raise LinearGeneratorUnsupported(f"linear generator x{mask_vertices(g)[0]} is not supported")
        for a in self.gens:
            for b in self.gens:
                if a != b and a & ~b == 0:
                    raise InvalidIdeal(f"generator {mask_vertices(a)} divides {mask_vertices(b)}")

    @classmethod
    def generated_by(cls, n: int, monomials: Iterable[VertexLike]) -> "SquarefreeIdeal":
        """Ideal generated by any family of squarefree monomials, reduced to minimal generators."""
        masks = sorted({_as_mask(m, n) for m in monomials}, key=lambda m: (m.bit_count(), m))
        minimal: List[int] = []
        for m in masks:
            if not any(g & ~m == 0 for g in minimal):
                minimal.append(m)
        return cls(n, frozenset(minimal))

    @staticmethod
    def parse_monomial(text: str) -> Tuple[int, ...]:
        """
        Parse ``"x1*x3*x5"`` into ``(1, 3, 5)``.

        Exponents are not allowed; repeated variables are rejected.
        """
        parts = [p.strip() for p in text.strip().split("*")]
        out = []
        for part in parts:
            match = _MONOMIAL_RE.match(part)
            if not match:
                raise InputFormatError(f"cannot parse monomial factor {part!r} in {text!r}")
            out.append(int(match.group(1)))
        if len(set(out)) != len(out):
            raise InputFormatError(f"monomial {text!r} is not squarefree")
        return tuple(out)

    def generators(self) -> List[VertexSet]:
        """Minimal generators ordered by degree, then lex-largest first."""
        return [VertexSet(m) for m in sorted(self.gens, key=lambda m: (m.bit_count(), mask_vertices(m)))]

    def degrees(self) -> Tuple[int, ...]:
        return tuple(sorted({g.bit_count() for g in self.gens}))

    def is_zero(self) -> bool:
        return not self.gens

    def __str__(self) -> str:
        if not self.gens:
            return "(0)"
        return "(" + ", ".join("*".join(f"x{v}" for v in g.vertices()) for g in self.generators()) + ")"


def minimal_nonfaces(complex_: SimplicialComplex) -> SquarefreeIdeal:
    """
    The Stanley-Reisner ideal: generators are the inclusion-minimal non-faces.

    Raises:
        VoidComplexError: for the void complex.
        LinearGeneratorUnsupported: if some singleton {v}, 1 <= v <= n, is not a face.
    """
    if complex_.is_void:
        raise VoidComplexError("the void complex has no Stanley-Reisner ideal")
    faces = complex_.faces
    for v in range(1, complex_.n + 1):
        if 1 << v not in faces:
            raise LinearGeneratorUnsupported(f"vertex {v} is not a face; x{v} would be a linear generator")

    ambient = full_mask(complex_.n)
    gens = set()
    for face in faces:
        free = ambient & ~face
        while free:
            low = free & -free
            free ^= low
            candidate = face | low
            if candidate in faces or candidate in gens:
                continue
            rest = candidate
            minimal = True
            while rest:
                b = rest & -rest
                if candidate ^ b not in faces:
                    minimal = False
                    break
                rest ^= b
            if minimal:
                gens.add(candidate)
    return SquarefreeIdeal(complex_.n, frozenset(gens))


def complex_of_ideal(ideal: SquarefreeIdeal) -> SimplicialComplex:
    """All subsets of {1..n} containing no generator, built level by level."""
    gens = tuple(ideal.gens)
    level = [0]
    faces = {0}
    while level:
        nxt = []
        for face in level:
            top = face.bit_length() - 1 if face else 0
            for v in range(top + 1, ideal.n + 1):
                candidate = face | (1 << v)
                if any(g & ~candidate == 0 for g in gens):
                    continue
                nxt.append(candidate)
        faces.update(nxt)
        level = nxt
    return SimplicialComplex(ideal.n, frozenset(faces))


def all_subsets_of_size(ground: int, size: int) -> Iterator[int]:
    """Submasks of ``ground`` with exactly ``size`` bits, in lex order of their vertex tuples."""
    for combo in combinations(mask_vertices(ground), size):
        mask = 0
        for v in combo:
            mask |= 1 << v
        yield mask
