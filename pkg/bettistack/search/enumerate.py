"""
Exhaustive enumeration of simplicial complexes with a prescribed f-vector.

Faces are chosen one cardinality at a time. A d-set is a candidate only when
all of its (d-1)-subsets were chosen at the previous level, so every emitted
family is downward closed by construction.

Isomorphism classes are reduced by a canonical form: vertices are sorted by a
label-independent signature, and the minimum face encoding is taken over the
permutations that preserve the signature blocks.
"""

from __future__ import annotations

import logging
from itertools import combinations, permutations, product
from typing import Dict, FrozenSet, Iterator, List, Optional, Set, Tuple

from bettistack.core.complex import FVector, SimplicialComplex, full_mask, mask_vertices
from bettistack.core.errors import AmbientMismatch, SearchCapExceeded

logger = logging.getLogger(__name__)

DEFAULT_MAX_VERTICES = 7
DEFAULT_MAX_VERTICES_ISO = 8


def _candidates(n: int, d: int, below: FrozenSet[int]) -> List[int]:
    out = []
    for combo in combinations(range(1, n + 1), d):
        mask = 0
        for v in combo:
            mask |= 1 << v
        rest = mask
        closed = True
        while rest:
            low = rest & -rest
            if mask ^ low not in below:
                closed = False
                break
            rest ^= low
        if closed:
            out.append(mask)
    return out


def _vertex_signature(faces: FrozenSet[int], v: int, n: int) -> Tuple[int, ...]:
    bit = 1 << v
    counts = [0] * (n + 1)
    for face in faces:
        if face & bit:
            counts[face.bit_count()] += 1
    return tuple(counts)


def _relabel(faces: FrozenSet[int], mapping: Dict[int, int]) -> Tuple[int, ...]:
    out = []
    for face in faces:
        new = 0
        for v in mask_vertices(face):
            new |= 1 << mapping[v]
        out.append(new)
    return tuple(sorted(out))


def canonical_form(complex_: SimplicialComplex) -> Tuple[int, ...]:
    """A face encoding shared by exactly the complexes isomorphic to ``complex_``."""
    n = complex_.n
    vertices = mask_vertices(complex_.ground)  # type: ignore[arg-type]
    signatures = {v: _vertex_signature(complex_.faces, v, n) for v in vertices}
    blocks: Dict[Tuple[int, ...], List[int]] = {}
    for v in vertices:
        blocks.setdefault(signatures[v], []).append(v)
    ordered = [blocks[key] for key in sorted(blocks)]

    best: Optional[Tuple[int, ...]] = None
    for choice in product(*(permutations(block) for block in ordered)):
        mapping: Dict[int, int] = {}
        label = 1
        for block in choice:
            for v in block:
                mapping[v] = label
                label += 1
        encoded = _relabel(complex_.faces, mapping)
        if best is None or encoded < best:
            best = encoded
    return best if best is not None else ()


def check_caps(
    n: int,
    mod_iso: bool,
    max_vertices: int = DEFAULT_MAX_VERTICES,
    max_vertices_iso: int = DEFAULT_MAX_VERTICES_ISO,
) -> None:
    cap = max_vertices_iso if mod_iso else max_vertices
    if n > cap:
        raise SearchCapExceeded(f"enumeration on {n} vertices exceeds the cap of {cap} (mod_iso={mod_iso})")


def enumerate_complexes(
    n: int,
    f: FVector,
    mod_iso: bool = False,
    max_vertices: int = DEFAULT_MAX_VERTICES,
    max_vertices_iso: int = DEFAULT_MAX_VERTICES_ISO,
) -> Iterator[SimplicialComplex]:
    """
    Stream every complex on 1..n with f-vector f, or one per isomorphism class.

    Unrealizable f-vectors (including f_0 != n) give an empty stream.

    Raises:
        AmbientMismatch: if f does not have n entries.
        SearchCapExceeded: if n exceeds the applicable cap.
    """
    if f.n != n:
        raise AmbientMismatch(f"f-vector {f} has {f.n} entries, expected {n}")
    check_caps(n, mod_iso, max_vertices, max_vertices_iso)
    if f.get(0) != n:
        return
    seen: Set[Tuple[int, ...]] = set()
    vertices = frozenset(1 << v for v in range(1, n + 1))
    base = {0} | set(vertices)

    def extend(chosen: Set[int], below: FrozenSet[int], d: int) -> Iterator[SimplicialComplex]:
        target = f.get(d - 1)
        if d > n or target == 0:
            if any(f.get(k - 1) for k in range(d, n + 1)):
                return
            yield SimplicialComplex(n, frozenset(chosen), ground=full_mask(n))
            return
        pool = _candidates(n, d, below)
        if len(pool) < target:
            return
        for picked in combinations(pool, target):
            yield from extend(chosen | set(picked), frozenset(picked), d + 1)

    emitted = 0
    for complex_ in extend(base, vertices, 2):
        if mod_iso:
            key = canonical_form(complex_)
            if key in seen:
                continue
            seen.add(key)
        emitted += 1
        yield complex_
    logger.info("enumerated %d complexes with f-vector %s (mod_iso=%s)", emitted, f, mod_iso)
