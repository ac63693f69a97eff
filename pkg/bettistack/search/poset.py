"""
The poset of Betti diagrams attained by complexes with one f-vector.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from itertools import islice
from typing import Dict, FrozenSet, Iterator, List, Optional, Tuple

from bettistack.algebra.diagram import BettiDiagram, DiagramOrder, compare, diagonal_sums
from bettistack.algebra.field import DEFAULT_CHAR
from bettistack.algebra.hochster import betti_via_hochster, hilbert_series_check
from bettistack.core.complex import FVector, SimplicialComplex
from bettistack.core.errors import AmbientMismatch, InvariantViolation, NotSameHilbertFunction
from bettistack.runtime.parallel import DEFAULT_THRESHOLD, parallel_map
from bettistack.search.enumerate import DEFAULT_MAX_VERTICES, DEFAULT_MAX_VERTICES_ISO, enumerate_complexes

logger = logging.getLogger(__name__)

BATCH_SIZE = 512


@dataclass
class BettiPoset:
    """
    Distinct diagrams for one f-vector under the componentwise order.

    ``diagrams`` stays sorted by canonical key, so indices used by
    ``hasse_edges`` are stable for a given diagram set.
    """

    f: FVector
    p: int = DEFAULT_CHAR
    diagrams: List[BettiDiagram] = field(default_factory=list)
    witnesses: Dict[str, Optional[SimplicialComplex]] = field(default_factory=dict)
    relation: Dict[Tuple[str, str], DiagramOrder] = field(default_factory=dict)
    truncated: bool = False
    complexes_seen: int = 0

    def __contains__(self, diagram: object) -> bool:
        return isinstance(diagram, BettiDiagram) and diagram.canonical_key() in self.witnesses

    def __len__(self) -> int:
        return len(self.diagrams)

    def add(self, diagram: BettiDiagram, witness: Optional[SimplicialComplex] = None) -> bool:
        """
        Insert a diagram; returns False when it was already present.

        Raises:
            AmbientMismatch: if the diagram lives on another number of variables.
            NotSameHilbertFunction: if it does not match the poset's Hilbert function.
        """
        if diagram.n != self.f.n:
            raise AmbientMismatch(f"diagram on {diagram.n} variables, poset on {self.f.n}")
        if not hilbert_series_check(diagram, self.f):
            raise NotSameHilbertFunction(f"diagram {diagram.canonical_key()} does not match f-vector {self.f}")
        key = diagram.canonical_key()
        if key in self.witnesses:
            return False
        for other in self.diagrams:
            order = compare(diagram, other)
            okey = other.canonical_key()
            self.relation[(key, okey)] = order
            self.relation[(okey, key)] = order.flipped()
        self.witnesses[key] = witness
        self.diagrams.append(diagram)
        self.diagrams.sort(key=BettiDiagram.canonical_key)
        return True

    def order(self, a: BettiDiagram, b: BettiDiagram) -> DiagramOrder:
        ka, kb = a.canonical_key(), b.canonical_key()
        if ka == kb:
            return DiagramOrder.EQUAL
        return self.relation.get((ka, kb)) or compare(a, b)

    def witness(self, diagram: BettiDiagram) -> Optional[SimplicialComplex]:
        return self.witnesses.get(diagram.canonical_key())

    def minimal_elements(self) -> List[BettiDiagram]:
        return [d for d in self.diagrams if not any(self.order(e, d) is DiagramOrder.LESS for e in self.diagrams)]

    def maximal_elements(self) -> List[BettiDiagram]:
        return [d for d in self.diagrams if not any(self.order(e, d) is DiagramOrder.GREATER for e in self.diagrams)]

    def has_unique_min(self) -> bool:
        return len(self.minimal_elements()) == 1

    def is_total_order(self) -> bool:
        return all(order is not DiagramOrder.INCOMPARABLE for order in self.relation.values())

    def incomparable_pairs(self) -> List[Tuple[int, int]]:
        out = []
        for a in range(len(self.diagrams)):
            for b in range(a + 1, len(self.diagrams)):
                if self.order(self.diagrams[a], self.diagrams[b]) is DiagramOrder.INCOMPARABLE:
                    out.append((a, b))
        return out

    def hasse_edges(self) -> List[Tuple[int, int]]:
        """Covering pairs (a, b) with diagrams[a] < diagrams[b] and nothing strictly between."""
        size = len(self.diagrams)
        less = [[self.order(self.diagrams[a], self.diagrams[b]) is DiagramOrder.LESS for b in range(size)] for a in range(size)]
        edges = []
        for a in range(size):
            for b in range(size):
                if less[a][b] and not any(less[a][c] and less[c][b] for c in range(size)):
                    edges.append((a, b))
        return edges

    def check_consistency(self) -> None:
        """Raise InvariantViolation if diagonal sums differ or the relation is not antisymmetric."""
        tuples = {diagonal_sums(d).d for d in self.diagrams}
        if len(tuples) > 1:
            raise InvariantViolation(f"poset mixes diagonal sums {sorted(tuples)}")
        for (ka, kb), order in self.relation.items():
            if self.relation.get((kb, ka)) is not order.flipped():
                raise InvariantViolation(f"relation is not antisymmetric at {ka} / {kb}")


def _diagram_job(job: Tuple[int, FrozenSet[int], int, int]) -> BettiDiagram:
    n, faces, ground, p = job
    return betti_via_hochster(SimplicialComplex(n, faces, ground=ground), p)


def _batches(stream: Iterator[SimplicialComplex], size: int) -> Iterator[List[SimplicialComplex]]:
    while True:
        batch = list(islice(stream, size))
        if not batch:
            return
        yield batch


def build_poset(
    n: int,
    f: FVector,
    p: int = DEFAULT_CHAR,
    mod_iso: bool = True,
    max_complexes: Optional[int] = None,
    workers: Optional[int] = 1,
    max_vertices: int = DEFAULT_MAX_VERTICES,
    max_vertices_iso: int = DEFAULT_MAX_VERTICES_ISO,
    parallel_threshold: int = DEFAULT_THRESHOLD,
) -> BettiPoset:
    """
    Enumerate complexes with f-vector f and collect their distinct diagrams.

    Each distinct diagram keeps the first complex that produced it as witness.
    With ``max_complexes`` the enumeration stops early and the poset is marked
    truncated.
    """
    poset = BettiPoset(f=f, p=p)
    stream = enumerate_complexes(n, f, mod_iso, max_vertices=max_vertices, max_vertices_iso=max_vertices_iso)
    if max_complexes is not None:
        stream = islice(stream, max_complexes + 1)
    for batch in _batches(stream, BATCH_SIZE):
        if max_complexes is not None and poset.complexes_seen + len(batch) > max_complexes:
            batch = batch[: max_complexes - poset.complexes_seen]
            poset.truncated = True
        jobs = [(c.n, c.faces, c.ground, p) for c in batch]
        diagrams = parallel_map(_diagram_job, jobs, workers=workers, threshold=parallel_threshold)
        for complex_, diagram in zip(batch, diagrams):
            poset.add(diagram, complex_)
        poset.complexes_seen += len(batch)
        logger.info("poset %s: %d complexes, %d distinct diagrams", f, poset.complexes_seen, len(poset))
        if poset.truncated:
            break
    poset.check_consistency()
    return poset
