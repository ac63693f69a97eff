"""Seeded random complexes for property checks."""

from __future__ import annotations

import random
from typing import Iterator, List

from bettistack.core.complex import SimplicialComplex, from_facets


def random_complex(n: int, rng: random.Random) -> SimplicialComplex:
    """A complex on 1..n generated by up to n random facets (every vertex is a face)."""
    facets: List[List[int]] = []
    if n:
        for _ in range(rng.randint(0, n)):
            size = rng.randint(1, n)
            facets.append(sorted(rng.sample(range(1, n + 1), size)))
    return from_facets(n, facets)


def random_complexes(samples: int, seed: int, max_n: int = 6, min_n: int = 1) -> Iterator[SimplicialComplex]:
    """``samples`` complexes with vertex counts drawn from min_n..max_n."""
    rng = random.Random(seed)
    for _ in range(samples):
        yield random_complex(rng.randint(min_n, max_n), rng)
