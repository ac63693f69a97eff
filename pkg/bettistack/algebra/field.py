"""
Exact linear algebra over prime fields GF(p).

Matrices are numpy int64 arrays holding residues in [0, p). The modulus is capped
below 2**31 so that products of two residues never overflow int64.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np
from numpy.typing import NDArray

from bettistack.core.errors import InvalidParameter

DEFAULT_CHAR = 101
MAX_CHAR = 2**31 - 1


@lru_cache(maxsize=256)
def is_prime(n: int) -> bool:
    """Trial division; adequate for the moduli used here."""
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    for d in range(3, math.isqrt(n) + 1, 2):
        if n % d == 0:
            return False
    return True


@dataclass(frozen=True)
class PrimeField:
    """The coefficient field GF(p)."""

    p: int = DEFAULT_CHAR

    def __post_init__(self) -> None:
        if not is_prime(self.p):
            raise InvalidParameter(f"characteristic {self.p} is not prime")
        if self.p > MAX_CHAR:
            raise InvalidParameter(f"characteristic {self.p} exceeds {MAX_CHAR}")

    def reduce(self, values: NDArray[np.int64]) -> NDArray[np.int64]:
        return np.mod(values, self.p)

    def inverse(self, a: int) -> int:
        return pow(int(a) % self.p, -1, self.p)


@dataclass(frozen=True, eq=False)
class FieldMatrix:
    """
    A dense matrix over GF(p).

    ``entries`` is reduced mod p on construction; shape ``(rows, cols)`` may have
    a zero dimension (the boundary map out of C_{-1} has no rows).
    """

    entries: NDArray[np.int64]
    field: PrimeField

    def __post_init__(self) -> None:
        arr = np.asarray(self.entries, dtype=np.int64)
        if arr.ndim != 2:
            raise InvalidParameter(f"expected a 2-d matrix, got shape {arr.shape}")
        object.__setattr__(self, "entries", self.field.reduce(arr))

    @property
    def rows(self) -> int:
        return int(self.entries.shape[0])

    @property
    def cols(self) -> int:
        return int(self.entries.shape[1])

    def transpose(self) -> "FieldMatrix":
        return FieldMatrix(self.entries.T.copy(), self.field)

    def rank(self) -> int:
        """Rank by forward elimination; the stored entries are not mutated."""
        return rank_mod_p(self.entries, self.field.p)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FieldMatrix):
            return NotImplemented
        return self.field == other.field and np.array_equal(self.entries, other.entries)

    def __hash__(self) -> int:
        return hash((self.field, self.entries.shape, self.entries.tobytes()))


def rank_mod_p(matrix: NDArray[np.int64], p: int) -> int:
    """
    Return the rank of ``matrix`` over GF(p).

    Args:
        matrix: Residues in [0, p). Copied, not mutated.
        p: Prime modulus below 2**31.
    """
    num_rows, num_cols = matrix.shape
    if num_rows == 0 or num_cols == 0:
        return 0
    mat = matrix.copy()
    rank = 0
    for col in range(num_cols):
        if rank == num_rows:
            break
        pivots = np.flatnonzero(mat[rank:, col])
        if pivots.size == 0:
            continue
        pivot = rank + int(pivots[0])
        if pivot != rank:
            mat[[rank, pivot]] = mat[[pivot, rank]]
        inv = pow(int(mat[rank, col]), -1, p)
        mat[rank] = (mat[rank] * inv) % p
        below = rank + 1 + np.flatnonzero(mat[rank + 1 :, col])
        if below.size:
            mat[below] = (mat[below] - np.outer(mat[below, col], mat[rank])) % p
        rank += 1
    return rank
