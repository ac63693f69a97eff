"""
Betti diagrams and the partial order on them.

A diagram is a sparse map (i, j) -> β_{i,j} with i the homological index and j the
internal degree. Rendering follows the Macaulay2 layout: columns are indexed by
i, rows by j - i, and a header row carries the column sums.
"""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass
from typing import Dict, List, Mapping, Tuple

from bettistack.core.errors import AmbientMismatch, InvalidParameter

Entry = Tuple[int, int]


class DiagramOrder(str, enum.Enum):
    LESS = "Less"
    GREATER = "Greater"
    EQUAL = "Equal"
    INCOMPARABLE = "Incomparable"

    def flipped(self) -> "DiagramOrder":
        if self is DiagramOrder.LESS:
            return DiagramOrder.GREATER
        if self is DiagramOrder.GREATER:
            return DiagramOrder.LESS
        return self


@dataclass(frozen=True)
class BettiDiagram:
    """
    Graded Betti numbers of R/I over GF(p).

    ``entries`` holds the nonzero (i, j, β_{i,j}) triples sorted by (i, j).
    """

    n: int
    p: int
    entries: Tuple[Tuple[int, int, int], ...]

    def __post_init__(self) -> None:
        merged: Dict[Entry, int] = {}
        for i, j, v in self.entries:
            i, j, v = int(i), int(j), int(v)
            if v < 0:
                raise InvalidParameter(f"β_{{{i},{j}}} = {v} is negative")
            if not 0 <= i <= j <= self.n:
                raise InvalidParameter(f"β_{{{i},{j}}} lies outside 0 <= i <= j <= {self.n}")
            merged[(i, j)] = merged.get((i, j), 0) + v
        cleaned = tuple(sorted((i, j, v) for (i, j), v in merged.items() if v))
        object.__setattr__(self, "entries", cleaned)

    @classmethod
    def from_mapping(cls, n: int, p: int, betti: Mapping[Entry, int]) -> "BettiDiagram":
        return cls(n, p, tuple((i, j, v) for (i, j), v in betti.items()))

    @property
    def betti(self) -> Dict[Entry, int]:
        return {(i, j): v for i, j, v in self.entries}

    def __getitem__(self, key: Entry) -> int:
        i, j = key
        for a, b, v in self.entries:
            if a == i and b == j:
                return v
        return 0

    def support(self) -> List[Entry]:
        return [(i, j) for i, j, _ in self.entries]

    def with_entry(self, i: int, j: int, value: int) -> "BettiDiagram":
        """Copy with β_{i,j} replaced."""
        betti = self.betti
        betti[(i, j)] = value
        return BettiDiagram.from_mapping(self.n, self.p, betti)

    def restricted_to_degrees(self, max_degree: int) -> "BettiDiagram":
        return BettiDiagram(self.n, self.p, tuple(e for e in self.entries if e[1] <= max_degree))

    def canonical_key(self) -> str:
        """Stable serialization used for dedup and deterministic ordering."""
        return json.dumps([self.n, self.p, [list(e) for e in self.entries]], separators=(",", ":"))

    def is_zero(self) -> bool:
        return not self.entries


@dataclass(frozen=True)
class BettiNumbers:
    """Column sums s_i = Σ_j β_{i,j}, listed up to the last nonzero column."""

    s: Tuple[int, ...]

    def total(self) -> int:
        return sum(self.s)

    def get(self, i: int) -> int:
        return self.s[i] if 0 <= i < len(self.s) else 0


@dataclass(frozen=True)
class DiagonalSums:
    """d_j = Σ_i (-1)^i β_{i,j} for j = 0..n."""

    d: Tuple[int, ...]

    def get(self, j: int) -> int:
        return self.d[j] if 0 <= j < len(self.d) else 0

    def abs_total(self) -> int:
        return sum(abs(x) for x in self.d)


def total_betti(beta: BettiDiagram) -> BettiNumbers:
    sums: Dict[int, int] = {}
    for i, _, v in beta.entries:
        sums[i] = sums.get(i, 0) + v
    if not sums:
        return BettiNumbers(())
    return BettiNumbers(tuple(sums.get(i, 0) for i in range(max(sums) + 1)))


def diagonal_sums(beta: BettiDiagram) -> DiagonalSums:
    d = [0] * (beta.n + 1)
    for i, j, v in beta.entries:
        d[j] += v if i % 2 == 0 else -v
    return DiagonalSums(tuple(d))


def degree_sums(beta: BettiDiagram) -> Tuple[int, ...]:
    """Σ_i β_{i,j} for j = 0..n (unsigned counterpart of the diagonal sums)."""
    out = [0] * (beta.n + 1)
    for _, j, v in beta.entries:
        out[j] += v
    return tuple(out)


def _order_from_flags(a_le_b: bool, b_le_a: bool) -> DiagramOrder:
    if a_le_b and b_le_a:
        return DiagramOrder.EQUAL
    if a_le_b:
        return DiagramOrder.LESS
    if b_le_a:
        return DiagramOrder.GREATER
    return DiagramOrder.INCOMPARABLE


def compare(a: BettiDiagram, b: BettiDiagram) -> DiagramOrder:
    """
    Componentwise comparison over the union of supports.

    Raises:
        AmbientMismatch: if the diagrams live in different numbers of variables.
    """
    if a.n != b.n:
        raise AmbientMismatch(f"cannot compare diagrams on {a.n} and {b.n} variables")
    ba, bb = a.betti, b.betti
    keys = set(ba) | set(bb)
    a_le_b = all(ba.get(k, 0) <= bb.get(k, 0) for k in keys)
    b_le_a = all(bb.get(k, 0) <= ba.get(k, 0) for k in keys)
    return _order_from_flags(a_le_b, b_le_a)


def compare_betti_numbers(a: BettiDiagram, b: BettiDiagram) -> DiagramOrder:
    """Componentwise comparison of the column sums (the ungraded order)."""
    if a.n != b.n:
        raise AmbientMismatch(f"cannot compare diagrams on {a.n} and {b.n} variables")
    sa, sb = total_betti(a), total_betti(b)
    width = max(len(sa.s), len(sb.s))
    a_le_b = all(sa.get(i) <= sb.get(i) for i in range(width))
    b_le_a = all(sb.get(i) <= sa.get(i) for i in range(width))
    return _order_from_flags(a_le_b, b_le_a)


def nonzero_rows(beta: BettiDiagram) -> Tuple[int, ...]:
    """Rows (j - i) carrying a nonzero entry."""
    return tuple(sorted({j - i for i, j, _ in beta.entries}))


def is_linear(beta: BettiDiagram, q: int) -> bool:
    """True iff every entry other than β_{0,0} sits at j = q + i - 1 (a q-linear resolution)."""
    return all((i, j) == (0, 0) or j == q + i - 1 for i, j, _ in beta.entries)


def render_macaulay2(beta: BettiDiagram) -> str:
    """
    Text table in the Macaulay2 layout.

    Columns run over i = 0..max{i : s_i != 0}; rows over j - i = 0..max row, so an
    all-zero row between nonzero rows is kept. Zero cells inside the box print as 0.
    """
    if beta.is_zero():
        return ""
    sums = total_betti(beta).s
    last_col = max(i for i, s in enumerate(sums) if s)
    last_row = max(nonzero_rows(beta))
    betti = beta.betti

    columns: List[List[str]] = []
    for i in range(last_col + 1):
        cells = [str(i), str(sums[i])]
        cells.extend(str(betti.get((i, i + r), 0)) for r in range(last_row + 1))
        columns.append(cells)
    widths = [max(len(c) for c in col) for col in columns]

    labels = ["", "total:"] + [f"{r}:" for r in range(last_row + 1)]
    label_width = max(len(label) for label in labels)
    lines = []
    for line_idx, label in enumerate(labels):
        cells = [col[line_idx].rjust(w) for col, w in zip(columns, widths)]
        lines.append(" ".join([label.rjust(label_width)] + cells))
    return "\n".join(lines)
