"""
Trees of f-vectors obtained by repeatedly coning with a fixed set of indices.

Node keys are comma-joined branch labels along the path from the root; the root
is the empty key. For the two-branch (j, inf) tree the labels are "j" and "inf",
so the key spells out the coning index (m_0, ..., m_k) directly.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from math import comb
from typing import Dict, List, Optional, Sequence, Tuple

from bettistack.core.complex import FVector
from bettistack.core.errors import InvalidParameter
from bettistack.families.coning import ConeIndex, ConeLike, as_cone_index, fvector_cone_j, fvector_cone_seq

logger = logging.getLogger(__name__)

J_LABEL = "j"
INF_LABEL = "inf"


def join_key(parts: Sequence[str]) -> str:
    return ",".join(parts)


def split_key(key: str) -> List[str]:
    return [part for part in key.split(",") if part]


@dataclass(frozen=True)
class ConeTree:
    """
    Every f-vector reachable from ``root`` in at most ``depth`` conings.

    Attributes:
        branches: label -> cone index applied on that branch.
        nodes: key -> f-vector, in breadth-first order.
        j: The finite index of a (j, inf) tree, if this is one.
    """

    root: FVector
    branches: Tuple[Tuple[str, ConeIndex], ...]
    depth: int
    nodes: Dict[str, FVector] = field(default_factory=dict)
    j: Optional[int] = None

    def index_of(self, key: str) -> List[ConeIndex]:
        lookup = dict(self.branches)
        return [lookup[label] for label in split_key(key)]

    def level(self, k: int) -> List[Tuple[str, FVector]]:
        return [(key, f) for key, f in self.nodes.items() if len(split_key(key)) == k]

    def leaves(self) -> List[Tuple[str, FVector]]:
        return self.level(self.depth)

    def collisions(self) -> List[List[str]]:
        """Groups of node keys sharing one f-vector (empty when all nodes are distinct)."""
        groups: Dict[Tuple[int, ...], List[str]] = {}
        for key, f in self.nodes.items():
            groups.setdefault(f.entries, []).append(key)
        return [keys for keys in groups.values() if len(keys) > 1]

    def is_distinct(self) -> bool:
        return not self.collisions()

    def closed_form_mismatches(self, literal: bool = False) -> List[str]:
        """Keys whose f-vector disagrees with ``closed_form_fvector``."""
        if self.j is None:
            raise InvalidParameter("the closed form only describes (j, inf) trees")
        out = []
        for key, f in self.nodes.items():
            if closed_form_fvector(self.root, self.j, self.index_of(key), literal=literal) != f:
                out.append(key)
        if out:
            logger.warning("closed form (literal=%s) disagrees with direct coning at %d nodes", literal, len(out))
        return out


def family_tree(f: FVector, branches: Sequence[ConeLike], depth: int) -> ConeTree:
    """
    Cone every node by every branch index, ``depth`` levels deep.

    Raises:
        InvalidParameter: for a negative depth or repeated branch indices.
    """
    if depth < 0:
        raise InvalidParameter(f"depth must be nonnegative, got {depth}")
    indices = [as_cone_index(b) for b in branches]
    labels = [index.label for index in indices]
    if len(set(labels)) != len(labels):
        raise InvalidParameter(f"repeated branch indices {labels}")
    return _grow(f, tuple(zip(labels, indices)), depth, None)


def cone_tree(f: FVector, j: ConeLike, depth: int) -> ConeTree:
    """The (j, inf) tree with node keys over {"j", "inf"}."""
    if depth < 0:
        raise InvalidParameter(f"depth must be nonnegative, got {depth}")
    index = as_cone_index(j)
    if index.is_inf:
        raise InvalidParameter("the finite branch of a cone tree needs a finite index")
    branches = ((J_LABEL, index), (INF_LABEL, ConeIndex.inf()))
    return _grow(f, branches, depth, index.value)


def _grow(f: FVector, branches: Tuple[Tuple[str, ConeIndex], ...], depth: int, j: Optional[int]) -> ConeTree:
    nodes: Dict[str, FVector] = {"": f}
    frontier: List[Tuple[List[str], FVector]] = [([], f)]
    for _ in range(depth):
        nxt = []
        for path, vec in frontier:
            for label, index in branches:
                child = fvector_cone_j(vec, index)
                child_path = path + [label]
                nodes[join_key(child_path)] = child
                nxt.append((child_path, child))
        frontier = nxt
    tree = ConeTree(root=f, branches=branches, depth=depth, nodes=nodes, j=j)
    logger.info("cone tree over %s: %d nodes, %d leaves", f, len(nodes), len(frontier))
    return tree


def closed_form_fvector(f: FVector, j: int, index: Sequence[ConeLike], literal: bool = False) -> FVector:
    """
    The f-vector of the (j, inf)-coning ``index`` of f, without coning above j.

    Entries 0..j equal those of f after k = len(index) j-cones. With r inf-cones
    applied after t_0 < ... < t_{r-1} earlier cones, entry j+s (s >= 1) is

        Σ_i C(r-1-i, s-1) f^{[t_i]}_j + f^{(r)}_{j+s},

    where f^{[t]} is f after t j-cones and f^{(r)} is the Pascal recursion
    pinned at f_{j+1}. ``literal=True`` uses coefficient 1 for i <= r - s
    instead; the two agree when r <= 2.
    """
    indices = [as_cone_index(m) for m in index]
    k = len(indices)
    size = f.n + k
    jk = fvector_cone_seq(f, [j] * k)
    if any(not m.is_inf and m.value != j for m in indices):
        raise InvalidParameter(f"closed form needs indices in {{{j}, inf}}, got {[m.label for m in indices]}")
    t = [pos for pos, m in enumerate(indices) if m.is_inf]
    r = len(t)
    base = [fvector_cone_seq(f, [j] * ti).get(j) for ti in t]

    pinned = _pinned_pascal(f, j, r, size)
    entries = []
    for m in range(size):
        if m <= j:
            entries.append(jk.get(m))
            continue
        s = m - j
        if literal:
            carried = sum(base[i] for i in range(r) if i <= r - s)
        else:
            carried = sum(comb(r - 1 - i, s - 1) * base[i] for i in range(r))
        entries.append(carried + pinned[m])
    return FVector(tuple(entries), size)


def _pinned_pascal(f: FVector, j: int, r: int, size: int) -> List[int]:
    """f^{(r)}_m for m < size: f^{(k)}_{j+1} = f_{j+1}, else f^{(k-1)}_{m-1} + f^{(k-1)}_m."""
    current = [f.get(m) for m in range(size)]
    for _ in range(r):
        nxt = list(current)
        for m in range(j + 2, size):
            nxt[m] = current[m - 1] + current[m]
        current = nxt
    return current
