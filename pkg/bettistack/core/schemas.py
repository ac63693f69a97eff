"""
JSON documents for complexes, ideals, diagrams, cone trees and posets.

Every CLI subcommand emits one of these models and every input surface parses
through them, so JSON output round-trips.
"""

from __future__ import annotations

import json
import logging
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence, Tuple, Type, TypeVar, Union

from pydantic import BaseModel, ConfigDict, RootModel, ValidationError

from bettistack.algebra.diagram import BettiDiagram
from bettistack.algebra.homology import ReducedHomologyProfile, profile_from_mapping
from bettistack.core.complex import (
    FVector,
    SimplicialComplex,
    SquarefreeIdeal,
    complex_of_ideal,
    from_facets,
)
from bettistack.core.errors import InputFormatError
from bettistack.search.poset import BettiPoset

logger = logging.getLogger(__name__)

M = TypeVar("M", bound=BaseModel)

Monomial = Union[List[int], str]


def _monomial_indices(value: Monomial) -> Tuple[int, ...]:
    if isinstance(value, str):
        return SquarefreeIdeal.parse_monomial(value)
    return tuple(int(v) for v in value)


class ComplexSpec(BaseModel):
    model_config = ConfigDict(extra="forbid")

    n: int
    facets: List[List[int]]

    @classmethod
    def from_domain(cls, complex_: SimplicialComplex) -> "ComplexSpec":
        return cls(n=complex_.n, facets=[list(f.vertices()) for f in complex_.facets() if len(f) > 0])

    def to_domain(self) -> SimplicialComplex:
        return from_facets(self.n, self.facets)


class IdealSpec(BaseModel):
    model_config = ConfigDict(extra="forbid")

    n: int
    gens: List[Monomial]

    @classmethod
    def from_domain(cls, ideal: SquarefreeIdeal) -> "IdealSpec":
        return cls(n=ideal.n, gens=[list(g.vertices()) for g in ideal.generators()])

    def to_domain(self) -> SquarefreeIdeal:
        """Minimal generators of the ideal spanned by ``gens``."""
        return SquarefreeIdeal.generated_by(self.n, [_monomial_indices(g) for g in self.gens])


class DiagramEntry(BaseModel):
    model_config = ConfigDict(extra="forbid")

    i: int
    j: int
    v: int


class DiagramSpec(BaseModel):
    model_config = ConfigDict(extra="forbid")

    n: int
    char: int
    entries: List[DiagramEntry]

    @classmethod
    def from_domain(cls, beta: BettiDiagram) -> "DiagramSpec":
        return cls(n=beta.n, char=beta.p, entries=[DiagramEntry(i=i, j=j, v=v) for i, j, v in beta.entries])

    def to_domain(self) -> BettiDiagram:
        return BettiDiagram(self.n, self.char, tuple((e.i, e.j, e.v) for e in self.entries))


class HomologySpec(RootModel[Dict[str, int]]):
    """``{"l": dim}`` for l = -1 .. dim."""

    @classmethod
    def from_domain(cls, profile: ReducedHomologyProfile) -> "HomologySpec":
        return cls(profile.to_json_dict())

    def to_domain(self) -> ReducedHomologyProfile:
        return profile_from_mapping({int(k): v for k, v in self.root.items()})


class ConeNodeSpec(BaseModel):
    model_config = ConfigDict(extra="forbid")

    index: str
    fvector: List[int]

    @classmethod
    def from_domain(cls, key: str, fvec: FVector) -> "ConeNodeSpec":
        return cls(index=key, fvector=list(fvec.entries))

    def to_domain(self) -> Tuple[str, FVector]:
        return self.index, FVector.of(self.fvector)


class PosetSpec(BaseModel):
    model_config = ConfigDict(extra="forbid")

    fvector: List[int]
    char: int
    diagrams: List[DiagramSpec]
    edges: List[Tuple[int, int]]
    unique_min: bool
    minimal: List[int] = []
    total_order: Optional[bool] = None
    truncated: bool = False

    @classmethod
    def from_domain(cls, poset: BettiPoset) -> "PosetSpec":
        minimal_keys = {d.canonical_key() for d in poset.minimal_elements()}
        return cls(
            fvector=list(poset.f.entries),
            char=poset.p,
            diagrams=[DiagramSpec.from_domain(d) for d in poset.diagrams],
            edges=list(poset.hasse_edges()),
            unique_min=poset.has_unique_min(),
            minimal=[idx for idx, d in enumerate(poset.diagrams) if d.canonical_key() in minimal_keys],
            total_order=poset.is_total_order(),
            truncated=poset.truncated,
        )

    def to_domain_diagrams(self) -> List[BettiDiagram]:
        return [d.to_domain() for d in self.diagrams]


def dump_json(model: Union[BaseModel, Sequence[BaseModel]]) -> str:
    """Deterministic JSON text for one model or a list of models."""
    if isinstance(model, BaseModel):
        payload: Any = model.model_dump(mode="json")
    else:
        payload = [m.model_dump(mode="json") for m in model]
    return json.dumps(payload, indent=2, sort_keys=False)


def _read_text_or_path(text_or_path: Union[str, Path]) -> str:
    if isinstance(text_or_path, Path):
        return text_or_path.read_text(encoding="utf-8")
    stripped = text_or_path.lstrip()
    if stripped.startswith("{") or stripped.startswith("["):
        return text_or_path
    path = Path(text_or_path)
    try:
        return path.read_text(encoding="utf-8")
    except OSError as exc:
        raise InputFormatError(f"cannot read {path}: {exc}") from exc


def _loads(text: str) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputFormatError(f"malformed JSON: {exc}") from exc


def parse_model(model: Type[M], text_or_path: Union[str, Path]) -> M:
    """
    Parse JSON text (or a file holding it) into ``model``.

    Raises:
        InputFormatError: on malformed JSON or schema violations.
    """
    data = _loads(_read_text_or_path(text_or_path))
    try:
        return model.model_validate(data)
    except ValidationError as exc:
        raise InputFormatError(f"invalid {model.__name__} document: {exc}") from exc


def load_structure(text_or_path: Union[str, Path]) -> SimplicialComplex:
    """
    A complex from either a complex document (``facets``) or an ideal document (``gens``).

    Raises:
        InputFormatError: if the document is neither.
    """
    data = _loads(_read_text_or_path(text_or_path))
    if not isinstance(data, dict):
        raise InputFormatError("structure document must be a JSON object")
    try:
        if "facets" in data:
            return ComplexSpec.model_validate(data).to_domain()
        if "gens" in data:
            return complex_of_ideal(IdealSpec.model_validate(data).to_domain())
    except ValidationError as exc:
        raise InputFormatError(f"invalid structure document: {exc}") from exc
    raise InputFormatError("structure document needs either 'facets' or 'gens'")


def load_diagram(text_or_path: Union[str, Path]) -> BettiDiagram:
    return parse_model(DiagramSpec, text_or_path).to_domain()


class LexSpec(BaseModel):
    model_config = ConfigDict(extra="forbid")

    fvector: List[int]
    complex: ComplexSpec
    ideal: IdealSpec
    single_degree: Optional[int] = None
    betti: Optional[DiagramSpec] = None


class CheckSpec(BaseModel):
    model_config = ConfigDict(extra="forbid")

    name: str
    passed: bool
    detail: str = ""
    value: Optional[int] = None
