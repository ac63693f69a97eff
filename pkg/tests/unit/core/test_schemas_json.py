from __future__ import annotations

import json
from pathlib import Path

import pytest

from bettistack.algebra.diagram import BettiDiagram
from bettistack.algebra.homology import reduced_homology
from bettistack.core.complex import FVector, SquarefreeIdeal, from_facets
from bettistack.core.errors import InputFormatError
from bettistack.core.schemas import (
    ComplexSpec,
    ConeNodeSpec,
    DiagramSpec,
    HomologySpec,
    IdealSpec,
    PosetSpec,
    dump_json,
    load_diagram,
    load_structure,
    parse_model,
)
from bettistack.search.poset import BettiPoset


def test_complex_spec_lists_facets(coning_root) -> None:
    spec = ComplexSpec.from_domain(coning_root)
    assert spec.model_dump() == {"n": 4, "facets": [[3, 4], [1, 2, 4]]}
    assert spec.to_domain() == coning_root


def test_ideal_spec_accepts_strings_and_lists() -> None:
    spec = IdealSpec(n=4, gens=["x1*x2", [1, 3], [1, 2, 3]])
    assert spec.to_domain() == SquarefreeIdeal.generated_by(4, [(1, 2), (1, 3)])
    assert IdealSpec.from_domain(spec.to_domain()).gens == [[1, 2], [1, 3]]


def test_diagram_spec_keeps_characteristic(diagram_pair) -> None:
    spec = DiagramSpec.from_domain(diagram_pair[1])
    assert spec.char == 101
    assert spec.to_domain() == diagram_pair[1]
    assert load_diagram(dump_json(spec)) == diagram_pair[1]


def test_homology_spec(four_edge_complex) -> None:
    spec = HomologySpec.from_domain(reduced_homology(four_edge_complex))
    assert spec.root == {"-1": 0, "0": 0, "1": 1}
    assert spec.to_domain() == reduced_homology(four_edge_complex)


def test_cone_node_spec() -> None:
    spec = ConeNodeSpec.from_domain("j,inf", FVector((5, 8, 1, 0, 0), 5))
    assert json.loads(dump_json(spec)) == {"index": "j,inf", "fvector": [5, 8, 1, 0, 0]}
    assert spec.to_domain() == ("j,inf", FVector((5, 8, 1, 0, 0), 5))


def test_poset_spec(diagram_pair) -> None:
    poset = BettiPoset(f=FVector((6, 8, 4, 0, 0, 0), 6))
    for beta in diagram_pair:
        poset.add(beta)
    spec = PosetSpec.from_domain(poset)
    assert spec.unique_min is False
    assert spec.minimal == [0, 1]
    assert spec.edges == []
    again = parse_model(PosetSpec, dump_json(spec))
    assert again.to_domain_diagrams() == poset.diagrams


def test_load_structure_from_files(tmp_path: Path, four_edge_complex) -> None:
    ideal_file = tmp_path / "ideal.json"
    ideal_file.write_text(json.dumps({"n": 4, "gens": ["x1*x2", "x1*x3", "x2*x3*x4"]}))
    complex_file = tmp_path / "complex.json"
    complex_file.write_text(json.dumps({"n": 4, "facets": [[1, 4], [2, 3], [2, 4], [3, 4]]}))
    assert load_structure(str(ideal_file)) == four_edge_complex
    assert load_structure(complex_file) == four_edge_complex


@pytest.mark.parametrize(
    "text",
    [
        '{"n": 3}',
        "[1, 2]",
        '{"n": 3, "facets": "nope"}',
        "{not json",
    ],
)
def test_load_structure_rejects_bad_documents(text: str) -> None:
    with pytest.raises(InputFormatError):
        load_structure(text)


def test_missing_file_is_an_input_error(tmp_path: Path) -> None:
    with pytest.raises(InputFormatError, match="cannot read"):
        load_structure(str(tmp_path / "missing.json"))


def test_diagram_spec_rejects_extra_keys() -> None:
    with pytest.raises(InputFormatError):
        parse_model(DiagramSpec, '{"n": 2, "char": 2, "entries": [], "extra": 1}')


def test_empty_complex_spec_has_no_facets() -> None:
    assert ComplexSpec.from_domain(from_facets(0, [])).facets == []
    assert BettiDiagram(0, 2, ((0, 0, 1),)).betti == {(0, 0): 1}
