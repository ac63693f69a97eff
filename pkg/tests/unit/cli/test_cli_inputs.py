from __future__ import annotations

import argparse

import pytest

from bettistack.cli.utils import (
    char_from_args,
    parse_vertex_lists,
    report_checks,
    settings_from_args,
    structure_from_args,
)
from bettistack.config.settings import ENV_VAR
from bettistack.core.errors import InputFormatError
from bettistack.verification.result import CheckResult


def _args(**kwargs) -> argparse.Namespace:
    base = {"gens": None, "facets": None, "input": None, "n": None, "config": None}
    base.update(kwargs)
    return argparse.Namespace(**base)


class TestParseVertexLists:
    def test_json_index_lists(self) -> None:
        assert parse_vertex_lists("[[1,2],[1,3]]") == [(1, 2), (1, 3)]

    def test_json_strings(self) -> None:
        assert parse_vertex_lists('["x1*x2", "x2*x3*x4"]') == [(1, 2), (2, 3, 4)]

    def test_bare_monomials(self) -> None:
        assert parse_vertex_lists("x1*x2, x1*x3") == [(1, 2), (1, 3)]

    def test_rejects_garbage(self) -> None:
        with pytest.raises(InputFormatError):
            parse_vertex_lists("[[1,2]")
        with pytest.raises(InputFormatError):
            parse_vertex_lists('{"a": 1}')
        with pytest.raises(InputFormatError):
            parse_vertex_lists("[[1, 2.5]]")


class TestStructureFromArgs:
    def test_gens(self, four_edge_complex) -> None:
        complex_ = structure_from_args(_args(gens="x1*x2, x1*x3, x2*x3*x4", n=4))
        assert complex_ == four_edge_complex

    def test_facets(self, four_edge_complex) -> None:
        assert structure_from_args(_args(facets="[[1,4],[2,3],[2,4],[3,4]]", n=4)) == four_edge_complex

    def test_requires_exactly_one_form(self) -> None:
        with pytest.raises(InputFormatError, match="exactly one"):
            structure_from_args(_args())
        with pytest.raises(InputFormatError, match="exactly one"):
            structure_from_args(_args(gens="x1*x2", facets="[[1]]", n=2))

    def test_requires_n(self) -> None:
        with pytest.raises(InputFormatError, match="--n"):
            structure_from_args(_args(gens="x1*x2"))


def test_settings_overrides(tmp_path, monkeypatch) -> None:
    monkeypatch.delenv(ENV_VAR, raising=False)
    monkeypatch.chdir(tmp_path)
    settings = settings_from_args(argparse.Namespace(config=None, threads=2, seed=9, char=None))
    assert settings.workers == 2
    assert settings.seed == 9
    assert char_from_args(argparse.Namespace(char=None), settings) == 101
    assert char_from_args(argparse.Namespace(char=3), settings) == 3


def test_report_checks_exit_codes(capsys) -> None:
    assert report_checks([CheckResult("a", True)], "json", "t") == 0
    assert '"passed": true' in capsys.readouterr().out
    assert report_checks([CheckResult("a", True), CheckResult("b", False, "broken")], "text", "t") == 1
    out = capsys.readouterr().out
    assert "FAIL" in out
    assert "broken" in out


def test_report_checks_logs_each_failure(caplog, capsys) -> None:
    results = [CheckResult("a", True), CheckResult("b", False, "broken")]
    with caplog.at_level("WARNING", logger="bettistack.cli.utils"):
        assert report_checks(results, "json", "t") == 1
    capsys.readouterr()
    assert [r.getMessage() for r in caplog.records] == ["check failed: b (broken)"]
