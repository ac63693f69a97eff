"""
Shared helpers for CLI command handlers: logging, settings, input parsing, output.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from typing import Iterable, List, Optional, Sequence, Tuple

from pydantic import BaseModel
from rich import box
from rich.console import Console
from rich.table import Table

from bettistack.algebra.homology import configure_homology_cache
from bettistack.config.settings import BettiSettings, load_settings
from bettistack.core.complex import FVector, SimplicialComplex, SquarefreeIdeal, complex_of_ideal, from_facets
from bettistack.core.errors import InputFormatError
from bettistack.core.schemas import CheckSpec, dump_json, load_structure
from bettistack.verification.result import CheckResult, all_passed, failures

logger = logging.getLogger(__name__)

LOG_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"


def configure_logging(verbosity: int) -> None:
    """WARNING by default, INFO with -v, DEBUG with -vv; always on stderr."""
    level = logging.WARNING if verbosity <= 0 else logging.INFO if verbosity == 1 else logging.DEBUG
    logging.basicConfig(level=level, format=LOG_FORMAT, stream=sys.stderr, force=True)


def settings_from_args(args: argparse.Namespace) -> BettiSettings:
    """Load settings and apply the CLI overrides present on ``args``."""
    settings = load_settings(getattr(args, "config", None))
    overrides = {}
    if getattr(args, "threads", None) is not None:
        overrides["workers"] = args.threads
    if getattr(args, "seed", None) is not None:
        overrides["seed"] = args.seed
    if overrides:
        settings = BettiSettings.model_validate({**settings.model_dump(), **overrides})
    configure_homology_cache(settings.homology_cache_size)
    return settings


def char_from_args(args: argparse.Namespace, settings: BettiSettings) -> int:
    value = getattr(args, "char", None)
    return settings.default_char if value is None else value


def _parse_index_lists(data: object) -> List[Tuple[int, ...]]:
    if not isinstance(data, list):
        raise InputFormatError("generators must be a JSON list")
    out = []
    for item in data:
        if isinstance(item, str):
            out.append(SquarefreeIdeal.parse_monomial(item))
        elif isinstance(item, list) and all(isinstance(v, int) for v in item):
            out.append(tuple(item))
        else:
            raise InputFormatError(f"cannot read monomial {item!r}")
    return out


def parse_vertex_lists(text: str) -> List[Tuple[int, ...]]:
    """
    Read ``[[1,2],[1,3]]``, ``["x1*x2", "x1*x3"]`` or ``x1*x2, x1*x3``.
    """
    stripped = text.strip()
    if stripped.startswith("["):
        try:
            data = json.loads(stripped)
        except json.JSONDecodeError as exc:
            raise InputFormatError(f"malformed JSON list: {exc}") from exc
        return _parse_index_lists(data)
    return [SquarefreeIdeal.parse_monomial(part) for part in stripped.split(",") if part.strip()]


def add_structure_args(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--gens", help="Ideal generators: JSON index lists or x1*x2 strings")
    parser.add_argument("--facets", help="Complex facets as JSON index lists")
    parser.add_argument("--n", type=int, help="Number of variables/vertices (with --gens or --facets)")
    parser.add_argument("--input", help="JSON complex or ideal document")


def structure_from_args(args: argparse.Namespace) -> SimplicialComplex:
    """
    Raises:
        InputFormatError: unless exactly one input form is given (with --n where needed).
    """
    given = [name for name in ("gens", "facets", "input") if getattr(args, name, None)]
    if len(given) != 1:
        raise InputFormatError("give exactly one of --gens, --facets or --input")
    if args.input:
        return load_structure(args.input)
    if args.n is None:
        raise InputFormatError(f"--{given[0]} needs --n")
    if args.gens:
        return complex_of_ideal(SquarefreeIdeal.generated_by(args.n, parse_vertex_lists(args.gens)))
    return from_facets(args.n, parse_vertex_lists(args.facets))


def fvector_from_text(text: str) -> FVector:
    return FVector.parse(text)


def add_format_arg(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--format", choices=["text", "json"], default="text", help="Output format (default: text)")


def emit_json(model: BaseModel | Sequence[BaseModel]) -> None:
    print(dump_json(model))


def render_checks(results: Iterable[CheckResult], title: str) -> None:
    table = Table(title=title, box=box.SIMPLE_HEAD)
    table.add_column("Check", style="cyan", no_wrap=True)
    table.add_column("Status")
    table.add_column("Detail")
    for result in results:
        style = "green" if result.passed else "red"
        table.add_row(result.name, f"[{style}]{result.status}[/{style}]", result.detail)
    Console().print(table)


def report_checks(results: List[CheckResult], fmt: str, title: str, values: Optional[List[Optional[int]]] = None) -> int:
    """Print check results and return 0 when all passed, 1 otherwise."""
    if fmt == "json":
        vals = values or [None] * len(results)
        emit_json([CheckSpec(name=r.name, passed=r.passed, detail=r.detail, value=v) for r, v in zip(results, vals)])
    else:
        render_checks(results, title)
    for result in failures(results):
        logger.warning("check failed: %s (%s)", result.name, result.detail)
    return 0 if all_passed(results) else 1
