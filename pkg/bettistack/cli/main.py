"""
bettistack CLI entry point.

This module contains:
- Argparse setup for all subcommands
- main() returning an exit code, and main_entry() for the console script

Command implementations are in the commands/ subpackage.
Exit codes: 0 success, 1 failed verification, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import logging
import sys
from typing import List, Optional

from pydantic import ValidationError

from bettistack import __version__
from bettistack.cli.commands import (
    cmd_betti,
    cmd_cone,
    cmd_family,
    cmd_lex,
    cmd_search,
    cmd_verify_betti_family,
    cmd_verify_coning,
    cmd_verify_cycle,
    cmd_verify_family,
    cmd_verify_golden,
    cmd_verify_path,
    cmd_verify_single_degree,
    cmd_verify_total_order,
    cmd_verify_witness,
)
from bettistack.cli.utils import add_format_arg, add_structure_args, configure_logging
from bettistack.core.errors import BettiStackError

logger = logging.getLogger(__name__)


def _add_char(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--char", type=int, help="Field characteristic (default: settings, 101)")


def _add_threads(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--threads", type=int, help="Worker processes (default: all cores)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="bettistack", description="Betti diagrams of squarefree monomial ideals")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("--config", help="Path to bettistack.yaml (default: BETTISTACK_CONFIG or auto-discovery)")
    parser.add_argument("-v", "--verbose", action="count", default=0, help="-v for INFO, -vv for DEBUG logging")
    subparsers = parser.add_subparsers(dest="command", help="Command to run")

    # betti
    parser_betti = subparsers.add_parser("betti", help="Graded Betti numbers via Hochster's formula")
    add_structure_args(parser_betti)
    _add_char(parser_betti)
    _add_threads(parser_betti)
    parser_betti.add_argument("--degree-cap", dest="degree_cap", type=int, help="Only compute degrees j <= cap")
    parser_betti.add_argument("--homology", action="store_true", help="Print reduced homology instead")
    add_format_arg(parser_betti)
    parser_betti.set_defaults(func=cmd_betti)

    # cone
    parser_cone = subparsers.add_parser("cone", help="Apply a coning sequence")
    add_structure_args(parser_cone)
    parser_cone.add_argument("--fvector", help="Cone an f-vector instead of a complex, e.g. 4,4,1,0")
    parser_cone.add_argument("--seq", required=True, help="Cone indices, e.g. 0,inf,3")
    add_format_arg(parser_cone)
    parser_cone.set_defaults(func=cmd_cone)

    # family
    parser_family = subparsers.add_parser("family", help="Tree of f-vectors under repeated coning")
    parser_family.add_argument("--fvector", required=True, help="Root f-vector, e.g. 6,8,4,0,0,0")
    parser_family.add_argument("--pre-cones", dest="pre_cones", help="Cones applied before the tree, e.g. inf,inf,inf")
    parser_family.add_argument("--j", type=int, help="Finite branch of a (j, inf) tree")
    parser_family.add_argument("--branches", help="Arbitrary branch indices, e.g. 4,5,inf")
    parser_family.add_argument("--depth", type=int, default=1, help="Tree depth (default: 1)")
    parser_family.add_argument("--all-nodes", dest="all_nodes", action="store_true", help="List internal nodes too")
    parser_family.add_argument("--verify-distinct", dest="verify_distinct", action="store_true", help="Report collisions")
    parser_family.add_argument(
        "--closed-form", dest="closed_form", action="store_true", help="Compare nodes with the closed-form f-vector"
    )
    parser_family.add_argument(
        "--literal", action="store_true", help="Use single-coefficient propagation in the closed form"
    )
    add_format_arg(parser_family)
    parser_family.set_defaults(func=cmd_family)

    # lex
    parser_lex = subparsers.add_parser("lex", help="Squarefree lex complex and ideal of an f-vector")
    parser_lex.add_argument("--fvector", required=True, help="f-vector, e.g. 6,8,4,0,0,0")
    _add_char(parser_lex)
    _add_threads(parser_lex)
    parser_lex.add_argument("--betti", action="store_true", help="Also print the lex Betti diagram")
    parser_lex.add_argument(
        "--single-degree", dest="single_degree", action="store_true", help="Exit 0 iff generated in one degree"
    )
    add_format_arg(parser_lex)
    parser_lex.set_defaults(func=cmd_lex)

    # search
    parser_search = subparsers.add_parser("search", help="Exhaustive Betti-diagram poset for an f-vector")
    parser_search.add_argument("--fvector", required=True, help="f-vector, e.g. 4,3,0,0")
    _add_char(parser_search)
    _add_threads(parser_search)
    parser_search.add_argument("--mod-iso", dest="mod_iso", action="store_true", help="One complex per isomorphism class")
    parser_search.add_argument("--max-complexes", dest="max_complexes", type=int, help="Stop after N complexes")
    parser_search.add_argument("--inject", action="append", help="Add the diagram of a JSON complex/ideal (repeatable)")
    parser_search.add_argument("--report", choices=["minima", "poset", "all"], default="all", help="What to print")
    add_format_arg(parser_search)
    parser_search.set_defaults(func=cmd_search)

    # verify
    parser_verify = subparsers.add_parser("verify", help="Reproducible extremality checks")
    verify_sub = parser_verify.add_subparsers(dest="verify_command", help="Check to run")

    parser_golden = verify_sub.add_parser(
        "paper-examples", aliases=["golden"], help="Reproduce the incomparable six-variable pair"
    )
    _add_char(parser_golden)
    parser_golden.set_defaults(func=cmd_verify_golden)

    parser_path = verify_sub.add_parser("path", help="Path complexes have 2-linear resolutions")
    parser_path.add_argument("--n", type=int, required=True)
    _add_char(parser_path)
    parser_path.set_defaults(func=cmd_verify_path)

    parser_cycle = verify_sub.add_parser("cycle", help="Cycle complexes obey the support bound")
    parser_cycle.add_argument("--n", type=int, required=True)
    _add_char(parser_cycle)
    parser_cycle.set_defaults(func=cmd_verify_cycle)

    parser_vfamily = verify_sub.add_parser("family", help="Path/cycle diagrams are minimal for (n,k,0,...)")
    parser_vfamily.add_argument("--n", type=int, required=True)
    _add_char(parser_vfamily)
    _add_threads(parser_vfamily)
    parser_vfamily.set_defaults(func=cmd_verify_family)

    parser_single = verify_sub.add_parser("single-degree", help="Single-degree lex ideals give singleton posets")
    parser_single.add_argument("--n", type=int, required=True)
    _add_char(parser_single)
    _add_threads(parser_single)
    parser_single.set_defaults(func=cmd_verify_single_degree)

    parser_total = verify_sub.add_parser("total-order", help="Posets on n vertices are totally ordered")
    parser_total.add_argument("--n", type=int, required=True)
    _add_char(parser_total)
    _add_threads(parser_total)
    parser_total.set_defaults(func=cmd_verify_total_order)

    parser_coning = verify_sub.add_parser("coning", help="Randomized coning properties")
    parser_coning.add_argument("--samples", type=int, default=200)
    parser_coning.add_argument("--seed", type=int, help="Random seed (default: settings, 0)")
    parser_coning.add_argument("--chars", type=int, nargs="+", help="Characteristics (default: 2 101)")
    parser_coning.set_defaults(func=cmd_verify_coning)

    parser_witness = verify_sub.add_parser("witness", help="Diagonal witness for a set of diagrams")
    parser_witness.add_argument("--diagrams", nargs="+", required=True, help="Diagram JSON files")
    parser_witness.set_defaults(func=cmd_verify_witness)

    parser_bfam = verify_sub.add_parser("betti-family", help="Betti-number incomparability criterion")
    parser_bfam.add_argument("first", help="Diagram JSON in the role with larger s_1")
    parser_bfam.add_argument("second", help="Diagram JSON to compare against")
    parser_bfam.add_argument("--swap", action="store_true", help="Apply the parity clause to the second diagram")
    parser_bfam.set_defaults(func=cmd_verify_betti_family)

    for sub in (parser_golden, parser_path, parser_cycle, parser_vfamily, parser_single, parser_total):
        add_format_arg(sub)
    for sub in (parser_coning, parser_witness, parser_bfam):
        add_format_arg(sub)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    configure_logging(args.verbose)

    if not hasattr(args, "func"):
        parser.print_help()
        return 2
    try:
        return int(args.func(args))
    except (BettiStackError, ValidationError) as exc:
        logger.error("%s", exc)
        return 2


def main_entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    main_entry()
