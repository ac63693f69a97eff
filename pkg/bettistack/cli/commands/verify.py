"""
verify: reproducible checks of the extremality results.

Every verify subcommand exits 0 when all checks pass and 1 otherwise.
"""

from __future__ import annotations

import argparse
import logging

from bettistack.algebra.diagram import DiagramOrder, compare
from bettistack.cli.utils import char_from_args, report_checks, settings_from_args
from bettistack.core.errors import InvalidParameter
from bettistack.core.schemas import load_diagram
from bettistack.families.extremality import betti_family_index, check_diag_witness
from bettistack.verification.families import (
    check_cycle_support,
    check_lex_maximum,
    check_minimal_family,
    check_path_linear,
    check_single_degree_count,
    check_single_degree_singletons,
    check_total_order,
)
from bettistack.verification.golden import run_golden_checks
from bettistack.verification.properties import check_diagonal_preservation, check_zero_cone_formula
from bettistack.verification.result import CheckResult

logger = logging.getLogger(__name__)


def cmd_verify_golden(args: argparse.Namespace) -> int:
    settings = settings_from_args(args)
    results = run_golden_checks(char_from_args(args, settings))
    return report_checks(results, args.format, "Incomparable six-variable pair")


def cmd_verify_path(args: argparse.Namespace) -> int:
    if args.n < 2:
        raise InvalidParameter(f"a path needs at least 2 vertices, got n={args.n}")
    settings = settings_from_args(args)
    p = char_from_args(args, settings)
    results = [check_path_linear(n, p) for n in range(2, args.n + 1)]
    return report_checks(results, args.format, "Path complexes")


def cmd_verify_cycle(args: argparse.Namespace) -> int:
    settings = settings_from_args(args)
    results = [check_cycle_support(args.n, char_from_args(args, settings))]
    return report_checks(results, args.format, "Cycle complexes")


def cmd_verify_family(args: argparse.Namespace) -> int:
    if args.n < 3:
        raise InvalidParameter(f"the (n,k) family sweep starts at n=3, got n={args.n}")
    settings = settings_from_args(args)
    p = char_from_args(args, settings)
    results = [check_minimal_family(n, p, workers=settings.workers) for n in range(3, args.n + 1)]
    return report_checks(results, args.format, "Minimal (n,k) family")


def cmd_verify_single_degree(args: argparse.Namespace) -> int:
    settings = settings_from_args(args)
    p = char_from_args(args, settings)
    results = [check_single_degree_count(args.n), check_single_degree_singletons(args.n, p, workers=settings.workers)]
    return report_checks(results, args.format, "Single-degree lex ideals")


def cmd_verify_total_order(args: argparse.Namespace) -> int:
    settings = settings_from_args(args)
    p = char_from_args(args, settings)
    results = [check_total_order(args.n, p, workers=settings.workers), check_lex_maximum(args.n, p, workers=settings.workers)]
    return report_checks(results, args.format, "Small posets")


def cmd_verify_coning(args: argparse.Namespace) -> int:
    settings = settings_from_args(args)
    chars = tuple(args.chars) if args.chars else (2, 101)
    results = [
        check_diagonal_preservation(args.samples, settings.seed, chars),
        check_zero_cone_formula(args.samples, settings.seed, chars),
    ]
    return report_checks(results, args.format, "Coning properties")


def cmd_verify_witness(args: argparse.Namespace) -> int:
    diagrams = [load_diagram(path) for path in args.diagrams]
    j = check_diag_witness(diagrams)
    result = CheckResult("diagonal witness", j is not None, f"j={j}" if j is not None else "no witnessing diagonal")
    return report_checks([result], args.format, "Diagonal witness", values=[j])


def cmd_verify_betti_family(args: argparse.Namespace) -> int:
    a, b = load_diagram(args.first), load_diagram(args.second)
    k = betti_family_index(a, b, swap=args.swap)
    incomparable = compare(a, b) is DiagramOrder.INCOMPARABLE
    detail = f"k={k}" if k is not None else "criterion does not apply"
    results = [
        CheckResult("betti family", k is not None, detail),
        CheckResult("graded incomparable", incomparable, str(compare(a, b).value)),
    ]
    return report_checks(results, args.format, "Betti-number incomparability", values=[k, None])
