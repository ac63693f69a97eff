"""
family: trees of f-vectors under repeated coning, with distinctness reports.
"""

from __future__ import annotations

import argparse
import sys

from bettistack.cli.utils import emit_json, fvector_from_text
from bettistack.core.errors import InputFormatError
from bettistack.core.schemas import ConeNodeSpec
from bettistack.families.cone_tree import ConeTree, cone_tree, family_tree
from bettistack.families.coning import fvector_cone_seq, parse_cone_sequence


def _report(lines: list[str], to_stderr: bool) -> None:
    stream = sys.stderr if to_stderr else sys.stdout
    for line in lines:
        print(line, file=stream)


def _build(args: argparse.Namespace) -> ConeTree:
    root = fvector_cone_seq(fvector_from_text(args.fvector), parse_cone_sequence(args.pre_cones or ""))
    if (args.j is None) == (args.branches is None):
        raise InputFormatError("give exactly one of --j or --branches")
    if args.j is not None:
        return cone_tree(root, args.j, args.depth)
    return family_tree(root, parse_cone_sequence(args.branches), args.depth)


def cmd_family(args: argparse.Namespace) -> int:
    tree = _build(args)
    nodes = list(tree.nodes.items()) if args.all_nodes else tree.leaves()
    json_out = args.format == "json"
    if json_out:
        emit_json([ConeNodeSpec.from_domain(key, f) for key, f in nodes])
    else:
        for key, f in nodes:
            print(f"{key or '(root)'}: {f}")

    code = 0
    if args.verify_distinct:
        groups = tree.collisions()
        if groups:
            code = 1
            _report([f"collision: {' = '.join(g)}" for g in groups], json_out)
        else:
            _report([f"distinct: all {len(tree.nodes)} nodes ({len(tree.leaves())} leaves)"], json_out)
    if args.closed_form:
        mismatches = tree.closed_form_mismatches(literal=args.literal)
        if mismatches:
            code = 1
            _report([f"closed form mismatch: {key}" for key in mismatches], json_out)
        else:
            _report([f"closed form: agrees at all {len(tree.nodes)} nodes"], json_out)
    return code
