"""
search: exhaustive Betti-diagram poset for one f-vector.
"""

from __future__ import annotations

import argparse
import logging

from rich import box
from rich.console import Console
from rich.table import Table

from bettistack.algebra.diagram import render_macaulay2, total_betti
from bettistack.algebra.hochster import betti_via_hochster
from bettistack.cli.utils import char_from_args, emit_json, fvector_from_text, settings_from_args
from bettistack.core.schemas import DiagramSpec, PosetSpec, load_structure
from bettistack.search.poset import BettiPoset, build_poset

logger = logging.getLogger(__name__)


def _summary_table(poset: BettiPoset) -> Table:
    minimal = {d.canonical_key() for d in poset.minimal_elements()}
    maximal = {d.canonical_key() for d in poset.maximal_elements()}
    table = Table(title=f"Betti poset for {poset.f} over GF({poset.p})", box=box.SIMPLE_HEAD)
    table.add_column("#", style="cyan", justify="right")
    table.add_column("Betti numbers")
    table.add_column("Role")
    for idx, diagram in enumerate(poset.diagrams):
        key = diagram.canonical_key()
        roles = [name for name, group in (("min", minimal), ("max", maximal)) if key in group]
        table.add_row(str(idx), str(total_betti(diagram).s), ", ".join(roles))
    return table


def cmd_search(args: argparse.Namespace) -> int:
    settings = settings_from_args(args)
    p = char_from_args(args, settings)
    f = fvector_from_text(args.fvector)
    poset = build_poset(
        f.n,
        f,
        p,
        mod_iso=args.mod_iso,
        max_complexes=args.max_complexes,
        workers=settings.workers,
        max_vertices=settings.enumerate_max_vertices,
        max_vertices_iso=settings.enumerate_max_vertices_iso,
        parallel_threshold=settings.parallel_threshold,
    )
    for path in args.inject or []:
        complex_ = load_structure(path)
        beta = betti_via_hochster(
            complex_,
            p,
            workers=settings.workers,
            max_vertices=settings.hochster_max_vertices,
            parallel_threshold=settings.parallel_threshold,
        )
        added = poset.add(beta, complex_)
        logger.info("injected %s (%s)", path, "new" if added else "already present")
    poset.check_consistency()

    minima = poset.minimal_elements()
    if args.format == "json":
        if args.report == "minima":
            emit_json([DiagramSpec.from_domain(d) for d in minima])
        else:
            emit_json(PosetSpec.from_domain(poset))
        return 0

    console = Console()
    if args.report in ("poset", "all"):
        console.print(_summary_table(poset))
        for a, b in poset.hasse_edges():
            print(f"{a} < {b}")
    if args.report in ("minima", "all"):
        for diagram in minima:
            print(render_macaulay2(diagram))
            print()
    print(f"complexes: {poset.complexes_seen}{' (truncated)' if poset.truncated else ''}")
    print(f"diagrams: {len(poset)}")
    print(f"unique minimum: {'yes' if poset.has_unique_min() else 'no'}")
    return 0
