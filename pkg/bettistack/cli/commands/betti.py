"""
betti: graded Betti numbers (or reduced homology) of one complex or ideal.
"""

from __future__ import annotations

import argparse
import logging

from bettistack.algebra.diagram import render_macaulay2
from bettistack.algebra.field import PrimeField
from bettistack.algebra.hochster import betti_via_hochster
from bettistack.algebra.homology import reduced_homology
from bettistack.cli.utils import char_from_args, emit_json, settings_from_args, structure_from_args
from bettistack.core.schemas import DiagramSpec, HomologySpec

logger = logging.getLogger(__name__)


def cmd_betti(args: argparse.Namespace) -> int:
    settings = settings_from_args(args)
    p = char_from_args(args, settings)
    complex_ = structure_from_args(args)

    if args.homology:
        profile = reduced_homology(complex_, PrimeField(p))
        if args.format == "json":
            emit_json(HomologySpec.from_domain(profile))
        else:
            for l, dim in profile.dims.items():
                print(f"{l}: {dim}")
        return 0

    beta = betti_via_hochster(
        complex_,
        p,
        degree_cap=args.degree_cap,
        workers=settings.workers,
        max_vertices=settings.hochster_max_vertices,
        parallel_threshold=settings.parallel_threshold,
    )
    if args.format == "json":
        emit_json(DiagramSpec.from_domain(beta))
    else:
        print(render_macaulay2(beta))
    return 0
