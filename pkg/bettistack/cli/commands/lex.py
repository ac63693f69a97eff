"""
lex: the squarefree lex complex and ideal of an f-vector.
"""

from __future__ import annotations

import argparse

from bettistack.algebra.diagram import render_macaulay2
from bettistack.algebra.hilbert_lex import lex_generated_in_single_degree, squarefree_lex_complex
from bettistack.algebra.hochster import betti_via_hochster
from bettistack.cli.utils import char_from_args, emit_json, fvector_from_text, settings_from_args
from bettistack.core.complex import minimal_nonfaces
from bettistack.core.schemas import ComplexSpec, DiagramSpec, IdealSpec, LexSpec


def cmd_lex(args: argparse.Namespace) -> int:
    settings = settings_from_args(args)
    f = fvector_from_text(args.fvector)
    complex_ = squarefree_lex_complex(f)
    ideal = minimal_nonfaces(complex_)
    degree = lex_generated_in_single_degree(f)
    beta = None
    if args.betti:
        beta = betti_via_hochster(
            complex_, char_from_args(args, settings), workers=settings.workers, max_vertices=settings.hochster_max_vertices
        )

    if args.format == "json":
        emit_json(
            LexSpec(
                fvector=list(f.entries),
                complex=ComplexSpec.from_domain(complex_),
                ideal=IdealSpec.from_domain(ideal),
                single_degree=degree,
                betti=DiagramSpec.from_domain(beta) if beta is not None else None,
            )
        )
    else:
        print("facets: " + " ".join(str(facet) for facet in complex_.facets()))
        print(f"ideal: {ideal}")
        print(f"single degree: {degree if degree is not None else 'none'}")
        if beta is not None:
            print(render_macaulay2(beta))

    if args.single_degree:
        return 0 if degree is not None else 1
    return 0
