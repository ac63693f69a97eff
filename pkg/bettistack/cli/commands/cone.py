"""
cone: apply a coning sequence to a complex or directly to an f-vector.
"""

from __future__ import annotations

import argparse

from bettistack.cli.utils import emit_json, fvector_from_text, structure_from_args
from bettistack.core.complex import f_vector
from bettistack.core.schemas import ComplexSpec, ConeNodeSpec
from bettistack.families.coning import cone_seq, fvector_cone_seq, parse_cone_sequence


def cmd_cone(args: argparse.Namespace) -> int:
    seq = parse_cone_sequence(args.seq)
    key = ",".join(m.label for m in seq)

    if args.fvector:
        coned = fvector_cone_seq(fvector_from_text(args.fvector), seq)
        if args.format == "json":
            emit_json(ConeNodeSpec.from_domain(key, coned))
        else:
            print(coned)
        return 0

    complex_ = cone_seq(structure_from_args(args), seq)
    if args.format == "json":
        emit_json(ComplexSpec.from_domain(complex_))
    else:
        print(f"f-vector: {f_vector(complex_)}")
        print("facets: " + " ".join(str(facet) for facet in complex_.facets()))
    return 0
