"""Command line interface.

Subcommands build quotient graphs and torus complexes, compare f-vector
formulas against enumeration, compute automorphism groups, run the graph
analyses, process census matrices, render tiles, and dump fixtures.  All
results are JSON on stdout unless -o routes them to a file.  Exit codes:
0 success, 2 validation error, 3 cap or budget refusal.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from typing import Optional, Sequence

from . import analysis, artifacts, fixtures, symmetry
from .intlin import InvalidSignature, ShapeError, integer_span_contains
from .lattice import InfiniteQuotient, KSignature, quotient_order_general
from .quotient import (
    NotSimplicial,
    build_general_quotient,
    build_heawood_graph,
    build_torus_complex,
    fvector_formula,
)

EXIT_OK = 0
EXIT_VALIDATION = 2
EXIT_CAP = 3


def parse_signature(text: str, delta: bool = False) -> KSignature:
    entries = tuple(int(v) for v in text.split(","))
    if not delta and any(v == 0 for v in entries):
        delta = True
    return KSignature(entries, delta=delta)


def emit(payload: dict, out: Optional[str]) -> None:
    payload = {"schema": artifacts.SCHEMA, **payload}
    text = json.dumps(payload, sort_keys=True, indent=2) + "\n"
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def emit_text(text: str, out: Optional[str]) -> None:
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_build(args: argparse.Namespace) -> int:
    k = parse_signature(args.k)
    if args.torus:
        complex_ = build_torus_complex(k)
        if args.format == "off":
            emit_text(artifacts.export_complex_off(complex_), args.output)
        else:
            emit(
                {
                    "signature": list(k.entries),
                    "torus": {
                        "vertices": complex_.vertex_count,
                        "facets": [list(f) for f in complex_.facets],
                        "fvector": list(complex_.fvector_enumerated()),
                        "euler_characteristic": complex_.euler_characteristic(),
                    },
                },
                args.output,
            )
        return EXIT_OK
    graph = build_heawood_graph(k)
    if args.format in ("dot", "json-graph"):
        fmt = "dot" if args.format == "dot" else "json"
        emit_text(artifacts.export_graph(graph, fmt), args.output)
    else:
        emit(
            {
                "signature": list(k.entries),
                "graph": {
                    "vertices": graph.vertex_count,
                    "edges": graph.edge_count,
                    "d": graph.d,
                },
            },
            args.output,
        )
    return EXIT_OK


def cmd_fvector(args: argparse.Namespace) -> int:
    k = parse_signature(args.k)
    payload: dict = {"signature": list(k.entries)}
    formula = list(fvector_formula(k))
    if args.mode in ("formula", "both"):
        payload["formula"] = formula
    if args.mode in ("enumerate", "both"):
        enumerated = list(build_torus_complex(k).fvector_enumerated())
        payload["enumerated"] = enumerated
        if args.mode == "both":
            payload["match"] = enumerated == formula
    emit(payload, args.output)
    return EXIT_OK


def cmd_aut(args: argparse.Namespace) -> int:
    k = parse_signature(args.k)
    graph = build_heawood_graph(k)
    payload: dict = {"signature": list(k.entries)}
    if args.mode in ("generated", "compare"):
        payload["generated"] = symmetry.generated_group(graph).order
    if args.mode in ("brute", "compare"):
        payload["brute"] = symmetry.brute_force_automorphisms(graph).order
    if args.mode == "compare":
        payload["exceptional"] = payload["brute"] != payload["generated"]
    emit(payload, args.output)
    return EXIT_OK


def cmd_analyze(args: argparse.Namespace) -> int:
    k = parse_signature(args.k)
    payload: dict = {"signature": list(k.entries)}
    if args.hamiltonian is not None:
        result = analysis.hamiltonian_alternating(k, args.hamiltonian)
        payload.update(
            {
                "mode": result.mode,
                "outcome": result.outcome,
                "length": result.length,
                "vertices": result.vertices,
            }
        )
        emit(payload, args.output)
        return EXIT_OK
    graph = build_heawood_graph(k)
    if args.bipartite:
        report = analysis.is_bipartite(graph)
        payload["bipartite"] = report.bipartite
        if report.odd_cycle:
            payload["odd_cycle_length"] = len(report.odd_cycle)
    if args.six_cycles:
        seed = graph.index[graph.key_of(tuple(range(1, k.n + 1)))]
        cycles = analysis.six_cycles_through(graph, seed)
        payload["six_cycles"] = [
            [artifacts.coord_label(graph.labels[v]) for v in c.vertices]
            for c in cycles
        ]
        payload["six_cycle_count"] = len(cycles)
    if args.chromatic:
        payload["chromatic_number"] = analysis.chromatic_number(graph)
    emit(payload, args.output)
    return EXIT_OK


def cmd_census(args: argparse.Namespace) -> int:
    matrix = artifacts.parse_matrix_arg(args.matrix)
    order = quotient_order_general(matrix)
    graph = build_general_quotient(matrix, d=matrix.cols - 1)
    all_ones = (1,) * matrix.cols
    emit(
        {
            "matrix": [list(r) for r in matrix.row_list()],
            "quotient_order": order,
            "vertices": graph.vertex_count,
            "edges": graph.edge_count,
            "all_ones_in_span": integer_span_contains(matrix, all_ones),
        },
        args.output,
    )
    return EXIT_OK


def cmd_render(args: argparse.Namespace) -> int:
    k = parse_signature(args.k)
    scene = artifacts.fundamental_tile_scene(k, domain=args.domain)
    emit_text(artifacts.render_svg(scene), args.output)
    return EXIT_OK


def cmd_fixture(args: argparse.Namespace) -> int:
    if args.name != "klein-quartic":
        raise InvalidSignature(f"unknown fixture {args.name!r}")
    complex_ = fixtures.klein_quartic()
    payload: dict = {
        "name": args.name,
        "vertices": complex_.vertex_count,
        "facets": len(complex_.facets),
        "edges": len(complex_.faces(1)),
        "euler_characteristic": complex_.euler_characteristic(),
    }
    if args.aut:
        payload["aut"] = fixtures.klein_quartic_aut_order()
    emit(payload, args.output)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="heawood",
        description="quotient graphs and triangulated tori of the "
        "permutahedral tiling",
    )
    parser.add_argument("--seed", type=int, default=0, help="rng seed")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("build", help="construct the graph or torus")
    p.add_argument("-k", required=True, help="signature, e.g. 1,1,1")
    group = p.add_mutually_exclusive_group()
    group.add_argument("--graph", action="store_true", default=True)
    group.add_argument("--torus", action="store_true")
    p.add_argument("--format", choices=["summary", "dot", "json-graph", "off"],
                   default="summary")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("fvector", help="face counts by formula or enumeration")
    p.add_argument("-k", required=True)
    group = p.add_mutually_exclusive_group()
    group.add_argument("--formula", dest="mode", action="store_const",
                       const="formula")
    group.add_argument("--enumerate", dest="mode", action="store_const",
                       const="enumerate")
    group.add_argument("--both", dest="mode", action="store_const", const="both")
    p.set_defaults(mode="both")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_fvector)

    p = sub.add_parser("aut", help="automorphism group orders")
    p.add_argument("-k", required=True)
    group = p.add_mutually_exclusive_group()
    group.add_argument("--generated", dest="mode", action="store_const",
                       const="generated")
    group.add_argument("--brute", dest="mode", action="store_const",
                       const="brute")
    group.add_argument("--compare", dest="mode", action="store_const",
                       const="compare")
    p.set_defaults(mode="compare")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_aut)

    p = sub.add_parser("analyze", help="bipartiteness, cycles, colorings")
    p.add_argument("-k", required=True)
    p.add_argument("--bipartite", action="store_true")
    p.add_argument("--hamiltonian", type=int, metavar="I")
    p.add_argument("--six-cycles", action="store_true")
    p.add_argument("--chromatic", action="store_true")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("census", help="general-matrix quotient summary")
    p.add_argument("--matrix", required=True,
                   help="semicolon-separated rows, e.g. '2,-1,0;0,2,-1;-1,0,2'")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_census)

    p = sub.add_parser("render", help="SVG of the fundamental tile (d=2)")
    p.add_argument("-k", required=True)
    p.add_argument("--domain", choices=["parallelepiped", "permutahedron"])
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_render)

    p = sub.add_parser("fixture", help="shipped complexes")
    p.add_argument("name")
    p.add_argument("--aut", action="store_true")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_fixture)

    return parser


def cli(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_VALIDATION if exc.code not in (0, None) else EXIT_OK
    random.seed(args.seed)
    try:
        return args.func(args)
    except (InvalidSignature, ShapeError, NotSimplicial, InfiniteQuotient,
            ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    except (symmetry.CapExceeded, analysis.CapExceeded) as exc:
        print(f"refused: {exc}", file=sys.stderr)
        return EXIT_CAP


def main() -> None:
    sys.exit(cli())


if __name__ == "__main__":
    main()
