#!/usr/bin/env python3
"""Compare generated and brute-force automorphism group orders.

For each signature in the sweep, build the quotient graph, compute the
order of the group generated by translations, the point reflection, and
any admitted cyclic shift, then compare against full brute-force search.
Signatures where the two differ carry extra symmetry beyond the generic
construction.

Usage:
    python3 scripts/aut_survey.py [--max-entry 2] [--n 3] [--cap 200]
"""

import argparse
import json
from itertools import product

from heawood_kit.lattice import KSignature
from heawood_kit.quotient import build_heawood_graph
from heawood_kit.symmetry import (
    CapExceeded,
    admitted_cyclic_order,
    brute_force_automorphisms,
    generated_group,
)


def survey(n: int, max_entry: int, cap: int) -> list[dict]:
    rows = []
    for entries in product(range(1, max_entry + 1), repeat=n):
        k = KSignature(entries)
        g = build_heawood_graph(k)
        generated = generated_group(g).order
        row = {
            "k": list(entries),
            "vertices": g.vertex_count,
            "cyclic_order": admitted_cyclic_order(k),
            "generated": generated,
        }
        try:
            brute = brute_force_automorphisms(g, cap=cap).order
            row["brute"] = brute
            row["exceptional"] = brute != generated
        except CapExceeded:
            row["brute"] = None
            row["exceptional"] = None
        rows.append(row)
    return rows


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--n", type=int, default=3, help="signature length")
    parser.add_argument("--max-entry", type=int, default=2)
    parser.add_argument("--cap", type=int, default=200)
    parser.add_argument("-o", "--output")
    args = parser.parse_args()
    rows = survey(args.n, args.max_entry, args.cap)
    text = json.dumps({"schema": "heawood-kit/1", "survey": rows}, indent=2)
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
