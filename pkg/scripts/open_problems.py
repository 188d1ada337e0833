#!/usr/bin/env python3
"""Run every open-problem search over the built-in exhaustive streams.

Usage:
    python scripts/open_problems.py [--max-n 8] [--trees-max 13] [--output out.jsonl]

Scans the connected streams up to --max-n for each registered problem
(tree/unicyclic problems additionally scan those families up to
--trees-max) and writes one JSON line per witness plus one per
aggregation-table row.  Witnesses here are research artifacts: matches are
recorded, never asserted.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from hypodom.harness import PROBLEMS, search_open_problems
from hypodom.streams import connected_graphs, trees, unicyclic_graphs


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-n", type=int, default=8)
    ap.add_argument("--trees-max", type=int, default=13)
    ap.add_argument("--output", default=None)
    args = ap.parse_args()

    out = open(args.output, "w") if args.output else sys.stdout
    stream = [g for n in range(1, args.max_n + 1) for g in connected_graphs(n)]
    family = [t for n in range(2, args.trees_max + 1) for t in trees(n)]
    family += [g for n in range(3, args.trees_max + 1) for g in unicyclic_graphs(n)]

    for problem_id, spec in PROBLEMS.items():
        t0 = time.time()
        graphs = family if problem_id == "ED_TREES" else stream
        rep = search_open_problems(problem_id, graphs)
        for w in rep.witnesses:
            out.write(json.dumps({"problem": problem_id, "g6": w.g6, "detail": w.detail}) + "\n")
        if rep.table:
            for row in rep.table:
                out.write(json.dumps({"problem": problem_id, **row}) + "\n")
        print(
            f"# {problem_id}: {rep.n_checked} graphs, {len(rep.witnesses)} witnesses "
            f"({time.time() - t0:.1f}s)",
            file=sys.stderr,
        )
    if out is not sys.stdout:
        out.close()
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
