#!/usr/bin/env python3
"""Regenerate the packaged graph6 streams (connected graphs on 8 and 9 vertices).

Usage:
    python scripts/make_streams.py [--max-n 9]

Writes src/hypodom/data/connected_<n>.g6.gz for n in {8, .., max_n}.
Order 9 takes a few minutes (about 2.8 million canonical certificates).
"""

from __future__ import annotations

import argparse
import pathlib
import time

from hypodom.streams import (
    CONNECTED_COUNTS,
    generate_connected_graphs,
    write_graph6_file,
)

DATA_DIR = pathlib.Path(__file__).resolve().parents[1] / "src" / "hypodom" / "data"


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-n", type=int, default=9, choices=(8, 9))
    args = ap.parse_args()

    DATA_DIR.mkdir(parents=True, exist_ok=True)
    for n in range(8, args.max_n + 1):
        t0 = time.time()
        graphs = generate_connected_graphs(n)
        assert len(graphs) == CONNECTED_COUNTS[n], f"bad class count at n={n}"
        out = DATA_DIR / f"connected_{n}.g6.gz"
        write_graph6_file(str(out), graphs)
        print(f"{out}: {len(graphs)} graphs in {time.time() - t0:.1f}s")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
