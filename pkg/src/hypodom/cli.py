"""Command-line front end: analyze graph streams, generate families,
verify claims, and search open problems.  All output is JSON-lines so the
subcommands compose with shell tooling; input order is always preserved,
including under --jobs parallelism.

Exit codes: 0 success, 1 any claim failure, 2 usage or format errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from multiprocessing import Pool
from typing import Iterable, Iterator, TextIO

from .graph import (
    Graph,
    Graph6Error,
    circulant,
    coalescence,
    complete_graph,
    complete_minus_matching,
    corona,
    cycle,
    from_edges,
    max_degree,
    min_degree,
    parse_graph6,
    path,
    write_graph6,
)
from .canon import canonical_g6
from .domination import (
    bondage_number,
    domination_number,
    enumerate_min_dominating_sets,
)
from .eds import has_eds
from .hypo import classify
from .harness import CLAIMS, PROBLEMS, search_open_problems, verify_claim


def _out_stream(args) -> TextIO:
    if args.output:
        return open(args.output, "w")
    return sys.stdout


def _input_lines(paths: list[str]) -> Iterator[str]:
    if not paths:
        yield from sys.stdin
        return
    for p in paths:
        with open(p) as fh:
            yield from fh


def _read_edgelist(lines: Iterable[str]) -> Graph:
    """Edge-list text format: first line "n m", then m lines "u v"."""
    rows = [ln.split() for ln in lines if ln.strip()]
    if not rows or len(rows[0]) != 2:
        raise ValueError("edge list must start with a line 'n m'")
    n, m = map(int, rows[0])
    if len(rows) - 1 != m:
        raise ValueError(f"expected {m} edge lines, found {len(rows) - 1}")
    return from_edges(n, [(int(u), int(v)) for u, v in rows[1:]])


# ---------------------------------------------------------------------------
# analyze


def _analyze_graph(g: Graph, opts: dict) -> dict:
    record: dict = {
        "g6": canonical_g6(g),
        "n": g.n,
        "m": g.m,
        "delta": min_degree(g),
        "Delta": max_degree(g),
    }
    sets, count = enumerate_min_dominating_sets(g, opts.get("cap_gamma_sets"))
    report = classify(g)
    record["gamma"] = domination_number(g)
    record["gamma_set_count"] = count
    if opts.get("cap_gamma_sets"):
        record["gamma_sets"] = [list(s) for s in sets]
    record["has_eds"] = has_eds(g)
    classes = []
    if report.is_ed:
        classes.append("ED")
    if report.is_ud:
        classes.append("UD")
    if report.is_hypo_ed:
        classes.append("hypo-ED")
    if report.is_hypo_ud:
        classes.append("hypo-UD")
    record["classes"] = classes
    if opts.get("bondage_cap") is not None and g.m > 0:
        record["bondage"] = bondage_number(g, cap=opts["bondage_cap"])
    return record


def _analyze_line(task: tuple[int, str, dict]) -> dict:
    lineno, line, opts = task
    try:
        g = parse_graph6(line)
    except Graph6Error as exc:
        return {"error": f"malformed graph6: {exc}", "line": lineno}
    if g.n > opts["max_n"]:
        return {"error": f"order {g.n} above --max-n guard {opts['max_n']}", "line": lineno}
    record = _analyze_graph(g, opts)
    record["input"] = lineno
    return record


def _cmd_analyze(args) -> int:
    opts = {
        "cap_gamma_sets": args.cap_gamma_sets,
        "bondage_cap": args.bondage_cap,
        "max_n": args.max_n,
    }
    out = _out_stream(args)
    had_errors = False
    if args.format == "edgelist":
        try:
            g = _read_edgelist(_input_lines(args.paths))
            record = _analyze_graph(g, opts)
            record["input"] = 1
            out.write(json.dumps(record) + "\n")
        except (ValueError, OSError) as exc:
            out.write(json.dumps({"error": str(exc), "line": 1}) + "\n")
            had_errors = True
    else:
        tasks = (
            (lineno, line, opts)
            for lineno, line in enumerate(_input_lines(args.paths), start=1)
            if line.strip()
        )
        if args.jobs > 1:
            with Pool(args.jobs) as pool:
                records = pool.imap(_analyze_line, tasks, chunksize=16)
                for record in records:
                    had_errors |= "error" in record
                    out.write(json.dumps(record) + "\n")
        else:
            for task in tasks:
                record = _analyze_line(task)
                had_errors |= "error" in record
                out.write(json.dumps(record) + "\n")
    if out is not sys.stdout:
        out.close()
    return 2 if had_errors else 0


# ---------------------------------------------------------------------------
# gen


def _gen_instances(args) -> list[Graph]:
    family = args.family
    if family == "cycle":
        return [cycle(n) for n in args.n]
    if family == "path":
        return [path(n) for n in args.n]
    if family == "complete":
        return [complete_graph(n) for n in args.n]
    if family == "kminusm":
        return [complete_minus_matching(n) for n in args.n]
    if family == "circulant":
        if not args.n or not args.jumps:
            raise ValueError("circulant needs --n and --jumps")
        return [circulant(n, args.jumps) for n in args.n]
    if family == "extr1":
        return [
            circulant(t * (2 * k + 1) - 1, range(1, k + 1))
            for k in args.k
            for t in args.t
        ]
    if family == "extr2":
        return [
            circulant(8 * k + 5, list(range(1, k + 1)) + list(range(3 * k + 2, 4 * k + 3)))
            for k in args.k
        ]
    if family == "extremall":
        if not args.n or not args.k:
            raise ValueError("extremall needs --n and --k")
        return [circulant(n, range(1, k + 1)) for k in args.k for n in args.n]
    if family == "corona":
        bases = {"cycle": cycle, "path": path, "complete": complete_graph}
        base = bases[args.base]
        return [corona(base(n)) for n in args.n]
    if family == "coalescence":
        out = []
        for k in args.k:
            for l in args.l:
                out.append(coalescence(cycle(3 * k + 1), 0, cycle(3 * l + 1), 0))
        return out
    raise ValueError(f"unknown family {family!r}")


def _cmd_gen(args) -> int:
    try:
        graphs = _gen_instances(args)
    except (ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    out = _out_stream(args)
    for g in graphs:
        out.write(write_graph6(g) + "\n")
    if out is not sys.stdout:
        out.close()
    return 0


# ---------------------------------------------------------------------------
# verify / search


def _parse_params(pairs: list[str]) -> dict:
    params = {}
    for pair in pairs:
        if "=" not in pair:
            raise ValueError(f"--param expects KEY=INT, got {pair!r}")
        key, _, value = pair.partition("=")
        params[key] = int(value)
    return params


def _run_claim(task: tuple[str, dict, list[Graph] | None]) -> dict:
    claim_id, params, stream = task
    return verify_claim(claim_id, stream=stream, **params).to_json_dict()


def _cmd_verify(args) -> int:
    claim_ids = list(CLAIMS) if args.claims == ["all"] else args.claims
    unknown = [c for c in claim_ids if c not in CLAIMS]
    if unknown:
        print(f"error: unknown claims {unknown}", file=sys.stderr)
        return 2
    try:
        overrides = _parse_params(args.param)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2

    stream = None
    if args.stream:
        try:
            stream = [parse_graph6(s) for s in _input_lines([args.stream]) if s.strip()]
        except Graph6Error as exc:
            print(f"error: bad stream: {exc}", file=sys.stderr)
            return 2

    tasks = []
    for cid in claim_ids:
        spec = CLAIMS[cid]
        params = {k: v for k, v in overrides.items() if k in spec.defaults}
        if args.max_n is not None and "max_n" in spec.defaults:
            params.setdefault("max_n", args.max_n)
        tasks.append((cid, params, stream if spec.uses_stream else None))

    try:
        if args.jobs > 1:
            with Pool(args.jobs) as pool:
                results = pool.map(_run_claim, tasks)
        else:
            results = [_run_claim(t) for t in tasks]
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2

    out = _out_stream(args)
    failed = False
    for result in results:
        failed |= bool(result["failures"])
        out.write(json.dumps(result) + "\n")
    if out is not sys.stdout:
        out.close()
    return 1 if failed else 0


def _cmd_search(args) -> int:
    if args.problem not in PROBLEMS:
        print(f"error: unknown problem {args.problem!r}", file=sys.stderr)
        return 2
    graphs = []
    for lineno, line in enumerate(_input_lines(args.paths), start=1):
        if not line.strip():
            continue
        try:
            graphs.append(parse_graph6(line))
        except Graph6Error as exc:
            print(f"error: line {lineno}: {exc}", file=sys.stderr)
            return 2
    report = search_open_problems(args.problem, graphs)
    out = _out_stream(args)
    for w in report.witnesses:
        out.write(json.dumps({"problem": args.problem, "g6": w.g6, "detail": w.detail}) + "\n")
    if report.table is not None:
        for row in report.table:
            out.write(json.dumps({"problem": args.problem, **row}) + "\n")
    if out is not sys.stdout:
        out.close()
    return 0


# ---------------------------------------------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="hypodom", description=__doc__)
    sub = ap.add_subparsers(dest="command", required=True)

    pa = sub.add_parser("analyze", help="per-graph exact analysis of a graph6 stream")
    pa.add_argument("paths", nargs="*", help="graph6 files (stdin when omitted)")
    pa.add_argument("--format", choices=("g6", "edgelist"), default="g6")
    pa.add_argument("--jobs", type=int, default=1)
    pa.add_argument("--cap-gamma-sets", type=int, default=None,
                    help="also list up to this many gamma-sets per graph")
    pa.add_argument("--bondage-cap", type=int, default=None,
                    help="compute bondage numbers, searching up to this many edges")
    pa.add_argument("--max-n", type=int, default=32, help="order guard per input graph")
    pa.add_argument("--output", default=None)
    pa.set_defaults(fn=_cmd_analyze)

    pg = sub.add_parser("gen", help="generate graph families as graph6 lines")
    pg.add_argument("family", choices=(
        "cycle", "path", "complete", "kminusm", "circulant",
        "extr1", "extr2", "extremall", "corona", "coalescence"))
    pg.add_argument("--n", type=int, nargs="+", default=[])
    pg.add_argument("--k", type=int, nargs="+", default=[])
    pg.add_argument("--t", type=int, nargs="+", default=[])
    pg.add_argument("--l", type=int, nargs="+", default=[])
    pg.add_argument("--jumps", type=int, nargs="+", default=[])
    pg.add_argument("--base", choices=("cycle", "path", "complete"), default="cycle")
    pg.add_argument("--output", default=None)
    pg.set_defaults(fn=_cmd_gen)

    pv = sub.add_parser("verify", help="machine-check registered claims")
    pv.add_argument("claims", nargs="+", help="claim ids, or 'all'")
    pv.add_argument("--max-n", type=int, default=None, help="stream order bound")
    pv.add_argument("--param", action="append", default=[], metavar="KEY=INT")
    pv.add_argument("--stream", default=None, help="graph6 file replacing built-in streams")
    pv.add_argument("--jobs", type=int, default=1)
    pv.add_argument("--output", default=None)
    pv.set_defaults(fn=_cmd_verify)

    ps = sub.add_parser("search", help="search a graph6 stream for open-problem witnesses")
    ps.add_argument("problem")
    ps.add_argument("paths", nargs="*", help="graph6 files (stdin when omitted)")
    ps.add_argument("--output", default=None)
    ps.set_defaults(fn=_cmd_search)
    return ap


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    return args.fn(args)


if __name__ == "__main__":
    raise SystemExit(main())
