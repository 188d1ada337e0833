"""Exhaustive small-graph streams.

Graphs are enumerated up to isomorphism by vertex extension: every graph
on n vertices arises from some graph on n-1 vertices by attaching a new
vertex, so extending every representative by every neighborhood subset and
deduplicating on canonical certificates is complete.  Restricting to
non-empty neighborhoods over connected parents yields exactly the
connected graphs (every connected graph has a non-cut vertex).

Enumeration at n >= 8 is minutes of work, so canonically sorted graph6
streams for connected graphs on 8 and 9 vertices ship as package data
(regenerate with scripts/make_streams.py); loads are validated against the
published isomorphism-class counts.
"""

from __future__ import annotations

import gzip
from functools import lru_cache
from importlib import resources
from typing import Iterable, Iterator

from .graph import Graph, Graph6Error, parse_graph6, write_graph6
from .canon import certificate_rows, graph_from_code

GRAPH_COUNTS = {1: 1, 2: 2, 3: 4, 4: 11, 5: 34, 6: 156, 7: 1044, 8: 12346}
CONNECTED_COUNTS = {1: 1, 2: 1, 3: 2, 4: 6, 5: 21, 6: 112, 7: 853, 8: 11117, 9: 261080}
TREE_COUNTS = {1: 1, 2: 1, 3: 1, 4: 2, 5: 3, 6: 6, 7: 11, 8: 23, 9: 47, 10: 106, 11: 235, 12: 551, 13: 1301}
UNICYCLIC_COUNTS = {3: 1, 4: 2, 5: 5, 6: 13, 7: 33, 8: 89, 9: 240, 10: 657, 11: 1806, 12: 5026, 13: 13999}

_ALL_LIMIT = 8
_CONNECTED_LIMIT = 9
_TREE_LIMIT = 13


def _extend_codes(parents: Iterable[Graph], connected_only: bool) -> list[int]:
    codes: set[int] = set()
    for g in parents:
        n = g.n + 1
        lo = 1 if connected_only else 0
        for nb in range(lo, 1 << g.n):
            adj = tuple(
                row | (((nb >> u) & 1) << g.n) for u, row in enumerate(g.adj)
            ) + (nb,)
            codes.add(certificate_rows(n, adj))
    return sorted(codes)


def generate_all_graphs(n: int) -> tuple[Graph, ...]:
    """All graphs on n vertices up to isomorphism, canonically labelled."""
    if n < 1:
        raise ValueError("need at least one vertex")
    if n == 1:
        return (Graph(1, (0,)),)
    parents = generate_all_graphs(n - 1)
    return tuple(graph_from_code(n, c) for c in _extend_codes(parents, False))


def generate_connected_graphs(n: int) -> tuple[Graph, ...]:
    """All connected graphs on n vertices up to isomorphism."""
    if n < 1:
        raise ValueError("need at least one vertex")
    if n == 1:
        return (Graph(1, (0,)),)
    parents = generate_connected_graphs(n - 1)
    return tuple(graph_from_code(n, c) for c in _extend_codes(parents, True))


@lru_cache(maxsize=None)
def all_graphs(n: int) -> tuple[Graph, ...]:
    """All graphs on n <= 8 vertices up to isomorphism (guarded)."""
    if not 1 <= n <= _ALL_LIMIT:
        raise ValueError(f"all-graph streams are generated for 1 <= n <= {_ALL_LIMIT}")
    out = generate_all_graphs(n)
    if len(out) != GRAPH_COUNTS[n]:
        raise RuntimeError(f"enumeration bug: {len(out)} classes at order {n}")
    return out


@lru_cache(maxsize=None)
def connected_graphs(n: int) -> tuple[Graph, ...]:
    """All connected graphs on n <= 9 vertices up to isomorphism.

    Orders 8 and 9 come from the packaged streams when present; otherwise
    they are regenerated on the spot (slow for order 9).
    """
    if not 1 <= n <= _CONNECTED_LIMIT:
        raise ValueError(f"connected streams are available for 1 <= n <= {_CONNECTED_LIMIT}")
    if n >= 8:
        lines = _packaged_lines(f"connected_{n}.g6.gz")
        if lines is not None:
            out = tuple(parse_graph6(s) for s in lines)
        else:
            out = generate_connected_graphs(n)
    else:
        out = generate_connected_graphs(n)
    if len(out) != CONNECTED_COUNTS[n]:
        raise RuntimeError(f"connected stream at order {n} has {len(out)} classes")
    return out


def connected_graphs_upto(n: int) -> Iterator[Graph]:
    for k in range(1, n + 1):
        yield from connected_graphs(k)


@lru_cache(maxsize=None)
def trees(n: int) -> tuple[Graph, ...]:
    """All trees on n vertices up to isomorphism (leaf extension)."""
    if not 1 <= n <= _TREE_LIMIT:
        raise ValueError(f"tree streams are available for 1 <= n <= {_TREE_LIMIT}")
    if n == 1:
        return (Graph(1, (0,)),)
    codes: set[int] = set()
    for g in trees(n - 1):
        for v in range(g.n):
            adj = tuple(
                row | ((1 if u == v else 0) << g.n) for u, row in enumerate(g.adj)
            ) + (1 << v,)
            codes.add(certificate_rows(n, adj))
    out = tuple(graph_from_code(n, c) for c in sorted(codes))
    if len(out) != TREE_COUNTS[n]:
        raise RuntimeError(f"tree stream at order {n} has {len(out)} classes")
    return out


@lru_cache(maxsize=None)
def unicyclic_graphs(n: int) -> tuple[Graph, ...]:
    """All unicyclic graphs on n vertices (tree plus one extra edge)."""
    if not 3 <= n <= _TREE_LIMIT:
        raise ValueError(f"unicyclic streams are available for 3 <= n <= {_TREE_LIMIT}")
    codes: set[int] = set()
    for t in trees(n):
        for u in range(n):
            for v in range(u + 1, n):
                if (t.adj[u] >> v) & 1:
                    continue
                adj = list(t.adj)
                adj[u] |= 1 << v
                adj[v] |= 1 << u
                codes.add(certificate_rows(n, tuple(adj)))
    out = tuple(graph_from_code(n, c) for c in sorted(codes))
    if len(out) != UNICYCLIC_COUNTS[n]:
        raise RuntimeError(f"unicyclic stream at order {n} has {len(out)} classes")
    return out


# ---------------------------------------------------------------------------
# graph6 stream I/O


def _packaged_lines(name: str) -> list[str] | None:
    try:
        blob = resources.files("hypodom").joinpath("data").joinpath(name).read_bytes()
    except (FileNotFoundError, ModuleNotFoundError):
        return None
    return gzip.decompress(blob).decode("ascii").splitlines()


def iter_graph6(lines: Iterable[str]) -> Iterator[tuple[int, Graph | Graph6Error]]:
    """Parse a graph6 stream; yields (1-based line number, Graph or error)."""
    for lineno, line in enumerate(lines, start=1):
        s = line.strip()
        if not s:
            continue
        try:
            yield lineno, parse_graph6(s)
        except Graph6Error as exc:
            yield lineno, exc


def read_graph6_file(path: str) -> list[Graph]:
    """Strictly parse a whole graph6 file (raises on any bad line)."""
    opener = gzip.open if path.endswith(".gz") else open
    with opener(path, "rt") as fh:
        out = []
        for lineno, item in iter_graph6(fh):
            if isinstance(item, Graph6Error):
                raise Graph6Error(f"line {lineno}: {item}")
            out.append(item)
    return out


def write_graph6_file(path: str, graphs: Iterable[Graph]) -> int:
    opener = gzip.open if path.endswith(".gz") else open
    count = 0
    with opener(path, "wt") as fh:
        for g in graphs:
            fh.write(write_graph6(g) + "\n")
            count += 1
    return count
