"""Canonical labelings and isomorphism tests for small graphs.

Certificates come from individualization-refinement: stable-partition the
vertices by iterated neighbor-count signatures, branch on the vertices of
the first non-trivial cell, and keep the minimum adjacency encoding over
all discrete leaves.  Cells whose vertices are mutually interchangeable
(identical rows outside the cell, complete or empty inside) never need
branching, which keeps complete / empty / multipartite-like graphs cheap.

Adequate and fast for the orders this toolkit works at (n <= ~13); not a
general-purpose isomorphism service.
"""

from __future__ import annotations

from functools import lru_cache

from .graph import Graph, bits, complement, write_graph6


def _refine(adj: tuple[int, ...], cells: list[int]) -> list[int]:
    while True:
        new_cells: list[int] = []
        changed = False
        for cell in cells:
            if cell & (cell - 1) == 0:
                new_cells.append(cell)
                continue
            groups: dict[tuple[int, ...], int] = {}
            for v in bits(cell):
                row = adj[v]
                sig = tuple((row & c).bit_count() for c in cells)
                groups[sig] = groups.get(sig, 0) | (1 << v)
            if len(groups) == 1:
                new_cells.append(cell)
            else:
                changed = True
                for sig in sorted(groups):
                    new_cells.append(groups[sig])
        if not changed:
            return new_cells
        cells = new_cells


def _interchangeable(adj: tuple[int, ...], cell: int) -> bool:
    # Identical rows outside the cell, and the induced cell complete or empty:
    # then any within-cell ordering produces the same adjacency encoding.
    vs = list(bits(cell))
    first = vs[0]
    outside = adj[first] & ~cell
    inside = adj[first] & cell
    if inside == 0:
        want_complete = False
    elif inside == cell ^ (1 << first):
        want_complete = True
    else:
        return False
    for v in vs[1:]:
        if adj[v] & ~cell != outside:
            return False
        inside = adj[v] & cell
        if want_complete:
            if inside != cell ^ (1 << v):
                return False
        elif inside:
            return False
    return True


def _encode(adj: tuple[int, ...], order: list[int]) -> int:
    code = 0
    for j in range(1, len(order)):
        col = adj[order[j]]
        for i in range(j):
            code = (code << 1) | ((col >> order[i]) & 1)
    return code


def certificate_rows(n: int, adj: tuple[int, ...]) -> int:
    """Canonical upper-triangle code of a raw adjacency tuple."""
    if n <= 1:
        return 0
    best: list[int | None] = [None]

    def rec(cells: list[int]) -> None:
        cells = _refine(adj, cells)
        target = -1
        for i, c in enumerate(cells):
            if c & (c - 1) and not _interchangeable(adj, c):
                target = i
                break
        if target < 0:
            order = [v for c in cells for v in bits(c)]
            code = _encode(adj, order)
            if best[0] is None or code < best[0]:
                best[0] = code
            return
        cell = cells[target]
        tail = cells[target + 1 :]
        head = cells[:target]
        for v in bits(cell):
            rec(head + [1 << v, cell ^ (1 << v)] + tail)

    rec([(1 << n) - 1])
    assert best[0] is not None
    return best[0]


def graph_from_code(n: int, code: int) -> Graph:
    """Rebuild a graph from its upper-triangle code (inverse of the encoding)."""
    rows = [0] * n
    nbits = n * (n - 1) // 2
    k = nbits - 1
    for j in range(1, n):
        for i in range(j):
            if (code >> k) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k -= 1
    return Graph(n, tuple(rows))


@lru_cache(maxsize=65536)
def certificate(g: Graph) -> tuple[int, int]:
    """Complete isomorphism invariant (order, canonical code)."""
    return g.n, certificate_rows(g.n, g.adj)


def canonical_graph(g: Graph) -> Graph:
    """Canonically labelled copy of ``g``."""
    n, code = certificate(g)
    return graph_from_code(n, code)


def canonical_g6(g: Graph) -> str:
    return write_graph6(canonical_graph(g))


def is_isomorphic(g: Graph, h: Graph) -> bool:
    return certificate(g) == certificate(h)


def is_self_complementary(g: Graph) -> bool:
    return certificate(g) == certificate(complement(g))
