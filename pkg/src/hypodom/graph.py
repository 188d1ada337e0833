"""Immutable simple graphs over bitmask adjacency rows.

Vertices are the integers ``0..n-1``.  A set of vertices is an ``int``
bitmask (bit ``v`` set means vertex ``v`` is in the set), so neighborhood
unions, intersections and cardinalities are single machine operations for
graphs up to word size and stay exact (Python ints) beyond it.

Everything here is a value: constructors return new ``Graph`` objects and
nothing is ever mutated, so graphs can be shared freely across threads.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator


def bits(mask: int) -> Iterator[int]:
    """Yield the positions of the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    """Bitmask with exactly the given vertex positions set."""
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def vertex_tuple(mask: int) -> tuple[int, ...]:
    """Sorted tuple of the vertices in a bitmask."""
    return tuple(bits(mask))


@dataclass(frozen=True)
class Graph:
    """Finite simple undirected graph.

    ``adj[v]`` is the open neighborhood of ``v`` as a bitmask.  Invariants
    (no loops, symmetry) are guaranteed by the module's constructors;
    ``__post_init__`` performs the cheap checks only.
    """

    n: int
    adj: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError("vertex count must be nonnegative")
        if len(self.adj) != self.n:
            raise ValueError("adjacency length does not match vertex count")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise ValueError(f"neighbor of {v} out of range")
            if (row >> v) & 1:
                raise ValueError(f"loop at vertex {v}")

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    @property
    def m(self) -> int:
        """Number of edges."""
        return sum(row.bit_count() for row in self.adj) // 2

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def neighbors(self, v: int) -> tuple[int, ...]:
        return vertex_tuple(self.adj[v])

    def closed(self, v: int) -> int:
        """Closed neighborhood N[v] as a bitmask."""
        return self.adj[v] | (1 << v)

    def has_edge(self, u: int, v: int) -> bool:
        return u != v and bool((self.adj[u] >> v) & 1)

    def edges(self) -> tuple[tuple[int, int], ...]:
        """All edges as (u, v) with u < v, lexicographically sorted."""
        out = []
        for u in range(self.n):
            row = self.adj[u] >> (u + 1)
            for k in bits(row):
                out.append((u, u + 1 + k))
        return tuple(out)

    def degree_sequence(self) -> tuple[int, ...]:
        return tuple(sorted(row.bit_count() for row in self.adj))

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        return f"Graph(n={self.n}, edges={list(self.edges())})"


def _check_vertex(g: Graph, v: int) -> None:
    if not 0 <= v < g.n:
        raise ValueError(f"vertex {v} out of range for order {g.n}")


# ---------------------------------------------------------------------------
# constructors


def from_edges(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Graph on ``n`` vertices with the given edges (duplicates collapsed)."""
    rows = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"edge ({u},{v}) out of range for order {n}")
        if u == v:
            raise ValueError(f"loop edge ({u},{v}) not allowed")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, tuple(rows))


def empty_graph(n: int) -> Graph:
    return Graph(n, (0,) * n)


def complete_graph(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph(n, tuple(full ^ (1 << v) for v in range(n)))


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycles need at least 3 vertices")
    return from_edges(n, [(v, (v + 1) % n) for v in range(n)])


def path(n: int) -> Graph:
    if n < 1:
        raise ValueError("paths need at least 1 vertex")
    return from_edges(n, [(v, v + 1) for v in range(n - 1)])


def complete_minus_matching(n: int) -> Graph:
    """K_n minus a perfect matching; ``n`` must be even and at least 4."""
    if n < 4 or n % 2:
        raise ValueError("complete-minus-matching needs even order >= 4")
    g = complete_graph(n)
    for v in range(0, n, 2):
        g = delete_edge(g, v, v + 1)
    return g


@dataclass(frozen=True)
class CirculantSpec:
    """Order ``n`` plus strictly increasing connection integers below (n+1)/2."""

    n: int
    jumps: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError("circulant order must be positive")
        prev = 0
        for s in self.jumps:
            if s <= prev:
                raise ValueError("connection integers must be strictly increasing and positive")
            if 2 * s > self.n:
                raise ValueError(f"connection integer {s} not below ({self.n}+1)/2")
            prev = s


def circulant(n: int, jumps: Iterable[int]) -> Graph:
    """Circulant graph: vertex i adjacent to i +- s (mod n) for each jump s."""
    spec = CirculantSpec(n, tuple(jumps))
    rows = [0] * n
    for i in range(n):
        for s in spec.jumps:
            rows[i] |= 1 << ((i + s) % n)
            rows[i] |= 1 << ((i - s) % n)
        rows[i] &= ~(1 << i)
    return Graph(n, tuple(rows))


# ---------------------------------------------------------------------------
# graph operations


def complement(g: Graph) -> Graph:
    full = g.full_mask
    return Graph(g.n, tuple((full ^ row) & ~(1 << v) for v, row in enumerate(g.adj)))


def join(g: Graph, h: Graph) -> Graph:
    """Disjoint union of g and h plus all edges between them; h shifted by g.n."""
    gmaskh = ((1 << h.n) - 1) << g.n
    rows = [g.adj[v] | gmaskh for v in range(g.n)]
    gmask = (1 << g.n) - 1
    rows += [(h.adj[v] << g.n) | gmask for v in range(h.n)]
    return Graph(g.n + h.n, tuple(rows))


def disjoint_union(g: Graph, h: Graph) -> Graph:
    rows = list(g.adj) + [row << g.n for row in h.adj]
    return Graph(g.n + h.n, tuple(rows))


def corona(h: Graph) -> Graph:
    """Attach one pendant leaf to every vertex; leaf of vertex i is h.n + i."""
    n = h.n
    rows = [h.adj[v] | (1 << (n + v)) for v in range(n)]
    rows += [1 << v for v in range(n)]
    return Graph(2 * n, tuple(rows))


def coalescence(g: Graph, u: int, h: Graph, v: int) -> Graph:
    """Identify vertex ``u`` of g with vertex ``v`` of h.

    The merged vertex keeps the label ``u``; the remaining vertices of h are
    appended after g in their original relative order.
    """
    _check_vertex(g, u)
    _check_vertex(h, v)
    n = g.n + h.n - 1

    def relabel(w: int) -> int:
        if w == v:
            return u
        return g.n + w - (1 if w > v else 0)

    edges = list(g.edges())
    edges += [(relabel(a), relabel(b)) for a, b in h.edges()]
    return from_edges(n, edges)


def delete_vertex(g: Graph, v: int) -> Graph:
    """Remove ``v``; remaining vertices are compacted preserving relative order."""
    _check_vertex(g, v)
    low = (1 << v) - 1
    rows = []
    for u in range(g.n):
        if u == v:
            continue
        row = g.adj[u] & ~(1 << v)
        rows.append((row & low) | ((row >> (v + 1)) << v))
    return Graph(g.n - 1, tuple(rows))


def delete_edge(g: Graph, u: int, v: int) -> Graph:
    _check_vertex(g, u)
    _check_vertex(g, v)
    if not g.has_edge(u, v):
        raise ValueError(f"edge ({u},{v}) not present")
    rows = list(g.adj)
    rows[u] &= ~(1 << v)
    rows[v] &= ~(1 << u)
    return Graph(g.n, tuple(rows))


def add_edge(g: Graph, u: int, v: int) -> Graph:
    _check_vertex(g, u)
    _check_vertex(g, v)
    if u == v:
        raise ValueError("loop edge not allowed")
    if g.has_edge(u, v):
        raise ValueError(f"edge ({u},{v}) already present")
    rows = list(g.adj)
    rows[u] |= 1 << v
    rows[v] |= 1 << u
    return Graph(g.n, tuple(rows))


# ---------------------------------------------------------------------------
# elementary predicates and invariants


def closed_neighborhood(g: Graph, v: int) -> tuple[int, ...]:
    _check_vertex(g, v)
    return vertex_tuple(g.closed(v))


def min_degree(g: Graph) -> int:
    return min((row.bit_count() for row in g.adj), default=0)


def max_degree(g: Graph) -> int:
    return max((row.bit_count() for row in g.adj), default=0)


def is_regular(g: Graph) -> bool:
    return min_degree(g) == max_degree(g)


def _component_mask(adj: tuple[int, ...], alive: int, start: int) -> int:
    comp = 1 << start
    frontier = comp
    while frontier:
        grown = 0
        for v in bits(frontier):
            grown |= adj[v]
        frontier = grown & alive & ~comp
        comp |= frontier
    return comp


def component_masks(g: Graph, alive: int | None = None) -> tuple[int, ...]:
    """Connected components (as bitmasks) of the subgraph induced on ``alive``."""
    alive = g.full_mask if alive is None else alive
    out = []
    left = alive
    while left:
        comp = _component_mask(g.adj, alive, (left & -left).bit_length() - 1)
        out.append(comp)
        left &= ~comp
    return tuple(out)


def is_connected(g: Graph, alive: int | None = None) -> bool:
    """True when the induced subgraph has at most one component."""
    alive = g.full_mask if alive is None else alive
    if not alive:
        return True
    return _component_mask(g.adj, alive, (alive & -alive).bit_length() - 1) == alive


def has_cut_vertex(g: Graph) -> bool:
    """True when deleting some vertex increases the number of components."""
    base = len(component_masks(g))
    full = g.full_mask
    for v in range(g.n):
        if len(component_masks(g, full ^ (1 << v))) > base:
            return True
    return False


def is_2_edge_connected(g: Graph) -> bool:
    """Connected, at least 2 vertices, and no bridge."""
    if g.n < 2 or not is_connected(g):
        return False
    for u, v in g.edges():
        rows = list(g.adj)
        rows[u] &= ~(1 << v)
        rows[v] &= ~(1 << u)
        start = 0
        if _component_mask(tuple(rows), g.full_mask, start) != g.full_mask:
            return False
    return True


def is_tree(g: Graph) -> bool:
    return g.n >= 1 and is_connected(g) and g.m == g.n - 1


def is_unicyclic(g: Graph) -> bool:
    return is_connected(g) and g.m == g.n


# ---------------------------------------------------------------------------
# graph6 interchange


class Graph6Error(ValueError):
    """Raised for malformed graph6 text."""


def parse_graph6(text: str) -> Graph:
    """Decode one header-less graph6 line (McKay encoding)."""
    s = text.strip()
    if not s:
        raise Graph6Error("empty graph6 line")
    data = []
    for c in s:
        b = ord(c) - 63
        if not 0 <= b <= 63:
            raise Graph6Error(f"byte {c!r} outside graph6 range")
        data.append(b)
    if data[0] < 63:
        n = data[0]
        idx = 1
    elif len(data) >= 2 and data[1] == 63:
        if len(data) < 8:
            raise Graph6Error("truncated extended size header")
        n = 0
        for b in data[2:8]:
            n = (n << 6) | b
        if n <= 258047:
            raise Graph6Error("non-minimal size encoding")
        idx = 8
    else:
        if len(data) < 4:
            raise Graph6Error("truncated size header")
        n = (data[1] << 12) | (data[2] << 6) | data[3]
        if n <= 62:
            raise Graph6Error("non-minimal size encoding")
        idx = 4

    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    if len(data) - idx != nbytes:
        raise Graph6Error("bit payload of wrong length")
    rows = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            if (data[idx + (k // 6)] >> (5 - k % 6)) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k += 1
    pad = nbytes * 6 - nbits
    if pad and data[-1] & ((1 << pad) - 1):
        raise Graph6Error("nonzero padding bits")
    return Graph(n, tuple(rows))


def write_graph6(g: Graph) -> str:
    """Encode a graph as one graph6 line (no trailing newline)."""
    n = g.n
    if n <= 62:
        head = [n]
    elif n <= 258047:
        head = [63, (n >> 12) & 63, (n >> 6) & 63, n & 63]
    else:
        head = [63, 63] + [(n >> s) & 63 for s in (30, 24, 18, 12, 6, 0)]
    out = [chr(b + 63) for b in head]
    buf = 0
    nb = 0
    for j in range(1, n):
        col = g.adj[j]
        for i in range(j):
            buf = (buf << 1) | ((col >> i) & 1)
            nb += 1
            if nb == 6:
                out.append(chr(buf + 63))
                buf = 0
                nb = 0
    if nb:
        out.append(chr((buf << (6 - nb)) + 63))
    return "".join(out)
