"""Shared fixtures and independent brute-force oracles.

The oracles here are deliberately naive (plain subset scans via
itertools.combinations) so expected values in the tests are computed by a
path structurally independent of the solvers they check.
"""

from __future__ import annotations

from itertools import combinations

import pytest
from hypothesis import strategies as st

from hypodom.graph import Graph, bits, from_edges


def random_graphs(max_n: int = 8):
    """Hypothesis strategy: a graph drawn from order + edge-mask integer."""

    def build(n: int, seed: int) -> Graph:
        edges = []
        k = 0
        for u in range(n):
            for v in range(u + 1, n):
                if (seed >> k) & 1:
                    edges.append((u, v))
                k += 1
        return from_edges(n, edges)

    return st.integers(1, max_n).flatmap(
        lambda n: st.builds(build, st.just(n), st.integers(0, (1 << (n * (n - 1) // 2)) - 1))
    )


# ---------------------------------------------------------------------------
# oracles


def oracle_gamma(g: Graph) -> int:
    """Minimum dominating set size by increasing-cardinality subset scan."""
    cov = [g.closed(v) for v in range(g.n)]
    full = g.full_mask
    for k in range(g.n + 1):
        for sub in combinations(range(g.n), k):
            m = 0
            for v in sub:
                m |= cov[v]
            if m == full:
                return k
    raise AssertionError


def oracle_gamma_sets(g: Graph) -> list[tuple[int, ...]]:
    """All minimum dominating sets, lexicographically sorted."""
    cov = [g.closed(v) for v in range(g.n)]
    full = g.full_mask
    gamma = oracle_gamma(g)
    out = []
    for sub in combinations(range(g.n), gamma):
        m = 0
        for v in sub:
            m |= cov[v]
        if m == full:
            out.append(sub)
    return sorted(out)


def oracle_eds_sets(g: Graph) -> list[tuple[int, ...]]:
    """All efficient dominating sets by scanning every vertex subset."""
    cov = [g.closed(v) for v in range(g.n)]
    out = []
    for mask in range(1 << g.n):
        vs = list(bits(mask))
        covered = 0
        ok = True
        for v in vs:
            if covered & cov[v]:
                ok = False
                break
            covered |= cov[v]
        if ok and covered == g.full_mask:
            out.append(tuple(vs))
    return sorted(out)


def oracle_bondage(g: Graph, k_max: int | None = None) -> int | None:
    """Smallest edge-removal count raising gamma, by exhaustive scan."""
    edges = g.edges()
    gamma = oracle_gamma(g)
    k_max = len(edges) if k_max is None else min(k_max, len(edges))
    for k in range(1, k_max + 1):
        for removal in combinations(edges, k):
            h = g
            rows = list(g.adj)
            for u, v in removal:
                rows[u] &= ~(1 << v)
                rows[v] &= ~(1 << u)
            h = Graph(g.n, tuple(rows))
            if oracle_gamma(h) > gamma:
                return k
    return None


# ---------------------------------------------------------------------------
# named graphs


@pytest.fixture
def bull() -> Graph:
    """Triangle 0-1-2 with pendant leaves 3 (at 0) and 4 (at 1)."""
    return from_edges(5, [(0, 1), (1, 2), (2, 0), (0, 3), (1, 4)])


@pytest.fixture
def k2() -> Graph:
    return from_edges(2, [(0, 1)])
