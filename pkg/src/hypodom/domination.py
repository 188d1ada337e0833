"""Exact domination numbers, gamma-set enumeration, criticality, bondage.

The solver is branch-and-bound over bitmasks: pick an undominated vertex
with the fewest candidate dominators, branch over its closed neighborhood,
and prune with ceil(undominated / best-remaining-coverage).  All routines
also accept an ``alive`` mask so vertex-deleted subgraphs are evaluated
without rebuilding or relabelling the graph.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import NamedTuple

from .graph import Graph, bits, mask_of, vertex_tuple

DEFAULT_SET_CAP = 10**6


def closed_masks(g: Graph) -> tuple[int, ...]:
    """Closed neighborhoods N[v] of every vertex, as bitmasks."""
    return tuple(row | (1 << v) for v, row in enumerate(g.adj))


# ---------------------------------------------------------------------------
# mask-level engines (shared by this module, eds, hypo and the harness)


def _greedy_upper(sub: list[int], alive: int) -> int:
    und = alive
    size = 0
    while und:
        best_u = -1
        best_c = 0
        for u in bits(alive):
            c = (sub[u] & und).bit_count()
            if c > best_c:
                best_c = c
                best_u = u
        und &= ~sub[best_u]
        size += 1
    return size


def gamma_masked(cov: tuple[int, ...], alive: int) -> int:
    """Domination number of the subgraph induced on ``alive``."""
    if not alive:
        return 0
    sub = [cov[u] & alive if (alive >> u) & 1 else 0 for u in range(len(cov))]
    best = _greedy_upper(sub, alive)
    alive_list = list(bits(alive))

    def rec(und: int, size: int) -> None:
        nonlocal best
        if not und:
            if size < best:
                best = size
            return
        max_cov = 0
        for u in alive_list:
            c = (sub[u] & und).bit_count()
            if c > max_cov:
                max_cov = c
        need = -(-und.bit_count() // max_cov)
        if size + need >= best:
            return
        pick = -1
        pick_c = 1 << 30
        for v in bits(und):
            c = sub[v].bit_count()
            if c < pick_c:
                pick_c = c
                pick = v
        cands = sorted(bits(sub[pick]), key=lambda u: -(sub[u] & und).bit_count())
        for u in cands:
            rec(und & ~sub[u], size + 1)

    rec(alive, 0)
    return best


def has_domset_masked(cov: tuple[int, ...], alive: int, k: int) -> bool:
    """True when the subgraph induced on ``alive`` has a dominating set of size <= k."""
    if not alive:
        return True
    if k <= 0:
        return False
    sub = [cov[u] & alive if (alive >> u) & 1 else 0 for u in range(len(cov))]
    alive_list = list(bits(alive))

    def rec(und: int, left: int) -> bool:
        if not und:
            return True
        if left == 0:
            return False
        max_cov = 0
        for u in alive_list:
            c = (sub[u] & und).bit_count()
            if c > max_cov:
                max_cov = c
        if -(-und.bit_count() // max_cov) > left:
            return False
        pick = -1
        pick_c = 1 << 30
        for v in bits(und):
            c = sub[v].bit_count()
            if c < pick_c:
                pick_c = c
                pick = v
        cands = sorted(bits(sub[pick]), key=lambda u: -(sub[u] & und).bit_count())
        return any(rec(und & ~sub[u], left - 1) for u in cands)

    return rec(alive, k)


def min_domsets_masked(
    cov: tuple[int, ...],
    alive: int,
    *,
    limit: int | None = None,
    collect: bool = True,
) -> tuple[list[int], int]:
    """All minimum dominating sets of the induced subgraph, as masks.

    Enumeration partitions the search space by which candidate dominates
    the branching vertex, with earlier candidates forbidden in later
    branches, so every gamma-set is produced exactly once.  ``limit`` stops
    the walk after that many sets (used for uniqueness tests); the returned
    count is exact when ``limit`` is None.
    """
    if not alive:
        return ([0] if collect else [], 1)
    gamma = gamma_masked(cov, alive)
    sub = [cov[u] & alive if (alive >> u) & 1 else 0 for u in range(len(cov))]
    found: list[int] = []
    count = 0

    def rec(und: int, forb: int, chosen: int, size: int) -> bool:
        nonlocal count
        if not und:
            count += 1
            if collect:
                found.append(chosen)
            return limit is not None and count >= limit
        if size == gamma:
            return False
        allowed_left = gamma - size
        max_cov = 0
        pick = -1
        pick_c = 1 << 30
        for v in bits(und):
            c = (sub[v] & ~forb).bit_count()
            if c < pick_c:
                pick_c = c
                pick = v
        if pick_c == 0:
            return False
        for u in bits(alive & ~forb):
            c = (sub[u] & und).bit_count()
            if c > max_cov:
                max_cov = c
        if -(-und.bit_count() // max_cov) > allowed_left:
            return False
        f = forb
        for u in bits(sub[pick] & ~forb):
            if rec(und & ~sub[u], f, chosen | (1 << u), size + 1):
                return True
            f |= 1 << u
        return False

    rec(alive, 0, 0, 0)
    return found, count


def gamma_set_count_masked(cov: tuple[int, ...], alive: int, limit: int | None = None) -> int:
    return min_domsets_masked(cov, alive, limit=limit, collect=False)[1]


# ---------------------------------------------------------------------------
# public operations


def domination_number(g: Graph) -> int:
    """Minimum cardinality of a dominating set (0 for the order-zero graph)."""
    return gamma_masked(closed_masks(g), g.full_mask)


class GammaSets(NamedTuple):
    sets: tuple[tuple[int, ...], ...]
    count: int


def enumerate_min_dominating_sets(g: Graph, cap: int | None = DEFAULT_SET_CAP) -> GammaSets:
    """All gamma-sets in lexicographic order, truncated at ``cap``.

    The count is always exact, even when the listing is truncated.
    """
    masks, count = min_domsets_masked(closed_masks(g), g.full_mask)
    sets = sorted(vertex_tuple(m) for m in masks)
    if cap is not None:
        sets = sets[:cap]
    return GammaSets(tuple(sets), count)


def gamma_set_count(g: Graph, limit: int | None = None) -> int:
    """Number of gamma-sets; stops early at ``limit`` when given."""
    return gamma_set_count_masked(closed_masks(g), g.full_mask, limit)


def unique_min_dominating_set(g: Graph) -> tuple[int, ...] | None:
    """The gamma-set when there is exactly one, else None."""
    masks, count = min_domsets_masked(closed_masks(g), g.full_mask, limit=2)
    if count == 1:
        return vertex_tuple(masks[0])
    return None


def gamma_critical_vertices(g: Graph) -> tuple[int, ...]:
    """All v with gamma(G - v) < gamma(G)."""
    if g.n < 1:
        raise ValueError("criticality needs at least one vertex")
    cov = closed_masks(g)
    full = g.full_mask
    gamma = gamma_masked(cov, full)
    return tuple(v for v in range(g.n) if has_domset_masked(cov, full ^ (1 << v), gamma - 1))


def is_vc_graph(g: Graph) -> bool:
    """True when every vertex is gamma-critical."""
    if g.n < 1:
        raise ValueError("criticality needs at least one vertex")
    cov = closed_masks(g)
    full = g.full_mask
    gamma = gamma_masked(cov, full)
    return all(has_domset_masked(cov, full ^ (1 << v), gamma - 1) for v in range(g.n))


def bondage_number(g: Graph, cap: int | None = None) -> int | None:
    """Smallest k <= cap such that deleting some k edges raises gamma.

    Searches by increasing cardinality, so a returned value is exact.
    Returns None when no removal of up to ``cap`` edges works (cap defaults
    to the full edge count).  Raises on edgeless input.
    """
    edges = g.edges()
    if not edges:
        raise ValueError("bondage number needs at least one edge")
    cov = closed_masks(g)
    full = g.full_mask
    gamma = gamma_masked(cov, full)
    k_max = len(edges) if cap is None else min(cap, len(edges))
    for k in range(1, k_max + 1):
        for removal in combinations(edges, k):
            rows = list(g.adj)
            for u, v in removal:
                rows[u] &= ~(1 << v)
                rows[v] &= ~(1 << u)
            cov2 = tuple(row | (1 << w) for w, row in enumerate(rows))
            if not has_domset_masked(cov2, full, gamma):
                return k
    return None


def is_bicritical(g: Graph) -> bool:
    """True when removing any 2 vertices lowers gamma."""
    if g.n < 3:
        raise ValueError("bicriticality needs at least 3 vertices")
    cov = closed_masks(g)
    full = g.full_mask
    gamma = gamma_masked(cov, full)
    return all(
        has_domset_masked(cov, full ^ (1 << x) ^ (1 << y), gamma - 1)
        for x, y in combinations(range(g.n), 2)
    )


def is_gamma_ea_critical(g: Graph) -> bool:
    """True when adding any missing edge lowers gamma."""
    if g.m == g.n * (g.n - 1) // 2:
        raise ValueError("edge-addition criticality is vacuous on complete graphs")
    gamma = domination_number(g)
    full = g.full_mask
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if g.has_edge(u, v):
                continue
            rows = list(g.adj)
            rows[u] |= 1 << v
            rows[v] |= 1 << u
            cov2 = tuple(row | (1 << w) for w, row in enumerate(rows))
            if not has_domset_masked(cov2, full, gamma - 1):
                return False
    return True


@dataclass(frozen=True)
class DominationReport:
    gamma: int
    gamma_set_count: int
    gamma_sets: tuple[tuple[int, ...], ...] | None
    unique: bool
    critical_vertices: tuple[int, ...]
    is_vc: bool
    bondage: int | None


def domination_report(
    g: Graph,
    *,
    set_cap: int = DEFAULT_SET_CAP,
    list_sets: bool = True,
    with_bondage: bool = False,
    bondage_cap: int | None = None,
) -> DominationReport:
    """One-stop exact summary of the domination structure of ``g``."""
    sets, count = enumerate_min_dominating_sets(g, set_cap)
    critical = gamma_critical_vertices(g)
    bondage = None
    if with_bondage and g.m > 0:
        bondage = bondage_number(g, bondage_cap)
    return DominationReport(
        gamma=domination_number(g),
        gamma_set_count=count,
        gamma_sets=sets if list_sets else None,
        unique=count == 1,
        critical_vertices=critical,
        is_vc=len(critical) == g.n,
        bondage=bondage,
    )
