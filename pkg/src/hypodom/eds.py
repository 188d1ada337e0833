"""Efficient dominating sets (perfect codes) via exact cover.

A set D is an EDS exactly when the closed neighborhoods {N[d] : d in D}
partition the vertex set, so existence and enumeration reduce to exact
cover: branch on an uncovered vertex with the fewest viable dominators;
a dominator is viable only while its closed neighborhood avoids everything
already covered.  Deterministic, no randomization, so enumeration order is
reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph, bits, vertex_tuple
from .domination import closed_masks


def eds_masked(
    cov: tuple[int, ...],
    alive: int,
    *,
    limit: int | None = None,
    collect: bool = True,
) -> tuple[list[int], int]:
    """Efficient dominating sets of the subgraph induced on ``alive``.

    Returns (masks, count); the count is exact unless ``limit`` stopped the
    walk early.  The order-zero subgraph has exactly one EDS, the empty set.
    """
    if not alive:
        return ([0] if collect else [], 1)
    sub = [cov[u] & alive if (alive >> u) & 1 else 0 for u in range(len(cov))]
    found: list[int] = []
    count = 0

    def rec(covered: int, chosen: int) -> bool:
        nonlocal count
        if covered == alive:
            count += 1
            if collect:
                found.append(chosen)
            return limit is not None and count >= limit
        pick_cands = -1
        pick = -1
        for v in bits(alive & ~covered):
            c = 0
            for u in bits(sub[v]):
                if not (sub[u] & covered):
                    c += 1
            if pick_cands < 0 or c < pick_cands:
                pick_cands = c
                pick = v
                if c == 0:
                    return False
        for u in bits(sub[pick]):
            if not (sub[u] & covered):
                if rec(covered | sub[u], chosen | (1 << u)):
                    return True
        return False

    rec(0, 0)
    return found, count


@dataclass(frozen=True)
class EdsResult:
    exists: bool
    sets: tuple[tuple[int, ...], ...]
    count: int


def find_eds(g: Graph) -> tuple[int, ...] | None:
    """Some efficient dominating set, or None when the graph has none."""
    masks, count = eds_masked(closed_masks(g), g.full_mask, limit=1)
    if count:
        return vertex_tuple(masks[0])
    return None


def has_eds(g: Graph) -> bool:
    return eds_masked(closed_masks(g), g.full_mask, limit=1, collect=False)[1] > 0


def enumerate_eds(g: Graph, cap: int | None = None) -> EdsResult:
    """All efficient dominating sets, lexicographic, with exact count."""
    masks, count = eds_masked(closed_masks(g), g.full_mask)
    sets = sorted(vertex_tuple(m) for m in masks)
    if cap is not None:
        sets = sets[:cap]
    return EdsResult(exists=count > 0, sets=tuple(sets), count=count)


def is_eds_masked(cov: tuple[int, ...], alive: int, d_mask: int) -> bool:
    """Check that ``d_mask`` dominates every vertex of ``alive`` exactly once."""
    if d_mask & ~alive:
        return False
    for v in bits(alive):
        if (cov[v] & d_mask).bit_count() != 1:
            return False
    return True
