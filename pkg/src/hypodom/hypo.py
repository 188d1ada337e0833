"""Classify graphs into the ED / UD / hypo-ED / hypo-UD classes.

A graph is hypo-ED when it has no efficient dominating set but every
single-vertex deletion does, and hypo-UD when it has at least two minimum
dominating sets but every single-vertex deletion has exactly one.  The
order-zero graph (arising from deletions at n = 1) counts as vacuously
having both properties.

``check_minusone``, ``check_ud_bounds`` and ``check_ed_structure`` evaluate
the structural statements that hold for these classes and report each as an
independent pass/fail entry so exhaustive harness runs can aggregate them.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import (
    Graph,
    bits,
    is_2_edge_connected,
    is_connected,
    is_regular,
    mask_of,
    max_degree,
    min_degree,
    vertex_tuple,
)
from .domination import (
    bondage_number,
    closed_masks,
    gamma_masked,
    gamma_set_count_masked,
    has_domset_masked,
    min_domsets_masked,
)
from .eds import eds_masked, is_eds_masked


@dataclass(frozen=True)
class PerVertexRecord:
    vertex: int
    gamma_minus_v: int
    eds_count_minus_v: int
    gamma_set_count_minus_v: int


@dataclass(frozen=True)
class HypoReport:
    is_ed: bool
    is_ud: bool
    is_hypo_ed: bool
    is_hypo_ud: bool
    per_vertex: tuple[PerVertexRecord, ...]
    failing_vertex: int | None


def classify(g: Graph) -> HypoReport:
    """Full class decision with per-vertex witnesses (n >= 1).

    ``failing_vertex`` is the smallest vertex at which an applicable hypo
    test fails: no EDS in G-v while G has none either, or a non-unique
    gamma-set in G-v while G itself has several.
    """
    if g.n < 1:
        raise ValueError("classification needs at least one vertex")
    cov = closed_masks(g)
    full = g.full_mask
    is_ed = eds_masked(cov, full, limit=1, collect=False)[1] > 0
    g_count = gamma_set_count_masked(cov, full, limit=2)
    is_ud = g_count == 1

    records = []
    for v in range(g.n):
        alive = full ^ (1 << v)
        records.append(
            PerVertexRecord(
                vertex=v,
                gamma_minus_v=gamma_masked(cov, alive),
                eds_count_minus_v=eds_masked(cov, alive, collect=False)[1],
                gamma_set_count_minus_v=gamma_set_count_masked(cov, alive),
            )
        )

    is_hypo_ed = not is_ed and all(r.eds_count_minus_v >= 1 for r in records)
    is_hypo_ud = g_count >= 2 and all(r.gamma_set_count_minus_v == 1 for r in records)

    failing = None
    for r in records:
        ed_fail = not is_ed and r.eds_count_minus_v == 0
        ud_fail = g_count >= 2 and r.gamma_set_count_minus_v != 1
        if ed_fail or ud_fail:
            failing = r.vertex
            break
    return HypoReport(
        is_ed=is_ed,
        is_ud=is_ud,
        is_hypo_ed=is_hypo_ed,
        is_hypo_ud=is_hypo_ud,
        per_vertex=tuple(records),
        failing_vertex=failing,
    )


def is_hypo_ed(g: Graph) -> bool:
    """Fast hypo-ED test; short-circuits at the first failing vertex."""
    if g.n < 1:
        return False
    cov = closed_masks(g)
    full = g.full_mask
    if eds_masked(cov, full, limit=1, collect=False)[1]:
        return False
    return all(
        eds_masked(cov, full ^ (1 << v), limit=1, collect=False)[1] for v in range(g.n)
    )


def is_hypo_ud(g: Graph) -> bool:
    """Fast hypo-UD test; short-circuits at the first failing vertex."""
    if g.n < 1:
        return False
    cov = closed_masks(g)
    full = g.full_mask
    if gamma_set_count_masked(cov, full, limit=2) < 2:
        return False
    return all(
        gamma_set_count_masked(cov, full ^ (1 << v), limit=2) == 1 for v in range(g.n)
    )


# ---------------------------------------------------------------------------
# order bound for EDS-free graphs: n <= gamma * (max degree + 1) - 1


@dataclass(frozen=True)
class EqualityWitness:
    d_set: tuple[int, ...]
    y_vertex: int
    y_neighbors_in_d: int
    d_degrees_max: bool


@dataclass(frozen=True)
class MinusOneReport:
    bound_holds: bool
    equality: bool
    witnesses: tuple[EqualityWitness, ...]
    clause_failures: tuple[str, ...]


def check_minusone(g: Graph) -> MinusOneReport:
    """Verify the EDS-free order bound and, at equality, its structure.

    Requires an EDS-free input.  At equality every gamma-set D must be
    independent, have exactly one doubly dominated vertex y_D (adjacent to
    exactly 2 members of D, with D an EDS of G - y_D), and consist of
    maximum-degree vertices; the converse direction is re-derived from each
    witness.  Violations are reported in ``clause_failures``.
    """
    cov = closed_masks(g)
    full = g.full_mask
    if eds_masked(cov, full, limit=1, collect=False)[1]:
        raise ValueError("graph has an efficient dominating set")
    gamma = gamma_masked(cov, full)
    delta_max = max_degree(g)
    bound = gamma * (delta_max + 1) - 1
    bound_holds = g.n <= bound
    equality = g.n == bound
    witnesses: list[EqualityWitness] = []
    failures: list[str] = []
    if equality:
        masks, _ = min_domsets_masked(cov, full)
        for d_mask in sorted(masks):
            d = vertex_tuple(d_mask)
            if any(g.adj[x] & d_mask for x in d):
                failures.append(f"gamma-set {d} is not independent")
            ys = [
                y
                for y in bits(full & ~d_mask)
                if is_eds_masked(cov, full ^ (1 << y), d_mask)
            ]
            if len(ys) != 1:
                failures.append(f"gamma-set {d}: {len(ys)} efficient deletion vertices")
                continue
            y = ys[0]
            y_in_d = (g.adj[y] & d_mask).bit_count()
            if y_in_d != 2:
                failures.append(f"gamma-set {d}: y={y} has {y_in_d} neighbors in it")
            all_max = all(g.degree(x) == delta_max for x in d)
            if not all_max:
                failures.append(f"gamma-set {d} contains a non-maximum-degree vertex")
            witnesses.append(EqualityWitness(d, y, y_in_d, all_max))
            # converse: the witness data alone must force the equality
            if sum(g.degree(x) + 1 for x in d) - 1 != g.n:
                failures.append(f"gamma-set {d}: converse recomputation mismatch")
    return MinusOneReport(bound_holds, equality, tuple(witnesses), tuple(failures))


# ---------------------------------------------------------------------------
# per-class structural bound reports


@dataclass(frozen=True)
class BoundCheck:
    claim: str
    passed: bool
    detail: str


@dataclass(frozen=True)
class BoundReport:
    entries: tuple[BoundCheck, ...]

    @property
    def all_passed(self) -> bool:
        return all(e.passed for e in self.entries)

    def entry(self, claim: str) -> BoundCheck:
        for e in self.entries:
            if e.claim == claim:
                return e
        raise KeyError(claim)


def check_ud_bounds(g: Graph) -> BoundReport:
    """Evaluate the bounds every hypo-UD graph must satisfy.

    The order bound, 2-edge-connectivity and the pair-deletion statements
    hold for order >= 3 (K2 is the lone order-2 member and is reported as
    vacuous there).
    """
    if not is_hypo_ud(g):
        raise ValueError("input is not a hypo-unique-domination graph")
    cov = closed_masks(g)
    full = g.full_mask
    gamma = gamma_masked(cov, full)
    n = g.n
    dmin = min_degree(g)
    dmax = max_degree(g)
    entries: list[BoundCheck] = []

    entries.append(
        BoundCheck(
            "obud-range",
            1 <= gamma <= (2 * n) // 5 + 1,
            f"gamma={gamma}, floor(2n/5)+1={(2 * n) // 5 + 1}",
        )
    )
    if n >= 3:
        entries.append(
            BoundCheck(
                "maxud",
                n <= (dmax + 1) * (gamma - 1) + 1,
                f"n={n}, (Delta+1)(gamma-1)+1={(dmax + 1) * (gamma - 1) + 1}",
            )
        )
        entries.append(
            BoundCheck(
                "minedge",
                is_2_edge_connected(g) and dmin >= 2,
                f"2-edge-connected={is_2_edge_connected(g)}, delta={dmin}",
            )
        )
    else:
        entries.append(BoundCheck("maxud", True, "vacuous at order 2"))
        entries.append(BoundCheck("minedge", True, "vacuous at order 2"))

    b = bondage_number(g, cap=dmin + 2)
    entries.append(
        BoundCheck(
            "bondud",
            b is not None and b <= dmin + 1,
            f"bondage={b}, delta+1={dmin + 1}",
        )
    )

    if n >= 3:
        ok = True
        detail = "all pairs satisfy gamma(G-x-y) >= gamma-1; equality off the unique set"
        for x in range(n):
            ax = full ^ (1 << x)
            dx_masks, dx_count = min_domsets_masked(cov, ax, limit=2)
            if dx_count != 1:
                ok = False
                detail = f"G-{x} does not have a unique gamma-set"
                break
            dx = dx_masks[0]
            for y in range(n):
                if y == x:
                    continue
                axy = ax ^ (1 << y)
                if has_domset_masked(cov, axy, gamma - 2):
                    ok = False
                    detail = f"gamma(G-{{{x},{y}}}) < gamma-1"
                    break
                if not (dx >> y) & 1 and not has_domset_masked(cov, axy, gamma - 1):
                    ok = False
                    detail = f"gamma(G-{{{x},{y}}}) > gamma-1 although {y} avoids the unique set of G-{x}"
                    break
            if not ok:
                break
        entries.append(BoundCheck("min2v", ok, detail))
    else:
        entries.append(BoundCheck("min2v", True, "vacuous at order 2"))
    return BoundReport(tuple(entries))


def check_ed_structure(g: Graph) -> BoundReport:
    """Evaluate the structural facts every hypo-ED graph must satisfy."""
    if not is_hypo_ed(g):
        raise ValueError("input is not a hypo-efficient-domination graph")
    cov = closed_masks(g)
    full = g.full_mask
    gamma = gamma_masked(cov, full)
    n = g.n
    dmin = min_degree(g)
    dmax = max_degree(g)
    entries: list[BoundCheck] = []

    entries.append(
        BoundCheck("connectivity", is_connected(g) and n >= 4, f"connected, n={n}")
    )
    range_ok = 2 <= gamma and 2 * gamma <= n
    if 2 * gamma == n:
        range_ok = range_ok and n == 4 and g.degree_sequence() == (2, 2, 2, 2)
    entries.append(
        BoundCheck("obed-range", range_ok, f"gamma={gamma}, n={n}")
    )

    critical = [
        v for v in range(n) if has_domset_masked(cov, full ^ (1 << v), gamma - 1)
    ]
    if critical:
        lo = (dmin + 1) * (gamma - 1) + 1
        hi = (dmax + 1) * (gamma - 1) + 1
        entries.append(
            BoundCheck("delta", lo <= n <= hi, f"{lo} <= n={n} <= {hi}")
        )
        if is_regular(g):
            entries.append(
                BoundCheck("reg", n == hi, f"regular with critical vertex: n={n}, bound={hi}")
            )
    if len(critical) == n:
        unique_ok = all(
            eds_masked(cov, full ^ (1 << v), collect=False)[1] == 1 for v in range(n)
        )
        entries.append(
            BoundCheck("vced-ud", unique_ok, "each G-v has exactly one EDS")
        )
        if is_regular(g):
            entries.append(
                BoundCheck("regiff", is_hypo_ud(g), "regular hypo-ED vc-graph is hypo-UD")
            )
    return BoundReport(tuple(entries))
