"""Machine-check the toolkit's structural claims over exhaustive streams.

Every registered claim evaluates one exact mathematical statement over an
instance range (a graph6 stream or a parameterized family) and returns a
deterministic ClaimReport; failures never abort a run, they accumulate
with full witnesses.  The module also hosts the independent brute-force
oracle, the derivation of the seven exceptional graphs above the 2n/5
domination bound, and the open-problem stream searches.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from typing import Callable, Iterable, Sequence

from .graph import (
    Graph,
    bits,
    circulant,
    complement,
    complete_graph,
    corona,
    cycle,
    has_cut_vertex,
    is_2_edge_connected,
    is_connected,
    is_regular,
    is_tree,
    is_unicyclic,
    mask_of,
    max_degree,
    min_degree,
    vertex_tuple,
    write_graph6,
    component_masks,
)
from .canon import certificate, canonical_graph, is_self_complementary
from .domination import (
    bondage_number,
    closed_masks,
    domination_number,
    gamma_masked,
    gamma_set_count_masked,
    has_domset_masked,
    is_bicritical,
    min_domsets_masked,
)
from .eds import eds_masked, is_eds_masked
from .hypo import check_minusone, is_hypo_ed, is_hypo_ud
from .streams import all_graphs, connected_graphs, trees, unicyclic_graphs

BRUTE_FORCE_LIMIT = 16


def brute_force_gamma(g: Graph) -> int:
    """Independent domination-number oracle: plain increasing-cardinality scan."""
    if g.n > BRUTE_FORCE_LIMIT:
        raise ValueError(f"brute force oracle is limited to n <= {BRUTE_FORCE_LIMIT}")
    if g.n == 0:
        return 0
    cov = closed_masks(g)
    full = g.full_mask
    for k in range(g.n + 1):
        for subset in combinations(range(g.n), k):
            m = 0
            for v in subset:
                m |= cov[v]
            if m == full:
                return k
    raise AssertionError("unreachable: V(G) dominates itself")


# ---------------------------------------------------------------------------
# reports


@dataclass(frozen=True)
class Finding:
    g6: str
    detail: str


@dataclass(frozen=True)
class ClaimReport:
    claim: str
    range: str
    n_checked: int
    passes: int
    failures: tuple[Finding, ...]
    witnesses: tuple[Finding, ...] = ()
    table: tuple[dict, ...] | None = None

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_json_dict(self) -> dict:
        out = {
            "claim": self.claim,
            "range": self.range,
            "n_checked": self.n_checked,
            "passes": self.passes,
            "failures": [{"g6": f.g6, "detail": f.detail} for f in self.failures],
        }
        if self.witnesses:
            out["witnesses"] = [{"g6": w.g6, "detail": w.detail} for w in self.witnesses]
        if self.table is not None:
            out["table"] = list(self.table)
        return out


class _Collector:
    """Accumulates per-instance pass/fail results into a ClaimReport."""

    def __init__(self, claim: str, range_desc: str):
        self.claim = claim
        self.range = range_desc
        self.checked = 0
        self.failures: list[Finding] = []
        self.witnesses: list[Finding] = []

    def check(self, g: Graph, ok: bool, detail: str) -> None:
        self.checked += 1
        if not ok:
            self.failures.append(Finding(write_graph6(g), detail))

    def witness(self, g: Graph, detail: str) -> None:
        self.witnesses.append(Finding(write_graph6(g), detail))

    def report(self, table: tuple[dict, ...] | None = None) -> ClaimReport:
        return ClaimReport(
            claim=self.claim,
            range=self.range,
            n_checked=self.checked,
            passes=self.checked - len(self.failures),
            failures=tuple(self.failures),
            witnesses=tuple(self.witnesses),
            table=table,
        )


# ---------------------------------------------------------------------------
# exception catalog: connected, min degree >= 2, gamma > 2n/5


@dataclass(frozen=True)
class ExceptionCatalog:
    graphs: tuple[Graph, ...]

    def certificates(self) -> frozenset[tuple[int, int]]:
        return frozenset(certificate(g) for g in self.graphs)

    def contains(self, g: Graph) -> bool:
        return certificate(g) in self.certificates()


@lru_cache(maxsize=1)
def derive_exception_catalog() -> ExceptionCatalog:
    """All connected graphs with min degree >= 2 exceeding the 2n/5 bound.

    Exhaustive over orders 3..7; the stream is already one graph per
    isomorphism class, so members are just canonicalized and sorted.
    """
    members = []
    for n in range(3, 8):
        for g in connected_graphs(n):
            if min_degree(g) >= 2 and 5 * domination_number(g) > 2 * n:
                members.append(canonical_graph(g))
    members.sort(key=certificate)
    return ExceptionCatalog(tuple(members))


# ---------------------------------------------------------------------------
# helpers shared by claims


def _default_stream(max_n: int, include_disconnected: bool = False) -> list[Graph]:
    out: list[Graph] = []
    for n in range(1, max_n + 1):
        out.extend(all_graphs(n) if include_disconnected else connected_graphs(n))
    return out


def _gamma(g: Graph) -> int:
    return gamma_masked(closed_masks(g), g.full_mask)


def _critical_mask(g: Graph) -> int:
    cov = closed_masks(g)
    full = g.full_mask
    gamma = gamma_masked(cov, full)
    m = 0
    for v in range(g.n):
        if has_domset_masked(cov, full ^ (1 << v), gamma - 1):
            m |= 1 << v
    return m


def _is_vc(g: Graph) -> bool:
    return g.n >= 1 and _critical_mask(g) == g.full_mask


def _is_kn_minus_matching(g: Graph) -> bool:
    return g.n >= 4 and g.n % 2 == 0 and all(g.degree(v) == g.n - 2 for v in range(g.n))


def _is_cycle(g: Graph) -> bool:
    return g.n >= 3 and is_connected(g) and all(g.degree(v) == 2 for v in range(g.n))


def _is_corona_component(g: Graph, comp: int) -> bool:
    vs = list(bits(comp))
    size = len(vs)
    if size % 2:
        return False
    if size == 2:
        return True
    leaves = [v for v in vs if (g.adj[v] & comp).bit_count() == 1]
    if len(leaves) != size // 2:
        return False
    leaf_mask = mask_of(leaves)
    return all((g.adj[v] & leaf_mask).bit_count() == 1 for v in vs if not (leaf_mask >> v) & 1)


# ---------------------------------------------------------------------------
# claim implementations


def _claim_circu(params: dict, stream) -> ClaimReport:
    n_max = params["n_max"]
    col = _Collector("CIRCU", f"C(n,{{1..k}}), 3<=n<={n_max}, 1<=k<floor(n/2)")
    for n in range(3, n_max + 1):
        for k in range(1, (n // 2 - 1) + 1):
            g = circulant(n, range(1, k + 1))
            want = -(-n // (2 * k + 1))
            got = _gamma(g)
            col.check(g, got == want, f"n={n} k={k}: gamma={got}, formula={want}")
    return col.report()


def _claim_extremall(params: dict, stream) -> ClaimReport:
    k_max, n_max = params["k_max"], params["n_max"]
    col = _Collector("EXTREMALL", f"C(n,{{1..k}}), 4<=n<={n_max}, 1<=k<=min({k_max},floor(n/2)-1)")
    for k in range(1, k_max + 1):
        for n in range(4, n_max + 1):
            if k >= n // 2:
                continue
            g = circulant(n, range(1, k + 1))
            divides = (n - 1) % (2 * k + 1) == 0
            hud = is_hypo_ud(g)
            if hud != divides:
                col.check(g, False, f"n={n} k={k}: hypo-UD={hud}, (2k+1)|(n-1)={divides}")
                continue
            if divides:
                gamma = _gamma(g)
                eq = n == (max_degree(g) + 1) * (gamma - 1) + 1
                hed = is_hypo_ed(g)
                col.check(g, eq and hed, f"n={n} k={k}: equality={eq}, hypo-ED={hed}")
            else:
                col.check(g, True, "")
    return col.report()


def _claim_udvc(params: dict, stream) -> ClaimReport:
    graphs = stream if stream is not None else _default_stream(params["max_n"])
    col = _Collector("UDVC", f"{len(graphs)} stream graphs")
    for g in graphs:
        if not is_hypo_ud(g):
            continue
        if g.n == 2 and g.m == 1:
            col.check(g, True, "")
            continue
        ok = is_connected(g) and g.n >= 4 and _is_vc(g)
        col.check(g, ok, f"hypo-UD of order {g.n} not a connected vc-graph")
    return col.report()


def _claim_minedge(params: dict, stream) -> ClaimReport:
    graphs = stream if stream is not None else _default_stream(params["max_n"])
    uni_max = params.get("unicyclic_max", 0)
    col = _Collector("MINEDGE", f"{len(graphs)} stream graphs; unicyclic n<={uni_max}")
    for g in graphs:
        if g.n < 3 or not is_hypo_ud(g):
            continue
        ok = is_2_edge_connected(g) and min_degree(g) >= 2
        col.check(g, ok, "hypo-UD of order >= 3 not 2-edge-connected with delta >= 2")
    for n in range(3, uni_max + 1):
        for g in unicyclic_graphs(n):
            want = _is_cycle(g) and n % 3 == 1
            got = is_hypo_ud(g)
            col.check(g, got == want, f"unicyclic n={n}: hypo-UD={got}, expected={want}")
    return col.report()


def _claim_min2v(params: dict, stream) -> ClaimReport:
    graphs = stream if stream is not None else _default_stream(params["max_n"])
    col = _Collector("MIN2V", f"{len(graphs)} stream graphs")
    for g in graphs:
        if g.n < 3 or not is_hypo_ud(g):
            continue
        cov = closed_masks(g)
        full = g.full_mask
        gamma = gamma_masked(cov, full)
        ok = True
        detail = ""
        for x in range(g.n):
            ax = full ^ (1 << x)
            dx = min_domsets_masked(cov, ax, limit=2)[0][0]
            for y in range(g.n):
                if y == x:
                    continue
                axy = ax ^ (1 << y)
                if has_domset_masked(cov, axy, gamma - 2):
                    ok, detail = False, f"gamma(G-{{{x},{y}}}) < gamma-1"
                    break
                if not (dx >> y) & 1 and not has_domset_masked(cov, axy, gamma - 1):
                    ok, detail = False, f"no equality at ({x},{y}) although y avoids D_x"
                    break
            if not ok:
                break
        col.check(g, ok, detail)
    return col.report()


def _claim_vcbound(params: dict, stream) -> ClaimReport:
    graphs = stream if stream is not None else _default_stream(params["max_n"])
    catalog = derive_exception_catalog().certificates()
    col = _Collector("VCBOUND", f"{len(graphs)} stream graphs")
    for g in graphs:
        if g.n < 4 or not is_connected(g) or not _is_vc(g):
            continue
        gamma = _gamma(g)
        bound = (2 * g.n) // 5 + 1
        in_cat = certificate(g) in catalog
        if gamma > bound:
            col.check(g, False, f"gamma={gamma} above floor(2n/5)+1={bound}")
        else:
            col.check(g, (gamma == bound) == in_cat,
                      f"equality={gamma == bound} but catalog membership={in_cat}")
    return col.report()


def _claim_twofifths(params: dict, stream) -> ClaimReport:
    graphs = stream if stream is not None else _default_stream(params["max_n"])
    catalog = derive_exception_catalog().certificates()
    col = _Collector("TWOFIFTHS", f"{len(graphs)} stream graphs, delta>=2 connected, catalog excluded")
    for g in graphs:
        if g.n < 3 or not is_connected(g) or min_degree(g) < 2:
            continue
        if certificate(g) in catalog:
            continue
        gamma = _gamma(g)
        col.check(g, 5 * gamma <= 2 * g.n, f"gamma={gamma} > 2n/5 with n={g.n}")
    return col.report()


def _claim_obud(params: dict, stream) -> ClaimReport:
    graphs = stream if stream is not None else _default_stream(params["max_n"])
    col = _Collector("OBUD", f"{len(graphs)} stream graphs")
    for g in graphs:
        if not is_hypo_ud(g):
            continue
        gamma = _gamma(g)
        bound = (2 * g.n) // 5 + 1
        is_k2 = g.n == 2 and g.m == 1
        checks = []
        if not 1 <= gamma <= bound:
            checks.append(f"gamma={gamma} outside [1, {bound}]")
        if (gamma == 1) != is_k2:
            checks.append("gamma=1 must characterize K2")
        if (gamma == 2) != _is_kn_minus_matching(g):
            checks.append("gamma=2 must characterize K_n minus a perfect matching")
        extremal = is_k2 or (_is_cycle(g) and g.n in (4, 7))
        if (gamma == bound) != extremal:
            checks.append("gamma = floor(2n/5)+1 must characterize K2, C4, C7")
        col.check(g, not checks, "; ".join(checks))
    return col.report()


def _claim_maxud(params: dict, stream) -> ClaimReport:
    graphs = stream if stream is not None else _default_stream(params["max_n"])
    col = _Collector("MAXUD", f"{len(graphs)} stream graphs (order >= 3)")
    for g in graphs:
        if g.n < 3 or not is_hypo_ud(g):
            continue
        gamma = _gamma(g)
        bound = (max_degree(g) + 1) * (gamma - 1) + 1
        col.check(g, g.n <= bound, f"n={g.n} above (Delta+1)(gamma-1)+1={bound}")
    return col.report()


def _claim_bondud(params: dict, stream) -> ClaimReport:
    graphs = stream if stream is not None else _default_stream(params["max_n"])
    col = _Collector("BONDUD", f"{len(graphs)} stream graphs")
    for g in graphs:
        if not is_hypo_ud(g):
            continue
        dmin = min_degree(g)
        b = bondage_number(g, cap=dmin + 2)
        col.check(g, b is not None and b <= dmin + 1, f"bondage={b}, delta+1={dmin + 1}")
    return col.report()


def _claim_obed(params: dict, stream) -> ClaimReport:
    graphs = stream if stream is not None else _default_stream(params["max_n"])
    col = _Collector("OBED", f"{len(graphs)} stream graphs")
    for g in graphs:
        hed = is_hypo_ed(g)
        if g.n <= 4:
            want = _is_cycle(g) and g.n == 4
            col.check(g, hed == want, f"order<=4: hypo-ED={hed}, expected only C4")
            continue
        if not hed:
            continue
        gamma = _gamma(g)
        checks = []
        if not is_connected(g):
            checks.append("hypo-ED graph must be connected")
        if not (2 <= gamma and 2 * gamma <= g.n):
            checks.append(f"gamma={gamma} outside [2, n/2]")
        if 2 * gamma == g.n and not (_is_cycle(g) and g.n == 4):
            checks.append("gamma = n/2 must characterize C4")
        col.check(g, not checks, "; ".join(checks))
    return col.report()


def _claim_minusone(params: dict, stream) -> ClaimReport:
    graphs = stream if stream is not None else _default_stream(params["max_n"])
    col = _Collector("MINUSONE", f"{len(graphs)} stream graphs without an EDS")
    for g in graphs:
        cov = closed_masks(g)
        if eds_masked(cov, g.full_mask, limit=1, collect=False)[1]:
            continue
        rep = check_minusone(g)
        col.check(g, rep.bound_holds and not rep.clause_failures,
                  f"bound={rep.bound_holds}; {'; '.join(rep.clause_failures)}")
    return col.report()


def _claim_delta(params: dict, stream) -> ClaimReport:
    graphs = stream if stream is not None else _default_stream(params["max_n"])
    col = _Collector("DELTA", f"{len(graphs)} stream graphs")
    for g in graphs:
        if not is_hypo_ed(g) or not _critical_mask(g):
            continue
        gamma = _gamma(g)
        lo = (min_degree(g) + 1) * (gamma - 1) + 1
        hi = (max_degree(g) + 1) * (gamma - 1) + 1
        col.check(g, lo <= g.n <= hi, f"{lo} <= n={g.n} <= {hi} violated")
    return col.report()


def _claim_regiff(params: dict, stream) -> ClaimReport:
    graphs = stream if stream is not None else _default_stream(params["max_n"])
    col = _Collector("REGIFF", f"{len(graphs)} stream graphs")
    for g in graphs:
        if g.n < 4 or not is_connected(g) or not _is_vc(g):
            continue
        gamma = _gamma(g)
        if g.n != (max_degree(g) + 1) * (gamma - 1) + 1:
            continue
        ok = is_hypo_ed(g) and is_hypo_ud(g) and is_regular(g)
        col.check(g, ok, "extremal vc-graph not (hypo-ED and hypo-UD and regular)")
    return col.report()


def _claim_vced_ud(params: dict, stream) -> ClaimReport:
    graphs = stream if stream is not None else _default_stream(params["max_n"])
    col = _Collector("VCED_UD", f"{len(graphs)} stream graphs")
    for g in graphs:
        if not is_hypo_ed(g) or not _is_vc(g):
            continue
        cov = closed_masks(g)
        full = g.full_mask
        counts = [eds_masked(cov, full ^ (1 << v), collect=False)[1] for v in range(g.n)]
        checks = []
        if any(c != 1 for c in counts):
            checks.append(f"per-vertex EDS counts {counts} not all 1")
        if is_regular(g) and not is_hypo_ud(g):
            checks.append("regular hypo-ED vc-graph must be hypo-UD")
        col.check(g, not checks, "; ".join(checks))
    return col.report()


def _claim_claim1(params: dict, stream) -> ClaimReport:
    h_max = params["h_max"]
    col = _Collector("CLAIM1", f"coronas of connected H, 2<=|V(H)|<={h_max}")
    for n in range(2, h_max + 1):
        for h in connected_graphs(n):
            g = corona(h)
            leaves = mask_of(range(n, 2 * n))
            got = _critical_mask(g)
            checks = []
            if got != leaves:
                checks.append(f"critical set {vertex_tuple(got)} is not the leaf set")
            if is_hypo_ud(g):
                checks.append("corona must not be hypo-UD")
            col.check(g, not checks, "; ".join(checks))
    return col.report()


def _claim_ed1(params: dict, stream) -> ClaimReport:
    graphs = stream if stream is not None else _default_stream(params["max_n"])
    col = _Collector("ED1", f"{len(graphs)} stream graphs (connected vc-graphs, order >= 2)")
    for g in graphs:
        # K1 is excluded: its one deletion is the order-zero graph, which has
        # the empty set as a vacuous EDS, yet K1 itself has an EDS.
        if g.n < 2 or not is_connected(g) or not _is_vc(g):
            continue
        cov = closed_masks(g)
        full = g.full_mask
        alldel = all(
            eds_masked(cov, full ^ (1 << v), limit=1, collect=False)[1] for v in range(g.n)
        )
        col.check(g, is_hypo_ed(g) == alldel,
                  f"hypo-ED={is_hypo_ed(g)} but all-deletions-have-EDS={alldel}")
    return col.report()


def _claim_ore(params: dict, stream) -> ClaimReport:
    graphs = stream if stream is not None else _default_stream(params["max_n"], include_disconnected=True)
    col = _Collector("ORE", f"{len(graphs)} stream graphs with delta >= 1")
    for g in graphs:
        if g.n == 0 or min_degree(g) < 1:
            continue
        gamma = _gamma(g)
        if 2 * gamma > g.n:
            col.check(g, False, f"gamma={gamma} above n/2")
            continue
        comps = component_masks(g)
        extremal_shape = all(
            (c.bit_count() == 4 and _is_cycle_component(g, c)) or _is_corona_component(g, c)
            for c in comps
        )
        col.check(g, (2 * gamma == g.n) == extremal_shape,
                  f"equality={2 * gamma == g.n}, components-all-C4-or-corona={extremal_shape}")
    return col.report()


def _is_cycle_component(g: Graph, comp: int) -> bool:
    return comp.bit_count() >= 3 and all((g.adj[v] & comp).bit_count() == 2 for v in bits(comp))


def _claim_vc1(params: dict, stream) -> ClaimReport:
    graphs = stream if stream is not None else _default_stream(params["max_n"])
    col = _Collector("VC1", f"{len(graphs)} stream vc-graphs")
    for g in graphs:
        if g.n < 2 or not _is_vc(g):
            continue
        gamma = _gamma(g)
        bound = (max_degree(g) + 1) * (gamma - 1) + 1
        if g.n > bound:
            col.check(g, False, f"n={g.n} above bound {bound}")
        elif g.n == bound:
            col.check(g, is_regular(g), "equality case must be regular")
        else:
            col.check(g, True, "")
    return col.report()


def _claim_b1(params: dict, stream) -> ClaimReport:
    graphs = stream if stream is not None else _default_stream(params["max_n"])
    col = _Collector("B1", f"{len(graphs)} stream graphs with a unique gamma-set")
    for g in graphs:
        if g.m == 0:
            continue
        if gamma_set_count_masked(closed_masks(g), g.full_mask, limit=2) != 1:
            continue
        col.check(g, bondage_number(g, cap=1) == 1, "unique gamma-set but bondage != 1")
    return col.report()


def _claim_minus(params: dict, stream) -> ClaimReport:
    graphs = stream if stream is not None else _default_stream(params["max_n"])
    col = _Collector("MINUS", f"{len(graphs)} stream graphs, all single deletions")
    for g in graphs:
        cov = closed_masks(g)
        full = g.full_mask
        gamma = gamma_masked(cov, full)
        checks = []
        for v in range(g.n):
            alive = full ^ (1 << v)
            gv = gamma_masked(cov, alive)
            if gv < gamma:
                if gv != gamma - 1:
                    checks.append(f"gamma(G-{v})={gv} below gamma-1")
                sets, _ = min_domsets_masked(cov, alive)
                if any(m & cov[v] for m in sets):
                    checks.append(f"a gamma-set of G-{v} meets N[{v}]")
            elif gv > gamma:
                sets, _ = min_domsets_masked(cov, full)
                if any(not (m >> v) & 1 for m in sets):
                    checks.append(f"{v} raises gamma but misses some gamma-set of G")
        col.check(g, not checks, "; ".join(checks))
    return col.report()


def _extr1_instances(k_max: int, n_max: int):
    for k in range(1, k_max + 1):
        t = 2
        while t * (2 * k + 1) - 1 <= n_max:
            yield k, t, t * (2 * k + 1) - 1
            t += 1


def _claim_extr1(params: dict, stream) -> ClaimReport:
    k_max, n_max = params["k_max"], params["n_max"]
    col = _Collector("EXTR1", f"C(t(2k+1)-1,{{1..k}}), k<={k_max}, n<={n_max}")
    for k, t, n in _extr1_instances(k_max, n_max):
        g = circulant(n, range(1, k + 1))
        cov = closed_masks(g)
        full = g.full_mask
        period = 2 * k + 1
        checks = []
        for r in range(n):
            if t % 2:
                d = {(r + l * period) % n for l in range(-(t - 1) // 2, (t - 1) // 2 + 1)}
                a1 = (r + (t - 1) * period // 2) % n
                c = (a1 + k) % n
            else:
                d = {(r + s * period) % n for s in range(-(t - 2) // 2, (t - 2) // 2 + 1)}
                d.add((r + t * period // 2 - 1) % n)
                b1 = (r + (t - 2) * period // 2) % n
                c = (b1 + k) % n
            d_mask = mask_of(d) & ~(1 << c)
            if not is_eds_masked(cov, full ^ (1 << c), d_mask):
                checks.append(f"r={r}: constructed set is not an EDS of G-{c}")
        gamma = gamma_masked(cov, full)
        if gamma != t:
            checks.append(f"gamma={gamma}, expected t={t}")
        if n != gamma * (max_degree(g) + 1) - 1:
            checks.append("order does not meet gamma(Delta+1)-1")
        if not is_hypo_ed(g):
            checks.append("not hypo-ED")
        col.check(g, not checks, f"k={k} t={t} n={n}: " + "; ".join(checks))
    return col.report()


def _claim_extr2(params: dict, stream) -> ClaimReport:
    k_max, n_max = params["k_max"], params["n_max"]
    col = _Collector("EXTR2", f"C(8k+5,{{1..k}}u{{3k+2..4k+2}}), k<={k_max}, n<={n_max}")
    for k in range(1, k_max + 1):
        n = 8 * k + 5
        if n > n_max:
            continue
        g = circulant(n, list(range(1, k + 1)) + list(range(3 * k + 2, 4 * k + 3)))
        cov = closed_masks(g)
        full = g.full_mask
        checks = []
        if not is_regular(g) or g.degree(0) != 4 * k + 2:
            checks.append("not (4k+2)-regular")
        for r in range(n):
            d_mask = (1 << r) | (1 << ((r + 2 * k + 1) % n))
            y = (r + 5 * k + 3) % n
            inter = cov[r] & cov[(r + 2 * k + 1) % n]
            if inter != 1 << y:
                checks.append(f"r={r}: closed neighborhoods meet at {vertex_tuple(inter)}, not {y}")
            if not is_eds_masked(cov, full ^ (1 << y), d_mask):
                checks.append(f"r={r}: pair is not an EDS of G-{y}")
        gamma = gamma_masked(cov, full)
        if gamma != 2:
            checks.append(f"gamma={gamma}, expected 2")
        if n != gamma * (max_degree(g) + 1) - 1:
            checks.append("order does not meet gamma(Delta+1)-1")
        if not is_hypo_ed(g):
            checks.append("not hypo-ED")
        col.check(g, not checks, f"k={k} n={n}: " + "; ".join(checks))
    return col.report()


def _claim_cycles(params: dict, stream) -> ClaimReport:
    n_max = params["n_max"]
    col = _Collector("CYCLES", f"cycles C_3..C_{n_max}")
    for n in range(3, n_max + 1):
        g = cycle(n)
        want_ed = n >= 4 and n % 3 in (1, 2)
        want_ud = n >= 4 and n % 3 == 1
        got_ed = is_hypo_ed(g)
        got_ud = is_hypo_ud(g)
        checks = []
        if got_ed != want_ed:
            checks.append(f"hypo-ED={got_ed}, expected {want_ed}")
        if got_ud != want_ud:
            checks.append(f"hypo-UD={got_ud}, expected {want_ud}")
        if want_ed and n % 3 == 2:
            gamma = _gamma(g)
            if n != gamma * 3 - 1:
                checks.append("C_{3k+2} must meet gamma(Delta+1)-1")
        col.check(g, not checks, f"n={n}: " + "; ".join(checks))
    return col.report()


@dataclass(frozen=True)
class ClaimSpec:
    claim_id: str
    description: str
    defaults: dict
    fn: Callable[[dict, Sequence[Graph] | None], ClaimReport]
    uses_stream: bool = True


CLAIMS: dict[str, ClaimSpec] = {
    spec.claim_id: spec
    for spec in [
        ClaimSpec("CIRCU", "domination number of consecutive-jump circulants equals ceil(n/(2k+1))",
                  {"n_max": 30}, _claim_circu, uses_stream=False),
        ClaimSpec("EXTREMALL", "C(n,{1..k}) is hypo-UD exactly when 2k+1 divides n-1",
                  {"k_max": 3, "n_max": 25}, _claim_extremall, uses_stream=False),
        ClaimSpec("UDVC", "hypo-UD graphs are K2 or connected vc-graphs of order >= 4",
                  {"max_n": 7}, _claim_udvc),
        ClaimSpec("MINEDGE", "hypo-UD graphs of order >= 3 are 2-edge-connected with delta >= 2; unicyclic ones are the C_{3k+1}",
                  {"max_n": 7, "unicyclic_max": 9}, _claim_minedge),
        ClaimSpec("MIN2V", "pair deletions from hypo-UD graphs lose at most one from gamma",
                  {"max_n": 7}, _claim_min2v),
        ClaimSpec("VCBOUND", "connected vc-graphs satisfy gamma <= floor(2n/5)+1 with equality only in the catalog",
                  {"max_n": 7}, _claim_vcbound),
        ClaimSpec("TWOFIFTHS", "connected graphs with delta >= 2 outside the catalog satisfy gamma <= 2n/5",
                  {"max_n": 7}, _claim_twofifths),
        ClaimSpec("OBUD", "gamma-range characterizations of hypo-UD graphs",
                  {"max_n": 7}, _claim_obud),
        ClaimSpec("MAXUD", "hypo-UD graphs of order >= 3 satisfy n <= (Delta+1)(gamma-1)+1",
                  {"max_n": 7}, _claim_maxud),
        ClaimSpec("BONDUD", "bondage of hypo-UD graphs is at most delta+1",
                  {"max_n": 7}, _claim_bondud),
        ClaimSpec("OBED", "hypo-ED graphs are connected, n >= 4, 2 <= gamma <= n/2, equality only for C4",
                  {"max_n": 7}, _claim_obed),
        ClaimSpec("MINUSONE", "EDS-free graphs satisfy n <= gamma(Delta+1)-1 with the equality structure",
                  {"max_n": 7}, _claim_minusone),
        ClaimSpec("DELTA", "hypo-ED graphs with a critical vertex obey both degree bounds",
                  {"max_n": 7}, _claim_delta),
        ClaimSpec("REGIFF", "extremal connected vc-graphs are hypo-ED, hypo-UD and regular",
                  {"max_n": 7}, _claim_regiff),
        ClaimSpec("VCED_UD", "vertex deletions of hypo-ED vc-graphs have exactly one EDS",
                  {"max_n": 7}, _claim_vced_ud),
        ClaimSpec("CLAIM1", "coronas of connected graphs: critical vertices are the leaves; never hypo-UD",
                  {"h_max": 4}, _claim_claim1, uses_stream=False),
        ClaimSpec("ED1", "a connected vc-graph is hypo-ED exactly when every deletion has an EDS",
                  {"max_n": 7}, _claim_ed1),
        ClaimSpec("ORE", "gamma <= n/2 for graphs without isolated vertices; equality for C4/corona components",
                  {"max_n": 7}, _claim_ore),
        ClaimSpec("VC1", "vc-graphs satisfy n <= (Delta+1)(gamma-1)+1; equality cases are regular",
                  {"max_n": 7}, _claim_vc1),
        ClaimSpec("B1", "a nontrivial graph with a unique gamma-set has bondage 1",
                  {"max_n": 7}, _claim_b1),
        ClaimSpec("MINUS", "single-vertex deletion laws for critical and gamma-raising vertices",
                  {"max_n": 6}, _claim_minus),
        ClaimSpec("EXTR1", "the C(t(2k+1)-1,{1..k}) family: explicit EDS constructions and extremality",
                  {"k_max": 3, "n_max": 29}, _claim_extr1, uses_stream=False),
        ClaimSpec("EXTR2", "the C(8k+5,{1..k}u{3k+2..4k+2}) family: explicit EDS pairs and extremality",
                  {"k_max": 3, "n_max": 29}, _claim_extr2, uses_stream=False),
        ClaimSpec("CYCLES", "hypo-ED cycles are the C_{3k+1} and C_{3k+2}; hypo-UD cycles the C_{3k+1}",
                  {"n_max": 14}, _claim_cycles, uses_stream=False),
    ]
}


def verify_claim(claim_id: str, stream: Sequence[Graph] | None = None, **params) -> ClaimReport:
    """Run one registered claim; unknown parameters are rejected."""
    spec = CLAIMS.get(claim_id)
    if spec is None:
        raise ValueError(f"unknown claim {claim_id!r}")
    merged = dict(spec.defaults)
    for key, value in params.items():
        if key not in merged:
            raise ValueError(f"claim {claim_id} takes no parameter {key!r}")
        merged[key] = value
    return spec.fn(merged, stream)


def verify_all(stream: Sequence[Graph] | None = None, **params) -> list[ClaimReport]:
    """Run every registered claim with shared parameter overrides."""
    out = []
    for claim_id, spec in CLAIMS.items():
        kw = {k: v for k, v in params.items() if k in spec.defaults}
        out.append(verify_claim(claim_id, stream=stream if spec.uses_stream else None, **kw))
    return out


# ---------------------------------------------------------------------------
# open-problem searches


def _classes_of(g: Graph) -> list[str]:
    out = []
    if is_hypo_ed(g):
        out.append("hypo-ED")
    if is_hypo_ud(g):
        out.append("hypo-UD")
    return out


def _match_cutvertex(g: Graph) -> str | None:
    if g.n >= 3 and is_hypo_ud(g) and has_cut_vertex(g):
        return "hypo-UD with a cut-vertex"
    return None


def _match_bicrit(g: Graph) -> str | None:
    if g.n >= 3 and is_hypo_ud(g) and is_bicritical(g):
        return "bicritical hypo-UD"
    return None


def _match_selfcomp(g: Graph) -> str | None:
    if g.n >= 2 and is_self_complementary(g):
        classes = _classes_of(g)
        if classes:
            return "self-complementary " + "+".join(classes)
    return None


def _match_ed_trees(g: Graph) -> str | None:
    if is_tree(g) and is_hypo_ed(g):
        return "hypo-ED tree"
    if is_unicyclic(g) and is_hypo_ed(g):
        return "hypo-ED unicyclic"
    return None


def _match_ed_gamma2(g: Graph) -> str | None:
    if is_hypo_ed(g) and domination_number(g) == 2:
        return "hypo-ED with gamma=2"
    return None


def _match_comp_eds(g: Graph) -> str | None:
    if is_hypo_ed(g):
        comp = complement(g)
        if eds_masked(closed_masks(comp), comp.full_mask, limit=1, collect=False)[1]:
            return "hypo-ED whose complement has an EDS"
    return None


def _match_comp_ud(g: Graph) -> str | None:
    if is_hypo_ud(g):
        comp = complement(g)
        if gamma_set_count_masked(closed_masks(comp), comp.full_mask, limit=2) == 1:
            return "hypo-UD whose complement has a unique gamma-set"
    return None


def _match_bond_eq(g: Graph) -> str | None:
    # K2 is excluded: b(K2) = 1 = delta(K2), a degenerate case the question
    # does not target (every other statement splits K2 off as well).
    if g.n < 3 or not is_hypo_ud(g):
        return None
    dmin = min_degree(g)
    b = bondage_number(g, cap=dmin + 2)
    if b != dmin + 1:
        return f"hypo-UD with bondage {b} != delta+1 = {dmin + 1}"
    return None


@dataclass(frozen=True)
class ProblemSpec:
    problem_id: str
    description: str
    match: Callable[[Graph], str | None] | None
    aggregate: bool = False


PROBLEMS: dict[str, ProblemSpec] = {
    spec.problem_id: spec
    for spec in [
        ProblemSpec("CUTVERTEX", "hypo-UD graphs with a cut-vertex", _match_cutvertex),
        ProblemSpec("BICRIT", "bicritical hypo-UD graphs", _match_bicrit),
        ProblemSpec("SELFCOMP", "self-complementary hypo-ED / hypo-UD graphs", _match_selfcomp),
        ProblemSpec("ED_TREES", "hypo-ED trees and unicyclic graphs", _match_ed_trees),
        ProblemSpec("ED_GAMMA2", "hypo-ED graphs with domination number 2", _match_ed_gamma2),
        ProblemSpec("COMP_EDS", "hypo-ED graphs whose complement has an EDS", _match_comp_eds),
        ProblemSpec("COMP_UD", "hypo-UD graphs whose complement has a unique gamma-set", _match_comp_ud),
        ProblemSpec("BOND_EQ", "hypo-UD graphs with bondage below delta+1", _match_bond_eq),
        ProblemSpec("PAIRS", "(order, gamma) pairs realized by hypo-ED / hypo-UD graphs", None, aggregate=True),
        ProblemSpec("EDGECOUNT", "edge-count extremes per class, order and gamma", None, aggregate=True),
    ]
}


def search_open_problems(problem_id: str, stream: Iterable[Graph]) -> ClaimReport:
    """Scan a graph stream for one open problem; matches become witnesses."""
    spec = PROBLEMS.get(problem_id)
    if spec is None:
        raise ValueError(f"unknown problem {problem_id!r}")
    col = _Collector(problem_id, spec.description)
    if not spec.aggregate:
        for g in stream:
            col.checked += 1
            detail = spec.match(g)
            if detail is not None:
                col.witness(g, detail)
        return col.report()

    agg: dict[tuple[str, int, int], list[int]] = {}
    for g in stream:
        col.checked += 1
        for cls in _classes_of(g):
            key = (cls, g.n, domination_number(g))
            cur = agg.setdefault(key, [0, g.m, g.m])
            cur[0] += 1
            cur[1] = min(cur[1], g.m)
            cur[2] = max(cur[2], g.m)
    rows = []
    for (cls, n, gamma), (count, lo, hi) in sorted(agg.items()):
        row = {"class": cls, "n": n, "gamma": gamma, "count": count}
        if problem_id == "EDGECOUNT":
            row["min_edges"] = lo
            row["max_edges"] = hi
        rows.append(row)
    return col.report(table=tuple(rows))
