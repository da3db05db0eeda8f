"""Distance and betweenness centers, exact diameters and the
spine-based diameter estimate."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .graph import UNREACHABLE, Graph, bfs_distances, bfs_order, connected_components
from .nodeset import NodeSet, iter_bits
from .reduction import ReductionResult


def distance_sums(g: Graph) -> dict[int, int]:
    """Sum of hop distances from each node to every node it can reach."""
    out = {}
    for s in iter_bits(g.node_bits):
        _, dist = bfs_order(g, s)
        out[s] = sum(d for d in dist if d > 0)
    return out


def _shortest_path_dag(g: Graph, s: int):
    adj = g.adj_bits
    order, dist = bfs_order(g, s)
    sigma = [0] * g.universe_size
    sigma[s] = 1
    preds: dict[int, list[int]] = {v: [] for v in order}
    for v in order:
        for w in iter_bits(adj[v]):
            if dist[w] == dist[v] + 1:
                sigma[w] += sigma[v]
                preds[w].append(v)
    return order, sigma, preds


def betweenness(g: Graph) -> dict[int, Fraction]:
    """Exact Brandes betweenness, unnormalized.

    Each unordered pair ``{s, t}`` adds to every interior node ``y`` the
    fraction of its shortest paths that pass through ``y``.
    """
    cb = {v: Fraction(0) for v in iter_bits(g.node_bits)}
    for s in cb:
        order, sigma, preds = _shortest_path_dag(g, s)
        delta = {v: Fraction(0) for v in order}
        for w in reversed(order):
            coeff = (1 + delta[w]) / sigma[w]
            for v in preds[w]:
                delta[v] += sigma[v] * coeff
            if w != s:
                cb[w] += delta[w]
    return {v: x / 2 for v, x in cb.items()}


def raw_betweenness(g: Graph, include_endpoints: bool = False) -> dict[int, int]:
    """Number of shortest paths, over unordered pairs ``{s, t}``, that
    contain each node as an interior vertex.

    With ``include_endpoints`` the paths starting or ending at the node are
    counted as well.
    """
    raw = {v: 0 for v in iter_bits(g.node_bits)}
    ends = dict.fromkeys(raw, 0)
    for s in raw:
        order, sigma, preds = _shortest_path_dag(g, s)
        # below[v]: number of DAG paths leaving v, to any target
        below = dict.fromkeys(order, 0)
        for w in reversed(order):
            for v in preds[w]:
                below[v] += 1 + below[w]
        for v in order:
            if v != s:
                raw[v] += sigma[v] * below[v]
        ends[s] = below[s]
    out = {v: x // 2 for v, x in raw.items()}
    if include_endpoints:
        for v in out:
            out[v] += ends[v]
    return out


def _per_component(g: Graph, score: dict, best) -> NodeSet:
    bits = 0
    for comp in connected_components(g):
        target = best(score[v] for v in comp)
        for v in comp:
            if score[v] == target:
                bits |= 1 << v
    return NodeSet.from_bits(g.universe_size, bits)


@dataclass(frozen=True)
class CentralityReport:
    """Centrality scores and centers of a graph.

    On a disconnected graph the centers are taken per component and
    united.
    """

    distance_sum: dict[int, int]
    betweenness: dict[int, Fraction]
    raw_betweenness: dict[int, int]
    cc_center: NodeSet
    cb_center: NodeSet
    cb_center_raw: NodeSet


def centers(g: Graph) -> CentralityReport:
    ds = distance_sums(g)
    bc = betweenness(g)
    raw = raw_betweenness(g)
    return CentralityReport(
        distance_sum=ds,
        betweenness=bc,
        raw_betweenness=raw,
        cc_center=_per_component(g, ds, min),
        cb_center=_per_component(g, bc, max),
        cb_center_raw=_per_component(g, raw, max),
    )


def balance_conditions(r: ReductionResult) -> dict[int, bool]:
    """Per spine node ``y``: the tau of the rest of the spine and the tau of
    the spine neighbors of ``y`` must each be at least ``tau(y)``."""
    total = sum(r.tau.values())
    adj = r.spine.adj_bits
    out = {}
    for y, t in r.tau.items():
        around = sum(r.tau[x] for x in iter_bits(adj[y]))
        out[y] = total - t >= t and around >= t
    return out


@dataclass(frozen=True)
class ContainmentReport:
    """Whether the centers of a network sit on (and next to) its spine.

    ``status`` is ``"hypotheses_unmet"`` when some spine node fails the
    balance conditions; otherwise ``"holds"`` if both centers meet the
    spine and ``"violated"`` if one of them does not.
    """

    status: str
    balance: dict[int, bool]
    cc_center: NodeSet
    cb_center: NodeSet
    cc_on_spine: NodeSet
    cb_on_spine: NodeSet
    cc_contained: bool
    cb_contained: bool

    @property
    def hypotheses_met(self) -> bool:
        return self.status != "hypotheses_unmet"

    @property
    def unbalanced(self) -> list[int]:
        return [y for y, ok in self.balance.items() if not ok]


def _within_regions(g: Graph, center: NodeSet, anchors: NodeSet) -> bool:
    adj = g.adj_bits
    cover = 0
    for x in anchors:
        cover |= adj[x] | 1 << x
    return bool(anchors) and center.bits & ~cover == 0


def center_containment_check(
    g: Graph, r: ReductionResult, report: CentralityReport | None = None
) -> ContainmentReport:
    """Check that both centers of ``g`` meet the spine of ``r`` and lie in
    the closed neighborhoods of the spine nodes they meet."""
    if report is None:
        report = centers(g)
    balance = balance_conditions(r)
    spine = r.survivors
    cc_on = report.cc_center & spine
    cb_on = report.cb_center & spine
    met = bool(balance) and all(balance.values())
    if not met:
        status = "hypotheses_unmet"
    elif cc_on and cb_on:
        status = "holds"
    else:
        status = "violated"
    return ContainmentReport(
        status=status,
        balance=balance,
        cc_center=report.cc_center,
        cb_center=report.cb_center,
        cc_on_spine=cc_on,
        cb_on_spine=cb_on,
        cc_contained=_within_regions(g, report.cc_center, cc_on),
        cb_contained=_within_regions(g, report.cb_center, cb_on),
    )


def component_diameters(g: Graph) -> list[int]:
    """Exact diameter of each component (repeated BFS)."""
    out = []
    for comp in connected_components(g):
        best = 0
        for s in comp:
            dist = bfs_distances(g, s)
            best = max(best, max(int(dist[v]) for v in comp))
        out.append(best)
    return out


def exact_diameter(g: Graph) -> float:
    """Largest hop distance over all pairs; :data:`UNREACHABLE` if ``g``
    is disconnected, 0 for an empty or single-node graph."""
    diams = component_diameters(g)
    if len(diams) > 1:
        return UNREACHABLE
    return diams[0] if diams else 0


@dataclass(frozen=True)
class DiameterEstimate:
    """Estimated network diameter from a spine and its tau counts.

    ``estimate = pendant(u) + d_spine(u, v) + pendant(v)`` for the
    maximizing spine pair ``endpoints``, with ``pendant(w) = tau(w) / 2``
    when ``tau(w) > 1`` and 0 otherwise.
    """

    spine_diameter: int
    endpoints: tuple[int, int]
    estimate: Fraction
    per_endpoint_pendant: tuple[Fraction, Fraction]
    components: int = 1


def pendant_diameter(tau: int) -> Fraction:
    return Fraction(tau, 2) if tau > 1 else Fraction(0)


def estimate_diameter(r: ReductionResult) -> DiameterEstimate:
    """Spine diameter plus half the size of the pendant communities at the
    two ends, maximized over spine pairs within a component.

    Ties go to the lexicographically smallest pair. A component of a single
    spine node contributes ``pendant(u)`` alone.
    """
    spine = r.spine
    if spine.n == 0:
        raise ValueError("cannot estimate the diameter of an empty spine")
    pend = {y: pendant_diameter(t) for y, t in r.tau.items()}
    best: tuple[Fraction, int, int] | None = None
    spine_diam = 0
    comps = connected_components(spine)
    for comp in comps:
        members = list(comp)
        if len(members) == 1:
            u = members[0]
            cand = (pend[u], u, u)
            if best is None or cand[0] > best[0] or (cand[0] == best[0] and (u, u) < best[1:]):
                best = cand
            continue
        for u in members:
            dist = bfs_distances(spine, u)
            for v in members:
                if v <= u:
                    continue
                d = int(dist[v])
                spine_diam = max(spine_diam, d)
                val = pend[u] + d + pend[v]
                if best is None or val > best[0] or (val == best[0] and (u, v) < best[1:]):
                    best = (val, u, v)
    assert best is not None
    val, u, v = best
    return DiameterEstimate(
        spine_diameter=spine_diam,
        endpoints=(u, v),
        estimate=val,
        per_endpoint_pendant=(pend[u], pend[v]) if u != v else (pend[u], Fraction(0)),
        components=len(comps),
    )
