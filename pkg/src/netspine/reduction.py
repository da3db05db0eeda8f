"""Reduction of a network to its irreducible spine.

A node ``z`` is subsumed by a neighbor ``y`` when every neighbor of ``z``
lies in the closed neighborhood of ``y``. Deleting ``z`` then lengthens no
shortest path between the remaining nodes. :func:`reduce_graph` sweeps
the nodes in a given order, deleting subsumed neighbors as it meets them,
and repeats until a full sweep deletes nothing.
"""

from __future__ import annotations

import logging
import random
from dataclasses import dataclass, field
from typing import Sequence

from .graph import Graph, bfs_distances
from .nodeset import NodeSet, iter_bits

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class SubsumptionEvent:
    survivor: int
    victim: int
    iteration: int


@dataclass(frozen=True)
class ReductionResult:
    """Outcome of :func:`reduce_graph`.

    ``tau`` and ``beta`` are keyed by survivor id. ``beta[y]`` holds the
    original ids absorbed by ``y``, including ``y``. ``subsumed_edges[y]``
    counts the edges deleted along with the members of ``beta[y]``, so
    ``spine.e + sum(subsumed_edges.values())`` is the original edge count.
    """

    graph: Graph
    spine: Graph
    tau: dict[int, int]
    beta: dict[int, NodeSet]
    trace: list[SubsumptionEvent]
    iterations: int
    visit_order: tuple[int, ...]
    subsumed_edges: dict[int, int] = field(default_factory=dict)

    @property
    def survivors(self) -> NodeSet:
        return self.spine.nodes

    def owner(self) -> dict[int, int]:
        """Map every original node id to the survivor it belongs to."""
        out = {}
        for y, members in self.beta.items():
            for z in members:
                out[z] = y
        return out


def subsumes(g: Graph, y: int, z: int) -> bool:
    """True iff ``z`` is a neighbor of ``y`` whose neighborhood lies in the
    region of ``y``, i.e. the closure of ``{z}`` is inside that of ``{y}``."""
    if y == z:
        raise ValueError("a node is not tested against itself")
    if not (g.has_node(y) and g.has_node(z)):
        raise ValueError("both nodes must be present in the graph")
    adj = g.adj_bits
    if not adj[y] >> z & 1:
        return False
    return adj[z] & ~(adj[y] | 1 << y) == 0


def _check_order(g: Graph, visit_order: Sequence[int] | None) -> tuple[int, ...]:
    present = list(iter_bits(g.node_bits))
    if visit_order is None:
        return tuple(present)
    order = tuple(int(v) for v in visit_order)
    if sorted(order) != present:
        raise ValueError("visit_order must be a permutation of the graph's node ids")
    return order


def random_visit_order(g: Graph, seed: int | None) -> tuple[int, ...]:
    order = list(iter_bits(g.node_bits))
    random.Random(seed).shuffle(order)
    return tuple(order)


def reduce_graph(g: Graph, visit_order: Sequence[int] | None = None) -> ReductionResult:
    """Delete subsumed nodes until none remain.

    Each sweep visits nodes in ``visit_order`` (ascending id by default).
    For a visited node ``y``, its current neighbors are examined in the
    same order and any neighbor ``z`` with ``N(z) <= N[y]`` is deleted on
    the spot, its tally folded into ``y``. ``iterations`` counts sweeps,
    including the final one that finds nothing to delete.
    """
    order = _check_order(g, visit_order)
    rank = [0] * g.universe_size
    for i, v in enumerate(order):
        rank[v] = i

    adj = list(g.adj_bits)
    alive = g.node_bits
    tau = {v: 1 for v in order}
    beta = {v: 1 << v for v in order}
    sub_edges = {v: 0 for v in order}
    trace: list[SubsumptionEvent] = []

    iteration = 0
    while True:
        iteration += 1
        removed_this_sweep = 0
        for y in order:
            if not alive >> y & 1:
                continue
            for z in sorted(iter_bits(adj[y]), key=rank.__getitem__):
                if not adj[y] >> z & 1:
                    continue
                closed_y = adj[y] | 1 << y
                if adj[z] & ~closed_y:
                    continue
                # z is subsumed by y
                nz = adj[z]
                for x in iter_bits(nz):
                    adj[x] &= ~(1 << z)
                adj[z] = 0
                alive &= ~(1 << z)
                tau[y] += tau.pop(z)
                beta[y] |= beta.pop(z)
                sub_edges[y] += sub_edges.pop(z) + nz.bit_count()
                trace.append(SubsumptionEvent(y, z, iteration))
                removed_this_sweep += 1
        log.debug("sweep %d removed %d nodes", iteration, removed_this_sweep)
        if not removed_this_sweep:
            break

    spine = Graph(adj, g.labels, alive)
    log.info(
        "reduced %d nodes to %d in %d iterations", g.n, spine.n, iteration
    )
    size = g.universe_size
    return ReductionResult(
        graph=g,
        spine=spine,
        tau=dict(sorted(tau.items())),
        beta={y: NodeSet.from_bits(size, b) for y, b in sorted(beta.items())},
        trace=trace,
        iterations=iteration,
        visit_order=order,
        subsumed_edges=dict(sorted(sub_edges.items())),
    )


def replay(g: Graph, trace: Sequence[SubsumptionEvent]) -> NodeSet:
    """Apply a recorded trace to ``g`` and return the surviving node set.

    Every event is re-checked against the graph at that point, so a trace
    that does not describe legal subsumptions raises ``ValueError``.
    """
    adj = list(g.adj_bits)
    alive = g.node_bits
    seen_victims = set()
    for ev in trace:
        y, z = ev.survivor, ev.victim
        if z in seen_victims or y == z:
            raise ValueError(f"invalid event {ev}")
        if not (alive >> y & 1 and alive >> z & 1 and adj[y] >> z & 1):
            raise ValueError(f"event {ev} refers to a deleted or non-adjacent node")
        if adj[z] & ~(adj[y] | 1 << y):
            raise ValueError(f"event {ev} is not a subsumption")
        for x in iter_bits(adj[z]):
            adj[x] &= ~(1 << z)
        adj[z] = 0
        alive &= ~(1 << z)
        seen_victims.add(z)
    return NodeSet.from_bits(g.universe_size, alive)


def is_irreducible(g: Graph) -> bool:
    """True iff every singleton is closed, i.e. no node subsumes a neighbor."""
    adj = g.adj_bits
    for y in iter_bits(g.node_bits):
        closed_y = adj[y] | 1 << y
        for z in iter_bits(adj[y]):
            if adj[z] & ~closed_y == 0:
                return False
    return True


def spine_of(g: Graph, visit_order: Sequence[int] | None = None) -> Graph:
    return reduce_graph(g, visit_order).spine


# -- verification helpers ----------------------------------------------------


def check_conservation(r: ReductionResult) -> list[str]:
    """Problems with the tau/beta bookkeeping (empty list when sound)."""
    problems = []
    g = r.graph
    if set(r.tau) != set(r.survivors):
        problems.append("tau keys differ from the survivor set")
    if sum(r.tau.values()) != g.n:
        problems.append(f"sum of tau is {sum(r.tau.values())}, expected {g.n}")
    union = 0
    for y, members in r.beta.items():
        if y not in members:
            problems.append(f"survivor {g.labels[y]!r} missing from its own beta")
        if members.bits & union:
            problems.append(f"beta of {g.labels[y]!r} overlaps another beta")
        union |= members.bits
        if r.tau.get(y) != len(members):
            problems.append(f"tau of {g.labels[y]!r} differs from |beta|")
    if union != g.node_bits:
        problems.append("beta sets do not cover the node set")
    if r.spine.e + sum(r.subsumed_edges.values()) != g.e:
        problems.append("spine edges plus subsumed edges differ from the original edge count")
    return problems


def low_degree_spine_nodes(spine: Graph) -> list[int]:
    """Spine nodes of degree exactly one (there should be none)."""
    return [u for u in spine.nodes if spine.degree(u) == 1]


def distance_violations(
    r: ReductionResult, sources: Sequence[int] | None = None
) -> list[tuple[int, int, float, float]]:
    """Survivor pairs whose spine distance differs from the original one.

    Returns ``(u, v, original, spine)`` tuples. ``sources`` restricts the
    check to pairs with ``u`` in it; by default every survivor is used.
    """
    survivors = list(r.survivors)
    if sources is None:
        sources = survivors
    out = []
    for u in sources:
        d_orig = bfs_distances(r.graph, u)
        d_spine = bfs_distances(r.spine, u)
        for v in survivors:
            if d_orig[v] != d_spine[v]:
                out.append((u, v, d_orig[v], d_spine[v]))
    return out


def verification_problems(
    r: ReductionResult,
    claimed_spine: bool = False,
    distance_sources: Sequence[int] | None = None,
) -> list[str]:
    """Run the invariant checks on a reduction and describe each breach.

    With ``claimed_spine`` the input graph itself must be irreducible.
    """
    g = r.graph
    problems = []
    if claimed_spine and not is_irreducible(g):
        problems.append("input graph is not irreducible")
    if not is_irreducible(r.spine):
        problems.append("spine is not irreducible")
    for u in low_degree_spine_nodes(r.spine):
        problems.append(f"spine node {g.labels[u]!r} has degree 1")
    problems.extend(check_conservation(r))
    try:
        if replay(g, r.trace) != r.survivors:
            problems.append("trace does not replay to the survivor set")
    except ValueError as exc:
        problems.append(f"trace does not replay: {exc}")
    for u, v, d0, d1 in distance_violations(r, distance_sources):
        problems.append(
            f"distance {g.labels[u]!r}-{g.labels[v]!r} is {d1} on the spine, {d0} originally"
        )
    return problems


__all__ = [
    "ReductionResult",
    "SubsumptionEvent",
    "check_conservation",
    "distance_violations",
    "is_irreducible",
    "low_degree_spine_nodes",
    "random_visit_order",
    "reduce_graph",
    "replay",
    "spine_of",
    "subsumes",
    "verification_problems",
]
