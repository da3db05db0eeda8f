"""Simple undirected graphs over a fixed node universe, and the
neighborhood / region / closure primitives used throughout the package.

A :class:`Graph` never reindexes. Subgraphs keep the universe and label
table of their parent and merely mask out the nodes that are gone, so a
node id means the same thing in a network and in every spine derived
from it.
"""

from __future__ import annotations

import math
from collections import deque
from typing import Hashable, Iterable, Sequence

from .nodeset import NodeSet, iter_bits

UNREACHABLE = math.inf


class Graph:
    """Immutable simple undirected graph.

    Parameters
    ----------
    adjacency : sequence of int
        One bitmask per node id; bit ``v`` of ``adjacency[u]`` is set iff
        ``(u, v)`` is an edge.
    labels : sequence of hashable, optional
        External name of each node id. Defaults to ``0 .. universe-1``.
    nodes : int, optional
        Bitmask of the nodes present. Defaults to the whole universe.
        Absent nodes must have no edges.
    """

    __slots__ = ("_adj", "_labels", "_nodes", "_size", "_e", "_index")

    def __init__(
        self,
        adjacency: Sequence[int],
        labels: Sequence[Hashable] | None = None,
        nodes: int | None = None,
    ) -> None:
        size = len(adjacency)
        full = (1 << size) - 1
        if nodes is None:
            nodes = full
        if nodes < 0 or nodes & ~full:
            raise ValueError("node mask exceeds the universe")
        if labels is None:
            labels = tuple(range(size))
        labels = tuple(labels)
        if len(labels) != size:
            raise ValueError("label table must have one entry per node id")
        degree_total = 0
        for u, row in enumerate(adjacency):
            if row < 0 or row & ~full:
                raise ValueError(f"adjacency of node {u} exceeds the universe")
            if row >> u & 1:
                raise ValueError(f"self-loop at node {labels[u]!r}")
            if row and not nodes >> u & 1:
                raise ValueError(f"absent node {labels[u]!r} has edges")
            for v in iter_bits(row):
                if not adjacency[v] >> u & 1:
                    raise ValueError(
                        f"asymmetric adjacency between {labels[u]!r} and {labels[v]!r}"
                    )
            degree_total += row.bit_count()
        index = {}
        for i, lab in enumerate(labels):
            if lab in index:
                raise ValueError(f"duplicate label {lab!r}")
            index[lab] = i
        self._adj = tuple(adjacency)
        self._labels = labels
        self._nodes = nodes
        self._size = size
        self._e = degree_total // 2
        self._index = index

    # -- construction -----------------------------------------------------

    @classmethod
    def from_index_edges(
        cls,
        universe_size: int,
        edges: Iterable[tuple[int, int]],
        labels: Sequence[Hashable] | None = None,
    ) -> Graph:
        """Build a graph from integer edges. Self-loops and repeated edges
        are rejected."""
        adj = [0] * universe_size
        for u, v in edges:
            if not (0 <= u < universe_size and 0 <= v < universe_size):
                raise IndexError(f"edge ({u}, {v}) outside universe of size {universe_size}")
            if u == v:
                raise ValueError(f"self-loop at node {u}")
            if adj[u] >> v & 1:
                raise ValueError(f"parallel edge ({u}, {v})")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(adj, labels)

    @classmethod
    def from_edges(
        cls,
        edges: Iterable[tuple[Hashable, Hashable]],
        nodes: Iterable[Hashable] = (),
    ) -> Graph:
        """Build a graph from labelled edges.

        Labels get dense ids in order of first appearance; ``nodes`` lists
        extra (typically isolated) labels, which are numbered after the
        edge endpoints.
        """
        index: dict[Hashable, int] = {}
        pairs = []
        for a, b in edges:
            for lab in (a, b):
                if lab not in index:
                    index[lab] = len(index)
            pairs.append((index[a], index[b]))
        for lab in nodes:
            if lab not in index:
                index[lab] = len(index)
        return cls.from_index_edges(len(index), pairs, list(index))

    # -- basic accessors ----------------------------------------------------

    @property
    def universe_size(self) -> int:
        return self._size

    @property
    def n(self) -> int:
        """Number of nodes present."""
        return self._nodes.bit_count()

    @property
    def e(self) -> int:
        return self._e

    @property
    def nodes(self) -> NodeSet:
        return NodeSet.from_bits(self._size, self._nodes)

    @property
    def node_bits(self) -> int:
        return self._nodes

    @property
    def labels(self) -> tuple[Hashable, ...]:
        return self._labels

    @property
    def adjacency(self) -> tuple[NodeSet, ...]:
        return tuple(NodeSet.from_bits(self._size, row) for row in self._adj)

    @property
    def adj_bits(self) -> tuple[int, ...]:
        """Raw adjacency bitmasks, one per node id."""
        return self._adj

    def has_node(self, u: int) -> bool:
        self._check_id(u)
        return bool(self._nodes >> u & 1)

    def has_edge(self, u: int, v: int) -> bool:
        self._check_id(u)
        self._check_id(v)
        return bool(self._adj[u] >> v & 1)

    def neighbors(self, u: int) -> NodeSet:
        self._check_id(u)
        return NodeSet.from_bits(self._size, self._adj[u])

    def degree(self, u: int) -> int:
        self._check_id(u)
        return self._adj[u].bit_count()

    def edges(self) -> list[tuple[int, int]]:
        """All edges as ``(u, v)`` with ``u < v``, sorted."""
        out = []
        for u in iter_bits(self._nodes):
            for v in iter_bits(self._adj[u] >> (u + 1)):
                out.append((u, u + 1 + v))
        return out

    def label(self, u: int) -> Hashable:
        self._check_id(u)
        return self._labels[u]

    def index(self, label: Hashable) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise KeyError(f"unknown node label {label!r}") from None

    def nodeset(self, members: Iterable[int] = ()) -> NodeSet:
        return NodeSet(self._size, members)

    def _check_id(self, u: int) -> None:
        if not 0 <= u < self._size:
            raise IndexError(f"node {u} outside universe of size {self._size}")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return (
            self._adj == other._adj
            and self._nodes == other._nodes
            and self._labels == other._labels
        )

    def __hash__(self) -> int:
        return hash((self._adj, self._nodes))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, e={self.e}, universe={self._size})"


def _as_bits(g: Graph, y: NodeSet | Iterable[int]) -> int:
    if isinstance(y, NodeSet):
        if y.universe_size != g.universe_size:
            raise ValueError(
                f"node set universe {y.universe_size} does not match graph universe {g.universe_size}"
            )
        bits = y.bits
    else:
        bits = NodeSet(g.universe_size, y).bits
    if bits & ~g.node_bits:
        missing = [g.labels[i] for i in iter_bits(bits & ~g.node_bits)]
        raise ValueError(f"nodes not present in graph: {missing}")
    return bits


def neighborhood_bits(adj: Sequence[int], y: int) -> int:
    out = 0
    for u in iter_bits(y):
        out |= adj[u]
    return out & ~y


def closure_bits(adj: Sequence[int], y: int) -> int:
    eta = neighborhood_bits(adj, y)
    rho = eta | y
    out = y
    for z in iter_bits(eta):
        if adj[z] & ~rho == 0:
            out |= 1 << z
    return out


def neighborhood(g: Graph, y: NodeSet | Iterable[int]) -> NodeSet:
    """Nodes outside ``y`` adjacent to at least one node of ``y``."""
    bits = _as_bits(g, y)
    return NodeSet.from_bits(g.universe_size, neighborhood_bits(g.adj_bits, bits))


def region(g: Graph, y: NodeSet | Iterable[int]) -> NodeSet:
    """``y`` together with its neighborhood."""
    bits = _as_bits(g, y)
    return NodeSet.from_bits(
        g.universe_size, neighborhood_bits(g.adj_bits, bits) | bits
    )


def closure(g: Graph, y: NodeSet | Iterable[int]) -> NodeSet:
    """Neighborhood closure: ``y`` plus every neighbor of ``y`` whose own
    neighborhood lies inside the region of ``y``."""
    bits = _as_bits(g, y)
    return NodeSet.from_bits(g.universe_size, closure_bits(g.adj_bits, bits))


def bfs_distances(g: Graph, s: int) -> list[float]:
    """Hop distances from ``s``; :data:`UNREACHABLE` for nodes that are
    absent or in another component."""
    if not 0 <= s < g.universe_size:
        raise IndexError(f"node {s} outside universe of size {g.universe_size}")
    if not g.has_node(s):
        raise ValueError(f"node {g.labels[s]!r} is not present in the graph")
    adj = g.adj_bits
    dist: list[float] = [UNREACHABLE] * g.universe_size
    dist[s] = 0
    seen = 1 << s
    frontier = 1 << s
    d = 0
    while frontier:
        d += 1
        nxt = 0
        for u in iter_bits(frontier):
            nxt |= adj[u]
        nxt &= ~seen
        seen |= nxt
        for v in iter_bits(nxt):
            dist[v] = d
        frontier = nxt
    return dist


def bfs_order(g: Graph, s: int) -> tuple[list[int], list[int]]:
    """Plain queue BFS from ``s``: visit order and distances (-1 if unreached)."""
    adj = g.adj_bits
    dist = [-1] * g.universe_size
    dist[s] = 0
    order = []
    queue = deque([s])
    while queue:
        u = queue.popleft()
        order.append(u)
        for v in iter_bits(adj[u]):
            if dist[v] < 0:
                dist[v] = dist[u] + 1
                queue.append(v)
    return order, dist


def induced_subgraph(g: Graph, keep: NodeSet | Iterable[int]) -> Graph:
    """Subgraph on ``keep`` with every edge of ``g`` between kept nodes.

    The universe and label table are preserved; dropped nodes are masked.
    """
    bits = _as_bits(g, keep)
    adj = [row & bits if bits >> u & 1 else 0 for u, row in enumerate(g.adj_bits)]
    return Graph(adj, g.labels, bits)


def connected_components(g: Graph) -> list[NodeSet]:
    """Components as node sets, ordered by their smallest node id."""
    adj = g.adj_bits
    remaining = g.node_bits
    comps = []
    while remaining:
        start = remaining & -remaining
        seen = start
        frontier = start
        while frontier:
            nxt = 0
            for u in iter_bits(frontier):
                nxt |= adj[u]
            frontier = nxt & ~seen
            seen |= frontier
        comps.append(NodeSet.from_bits(g.universe_size, seen))
        remaining &= ~seen
    return comps


def is_connected(g: Graph) -> bool:
    return len(connected_components(g)) <= 1
