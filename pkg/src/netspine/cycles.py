"""Chordless (induced) cycles, signatures and connective complexity."""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from .graph import Graph
from .nodeset import NodeSet, iter_bits


def canonical_form(vertices: Sequence[int]) -> tuple[int, ...]:
    """Rotate ``vertices`` to start at its minimum and pick the direction
    whose second element is smaller."""
    k = len(vertices)
    i = min(range(k), key=vertices.__getitem__)
    fwd = tuple(vertices[(i + j) % k] for j in range(k))
    bwd = (fwd[0],) + fwd[:0:-1]
    return min(fwd, bwd)


@dataclass(frozen=True, order=True)
class Cycle:
    """A vertex cycle, stored in canonical form.

    Two ``Cycle`` values compare equal iff they describe the same cycle,
    whatever rotation or direction they were built from.
    """

    vertices: tuple[int, ...]

    def __post_init__(self) -> None:
        verts = tuple(int(v) for v in self.vertices)
        if len(verts) < 3:
            raise ValueError("a cycle needs at least 3 vertices")
        if len(set(verts)) != len(verts):
            raise ValueError("cycle vertices must be distinct")
        object.__setattr__(self, "vertices", canonical_form(verts))

    def __len__(self) -> int:
        return len(self.vertices)

    def __iter__(self):
        return iter(self.vertices)

    def edges(self) -> list[tuple[int, int]]:
        """Cycle edges as sorted ``(u, v)`` pairs with ``u < v``."""
        vs = self.vertices
        return sorted(
            (min(a, b), max(a, b)) for a, b in zip(vs, vs[1:] + vs[:1])
        )

    def labels(self, g: Graph) -> list:
        return [g.labels[v] for v in self.vertices]


def check_cycle(g: Graph, c: Cycle) -> None:
    """Raise ``ValueError`` unless consecutive vertices of ``c`` are adjacent in ``g``."""
    vs = c.vertices
    if max(vs) >= g.universe_size:
        raise ValueError("cycle vertex outside the graph")
    for a, b in zip(vs, vs[1:] + vs[:1]):
        if not g.adj_bits[a] >> b & 1:
            raise ValueError(f"({g.labels[a]!r}, {g.labels[b]!r}) is not an edge of the graph")


def is_chordless(g: Graph, c: Cycle) -> bool:
    """True iff no edge of ``g`` joins two non-consecutive vertices of ``c``."""
    check_cycle(g, c)
    vs = c.vertices
    k = len(vs)
    members = 0
    for v in vs:
        members |= 1 << v
    adj = g.adj_bits
    for i, v in enumerate(vs):
        allowed = 1 << vs[i - 1] | 1 << vs[(i + 1) % k]
        if adj[v] & members & ~allowed:
            return False
    return True


def _cycles_from(adj: Sequence[int], u: int, min_k: int, max_k: int) -> list[tuple[int, ...]]:
    """Chordless cycles whose minimum vertex is ``u``.

    Paths ``u, p1, ..., ph`` are grown so that every vertex is larger than
    ``u`` and no vertex is adjacent to an earlier one except its
    predecessor (and ``p1`` to ``u``). A candidate adjacent to ``u``
    closes a cycle and is not extended further. Each cycle is produced in
    the direction with ``p1`` below the closing vertex only.
    """
    above = ~((1 << (u + 1)) - 1)
    found = []
    for p1 in iter_bits(adj[u] & above):
        stack = [((u, p1), (1 << u) | (1 << p1))]
        while stack:
            path, on_path = stack.pop()
            head = path[-1]
            h = len(path)
            # Candidates: neighbours of head, above u, not on the path, and not
            # adjacent to any path vertex before head other than u.
            for x in iter_bits(adj[head] & above & ~on_path):
                ax = adj[x]
                if ax & on_path & ~(1 << head) & ~(1 << u):
                    continue
                if ax >> u & 1:
                    if x > p1 and min_k <= h + 1 <= max_k:
                        found.append(path + (x,))
                    continue
                if h + 1 < max_k:
                    stack.append((path + (x,), on_path | 1 << x))
    return found


def _check_bounds(min_k: int, max_k: int) -> None:
    if min_k < 3:
        raise ValueError("min_k must be at least 3")
    if max_k < min_k:
        raise ValueError("max_k must be at least min_k")


def _anchor_chunk(adj: Sequence[int], anchors: list[int], min_k: int, max_k: int):
    out = []
    for u in anchors:
        out.extend(_cycles_from(adj, u, min_k, max_k))
    return out


def enumerate_chordless_cycles(
    g: Graph, min_k: int = 3, max_k: int = 32, n_jobs: int | None = None
) -> list[Cycle]:
    """All chordless cycles of ``g`` with ``min_k <= length <= max_k``.

    Each cycle appears once, in canonical form, and the result is sorted.
    ``n_jobs`` fans the anchor vertices out over joblib workers; the
    result is identical to the sequential run.
    """
    _check_bounds(min_k, max_k)
    adj = g.adj_bits
    anchors = list(iter_bits(g.node_bits))
    if n_jobs is None:
        n_jobs = int(os.environ.get("NETSPINE_JOBS", "1"))
    if n_jobs == 1 or len(anchors) < 2:
        raw = _anchor_chunk(adj, anchors, min_k, max_k)
    else:
        from joblib import Parallel, delayed

        workers = (os.cpu_count() or 1) if n_jobs < 0 else n_jobs
        chunks = [anchors[i::workers] for i in range(workers)]
        parts = Parallel(n_jobs=n_jobs)(
            delayed(_anchor_chunk)(adj, chunk, min_k, max_k) for chunk in chunks if chunk
        )
        raw = [c for part in parts for c in part]
    return sorted(Cycle(vs) for vs in raw)


@dataclass(frozen=True)
class Signature:
    """Histogram of chordless cycle lengths.

    ``counts`` only lists lengths that occur. ``complete`` is true when
    ``max_k_searched`` reaches the node count, so no longer chordless
    cycle can have been missed.
    """

    counts: dict[int, int]
    max_k_searched: int
    node_count: int
    min_k_searched: int = 3
    cycles: tuple[Cycle, ...] = field(default=(), compare=False, repr=False)

    @property
    def complete(self) -> bool:
        return self.min_k_searched == 3 and self.max_k_searched >= self.node_count

    @property
    def cc(self) -> Fraction | None:
        if self.node_count == 0:
            return None
        return connective_complexity(self, self.node_count)

    def count(self, k: int) -> int:
        return self.counts.get(k, 0)

    def as_vector(self, min_k: int | None = None, max_k: int | None = None) -> list[int]:
        lo = self.min_k_searched if min_k is None else min_k
        hi = self.max_k_searched if max_k is None else max_k
        return [self.counts.get(k, 0) for k in range(lo, hi + 1)]

    def longest(self) -> list[Cycle]:
        """The cycles of maximum length found (sorted)."""
        if not self.cycles:
            return []
        k = max(len(c) for c in self.cycles)
        return [c for c in self.cycles if len(c) == k]


def signature(g: Graph, max_k: int = 32, min_k: int = 3, n_jobs: int | None = None) -> Signature:
    cycles = enumerate_chordless_cycles(g, min_k, max_k, n_jobs=n_jobs)
    counts: dict[int, int] = {}
    for c in cycles:
        counts[len(c)] = counts.get(len(c), 0) + 1
    return Signature(
        counts=dict(sorted(counts.items())),
        max_k_searched=max_k,
        node_count=g.n,
        min_k_searched=min_k,
        cycles=tuple(cycles),
    )


def connective_complexity(sig: Signature | dict[int, int], node_count: int) -> Fraction:
    """Sum of ``k * n_k`` over the histogram, divided by ``node_count``."""
    if node_count <= 0:
        raise ValueError("node_count must be positive")
    counts = sig.counts if isinstance(sig, Signature) else sig
    return Fraction(sum(k * n for k, n in counts.items()), node_count)


def longest_cycle_intersection(
    cycles: Iterable[Cycle], universe_size: int | None = None
) -> tuple[NodeSet, set[tuple[int, int]]]:
    """Nodes and edges shared by every cycle of maximum length in ``cycles``.

    Shorter cycles in the input are ignored.
    """
    cycles = list(cycles)
    if not cycles:
        raise ValueError("no cycles to intersect")
    k = max(len(c) for c in cycles)
    major = [c for c in cycles if len(c) == k]
    if universe_size is None:
        universe_size = max(max(c.vertices) for c in major) + 1
    nodes = NodeSet(universe_size, major[0].vertices)
    edges = set(major[0].edges())
    for c in major[1:]:
        nodes = nodes & NodeSet(universe_size, c.vertices)
        edges &= set(c.edges())
    return nodes, edges
