"""Small graph families and random generators used by the tests and the
benchmarks."""

from __future__ import annotations

import random
from itertools import combinations

from .graph import Graph


def path_graph(n: int) -> Graph:
    return Graph.from_index_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 nodes")
    return Graph.from_index_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    return Graph.from_index_edges(n, combinations(range(n), 2))


def star_graph(k: int) -> Graph:
    """Hub 0 with ``k`` leaves."""
    return Graph.from_index_edges(k + 1, [(0, i) for i in range(1, k + 1)])


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_index_edges(10, outer + spokes + inner)


def gnp_random_graph(n: int, p: float, seed: int | None = None) -> Graph:
    rng = random.Random(seed)
    edges = [(u, v) for u, v in combinations(range(n), 2) if rng.random() < p]
    return Graph.from_index_edges(n, edges)


def sparse_random_graph(n: int, mean_degree: float, seed: int | None = None) -> Graph:
    """Random graph with ``n * mean_degree / 2`` distinct edges drawn uniformly."""
    rng = random.Random(seed)
    target = int(n * mean_degree / 2)
    seen: set[tuple[int, int]] = set()
    while len(seen) < target:
        u, v = rng.randrange(n), rng.randrange(n)
        if u != v:
            seen.add((min(u, v), max(u, v)))
    return Graph.from_index_edges(n, sorted(seen))


def random_chordal_graph(n: int, seed: int | None = None, max_clique: int = 5) -> Graph:
    """Connected chordal graph grown as a tree of cliques.

    Each new node is joined to a random nonempty subset of an existing
    maximal clique, so its neighborhood is a clique and the graph stays
    chordal.
    """
    if n < 1:
        raise ValueError("n must be positive")
    rng = random.Random(seed)
    edges = []
    cliques = [[0]]
    for v in range(1, n):
        base = rng.choice(cliques)
        size = rng.randint(1, min(len(base), max_clique - 1))
        attach = rng.sample(base, size)
        edges.extend((u, v) for u in attach)
        cliques.append(attach + [v])
    labels = list(range(n))
    rng.shuffle(labels)
    relabel = dict(zip(range(n), labels))
    return Graph.from_index_edges(n, [(relabel[a], relabel[b]) for a, b in edges])


def cycle_with_pendant_trees(
    k: int = 14, pendants: int = 9, max_tree_size: int = 3, seed: int | None = None
) -> Graph:
    """A ``k``-cycle with ``pendants`` small random trees hung off its
    nodes (cycle nodes are ``0 .. k-1``)."""
    rng = random.Random(seed)
    edges = [(i, (i + 1) % k) for i in range(k)]
    nxt = k
    for _ in range(pendants):
        root = rng.randrange(k)
        tree = [root]
        for _ in range(rng.randint(1, max_tree_size)):
            parent = rng.choice(tree)
            edges.append((parent, nxt))
            tree.append(nxt)
            nxt += 1
    return Graph.from_index_edges(nxt, edges)


def cycle_with_tail(n: int) -> Graph:
    """A 4-cycle on ``0..3`` with a path ``0 - 4 - 5 - ... - (n-1)`` hanging off it.

    Visiting nodes in ascending order, each sweep of the reduction removes
    only the current end of the tail, so the sweep count grows linearly
    with ``n`` and the total work quadratically.
    """
    if n < 5:
        raise ValueError("n must be at least 5")
    edges = [(0, 1), (1, 2), (2, 3), (3, 0), (0, 4)]
    edges += [(i, i + 1) for i in range(4, n - 1)]
    return Graph.from_index_edges(n, edges)
