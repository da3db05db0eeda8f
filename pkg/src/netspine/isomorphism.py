"""Exact isomorphism test for small graphs.

Colour refinement run jointly on both graphs prunes the candidate
images of every node; a backtracking search then extends a partial
bijection one node at a time, checking adjacency against every node
already mapped.
"""

from __future__ import annotations

from collections import Counter

from .graph import Graph
from .nodeset import iter_bits

MAX_NODES = 64


def _refine(
    nodes1: list[int], adj1: tuple[int, ...], nodes2: list[int], adj2: tuple[int, ...]
) -> tuple[dict[int, int], dict[int, int]] | None:
    """Joint 1-WL refinement. Returns stable colourings or ``None`` once the
    colour histograms diverge."""
    col1 = {u: adj1[u].bit_count() for u in nodes1}
    col2 = {u: adj2[u].bit_count() for u in nodes2}
    n_colours = -1
    while True:
        if Counter(col1.values()) != Counter(col2.values()):
            return None
        current = len(set(col1.values()))
        if current == n_colours:
            return col1, col2
        n_colours = current
        sig1 = {
            u: (col1[u], tuple(sorted(col1[v] for v in iter_bits(adj1[u]))))
            for u in nodes1
        }
        sig2 = {
            u: (col2[u], tuple(sorted(col2[v] for v in iter_bits(adj2[u]))))
            for u in nodes2
        }
        palette = {s: i for i, s in enumerate(sorted(set(sig1.values()) | set(sig2.values())))}
        col1 = {u: palette[s] for u, s in sig1.items()}
        col2 = {u: palette[s] for u, s in sig2.items()}


def find_isomorphism(
    g1: Graph, g2: Graph, max_nodes: int | None = MAX_NODES
) -> dict[int, int] | None:
    """Return an edge-preserving bijection ``g1 -> g2`` or ``None``.

    Raises ``ValueError`` if either graph has more than ``max_nodes`` nodes
    (pass ``None`` to lift the limit).
    """
    if max_nodes is not None and max(g1.n, g2.n) > max_nodes:
        raise ValueError(
            f"isomorphism test limited to {max_nodes} nodes (got {g1.n} and {g2.n})"
        )
    if g1.n != g2.n or g1.e != g2.e:
        return None
    nodes1 = list(iter_bits(g1.node_bits))
    nodes2 = list(iter_bits(g2.node_bits))
    adj1, adj2 = g1.adj_bits, g2.adj_bits
    refined = _refine(nodes1, adj1, nodes2, adj2)
    if refined is None:
        return None
    col1, col2 = refined

    by_colour: dict[int, list[int]] = {}
    for v in nodes2:
        by_colour.setdefault(col2[v], []).append(v)
    class_size = {c: len(vs) for c, vs in by_colour.items()}

    # Order g1's nodes so each is adjacent to as many earlier ones as possible,
    # starting from the rarest colour class.
    order: list[int] = []
    placed = 0
    pending = set(nodes1)
    while pending:
        u = min(
            pending,
            key=lambda x: (-(adj1[x] & placed).bit_count(), class_size[col1[x]], x),
        )
        order.append(u)
        placed |= 1 << u
        pending.remove(u)

    mapping: dict[int, int] = {}
    used = 0

    def extend(i: int) -> bool:
        nonlocal used
        if i == len(order):
            return True
        u = order[i]
        for v in by_colour[col1[u]]:
            if used >> v & 1:
                continue
            ok = True
            for w in order[:i]:
                if bool(adj1[u] >> w & 1) != bool(adj2[v] >> mapping[w] & 1):
                    ok = False
                    break
            if not ok:
                continue
            mapping[u] = v
            used |= 1 << v
            if extend(i + 1):
                return True
            del mapping[u]
            used &= ~(1 << v)
        return False

    if extend(0):
        return dict(mapping)
    return None


def isomorphic(g1: Graph, g2: Graph, max_nodes: int | None = MAX_NODES) -> bool:
    """True iff ``g1`` and ``g2`` are isomorphic (exact)."""
    return find_isomorphism(g1, g2, max_nodes) is not None
