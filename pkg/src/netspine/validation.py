"""Input validation shared by the estimators and the CLI."""

from __future__ import annotations

import numbers
from collections.abc import Iterable, Sequence

import numpy as np
from sklearn.utils import check_random_state

from .graph import Graph
from .nodeset import iter_bits


def _from_matrix(a) -> Graph:
    if hasattr(a, "toarray"):
        a = a.toarray()
    a = np.asarray(a)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"adjacency matrix must be square, got shape {a.shape}")
    if np.any(np.diagonal(a) != 0):
        raise ValueError("adjacency matrix has self-loops on its diagonal")
    if not np.array_equal(a, a.T):
        raise ValueError("adjacency matrix must be symmetric")
    if not np.isin(a, (0, 1)).all():
        raise ValueError("adjacency matrix entries must be 0 or 1")
    rows, cols = np.nonzero(np.triu(a, 1))
    return Graph.from_index_edges(a.shape[0], zip(rows.tolist(), cols.tolist()))


def check_graph(X) -> Graph:
    """Coerce ``X`` to a :class:`Graph`.

    Accepts a ``Graph``, a square symmetric 0/1 adjacency matrix (dense or
    scipy sparse), or an iterable of ``(label, label)`` edges.
    """
    if isinstance(X, Graph):
        return X
    if isinstance(X, (str, bytes)):
        raise TypeError("got text; parse edge lists with netspine.io.parse_edge_list")
    if isinstance(X, np.ndarray) or hasattr(X, "toarray"):
        return _from_matrix(X)
    if isinstance(X, Iterable):
        edges = []
        for item in X:
            try:
                a, b = item
            except (TypeError, ValueError):
                raise ValueError(f"edges must be pairs, got {item!r}") from None
            edges.append((a, b))
        return Graph.from_edges(edges)
    raise TypeError(f"cannot interpret {type(X).__name__} as a graph")


def check_graphs(X) -> list[Graph]:
    """Coerce a collection of graphs, one graph per sample."""
    if isinstance(X, Graph) or (isinstance(X, np.ndarray) and X.ndim == 2):
        raise ValueError(
            "expected a sequence of graphs; wrap a single graph in a list"
        )
    if isinstance(X, (str, bytes)) or not isinstance(X, Iterable):
        raise TypeError(f"expected a sequence of graphs, got {type(X).__name__}")
    return [check_graph(g) for g in X]


def check_max_k(max_k, min_k=3) -> tuple[int, int]:
    for name, val in (("min_k", min_k), ("max_k", max_k)):
        if not isinstance(val, numbers.Integral) or isinstance(val, bool):
            raise TypeError(f"{name} must be an integer, got {val!r}")
    if min_k < 3:
        raise ValueError(f"min_k must be at least 3, got {min_k}")
    if max_k < min_k:
        raise ValueError(f"max_k must be at least min_k={min_k}, got {max_k}")
    return int(min_k), int(max_k)


def resolve_visit_order(visit_order, g: Graph, random_state=None) -> tuple[int, ...] | None:
    """Turn an estimator's ``visit_order`` parameter into node ids.

    ``"ascending"`` gives ``None`` (the default order), ``"random"``
    shuffles with ``random_state``, and an explicit sequence is checked
    to be a permutation of the present node ids.
    """
    if isinstance(visit_order, str):
        if visit_order == "ascending":
            return None
        if visit_order == "random":
            rng = check_random_state(random_state)
            order = np.fromiter(iter_bits(g.node_bits), dtype=np.int64, count=g.n)
            rng.shuffle(order)
            return tuple(order.tolist())
        raise ValueError(
            f"visit_order must be 'ascending', 'random' or a sequence, got {visit_order!r}"
        )
    if not isinstance(visit_order, Sequence) and not isinstance(visit_order, np.ndarray):
        raise TypeError("visit_order must be a string or a sequence of node ids")
    order = tuple(int(v) for v in visit_order)
    if sorted(order) != list(iter_bits(g.node_bits)):
        raise ValueError("visit_order must be a permutation of the graph's node ids")
    return order
