import os
import sys

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

sys.path.insert(0, os.path.dirname(__file__))

from netspine.graph import Graph  # noqa: E402

settings.register_profile(
    "default", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")


def labelled(edges, nodes=()):
    return Graph.from_edges(edges, nodes)


@pytest.fixture
def k3():
    return labelled([("a", "b"), ("b", "c"), ("a", "c")])


@pytest.fixture
def c4():
    return labelled([("a", "b"), ("b", "c"), ("c", "d"), ("d", "a")])


@pytest.fixture
def p3():
    return labelled([("a", "b"), ("b", "c")])


@pytest.fixture
def c5_chord():
    """C5 a-b-c-d-e-a with the chord (a, c)."""
    return labelled(
        [("a", "b"), ("b", "c"), ("c", "d"), ("d", "e"), ("e", "a"), ("a", "c")]
    )


@st.composite
def graphs(draw, min_nodes=0, max_nodes=16, density=None):
    n = draw(st.integers(min_nodes, max_nodes))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    if density is None:
        density = draw(st.sampled_from([0.1, 0.25, 0.5, 0.8]))
    flags = draw(st.lists(st.floats(0, 1), min_size=len(pairs), max_size=len(pairs)))
    edges = [p for p, f in zip(pairs, flags) if f < density]
    return Graph.from_index_edges(n, edges)


@st.composite
def graphs_with_subset(draw, **kw):
    g = draw(graphs(**kw))
    members = draw(st.sets(st.integers(0, max(g.universe_size - 1, 0)))) if g.universe_size else set()
    return g, g.nodeset(members)


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
