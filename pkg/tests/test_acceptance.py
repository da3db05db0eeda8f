"""Acceptance criteria, one test each.

Every test prints a single ``PASS``/``FAIL`` line (also collected in the
terminal summary). Run with ``pytest tests/test_acceptance.py -s`` to see
them inline.
"""

import logging
import math
import random
import time
from math import comb

import pytest
from conftest import ACCEPTANCE_LINES
from oracles import brute_force_chordless, graph_sets, naive_betweenness

from netspine.centrality import betweenness, center_containment_check, centers, raw_betweenness
from netspine.cli import main
from netspine.cycles import enumerate_chordless_cycles, signature
from netspine.generators import (
    cycle_graph,
    cycle_with_pendant_trees,
    cycle_with_tail,
    gnp_random_graph,
    petersen_graph,
    random_chordal_graph,
    sparse_random_graph,
    star_graph,
)
from netspine.graph import Graph, bfs_distances, closure, is_connected
from netspine.io import write_edge_list
from netspine.isomorphism import isomorphic
from netspine.reduction import (
    is_irreducible,
    random_visit_order,
    reduce_graph,
)

log = logging.getLogger("netspine.acceptance")


def verdict(name, ok, detail):
    line = f"{'PASS' if ok else 'FAIL'}  {name}: {detail}"
    print(line)
    ACCEPTANCE_LINES.append(line)
    assert ok, line


_TIMINGS = {}


@pytest.fixture(scope="module")
def reduction_corpus():
    """100 random graphs with n <= 40, each reduced under 10 random visit orders."""
    rng = random.Random(20240)
    start = time.perf_counter()
    corpus = []
    for _ in range(100):
        n = rng.randint(1, 40)
        g = gnp_random_graph(n, rng.choice([0.05, 0.1, 0.2, 0.3]), rng.random())
        runs = [reduce_graph(g, random_visit_order(g, rng.random())) for _ in range(10)]
        corpus.append((g, runs))
    _TIMINGS["corpus"] = time.perf_counter() - start
    return corpus


def test_closure_axioms():
    rng = random.Random(1)
    start = time.perf_counter()
    failures = checks = 0
    for _ in range(200):
        n = rng.randint(1, 64)
        g = gnp_random_graph(n, rng.choice([0.05, 0.1, 0.3]), rng.random())
        for _ in range(50):
            x = g.nodeset(v for v in range(n) if rng.random() < 0.3)
            y = x | g.nodeset(v for v in range(n) if rng.random() < 0.3)
            cx, cy = closure(g, x), closure(g, y)
            ok = x <= cx and cx <= cy and closure(g, cx) == cx
            failures += not ok
            checks += 1
    elapsed = time.perf_counter() - start
    verdict(
        "closure axioms",
        failures == 0 and elapsed < 10,
        f"{checks} subsets, {failures} failures, {elapsed:.2f}s (limit 10s)",
    )


def test_spine_uniqueness(reduction_corpus):
    # runtime covers the 1000 reductions as well as the isomorphism tests
    start = time.perf_counter()
    failures = 0
    for _g, runs in reduction_corpus:
        first = runs[0].spine
        failures += sum(not isomorphic(first, r.spine) for r in runs[1:])
    elapsed = time.perf_counter() - start + _TIMINGS["corpus"]
    verdict(
        "spine uniqueness",
        failures == 0 and elapsed < 60,
        f"100 graphs x 10 orders, {failures} non-isomorphic pairs, {elapsed:.2f}s (limit 60s)",
    )


def _all_reductions(corpus):
    for g, runs in corpus:
        for r in runs:
            yield g, r


def test_irreducibility_and_degree(reduction_corpus):
    failures = 0
    for _g, r in _all_reductions(reduction_corpus):
        s = r.spine
        low = [v for v in s.nodes if 0 < s.degree(v) < 2]
        failures += (not is_irreducible(s)) or bool(low)
    verdict("irreducibility and min degree", failures == 0, f"1000 spines, {failures} failures")


def test_distance_preservation(reduction_corpus):
    failures = pairs = 0
    for g, r in _all_reductions(reduction_corpus):
        for u in r.survivors:
            dg, ds = bfs_distances(g, u), bfs_distances(r.spine, u)
            for v in r.survivors:
                pairs += 1
                failures += dg[v] != ds[v]
    verdict("distance preservation", failures == 0, f"{pairs} spine pairs, {failures} mismatches")


def test_tau_conservation(reduction_corpus):
    failures = 0
    for g, r in _all_reductions(reduction_corpus):
        blocks = list(r.beta.values())
        covered = set()
        disjoint = True
        for b in blocks:
            disjoint &= covered.isdisjoint(b)
            covered |= set(b)
        ok = (
            sum(r.tau.values()) == g.n
            and covered == set(g.nodes)
            and disjoint
            and all(r.tau[y] == len(r.beta[y]) and y in r.beta[y] for y in r.survivors)
        )
        failures += not ok
    verdict("tau conservation", failures == 0, f"1000 reductions, {failures} failures")


def test_chordal_collapse():
    rng = random.Random(7)
    sizes = [rng.randint(1, 200) for _ in range(100)]
    failures = sum(reduce_graph(random_chordal_graph(n, seed=i)).spine.n != 1 for i, n in enumerate(sizes))
    verdict("chordal collapse", failures == 0, f"100 graphs (n <= {max(sizes)}), {failures} not single-node")


def test_cycle_enumeration_oracle():
    rng = random.Random(3)
    failures = 0
    for _ in range(100):
        g = gnp_random_graph(rng.randint(3, 12), rng.choice([0.2, 0.35, 0.5, 0.7]), rng.random())
        nodes, adj = graph_sets(g)
        got = enumerate_chordless_cycles(g, 3, 8)
        failures += {frozenset(c.vertices) for c in got} != brute_force_chordless(nodes, adj, 8) or len(
            got
        ) != len({frozenset(c.vertices) for c in got})
    pet = petersen_graph()
    nodes, adj = graph_sets(pet)
    oracle = {}
    for c in brute_force_chordless(nodes, adj, 10):
        oracle[len(c)] = oracle.get(len(c), 0) + 1
    pet_counts = signature(pet, max_k=10).counts
    ok = failures == 0 and pet_counts == oracle == {5: 12, 6: 10}
    verdict("cycle enumeration oracle", ok, f"100 graphs, {failures} mismatches; Petersen {pet_counts}")


def test_betweenness_oracle():
    rng = random.Random(5)
    failures = done = 0
    while done < 100:
        g = gnp_random_graph(rng.randint(2, 10), rng.choice([0.3, 0.5, 0.7]), rng.random())
        if not is_connected(g):
            continue
        done += 1
        nodes, adj = graph_sets(g)
        frac, raw = naive_betweenness(nodes, adj)
        failures += betweenness(g) != frac or raw_betweenness(g) != raw
    star_bad = [k for k in range(3, 11) if raw_betweenness(star_graph(k))[0] != comb(k, 2)]
    verdict(
        "betweenness oracle",
        failures == 0 and not star_bad,
        f"100 connected graphs, {failures} mismatches; star hubs off C(k,2): {star_bad}",
    )


# Frozen graphs where both balance conditions hold yet a center misses the spine.
# CE1: C_C = C_B = {9}; 9 is absorbed by 5 after 5 gathers pendant mass.
CE1 = [(2, 9), (2, 10), (2, 19), (4, 13), (5, 7), (5, 9), (5, 13), (6, 14), (6, 18), (7, 8), (7, 9),
       (7, 14), (8, 13), (9, 10), (11, 13), (12, 17), (12, 19), (14, 18)]
# CE2: C_B = {2} (fractional and raw); 2 absorbs leaf 3, then 6 absorbs 2.
CE2 = [(0, 1), (0, 4), (0, 7), (0, 8), (1, 2), (1, 4), (1, 6), (1, 7), (1, 8), (2, 3), (2, 4), (2, 6),
       (2, 8), (4, 7), (4, 8), (5, 6), (5, 7), (6, 8)]


def test_center_containment():
    rng = random.Random(11)
    graphs = [("CE1", Graph.from_edges(CE1)), ("CE2", Graph.from_index_edges(9, CE2))]
    for i in range(300):
        n = rng.randint(2, 64)
        p = rng.choice([0.05, 0.1, 0.2, 0.3]) if n <= 30 else rng.choice([0.05, 0.08, 0.1])
        graphs.append((f"random-{i}", gnp_random_graph(n, p, rng.random())))
    met = 0
    violations = []
    for name, g in graphs:
        rep = center_containment_check(g, reduce_graph(g))
        if rep.status == "hypotheses_unmet":
            continue
        met += 1
        if rep.status == "violated":
            missing = [c for c, on in (("C_C", rep.cc_on_spine), ("C_B", rep.cb_on_spine)) if not on]
            violations.append(f"{name}({'/'.join(missing)})")
    verdict(
        "center containment",
        not violations,
        f"{met} balanced graphs, {len(violations)} counterexamples: {', '.join(violations) or 'none'}",
    )


def test_cycle_with_pendant_trees_reduces_to_cycle():
    failures = []
    for seed in range(20):
        g = cycle_with_pendant_trees(14, 9, seed=seed)
        r = reduce_graph(g)
        cycle = set(range(14))
        c = centers(g)
        ok = (
            set(r.survivors) == cycle
            and isomorphic(r.spine, cycle_graph(14))
            and signature(r.spine, max_k=32).counts == {14: 1}
            and set(c.cc_center) <= cycle
            and set(c.cb_center) <= cycle
        )
        if not ok:
            failures.append(seed)
    verdict("14-cycle with pendant trees", not failures, f"20 seeds, failing seeds: {failures or 'none'}")


def test_performance_smoke():
    g = sparse_random_graph(5000, 4, seed=2024)
    start = time.perf_counter()
    r = reduce_graph(g)
    elapsed = time.perf_counter() - start
    log.info("5000-node reduction: %d iterations, spine %d nodes", r.iterations, r.spine.n)
    chain = {n: reduce_graph(cycle_with_tail(n)).iterations for n in (50, 100, 200)}
    # one removal per sweep: iterations = n - 3, so slope 1 and ratio of increments 2
    slope = (chain[200] - chain[50]) / 150
    linear = chain[50] < chain[100] < chain[200] and math.isclose(
        (chain[200] - chain[100]) / (chain[100] - chain[50]), 2.0, rel_tol=0.05
    )
    verdict(
        "performance smoke",
        elapsed < 5 and linear,
        f"5000 nodes in {elapsed:.2f}s (limit 5s), {r.iterations} iterations; "
        f"chain iterations {chain}, slope {slope:.2f}",
    )


def test_determinism(tmp_path, monkeypatch):
    path = tmp_path / "net.edges"
    path.write_text(write_edge_list(sparse_random_graph(150, 3, seed=9)))
    outputs = []
    for i, jobs in enumerate(("1", "1", "2")):
        monkeypatch.setenv("NETSPINE_JOBS", jobs)
        report, dot = tmp_path / f"r{i}.json", tmp_path / f"s{i}.dot"
        code = main(["report", str(path), "--max-k", "12", "--visit-order", "seed:5",
                     "--report", str(report), "--dot", str(dot)])
        assert code == 0
        outputs.append(report.read_bytes() + dot.read_bytes())
    verdict(
        "determinism",
        outputs[0] == outputs[1] == outputs[2],
        f"{len(outputs[0])} bytes; sequential runs identical: {outputs[0] == outputs[1]}, "
        f"parallel run identical: {outputs[0] == outputs[2]}",
    )
