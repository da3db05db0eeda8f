"""scikit-learn style front ends.

:class:`SpineReducer` and :class:`ChordlessCycleSignature` are stateless
transformers over *collections* of graphs, so they chain in a
``Pipeline`` (graphs -> spines -> cycle-count features).
:class:`NetworkAnalyzer` runs the whole analysis on one network.
"""

from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils import check_random_state
from sklearn.utils.validation import check_is_fitted

from . import __version__
from .centrality import (
    center_containment_check,
    centers,
    estimate_diameter,
    exact_diameter,
)
from .cycles import connective_complexity, longest_cycle_intersection, signature
from .graph import connected_components
from .io import REPORT_SCHEMA, AnalysisReport
from .reduction import reduce_graph
from .validation import check_graph, check_graphs, check_max_k, resolve_visit_order

SECTIONS = ("reduction", "signature", "centers", "diameter")


def _visit_order_name(visit_order, random_state):
    if isinstance(visit_order, str):
        if visit_order == "random":
            return f"seed:{random_state}" if random_state is not None else "random"
        return visit_order
    return "explicit"


class SpineReducer(TransformerMixin, BaseEstimator):
    """Reduce each graph to its irreducible spine.

    Parameters
    ----------
    visit_order : {"ascending", "random"} or sequence of int
        Order in which each sweep visits nodes. An explicit sequence is
        only meaningful for single-graph inputs.
    random_state : int, RandomState or None
        Seeds the shuffle when ``visit_order="random"``.

    Attributes
    ----------
    reductions_ : list of ReductionResult
        One per graph passed to ``fit``.
    n_iter_ : list of int
        Reduction sweeps used per fitted graph.
    """

    def __init__(self, visit_order="ascending", random_state=None):
        self.visit_order = visit_order
        self.random_state = random_state

    def _reduce_all(self, graphs):
        rng = check_random_state(self.random_state)
        out = []
        for g in graphs:
            order = resolve_visit_order(self.visit_order, g, rng)
            out.append(reduce_graph(g, order))
        return out

    def fit(self, X, y=None):
        self.reductions_ = self._reduce_all(check_graphs(X))
        self.n_iter_ = [r.iterations for r in self.reductions_]
        return self

    def transform(self, X):
        check_is_fitted(self, "reductions_")
        return [r.spine for r in self._reduce_all(check_graphs(X))]

    def fit_transform(self, X, y=None, **fit_params):
        self.fit(X)
        return [r.spine for r in self.reductions_]


class ChordlessCycleSignature(TransformerMixin, BaseEstimator):
    """Map each graph to its counts of chordless cycles of length
    ``min_k .. max_k``.

    The output is an integer array of shape ``(n_graphs, max_k - min_k + 1)``.
    """

    def __init__(self, min_k=3, max_k=32, n_jobs=None):
        self.min_k = min_k
        self.max_k = max_k
        self.n_jobs = n_jobs

    def fit(self, X, y=None):
        min_k, max_k = check_max_k(self.max_k, self.min_k)
        check_graphs(X)
        self.n_features_out_ = max_k - min_k + 1
        return self

    def transform(self, X):
        check_is_fitted(self, "n_features_out_")
        graphs = check_graphs(X)
        min_k, max_k = check_max_k(self.max_k, self.min_k)
        out = np.zeros((len(graphs), max_k - min_k + 1), dtype=np.int64)
        for i, g in enumerate(graphs):
            sig = signature(g, max_k=max_k, min_k=min_k, n_jobs=self.n_jobs)
            out[i] = sig.as_vector(min_k, max_k)
        return out

    def get_feature_names_out(self, input_features=None):
        check_is_fitted(self, "n_features_out_")
        return np.asarray(
            [f"chordless_{k}" for k in range(self.min_k, self.max_k + 1)], dtype=object
        )


class NetworkAnalyzer(BaseEstimator):
    """Full analysis of a single network: spine, cycle signature, centers
    and diameter.

    Parameters
    ----------
    max_k : int
        Longest chordless cycle searched for on the spine.
    visit_order, random_state
        As for :class:`SpineReducer`.
    exact_diameter : bool
        Also compute the exact diameter of the original network by
        repeated BFS (quadratic in the node count).
    sections : tuple of str or None
        Subset of ``("reduction", "signature", "centers", "diameter")``
        to compute; ``None`` computes all. The reduction always runs.
    n_jobs : int or None
        Workers for cycle enumeration.
    """

    def __init__(
        self,
        max_k=32,
        visit_order="ascending",
        random_state=None,
        exact_diameter=True,
        sections=None,
        n_jobs=None,
    ):
        self.max_k = max_k
        self.visit_order = visit_order
        self.random_state = random_state
        self.exact_diameter = exact_diameter
        self.sections = sections
        self.n_jobs = n_jobs

    def _sections(self):
        if self.sections is None:
            return SECTIONS
        unknown = set(self.sections) - set(SECTIONS)
        if unknown:
            raise ValueError(f"unknown sections: {sorted(unknown)}")
        return tuple(s for s in SECTIONS if s in self.sections)

    def fit(self, X, y=None):
        sections = self._sections()
        _, max_k = check_max_k(self.max_k)
        g = check_graph(X)
        order = resolve_visit_order(self.visit_order, g, self.random_state)
        self.graph_ = g
        self.reduction_ = reduce_graph(g, order)
        self.n_iter_ = self.reduction_.iterations
        self.spine_ = self.reduction_.spine
        self.signature_ = None
        self.centrality_ = None
        self.containment_ = None
        self.diameter_estimate_ = None
        self.exact_diameter_ = None
        if "signature" in sections:
            self.signature_ = signature(self.spine_, max_k=max_k, n_jobs=self.n_jobs)
        if "centers" in sections and g.n:
            self.centrality_ = centers(g)
            self.containment_ = center_containment_check(g, self.reduction_, self.centrality_)
        if "diameter" in sections and g.n:
            self.diameter_estimate_ = estimate_diameter(self.reduction_)
            if self.exact_diameter:
                self.exact_diameter_ = exact_diameter(g)
        self.sections_ = sections
        return self

    # -- report assembly ---------------------------------------------------

    def report(self) -> AnalysisReport:
        """Package the fitted results, keyed by node labels."""
        check_is_fitted(self, "reduction_")
        g, r = self.graph_, self.reduction_
        lab = [str(x) for x in g.labels]

        def names(ids):
            return [lab[i] for i in sorted(ids)]

        rep = AnalysisReport(
            input={
                "nodes": g.n,
                "edges": g.e,
                "components": len(connected_components(g)),
            },
            provenance={
                "tool": "netspine",
                "version": __version__,
                "schema": REPORT_SCHEMA,
                "parameters": {
                    "max_k": int(self.max_k),
                    "visit_order": _visit_order_name(self.visit_order, self.random_state),
                    "exact_diameter": bool(self.exact_diameter),
                    "sections": list(self.sections_),
                },
            },
        )
        if "reduction" in self.sections_:
            rep.reduction = {
                "spine_nodes": r.spine.n,
                "spine_edges": r.spine.e,
                "iterations": r.iterations,
                "events": len(r.trace),
                "survivors": names(r.survivors),
                "tau": {lab[y]: t for y, t in r.tau.items()},
                "beta": {lab[y]: names(b) for y, b in r.beta.items()},
                "subsumed_edges": {lab[y]: k for y, k in r.subsumed_edges.items()},
                "spine_edge_list": [[lab[u], lab[v]] for u, v in r.spine.edges()],
            }
        sig = self.signature_
        if sig is not None:
            section = {
                "counts": {str(k): n for k, n in sig.counts.items()},
                "min_k_searched": sig.min_k_searched,
                "max_k_searched": sig.max_k_searched,
                "complete": sig.complete,
                "total_cycles": sum(sig.counts.values()),
                "cc_spine": connective_complexity(sig, r.spine.n) if r.spine.n else None,
                "cc_original": connective_complexity(sig, g.n) if g.n else None,
                "longest_length": None,
                "longest_count": 0,
                "longest_cycles": [],
                "longest_intersection": None,
            }
            major = sig.longest()
            if major:
                nodes, edges = longest_cycle_intersection(major, g.universe_size)
                section.update(
                    longest_length=len(major[0]),
                    longest_count=len(major),
                    longest_cycles=[[lab[v] for v in c.vertices] for c in major],
                    longest_intersection={
                        "nodes": names(nodes),
                        "edges": [[lab[u], lab[v]] for u, v in sorted(edges)],
                    },
                )
            rep.signature = section
        if self.centrality_ is not None:
            c, ct = self.centrality_, self.containment_
            rep.centers = {
                "cc_center": names(c.cc_center),
                "cb_center": names(c.cb_center),
                "cb_center_raw": names(c.cb_center_raw),
                "min_distance_sum": min(c.distance_sum.values()),
                "max_betweenness": max(c.betweenness.values()),
                "max_raw_betweenness": max(c.raw_betweenness.values()),
                "status": ct.status,
                "balanced": ct.hypotheses_met,
                "unbalanced_nodes": names(ct.unbalanced),
                "cc_on_spine": names(ct.cc_on_spine),
                "cb_on_spine": names(ct.cb_on_spine),
                "cc_contained": ct.cc_contained,
                "cb_contained": ct.cb_contained,
            }
        est = self.diameter_estimate_
        if est is not None:
            u, v = est.endpoints
            rep.diameter = {
                "exact": self.exact_diameter_,
                "estimate": est.estimate,
                "spine_diameter": est.spine_diameter,
                "endpoints": [lab[u], lab[v]],
                "pendant": list(est.per_endpoint_pendant),
                "spine_components": est.components,
            }
        return rep
