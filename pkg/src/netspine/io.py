"""Edge-list input, DOT output and JSON analysis reports.

Edge-list format
----------------
One edge per line as two whitespace-separated labels. Blank lines and
lines whose first non-blank character is ``#`` are skipped. A line
``node <label>`` declares a node (useful for isolated ones). Labels get
dense ids in order of first appearance.

Report format
-------------
A JSON object with sorted keys and two-space indentation. Rationals are
written as ``{"type": "rational", "exact": "p/q", "decimal": "..."}``
and an infinite distance as ``{"type": "infinity"}``, so
:func:`read_report` restores exact values. The layout is versioned by
``provenance.schema``.
"""

from __future__ import annotations

import json
import math
import warnings
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from typing import Any, Hashable

from .cycles import Cycle, check_cycle
from .graph import Graph
from .reduction import ReductionResult

REPORT_SCHEMA = 1


class EdgeListError(ValueError):
    """Malformed edge-list input; ``lineno`` is 1-based."""

    def __init__(self, lineno: int, message: str) -> None:
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


class DuplicateEdgeWarning(UserWarning):
    pass


def read_edge_list(text: str) -> tuple[Graph, int]:
    """Parse edge-list text; returns the graph and the number of duplicate
    edges that were dropped."""
    index: dict[str, int] = {}
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    duplicates = 0

    def ident(label: str) -> int:
        if label not in index:
            index[label] = len(index)
        return index[label]

    for lineno, line in enumerate(text.splitlines(), 1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        tokens = stripped.split()
        if len(tokens) != 2:
            raise EdgeListError(lineno, f"expected two labels, got {len(tokens)} field(s)")
        a, b = tokens
        if a == "node":
            ident(b)
            continue
        if a == b:
            raise EdgeListError(lineno, f"self-loop at {a!r}")
        u, v = ident(a), ident(b)
        key = (min(u, v), max(u, v))
        if key in seen:
            duplicates += 1
            continue
        seen.add(key)
        edges.append(key)
    return Graph.from_index_edges(len(index), edges, list(index)), duplicates


def parse_edge_list(text: str) -> Graph:
    """Parse edge-list text into a :class:`Graph`.

    Repeated edges are collapsed with a :class:`DuplicateEdgeWarning`;
    malformed lines and self-loops raise :class:`EdgeListError`.
    """
    g, duplicates = read_edge_list(text)
    if duplicates:
        warnings.warn(
            f"{duplicates} duplicate edge(s) collapsed", DuplicateEdgeWarning, stacklevel=2
        )
    return g


def write_edge_list(g: Graph) -> str:
    """Serialize ``g``: every present node declared in id order, then the edges."""
    labels = [str(lab) for lab in g.labels]
    for u in g.nodes:
        lab = labels[u]
        if not lab or any(ch.isspace() for ch in lab):
            raise ValueError(f"label {lab!r} cannot be written to an edge list")
    lines = [f"node {labels[u]}" for u in g.nodes]
    for u, v in g.edges():
        a, b = labels[u], labels[v]
        if a == "node":
            a, b = b, a
        lines.append(f"{a} {b}")
    return "\n".join(lines) + "\n"


def _dot_id(label: Hashable) -> str:
    text = str(label).replace("\\", "\\\\").replace('"', '\\"')
    return f'"{text}"'


def write_dot(
    g: Graph,
    r: ReductionResult | None = None,
    highlight: Cycle | None = None,
    name: str = "network",
) -> str:
    """Render ``g`` as an undirected DOT graph.

    Survivors of ``r`` are labelled ``"<label>:<tau>"``; edges of
    ``highlight`` get ``style=bold``.
    """
    bold: set[tuple[int, int]] = set()
    if highlight is not None:
        check_cycle(g, highlight)
        bold = set(highlight.edges())
    lines = [f"graph {_dot_id(name)} {{", "  node [shape=ellipse];"]
    for u in g.nodes:
        lab = g.labels[u]
        if r is not None and u in r.tau:
            lines.append(f"  {_dot_id(lab)} [label={_dot_id(f'{lab}:{r.tau[u]}')}];")
        else:
            lines.append(f"  {_dot_id(lab)};")
    for u, v in g.edges():
        attr = " [style=bold, penwidth=3]" if (u, v) in bold else ""
        lines.append(f"  {_dot_id(g.labels[u])} -- {_dot_id(g.labels[v])}{attr};")
    lines.append("}")
    return "\n".join(lines) + "\n"


# -- reports ---------------------------------------------------------------


def _fraction_json(x: Fraction) -> dict[str, str]:
    if x.denominator == 1:
        exact = str(x.numerator)
    else:
        exact = f"{x.numerator}/{x.denominator}"
    return {"type": "rational", "exact": exact, "decimal": format(float(x), ".12g")}


def _encode(obj: Any) -> Any:
    if isinstance(obj, bool) or obj is None or isinstance(obj, (int, str)):
        return obj
    if isinstance(obj, Fraction):
        return _fraction_json(obj)
    if isinstance(obj, float):
        if math.isinf(obj) and obj > 0:
            return {"type": "infinity"}
        raise TypeError("reports carry exact values only; got a float")
    if isinstance(obj, dict):
        return {str(k): _encode(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_encode(v) for v in obj]
    raise TypeError(f"cannot encode {type(obj).__name__} in a report")


def _decode(obj: Any) -> Any:
    if isinstance(obj, dict):
        if obj.get("type") == "rational" and set(obj) == {"type", "exact", "decimal"}:
            return Fraction(obj["exact"])
        if obj == {"type": "infinity"}:
            return math.inf
        return {k: _decode(v) for k, v in obj.items()}
    if isinstance(obj, list):
        return [_decode(v) for v in obj]
    return obj


@dataclass
class AnalysisReport:
    """All results of one analysis run, keyed by original node labels.

    Sections that were not computed are ``None``.
    """

    input: dict[str, Any]
    provenance: dict[str, Any]
    reduction: dict[str, Any] | None = None
    signature: dict[str, Any] | None = None
    centers: dict[str, Any] | None = None
    diameter: dict[str, Any] | None = None
    extra: dict[str, Any] = field(default_factory=dict)

    def to_dict(self) -> dict[str, Any]:
        return _encode(asdict(self))

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> AnalysisReport:
        return cls(**_decode(data))


def write_report(report: AnalysisReport) -> str:
    """Canonical JSON text: sorted keys, fixed layout, trailing newline."""
    return json.dumps(report.to_dict(), sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def read_report(text: str) -> AnalysisReport:
    return AnalysisReport.from_dict(json.loads(text))
