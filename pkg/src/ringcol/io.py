"""JSON and DOT serialization.

Documented formats (all 1-based labels, canonical edge order, sorted keys):

graph.json::

    { "n": 2, "k": 4,
      "vertices": [[1, 1], [1, 2], ...],
      "edges": [[[1, 1], [2, 1]], ...] }

coloring.json::

    { "t": 7,
      "edges": [ {"u": [1, 1], "v": [2, 1], "color": 3}, ... ] }

Report, search-outcome, and bounds documents are produced by the ``*_to_dict``
helpers below; the CLI wraps them with ``dump_json`` so identical runs write
byte-identical files.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any

from .coloring import EdgeColoring, VerificationReport
from .construct import BoundsSummary
from .errors import FormatError
from .graphs import Edge, Graph, Vertex, build_graph, make_edge
from .search import BoundReport, SearchOutcome

__all__ = [
    "graph_to_dict",
    "graph_from_dict",
    "coloring_to_dict",
    "coloring_from_dict",
    "report_to_dict",
    "outcome_to_dict",
    "bounds_to_dict",
    "bound_report_to_dict",
    "dump_json",
    "load_json",
    "load_graph",
    "load_coloring",
    "dot_source",
]


def _vertex_pair(v: Vertex) -> list[int]:
    return [v.layer, v.index]


def _as_vertex(obj: Any, what: str) -> Vertex:
    if (
        not isinstance(obj, (list, tuple))
        or len(obj) != 2
        or not all(isinstance(x, int) and not isinstance(x, bool) for x in obj)
    ):
        raise FormatError(f"{what} must be a [layer, index] pair of integers, got {obj!r}")
    return Vertex(obj[0], obj[1])


def graph_to_dict(g: Graph) -> dict[str, Any]:
    return {
        "n": g.n,
        "k": g.k,
        "vertices": [_vertex_pair(v) for v in g.vertices],
        "edges": [[_vertex_pair(e.u), _vertex_pair(e.v)] for e in g.edges],
    }


def graph_from_dict(doc: Any) -> Graph:
    if not isinstance(doc, dict):
        raise FormatError("graph document must be a JSON object")
    for key in ("n", "k", "vertices", "edges"):
        if key not in doc:
            raise FormatError(f"graph document missing key {key!r}")
    n, k = doc["n"], doc["k"]
    if not all(isinstance(x, int) and not isinstance(x, bool) for x in (n, k)):
        raise FormatError("graph n and k must be integers")
    vertices = [_as_vertex(v, "vertex") for v in doc["vertices"]]
    edges = []
    for pair in doc["edges"]:
        if not isinstance(pair, (list, tuple)) or len(pair) != 2:
            raise FormatError(f"edge must be a pair of vertices, got {pair!r}")
        edges.append((_as_vertex(pair[0], "edge endpoint"), _as_vertex(pair[1], "edge endpoint")))
    return build_graph(n, k, vertices, edges)


def coloring_to_dict(c: EdgeColoring) -> dict[str, Any]:
    return {
        "t": c.t,
        "edges": [
            {"u": _vertex_pair(e.u), "v": _vertex_pair(e.v), "color": c.colors[e]}
            for e in sorted(c.colors)
        ],
    }


def coloring_from_dict(doc: Any) -> EdgeColoring:
    if not isinstance(doc, dict):
        raise FormatError("coloring document must be a JSON object")
    for key in ("t", "edges"):
        if key not in doc:
            raise FormatError(f"coloring document missing key {key!r}")
    t = doc["t"]
    if not isinstance(t, int) or isinstance(t, bool):
        raise FormatError("coloring t must be an integer")
    colors: dict[Edge, int] = {}
    for entry in doc["edges"]:
        if not isinstance(entry, dict) or not {"u", "v", "color"} <= set(entry):
            raise FormatError(f"coloring entry must have u, v, color, got {entry!r}")
        e = make_edge(_as_vertex(entry["u"], "u"), _as_vertex(entry["v"], "v"))
        if e in colors:
            raise FormatError(f"edge {e} colored twice in document")
        c = entry["color"]
        if not isinstance(c, int) or isinstance(c, bool):
            raise FormatError(f"color of {e} must be an integer, got {c!r}")
        colors[e] = c
    return EdgeColoring(colors=colors, t=t)


def report_to_dict(r: VerificationReport) -> dict[str, Any]:
    return {
        "t": r.t,
        "is_proper": r.is_proper,
        "is_interval": r.is_interval,
        "covers_palette": r.covers_palette,
        "is_interval_coloring": r.is_interval_coloring,
        "proper_violations": [
            {
                "vertex": _vertex_pair(v),
                "color": c,
                "edges": [[_vertex_pair(e.u), _vertex_pair(e.v)] for e in edges],
            }
            for v, c, edges in r.proper_violations
        ],
        "gap_vertices": [
            {"vertex": _vertex_pair(v), "spectrum": list(s.colors)}
            for v, s in r.gap_vertices
        ],
        "missing_colors": list(r.missing_colors),
    }


def outcome_to_dict(o: SearchOutcome) -> dict[str, Any]:
    return {
        "status": o.status,
        "nodes_explored": o.nodes_explored,
        "witness": coloring_to_dict(o.witness) if o.witness is not None else None,
    }


def bounds_to_dict(b: BoundsSummary) -> dict[str, Any]:
    return {
        "n": b.n,
        "k": b.k,
        "chromatic_index": b.chromatic_index,
        "interval_colorable": b.interval_colorable,
        "w": b.w,
        "W_lower": b.W_lower,
        "W_exact": b.W_exact,
        "feasible_t": list(b.feasible_t) if b.feasible_t is not None else None,
    }


def bound_report_to_dict(r: BoundReport) -> dict[str, Any]:
    return {
        "value": r.value,
        "status": r.status,
        "t_max": r.t_max,
        "nodes_explored": r.nodes_explored,
        "trail": [[t, status] for t, status in r.trail],
    }


def dump_json(doc: Any, path: str | Path) -> None:
    Path(path).write_text(json.dumps(doc, indent=2, sort_keys=True) + "\n", encoding="utf-8")


def load_json(path: str | Path) -> Any:
    return json.loads(Path(path).read_text(encoding="utf-8"))


def load_graph(path: str | Path) -> Graph:
    return graph_from_dict(load_json(path))


def load_coloring(path: str | Path) -> EdgeColoring:
    return coloring_from_dict(load_json(path))


def dot_source(g: Graph, coloring: EdgeColoring | None = None) -> str:
    """GraphViz source for a graph, with edge color labels when given."""
    lines = ["graph G {"]
    for v in g.vertices:
        lines.append(f'  "x{v.layer}_{v.index}";')
    for e in g.edges:
        label = ""
        if coloring is not None and e in coloring.colors:
            label = f' [label="{coloring.colors[e]}"]'
        lines.append(f'  "x{e.u.layer}_{e.u.index}" -- "x{e.v.layer}_{e.v.index}"{label};')
    lines.append("}")
    return "\n".join(lines) + "\n"
