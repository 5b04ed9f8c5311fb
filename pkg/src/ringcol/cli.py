"""Command-line front end.

Subcommands: generate, construct, verify, search, bounds, bounds-exact,
sweep, export-dot. Every invocation appends one JSON line to a manifest file
(default ``runs.jsonl``) recording the command, its parameters, the artifact
paths it wrote, the exit status, and the wall time.

Exit codes (stable, also listed in the README):

    0  success; for ``verify``/``search``: the coloring is interval / found
    1  verification failure or proven infeasibility
    2  parameter error (bad n/k/t, malformed document, graph/coloring mismatch)
    3  unsupported parity (odd k where the construction needs even k)
    4  search budget exhausted
    5  I/O failure (unreadable file, invalid JSON syntax)

All code paths are deterministic: identical invocations write byte-identical
artifacts. The environment variable ``RINGCOL_NODE_LIMIT`` supplies a default
search budget for commands that take ``--node-limit``.
"""

from __future__ import annotations

import argparse
import csv
import io as _stdio
import json
import os
import sys
import time
from dataclasses import asdict, dataclass
from pathlib import Path
from typing import Any, Callable

from . import io as rio
from .construct import bounds_summary, mirrored_staircase_coloring, t_coloring
from .coloring import verify
from .errors import (
    BudgetExhaustedError,
    ColoringError,
    FormatError,
    ParameterError,
    ParityError,
)
from .graphs import RingParams, ring_graph
from .search import (
    STRATEGIES,
    SearchConfig,
    compute_W,
    compute_chromatic_index,
    compute_w,
    continuity_scan,
    find_interval_t,
)

ENV_NODE_LIMIT = "RINGCOL_NODE_LIMIT"

EXIT_OK = 0
EXIT_VERIFY_FAIL = 1
EXIT_PARAMETER = 2
EXIT_PARITY = 3
EXIT_BUDGET = 4
EXIT_IO = 5

SWEEP_COLUMNS = [
    "n",
    "k",
    "num_vertices",
    "num_edges",
    "max_degree",
    "nk_even",
    "chi_formula",
    "chi_oracle",
    "chi_agree",
    "w_formula",
    "w_oracle",
    "w_status",
    "w_agree",
    "W_lower_formula",
    "W_oracle",
    "W_status",
    "continuity",
    "nodes_explored",
]


@dataclass
class RunManifest:
    command: str
    parameters: dict[str, Any]
    artifact_paths: list[str]
    exit_status: int
    wall_time_s: float


def _append_manifest(path: str | Path, manifest: RunManifest) -> None:
    line = json.dumps(asdict(manifest), sort_keys=True)
    with open(path, "a", encoding="utf-8") as fh:
        fh.write(line + "\n")


def _default_node_limit() -> int | None:
    raw = os.environ.get(ENV_NODE_LIMIT)
    if raw is None or raw == "":
        return None
    try:
        value = int(raw)
    except ValueError as exc:
        raise ParameterError(f"{ENV_NODE_LIMIT} must be an integer, got {raw!r}") from exc
    return value


def _search_config(args: argparse.Namespace) -> SearchConfig:
    node_limit = getattr(args, "node_limit", None)
    if node_limit is None:
        node_limit = _default_node_limit()
    return SearchConfig(
        t_max=getattr(args, "t_max", None),
        node_limit=node_limit,
        strategy=getattr(args, "strategy", "start_assignment"),
    )


def _print_json(doc: Any) -> None:
    print(json.dumps(doc, indent=2, sort_keys=True))


# ---------------------------------------------------------------------------
# Subcommands
# ---------------------------------------------------------------------------


def cmd_generate(args: argparse.Namespace, artifacts: list[str]) -> int:
    g = ring_graph(RingParams(args.n, args.k))
    rio.dump_json(rio.graph_to_dict(g), args.out)
    artifacts.append(args.out)
    if args.dot:
        dot_path = str(Path(args.out).with_suffix(".dot"))
        Path(dot_path).write_text(rio.dot_source(g), encoding="utf-8")
        artifacts.append(dot_path)
    print(f"wrote {args.out}: {len(g.vertices)} vertices, {len(g.edges)} edges")
    return EXIT_OK


def cmd_construct(args: argparse.Namespace, artifacts: list[str]) -> int:
    params = RingParams(args.n, args.k)
    if args.t is None:
        coloring = mirrored_staircase_coloring(params)
    else:
        coloring = t_coloring(params, args.t, _search_config(args))
    g = ring_graph(params)
    report = verify(g, coloring)
    rio.dump_json(rio.coloring_to_dict(coloring), args.out)
    artifacts.append(args.out)
    if not report.is_interval_coloring:
        print(f"self-verification FAILED for {args.out}", file=sys.stderr)
        return EXIT_VERIFY_FAIL
    print(f"wrote {args.out}: interval {coloring.t}-coloring of the (n={args.n}, k={args.k}) ring")
    return EXIT_OK


def cmd_verify(args: argparse.Namespace, artifacts: list[str]) -> int:
    g = rio.load_graph(args.graph)
    coloring = rio.load_coloring(args.coloring)
    report = verify(g, coloring)
    _print_json(rio.report_to_dict(report))
    return EXIT_OK if report.is_interval_coloring else EXIT_VERIFY_FAIL


def cmd_search(args: argparse.Namespace, artifacts: list[str]) -> int:
    g = rio.load_graph(args.graph)
    outcome = find_interval_t(g, args.t, _search_config(args))
    doc = rio.outcome_to_dict(outcome)
    _print_json(doc)
    if args.out:
        rio.dump_json(doc, args.out)
        artifacts.append(args.out)
    if outcome.status == "witness":
        return EXIT_OK
    if outcome.status == "exhausted_budget":
        return EXIT_BUDGET
    return EXIT_VERIFY_FAIL


def cmd_bounds(args: argparse.Namespace, artifacts: list[str]) -> int:
    summary = bounds_summary(RingParams(args.n, args.k))
    _print_json(rio.bounds_to_dict(summary))
    return EXIT_OK


def _tri_value(report) -> dict[str, Any]:
    if report.status == "not_interval_colorable":
        return {"value": None, "status": "exact"}
    return {"value": report.value, "status": report.status}


def cmd_bounds_exact(args: argparse.Namespace, artifacts: list[str]) -> int:
    params = RingParams(args.n, args.k)
    g = ring_graph(params)
    cfg = _search_config(args)

    w_report = compute_w(g, cfg)
    W_report = compute_W(g, cfg)
    budget_hit = "inconclusive" in (w_report.status, W_report.status) or W_report.status == "lower_bound_only"
    try:
        chi: dict[str, Any] = {"value": compute_chromatic_index(g, cfg), "status": "exact"}
    except BudgetExhaustedError:
        chi = {"value": None, "status": "inconclusive"}
        budget_hit = True

    doc = {
        "n": args.n,
        "k": args.k,
        "interval_colorable": w_report.value is not None,
        "w": _tri_value(w_report),
        "W": _tri_value(W_report),
        "chi_prime": chi,
        "t_max": W_report.t_max,
    }
    _print_json(doc)
    if args.out:
        rio.dump_json(doc, args.out)
        artifacts.append(args.out)
    return EXIT_BUDGET if budget_hit else EXIT_OK


def _sweep_cell(n: int, k: int, cfg: SearchConfig) -> dict[str, Any]:
    params = RingParams(n, k)
    g = ring_graph(params)
    summary = bounds_summary(params)

    nodes = 0
    try:
        chi_oracle: int | None = compute_chromatic_index(g, cfg)
    except BudgetExhaustedError:
        chi_oracle = None

    w_report = compute_w(g, cfg)
    nodes += w_report.nodes_explored
    W_report = compute_W(g, cfg)
    nodes += W_report.nodes_explored

    if w_report.value is None:
        continuity = "n/a" if w_report.status == "not_interval_colorable" else "inconclusive"
    elif W_report.value is None:
        continuity = "inconclusive"
    else:
        scan = continuity_scan(g, cfg, t_hi=W_report.value)
        statuses = {status for _, status in scan}
        if statuses <= {"witness"}:
            continuity = "ok"
        elif "infeasible" in statuses:
            gaps = [t for t, status in scan if status == "infeasible"]
            continuity = f"gap(t={','.join(map(str, gaps))})"
        else:
            continuity = "inconclusive"

    def blank(x: Any) -> Any:
        return "" if x is None else x

    chi_agree = "" if chi_oracle is None else ("yes" if chi_oracle == summary.chromatic_index else "no")
    if w_report.status == "inconclusive":
        w_agree = ""
    else:
        w_agree = "yes" if w_report.value == summary.w else "no"

    return {
        "n": n,
        "k": k,
        "num_vertices": len(g.vertices),
        "num_edges": len(g.edges),
        "max_degree": g.max_degree(),
        "nk_even": "yes" if (n * k) % 2 == 0 else "no",
        "chi_formula": summary.chromatic_index,
        "chi_oracle": blank(chi_oracle),
        "chi_agree": chi_agree,
        "w_formula": blank(summary.w),
        "w_oracle": blank(w_report.value),
        "w_status": w_report.status,
        "w_agree": w_agree,
        "W_lower_formula": blank(summary.W_lower),
        "W_oracle": blank(W_report.value),
        "W_status": W_report.status,
        "continuity": continuity,
        "nodes_explored": nodes,
    }


def cmd_sweep(args: argparse.Namespace, artifacts: list[str]) -> int:
    if args.n_max < 1 or args.k_max < 3:
        raise ParameterError(f"grid needs n_max >= 1 and k_max >= 3, got {args.n_max}, {args.k_max}")
    cfg = _search_config(args)

    rows = [
        _sweep_cell(n, k, cfg)
        for n in range(1, args.n_max + 1)
        for k in range(3, args.k_max + 1)
    ]

    buf = _stdio.StringIO()
    writer = csv.DictWriter(buf, fieldnames=SWEEP_COLUMNS, lineterminator="\n")
    writer.writeheader()
    writer.writerows(rows)
    csv_path = f"{args.out}.csv"
    json_path = f"{args.out}.json"
    Path(csv_path).write_text(buf.getvalue(), encoding="utf-8")
    rio.dump_json(
        {
            "columns": SWEEP_COLUMNS,
            "grid": {"n_max": args.n_max, "k_max": args.k_max},
            "node_limit": cfg.node_limit,
            "cells": rows,
        },
        json_path,
    )
    artifacts.extend([csv_path, json_path])
    print(f"wrote {csv_path} and {json_path}: {len(rows)} cells")
    return EXIT_OK


def cmd_export_dot(args: argparse.Namespace, artifacts: list[str]) -> int:
    g = rio.load_graph(args.graph)
    coloring = rio.load_coloring(args.coloring) if args.coloring else None
    Path(args.out).write_text(rio.dot_source(g, coloring), encoding="utf-8")
    artifacts.append(args.out)
    print(f"wrote {args.out}")
    return EXIT_OK


# ---------------------------------------------------------------------------
# Parser and dispatch
# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ringcol",
        description="Interval edge colorings of ring-layered regular graphs: "
        "generators, constructions, verification, exhaustive search.",
    )
    parser.add_argument(
        "--manifest",
        default="runs.jsonl",
        help="append-only run manifest file (default: %(default)s)",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, func: Callable[[argparse.Namespace, list[str]], int], help_: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help_)
        p.set_defaults(func=func)
        return p

    p = add("generate", cmd_generate, "build a ring graph and write its JSON (and optional DOT)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--dot", action="store_true", help="also write a .dot file next to --out")

    p = add("construct", cmd_construct, "write an interval coloring of the (n, k) ring")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--t", type=int, default=None, help="span to realize (default: the widest constructed)")
    p.add_argument("--out", required=True)
    p.add_argument("--node-limit", type=int, default=None)
    p.add_argument("--strategy", choices=STRATEGIES, default="start_assignment")

    p = add("verify", cmd_verify, "verify a coloring file against a graph file")
    p.add_argument("--graph", required=True)
    p.add_argument("--coloring", required=True)

    p = add("search", cmd_search, "decide interval t-colorability of a graph file")
    p.add_argument("--graph", required=True)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--strategy", choices=STRATEGIES, default="start_assignment")
    p.add_argument("--node-limit", type=int, default=None)
    p.add_argument("--out", default=None, help="also write the outcome JSON here")

    p = add("bounds", cmd_bounds, "closed-form bounds summary for (n, k)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)

    p = add("bounds-exact", cmd_bounds_exact, "oracle-computed w, W, chromatic index for (n, k)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--node-limit", type=int, default=None)
    p.add_argument("--t-max", dest="t_max", type=int, default=None)
    p.add_argument("--strategy", choices=STRATEGIES, default="start_assignment")
    p.add_argument("--out", default=None)

    p = add("sweep", cmd_sweep, "formula-vs-oracle report over the (n, k) grid")
    p.add_argument("--n-max", dest="n_max", type=int, required=True)
    p.add_argument("--k-max", dest="k_max", type=int, required=True)
    p.add_argument("--out", required=True, help="output prefix; writes <out>.csv and <out>.json")
    p.add_argument("--node-limit", type=int, default=None)
    p.add_argument("--t-max", dest="t_max", type=int, default=None)
    p.add_argument("--strategy", choices=STRATEGIES, default="start_assignment")

    p = add("export-dot", cmd_export_dot, "write GraphViz DOT for a graph (optionally colored)")
    p.add_argument("--graph", required=True)
    p.add_argument("--coloring", default=None)
    p.add_argument("--out", required=True)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)

    started = time.perf_counter()
    artifacts: list[str] = []
    try:
        status = args.func(args, artifacts)
    except ParityError as exc:
        print(f"error: {exc}", file=sys.stderr)
        status = EXIT_PARITY
    except (ParameterError, ColoringError, FormatError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        status = EXIT_PARAMETER
    except BudgetExhaustedError as exc:
        print(f"error: {exc}", file=sys.stderr)
        status = EXIT_BUDGET
    except (OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        status = EXIT_IO

    wall = time.perf_counter() - started
    manifest = RunManifest(
        command=args.command,
        parameters={
            key: value
            for key, value in sorted(vars(args).items())
            if key not in ("func", "command", "manifest") and value is not None
        },
        artifact_paths=artifacts,
        exit_status=status,
        wall_time_s=round(wall, 6),
    )
    try:
        _append_manifest(args.manifest, manifest)
    except OSError as exc:
        print(f"warning: could not append manifest: {exc}", file=sys.stderr)

    return status


if __name__ == "__main__":
    sys.exit(main())
