"""Stable JSON / DOT / CSV serialization for graphs, labelings, and reports.

Format applicability:

- json: every artifact; graphs and labelings round-trip via the parsers below.
- dot:  Graph (structure only) and EdgeLabeling (edge label attributes).
- csv:  WeightReport, CensusResult, sweep entry lists, and table rows.

Edge `order_index` is 1-based, matching the prime indexing used everywhere.
"""

from __future__ import annotations

import csv
import io
import json
from typing import Any

from .errors import UnsupportedFormatError
from .explore import CensusResult, SweepEntry
from .graphs import Graph, build_family, tree_address
from .labeling import ARBITRARY, EXPLICIT, ORDERED, EdgeLabeling, label_arbitrary, label_explicit, label_ordered
from .table import COLUMNS, TableRow, errata
from .verify import WeightReport

JSON = "json"
DOT = "dot"
CSV = "csv"


# ---------------------------------------------------------------- JSON docs


def _vertex_entries(graph: Graph, weights: tuple[int, ...] | None = None) -> list[dict]:
    entries = []
    for v in range(graph.vertex_count):
        entry: dict[str, Any] = {"id": v}
        if graph.family == "pbt":
            addr = tree_address(graph.params["level"], v)
            entry["address"] = {
                "level_from_bottom": addr.level_from_bottom,
                "position": addr.position,
            }
        if weights is not None:
            entry["weight"] = weights[v]
        entries.append(entry)
    return entries


def _edge_entries(graph: Graph, labels: tuple[int, ...] | None = None) -> list[dict]:
    entries = []
    for i, (u, v) in enumerate(graph.edges):
        entry: dict[str, Any] = {"u": u, "v": v, "order_index": i + 1}
        if labels is not None:
            entry["label"] = labels[i]
        entries.append(entry)
    return entries


def graph_doc(graph: Graph) -> dict:
    return {
        "kind": "graph",
        "family": graph.family,
        "params": dict(graph.params),
        "vertex_count": graph.vertex_count,
        "vertices": _vertex_entries(graph),
        "edges": _edge_entries(graph),
    }


def labeling_doc(labeling: EdgeLabeling) -> dict:
    graph = labeling.graph
    doc: dict[str, Any] = {
        "kind": "labeling",
        "family": graph.family,
        "params": dict(graph.params),
        "mode": labeling.mode,
    }
    if labeling.mode == ARBITRARY:
        doc["seed"] = labeling.seed
    doc["vertex_count"] = graph.vertex_count
    doc["vertices"] = _vertex_entries(graph)
    doc["edges"] = _edge_entries(graph, labeling.labels)
    return doc


def collision_entries(collisions: tuple[tuple[int, tuple[int, ...]], ...]) -> list[dict]:
    return [{"weight": w, "vertices": list(vs)} for w, vs in collisions]


def weight_report_doc(report: WeightReport) -> dict:
    return {
        "kind": "weight_report",
        "weights": list(report.weights),
        "max_weight": report.max_weight,
        "antimagic": report.antimagic,
        "collision_group_count": report.collision_group_count,
        "collisions": collision_entries(report.collisions),
    }


def verification_doc(labeling: EdgeLabeling, report: WeightReport) -> dict:
    """Combined graph + labeling + weights document produced by `verify`."""
    doc = labeling_doc(labeling)
    doc["kind"] = "verification"
    doc["vertices"] = _vertex_entries(labeling.graph, report.weights)
    doc["antimagic"] = report.antimagic
    doc["max_weight"] = report.max_weight
    doc["collision_group_count"] = report.collision_group_count
    doc["collisions"] = collision_entries(report.collisions)
    return doc


def census_doc(result: CensusResult) -> dict:
    return {
        "kind": "census",
        "family": result.graph.family,
        "params": dict(result.graph.params),
        "mode": result.mode,
        "seed": result.seed,
        "sample_size": result.sample_size,
        "total_tested": result.total_tested,
        "antimagic_count": result.antimagic_count,
        "counterexample_total": result.counterexample_total,
        "counterexamples": [
            {"labels": list(ce.labels), "collisions": collision_entries(ce.collisions)}
            for ce in result.counterexamples
        ],
    }


def sweep_doc(entries: list[SweepEntry]) -> dict:
    return {
        "kind": "sweep",
        "entries": [
            {
                "family": e.family,
                "params": dict(e.params),
                "vertex_count": e.vertex_count,
                "edge_count": e.edge_count,
                "antimagic": e.antimagic,
                "collision_group_count": e.collision_group_count,
                "error": e.error,
            }
            for e in entries
        ],
    }


def table_doc(rows: list[TableRow]) -> dict:
    return {
        "kind": "table",
        "columns": list(COLUMNS),
        "rows": [
            {
                "level": row.level,
                "computed": list(row.computed),
                "published": list(row.published),
                "matches": list(row.matches),
            }
            for row in rows
        ],
        "errata": [
            {
                "level": e.level,
                "column": e.column,
                "published": e.published,
                "computed": e.computed,
            }
            for e in errata(rows)
        ],
    }


# ------------------------------------------------------------- JSON parsing


def graph_from_json(text: str | dict) -> Graph:
    """Rebuild a graph from its JSON document and verify the payload matches."""
    doc = json.loads(text) if isinstance(text, str) else text
    if doc.get("kind") not in {"graph", "labeling", "verification"}:
        raise ValueError(f"not a graph-bearing document: kind={doc.get('kind')!r}")
    # The document's size was already admitted when it was produced.
    graph = build_family(
        doc["family"], cap=None, **{k: int(v) for k, v in doc["params"].items()}
    )
    stated = tuple((e["u"], e["v"]) for e in doc["edges"])
    if stated != graph.edges or doc["vertex_count"] != graph.vertex_count:
        raise ValueError("document edges do not match the canonical construction")
    return graph


def labeling_from_json(text: str | dict) -> EdgeLabeling:
    """Rebuild a labeling from its JSON document (modes regenerate, explicit replays)."""
    doc = json.loads(text) if isinstance(text, str) else text
    if doc.get("kind") not in {"labeling", "verification"}:
        raise ValueError(f"not a labeling document: kind={doc.get('kind')!r}")
    graph = graph_from_json(doc)
    labels = tuple(int(e["label"]) for e in doc["edges"])
    mode = doc["mode"]
    if mode == ORDERED:
        labeling = label_ordered(graph)
    elif mode == ARBITRARY:
        labeling = label_arbitrary(graph, int(doc["seed"]))
    elif mode == EXPLICIT:
        labeling = label_explicit(graph, labels)
    else:
        raise ValueError(f"unknown labeling mode {mode!r}")
    if labeling.labels != labels:
        raise ValueError("document labels do not match their stated generation mode")
    return labeling


# ----------------------------------------------------------------- DOT / CSV


def _dot(graph: Graph, labels: tuple[int, ...] | None) -> str:
    name = graph.family.replace("-", "_")
    lines = [f"graph {name} {{"]
    for v in range(graph.vertex_count):
        lines.append(f'  {v} [label="{graph.vertex_label(v)}"];')
    for i, (u, v) in enumerate(graph.edges):
        attr = f" [label={labels[i]}]" if labels is not None else ""
        lines.append(f"  {u} -- {v}{attr};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def _csv_text(header: list[str], rows: list[list]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def _cell(value: int | None) -> str | int:
    return "-" if value is None else value


def table_csv(rows: list[TableRow]) -> str:
    """Computed table in the published column layout, plus per-cell match flags."""
    header = ["Level,l", *COLUMNS, *[f"match {c}" for c in COLUMNS]]
    body = []
    for row in rows:
        flags = ["" if m is None else str(m).lower() for m in row.matches]
        body.append([row.level, *[_cell(c) for c in row.computed], *flags])
    return _csv_text(header, body)


def sweep_csv(entries: list[SweepEntry]) -> str:
    keys = sorted({k for e in entries for k in e.params})
    header = ["family", *keys, "vertices", "edges", "antimagic", "collision_groups", "error"]
    body = []
    for e in entries:
        body.append(
            [
                e.family,
                *[e.params.get(k, "") for k in keys],
                _cell(e.vertex_count),
                _cell(e.edge_count),
                "" if e.antimagic is None else str(e.antimagic).lower(),
                e.collision_group_count,
                e.error or "",
            ]
        )
    return _csv_text(header, body)


def census_csv(result: CensusResult) -> str:
    header = [
        "family",
        "params",
        "mode",
        "seed",
        "sample_size",
        "total_tested",
        "antimagic_count",
        "counterexample_total",
    ]
    params = ";".join(f"{k}={v}" for k, v in result.graph.params.items())
    row = [
        result.graph.family,
        params,
        result.mode,
        _cell(result.seed),
        _cell(result.sample_size),
        result.total_tested,
        result.antimagic_count,
        result.counterexample_total,
    ]
    return _csv_text(header, [row])


def weights_csv(report: WeightReport) -> str:
    return _csv_text(["vertex", "weight"], [[v, w] for v, w in enumerate(report.weights)])


# ------------------------------------------------------------------ export


def export(artifact, fmt: str) -> str:
    """Serialize an artifact; raises UnsupportedFormatError on bad pairings."""
    if fmt == JSON:
        doc = _json_doc(artifact)
        return json.dumps(doc, indent=2) + "\n"
    if fmt == DOT:
        if isinstance(artifact, Graph):
            return _dot(artifact, None)
        if isinstance(artifact, EdgeLabeling):
            return _dot(artifact.graph, artifact.labels)
        raise UnsupportedFormatError(f"dot export not defined for {type(artifact).__name__}")
    if fmt == CSV:
        if isinstance(artifact, WeightReport):
            return weights_csv(artifact)
        if isinstance(artifact, CensusResult):
            return census_csv(artifact)
        if _is_list_of(artifact, SweepEntry):
            return sweep_csv(artifact)
        if _is_list_of(artifact, TableRow):
            return table_csv(artifact)
        raise UnsupportedFormatError(f"csv export not defined for {type(artifact).__name__}")
    raise UnsupportedFormatError(f"unknown format {fmt!r}")


def _json_doc(artifact) -> dict:
    if isinstance(artifact, Graph):
        return graph_doc(artifact)
    if isinstance(artifact, EdgeLabeling):
        return labeling_doc(artifact)
    if isinstance(artifact, WeightReport):
        return weight_report_doc(artifact)
    if isinstance(artifact, CensusResult):
        return census_doc(artifact)
    if isinstance(artifact, tuple) and len(artifact) == 2 and isinstance(artifact[0], EdgeLabeling):
        return verification_doc(*artifact)
    if _is_list_of(artifact, SweepEntry):
        return sweep_doc(artifact)
    if _is_list_of(artifact, TableRow):
        return table_doc(artifact)
    raise UnsupportedFormatError(f"json export not defined for {type(artifact).__name__}")


def _is_list_of(value, cls) -> bool:
    return isinstance(value, list) and value and all(isinstance(x, cls) for x in value)
