"""Bit-stable document formats: graph files, JSON reports, algebra export.

Graph documents are line-oriented (see docs/formats.md for the grammar):

    covergraph 1
    name <name>
    vertex <name> <x|y>
    edge <u> <v>

Reports are canonical JSON objects (sorted keys, two-space indent, trailing
newline) with a pinned format and tool version, so identical invocations
serialize byte-identically and round-trip through ``json.loads``.
"""

from __future__ import annotations

import json

from . import __version__
from .errors import DocumentError
from .graphs import Graph
from .ideals import MonomialIdeal

GRAPH_MAGIC = "covergraph"
GRAPH_VERSION = 1
REPORT_FORMAT = "coverreport/1"


def serialize_graph(g: Graph, name: str = "G") -> str:
    lines = [f"{GRAPH_MAGIC} {GRAPH_VERSION}", f"name {name}"]
    lines += [f"vertex {v} {k}" for v, k in zip(g.vertices, g.kinds)]
    lines += [f"edge {u} {v}" for u, v in g.edges]
    return "\n".join(lines) + "\n"


def parse_graph(text: str) -> tuple[Graph, str]:
    """Parse a graph document; returns the graph and its name."""
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines:
        raise DocumentError("empty graph document")
    head = lines[0].split()
    if len(head) != 2 or head[0] != GRAPH_MAGIC:
        raise DocumentError(f"expected '{GRAPH_MAGIC} {GRAPH_VERSION}' header, got {lines[0]!r}")
    if head[1] != str(GRAPH_VERSION):
        raise DocumentError(f"unsupported graph document version {head[1]!r}")
    name = "G"
    vertices: list[str] = []
    kinds: list[str] = []
    edges: list[tuple[str, str]] = []
    for ln in lines[1:]:
        parts = ln.split()
        if parts[0] == "name" and len(parts) == 2:
            name = parts[1]
        elif parts[0] == "vertex" and len(parts) == 3:
            vertices.append(parts[1])
            kinds.append(parts[2])
        elif parts[0] == "edge" and len(parts) == 3:
            edges.append((parts[1], parts[2]))
        else:
            raise DocumentError(f"unrecognized graph document line: {ln!r}")
    try:
        graph = Graph(vertices, kinds, edges)
    except ValueError as exc:
        raise DocumentError(f"invalid graph document: {exc}") from exc
    return graph, name


def graph_payload(g: Graph, name: str) -> dict:
    return {
        "name": name,
        "vertices": [[v, k] for v, k in zip(g.vertices, g.kinds)],
        "edges": [[u, v] for u, v in g.edges],
    }


def ideal_payload(ideal: MonomialIdeal) -> dict:
    return {
        "variables": list(ideal.ambient.vertices),
        "generators": [list(row) for row in ideal.generators],
        "unit": ideal.is_unit,
        "zero": ideal.is_zero,
    }


def report_document(command: str, parameters: dict, result: dict) -> str:
    doc = {
        "format": REPORT_FORMAT,
        "tool": f"coverideals {__version__}",
        "command": command,
        "parameters": parameters,
        "result": result,
    }
    return json.dumps(doc, sort_keys=True, indent=2) + "\n"


def parse_report(text: str) -> dict:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"invalid report document: {exc}") from exc
    if not isinstance(doc, dict) or doc.get("format") != REPORT_FORMAT:
        raise DocumentError("not a coverreport document")
    return doc


def _monomial_text(variables: tuple[str, ...], row) -> str:
    factors = []
    for v, e in zip(variables, row):
        if e == 1:
            factors.append(v)
        elif e > 1:
            factors.append(f"{v}^{int(e)}")
    return "*".join(factors) if factors else "1"


def export_algebra_text(ideal: MonomialIdeal) -> str:
    """Plain-text ring and generator list for paste-in cross-checking.

    One generator per line in v^e product notation, lexicographic order;
    the zero ideal exports the single line '0', the unit ideal '1'.
    """
    lines = ["ring " + " ".join(ideal.ambient.vertices), "ideal"]
    if ideal.is_zero:
        lines.append("0")
    else:
        lines += [_monomial_text(ideal.ambient.vertices, row) for row in ideal.generators]
    return "\n".join(lines) + "\n"
