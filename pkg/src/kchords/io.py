"""Reading and writing graphs in DIMACS edge format and a small JSON format.

DIMACS ids are 1-based (``p edge n m`` header, ``e u v`` lines); JSON uses
``{"n": int, "edges": [[u, v], ...]}`` with 0-based ids.  JSON input may
also use arbitrary (string) labels, which are re-indexed in order of first
appearance; the label list is kept so output can be mapped back.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any, Hashable, Sequence

from .graph import Graph, GraphError, build_graph


def parse_dimacs(text: str) -> Graph:
    n = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        parts = raw.split()
        if not parts or parts[0] == "c":
            continue
        if parts[0] == "p":
            if len(parts) < 4 or parts[1] not in ("edge", "col"):
                raise GraphError(f"line {lineno}: bad problem line {raw!r}")
            n = int(parts[2])
        elif parts[0] == "e":
            if n is None:
                raise GraphError(f"line {lineno}: edge before 'p edge' header")
            if len(parts) < 3:
                raise GraphError(f"line {lineno}: bad edge line {raw!r}")
            edges.append((int(parts[1]) - 1, int(parts[2]) - 1))
        else:
            raise GraphError(f"line {lineno}: unknown line type {parts[0]!r}")
    if n is None:
        raise GraphError("missing 'p edge n m' header")
    return build_graph(n, edges)


def format_dimacs(g: Graph) -> str:
    lines = [f"p edge {g.n} {g.num_edges}"]
    lines += [f"e {u + 1} {v + 1}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


def graph_from_json(doc: dict[str, Any]) -> tuple[Graph, list[Hashable] | None]:
    """Build a graph from a parsed JSON document.

    Returns the graph and the label list (``None`` when ids are already
    dense integers).
    """
    raw_edges = doc.get("edges", [])
    labels = doc.get("labels")
    if labels is not None:
        index = {lab: i for i, lab in enumerate(labels)}
        edges = [(index[u], index[v]) for u, v in raw_edges]
        return build_graph(len(labels), edges), list(labels)
    if "n" in doc and all(isinstance(x, int) for e in raw_edges for x in e):
        return build_graph(int(doc["n"]), [tuple(e) for e in raw_edges]), None
    order: dict[Hashable, int] = {}
    for e in raw_edges:
        for x in e:
            order.setdefault(x, len(order))
    edges = [(order[u], order[v]) for u, v in raw_edges]
    return build_graph(len(order), edges), list(order)


def graph_to_json(g: Graph, labels: Sequence[Hashable] | None = None) -> dict[str, Any]:
    doc: dict[str, Any] = {"n": g.n, "edges": [list(e) for e in g.edges()]}
    if labels is not None:
        doc["labels"] = list(labels)
    return doc


def format_json(g: Graph, labels: Sequence[Hashable] | None = None) -> str:
    return json.dumps(graph_to_json(g, labels), sort_keys=True) + "\n"


def read_graph(path: str | Path, fmt: str | None = None) -> tuple[Graph, list[Hashable] | None]:
    """Read a graph file; ``fmt`` is ``"dimacs"`` or ``"json"`` (guessed from the suffix if omitted)."""
    path = Path(path)
    if fmt is None:
        fmt = "json" if path.suffix.lower() == ".json" else "dimacs"
    text = path.read_text()
    if fmt == "dimacs":
        return parse_dimacs(text), None
    if fmt == "json":
        return graph_from_json(json.loads(text))
    raise ValueError(f"unknown graph format {fmt!r}")


def write_graph(g: Graph, path: str | Path, fmt: str = "json", labels=None) -> None:
    path = Path(path)
    if fmt == "dimacs":
        path.write_text(format_dimacs(g))
    elif fmt == "json":
        path.write_text(format_json(g, labels))
    else:
        raise ValueError(f"unknown graph format {fmt!r}")
