"""Edge-list and JSON graph files.

Edge list: first line `n m`, then m lines `i j`; lines starting with `#`
and blank lines are ignored. JSON: {"n": int, "edges": [[i, j], ...]}.
"""

from __future__ import annotations

import json
from pathlib import Path

from .errors import GraphFormatError
from .graphs import SimpleGraph, make_graph

EDGELIST = "edgelist"
JSON = "json"


def format_for(path: str | Path) -> str:
    """`.json` files are JSON, everything else is an edge list."""
    return JSON if Path(path).suffix.lower() == ".json" else EDGELIST


def serialize_graph(graph: SimpleGraph, fmt: str = EDGELIST) -> str:
    if fmt == JSON:
        return json.dumps({"n": graph.n, "edges": [list(e) for e in graph.edge_list]}) + "\n"
    lines = [f"{graph.n} {graph.m}"]
    lines += [f"{i} {j}" for i, j in graph.edge_list]
    return "\n".join(lines) + "\n"


def _parse_int(token: str, line_no: int) -> int:
    try:
        return int(token)
    except ValueError:
        raise GraphFormatError(f"line {line_no}: expected an integer, got {token!r}") from None


def _parse_edgelist(text: str, dedupe: bool) -> SimpleGraph:
    rows: list[tuple[int, list[str]]] = []
    for line_no, line in enumerate(text.splitlines(), 1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        rows.append((line_no, stripped.split()))
    if not rows:
        raise GraphFormatError("empty graph file: missing `n m` header")

    header_no, header = rows[0]
    if len(header) != 2:
        raise GraphFormatError(f"line {header_no}: header must be `n m`")
    n, m = (_parse_int(t, header_no) for t in header)

    edges = []
    for line_no, parts in rows[1:]:
        if len(parts) != 2:
            raise GraphFormatError(f"line {line_no}: edge line must be `i j`")
        edges.append((_parse_int(parts[0], line_no), _parse_int(parts[1], line_no)))
    if len(edges) != m:
        raise GraphFormatError(f"header announces {m} edges, found {len(edges)}")
    return make_graph(n, edges, dedupe=dedupe)


def _is_int(value) -> bool:
    # bool is an int subclass; true/false are not vertex counts or labels
    return isinstance(value, int) and not isinstance(value, bool)


def _parse_json(text: str, dedupe: bool) -> SimpleGraph:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise GraphFormatError(f"invalid JSON: {exc}") from None
    if not isinstance(data, dict) or "n" not in data or "edges" not in data:
        raise GraphFormatError('JSON graph needs the keys "n" and "edges"')
    n, edges = data["n"], data["edges"]
    if not _is_int(n) or not isinstance(edges, list):
        raise GraphFormatError('"n" must be an integer and "edges" a list')
    for edge in edges:
        if not (isinstance(edge, list) and len(edge) == 2 and all(_is_int(v) for v in edge)):
            raise GraphFormatError(f"edge {edge!r} is not a pair of integers")
    return make_graph(n, [tuple(e) for e in edges], dedupe=dedupe)


def parse_graph(text: str, fmt: str = EDGELIST, dedupe: bool = False) -> SimpleGraph:
    if fmt == JSON:
        return _parse_json(text, dedupe)
    return _parse_edgelist(text, dedupe)


def read_graph(path: str | Path, dedupe: bool = False) -> SimpleGraph:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except UnicodeDecodeError as exc:
        raise GraphFormatError(f"{path}: not a UTF-8 text file ({exc.reason} at byte {exc.start})") from None
    return parse_graph(text, format_for(path), dedupe=dedupe)


def write_graph(graph: SimpleGraph, path: str | Path) -> None:
    Path(path).write_text(serialize_graph(graph, format_for(path)))
