"""Reading and writing graphs (DIMACS ``.col`` subset and a JSON document)."""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

from .graph import BipartitionInfo, Graph, GraphError, SplitDecomposition


class ParseError(ValueError):
    """Malformed or invariant-violating graph input."""


@dataclass(frozen=True)
class ParsedGraph:
    graph: Graph
    bipartition: BipartitionInfo | None = None
    split: SplitDecomposition | None = None


def _text(data: bytes | str) -> str:
    if isinstance(data, bytes):
        return data.decode("utf-8")
    return data


def parse_dimacs(data: bytes | str) -> Graph:
    """Parse ``c`` / ``p edge n m`` / ``e u v`` lines; vertex ids are 1-based on disk."""
    n = m = None
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    for lineno, raw in enumerate(_text(data).splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        parts = line.split()
        if parts[0] == "p":
            if n is not None:
                raise ParseError(f"line {lineno}: duplicate header")
            if len(parts) != 4 or parts[1] != "edge":
                raise ParseError(f"line {lineno}: malformed header {line!r}")
            try:
                n, m = int(parts[2]), int(parts[3])
            except ValueError:
                raise ParseError(f"line {lineno}: malformed header {line!r}") from None
            if n < 0 or m < 0:
                raise ParseError(f"line {lineno}: malformed header {line!r}")
        elif parts[0] == "e":
            if n is None:
                raise ParseError(f"line {lineno}: edge before header")
            if len(parts) != 3:
                raise ParseError(f"line {lineno}: malformed edge line {line!r}")
            try:
                u, v = int(parts[1]) - 1, int(parts[2]) - 1
            except ValueError:
                raise ParseError(f"line {lineno}: malformed edge line {line!r}") from None
            if not (0 <= u < n and 0 <= v < n):
                raise ParseError(f"line {lineno}: vertex index out of range in {line!r}")
            if u == v:
                raise ParseError(f"line {lineno}: loop at vertex {u + 1}")
            key = (min(u, v), max(u, v))
            if key in seen:
                raise ParseError(f"line {lineno}: duplicate edge {u + 1} {v + 1}")
            seen.add(key)
            edges.append((u, v))
        else:
            raise ParseError(f"line {lineno}: unrecognized line {line!r}")
    if n is None:
        raise ParseError("missing 'p edge <n> <m>' header")
    if m != len(edges):
        raise ParseError(f"edge count mismatch: header declares {m}, found {len(edges)}")
    return Graph.from_edges(n, edges)


def parse_json(data: bytes | str) -> ParsedGraph:
    try:
        doc = json.loads(_text(data))
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from None
    if not isinstance(doc, dict) or "n" not in doc or "edges" not in doc:
        raise ParseError("JSON graph needs fields 'n' and 'edges'")
    n = doc["n"]
    if not isinstance(n, int) or isinstance(n, bool) or n < 0:
        raise ParseError(f"'n' must be a non-negative integer, got {n!r}")
    edges = []
    for e in doc["edges"]:
        if not (isinstance(e, list) and len(e) == 2 and all(isinstance(x, int) for x in e)):
            raise ParseError(f"edge {e!r} is not a pair of integers")
        edges.append((e[0], e[1]))
    try:
        g = Graph.from_edges(n, edges)
    except GraphError as exc:
        raise ParseError(str(exc)) from None

    bp = sd = None
    if doc.get("bipartition") is not None:
        try:
            bp = BipartitionInfo(tuple(doc["bipartition"]))
            bp.check(g)
        except GraphError as exc:
            raise ParseError(f"bipartition: {exc}") from None
    if doc.get("split_partition") is not None:
        part = doc["split_partition"]
        if not isinstance(part, dict) or "C" not in part or "I" not in part:
            raise ParseError("split_partition needs fields 'C' and 'I'")
        try:
            sd = SplitDecomposition(g, tuple(part["C"]), tuple(part["I"]))
        except GraphError as exc:
            raise ParseError(f"split_partition: {exc}") from None
    return ParsedGraph(g, bp, sd)


def parse_graph(data: bytes | str, format: str) -> ParsedGraph:
    if format == "dimacs":
        return ParsedGraph(parse_dimacs(data))
    if format == "json":
        return parse_json(data)
    raise ValueError(f"unknown graph format {format!r}")


def read_graph(path: str | Path) -> ParsedGraph:
    """Read a graph file, choosing the format from the extension (``.json`` or DIMACS)."""
    path = Path(path)
    fmt = "json" if path.suffix.lower() == ".json" else "dimacs"
    return parse_graph(path.read_bytes(), fmt)


def to_dimacs(g: Graph, comment: str | None = None) -> str:
    lines = [f"c {comment}"] if comment else []
    lines.append(f"p edge {g.n} {g.m}")
    lines.extend(f"e {u + 1} {v + 1}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


def graph_document(
    g: Graph,
    bipartition: BipartitionInfo | None = None,
    split: SplitDecomposition | None = None,
) -> dict:
    doc: dict = {"n": g.n, "edges": [list(e) for e in g.edges]}
    if bipartition is not None:
        doc["bipartition"] = list(bipartition.part_of)
    if split is not None:
        doc["split_partition"] = {"C": list(split.clique), "I": list(split.independent)}
    return doc


def to_json(g: Graph, bipartition=None, split=None) -> str:
    return json.dumps(graph_document(g, bipartition, split))
