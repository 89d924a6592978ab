"""Text formats for graphs, hypergraphs and color classes.

Edge list: one ``u v`` pair per line; a line holding a single id declares an
isolated vertex.  Hypergraph: one edge per line, whitespace-separated ids; a
``# vertices: ...`` line declares the vertex set so vertices outside every
edge survive a round trip.  In both formats ``#`` starts a comment and blank
lines are ignored.
"""

from __future__ import annotations

import json
import sys
from typing import Iterable, TextIO

from .errors import ParseError
from .graph import Graph, Hypergraph, iter_bits, sort_ids

_VERTICES_DIRECTIVE = "# vertices:"


def _lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), 1):
        if raw.strip().startswith(_VERTICES_DIRECTIVE):
            yield lineno, raw.strip()
            continue
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line


def parse_edge_list(text: str) -> Graph:
    vertices, edges = [], []
    for lineno, line in _lines(text):
        if line.startswith(_VERTICES_DIRECTIVE):
            vertices.extend(line[len(_VERTICES_DIRECTIVE):].split())
            continue
        toks = line.split()
        if len(toks) == 1:
            vertices.append(toks[0])
        elif len(toks) == 2:
            if toks[0] == toks[1]:
                raise ParseError(f"line {lineno}: self-loop {toks[0]!r}")
            edges.append((toks[0], toks[1]))
        else:
            raise ParseError(f"line {lineno}: expected 'u v', got {line!r}")
    return Graph(vertices, edges)


def format_edge_list(g: Graph) -> str:
    out = []
    touched = 0
    for u, v in g.edges():
        out.append(f"{u} {v}")
        touched |= 1 << g.index(u) | 1 << g.index(v)
    for i in iter_bits(g.full_mask & ~touched):
        out.append(str(g.vertices[i]))
    return "".join(line + "\n" for line in out)


def parse_hypergraph(text: str) -> Hypergraph:
    vertices, edges = [], []
    for _, line in _lines(text):
        if line.startswith(_VERTICES_DIRECTIVE):
            vertices.extend(line[len(_VERTICES_DIRECTIVE):].split())
        else:
            edges.append(line.split())
    return Hypergraph(vertices, edges)


def format_hypergraph(h: Hypergraph) -> str:
    out = []
    covered = set().union(*h.edges) if h.edges else set()
    if set(h.vertices) != covered:
        out.append(_VERTICES_DIRECTIVE + " " + " ".join(map(str, h.vertices)))
    for e in h.edges:
        out.append(" ".join(map(str, sort_ids(e))))
    return "".join(line + "\n" for line in out)


def parse_classes(text: str) -> list[list[str]]:
    return [line.split() for _, line in _lines(text) if not line.startswith(_VERTICES_DIRECTIVE)]


def format_solution(solution: Iterable) -> str:
    return " ".join(map(str, sort_ids(solution)))


def write_solution(stream: TextIO, solution: Iterable, fmt: str = "text", index: int = 0,
                   work: int | None = None, extra: dict | None = None) -> None:
    """Write one solution line and flush, so long enumerations stream."""
    ids = sort_ids(solution)
    if fmt == "json":
        rec = {"solution": [str(v) for v in ids], "index": index, "work": work}
        if extra:
            rec.update(extra)
        stream.write(json.dumps(rec) + "\n")
    else:
        stream.write(" ".join(map(str, ids)) + "\n")
    stream.flush()


def read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()
