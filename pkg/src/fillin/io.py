"""Graph file formats.

Two formats are recognised by the first non-comment token:

* edge list: a header ``n m`` followed by ``m`` lines ``u v`` with 0-based ids;
* DIMACS: ``p edge n m`` and ``e u v`` lines with 1-based ids.

``#`` starts a comment in both, and DIMACS also skips ``c`` lines in the
graph section.  A line ``---`` ends the graph; the text after it is a
problem-specific section (allowed pairs, a coloring, or the left side of a
bipartite graph) written with the same id convention as the graph.
"""
from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph, edge_pair


class ParseError(ValueError):
    def __init__(self, lineno: int | None, msg: str):
        self.lineno = lineno
        super().__init__(msg if lineno is None else f"line {lineno}: {msg}")


class RangeError(ParseError):
    pass


@dataclass
class Document:
    graph: Graph
    dimacs: bool
    extra: list  # (lineno, tokens) after the separator

    def to_id(self, lineno: int, tok: str) -> int:
        v = _int(lineno, tok)
        v = v - 1 if self.dimacs else v
        if not 0 <= v < self.graph.n:
            raise RangeError(lineno, f"vertex {tok} out of range")
        return v

    def label(self, v: int) -> int:
        return v + 1 if self.dimacs else v


def _int(lineno: int, tok: str) -> int:
    try:
        return int(tok)
    except ValueError:
        raise ParseError(lineno, f"expected an integer, got {tok!r}") from None


def _lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line


def parse_document(text: str) -> Document:
    head, extra, seen_sep = [], [], False
    for lineno, line in _lines(text):
        if line == "---":
            if seen_sep:
                raise ParseError(lineno, "more than one '---' separator")
            seen_sep = True
            continue
        (extra if seen_sep else head).append((lineno, line.split()))
    if not head:
        raise ParseError(None, "empty input")
    dimacs = head[0][1][0] in ("p", "c")
    graph = _parse_dimacs(head) if dimacs else _parse_edge_list(head)
    return Document(graph, dimacs, extra)


def parse_graph(text: str) -> Graph:
    return parse_document(text).graph


def _build(n: int, pairs, labels=None) -> Graph:
    edges = set()
    for lineno, u, v in pairs:
        if not (0 <= u < n and 0 <= v < n):
            raise RangeError(lineno, f"vertex id out of range for n={n}")
        if u == v:
            raise ParseError(lineno, f"self-loop at vertex {u}")
        edges.add(edge_pair(u, v))
    return Graph.from_edges(n, edges, labels)


def _parse_edge_list(rows) -> Graph:
    lineno, toks = rows[0]
    if len(toks) != 2:
        raise ParseError(lineno, "header must be 'n m'")
    n, m = _int(lineno, toks[0]), _int(lineno, toks[1])
    if n < 0 or m < 0:
        raise ParseError(lineno, "n and m must be non-negative")
    body = rows[1:]
    if len(body) != m:
        raise ParseError(body[-1][0] if body else lineno, f"header announces {m} edges, found {len(body)}")
    pairs = []
    for lineno, toks in body:
        if len(toks) != 2:
            raise ParseError(lineno, "edge line must be 'u v'")
        pairs.append((lineno, _int(lineno, toks[0]), _int(lineno, toks[1])))
    return _build(n, pairs)


def _parse_dimacs(rows) -> Graph:
    n = None
    pairs = []
    for lineno, toks in rows:
        kind = toks[0]
        if kind == "c":
            continue
        if kind == "p":
            if n is not None:
                raise ParseError(lineno, "duplicate problem line")
            if len(toks) != 4 or toks[1] not in ("edge", "col"):
                raise ParseError(lineno, "problem line must be 'p edge n m'")
            n = _int(lineno, toks[2])
            _int(lineno, toks[3])
            if n < 0:
                raise ParseError(lineno, "n must be non-negative")
        elif kind == "e":
            if n is None:
                raise ParseError(lineno, "edge before problem line")
            if len(toks) != 3:
                raise ParseError(lineno, "edge line must be 'e u v'")
            pairs.append((lineno, _int(lineno, toks[1]) - 1, _int(lineno, toks[2]) - 1))
        else:
            raise ParseError(lineno, f"unknown line type {kind!r}")
    if n is None:
        raise ParseError(None, "missing problem line")
    return _build(n, pairs, [str(i + 1) for i in range(n)])


def parse_pairs(doc: Document) -> frozenset:
    """Allowed pairs, one ``u v`` (or ``e u v``) per line."""
    out = set()
    for lineno, toks in doc.extra:
        if toks[0] == "e":
            toks = toks[1:]
        if len(toks) != 2:
            raise ParseError(lineno, "pair line must be 'u v'")
        u, v = doc.to_id(lineno, toks[0]), doc.to_id(lineno, toks[1])
        if u == v:
            raise ParseError(lineno, "pair joins a vertex to itself")
        if doc.graph.has_edge(u, v):
            raise ParseError(lineno, f"pair {toks[0]} {toks[1]} is already an edge")
        out.add(edge_pair(u, v))
    return frozenset(out)


def parse_colors(doc: Document) -> list:
    """Color per vertex from ``c <vertex> <color>`` lines; all vertices
    must be colored exactly once."""
    colors = [None] * doc.graph.n
    for lineno, toks in doc.extra:
        if len(toks) != 3 or toks[0] != "c":
            raise ParseError(lineno, "coloring line must be 'c <vertex> <color>'")
        v = doc.to_id(lineno, toks[1])
        if colors[v] is not None:
            raise ParseError(lineno, f"vertex {toks[1]} colored twice")
        colors[v] = _int(lineno, toks[2])
    if None in colors:
        raise ParseError(None, f"vertex {doc.label(colors.index(None))} has no color")
    return colors


def parse_left(doc: Document) -> tuple:
    """Left side of a bipartite graph from ``left v1 v2 ...`` lines."""
    left = set()
    for lineno, toks in doc.extra:
        if toks[0] != "left":
            raise ParseError(lineno, "expected 'left <vertex> ...'")
        left.update(doc.to_id(lineno, tok) for tok in toks[1:])
    return tuple(sorted(left))


def format_graph(g: Graph, dimacs: bool = False) -> str:
    edges = g.edges()
    if dimacs:
        lines = [f"p edge {g.n} {len(edges)}"] + [f"e {u + 1} {v + 1}" for u, v in edges]
    else:
        lines = [f"{g.n} {len(edges)}"] + [f"{u} {v}" for u, v in edges]
    return "\n".join(lines) + "\n"
