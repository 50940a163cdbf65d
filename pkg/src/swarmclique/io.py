"""Graph file formats: whitespace edge lists, a Pajek .net subset, and a
GML subset.

All three normalize to the same simple undirected graph: duplicate and
reversed pairs collapse, directed inputs are symmetrized, self-loops are
dropped (with a warning carrying the count), and vertex tokens map to
dense 0-based indices in first-appearance order with the original tokens
kept as labels.
"""

from __future__ import annotations

import warnings
from pathlib import Path
from typing import Optional, Union

from .graph import Graph


class ParseError(ValueError):
    """Malformed graph input; carries a 1-based line number when known."""

    def __init__(self, message: str, line: Optional[int] = None):
        self.line = line
        super().__init__(message if line is None else f"line {line}: {message}")


class ParseWarning(UserWarning):
    pass


def _warn_self_loops(count: int) -> None:
    if count:
        warnings.warn(f"dropped {count} self-loop(s)", ParseWarning, stacklevel=3)


# -- edge list -----------------------------------------------------------

def parse_edge_list(text: str) -> Graph:
    """Parse whitespace-separated vertex pairs, one edge per line.

    Lines starting with '#' or '%' are comments; blank lines are skipped.
    Any other line must hold exactly two tokens.
    """
    index: dict[str, int] = {}
    order: list[str] = []
    edges = []
    loops = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line[0] in "#%":
            continue
        tokens = line.split()
        if len(tokens) != 2:
            raise ParseError(f"expected 2 vertex tokens, got {len(tokens)}: {line!r}",
                             lineno)
        pair = []
        for tok in tokens:
            if tok not in index:
                index[tok] = len(order)
                order.append(tok)
            pair.append(index[tok])
        u, v = pair
        if u == v:
            loops += 1
        else:
            edges.append((u, v))
    _warn_self_loops(loops)
    return Graph(len(order), edges, labels=order or None)


def to_edge_list(g: Graph) -> str:
    """Canonical serialization: sorted ``u v`` lines with u < v."""
    return "".join(f"{u} {v}\n" for u, v in g.edges)


# -- Pajek .net ----------------------------------------------------------

def parse_pajek(text: str) -> Graph:
    """Parse the Pajek .net subset: ``*Vertices k``, optional labeled
    vertex lines, then ``*Edges`` / ``*Arcs`` / ``*Edgeslist`` sections.

    Vertex ids are 1-based in the file and shifted to 0-based. Arcs are
    treated as undirected edges; edge weights are parsed and discarded.
    """
    n = None
    labels: list[str] = []
    edges = []
    loops = 0
    section = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("%"):
            continue
        if line.startswith("*"):
            head = line.split()
            keyword = head[0].lower()
            if keyword == "*vertices":
                if len(head) < 2:
                    raise ParseError("*Vertices line missing count", lineno)
                try:
                    n = int(head[1])
                except ValueError:
                    raise ParseError(f"bad vertex count {head[1]!r}", lineno) from None
                labels = [str(i + 1) for i in range(n)]
                section = "vertices"
            elif keyword in ("*edges", "*arcs"):
                section = "edges"
            elif keyword == "*edgeslist":
                section = "edgeslist"
            else:
                section = "skip"
            continue
        if n is None:
            raise ParseError("data before *Vertices header", lineno)
        if section == "vertices":
            vid, label = _pajek_vertex_line(line, lineno)
            if not 1 <= vid <= n:
                raise ParseError(f"vertex id {vid} outside 1..{n}", lineno)
            labels[vid - 1] = label
        elif section in ("edges", "edgeslist"):
            tokens = line.split()
            take = 2 if section == "edges" else len(tokens)
            try:
                ids = [int(t) for t in tokens[:take]]
            except ValueError:
                raise ParseError(f"non-integer vertex id in {line!r}", lineno) from None
            if section == "edgeslist" and len(ids) == 1:
                continue  # a vertex with no listed neighbors
            if len(ids) < 2:
                raise ParseError(f"expected at least 2 vertex ids: {line!r}", lineno)
            for v in ids:
                if not 1 <= v <= n:
                    raise ParseError(f"vertex id {v} outside 1..{n}", lineno)
            u = ids[0]
            for v in ids[1:]:
                if u == v:
                    loops += 1
                else:
                    edges.append((u - 1, v - 1))
    if n is None:
        raise ParseError("missing *Vertices header")
    _warn_self_loops(loops)
    return Graph(n, edges, labels=labels or None)


def _pajek_vertex_line(line: str, lineno: int) -> tuple[int, str]:
    tokens = line.split(None, 1)
    try:
        vid = int(tokens[0])
    except ValueError:
        raise ParseError(f"bad vertex id {tokens[0]!r}", lineno) from None
    label = str(vid)
    if len(tokens) > 1:
        rest = tokens[1].strip()
        if rest.startswith('"'):
            end = rest.find('"', 1)
            label = rest[1:end] if end > 0 else rest[1:]
        else:
            label = rest.split()[0]
    return vid, label


# -- GML -----------------------------------------------------------------

def parse_gml(text: str) -> Graph:
    """Parse the GML subset ``graph [ node [ id N ] edge [ source A
    target B ] ]``. Extra attributes (including nested blocks) are
    skipped; a ``directed`` flag is ignored since output is undirected."""
    tokens = _gml_tokens(text)
    tree = _gml_block(tokens, top=True)
    graph_block = None
    for key, value in tree:
        if key == "graph" and isinstance(value, list):
            graph_block = value
            break
    if graph_block is None:
        raise ParseError("no 'graph [ ... ]' block found")

    index: dict[int, int] = {}
    labels: list[str] = []
    raw_edges: list[tuple[int, int]] = []
    for key, value in graph_block:
        if key == "node":
            if not isinstance(value, list):
                raise ParseError("node must open a [ ... ] block")
            attrs = dict(kv for kv in value if not isinstance(kv[1], list))
            if "id" not in attrs:
                raise ParseError("node block missing 'id'")
            nid = int(attrs["id"])
            if nid in index:
                raise ParseError(f"duplicate node id {nid}")
            index[nid] = len(labels)
            labels.append(str(attrs.get("label", nid)))
        elif key == "edge":
            if not isinstance(value, list):
                raise ParseError("edge must open a [ ... ] block")
            attrs = dict(kv for kv in value if not isinstance(kv[1], list))
            if "source" not in attrs or "target" not in attrs:
                raise ParseError("edge block missing source/target")
            raw_edges.append((int(attrs["source"]), int(attrs["target"])))

    edges = []
    loops = 0
    for s, t in raw_edges:
        if s not in index or t not in index:
            raise ParseError(f"edge ({s},{t}) references undeclared node id")
        u, v = index[s], index[t]
        if u == v:
            loops += 1
        else:
            edges.append((u, v))
    _warn_self_loops(loops)
    return Graph(len(labels), edges, labels=labels or None)


def _gml_tokens(text: str) -> list[str]:
    tokens = []
    i, size = 0, len(text)
    while i < size:
        c = text[i]
        if c.isspace():
            i += 1
        elif c == '"':
            j = text.find('"', i + 1)
            if j < 0:
                raise ParseError("unterminated string literal")
            tokens.append(text[i:j + 1])
            i = j + 1
        elif c in "[]":
            tokens.append(c)
            i += 1
        elif c == "#":
            j = text.find("\n", i)
            i = size if j < 0 else j + 1
        else:
            j = i
            while j < size and not text[j].isspace() and text[j] not in "[]":
                j += 1
            tokens.append(text[i:j])
            i = j
    return tokens


def _gml_block(tokens: list[str], top: bool = False) -> list[tuple[str, object]]:
    """Parse a token stream into (key, value) pairs; value is a string or
    a nested pair list. Consumes ``tokens`` front to back."""
    pairs: list[tuple[str, object]] = []
    while tokens:
        tok = tokens.pop(0)
        if tok == "]":
            if top:
                raise ParseError("unbalanced ']'")
            return pairs
        if tok == "[":
            raise ParseError("'[' without a key")
        if not tokens:
            raise ParseError(f"key {tok!r} missing a value")
        nxt = tokens.pop(0)
        if nxt == "[":
            pairs.append((tok, _gml_block(tokens)))
        else:
            pairs.append((tok, nxt.strip('"')))
    if not top:
        raise ParseError("unbalanced '[': block never closed")
    return pairs


# -- dispatch ------------------------------------------------------------

_PARSERS = {
    "edgelist": parse_edge_list,
    "pajek": parse_pajek,
    "gml": parse_gml,
}

_EXTENSIONS = {
    ".net": "pajek",
    ".paj": "pajek",
    ".gml": "gml",
    ".edges": "edgelist",
    ".txt": "edgelist",
    ".edgelist": "edgelist",
}


def load_graph(path: Union[str, Path], fmt: Optional[str] = None) -> Graph:
    """Read a graph file, inferring the format from the extension unless
    ``fmt`` (one of 'edgelist', 'pajek', 'gml') is given."""
    path = Path(path)
    if fmt is None:
        fmt = _EXTENSIONS.get(path.suffix.lower(), "edgelist")
    if fmt not in _PARSERS:
        raise ValueError(f"unknown graph format {fmt!r}; "
                         f"expected one of {sorted(_PARSERS)}")
    return _PARSERS[fmt](path.read_text())
