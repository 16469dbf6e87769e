"""Edge-list and graph6 codecs"""
import logging
import re
from typing import List, Optional, Tuple

import networkx as nx

from graphs.graph import Graph
from utils.errors import GraphParseError

logger = logging.getLogger(__name__)

EDGE_LIST = "edge-list"
GRAPH6 = "graph6"
FORMATS = (EDGE_LIST, GRAPH6)

MAX_LABEL = 2 ** 31 - 1
_HEADER = re.compile(r"^\s*#\s*n\s*=\s*(\d+)\s*$", re.ASCII)
_GRAPH6_HEADER = b">>graph6<<"


def parse_graph(text: str, fmt: str = EDGE_LIST, name: str = "") -> Graph:
    """Parse one graph in the declared format"""
    if fmt == EDGE_LIST:
        return parse_edge_list(text, name)
    if fmt == GRAPH6:
        lines = [(i, line) for i, line in enumerate(text.splitlines(), start=1) if line.strip()]
        if len(lines) != 1:
            raise GraphParseError(f"graph6 input must hold exactly one graph, found {len(lines)}")
        line_no, line = lines[0]
        return parse_graph6_line(line, line_no, name)
    raise ValueError(f"unknown graph format {fmt!r}; expected one of {FORMATS}")


def parse_edge_list(text: str, name: str = "") -> Graph:
    """
    One "u v" pair per line; '#' starts a comment; blank lines are ignored.
    A '# n=<k>' line fixes the vertex set to 0..k-1, otherwise the distinct
    labels are renumbered in ascending order.
    """
    declared: Optional[int] = None
    pairs: List[Tuple[int, int, int]] = []
    offset = 0
    for line_no, raw in enumerate(text.splitlines(keepends=True), start=1):
        line_start = offset
        offset += len(raw.encode("utf-8"))
        header = _HEADER.match(raw)
        if header:
            declared = int(header.group(1))
            continue
        body = raw.split("#", 1)[0]
        tokens = body.split()
        if not tokens:
            continue
        if len(tokens) != 2:
            raise GraphParseError(f"expected 'u v', got {body.strip()!r}", line_no, line_start)
        labels = []
        for token in tokens:
            if not (token.isascii() and token.isdigit()):
                pos = line_start + len(body[:body.index(token)].encode("utf-8"))
                raise GraphParseError(f"vertex label {token!r} is not a non-negative integer", line_no, pos)
            value = int(token)
            if value > MAX_LABEL:
                raise GraphParseError(f"vertex index {value} overflows", line_no, line_start)
            labels.append(value)
        pairs.append((labels[0], labels[1], line_no))

    if declared is not None:
        for u, v, line_no in pairs:
            if u >= declared or v >= declared:
                raise GraphParseError(f"vertex index {max(u, v)} overflows declared n={declared}", line_no)
        return Graph.from_edges(declared, [(u, v) for u, v, _ in pairs], name)

    labels = sorted({x for u, v, _ in pairs for x in (u, v)})
    index = {label: i for i, label in enumerate(labels)}
    return Graph.from_edges(len(labels), [(index[u], index[v]) for u, v, _ in pairs], name)


def _graph6_size(data: bytes, line_no: Optional[int]) -> Tuple[int, int]:
    """Decode the graph6 vertex count; returns (n, header byte length)"""
    if not data:
        raise GraphParseError("empty graph6 string", line_no, 0)
    if data[0] != 126:
        return data[0] - 63, 1
    if len(data) >= 2 and data[1] == 126:
        if len(data) < 8:
            raise GraphParseError("truncated graph6 size field", line_no, len(data))
        n = 0
        for b in data[2:8]:
            n = (n << 6) | (b - 63)
        return n, 8
    if len(data) < 4:
        raise GraphParseError("truncated graph6 size field", line_no, len(data))
    n = 0
    for b in data[1:4]:
        n = (n << 6) | (b - 63)
    return n, 4


def parse_graph6_line(line: str, line_no: Optional[int] = None, name: str = "") -> Graph:
    """Validate byte range and length, then decode with networkx"""
    data = line.strip().encode("ascii", errors="replace")
    if data.startswith(_GRAPH6_HEADER):
        data = data[len(_GRAPH6_HEADER):]
    for pos, b in enumerate(data):
        if not 63 <= b <= 126:
            raise GraphParseError(f"byte {b!r} outside the graph6 range 63..126", line_no, pos)
    n, head = _graph6_size(data, line_no)
    expected = head + (n * (n - 1) // 2 + 5) // 6
    if len(data) != expected:
        raise GraphParseError(
            f"graph6 length mismatch: n={n} needs {expected} bytes, got {len(data)}",
            line_no, min(len(data), expected),
        )
    try:
        g = nx.from_graph6_bytes(data)
    except nx.NetworkXError as e:
        raise GraphParseError(f"invalid graph6: {e}", line_no) from e
    return Graph.from_networkx(g, name)


def serialize_graph(g: Graph, fmt: str = EDGE_LIST) -> str:
    if fmt == EDGE_LIST:
        lines = [f"# n={g.n}"] + [f"{u} {v}" for u, v in sorted(g.edges)]
        return "\n".join(lines) + "\n"
    if fmt == GRAPH6:
        if g.loops:
            raise GraphParseError(f"graph6 cannot express loops (vertices {g.loops})")
        return nx.to_graph6_bytes(g.to_networkx(), header=False).decode("ascii").strip()
    raise ValueError(f"unknown graph format {fmt!r}; expected one of {FORMATS}")


def load_graph(path: str, fmt: str = EDGE_LIST) -> Graph:
    """Read one graph from a file, named after the file"""
    with open(path, "r", encoding="utf-8") as handle:
        text = handle.read()
    logger.info(f"Loaded graph file {path} ({fmt})")
    return parse_graph(text, fmt, name=path)
