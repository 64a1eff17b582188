#!/usr/bin/env python3
"""
Edge-list and graph6 readers/writers.

Edge lists: an optional "n=<int>" header, then one "u v" pair per line;
'#' starts a comment. graph6 follows the standard format: N(n) followed by the
upper triangle in column order, packed six bits per byte with offset 63.
"""

import re
from typing import Dict, List, Optional, Tuple

from dmr_graphs.errors import GraphFormatError, GraphValidationError
from dmr_graphs.graph import Graph
from dmr_graphs.utils.logging import get_logger

logger = get_logger(__name__)

_HEADER = re.compile(r"^n\s*=\s*(\S+)$", re.IGNORECASE)
_GRAPH6_HEADER = ">>graph6<<"


def _natural_order(labels: List[str]) -> List[str]:
    if all(re.fullmatch(r"-?\d+", x) for x in labels):
        return sorted(labels, key=int)
    return labels


def parse_edge_list(text: str, name: Optional[str] = None, relabel: bool = False) -> Graph:
    """
    Parse an edge list.

    Args:
        text: File contents
        name: Optional display name for the graph
        relabel: Treat tokens as arbitrary labels and map them to dense indices
            (numerically sorted when all labels are integers, else by first appearance);
            the label table is kept on the graph

    Returns:
        Graph with the listed edges, duplicates merged

    Raises:
        GraphFormatError: malformed line, loop edge, index beyond the declared n,
            or an input without any vertices
    """
    declared_n: Optional[int] = None
    pairs: List[Tuple[int, str, str]] = []

    for line_number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        header = _HEADER.match(line)
        if header:
            if pairs or declared_n is not None:
                raise GraphFormatError("header must precede all edges", fmt="edges",
                                       line_number=line_number, token=line)
            try:
                declared_n = int(header.group(1))
            except ValueError as e:
                raise GraphFormatError("vertex count is not an integer", fmt="edges",
                                       line_number=line_number, token=header.group(1), original_error=e)
            if declared_n < 1:
                raise GraphFormatError("vertex count must be positive", fmt="edges",
                                       line_number=line_number, token=header.group(1))
            continue

        tokens = line.split()
        if len(tokens) != 2:
            raise GraphFormatError("expected exactly two tokens per edge line", fmt="edges",
                                   line_number=line_number, token=line)
        if not relabel:
            for tok in tokens:
                if not (tok.isascii() and tok.isdigit()):
                    raise GraphFormatError("vertex index must be a non-negative integer", fmt="edges",
                                           line_number=line_number, token=tok)
        if tokens[0] == tokens[1] or (not relabel and int(tokens[0]) == int(tokens[1])):
            raise GraphFormatError("loop edge", fmt="edges", line_number=line_number, token=line)
        pairs.append((line_number, tokens[0], tokens[1]))

    if relabel:
        seen: Dict[str, None] = {}
        for _, a, b in pairs:
            seen.setdefault(a)
            seen.setdefault(b)
        labels = _natural_order(list(seen))
        if declared_n is not None and declared_n != len(labels):
            raise GraphFormatError(f"header declares {declared_n} vertices but {len(labels)} labels appear",
                                   fmt="edges")
        index = {label: i for i, label in enumerate(labels)}
        edges = [(index[a], index[b]) for _, a, b in pairs]
        n = len(labels)
        table: Optional[List[str]] = labels
    else:
        edges = []
        largest = -1
        for line_number, a, b in pairs:
            u, v = int(a), int(b)
            if declared_n is not None and max(u, v) >= declared_n:
                raise GraphFormatError(f"vertex index exceeds declared n={declared_n}", fmt="edges",
                                       line_number=line_number, token=f"{a} {b}")
            largest = max(largest, u, v)
            edges.append((u, v))
        n = declared_n if declared_n is not None else largest + 1
        table = None

    if n < 1:
        raise GraphFormatError("edge list defines no vertices", fmt="edges")
    logger.debug(f"Parsed edge list: n={n}, {len(edges)} edge lines")
    try:
        return Graph.from_edges(n, edges, table, name)
    except GraphValidationError as e:
        raise GraphFormatError(str(e), fmt="edges", original_error=e)


def format_edge_list(g: Graph) -> str:
    lines = [f"n={g.n}"]
    lines.extend(f"{u} {v}" for u, v in sorted(g.edges))
    return "\n".join(lines) + "\n"


def _decode_size(data: bytes) -> Tuple[int, int]:
    if not data:
        raise GraphFormatError("empty graph6 string", fmt="graph6")
    if data[0] != 126:
        return data[0] - 63, 1
    if len(data) >= 2 and data[1] == 126:
        if len(data) < 8:
            raise GraphFormatError("truncated graph6 size field", fmt="graph6")
        value, offset = 0, 2
        width = 6
    else:
        if len(data) < 4:
            raise GraphFormatError("truncated graph6 size field", fmt="graph6")
        value, offset = 0, 1
        width = 3
    for byte in data[offset:offset + width]:
        value = (value << 6) | (byte - 63)
    return value, offset + width


def _encode_size(n: int) -> bytes:
    if n < 0:
        raise GraphValidationError("vertex count must be non-negative", field_name="n", actual_value=n)
    if n <= 62:
        return bytes([n + 63])
    if n <= 258047:
        return bytes([126] + [((n >> shift) & 63) + 63 for shift in (12, 6, 0)])
    if n <= 68719476735:
        return bytes([126, 126] + [((n >> shift) & 63) + 63 for shift in (30, 24, 18, 12, 6, 0)])
    raise GraphValidationError("graph too large for graph6", field_name="n", actual_value=n)


def parse_graph6(text: str, name: Optional[str] = None) -> Graph:
    """
    Decode one graph6 string (an optional >>graph6<< header and surrounding whitespace are ignored).

    Raises:
        GraphFormatError: byte outside 63..126, wrong length, non-zero padding bits
    """
    s = text.strip()
    if s.startswith(_GRAPH6_HEADER):
        s = s[len(_GRAPH6_HEADER):]
    try:
        data = s.encode("ascii")
    except UnicodeEncodeError as e:
        raise GraphFormatError("graph6 must be ASCII", fmt="graph6", original_error=e)
    for position, byte in enumerate(data):
        if not 63 <= byte <= 126:
            raise GraphFormatError("byte out of graph6 range 63..126", fmt="graph6",
                                   line_number=None, token=f"{chr(byte)!r} at {position}")

    n, offset = _decode_size(data)
    body = data[offset:]
    bit_count = n * (n - 1) // 2
    expected = (bit_count + 5) // 6
    if len(body) != expected:
        raise GraphFormatError(f"graph6 body has {len(body)} bytes, expected {expected} for n={n}",
                               fmt="graph6")
    if n < 1:
        raise GraphFormatError("graph6 encodes an empty graph", fmt="graph6")

    bits = []
    for byte in body:
        value = byte - 63
        bits.extend((value >> shift) & 1 for shift in range(5, -1, -1))
    if any(bits[bit_count:]):
        raise GraphFormatError("non-zero graph6 padding bits", fmt="graph6")

    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                edges.append((i, j))
            k += 1
    return Graph.from_edges(n, edges, name=name)


def encode_graph6(g: Graph) -> str:
    """Encode a graph as graph6 (no header, no newline)."""
    n = g.n
    bits = []
    for j in range(1, n):
        for i in range(j):
            bits.append(1 if (i, j) in g.edges else 0)
    bits.extend([0] * (-len(bits) % 6))
    body = bytes(
        63 + sum(bit << (5 - pos) for pos, bit in enumerate(bits[start:start + 6]))
        for start in range(0, len(bits), 6)
    )
    return (_encode_size(n) + body).decode("ascii")
