"""
Edge-list text format.

A header line ``n m`` is followed by ``m`` lines ``u v w`` with 0-indexed
endpoints. Blank lines and ``#`` comments are ignored. Serialization is
canonical: edges sorted with ``u < v`` and weights written with 17
significant digits, so ``serialize(parse(text)) == text`` for canonical text.
"""

import logging
import math
from pathlib import Path
from typing import List, Tuple, Union

from ..errors import EdgeListParseError, InvalidArgumentError
from .models import Edge, WeightedGraph

logger = logging.getLogger(__name__)


def _format_weight(w: float) -> str:
    return format(w, ".17g")


def _content_lines(text: str) -> List[Tuple[int, List[str]]]:
    lines = []
    for number, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.split("#", 1)[0].strip()
        if stripped:
            lines.append((number, stripped.split()))
    return lines


def parse_edge_list(text: str, one_indexed: bool = False) -> WeightedGraph:
    """
    Parse edge-list text into a graph.

    Args:
        text: File content.
        one_indexed: Treat endpoints as 1-indexed (``u v w`` variants).

    Returns:
        WeightedGraph: The parsed instance.

    Raises:
        EdgeListParseError: On a malformed line, an out-of-range index, a
            self-loop, a duplicate edge or an edge count mismatch.
    """
    lines = _content_lines(text)
    if not lines:
        raise EdgeListParseError("missing 'n m' header")

    header_line, header = lines[0]
    if len(header) != 2:
        raise EdgeListParseError("header must be 'n m'", header_line)
    try:
        n, m = int(header[0]), int(header[1])
    except ValueError as e:
        raise EdgeListParseError("header values must be integers", header_line) from e
    if n < 1 or m < 0:
        raise EdgeListParseError("header needs n >= 1 and m >= 0", header_line)

    offset = 1 if one_indexed else 0
    edges: List[Edge] = []
    seen = set()
    for number, fields in lines[1:]:
        if len(fields) != 3:
            raise EdgeListParseError("edge line must be 'u v w'", number)
        try:
            u, v = int(fields[0]) - offset, int(fields[1]) - offset
            w = float(fields[2])
        except ValueError as e:
            raise EdgeListParseError(
                f"cannot parse edge {' '.join(fields)!r}", number
            ) from e
        if not (0 <= u < n and 0 <= v < n):
            raise EdgeListParseError(f"vertex index out of range for n={n}", number)
        if u == v:
            raise EdgeListParseError(f"self-loop at vertex {u + offset}", number)
        if not math.isfinite(w):
            raise EdgeListParseError("weight must be finite", number)
        key = (min(u, v), max(u, v))
        if key in seen:
            raise EdgeListParseError(f"duplicate edge {key}", number)
        seen.add(key)
        edges.append((u, v, w))

    if len(edges) != m:
        raise EdgeListParseError(f"header declares {m} edges but found {len(edges)}")
    return WeightedGraph.from_edges(n, edges)


def serialize_edge_list(g: WeightedGraph) -> str:
    """Canonical edge-list text for ``g`` (LF line endings, trailing newline)."""
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v} {_format_weight(w)}" for u, v, w in g.edges)
    return "\n".join(lines) + "\n"


def read_graph(path: Union[str, Path], one_indexed: bool = False) -> WeightedGraph:
    """
    Load a graph from an edge-list file.

    Raises:
        InvalidArgumentError: If the file does not exist.
        EdgeListParseError: If its content is malformed.
    """
    path = Path(path)
    if not path.exists():
        raise InvalidArgumentError(f"instance file not found: {path}")
    graph = parse_edge_list(path.read_text(encoding="utf-8"), one_indexed=one_indexed)
    logger.debug("Loaded %s: n=%d, m=%d", path, graph.n, graph.m)
    return graph
