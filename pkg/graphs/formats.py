"""Graph interchange formats: graph6, a plain edge list, and DOT export.

graph6 goes through networkx (short header only: n <= 62); input is checked
here first so errors carry character positions. Output text always uses LF
and a single trailing newline.
"""

from __future__ import annotations

import logging
from collections.abc import Sequence
from pathlib import Path

import networkx as nx

from graphs.core import Graph, GraphError, from_edge_list, from_networkx, to_networkx

logger = logging.getLogger("regtool.formats")

GRAPH6_HEADER = ">>graph6<<"
GRAPH6_MAX_N = 62


class FormatError(ValueError):
    """Raised for malformed graph6 or edge-list input."""


# ── graph6 ───────────────────────────────────────────


def encode_graph6(g: Graph) -> str:
    if g.n > GRAPH6_MAX_N:
        raise FormatError(
            f"graph6 short form supports at most {GRAPH6_MAX_N} vertices, got {g.n}"
        )
    return nx.to_graph6_bytes(to_networkx(g), header=False).decode("ascii").rstrip("\n")


def decode_graph6(text: str) -> Graph:
    line = text.strip()
    if line.startswith(GRAPH6_HEADER):
        line = line[len(GRAPH6_HEADER) :]
    if not line:
        raise FormatError("empty graph6 string")
    for position, char in enumerate(line):
        if not 63 <= ord(char) <= 126:
            raise FormatError(f"invalid graph6 character {char!r} at position {position}")
    if line[0] == "~":
        raise FormatError("long-form graph6 header at position 0 is not supported")
    n = ord(line[0]) - 63
    pair_count = n * (n - 1) // 2
    expected = 1 + (pair_count + 5) // 6
    if len(line) < expected:
        raise FormatError(
            f"truncated graph6 payload: expected {expected} characters, "
            f"input ends at position {len(line)}"
        )
    if len(line) > expected:
        raise FormatError(f"unexpected graph6 data at position {expected}")
    return from_networkx(nx.from_graph6_bytes(line.encode("ascii")))


# ── Edge list ────────────────────────────────────────


def _parse_ints(line: str, line_number: int, count: int) -> list[int]:
    fields = line.split()
    if len(fields) != count:
        raise FormatError(f"line {line_number}: expected {count} integers, got {line.strip()!r}")
    try:
        return [int(field) for field in fields]
    except ValueError:
        raise FormatError(f"line {line_number}: non-integer value in {line.strip()!r}") from None


def read_edge_list(text: str) -> Graph:
    """Parse ``"n m"`` followed by ``m`` lines ``"u v"``; blank lines are ignored."""
    lines = [(number, line) for number, line in enumerate(text.splitlines(), 1) if line.strip()]
    if not lines:
        raise FormatError("line 1: missing 'n m' header")
    header_number, header = lines[0]
    n, m = _parse_ints(header, header_number, 2)
    if n < 0 or m < 0:
        raise FormatError(f"line {header_number}: counts must be non-negative")
    body = lines[1:]
    if len(body) != m:
        raise FormatError(f"line {header_number}: header announces {m} edges, found {len(body)}")
    edges = []
    for number, line in body:
        u, v = _parse_ints(line, number, 2)
        try:
            from_edge_list(n, [(u, v)])
        except GraphError as exc:
            raise FormatError(f"line {number}: {exc}") from None
        edges.append((u, v))
    return from_edge_list(n, edges)


def write_edge_list(g: Graph) -> str:
    edges = g.edges()
    lines = [f"{g.n} {len(edges)}"] + [f"{u} {v}" for u, v in edges]
    return "\n".join(lines) + "\n"


# ── DOT ──────────────────────────────────────────────


def export_dot(g: Graph, labels: Sequence[str] | None = None) -> str:
    if labels is not None and len(labels) != g.n:
        raise FormatError(f"expected {g.n} vertex labels, got {len(labels)}")

    def node(v: int) -> str:
        if labels is None:
            return str(v)
        escaped = labels[v].replace("\\", "\\\\").replace('"', '\\"')
        return f'"{escaped}"'

    lines = ["graph {"]
    lines.extend(f"  {node(v)};" for v in range(g.n))
    lines.extend(f"  {node(u)} -- {node(v)};" for u, v in g.edges())
    lines.append("}")
    return "\n".join(lines) + "\n"


# ── Files ────────────────────────────────────────────


def read_graph_file(path: Path) -> Graph:
    """Read a ``.g6`` (first graph) or ``.el`` file."""
    suffix = path.suffix.lower()
    if suffix not in (".g6", ".el"):
        raise FormatError(f"{path}: unknown graph file extension {path.suffix!r} (use .g6 or .el)")
    text = path.read_text(encoding="utf-8")
    try:
        if suffix == ".el":
            return read_edge_list(text)
        for line in text.splitlines():
            if line.strip():
                return decode_graph6(line)
    except FormatError as e:
        raise FormatError(f"{path}: {e}") from e
    raise FormatError(f"{path}: no graph6 line found")


def write_graph_file(path: Path, g: Graph) -> None:
    """Write by extension: ``.el`` edge list, ``.dot`` export, anything else graph6."""
    suffix = path.suffix.lower()
    if suffix == ".el":
        text = write_edge_list(g)
    elif suffix == ".dot":
        text = export_dot(g)
    else:
        text = encode_graph6(g) + "\n"
    path.write_text(text, encoding="utf-8", newline="\n")
    logger.debug("Wrote %d-vertex graph to %s", g.n, path)
