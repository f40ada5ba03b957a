"""The nine graph operations with fixed vertex-labelling conventions.

Products index vertex ``(i, j)`` as ``i * n2 + j``. Join and disjoint union
shift the second operand by ``n1``. Line graphs, subdivisions and semi-total
point graphs follow the lexicographic edge order of ``Graph.edges()``.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import StrEnum

from graphs.core import Graph, GraphError, iter_bits


class OperationKind(StrEnum):
    COMPLEMENT = "complement"
    CARTESIAN = "cartesian"
    DIRECT = "direct"
    COMPOSITION = "composition"
    STRONG = "strong"
    JOIN = "join"
    LINE_GRAPH = "line"
    SUBDIVISION = "subdivision"
    SEMI_TOTAL_POINT = "semi-total"

    @property
    def binary(self) -> bool:
        return self in _BINARY


_BINARY = frozenset(
    {
        OperationKind.CARTESIAN,
        OperationKind.DIRECT,
        OperationKind.COMPOSITION,
        OperationKind.STRONG,
        OperationKind.JOIN,
    }
)


def complement(g: Graph) -> Graph:
    full = g.full_mask
    return Graph(g.n, tuple(full & ~row & ~(1 << v) for v, row in enumerate(g.rows)))


# ── Products ─────────────────────────────────────────


def _spread(mask: int, n2: int, j: int) -> int:
    """Bits ``i * n2 + j`` for every ``i`` set in *mask*."""
    out = 0
    for i in iter_bits(mask):
        out |= 1 << (i * n2 + j)
    return out


def _block(i: int, n2: int, mask: int) -> int:
    """Bits ``i * n2 + j`` for every ``j`` set in *mask*."""
    return mask << (i * n2)


def _product(g1: Graph, g2: Graph, *, same_row: bool, cross_rows: str) -> Graph:
    """Shared product builder.

    ``same_row`` adds ``(i, j) ~ (i, j')`` for ``j ~ j'``. ``cross_rows`` decides
    which vertices of a neighbouring fibre ``i' ~ i`` are joined to ``(i, j)``:
    ``"same"`` only ``(i', j)``, ``"adjacent"`` the ``(i', j')`` with ``j ~ j'``,
    ``"closed"`` both, ``"all"`` every ``(i', j')``.
    """
    n1, n2 = g1.n, g2.n
    all_j = (1 << n2) - 1
    rows = []
    for i in range(n1):
        for j in range(n2):
            row = _block(i, n2, g2.rows[j]) if same_row else 0
            if cross_rows == "same":
                fibre = 1 << j
            elif cross_rows == "adjacent":
                fibre = g2.rows[j]
            elif cross_rows == "closed":
                fibre = g2.rows[j] | 1 << j
            else:
                fibre = all_j
            for i2 in iter_bits(g1.rows[i]):
                row |= _block(i2, n2, fibre)
            rows.append(row)
    return Graph(n1 * n2, tuple(rows))


def cartesian(g1: Graph, g2: Graph) -> Graph:
    return _product(g1, g2, same_row=True, cross_rows="same")


def direct(g1: Graph, g2: Graph) -> Graph:
    return _product(g1, g2, same_row=False, cross_rows="adjacent")


def composition(g1: Graph, g2: Graph) -> Graph:
    """Lexicographic product ``G1[G2]``; not commutative."""
    return _product(g1, g2, same_row=True, cross_rows="all")


def strong(g1: Graph, g2: Graph) -> Graph:
    return _product(g1, g2, same_row=True, cross_rows="closed")


# ── Unions and joins ─────────────────────────────────


def disjoint_union(g1: Graph, g2: Graph) -> Graph:
    shift = g1.n
    return Graph(g1.n + g2.n, g1.rows + tuple(row << shift for row in g2.rows))


def join(g1: Graph, g2: Graph) -> Graph:
    n1, n2 = g1.n, g2.n
    left = (1 << n1) - 1
    right = ((1 << n2) - 1) << n1
    rows = tuple(row | right for row in g1.rows) + tuple(row << n1 | left for row in g2.rows)
    return Graph(n1 + n2, rows)


# ── Edge-derived graphs ──────────────────────────────


@dataclass(frozen=True, slots=True)
class LineGraph:
    """``L(G)`` with ``edges[i]`` the edge of G that became vertex ``i``."""

    graph: Graph
    edges: tuple[tuple[int, int], ...]

    def vertex_of(self, edge: tuple[int, int]) -> int:
        u, v = edge
        key = (u, v) if u < v else (v, u)
        try:
            return self.edges.index(key)
        except ValueError:
            raise GraphError(f"{edge} is not an edge of the source graph") from None


def line_graph(g: Graph) -> LineGraph:
    edges = tuple(g.edges())
    incident = [0] * g.n
    for index, (u, v) in enumerate(edges):
        incident[u] |= 1 << index
        incident[v] |= 1 << index
    rows = tuple(
        (incident[u] | incident[v]) & ~(1 << index) for index, (u, v) in enumerate(edges)
    )
    return LineGraph(Graph(len(edges), rows), edges)


def _with_edge_vertices(g: Graph, keep_original: bool) -> Graph:
    edges = g.edges()
    total = g.n + len(edges)
    rows = list(g.rows) if keep_original else [0] * g.n
    rows.extend([0] * len(edges))
    for index, (u, v) in enumerate(edges):
        w = g.n + index
        rows[w] = 1 << u | 1 << v
        rows[u] |= 1 << w
        rows[v] |= 1 << w
    return Graph(total, tuple(rows))


def subdivision(g: Graph) -> Graph:
    """``S(G)``: every edge ``uv`` replaced by a path ``u - w - v``."""
    return _with_edge_vertices(g, keep_original=False)


def semi_total_point(g: Graph) -> Graph:
    """``R(G)``: G plus one vertex per edge joined to both of its endpoints."""
    return _with_edge_vertices(g, keep_original=True)


def merged_double_semi_total(n: int) -> Graph:
    """Two copies of ``R(C_n)`` glued along their edge vertices in cycle order.

    Cycle vertices of the first copy are ``0..n-1``, of the second ``n..2n-1``;
    merged vertex ``2n + i`` sits over edge ``{i, i+1 mod n}`` of both cycles.
    """
    if n < 3:
        raise GraphError(f"merged double semi-total graph needs n >= 3, got {n}")
    edges = []
    for i in range(n):
        nxt = (i + 1) % n
        merged = 2 * n + i
        edges.extend([(i, nxt), (n + i, n + nxt)])
        edges.extend((merged, v) for v in (i, nxt, n + i, n + nxt))
    rows = [0] * (3 * n)
    for u, v in edges:
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(3 * n, tuple(rows))


# ── Dispatch ─────────────────────────────────────────

_UNARY_OPS = {
    OperationKind.COMPLEMENT: complement,
    OperationKind.LINE_GRAPH: lambda g: line_graph(g).graph,
    OperationKind.SUBDIVISION: subdivision,
    OperationKind.SEMI_TOTAL_POINT: semi_total_point,
}

_BINARY_OPS = {
    OperationKind.CARTESIAN: cartesian,
    OperationKind.DIRECT: direct,
    OperationKind.COMPOSITION: composition,
    OperationKind.STRONG: strong,
    OperationKind.JOIN: join,
}


def apply_operation(kind: OperationKind, g1: Graph, g2: Graph | None = None) -> Graph:
    """Apply *kind*; binary operations need *g2*, unary ones reject it."""
    if kind.binary:
        if g2 is None:
            raise GraphError(f"operation {kind} needs two graphs")
        return _BINARY_OPS[kind](g1, g2)
    if g2 is not None:
        raise GraphError(f"operation {kind} takes a single graph")
    return _UNARY_OPS[kind](g1)
