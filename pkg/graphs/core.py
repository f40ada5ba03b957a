"""Simple undirected graphs stored as one adjacency bit-row per vertex.

Bit ``v`` of ``rows[u]`` is set exactly when ``u ~ v``. Common-neighbour counts
are popcounts of row intersections, and every predicate here is exact.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass

import networkx as nx


class GraphError(ValueError):
    """Raised for invalid vertices, loop pairs, or malformed edge pairs."""


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the indices of the set bits of *mask* in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True, slots=True)
class Graph:
    """Immutable simple graph on vertices ``0..n-1``."""

    n: int
    rows: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n < 0:
            raise GraphError(f"vertex count must be non-negative, got {self.n}")
        if len(self.rows) != self.n:
            raise GraphError(f"expected {self.n} adjacency rows, got {len(self.rows)}")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.rows):
            if row & ~full:
                raise GraphError(f"row {v} references a vertex outside 0..{self.n - 1}")
            if row >> v & 1:
                raise GraphError(f"loop at vertex {v}")
            for w in iter_bits(row):
                if not self.rows[w] >> v & 1:
                    raise GraphError(f"adjacency is not symmetric for pair ({v}, {w})")

    # ── Basic queries ──────────────────────────────────

    def has_edge(self, u: int, v: int) -> bool:
        self.check_vertex(u)
        self.check_vertex(v)
        return bool(self.rows[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        self.check_vertex(v)
        return list(iter_bits(self.rows[v]))

    def edges(self) -> list[tuple[int, int]]:
        """Edges as ``(min, max)`` pairs in lexicographic order."""
        return [(u, w) for u in range(self.n) for w in iter_bits(self.rows[u] >> (u + 1) << (u + 1))]

    @property
    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.rows) // 2

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def degrees(self) -> tuple[int, ...]:
        return tuple(row.bit_count() for row in self.rows)

    def check_vertex(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise GraphError(f"vertex {v} out of range 0..{self.n - 1}")

    def relabel(self, perm: Sequence[int]) -> Graph:
        """Return the graph with vertex ``v`` renamed to ``perm[v]``."""
        if sorted(perm) != list(range(self.n)):
            raise GraphError("relabeling must be a permutation of the vertex set")
        rows = [0] * self.n
        for v, row in enumerate(self.rows):
            image = 0
            for w in iter_bits(row):
                image |= 1 << perm[w]
            rows[perm[v]] = image
        return Graph(self.n, tuple(rows))

    def induced(self, vertices: Sequence[int]) -> Graph:
        """Induced subgraph, with ``vertices[i]`` relabeled to ``i``."""
        for v in vertices:
            self.check_vertex(v)
        position = {v: i for i, v in enumerate(vertices)}
        rows = []
        for v in vertices:
            row = 0
            for w in iter_bits(self.rows[v]):
                if w in position:
                    row |= 1 << position[w]
            rows.append(row)
        return Graph(len(vertices), tuple(rows))


def from_edge_list(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph from vertex pairs; duplicate pairs collapse."""
    if n < 0:
        raise GraphError(f"vertex count must be non-negative, got {n}")
    rows = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
        if u == v:
            raise GraphError(f"edge ({u}, {v}) is a loop")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, tuple(rows))


def edgeless(n: int) -> Graph:
    return Graph(n, (0,) * n)


def to_networkx(g: Graph) -> nx.Graph:
    graph = nx.Graph()
    graph.add_nodes_from(range(g.n))
    graph.add_edges_from(g.edges())
    return graph


def from_networkx(graph: nx.Graph) -> Graph:
    """Graph from a networkx graph whose nodes are ``0..n-1``."""
    return from_edge_list(graph.number_of_nodes(), graph.edges())


def degree(g: Graph, v: int) -> int:
    g.check_vertex(v)
    return g.rows[v].bit_count()


def common_neighbors(g: Graph, u: int, v: int) -> int:
    """``|com{u, v}|`` for distinct vertices."""
    g.check_vertex(u)
    g.check_vertex(v)
    if u == v:
        raise GraphError(f"common neighbours need two distinct vertices, got {u} twice")
    return (g.rows[u] & g.rows[v]).bit_count()


def is_regular(g: Graph) -> int | None:
    """Common degree ``k``, or ``None`` for irregular graphs (``0`` when ``n == 0``)."""
    if g.n == 0:
        return 0
    first = g.rows[0].bit_count()
    if all(row.bit_count() == first for row in g.rows):
        return first
    return None


# ── Edge pairs ───────────────────────────────────────


def _normalize(pair: tuple[int, int]) -> tuple[int, int]:
    u, v = pair
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True, slots=True)
class EdgePair:
    """Two distinct edges of one graph, each stored as ``(min, max)``."""

    e1: tuple[int, int]
    e2: tuple[int, int]

    @property
    def disjoint(self) -> bool:
        return not set(self.e1) & set(self.e2)


def edge_pair(g: Graph, e1: tuple[int, int], e2: tuple[int, int]) -> EdgePair:
    first, second = _normalize(e1), _normalize(e2)
    for edge in (first, second):
        if not g.has_edge(*edge):
            raise GraphError(f"{edge} is not an edge of the graph")
    if first == second:
        raise GraphError(f"edge pair repeats {first}")
    return EdgePair(first, second)


def disjoint_edge_pairs(g: Graph) -> Iterator[EdgePair]:
    """All unordered pairs of vertex-disjoint edges, in lexicographic order."""
    edges = g.edges()
    for i, first in enumerate(edges):
        for second in edges[i + 1 :]:
            if not set(first) & set(second):
                yield EdgePair(first, second)


def _cross_mask(g: Graph, p: EdgePair) -> tuple[bool, bool, bool, bool]:
    if not p.disjoint:
        raise GraphError(f"edges {p.e1} and {p.e2} share a vertex")
    (a, b), (c, d) = p.e1, p.e2
    return g.has_edge(a, c), g.has_edge(a, d), g.has_edge(b, c), g.has_edge(b, d)


def edge_pair_cross_edges(g: Graph, p: EdgePair) -> int:
    """Edges of *g* among ``{ac, ad, bc, bd}`` for ``e1 = ab``, ``e2 = cd``."""
    return sum(_cross_mask(g, p))


@dataclass(frozen=True, slots=True)
class PairPattern:
    in_p4: bool
    in_c4: bool
    in_diamond: bool
    in_k4: bool


def pair_connectivity_pattern(g: Graph, p: EdgePair) -> PairPattern:
    ac, ad, bc, bd = _cross_mask(g, p)
    count = ac + ad + bc + bd
    return PairPattern(
        in_p4=count >= 1,
        in_c4=(ac and bd) or (ad and bc),
        # e1 and e2 plus three cross edges is K4 minus one edge
        in_diamond=count >= 3,
        in_k4=count == 4,
    )


# ── Forbidden subgraphs ──────────────────────────────


def is_triangle_free(g: Graph) -> bool:
    return all(not (g.rows[u] & g.rows[v]) for u, v in g.edges())


def is_k4_free(g: Graph) -> bool:
    for u, v in g.edges():
        common = g.rows[u] & g.rows[v]
        if any(g.rows[w] & common for w in iter_bits(common)):
            return False
    return True


def is_diamond_free(g: Graph) -> bool:
    """No K4-minus-an-edge subgraph: no edge with two common neighbours."""
    return all((g.rows[u] & g.rows[v]).bit_count() < 2 for u, v in g.edges())


def is_c4_free(g: Graph) -> bool:
    """No 4-cycle subgraph: no two vertices share two neighbours."""
    return all(
        (g.rows[u] & g.rows[v]).bit_count() < 2 for u in range(g.n) for v in range(u + 1, g.n)
    )


# ── Structure ────────────────────────────────────────


def components(g: Graph) -> list[list[int]]:
    """Connected components, each sorted, ordered by smallest vertex."""
    unseen = g.full_mask
    result = []
    while unseen:
        start = unseen & -unseen
        reached = frontier = start
        while frontier:
            step = 0
            for v in iter_bits(frontier):
                step |= g.rows[v]
            frontier = step & ~reached
            reached |= frontier
        unseen &= ~reached
        result.append(list(iter_bits(reached)))
    return result


def is_connected(g: Graph) -> bool:
    return len(components(g)) <= 1


def is_complete(g: Graph) -> bool:
    return all(row == g.full_mask ^ (1 << v) for v, row in enumerate(g.rows))


def is_edgeless(g: Graph) -> bool:
    return not any(g.rows)


def is_disjoint_union_of_cycles(g: Graph) -> bool:
    # A 2-regular simple graph has only cycle components, each on >= 3 vertices.
    return all(row.bit_count() == 2 for row in g.rows)


def is_disjoint_union_of_complete_graphs(g: Graph) -> bool:
    return all(
        g.rows[v] | (1 << v) == sum(1 << w for w in part) for part in components(g) for v in part
    )


def is_disjoint_union_of_triangles_and_edges(g: Graph) -> bool:
    return is_disjoint_union_of_complete_graphs(g) and all(
        len(part) in (2, 3) for part in components(g)
    )
