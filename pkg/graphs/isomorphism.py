"""Canonical labelling and isomorphism testing for small graphs.

The canonical form is the lexicographically smallest upper-triangle adjacency
encoding over all vertex orders that list vertices by non-increasing degree.
The search builds orders one position at a time, keeps only candidates whose
new column is minimal, prunes prefixes worse than the best leaf so far, and
branches once per class of interchangeable twins. Intended for n <= 12.
Pairwise isomorphism tests go to networkx.
"""

from __future__ import annotations

import networkx as nx

from graphs.core import Graph, to_networkx


def _twin_masks(g: Graph) -> list[int]:
    """``masks[u]`` has bit ``w`` set when swapping ``u`` and ``w`` is an automorphism."""
    masks = [0] * g.n
    for u in range(g.n):
        for w in range(u + 1, g.n):
            if g.rows[u] & ~(1 << w) == g.rows[w] & ~(1 << u):
                masks[u] |= 1 << w
                masks[w] |= 1 << u
    return masks


def _pack(n: int, columns: list[int]) -> bytes:
    bits = 0
    length = 0
    for position, column in enumerate(columns):
        bits = bits << position | column
        length += position
    padding = -length % 8
    payload = (bits << padding).to_bytes((length + padding) // 8, "big")
    return n.to_bytes(2, "big") + payload


def canonical_columns(g: Graph) -> list[int]:
    """Minimal column sequence: ``columns[m]`` holds adjacency of position ``m`` to ``0..m-1``."""
    n = g.n
    if n == 0:
        return []
    rows = g.rows
    degrees = g.degrees()
    slots = sorted(degrees, reverse=True)
    twins = _twin_masks(g)
    best: list[int] | None = None

    def search(order: list[int], placed: int, columns: list[int]) -> None:
        nonlocal best
        m = len(order)
        if m == n:
            if best is None or columns < best:
                best = list(columns)
            return
        keyed = []
        for v in range(n):
            if placed >> v & 1 or degrees[v] != slots[m]:
                continue
            key = 0
            for u in order:
                key = key << 1 | (rows[v] >> u & 1)
            keyed.append((key, v))
        smallest = min(key for key, _ in keyed)
        columns.append(smallest)
        if best is None or columns <= best[: m + 1]:
            chosen: list[int] = []
            for key, v in keyed:
                if key != smallest or any(twins[v] >> c & 1 for c in chosen):
                    continue
                chosen.append(v)
                order.append(v)
                search(order, placed | 1 << v, columns)
                order.pop()
        columns.pop()

    search([], 0, [])
    assert best is not None
    return best


def canonical_form(g: Graph) -> bytes:
    """Relabeling-invariant encoding; equal bytes exactly for isomorphic graphs."""
    return _pack(g.n, canonical_columns(g))


def canonical_graph(g: Graph) -> Graph:
    """The representative of *g*'s isomorphism class encoded by its canonical form."""
    rows = [0] * g.n
    for m, column in enumerate(canonical_columns(g)):
        for i in range(m):
            if column >> (m - 1 - i) & 1:
                rows[m] |= 1 << i
                rows[i] |= 1 << m
    return Graph(g.n, tuple(rows))


def are_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.edge_count != h.edge_count:
        return False
    return nx.is_isomorphic(to_networkx(g), to_networkx(h))
