"""Exhaustive enumeration of small graphs up to isomorphism.

Regular graphs are generated by backtracking over vertices in index order:
vertex ``v`` picks its remaining neighbours among later vertices, and later
vertices whose partial rows are identical are interchangeable, so only the
lowest-indexed members of each such group are tried. Degree ``k`` above
``(n - 1) / 2`` is generated through complements of the ``n - 1 - k`` case.
Every result is deduplicated by canonical form, which keeps the output
correct whatever the strength of the pruning.
"""

from __future__ import annotations

import logging
from collections.abc import Callable, Iterator, Sequence
from dataclasses import dataclass
from typing import Any

from config import config
from graphs.classify import ClassificationReport, classify
from graphs.core import Graph, is_connected
from graphs.formats import decode_graph6, encode_graph6
from graphs.isomorphism import canonical_form, canonical_graph
from graphs.ops import complement
from services.parallel import map_in_pool

logger = logging.getLogger("regtool.census")

REGULAR_MAX_N = 10
ALL_GRAPHS_MAX_N = 6


class CensusError(ValueError):
    """Raised for census arguments outside the supported range."""


@dataclass(frozen=True, slots=True)
class CensusRecord:
    canonical: bytes
    g6: str
    n: int
    k: int
    report: ClassificationReport

    @classmethod
    def from_graph(cls, g: Graph) -> CensusRecord:
        report = classify(g)
        if report.regular_k is None:
            raise CensusError("census records hold regular graphs only")
        return cls(canonical_form(g), encode_graph6(g), g.n, report.regular_k, report)

    @property
    def graph(self) -> Graph:
        return decode_graph6(self.g6)

    @property
    def sort_key(self) -> tuple[int, int, bytes]:
        return (self.n, self.k, self.canonical)

    def to_dict(self) -> dict[str, Any]:
        return {
            "canonical": self.canonical.hex(),
            "g6": self.g6,
            "n": self.n,
            "k": self.k,
            "report": self.report.to_dict(),
        }

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> CensusRecord:
        return cls(
            canonical=bytes.fromhex(data["canonical"]),
            g6=data["g6"],
            n=data["n"],
            k=data["k"],
            report=ClassificationReport.from_dict(data["report"]),
        )


# ── Backtracking engine ──────────────────────────────


def _choices(groups: list[list[int]], need: int | None) -> Iterator[list[int]]:
    """Pick a prefix of each group; total size *need* (any size when ``None``)."""
    if not groups:
        if need is None or need == 0:
            yield []
        return
    first, rest = groups[0], groups[1:]
    upper = len(first) if need is None else min(len(first), need)
    for count in range(upper + 1):
        remaining = None if need is None else need - count
        for tail in _choices(rest, remaining):
            yield first[:count] + tail


def _search(n: int, k: int | None) -> Iterator[Graph]:
    """Labelled graphs covering every isomorphism class (``k``-regular, or all when ``None``)."""
    rows = [0] * n

    def extend(v: int) -> Iterator[Graph]:
        if v == n:
            yield Graph(n, tuple(rows))
            return
        need = None if k is None else k - rows[v].bit_count()
        groups: dict[int, list[int]] = {}
        for w in range(v + 1, n):
            if k is None or rows[w].bit_count() < k:
                groups.setdefault(rows[w], []).append(w)
        for chosen in _choices(list(groups.values()), need):
            for w in chosen:
                rows[v] ^= 1 << w
                rows[w] ^= 1 << v
            if k is None or all(k - rows[w].bit_count() <= n - v - 2 for w in range(v + 1, n)):
                yield from extend(v + 1)
            for w in chosen:
                rows[v] ^= 1 << w
                rows[w] ^= 1 << v

    yield from extend(0)


def _dedupe(graphs: Iterator[Graph]) -> list[Graph]:
    classes: dict[bytes, Graph] = {}
    for g in graphs:
        form = canonical_form(g)
        if form not in classes:
            classes[form] = canonical_graph(g)
    return [classes[form] for form in sorted(classes)]


def enumerate_regular(n: int, k: int, connected_only: bool = False) -> list[Graph]:
    """One representative per isomorphism class of ``k``-regular graphs on ``n`` vertices.

    Representatives are canonical graphs, sorted by canonical form.
    """
    if not 0 <= k < n <= REGULAR_MAX_N:
        raise CensusError(f"need 0 <= k < n <= {REGULAR_MAX_N}, got n={n}, k={k}")
    if n * k % 2:
        logger.info("No %d-regular graphs on %d vertices: n*k is odd", k, n)
        return []
    if 2 * k > n - 1:
        graphs = _dedupe(complement(g) for g in _search(n, n - 1 - k))
    else:
        graphs = _dedupe(_search(n, k))
    if connected_only:
        graphs = [g for g in graphs if is_connected(g)]
    logger.debug("Cell n=%d k=%d: %d classes", n, k, len(graphs))
    return graphs


def enumerate_graphs(n: int) -> list[Graph]:
    """One canonical representative per isomorphism class of all graphs on ``n`` vertices."""
    if not 0 <= n <= ALL_GRAPHS_MAX_N:
        raise CensusError(f"all-graph enumeration supports 0 <= n <= {ALL_GRAPHS_MAX_N}, got {n}")
    return _dedupe(_search(n, None))


# ── Census runs ──────────────────────────────────────


def _census_cell(cell: tuple[int, int, bool]) -> list[CensusRecord]:
    n, k, connected_only = cell
    return [CensusRecord.from_graph(g) for g in enumerate_regular(n, k, connected_only)]


def run_census(
    max_n: int, connected_only: bool = False, workers: int | None = None
) -> list[CensusRecord]:
    """Classified records for every regular graph with ``1 <= n <= max_n``.

    Cells ``(n, k)`` are enumerated independently (in parallel when *workers*
    allows) and merged in ``(n, k, canonical)`` order.
    """
    ceiling = config.census.ceiling
    if not 1 <= max_n <= ceiling:
        raise CensusError(
            f"census max_n must be between 1 and {ceiling}, got {max_n} "
            "(set REGTOOL_ALLOW_N10=true to allow n up to 10)"
        )
    cells = [
        (n, k, connected_only) for n in range(1, max_n + 1) for k in range(n) if n * k % 2 == 0
    ]
    records = [record for chunk in map_in_pool(_census_cell, cells, workers) for record in chunk]
    records.sort(key=lambda record: record.sort_key)
    logger.info("Census up to n=%d: %d classes", max_n, len(records))
    return records


def census_graphs(
    max_n: int, connected_only: bool = True, workers: int | None = None
) -> list[Graph]:
    return [record.graph for record in run_census(max_n, connected_only, workers)]


# ── Queries ──────────────────────────────────────────


def query(
    records: Sequence[CensusRecord], predicate: Callable[[ClassificationReport], bool]
) -> list[CensusRecord]:
    return [record for record in records if predicate(record.report)]


_FILTER_KEYS = frozenset(
    {"n", "k", "lambda", "mu", "edge_regular", "pseudo", "srg", "deza"}
    | {"lambda_vacuous", "mu_vacuous"}
)


def _normalize(value: Any) -> str:
    if value is None:
        return "none"
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, list):
        return ",".join(_normalize(item) for item in value)
    return str(value).lower()


def parse_filter(expressions: Sequence[str]) -> Callable[[ClassificationReport], bool]:
    """Predicate from ``key=value`` terms, all of which must match.

    Values compare against the report's JSON form; ``srg`` and ``deza`` also
    accept ``true``/``false`` for presence, and list values are comma separated.
    """
    terms: list[tuple[str, str]] = []
    for expression in expressions:
        key, sep, value = expression.partition("=")
        key = key.strip().lower()
        if not sep or key not in _FILTER_KEYS:
            raise CensusError(
                f"bad filter {expression!r}: expected key=value with key in "
                f"{', '.join(sorted(_FILTER_KEYS))}"
            )
        terms.append((key, value.strip().lower().replace(" ", "")))

    def predicate(report: ClassificationReport) -> bool:
        data = report.to_dict()
        for key, wanted in terms:
            actual = data[key]
            if key in ("srg", "deza") and wanted in ("true", "false"):
                if (actual is not None) != (wanted == "true"):
                    return False
            elif _normalize(actual) != wanted:
                return False
        return True

    return predicate
