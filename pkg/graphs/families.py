"""Deterministic generators for the named graphs used in examples and tests.

Labelling: cycles and paths run ``0 - 1 - ... - (n-1)``; multipartite graphs
are labelled block by block (left block first for bipartite); Petersen is
Kneser(5, 2) over 2-subsets in ``itertools.combinations`` order; a star has
its centre at ``0``; a prism has cycle copies ``0..n-1`` and ``n..2n-1``.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass, field
from enum import StrEnum
from itertools import combinations

from graphs.core import Graph, GraphError, edgeless, from_edge_list
from graphs.ops import cartesian, disjoint_union, merged_double_semi_total


class Family(StrEnum):
    CYCLE = "cycle"
    PATH = "path"
    COMPLETE = "complete"
    COMPLETE_BIPARTITE = "complete-bipartite"
    COMPLETE_MULTIPARTITE = "complete-multipartite"
    EDGELESS = "edgeless"
    OCTAHEDRON = "octahedron"
    PETERSEN = "petersen"
    DISJOINT_UNION = "disjoint-union"
    MERGED_DOUBLE_RC = "merged-double-rc"
    STAR = "star"
    PRISM = "prism"


@dataclass(frozen=True, slots=True)
class FamilySpec:
    family: Family
    params: tuple[int, ...] = ()
    parts: tuple[FamilySpec, ...] = field(default=())


def _expect(spec: FamilySpec, count: int) -> tuple[int, ...]:
    if len(spec.params) != count:
        raise GraphError(f"{spec.family} takes {count} integer parameter(s), got {len(spec.params)}")
    return spec.params


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError(f"cycle needs n >= 3, got {n}")
    return from_edge_list(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    if n < 1:
        raise GraphError(f"path needs n >= 1, got {n}")
    return from_edge_list(n, [(i, i + 1) for i in range(n - 1)])


def complete(n: int) -> Graph:
    if n < 1:
        raise GraphError(f"complete graph needs n >= 1, got {n}")
    full = (1 << n) - 1
    return Graph(n, tuple(full ^ (1 << v) for v in range(n)))


def complete_multipartite(sizes: Sequence[int]) -> Graph:
    if not sizes or any(size < 1 for size in sizes):
        raise GraphError(f"multipartite block sizes must be positive, got {list(sizes)}")
    n = sum(sizes)
    full = (1 << n) - 1
    rows = []
    start = 0
    for size in sizes:
        block = ((1 << size) - 1) << start
        rows.extend([full & ~block] * size)
        start += size
    return Graph(n, tuple(rows))


def complete_bipartite(m: int, n: int) -> Graph:
    return complete_multipartite([m, n])


def star(n: int) -> Graph:
    """``K_{1,n}`` with centre ``0``."""
    if n < 1:
        raise GraphError(f"star needs n >= 1 leaves, got {n}")
    return complete_bipartite(1, n)


def octahedron() -> Graph:
    """``K_{2,2,2}``: opposite vertices ``(0,1)``, ``(2,3)``, ``(4,5)``."""
    return complete_multipartite([2, 2, 2])


def petersen() -> Graph:
    subsets = list(combinations(range(5), 2))
    return from_edge_list(
        len(subsets),
        [
            (i, j)
            for i, j in combinations(range(len(subsets)), 2)
            if not set(subsets[i]) & set(subsets[j])
        ],
    )


def prism(n: int) -> Graph:
    """``C_n □ K_2`` relabelled so each cycle copy is contiguous."""
    product = cartesian(cycle(n), complete(2))
    return product.relabel([(v % 2) * n + v // 2 for v in range(2 * n)])


def generate(spec: FamilySpec) -> Graph:
    match spec.family:
        case Family.CYCLE:
            return cycle(*_expect(spec, 1))
        case Family.PATH:
            return path(*_expect(spec, 1))
        case Family.COMPLETE:
            return complete(*_expect(spec, 1))
        case Family.COMPLETE_BIPARTITE:
            return complete_bipartite(*_expect(spec, 2))
        case Family.COMPLETE_MULTIPARTITE:
            return complete_multipartite(spec.params)
        case Family.EDGELESS:
            (n,) = _expect(spec, 1)
            if n < 0:
                raise GraphError(f"edgeless graph needs n >= 0, got {n}")
            return edgeless(n)
        case Family.OCTAHEDRON:
            _expect(spec, 0)
            return octahedron()
        case Family.PETERSEN:
            _expect(spec, 0)
            return petersen()
        case Family.DISJOINT_UNION:
            if spec.params:
                raise GraphError("disjoint-union takes sub-specs, not integer parameters")
            result = edgeless(0)
            for part in spec.parts:
                result = disjoint_union(result, generate(part))
            return result
        case Family.MERGED_DOUBLE_RC:
            return merged_double_semi_total(*_expect(spec, 1))
        case Family.STAR:
            return star(*_expect(spec, 1))
        case Family.PRISM:
            return prism(*_expect(spec, 1))
    raise GraphError(f"unknown family {spec.family!r}")


# ── Parsing ──────────────────────────────────────────


def _ints(family: Family, args: Sequence[str]) -> tuple[int, ...]:
    try:
        return tuple(int(arg) for arg in args)
    except ValueError:
        raise GraphError(f"{family} parameters must be integers, got {' '.join(args)!r}") from None


def parse_spec(name: str, args: Sequence[str] = ()) -> FamilySpec:
    """Spec from a family name and its arguments.

    ``disjoint-union`` takes component specs written ``name:p1,p2``
    (for example ``cycle:3 complete-bipartite:2,3 petersen``).
    """
    try:
        family = Family(name.strip().lower())
    except ValueError:
        known = ", ".join(member.value for member in Family)
        raise GraphError(f"unknown family {name!r}; expected one of {known}") from None
    if family is Family.DISJOINT_UNION:
        parts = []
        for arg in args:
            part_name, _, rest = arg.partition(":")
            part = parse_spec(part_name, rest.split(",") if rest else ())
            if part.family is Family.DISJOINT_UNION:
                raise GraphError("disjoint-union components cannot be disjoint unions")
            parts.append(part)
        return FamilySpec(family, parts=tuple(parts))
    return FamilySpec(family, _ints(family, args))
