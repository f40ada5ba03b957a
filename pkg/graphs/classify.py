"""Regularity profile of a graph: regular, edge-regular, pseudo strongly
regular, strongly regular and Deza.

A lambda (mu) condition with no adjacent (non-adjacent) pair to constrain it
is reported as ``Status.VACUOUS`` rather than guessed. Irregular graphs are
never edge-regular, pseudo or strongly regular. Deza values are computed over
every vertex pair independently of regularity.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import StrEnum
from typing import Any

from graphs.core import Graph, is_regular


class Status(StrEnum):
    YES = "yes"
    NO = "no"
    VACUOUS = "vacuous"


@dataclass(frozen=True, slots=True)
class Constancy:
    """Outcome of a "constant common-neighbour count" condition."""

    status: Status
    value: int | None = None

    @property
    def holds(self) -> bool:
        """True for ``YES`` and ``VACUOUS``."""
        return self.status is not Status.NO

    def matches(self, value: int) -> bool:
        return self.status is Status.VACUOUS or (self.status is Status.YES and self.value == value)

    def __str__(self) -> str:
        if self.status is Status.YES:
            return f"yes({self.value})"
        return str(self.status)


NO = Constancy(Status.NO)
VACUOUS = Constancy(Status.VACUOUS)


@dataclass(frozen=True, slots=True)
class ClassificationReport:
    n: int
    regular_k: int | None
    edge_regular: Constancy
    pseudo: Constancy
    srg: tuple[int, int, int | None, int | None] | None
    deza: tuple[int, ...] | None

    @property
    def lam(self) -> int | None:
        return self.edge_regular.value

    @property
    def mu(self) -> int | None:
        return self.pseudo.value

    def to_dict(self) -> dict[str, Any]:
        return {
            "n": self.n,
            "k": self.regular_k,
            "edge_regular": str(self.edge_regular.status),
            "lambda": self.edge_regular.value,
            "lambda_vacuous": self.edge_regular.status is Status.VACUOUS,
            "pseudo": str(self.pseudo.status),
            "mu": self.pseudo.value,
            "mu_vacuous": self.pseudo.status is Status.VACUOUS,
            "srg": list(self.srg) if self.srg is not None else None,
            "deza": list(self.deza) if self.deza is not None else None,
        }

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> ClassificationReport:
        srg = data.get("srg")
        deza = data.get("deza")
        return cls(
            n=data["n"],
            regular_k=data["k"],
            edge_regular=Constancy(Status(data["edge_regular"]), data["lambda"]),
            pseudo=Constancy(Status(data["pseudo"]), data["mu"]),
            srg=tuple(srg) if srg is not None else None,  # type: ignore[arg-type]
            deza=tuple(deza) if deza is not None else None,
        )

    def to_text(self) -> str:
        lines = [
            f"n: {self.n}",
            f"regular: {self.regular_k if self.regular_k is not None else 'no'}",
            f"edge-regular: {self.edge_regular}",
            f"pseudo strongly regular: {self.pseudo}",
        ]
        if self.srg is not None:
            n, k, lam, mu = self.srg
            shown = ", ".join("vacuous" if v is None else str(v) for v in (lam, mu))
            lines.append(f"strongly regular: ({n}, {k}, {shown})")
        else:
            lines.append("strongly regular: no")
        if self.deza is not None:
            lines.append(f"deza: {{{', '.join(map(str, self.deza))}}}")
        else:
            lines.append("deza: no")
        return "\n".join(lines) + "\n"


def _constancy(counts: set[int]) -> Constancy:
    if not counts:
        return VACUOUS
    if len(counts) == 1:
        return Constancy(Status.YES, next(iter(counts)))
    return NO


def classify(g: Graph) -> ClassificationReport:
    adjacent: set[int] = set()
    non_adjacent: set[int] = set()
    for u in range(g.n):
        for v in range(u + 1, g.n):
            count = (g.rows[u] & g.rows[v]).bit_count()
            (adjacent if g.rows[u] >> v & 1 else non_adjacent).add(count)

    every = adjacent | non_adjacent
    deza = tuple(sorted(every)) if len(every) <= 2 else None

    k = is_regular(g)
    if k is None:
        return ClassificationReport(g.n, None, NO, NO, None, deza)

    edge_regular = _constancy(adjacent)
    pseudo = _constancy(non_adjacent)
    srg = None
    if edge_regular.holds and pseudo.holds and Status.YES in (edge_regular.status, pseudo.status):
        srg = (g.n, k, edge_regular.value, pseudo.value)
    return ClassificationReport(g.n, k, edge_regular, pseudo, srg, deza)


# ── Convenience predicates ───────────────────────────


def is_edge_regular_with(g: Graph, n: int, k: int, lam: int) -> bool:
    report = classify(g)
    return report.n == n and report.regular_k == k and report.edge_regular.matches(lam)


def is_pseudo_with(g: Graph, n: int, k: int, mu: int) -> bool:
    report = classify(g)
    return report.n == n and report.regular_k == k and report.pseudo.matches(mu)


def is_srg_with(g: Graph, n: int, k: int, lam: int, mu: int) -> bool:
    report = classify(g)
    return (
        report.srg is not None
        and report.n == n
        and report.regular_k == k
        and report.edge_regular.matches(lam)
        and report.pseudo.matches(mu)
    )
