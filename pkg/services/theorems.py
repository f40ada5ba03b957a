"""Verifiers for the regularity results on graph operations.

Each verifier evaluates a claim on concrete inputs. The predicted side uses
only the inputs' parameters and the claimed formulas; the observed side is a
brute-force classification of the constructed graph. A verdict agrees when
the observation matches the prediction, and for "if and only if" claims also
when a failed hypothesis is matched by a failed conclusion.

Product and join claims are evaluated as "every pair type that can occur has
the same common-neighbour count": a pair type that cannot occur (adjacent
pairs inside an edgeless factor, non-adjacent pairs inside a complete one)
contributes no equation. Non-existence claims are bounded sweeps over the
connected census and can only report "no counterexample up to n".
"""

from __future__ import annotations

import logging
from collections.abc import Callable, Sequence
from dataclasses import dataclass, field
from enum import StrEnum
from functools import lru_cache
from typing import Any

from config import config
from graphs.classify import ClassificationReport, Constancy, Status, classify
from graphs.core import (
    Graph,
    common_neighbors,
    disjoint_edge_pairs,
    edge_pair_cross_edges,
    is_c4_free,
    is_complete,
    is_diamond_free,
    is_disjoint_union_of_complete_graphs,
    is_disjoint_union_of_cycles,
    is_disjoint_union_of_triangles_and_edges,
    is_edgeless,
    is_k4_free,
    is_regular,
    is_triangle_free,
    pair_connectivity_pattern,
)
from graphs.families import complete, complete_bipartite, cycle, octahedron, petersen, star
from graphs.formats import encode_graph6
from graphs.isomorphism import are_isomorphic
from graphs.ops import (
    cartesian,
    complement,
    composition,
    direct,
    disjoint_union,
    join,
    line_graph,
    merged_double_semi_total,
    strong,
    subdivision,
)
from services.census import ALL_GRAPHS_MAX_N, census_graphs, enumerate_graphs
from services.parallel import map_in_pool

logger = logging.getLogger("regtool.theorems")


class TheoremId(StrEnum):
    COMPLEMENT_DUALITY = "complement-duality"
    COMPLEMENT_SRG_COROLLARY = "complement-srg-corollary"
    CARTESIAN_EDGE = "cartesian-edge"
    CARTESIAN_PSEUDO = "cartesian-pseudo"
    DIRECT_EDGE = "direct-edge"
    DIRECT_PSEUDO_NONEXISTENCE = "direct-pseudo-nonexistence"
    COMPOSITION_EDGE = "composition-edge"
    COMPOSITION_PSEUDO = "composition-pseudo"
    STRONG_EDGE = "strong-edge"
    STRONG_PSEUDO_NONEXISTENCE = "strong-pseudo-nonexistence"
    JOIN_EDGE = "join-edge"
    JOIN_PSEUDO = "join-pseudo"
    LINE_EDGE = "line-edge"
    LINE_MU_AT_MOST_4 = "line-mu-at-most-4"
    LINE_NO_MU3 = "line-no-mu3"
    LINE_PSEUDO_CHARACTERIZATION = "line-pseudo-characterization"
    SUBDIVISION_EDGE = "subdivision-edge"
    SUBDIVISION_PSEUDO_NONEXISTENCE = "subdivision-pseudo-nonexistence"
    TRIANGLE_FREE_OBSERVATION = "triangle-free-observation"
    LINE_STAR_NOTE = "line-star-note"
    MERGED_DOUBLE_EXAMPLE = "merged-double-example"


Params = tuple[int | None, ...]


@dataclass(frozen=True, slots=True)
class TheoremVerdict:
    theorem: TheoremId
    inputs: tuple[str, ...]
    applicable: bool
    hypothesis_holds: bool
    predicted: Params | None
    observed: tuple[ClassificationReport, ...]
    agree: bool
    excluded: bool = False
    detail: str = ""

    def to_dict(self) -> dict[str, Any]:
        return {
            "theorem": str(self.theorem),
            "inputs": list(self.inputs),
            "applicable": self.applicable,
            "hypothesis_holds": self.hypothesis_holds,
            "predicted": list(self.predicted) if self.predicted is not None else None,
            "observed": [report.to_dict() for report in self.observed],
            "agree": self.agree,
            "excluded": self.excluded,
            "detail": self.detail,
        }


@dataclass(frozen=True, slots=True)
class VerifySummary:
    total: int = 0
    agree: int = 0
    disagreements: int = 0
    excluded: int = 0
    not_applicable: int = 0
    by_theorem: dict[str, int] = field(default_factory=dict)


def summarize(verdicts: Sequence[TheoremVerdict]) -> VerifySummary:
    by_theorem: dict[str, int] = {}
    for verdict in verdicts:
        by_theorem[str(verdict.theorem)] = by_theorem.get(str(verdict.theorem), 0) + 1
    return VerifySummary(
        total=len(verdicts),
        agree=sum(v.agree for v in verdicts),
        disagreements=sum(not v.agree for v in verdicts),
        excluded=sum(v.excluded for v in verdicts),
        not_applicable=sum(not v.applicable for v in verdicts),
        by_theorem=dict(sorted(by_theorem.items())),
    )


# ── Helpers ──────────────────────────────────────────


@lru_cache(maxsize=4096)
def _profile(g: Graph) -> ClassificationReport:
    """Classification of an input graph; the source of every predicted parameter."""
    return classify(g)


def _verdict(
    theorem: TheoremId,
    inputs: Sequence[Graph],
    *,
    applicable: bool = True,
    hypothesis: bool = False,
    predicted: Params | None = None,
    observed: Sequence[ClassificationReport] = (),
    agree: bool = True,
    excluded: bool = False,
    detail: str = "",
) -> TheoremVerdict:
    verdict = TheoremVerdict(
        theorem=theorem,
        inputs=tuple(encode_graph6(g) for g in inputs),
        applicable=applicable,
        hypothesis_holds=hypothesis,
        predicted=predicted,
        observed=tuple(observed),
        agree=agree,
        excluded=excluded,
        detail=detail,
    )
    if not agree:
        logger.warning("%s disagrees on %s: %s", theorem, ",".join(verdict.inputs), detail)
    elif excluded:
        logger.info("%s excluded on %s: %s", theorem, ",".join(verdict.inputs), detail)
    return verdict


def _has_edge(g: Graph) -> bool:
    return g.edge_count > 0


def _has_non_edge(g: Graph) -> bool:
    return g.edge_count < g.n * (g.n - 1) // 2


def _degenerate(g: Graph) -> bool:
    return is_complete(g) or is_edgeless(g)


def _shared(values: Sequence[int]) -> tuple[bool, int | None]:
    """Whether all occurring case counts agree, and the common value if any."""
    distinct = set(values)
    if len(distinct) > 1:
        return False, None
    return True, next(iter(distinct), None)


def _fits(found: Constancy, value: int | None) -> bool:
    """Exact match: ``None`` predicts a vacuous condition."""
    if value is None:
        return found.status is Status.VACUOUS
    return found.status is Status.YES and found.value == value


def _edge_observation(report: ClassificationReport, n: int, k: int, lam: int | None) -> bool:
    return report.n == n and report.regular_k == k and _fits(report.edge_regular, lam)


def _pseudo_observation(report: ClassificationReport, n: int, k: int, mu: int | None) -> bool:
    return report.n == n and report.regular_k == k and _fits(report.pseudo, mu)


def _iff(
    hypothesis: bool, matches: bool, failed: bool, predicted: Params | None
) -> tuple[bool, str]:
    if hypothesis:
        return matches, f"predicted {predicted}; observation {'matches' if matches else 'differs'}"
    return failed, f"hypothesis fails; conclusion {'fails too' if failed else 'holds anyway'}"


def _case_text(cases: dict[str, int]) -> str:
    return ", ".join(f"{name}={value}" for name, value in cases.items()) or "no pair types occur"


# ── Complements ──────────────────────────────────────


def verify_complement_duality(g: Graph) -> TheoremVerdict:
    """Edge-regular ``(n, k, lambda)`` iff the complement is pseudo ``(n, n-k-1, n-2k+lambda)``."""
    theorem = TheoremId.COMPLEMENT_DUALITY
    report = _profile(g)
    if report.regular_k is None:
        return _verdict(theorem, [g], applicable=False, detail="input is not regular")
    n, k = g.n, report.regular_k
    flipped = classify(complement(g))
    observed = (report, flipped)
    if report.edge_regular.status is Status.VACUOUS or report.pseudo.status is Status.VACUOUS:
        return _verdict(
            theorem,
            [g],
            observed=observed,
            excluded=True,
            detail="input is complete or edgeless; both conditions are vacuous on one side",
        )
    forward = report.edge_regular.status is Status.YES
    predicted: Params | None = None
    if forward:
        assert report.lam is not None
        predicted = (n, n - k - 1, n - 2 * k + report.lam)
        agree = _pseudo_observation(flipped, n, n - k - 1, n - 2 * k + report.lam)
        detail = f"forward: predicted pseudo {predicted}"
    else:
        agree = flipped.pseudo.status is Status.NO
        detail = "input not edge-regular; complement must not be pseudo"
    if flipped.pseudo.status is Status.YES:
        assert flipped.mu is not None
        recovered = flipped.mu - n + 2 * k
        backward = report.edge_regular.status is Status.YES and report.lam == recovered
        agree = agree and backward
        detail += f"; backward: complement mu={flipped.mu} gives lambda={recovered}"
    return _verdict(
        theorem, [g], hypothesis=forward, predicted=predicted, observed=observed, agree=agree,
        detail=detail,
    )


def verify_complement_srg(g: Graph) -> TheoremVerdict:
    """SRG ``(n, k, lambda, mu)`` has an SRG complement ``(n, n-k-1, n-2-2k+mu, n-2k+lambda)``."""
    theorem = TheoremId.COMPLEMENT_SRG_COROLLARY
    report = _profile(g)
    if report.srg is None or report.lam is None or report.mu is None:
        return _verdict(
            theorem, [g], applicable=False, detail="input is not a non-vacuous strongly regular graph"
        )
    n, k, lam, mu = g.n, report.regular_k, report.lam, report.mu
    assert k is not None
    predicted = (n, n - k - 1, n - 2 - 2 * k + mu, n - 2 * k + lam)
    flipped = classify(complement(g))
    agree = flipped.srg == predicted
    return _verdict(
        theorem, [g], hypothesis=True, predicted=predicted, observed=(report, flipped), agree=agree,
        detail=f"complement srg {flipped.srg}",
    )


def verify_triangle_free_observation(g: Graph) -> TheoremVerdict:
    """Every triangle-free regular graph is edge-regular with ``lambda = 0``."""
    theorem = TheoremId.TRIANGLE_FREE_OBSERVATION
    report = _profile(g)
    if report.regular_k is None or not is_triangle_free(g):
        return _verdict(
            theorem, [g], applicable=False, detail="input is not a triangle-free regular graph"
        )
    predicted = (g.n, report.regular_k, 0)
    observed = classify(g)
    return _verdict(
        theorem, [g], hypothesis=True, predicted=predicted, observed=(observed,),
        agree=observed.edge_regular.matches(0), detail=f"edge-regular {observed.edge_regular}",
    )


# ── Products ─────────────────────────────────────────


def _both_edge_regular(g1: Graph, g2: Graph) -> bool:
    return _profile(g1).edge_regular.holds and _profile(g2).edge_regular.holds


def _both_pseudo(g1: Graph, g2: Graph) -> bool:
    return _profile(g1).pseudo.holds and _profile(g2).pseudo.holds


def verify_cartesian_edge(g1: Graph, g2: Graph) -> TheoremVerdict:
    """Cartesian product is edge-regular ``(n1n2, k1+k2, lambda)`` iff ``lambda1 = lambda2``."""
    theorem = TheoremId.CARTESIAN_EDGE
    if not _both_edge_regular(g1, g2):
        return _verdict(theorem, [g1, g2], applicable=False, detail="inputs not both edge-regular")
    p1, p2 = _profile(g1), _profile(g2)
    assert p1.regular_k is not None and p2.regular_k is not None
    cases: dict[str, int] = {}
    if _has_edge(g2) and g1.n:
        cases["lambda2"] = p2.lam  # type: ignore[assignment]
    if _has_edge(g1) and g2.n:
        cases["lambda1"] = p1.lam  # type: ignore[assignment]
    hypothesis, lam = _shared(list(cases.values()))
    n, k = g1.n * g2.n, p1.regular_k + p2.regular_k
    predicted = (n, k, lam)
    observed = classify(cartesian(g1, g2))
    agree, detail = _iff(
        hypothesis,
        _edge_observation(observed, n, k, lam),
        observed.edge_regular.status is Status.NO,
        predicted,
    )
    return _verdict(
        theorem, [g1, g2], hypothesis=hypothesis, predicted=predicted if hypothesis else None,
        observed=(observed,), agree=agree, detail=f"{_case_text(cases)}; {detail}",
    )


def verify_cartesian_pseudo(g1: Graph, g2: Graph) -> TheoremVerdict:
    """Cartesian product is pseudo iff one factor is complete and the other edgeless."""
    theorem = TheoremId.CARTESIAN_PSEUDO
    if not _both_edge_regular(g1, g2):
        return _verdict(theorem, [g1, g2], applicable=False, detail="inputs not both edge-regular")
    hypothesis = (is_complete(g1) and is_edgeless(g2)) or (is_edgeless(g1) and is_complete(g2))
    product = cartesian(g1, g2)
    observed = classify(product)
    p1, p2 = _profile(g1), _profile(g2)
    assert p1.regular_k is not None and p2.regular_k is not None
    n, k = product.n, p1.regular_k + p2.regular_k
    if hypothesis:
        # copies of one complete graph: mu = 0, or vacuous when only one copy
        mu = 0 if _has_non_edge(product) else None
        predicted = (n, k, mu)
        agree = _pseudo_observation(observed, n, k, mu)
        return _verdict(
            theorem, [g1, g2], hypothesis=True, predicted=predicted, observed=(observed,),
            agree=agree, detail=f"predicted disjoint complete graphs, pseudo {observed.pseudo}",
        )
    if _degenerate(g1) or _degenerate(g2):
        return _verdict(
            theorem, [g1, g2], observed=(observed,), excluded=True,
            detail=f"complete or edgeless factor; product pseudo {observed.pseudo}",
        )
    agree = observed.pseudo.status is Status.NO
    return _verdict(
        theorem, [g1, g2], observed=(observed,), agree=agree,
        detail=f"hypothesis fails; product pseudo {observed.pseudo}",
    )


def verify_direct_edge(g1: Graph, g2: Graph) -> TheoremVerdict:
    """Direct product of edge-regular graphs is edge-regular ``(n1n2, k1k2, lambda1 lambda2)``."""
    theorem = TheoremId.DIRECT_EDGE
    if not _both_edge_regular(g1, g2):
        return _verdict(theorem, [g1, g2], applicable=False, detail="inputs not both edge-regular")
    p1, p2 = _profile(g1), _profile(g2)
    assert p1.regular_k is not None and p2.regular_k is not None
    n, k = g1.n * g2.n, p1.regular_k * p2.regular_k
    lam = p1.lam * p2.lam if _has_edge(g1) and _has_edge(g2) else None  # type: ignore[operator]
    predicted = (n, k, lam)
    observed = classify(direct(g1, g2))
    agree = _edge_observation(observed, n, k, lam)
    return _verdict(
        theorem, [g1, g2], hypothesis=True, predicted=predicted, observed=(observed,),
        agree=agree, detail=f"observed edge-regular {observed.edge_regular}",
    )


def verify_composition_edge(g1: Graph, g2: Graph) -> TheoremVerdict:
    """Composition ``G1[G2]`` is edge-regular iff ``lambda1 n2 + 2k2 = k1 n2 + lambda2``."""
    theorem = TheoremId.COMPOSITION_EDGE
    if not _both_edge_regular(g1, g2):
        return _verdict(theorem, [g1, g2], applicable=False, detail="inputs not both edge-regular")
    p1, p2 = _profile(g1), _profile(g2)
    k1, k2 = p1.regular_k, p2.regular_k
    assert k1 is not None and k2 is not None
    n2 = g2.n
    cases: dict[str, int] = {}
    if _has_edge(g1) and n2:
        cases["lambda1*n2+2*k2"] = p1.lam * n2 + 2 * k2  # type: ignore[operator]
    if _has_edge(g2) and g1.n:
        cases["k1*n2+lambda2"] = k1 * n2 + p2.lam  # type: ignore[operator]
    hypothesis, lam = _shared(list(cases.values()))
    n, k = g1.n * n2, k1 * n2 + k2
    predicted = (n, k, lam)
    observed = classify(composition(g1, g2))
    agree, detail = _iff(
        hypothesis,
        _edge_observation(observed, n, k, lam),
        observed.edge_regular.status is Status.NO,
        predicted,
    )
    return _verdict(
        theorem, [g1, g2], hypothesis=hypothesis, predicted=predicted if hypothesis else None,
        observed=(observed,), agree=agree, detail=f"{_case_text(cases)}; {detail}",
    )


def verify_composition_pseudo(g1: Graph, g2: Graph) -> TheoremVerdict:
    """Composition of pseudo graphs is pseudo iff ``mu1 = k1`` and ``mu2 = 0``.

    With both conditions non-vacuous this is the equation ``mu1 n2 = k1 n2 + mu2``;
    a complete factor drops its pair type.
    """
    theorem = TheoremId.COMPOSITION_PSEUDO
    if not _both_pseudo(g1, g2):
        return _verdict(theorem, [g1, g2], applicable=False, detail="inputs not both pseudo")
    p1, p2 = _profile(g1), _profile(g2)
    k1, k2 = p1.regular_k, p2.regular_k
    assert k1 is not None and k2 is not None
    n2 = g2.n
    cases: dict[str, int] = {}
    if _has_non_edge(g1) and n2:
        cases["mu1*n2"] = p1.mu * n2  # type: ignore[operator]
    if _has_non_edge(g2) and g1.n:
        cases["k1*n2+mu2"] = k1 * n2 + p2.mu  # type: ignore[operator]
    hypothesis, mu = _shared(list(cases.values()))
    n, k = g1.n * n2, k1 * n2 + k2
    predicted = (n, k, mu)
    observed = classify(composition(g1, g2))
    agree, detail = _iff(
        hypothesis,
        _pseudo_observation(observed, n, k, mu),
        observed.pseudo.status is Status.NO,
        predicted,
    )
    return _verdict(
        theorem, [g1, g2], hypothesis=hypothesis, predicted=predicted if hypothesis else None,
        observed=(observed,), agree=agree, detail=f"{_case_text(cases)}; {detail}",
    )


def verify_strong_edge(g1: Graph, g2: Graph) -> TheoremVerdict:
    """Strong product is edge-regular iff its three adjacent-pair counts coincide."""
    theorem = TheoremId.STRONG_EDGE
    if not _both_edge_regular(g1, g2):
        return _verdict(theorem, [g1, g2], applicable=False, detail="inputs not both edge-regular")
    p1, p2 = _profile(g1), _profile(g2)
    k1, k2 = p1.regular_k, p2.regular_k
    assert k1 is not None and k2 is not None
    lam1, lam2 = p1.lam, p2.lam
    cases: dict[str, int] = {}
    if _has_edge(g2) and g1.n:
        cases["lambda2+k1*lambda2+2*k1"] = lam2 + k1 * lam2 + 2 * k1  # type: ignore[operator]
    if _has_edge(g1) and g2.n:
        cases["lambda1+k2*lambda1+2*k2"] = lam1 + k2 * lam1 + 2 * k2  # type: ignore[operator]
    if _has_edge(g1) and _has_edge(g2):
        cases["lambda1*lambda2+2*lambda1+2*lambda2+2"] = (
            lam1 * lam2 + 2 * lam1 + 2 * lam2 + 2  # type: ignore[operator]
        )
    hypothesis, lam = _shared(list(cases.values()))
    n, k = g1.n * g2.n, k1 + k2 + k1 * k2
    predicted = (n, k, lam)
    observed = classify(strong(g1, g2))
    agree, detail = _iff(
        hypothesis,
        _edge_observation(observed, n, k, lam),
        observed.edge_regular.status is Status.NO,
        predicted,
    )
    return _verdict(
        theorem, [g1, g2], hypothesis=hypothesis, predicted=predicted if hypothesis else None,
        observed=(observed,), agree=agree, detail=f"{_case_text(cases)}; {detail}",
    )


# ── Joins ────────────────────────────────────────────


def verify_join_edge(g1: Graph, g2: Graph) -> TheoremVerdict:
    """Join is edge-regular iff ``k1+n2 = k2+n1`` and ``lambda1+n2 = lambda2+n1 = k1+k2``."""
    theorem = TheoremId.JOIN_EDGE
    if not _both_edge_regular(g1, g2):
        return _verdict(theorem, [g1, g2], applicable=False, detail="inputs not both edge-regular")
    p1, p2 = _profile(g1), _profile(g2)
    k1, k2 = p1.regular_k, p2.regular_k
    assert k1 is not None and k2 is not None
    n1, n2 = g1.n, g2.n
    regular = k1 + n2 == k2 + n1
    cases: dict[str, int] = {}
    if _has_edge(g1):
        cases["lambda1+n2"] = p1.lam + n2  # type: ignore[operator]
    if _has_edge(g2):
        cases["lambda2+n1"] = p2.lam + n1  # type: ignore[operator]
    if n1 and n2:
        cases["k1+k2"] = k1 + k2
    shared, lam = _shared(list(cases.values()))
    hypothesis = regular and shared
    n, k = n1 + n2, k1 + n2
    predicted = (n, k, lam)
    observed = classify(join(g1, g2))
    agree, detail = _iff(
        hypothesis,
        _edge_observation(observed, n, k, lam),
        observed.edge_regular.status is Status.NO,
        predicted,
    )
    return _verdict(
        theorem, [g1, g2], hypothesis=hypothesis, predicted=predicted if hypothesis else None,
        observed=(observed,), agree=agree,
        detail=f"k1+n2={k1 + n2}, k2+n1={k2 + n1}; {_case_text(cases)}; {detail}",
    )


def verify_join_pseudo(g1: Graph, g2: Graph) -> TheoremVerdict:
    """Join is pseudo iff ``k1+n2 = k2+n1`` and ``mu1+n2 = mu2+n1``."""
    theorem = TheoremId.JOIN_PSEUDO
    if not _both_pseudo(g1, g2):
        return _verdict(theorem, [g1, g2], applicable=False, detail="inputs not both pseudo")
    p1, p2 = _profile(g1), _profile(g2)
    k1, k2 = p1.regular_k, p2.regular_k
    assert k1 is not None and k2 is not None
    n1, n2 = g1.n, g2.n
    regular = k1 + n2 == k2 + n1
    cases: dict[str, int] = {}
    if _has_non_edge(g1):
        cases["mu1+n2"] = p1.mu + n2  # type: ignore[operator]
    if _has_non_edge(g2):
        cases["mu2+n1"] = p2.mu + n1  # type: ignore[operator]
    shared, mu = _shared(list(cases.values()))
    hypothesis = regular and shared
    n, k = n1 + n2, k1 + n2
    predicted = (n, k, mu)
    observed = classify(join(g1, g2))
    agree, detail = _iff(
        hypothesis,
        _pseudo_observation(observed, n, k, mu),
        observed.pseudo.status is Status.NO,
        predicted,
    )
    return _verdict(
        theorem, [g1, g2], hypothesis=hypothesis, predicted=predicted if hypothesis else None,
        observed=(observed,), agree=agree,
        detail=f"k1+n2={k1 + n2}, k2+n1={k2 + n1}; {_case_text(cases)}; {detail}",
    )


# ── Line graphs ──────────────────────────────────────


def verify_line_edge(g: Graph) -> TheoremVerdict:
    """``L(G)`` of an edge-regular G is edge-regular iff G is triangle-free or complete.

    "Complete" is read per component: every component a complete graph.
    """
    theorem = TheoremId.LINE_EDGE
    report = _profile(g)
    if not report.edge_regular.holds:
        return _verdict(theorem, [g], applicable=False, detail="input is not edge-regular")
    line = line_graph(g).graph
    observed = classify(line)
    if not _has_edge(g):
        return _verdict(
            theorem, [g], observed=(observed,), excluded=True, detail="edgeless input, empty L(G)"
        )
    k = report.regular_k
    assert k is not None
    cliques = is_disjoint_union_of_complete_graphs(g)
    hypothesis = cliques or is_triangle_free(g)
    degree = 2 * k - 2
    lam = None if degree == 0 else (k - 1 if cliques else k - 2)
    predicted = (line.n, degree, lam)
    agree, detail = _iff(
        hypothesis,
        _edge_observation(observed, line.n, degree, lam),
        observed.edge_regular.status is Status.NO,
        predicted,
    )
    return _verdict(
        theorem, [g], hypothesis=hypothesis, predicted=predicted if hypothesis else None,
        observed=(observed,), agree=agree, detail=detail,
    )


def verify_line_mu_bound(g: Graph) -> TheoremVerdict:
    """Non-adjacent vertices of ``L(G)`` share at most four neighbours, so a pseudo ``L(G)`` has ``mu <= 4``."""
    theorem = TheoremId.LINE_MU_AT_MOST_4
    line = line_graph(g)
    observed = classify(line.graph)
    worst = 0
    mismatched = 0
    for pair in disjoint_edge_pairs(g):
        cross = edge_pair_cross_edges(g, pair)
        worst = max(worst, cross)
        if cross != common_neighbors(line.graph, line.vertex_of(pair.e1), line.vertex_of(pair.e2)):
            mismatched += 1
    bounded = worst <= 4 and (observed.mu is None or observed.mu <= 4)
    agree = bounded and mismatched == 0
    return _verdict(
        theorem, [g], hypothesis=True, observed=(observed,), agree=agree,
        detail=f"max cross count {worst}, L(G) pseudo {observed.pseudo}, "
        f"{mismatched} cross counts differ from L(G) common neighbours",
    )


def verify_line_pseudo_characterization(g: Graph) -> TheoremVerdict:
    """For pseudo G, the value of ``mu`` for ``L(G)`` in terms of G's structure.

    ``mu = 4`` iff G is complete with n >= 4; ``mu = 2`` iff G is diamond-free,
    K4-free and every two disjoint edges lie on a 4-cycle; ``mu = 1`` iff G is
    diamond-, K4- and C4-free and every two disjoint edges lie on a path P4;
    ``mu = 0`` iff G is a disjoint union of triangles and edges.
    """
    theorem = TheoremId.LINE_PSEUDO_CHARACTERIZATION
    line = line_graph(g).graph
    observed = classify(line)
    report = _profile(g)
    if not report.pseudo.holds:
        return _verdict(
            theorem, [g], applicable=False, observed=(observed,),
            detail=f"input is not pseudo; L(G) pseudo {observed.pseudo}",
        )
    if observed.pseudo.status is not Status.YES:
        return _verdict(
            theorem, [g], observed=(observed,), excluded=True,
            detail=f"L(G) pseudo {observed.pseudo}",
        )
    patterns = [pair_connectivity_pattern(g, pair) for pair in disjoint_edge_pairs(g)]
    base = is_diamond_free(g) and is_k4_free(g)
    structure = {
        4: is_complete(g) and g.n >= 4,
        2: base and all(p.in_c4 for p in patterns),
        1: base and is_c4_free(g) and all(p.in_p4 for p in patterns),
        0: is_disjoint_union_of_triangles_and_edges(g),
    }
    mu = observed.mu
    failures = [value for value, holds in structure.items() if holds != (mu == value)]
    hypothesis = mu in structure and structure[mu]
    return _verdict(
        theorem, [g], hypothesis=hypothesis, predicted=(line.n, observed.regular_k, mu),
        observed=(observed,), agree=not failures,
        detail=f"L(G) mu={mu}; structure {structure}"
        + (f"; biconditional fails for mu={failures}" if failures else ""),
    )


def verify_line_star_note(n: int) -> TheoremVerdict:
    """``K_{1,n}`` is not regular while ``L(K_{1,n})`` is the complete graph ``K_n``."""
    theorem = TheoremId.LINE_STAR_NOTE
    if n < 2:
        raise ValueError(f"line star note needs n >= 2, got {n}")
    g = star(n)
    line = line_graph(g).graph
    observed = classify(line)
    predicted = (n, n - 1, n - 2, None)
    irregular = is_regular(g) is None
    agree = irregular and are_isomorphic(line, complete(n)) and observed.srg == predicted
    return _verdict(
        theorem, [g], hypothesis=irregular, predicted=predicted, observed=(_profile(g), observed),
        agree=agree, detail=f"star regular={not irregular}, L srg {observed.srg}",
    )


# ── Subdivisions ─────────────────────────────────────


def verify_subdivision_edge(g: Graph) -> TheoremVerdict:
    """``S(G)`` is edge-regular iff G is a disjoint union of cycles, then ``(n+m, 2, 0)``."""
    theorem = TheoremId.SUBDIVISION_EDGE
    divided = subdivision(g)
    observed = classify(divided)
    if not _has_edge(g):
        return _verdict(
            theorem, [g], observed=(observed,), excluded=True,
            detail="edgeless input is its own subdivision",
        )
    hypothesis = is_disjoint_union_of_cycles(g)
    predicted = (g.n + g.edge_count, 2, 0)
    agree, detail = _iff(
        hypothesis,
        _edge_observation(observed, *predicted),
        observed.edge_regular.status is Status.NO,
        predicted,
    )
    return _verdict(
        theorem, [g], hypothesis=hypothesis, predicted=predicted if hypothesis else None,
        observed=(observed,), agree=agree, detail=detail,
    )


# ── Examples ─────────────────────────────────────────


def verify_merged_double_example(n: int) -> TheoremVerdict:
    """Merged double ``R(C_n)`` is edge-regular ``(3n, 4, 1)``; its complement pseudo ``(3n, 3n-5, 3n-7)``.

    Holds for triangle-free cycles, n >= 4; n = 3 is reported outside the hypothesis.
    """
    theorem = TheoremId.MERGED_DOUBLE_EXAMPLE
    g = merged_double_semi_total(n)
    report = classify(g)
    flipped = classify(complement(g))
    hypothesis = n >= 4
    predicted = (3 * n, 4, 1, 3 * n - 5, 3 * n - 7)
    if not hypothesis:
        return _verdict(
            theorem, [g], hypothesis=False, observed=(report, flipped),
            detail=f"C_{n} has triangles; edge-regular {report.edge_regular}",
        )
    agree = _edge_observation(report, 3 * n, 4, 1) and _pseudo_observation(
        flipped, 3 * n, 3 * n - 5, 3 * n - 7
    )
    return _verdict(
        theorem, [g], hypothesis=True, predicted=predicted, observed=(report, flipped),
        agree=agree, detail=f"edge-regular {report.edge_regular}, complement pseudo {flipped.pseudo}",
    )


# ── Census sweeps ────────────────────────────────────


@lru_cache(maxsize=16)
def _connected_census(max_n: int) -> tuple[Graph, ...]:
    # serial: sweeps may already run inside a pool worker
    return tuple(census_graphs(max_n, connected_only=True, workers=1))


def _sweep_verdict(
    theorem: TheoremId, max_n: int, checked: int, excluded: int, counterexamples: list[str]
) -> TheoremVerdict:
    if counterexamples:
        detail = f"counterexamples up to n = {max_n}: {', '.join(counterexamples)}"
    else:
        detail = f"no counterexample up to n = {max_n} ({checked} checked, {excluded} excluded)"
    return _verdict(
        theorem, [], hypothesis=True, agree=not counterexamples, detail=detail
    )


def _product_nonexistence(
    theorem: TheoremId, product: Callable[[Graph, Graph], Graph], max_n: int
) -> TheoremVerdict:
    graphs = [g for g in _connected_census(max_n) if _profile(g).pseudo.holds]
    limit = config.census.pair_product_limit
    checked = excluded = 0
    counterexamples = []
    for g1 in graphs:
        for g2 in graphs:
            if g1.n * g2.n > limit:
                continue
            if _degenerate(g1) or _degenerate(g2):
                excluded += 1
                logger.info(
                    "%s: complete or edgeless factor %s, %s excluded",
                    theorem, encode_graph6(g1), encode_graph6(g2),
                )
                continue
            checked += 1
            if classify(product(g1, g2)).pseudo.holds:
                counterexamples.append(f"{encode_graph6(g1)}x{encode_graph6(g2)}")
    return _sweep_verdict(theorem, max_n, checked, excluded, counterexamples)


def verify_direct_pseudo_nonexistence(max_n: int) -> TheoremVerdict:
    """No direct product of non-degenerate pseudo census graphs is pseudo."""
    return _product_nonexistence(TheoremId.DIRECT_PSEUDO_NONEXISTENCE, direct, max_n)


def verify_strong_pseudo_nonexistence(max_n: int) -> TheoremVerdict:
    """No strong product of non-degenerate pseudo census graphs is pseudo."""
    return _product_nonexistence(TheoremId.STRONG_PSEUDO_NONEXISTENCE, strong, max_n)


def verify_line_no_mu3(max_n: int) -> TheoremVerdict:
    """No regular census graph has a line graph that is pseudo with ``mu = 3``."""
    theorem = TheoremId.LINE_NO_MU3
    graphs = _connected_census(max_n)
    hits = [
        encode_graph6(g)
        for g in graphs
        if classify(line_graph(g).graph).pseudo == Constancy(Status.YES, 3)
    ]
    return _sweep_verdict(theorem, max_n, len(graphs), 0, hits)


def _cycle_unions(max_n: int) -> list[Graph]:
    """Disjoint unions of at least two cycles with at most *max_n* vertices in total."""
    unions: list[Graph] = []

    def grow(parts: list[int], total: int) -> None:
        if len(parts) >= 2:
            g = cycle(parts[0])
            for size in parts[1:]:
                g = disjoint_union(g, cycle(size))
            unions.append(g)
        for size in range(parts[-1] if parts else 3, max_n - total + 1):
            grow([*parts, size], total + size)

    grow([], 0)
    return unions


def verify_subdivision_pseudo_nonexistence(max_n: int) -> TheoremVerdict:
    """``S(G)`` is never pseudo (non-vacuously) over the census, small graphs and cycle unions."""
    theorem = TheoremId.SUBDIVISION_PSEUDO_NONEXISTENCE
    graphs = list(_connected_census(max_n))
    for n in range(1, min(max_n, ALL_GRAPHS_MAX_N) + 1):
        graphs.extend(enumerate_graphs(n))
    graphs.extend(_cycle_unions(max_n))
    checked = excluded = 0
    counterexamples = []
    for g in graphs:
        if not _has_edge(g):
            excluded += 1
            logger.info("%s: edgeless input %s excluded", theorem, encode_graph6(g))
            continue
        checked += 1
        divided = subdivision(g)
        report = classify(divided)
        if report.pseudo.status is Status.YES:
            counterexamples.append(encode_graph6(g))
        # regular S(G) forces a 2-regular G and a union of even cycles
        if report.regular_k is not None and not (
            is_disjoint_union_of_cycles(g) and is_disjoint_union_of_cycles(divided)
        ):
            counterexamples.append(f"{encode_graph6(g)} (regular subdivision of a non-cycle union)")
    return _sweep_verdict(theorem, max_n, checked, excluded, counterexamples)


# ── Corpus and dispatch ──────────────────────────────


def example_corpus() -> dict[str, Graph]:
    """Named example graphs: every one appears in a worked example."""
    corpus = {"octahedron": octahedron()}
    for n in range(3, 7):
        corpus[f"merged-double-rc{n}"] = merged_double_semi_total(n)
    corpus.update(
        {
            "petersen": petersen(),
            "c5": cycle(5),
            "k4": complete(4),
            "k5": complete(5),
            "k3,3": complete_bipartite(3, 3),
            "c3+c4": disjoint_union(cycle(3), cycle(4)),
            "2k3": disjoint_union(complete(3), complete(3)),
        }
    )
    return corpus


SINGLE_VERIFIERS: dict[TheoremId, Callable[[Graph], TheoremVerdict]] = {
    TheoremId.COMPLEMENT_DUALITY: verify_complement_duality,
    TheoremId.COMPLEMENT_SRG_COROLLARY: verify_complement_srg,
    TheoremId.TRIANGLE_FREE_OBSERVATION: verify_triangle_free_observation,
    TheoremId.LINE_EDGE: verify_line_edge,
    TheoremId.LINE_MU_AT_MOST_4: verify_line_mu_bound,
    TheoremId.LINE_PSEUDO_CHARACTERIZATION: verify_line_pseudo_characterization,
    TheoremId.SUBDIVISION_EDGE: verify_subdivision_edge,
}

PAIR_VERIFIERS: dict[TheoremId, Callable[[Graph, Graph], TheoremVerdict]] = {
    TheoremId.CARTESIAN_EDGE: verify_cartesian_edge,
    TheoremId.CARTESIAN_PSEUDO: verify_cartesian_pseudo,
    TheoremId.DIRECT_EDGE: verify_direct_edge,
    TheoremId.COMPOSITION_EDGE: verify_composition_edge,
    TheoremId.COMPOSITION_PSEUDO: verify_composition_pseudo,
    TheoremId.STRONG_EDGE: verify_strong_edge,
}

JOIN_VERIFIERS: dict[TheoremId, Callable[[Graph, Graph], TheoremVerdict]] = {
    TheoremId.JOIN_EDGE: verify_join_edge,
    TheoremId.JOIN_PSEUDO: verify_join_pseudo,
}

SWEEP_VERIFIERS: dict[TheoremId, Callable[[int], TheoremVerdict]] = {
    TheoremId.DIRECT_PSEUDO_NONEXISTENCE: verify_direct_pseudo_nonexistence,
    TheoremId.STRONG_PSEUDO_NONEXISTENCE: verify_strong_pseudo_nonexistence,
    TheoremId.LINE_NO_MU3: verify_line_no_mu3,
    TheoremId.SUBDIVISION_PSEUDO_NONEXISTENCE: verify_subdivision_pseudo_nonexistence,
}

PARAMETER_VERIFIERS: dict[TheoremId, Callable[[int], TheoremVerdict]] = {
    TheoremId.LINE_STAR_NOTE: verify_line_star_note,
    TheoremId.MERGED_DOUBLE_EXAMPLE: verify_merged_double_example,
}

MERGED_DOUBLE_RANGE = range(3, 11)
LINE_STAR_RANGE = range(2, 8)


def input_arity(theorem: TheoremId) -> str:
    """``"graph"``, ``"pair"``, ``"sweep"`` or ``"parameter"``."""
    if theorem in SINGLE_VERIFIERS:
        return "graph"
    if theorem in PAIR_VERIFIERS or theorem in JOIN_VERIFIERS:
        return "pair"
    if theorem in SWEEP_VERIFIERS:
        return "sweep"
    return "parameter"


def run_theorem(
    theorem: TheoremId,
    graphs: Sequence[Graph] = (),
    *,
    max_n: int | None = None,
    parameter: int | None = None,
) -> TheoremVerdict:
    """Dispatch one verifier by id with the inputs its arity needs."""
    arity = input_arity(theorem)
    if arity == "graph":
        if len(graphs) != 1:
            raise ValueError(f"{theorem} takes one graph, got {len(graphs)}")
        return SINGLE_VERIFIERS[theorem](graphs[0])
    if arity == "pair":
        if len(graphs) != 2:
            raise ValueError(f"{theorem} takes two graphs, got {len(graphs)}")
        verifier = PAIR_VERIFIERS.get(theorem) or JOIN_VERIFIERS[theorem]
        return verifier(graphs[0], graphs[1])
    if arity == "sweep":
        if max_n is None:
            raise ValueError(f"{theorem} is a census sweep and needs max_n")
        return SWEEP_VERIFIERS[theorem](max_n)
    if parameter is None:
        raise ValueError(f"{theorem} needs an integer parameter n")
    return PARAMETER_VERIFIERS[theorem](parameter)


WorkItem = tuple[str, tuple[Graph, ...], int | None]


def _run_item(item: WorkItem) -> TheoremVerdict:
    theorem, graphs, number = item
    tag = TheoremId(theorem)
    arity = input_arity(tag)
    if arity == "sweep":
        return run_theorem(tag, max_n=number)
    if arity == "parameter":
        return run_theorem(tag, parameter=number)
    return run_theorem(tag, graphs)


def plan_items(corpus: Sequence[Graph], max_n: int | None = None) -> list[WorkItem]:
    """Every applicable (verifier, inputs) combination, in a fixed order."""
    items: list[WorkItem] = []
    for g in corpus:
        items.extend((str(theorem), (g,), None) for theorem in SINGLE_VERIFIERS)
    product_limit = config.census.pair_product_limit
    join_limit = config.census.join_sum_limit
    for g1 in corpus:
        for g2 in corpus:
            if g1.n * g2.n <= product_limit:
                items.extend((str(theorem), (g1, g2), None) for theorem in PAIR_VERIFIERS)
            if g1.n + g2.n <= join_limit:
                items.extend((str(theorem), (g1, g2), None) for theorem in JOIN_VERIFIERS)
    if max_n is not None:
        items.extend((str(theorem), (), max_n) for theorem in SWEEP_VERIFIERS)
        items.extend(
            (str(TheoremId.MERGED_DOUBLE_EXAMPLE), (), n) for n in MERGED_DOUBLE_RANGE
        )
        items.extend((str(TheoremId.LINE_STAR_NOTE), (), n) for n in LINE_STAR_RANGE)
    return items


def verify_all(
    corpus: Sequence[Graph], max_n: int | None = None, workers: int | None = None
) -> list[TheoremVerdict]:
    """Run every applicable verifier over *corpus* (plus the census sweeps when *max_n* is set)."""
    items = plan_items(corpus, max_n)
    verdicts = map_in_pool(_run_item, items, workers)
    summary = summarize(verdicts)
    logger.info(
        "Verified %d cases: %d agree, %d disagree, %d excluded",
        summary.total, summary.agree, summary.disagreements, summary.excluded,
    )
    return verdicts
