"""Tests for the theorem verifiers: worked examples, exclusions, sweeps and dispatch."""

import pytest

from graphs.core import edgeless
from graphs.families import (
    complete,
    complete_bipartite,
    cycle,
    octahedron,
    path,
    petersen,
    prism,
)
from graphs.ops import disjoint_union
from services.census import census_graphs
from services.theorems import (
    LINE_STAR_RANGE,
    MERGED_DOUBLE_RANGE,
    TheoremId,
    example_corpus,
    input_arity,
    plan_items,
    run_theorem,
    summarize,
    verify_all,
    verify_cartesian_edge,
    verify_cartesian_pseudo,
    verify_complement_duality,
    verify_complement_srg,
    verify_composition_edge,
    verify_composition_pseudo,
    verify_direct_edge,
    verify_direct_pseudo_nonexistence,
    verify_join_edge,
    verify_join_pseudo,
    verify_line_edge,
    verify_line_mu_bound,
    verify_line_no_mu3,
    verify_line_pseudo_characterization,
    verify_line_star_note,
    verify_merged_double_example,
    verify_strong_edge,
    verify_strong_pseudo_nonexistence,
    verify_subdivision_edge,
    verify_subdivision_pseudo_nonexistence,
    verify_triangle_free_observation,
)


def assert_agrees(verdict, *, hypothesis=True):
    assert verdict.applicable
    assert not verdict.excluded
    assert verdict.hypothesis_holds is hypothesis
    assert verdict.agree, verdict.detail


# ── Complements ──────────────────────────────────────────────────────────


class TestComplements:
    def test_c5_duality(self):
        verdict = verify_complement_duality(cycle(5))

        assert_agrees(verdict)
        assert verdict.predicted == (5, 2, 1)

    def test_octahedron_duality(self):
        verdict = verify_complement_duality(octahedron())

        assert_agrees(verdict)
        assert verdict.predicted == (6, 1, 0)

    def test_non_edge_regular_input_has_non_pseudo_complement(self):
        assert_agrees(verify_complement_duality(prism(3)), hypothesis=False)

    def test_complete_input_is_excluded(self):
        verdict = verify_complement_duality(complete(4))

        assert verdict.excluded
        assert verdict.agree

    def test_irregular_input_is_not_applicable(self):
        verdict = verify_complement_duality(path(3))

        assert not verdict.applicable
        assert verdict.agree

    def test_petersen_complement_parameters(self):
        verdict = verify_complement_srg(petersen())

        assert_agrees(verdict)
        assert verdict.predicted == (10, 6, 3, 4)

    def test_complement_srg_needs_both_parameters(self):
        assert not verify_complement_srg(complete(5)).applicable
        assert not verify_complement_srg(prism(3)).applicable

    def test_triangle_free_observation(self):
        assert_agrees(verify_triangle_free_observation(petersen()))
        assert_agrees(verify_triangle_free_observation(complete_bipartite(3, 3)))
        assert not verify_triangle_free_observation(complete(4)).applicable


# ── Products ─────────────────────────────────────────────────────────────


class TestProducts:
    def test_cartesian_edge_equal_lambdas(self):
        verdict = verify_cartesian_edge(complete(3), complete(3))

        assert_agrees(verdict)
        assert verdict.predicted == (9, 4, 1)

    def test_cartesian_edge_unequal_lambdas(self):
        verdict = verify_cartesian_edge(cycle(4), complete(3))

        assert_agrees(verdict, hypothesis=False)
        assert verdict.predicted is None
        assert verdict.observed[0].edge_regular.status == "no"

    def test_cartesian_edge_with_edgeless_factor(self):
        verdict = verify_cartesian_edge(cycle(5), edgeless(2))

        assert_agrees(verdict)
        assert verdict.predicted == (10, 2, 0)

    def test_cartesian_pseudo_complete_times_edgeless(self):
        verdict = verify_cartesian_pseudo(complete(3), edgeless(2))

        assert_agrees(verdict)
        assert verdict.predicted == (6, 2, 0)

    def test_cartesian_pseudo_single_copy_is_vacuous(self):
        verdict = verify_cartesian_pseudo(complete(3), edgeless(1))

        assert_agrees(verdict)
        assert verdict.predicted == (3, 2, None)

    def test_cartesian_pseudo_fails_for_proper_factors(self):
        assert_agrees(verify_cartesian_pseudo(cycle(5), cycle(4)), hypothesis=False)

    def test_k2_square_is_excluded(self):
        verdict = verify_cartesian_pseudo(complete(2), complete(2))

        assert verdict.excluded
        assert verdict.observed[0].pseudo.matches(2)

    def test_direct_edge(self):
        verdict = verify_direct_edge(complete(3), complete(3))

        assert_agrees(verdict)
        assert verdict.predicted == (9, 4, 1)

    def test_direct_edge_with_edgeless_factor(self):
        verdict = verify_direct_edge(cycle(5), edgeless(2))

        assert_agrees(verdict)
        assert verdict.predicted == (10, 0, None)

    def test_composition_edge_gives_octahedron(self):
        verdict = verify_composition_edge(complete(3), edgeless(2))

        assert_agrees(verdict)
        assert verdict.predicted == (6, 4, 2)

    def test_composition_edge_failing_equation(self):
        assert_agrees(verify_composition_edge(cycle(5), complete(2)), hypothesis=False)

    def test_composition_pseudo(self):
        verdict = verify_composition_pseudo(edgeless(2), complete(2))

        assert_agrees(verdict)
        assert verdict.predicted == (4, 1, 0)

    def test_composition_pseudo_failing_equation(self):
        assert_agrees(verify_composition_pseudo(cycle(5), cycle(5)), hypothesis=False)

    def test_composition_pseudo_with_complete_inner_factor(self):
        verdict = verify_composition_pseudo(cycle(5), complete(3))

        assert_agrees(verdict)
        assert verdict.predicted == (15, 8, 3)

    @pytest.mark.parametrize(("inner", "expected"), [(2, (4, 3, 2)), (3, (6, 5, 4))])
    def test_composition_of_complete_graphs(self, inner, expected):
        verdict = verify_composition_edge(complete(inner), complete(2))

        assert_agrees(verdict)
        assert verdict.predicted == expected

    def test_strong_edge_of_complete_graphs(self):
        verdict = verify_strong_edge(complete(2), complete(2))

        assert_agrees(verdict)
        assert verdict.predicted == (4, 3, 2)

    def test_strong_edge_failing_equation(self):
        assert_agrees(verify_strong_edge(cycle(4), complete(2)), hypothesis=False)

    def test_pair_verifiers_need_edge_regular_inputs(self):
        for verifier in (verify_cartesian_edge, verify_direct_edge, verify_strong_edge):
            verdict = verifier(prism(3), cycle(5))
            assert not verdict.applicable
            assert verdict.agree


# ── Joins ────────────────────────────────────────────────────────────────


class TestJoins:
    def test_join_edge_gives_octahedron(self):
        verdict = verify_join_edge(cycle(4), edgeless(2))

        assert_agrees(verdict)
        assert verdict.predicted == (6, 4, 2)

    def test_join_edge_irregular_join(self):
        assert_agrees(verify_join_edge(cycle(5), complete(2)), hypothesis=False)

    def test_join_pseudo_gives_c4(self):
        verdict = verify_join_pseudo(edgeless(2), edgeless(2))

        assert_agrees(verdict)
        assert verdict.predicted == (4, 2, 2)

    def test_join_pseudo_unequal_mu(self):
        assert_agrees(
            verify_join_pseudo(prism(3), complete_bipartite(3, 3)), hypothesis=False
        )

    def test_join_pseudo_of_equal_cycles(self):
        verdict = verify_join_pseudo(cycle(5), cycle(5))

        assert_agrees(verdict)
        assert verdict.predicted == (10, 7, 6)


# ── Line graphs and subdivisions ─────────────────────────────────────────


class TestLineGraphs:
    def test_line_graph_of_triangle_free_graph(self):
        verdict = verify_line_edge(petersen())

        assert_agrees(verdict)
        assert verdict.predicted == (15, 4, 1)

    def test_line_graph_of_complete_graph(self):
        verdict = verify_line_edge(complete(4))

        assert_agrees(verdict)
        assert verdict.predicted == (6, 4, 2)

    def test_line_graph_of_graph_with_some_triangles(self):
        assert_agrees(verify_line_edge(octahedron()), hypothesis=False)

    def test_line_edge_excludes_edgeless_input(self):
        assert verify_line_edge(edgeless(3)).excluded

    @pytest.mark.parametrize("g", [complete(5), petersen(), cycle(5), complete_bipartite(3, 3)])
    def test_mu_bound(self, g):
        assert_agrees(verify_line_mu_bound(g))

    @pytest.mark.parametrize(
        ("g", "mu"),
        [
            (complete(4), 4),
            (complete(5), 4),
            (complete_bipartite(3, 3), 2),
            (cycle(5), 1),
            (disjoint_union(complete(3), complete(3)), 0),
        ],
    )
    def test_pseudo_characterization(self, g, mu):
        verdict = verify_line_pseudo_characterization(g)

        assert_agrees(verdict)
        assert verdict.observed[0].mu == mu

    def test_characterization_needs_pseudo_input(self):
        assert not verify_line_pseudo_characterization(path(4)).applicable
        assert not verify_line_pseudo_characterization(
            disjoint_union(complete(3), complete(2))
        ).applicable

    @pytest.mark.parametrize("n", LINE_STAR_RANGE)
    def test_line_star_note(self, n):
        verdict = verify_line_star_note(n)

        assert_agrees(verdict)
        assert verdict.predicted == (n, n - 1, n - 2, None)

    def test_line_star_note_rejects_small_n(self):
        with pytest.raises(ValueError, match="n >= 2"):
            verify_line_star_note(1)


class TestSubdivisions:
    def test_subdivided_cycle(self):
        verdict = verify_subdivision_edge(cycle(5))

        assert_agrees(verdict)
        assert verdict.predicted == (10, 2, 0)

    def test_subdivided_cycle_union(self):
        verdict = verify_subdivision_edge(disjoint_union(cycle(3), cycle(4)))

        assert_agrees(verdict)
        assert verdict.predicted == (14, 2, 0)

    def test_subdivided_non_cycle(self):
        assert_agrees(verify_subdivision_edge(complete(4)), hypothesis=False)

    def test_edgeless_input_is_excluded(self):
        assert verify_subdivision_edge(edgeless(2)).excluded


# ── Worked examples ──────────────────────────────────────────────────────


class TestMergedDouble:
    @pytest.mark.parametrize("n", [n for n in MERGED_DOUBLE_RANGE if n >= 4])
    def test_parameters(self, n):
        verdict = verify_merged_double_example(n)

        assert_agrees(verdict)
        assert verdict.predicted == (3 * n, 4, 1, 3 * n - 5, 3 * n - 7)

    def test_triangle_is_outside_the_hypothesis(self):
        verdict = verify_merged_double_example(3)

        assert not verdict.hypothesis_holds
        assert verdict.agree
        assert verdict.observed[0].edge_regular.status == "no"


# ── Sweeps ───────────────────────────────────────────────────────────────


@pytest.mark.slow
@pytest.mark.parametrize(
    ("sweep", "max_n"),
    [
        (verify_direct_pseudo_nonexistence, 8),
        (verify_strong_pseudo_nonexistence, 8),
        (verify_line_no_mu3, 8),
        (verify_subdivision_pseudo_nonexistence, 7),
    ],
)
def test_sweeps_find_no_counterexample(sweep, max_n):
    verdict = sweep(max_n)

    assert verdict.agree, verdict.detail
    assert verdict.inputs == ()
    assert f"no counterexample up to n = {max_n}" in verdict.detail


def test_subdivision_sweep_covers_every_graph_on_six_vertices():
    verdict = verify_subdivision_pseudo_nonexistence(6)

    # 12 connected regular graphs, 208 graphs on 1..6 vertices and C3+C3;
    # K1 and the six edgeless graphs are excluded
    assert verdict.agree, verdict.detail
    assert "(214 checked, 7 excluded)" in verdict.detail


# ── Dispatch ─────────────────────────────────────────────────────────────


class TestDispatch:
    def test_arity(self):
        assert input_arity(TheoremId.COMPLEMENT_DUALITY) == "graph"
        assert input_arity(TheoremId.JOIN_EDGE) == "pair"
        assert input_arity(TheoremId.LINE_NO_MU3) == "sweep"
        assert input_arity(TheoremId.MERGED_DOUBLE_EXAMPLE) == "parameter"

    def test_run_theorem_dispatches(self):
        verdict = run_theorem(TheoremId.JOIN_EDGE, [cycle(4), edgeless(2)])

        assert verdict.theorem is TheoremId.JOIN_EDGE
        assert verdict.agree
        assert run_theorem(TheoremId.LINE_STAR_NOTE, parameter=3).agree

    @pytest.mark.parametrize(
        ("theorem", "kwargs", "message"),
        [
            (TheoremId.COMPLEMENT_DUALITY, {}, "takes one graph"),
            (TheoremId.CARTESIAN_EDGE, {"graphs": [cycle(5)]}, "takes two graphs"),
            (TheoremId.LINE_NO_MU3, {}, "needs max_n"),
            (TheoremId.MERGED_DOUBLE_EXAMPLE, {}, "needs an integer parameter"),
        ],
    )
    def test_run_theorem_rejects_wrong_inputs(self, theorem, kwargs, message):
        with pytest.raises(ValueError, match=message):
            run_theorem(theorem, **kwargs)

    def test_plan_respects_size_limits(self):
        big = cycle(7)
        items = plan_items([big])
        theorems = {theorem for theorem, _, _ in items}

        # 7 * 7 exceeds the product limit of 36 and 14 exceeds the join limit of 12
        assert str(TheoremId.CARTESIAN_EDGE) not in theorems
        assert str(TheoremId.JOIN_EDGE) not in theorems
        assert str(TheoremId.COMPLEMENT_DUALITY) in theorems

    def test_plan_adds_sweeps_with_max_n(self):
        items = plan_items([], max_n=5)

        assert len(items) == 4 + len(MERGED_DOUBLE_RANGE) + len(LINE_STAR_RANGE)
        assert (str(TheoremId.LINE_NO_MU3), (), 5) in items

    def test_empty_corpus(self):
        assert verify_all([]) == []
        assert summarize([]).total == 0

    def test_example_corpus_agrees_everywhere(self):
        verdicts = verify_all(list(example_corpus().values()))
        summary = summarize(verdicts)

        assert summary.disagreements == 0, [v.detail for v in verdicts if not v.agree]
        assert summary.total == len(verdicts)
        assert summary.agree == summary.total

    def test_verdict_dict_is_json_ready(self):
        data = verify_complement_duality(cycle(5)).to_dict()

        assert data["theorem"] == "complement-duality"
        assert data["predicted"] == [5, 2, 1]
        assert data["observed"][1]["mu"] == 1


@pytest.mark.slow
def test_connected_census_agrees_everywhere():
    verdicts = verify_all(census_graphs(8), 8)

    assert [v.detail for v in verdicts if not v.agree] == []
    assert summarize(verdicts).total == len(verdicts)
