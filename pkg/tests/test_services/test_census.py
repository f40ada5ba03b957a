"""Tests for the census service: enumeration counts, census runs, records and queries."""

from collections import Counter

import networkx as nx
import pytest

from graphs.core import GraphError, is_regular
from graphs.families import cycle, octahedron, path
from graphs.isomorphism import are_isomorphic, canonical_form
from services.census import (
    CensusError,
    CensusRecord,
    census_graphs,
    enumerate_graphs,
    enumerate_regular,
    parse_filter,
    query,
    run_census,
)
from tests.strategies import from_networkx

# ── Enumeration ──────────────────────────────────────────────────────────


class TestEnumerateRegular:
    def test_only_c5_is_2_regular_on_5_vertices(self):
        (g,) = enumerate_regular(5, 2)
        assert are_isomorphic(g, cycle(5))

    def test_cubic_counts(self):
        assert len(enumerate_regular(4, 3)) == 1
        assert len(enumerate_regular(6, 3)) == 2
        assert len(enumerate_regular(8, 3)) == 6
        assert len(enumerate_regular(8, 3, connected_only=True)) == 5

    def test_high_degree_cells_come_from_complements(self):
        assert len(enumerate_regular(6, 4)) == 1
        assert len(enumerate_regular(7, 4)) == 2

    def test_connected_2_regular_is_the_cycle(self):
        assert len(enumerate_regular(6, 2)) == 2
        (g,) = enumerate_regular(6, 2, connected_only=True)
        assert are_isomorphic(g, cycle(6))

    def test_odd_degree_sum_has_no_graphs(self):
        assert enumerate_regular(7, 3) == []

    def test_representatives_are_sorted_and_distinct(self):
        graphs = enumerate_regular(8, 4)
        forms = [canonical_form(g) for g in graphs]

        assert forms == sorted(forms)
        assert len(set(forms)) == len(forms)
        assert all(is_regular(g) == 4 for g in graphs)

    @pytest.mark.parametrize(("n", "k"), [(0, 0), (3, 3), (4, -1), (11, 2)])
    def test_rejects_bad_cells(self, n, k):
        with pytest.raises(CensusError, match="need 0 <= k < n"):
            enumerate_regular(n, k)

    def test_matches_the_networkx_atlas(self):
        expected = Counter()
        for graph in nx.graph_atlas_g():
            degrees = {d for _, d in graph.degree()}
            if graph.number_of_nodes() >= 1 and len(degrees) == 1:
                expected[graph.number_of_nodes(), degrees.pop()] += 1
        found = Counter()
        for n in range(1, 8):
            for k in range(n):
                count = len(enumerate_regular(n, k))
                if count:
                    found[n, k] = count
        assert found == expected

    def test_atlas_regular_graphs_are_all_found(self):
        for graph in nx.graph_atlas_g()[1:]:
            degrees = {d for _, d in graph.degree()}
            if len(degrees) != 1 or graph.number_of_nodes() > 6:
                continue
            g = from_networkx(graph, int)
            forms = {canonical_form(h) for h in enumerate_regular(g.n, degrees.pop())}
            assert canonical_form(g) in forms


class TestEnumerateGraphs:
    def test_counts_all_graphs(self):
        assert [len(enumerate_graphs(n)) for n in range(6)] == [1, 1, 2, 4, 11, 34]

    def test_rejects_large_n(self):
        with pytest.raises(CensusError, match="0 <= n <= 6"):
            enumerate_graphs(7)


# ── Census runs ──────────────────────────────────────────────────────────


class TestRunCensus:
    def test_small_census(self):
        records = run_census(5)

        assert len(records) == 12
        assert [record.sort_key for record in records] == sorted(r.sort_key for r in records)
        assert len({record.canonical for record in records}) == len(records)

    def test_exactly_one_proper_srg_on_5_vertices(self):
        proper = [
            record
            for record in run_census(5)
            if record.n == 5
            and record.report.srg is not None
            and None not in record.report.srg
        ]

        assert [record.report.srg for record in proper] == [(5, 2, 0, 1)]

    def test_complete_graphs_have_vacuous_mu(self):
        for record in run_census(5):
            if record.k == record.n - 1 and record.n > 1:
                assert record.report.pseudo.status == "vacuous"
                assert record.report.srg == (record.n, record.n - 1, record.n - 2, None)

    def test_octahedron_is_in_the_census(self):
        (record,) = [
            record
            for record in run_census(6, connected_only=True)
            if record.canonical == canonical_form(octahedron())
        ]

        assert record.report.srg == (6, 4, 2, 4)

    def test_census_graphs_decode_records(self):
        graphs = census_graphs(4)

        assert all(is_regular(g) is not None for g in graphs)
        assert [g.n for g in graphs] == sorted(g.n for g in graphs)

    def test_ceiling_names_the_override(self):
        with pytest.raises(CensusError, match="REGTOOL_ALLOW_N10"):
            run_census(9)
        with pytest.raises(CensusError, match="between 1 and 8"):
            run_census(0)

    def test_ceiling_follows_config(self, monkeypatch):
        import config as cfg

        monkeypatch.setattr(cfg.config.census, "ceiling", 4)
        with pytest.raises(CensusError, match="between 1 and 4"):
            run_census(5)

    @pytest.mark.slow
    def test_parallel_census_matches_serial(self):
        assert run_census(7, workers=2) == run_census(7, workers=1)


# ── Records ──────────────────────────────────────────────────────────────


class TestCensusRecord:
    def test_dict_round_trip(self):
        record = CensusRecord.from_graph(cycle(5))
        data = record.to_dict()

        assert data["g6"] == record.g6
        assert data["canonical"] == record.canonical.hex()
        assert CensusRecord.from_dict(data) == record
        assert are_isomorphic(record.graph, cycle(5))

    def test_irregular_graph_is_rejected(self):
        with pytest.raises(CensusError, match="regular graphs only"):
            CensusRecord.from_graph(path(3))


# ── Queries ──────────────────────────────────────────────────────────────


class TestQuery:
    @pytest.fixture
    def records(self):
        return run_census(6)

    def test_filter_by_parameters(self, records):
        found = query(records, parse_filter(["n=5", "mu=1"]))

        assert [record.report.srg for record in found] == [(5, 2, 0, 1)]

    def test_filter_by_srg_tuple(self, records):
        found = query(records, parse_filter(["srg=6,4,2,4"]))

        assert len(found) == 1
        assert found[0].canonical == canonical_form(octahedron())

    def test_srg_presence(self, records):
        with_srg = query(records, parse_filter(["srg=true"]))
        without = query(records, parse_filter(["srg=false"]))

        assert len(with_srg) + len(without) == len(records)
        assert all(record.report.srg is not None for record in with_srg)

    def test_vacuous_flags(self, records):
        found = query(records, parse_filter(["lambda_vacuous=true", "n=4"]))

        assert [record.k for record in found] == [0]

    def test_empty_filter_keeps_everything(self, records):
        assert query(records, parse_filter([])) == records

    @pytest.mark.parametrize("expression", ["girth=5", "n5", "=3"])
    def test_bad_filters(self, expression):
        with pytest.raises(CensusError, match="bad filter"):
            parse_filter([expression])


def test_census_error_is_a_value_error():
    assert issubclass(CensusError, ValueError)
    assert not issubclass(CensusError, GraphError)
