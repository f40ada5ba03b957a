from hypothesis import given, settings
from hypothesis import strategies as st

from graphs.core import edgeless
from graphs.families import complete, complete_bipartite, cycle, petersen, prism
from graphs.isomorphism import are_isomorphic, canonical_form, canonical_graph
from graphs.ops import complement, disjoint_union
from tests.strategies import graphs, permuted_graphs


@given(permuted_graphs(max_n=8))
def test_canonical_form_is_relabeling_invariant(case):
    g, perm = case

    assert canonical_form(g.relabel(perm)) == canonical_form(g)
    assert are_isomorphic(g.relabel(perm), g)


same_size_pairs = st.integers(min_value=0, max_value=7).flatmap(
    lambda n: st.tuples(graphs(n, n), graphs(n, n))
)


@settings(max_examples=200)
@given(same_size_pairs)
def test_are_isomorphic_agrees_with_canonical_form(pair):
    g, h = pair

    assert are_isomorphic(g, h) == (canonical_form(g) == canonical_form(h))


@given(graphs(max_n=8))
def test_canonical_graph_is_an_idempotent_representative(g):
    rep = canonical_graph(g)

    assert are_isomorphic(rep, g)
    assert canonical_graph(rep) == rep
    assert canonical_form(rep) == canonical_form(g)


def test_canonical_form_separates_classic_pairs():
    assert not are_isomorphic(cycle(6), disjoint_union(cycle(3), cycle(3)))
    assert not are_isomorphic(prism(3), complete_bipartite(3, 3))
    assert canonical_form(edgeless(3)) != canonical_form(edgeless(4))


def test_isomorphic_copies_of_named_graphs():
    relabelled = petersen().relabel([3, 1, 4, 0, 9, 2, 6, 5, 8, 7])

    assert are_isomorphic(petersen(), relabelled)
    assert are_isomorphic(complement(cycle(5)), cycle(5))
    assert are_isomorphic(complement(complete(3)), edgeless(3))
