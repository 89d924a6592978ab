from __future__ import annotations

import pytest
from hypothesis import assume, given, settings

from domenum.errors import AdjacentPair, NotSeparator
from domenum.generate import complete_bipartite
from domenum.graph import Graph, Hypergraph, sperner_minimize
from domenum.oracles import brute_ab_separators, brute_conformality, brute_separators
from domenum.separators import (
    ab_minimal_separators,
    check_complete_bipartite_separator,
    close_components,
    close_neighbor_holds,
    conformality,
    minimal_separators,
)

from .strategies import chordal_bipartite_graphs, graphs, hypergraphs


def fs(*sets):
    return {frozenset(s) for s in sets}


def test_ab_examples(p4, c4, c4_pendant):
    assert ab_minimal_separators(p4, "a", "d").as_set() == fs("b", "c")
    assert ab_minimal_separators(c4, "v1", "v3").as_set() == fs({"v2", "v4"})
    assert frozenset({"v1", "v3"}) in ab_minimal_separators(c4_pendant, "v2", "v4").as_set()
    with pytest.raises(AdjacentPair):
        ab_minimal_separators(p4, "a", "b")
    with pytest.raises(AdjacentPair):
        ab_minimal_separators(p4, "a", "a")


def test_minimal_separator_examples(p4, c4_pendant):
    assert minimal_separators(p4).as_set() == fs("b", "c")
    # {v1, v3} separates v2 from v4 but contains the cut vertex v1
    assert minimal_separators(c4_pendant).as_set() == fs({"v1"}, {"v2", "v4"})
    k22 = complete_bipartite(2, 2)
    assert minimal_separators(k22).as_set() == fs({"a1", "a2"}, {"b1", "b2"})
    assert minimal_separators(k22).source == "minimal-family"


def test_close_components(p4, c4, c4_pendant):
    assert set(close_components(p4, {"b"})) == fs("a", "cd")
    assert set(close_components(c4, {"v1", "v3"})) == fs({"v2"}, {"v4"})
    assert set(close_components(c4_pendant, {"v1", "v3"})) == fs({"v2"}, {"v4"})
    with pytest.raises(NotSeparator):
        close_components(p4, {"a"})


def test_complete_bipartite_separator_examples(c4):
    assert check_complete_bipartite_separator(c4, {"v2", "v4"})
    # domino: the middle rung is a separator with one vertex on each side
    g = Graph(["u1", "u2", "u3", "w1", "w2", "w3"],
              [("u1", "u2"), ("u2", "u3"), ("w1", "w2"), ("w2", "w3"), ("u1", "w1"), ("u2", "w2"), ("u3", "w3")])
    seps = minimal_separators(g).as_set()
    assert frozenset({"u2", "w2"}) in seps
    assert all(check_complete_bipartite_separator(g, s) for s in seps)


def test_conformality_examples(c4):
    assert conformality(minimal_separators(c4).hypergraph(c4), 5) == 2
    tri = Hypergraph("abc", ["ab", "bc", "ac"])
    assert conformality(tri, 5) == 3
    assert conformality(tri, 2) is None
    assert conformality(Hypergraph("abc", ["abc"]), 5) == 1


@settings(max_examples=300, deadline=None)
@given(graphs(max_n=9))
def test_separators_match_brute(g):
    assert minimal_separators(g).as_set() == brute_separators(g)
    seps = minimal_separators(g)
    assert len(seps) == len(seps.as_set())
    for s in seps:
        assert len(close_components(g, s)) >= 2


@settings(max_examples=200, deadline=None)
@given(graphs(max_n=9, min_n=2))
def test_ab_separators_match_brute(g):
    a, b = g.vertices[0], g.vertices[-1]
    assume(not g.has_edge(a, b))
    got = ab_minimal_separators(g, a, b)
    assert got.as_set() == brute_ab_separators(g, a, b) and len(got) == len(got.as_set())


@settings(max_examples=150, deadline=None)
@given(chordal_bipartite_graphs(max_n=12, min_n=2))
def test_chordal_bipartite_separator_structure(g):
    seps = minimal_separators(g)
    for s in seps:
        assert check_complete_bipartite_separator(g, s)
        assert close_neighbor_holds(g, s)
    c = conformality(seps.hypergraph(g), 5)
    assert c is not None and c <= 5


@settings(max_examples=200, deadline=None)
@given(hypergraphs(max_n=8, max_m=6))
def test_fast_conformality_matches_definition(h):
    h = sperner_minimize(h)
    assert conformality(h, 5) == brute_conformality(h, 5)
