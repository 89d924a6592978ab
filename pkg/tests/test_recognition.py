from __future__ import annotations

import random

from hypothesis import given, settings

from domenum.generate import complete_bipartite, connected_labeled_bipartite, path_graph
from domenum.graph import Graph
from domenum.oracles import is_chordal_bipartite_by_definition
from domenum.recognition import (
    ChainOrders,
    chain_orders,
    is_chordal_bipartite,
    is_elimination_ordering,
    is_side_elimination_ordering,
    is_weak_simplicial,
    side_elimination_ordering,
    weak_simplicial_ordering,
)

from .strategies import chordal_bipartite_graphs, graphs


def test_weak_simplicial_examples(c4, c6):
    assert is_weak_simplicial(c4, "v1")
    check = is_weak_simplicial(c6, "v1")
    assert not check and check.witness[2] == "incomparable"
    tree = Graph("abcd", [("a", "b"), ("b", "c"), ("b", "d")])
    assert is_weak_simplicial(tree, "a")


def test_ordering_examples(c4, c6):
    assert list(weak_simplicial_ordering(c4)) == ["v1", "v2", "v3", "v4"]
    assert weak_simplicial_ordering(c6) is None
    k23 = complete_bipartite(2, 3)
    assert is_elimination_ordering(k23, weak_simplicial_ordering(k23).order)


def test_recognition_examples(c4, c6):
    assert is_chordal_bipartite(c4)
    assert not is_chordal_bipartite(c6)
    assert is_chordal_bipartite(path_graph(9))
    assert not is_chordal_bipartite(Graph("abc", [("a", "b"), ("b", "c"), ("a", "c")]))


def test_chain_orders_examples(c4):
    g = Graph("abc", [("a", "c"), ("b", "c")])
    assert chain_orders(g, {"a", "b"}, {"c"}) == ChainOrders(("a", "b"), ("c",))
    assert chain_orders(c4, {"v1", "v3"}, {"v2", "v4"})
    p5 = path_graph(5)
    bad = chain_orders(p5, {"v1", "v3", "v5"}, {"v2", "v4"})
    assert not bad and len(bad.witness) == 2


def test_recognition_matches_definition_on_random_labeled_graphs():
    rng = random.Random(20240501)
    seen = 0
    for _ in range(10_000):
        n = rng.randint(1, 8)
        p = rng.choice([0.2, 0.35, 0.5])
        names = [f"x{i}" for i in range(n)]
        g = Graph(names, [(names[i], names[j]) for i in range(n) for j in range(i + 1, n) if rng.random() < p])
        assert is_chordal_bipartite(g) == is_chordal_bipartite_by_definition(g)
        seen += 1
    assert seen == 10_000


def test_recognition_matches_definition_on_all_bipartite_graphs_up_to_six():
    for n in range(1, 7):
        for g in connected_labeled_bipartite(n):
            assert is_chordal_bipartite(g) == is_chordal_bipartite_by_definition(g)


@settings(max_examples=200, deadline=None)
@given(graphs(max_n=8))
def test_returned_orderings_verify(g):
    order = weak_simplicial_ordering(g)
    if order is not None:
        assert is_elimination_ordering(g, order.order)


@settings(max_examples=200, deadline=None)
@given(chordal_bipartite_graphs(max_n=16))
def test_side_ordering_exists_on_chordal_bipartite(g):
    order = side_elimination_ordering(g)
    assert order is not None and is_side_elimination_ordering(g, order.order)


@settings(max_examples=150, deadline=None)
@given(chordal_bipartite_graphs(max_n=12))
def test_chain_orders_satisfy_inclusion(g):
    # around a weak-simplicial vertex, distances one and two form a bipartite chain
    for v in g.vertices:
        if not is_weak_simplicial(g, v):
            continue
        x = g.neighbors(v)
        y = g.second_neighbors(v)
        res = chain_orders(g.induced(x | y), x, y)
        assert res
        nb = lambda u, side: g.neighbors(u) & side
        for a, b in zip(res.x_order, res.x_order[1:]):
            assert nb(a, y) <= nb(b, y)
        for a, b in zip(res.y_order, res.y_order[1:]):
            assert nb(a, x) >= nb(b, x)
