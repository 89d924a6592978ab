"""Minimal connected dominating sets as minimal transversals of the minimal separators."""

from __future__ import annotations

from typing import Iterator

from .errors import Disconnected, TooLarge, Unsupported
from .graph import Graph, Hypergraph, iter_bits, minimize_masks, popcount
from .oracles import brute_mcds
from .separators import minimal_separator_masks
from .sequential import WorkCounter


def dualize_masks(edges: list[int], counter: WorkCounter | None = None) -> list[int]:
    """Berge multiplication: fold edges in one at a time, smallest first.

    After folding ``E`` every partial transversal that misses ``E`` is replaced
    by its extensions with one vertex of ``E``, and the family is cut back to
    its inclusion-minimal members.
    """
    counter = counter if counter is not None else WorkCounter()
    if any(e == 0 for e in edges):
        return []
    partial = [0]
    for e in sorted(dict.fromkeys(edges), key=lambda m: (popcount(m), m)):
        grown = []
        for t in partial:
            if t & e:
                grown.append(t)
                continue
            for v in iter_bits(e):
                grown.append(t | 1 << v)
        counter.nodes += len(grown)
        counter.validations += len(grown)
        partial = minimize_masks(grown)
    return sorted(partial, key=lambda m: (popcount(m), m))


def incremental_dualize(h: Hypergraph, counter: WorkCounter | None = None) -> Iterator[frozenset]:
    """Minimal transversals of ``h``; ``counter`` holds the work spent before each one."""
    for t in dualize_masks(h.edge_masks(), counter):
        yield frozenset(h.ids(t))


def enumerate_mcds(g: Graph, counter: WorkCounter | None = None) -> Iterator[frozenset]:
    """Minimal connected dominating sets of a connected graph.

    A graph without minimal separators is complete, and its minimal connected
    dominating sets are its single vertices.
    """
    if not g.is_connected():
        raise Disconnected("minimal connected dominating sets need a connected graph")
    if g.n == 0:
        yield frozenset()
        return
    counter = counter if counter is not None else WorkCounter()
    seps = minimal_separator_masks(g)
    if not seps:
        universal = [i for i in range(g.n) if g.closed_mask(i) == g.full_mask]
        if universal:
            for i in universal:
                yield frozenset([g.vertices[i]])
            return
        try:
            yield from sorted(brute_mcds(g), key=lambda s: sorted(g.index(v) for v in s))
        except TooLarge as exc:
            raise Unsupported("no separators and no universal vertex") from exc
        return
    for t in dualize_masks(seps, counter):
        yield frozenset(g.ids(t))
