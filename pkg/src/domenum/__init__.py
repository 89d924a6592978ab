"""Enumeration of minimal dominating, total dominating and connected dominating
sets in chordal bipartite graphs, with exhaustive oracles to check them against."""

from .cdom import enumerate_mcds, incremental_dualize
from .errors import DomEnumError
from .extensions import enumerate_mds, enumerate_mtds
from .graph import Graph, Hypergraph, closed_neighborhood_hypergraph, open_neighborhood_hypergraph
from .io import parse_edge_list, parse_hypergraph
from .recognition import is_chordal_bipartite, weak_simplicial_ordering
from .separators import minimal_separators
from .sequential import WorkCounter, enumerate_transversals

__all__ = [
    "DomEnumError",
    "Graph",
    "Hypergraph",
    "WorkCounter",
    "closed_neighborhood_hypergraph",
    "enumerate_mcds",
    "enumerate_mds",
    "enumerate_mtds",
    "enumerate_transversals",
    "incremental_dualize",
    "is_chordal_bipartite",
    "minimal_separators",
    "open_neighborhood_hypergraph",
    "parse_edge_list",
    "parse_hypergraph",
    "weak_simplicial_ordering",
]
