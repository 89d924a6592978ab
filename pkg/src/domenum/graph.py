"""Graph and hypergraph value types.

Vertex ids are opaque hashables (the CLI produces strings).  Both types keep
their vertices sorted by :func:`id_key` and map them to dense indices so that
vertex sets can be handled as ``int`` bitsets internally; public methods take
and return original ids.
"""

from __future__ import annotations

import re
from collections import deque
from dataclasses import dataclass
from typing import Hashable, Iterable, Iterator, Sequence

from .errors import IsolatedVertex, UnknownVertex

Vertex = Hashable

_DIGITS = re.compile(r"(\d+)")


def id_key(v):
    """Sort key for vertex ids: integers numerically, strings in natural order.

    Natural order keeps ``v2`` before ``v10``, which the generated instances
    rely on for readable, stable output.
    """
    if isinstance(v, int):
        return (0, v, ())
    s = str(v)
    parts = tuple((0, int(p), "") if p.isdigit() else (1, 0, p) for p in _DIGITS.split(s) if p)
    return (1, 0, parts)


def sort_ids(vs: Iterable[Vertex]) -> list:
    return sorted(vs, key=id_key)


def iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def popcount(mask: int) -> int:
    return mask.bit_count()


class Graph:
    """Finite simple undirected graph with immutable adjacency."""

    __slots__ = ("vertices", "_index", "_nbr")

    def __init__(self, vertices: Iterable[Vertex] = (), edges: Iterable[tuple[Vertex, Vertex]] = ()):
        edges = list(edges)
        vs = set(vertices)
        for u, v in edges:
            vs.add(u)
            vs.add(v)
        self.vertices: tuple = tuple(sort_ids(vs))
        self._index = {v: i for i, v in enumerate(self.vertices)}
        nbr = [0] * len(self.vertices)
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at {u!r}")
            iu, iv = self._index[u], self._index[v]
            nbr[iu] |= 1 << iv
            nbr[iv] |= 1 << iu
        self._nbr = tuple(nbr)

    @classmethod
    def from_adjacency(cls, adjacency: dict) -> "Graph":
        edges = []
        for u, nbrs in adjacency.items():
            for v in nbrs:
                if v not in adjacency:
                    raise UnknownVertex(v)
                if u not in adjacency.get(v, ()):
                    raise ValueError(f"adjacency is not symmetric on {u!r}-{v!r}")
                edges.append((u, v))
        return cls(adjacency.keys(), edges)

    @classmethod
    def _from_masks(cls, vertices: Sequence, nbr: Sequence[int]) -> "Graph":
        g = cls.__new__(cls)
        g.vertices = tuple(vertices)
        g._index = {v: i for i, v in enumerate(g.vertices)}
        g._nbr = tuple(nbr)
        return g

    # -- basic accessors -------------------------------------------------

    @property
    def n(self) -> int:
        return len(self.vertices)

    @property
    def m(self) -> int:
        return sum(popcount(x) for x in self._nbr) // 2

    @property
    def full_mask(self) -> int:
        return (1 << len(self.vertices)) - 1

    def __contains__(self, v) -> bool:
        return v in self._index

    def __len__(self) -> int:
        return len(self.vertices)

    def index(self, v) -> int:
        try:
            return self._index[v]
        except (KeyError, TypeError):
            raise UnknownVertex(v) from None

    def mask(self, vs: Iterable[Vertex]) -> int:
        out = 0
        for v in vs:
            out |= 1 << self.index(v)
        return out

    def ids(self, mask: int) -> list:
        """Vertex ids of a bitset, in sorted order."""
        return [self.vertices[i] for i in iter_bits(mask)]

    def nbr_mask(self, i: int) -> int:
        return self._nbr[i]

    def closed_mask(self, i: int) -> int:
        return self._nbr[i] | (1 << i)

    def neighbors(self, v) -> frozenset:
        return frozenset(self.ids(self._nbr[self.index(v)]))

    def closed_neighbors(self, v) -> frozenset:
        i = self.index(v)
        return frozenset(self.ids(self.closed_mask(i)))

    def second_neighbors(self, v) -> frozenset:
        """Vertices at distance exactly two from ``v``."""
        i = self.index(v)
        closed = self.closed_mask(i)
        return frozenset(self.ids(self.neighborhood_of_mask(closed) & ~closed))

    def neighborhood_of_mask(self, mask: int) -> int:
        """Closed neighborhood ``N[S]`` of a bitset."""
        out = mask
        for i in iter_bits(mask):
            out |= self._nbr[i]
        return out

    def degree(self, v) -> int:
        return popcount(self._nbr[self.index(v)])

    def has_edge(self, u, v) -> bool:
        return bool(self._nbr[self.index(u)] >> self.index(v) & 1)

    def edges(self) -> list[tuple]:
        out = []
        for i, v in enumerate(self.vertices):
            for j in iter_bits(self._nbr[i] >> (i + 1)):
                out.append((v, self.vertices[i + 1 + j]))
        return out

    @property
    def adjacency(self) -> dict:
        return {v: frozenset(self.ids(self._nbr[i])) for i, v in enumerate(self.vertices)}

    def induced(self, vs: Iterable[Vertex]) -> "Graph":
        keep = self.mask(vs)
        return self.induced_mask(keep)

    def induced_mask(self, keep: int) -> "Graph":
        idx = list(iter_bits(keep))
        remap = {old: new for new, old in enumerate(idx)}
        nbr = []
        for old in idx:
            nm = 0
            for j in iter_bits(self._nbr[old] & keep):
                nm |= 1 << remap[j]
            nbr.append(nm)
        return Graph._from_masks([self.vertices[i] for i in idx], nbr)

    # -- connectivity ----------------------------------------------------

    def component_masks(self, allowed: int | None = None) -> list[int]:
        """Connected components of ``G[allowed]`` as bitsets, ordered by lowest member."""
        rest = self.full_mask if allowed is None else allowed
        nbr = self._nbr
        out = []
        while rest:
            comp = frontier = rest & -rest
            while frontier:
                grow = 0
                for i in iter_bits(frontier):
                    grow |= nbr[i]
                frontier = grow & rest & ~comp
                comp |= frontier
            out.append(comp)
            rest &= ~comp
        return out

    def is_connected_mask(self, allowed: int) -> bool:
        """True when ``G[allowed]`` is connected; the empty graph counts as connected."""
        if not allowed:
            return True
        nbr = self._nbr
        comp = frontier = allowed & -allowed
        while frontier:
            grow = 0
            for i in iter_bits(frontier):
                grow |= nbr[i]
            frontier = grow & allowed & ~comp
            comp |= frontier
        return comp == allowed

    def is_connected(self) -> bool:
        return self.is_connected_mask(self.full_mask)

    def is_independent_mask(self, mask: int) -> bool:
        return all(not (self._nbr[i] & mask) for i in iter_bits(mask))

    # -- dunder ----------------------------------------------------------

    def __eq__(self, other) -> bool:
        return isinstance(other, Graph) and self.vertices == other.vertices and self._nbr == other._nbr

    def __hash__(self) -> int:
        return hash((self.vertices, self._nbr))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


class Hypergraph:
    """Vertex set plus a family of hyperedges; duplicate edges collapse on construction."""

    __slots__ = ("vertices", "edges", "duplicates", "_index")

    def __init__(self, vertices: Iterable[Vertex] = (), edges: Iterable[Iterable[Vertex]] = ()):
        vs = set(vertices)
        seen = {}
        dup = 0
        for e in edges:
            fe = frozenset(e)
            vs |= fe
            if fe in seen:
                dup += 1
            else:
                seen[fe] = None
        self.vertices: tuple = tuple(sort_ids(vs))
        self.edges: tuple[frozenset, ...] = tuple(seen)
        self.duplicates = dup
        self._index = {v: i for i, v in enumerate(self.vertices)}

    @property
    def n(self) -> int:
        return len(self.vertices)

    @property
    def m(self) -> int:
        return len(self.edges)

    def index(self, v) -> int:
        try:
            return self._index[v]
        except (KeyError, TypeError):
            raise UnknownVertex(v) from None

    def mask(self, vs: Iterable[Vertex]) -> int:
        out = 0
        for v in vs:
            out |= 1 << self.index(v)
        return out

    def ids(self, mask: int) -> list:
        return [self.vertices[i] for i in iter_bits(mask)]

    def edge_masks(self) -> list[int]:
        return [self.mask(e) for e in self.edges]

    def is_sperner(self) -> bool:
        es = self.edges
        return not any(a < b for a in es for b in es)

    def edge_set(self) -> frozenset:
        return frozenset(self.edges)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Hypergraph)
            and self.vertices == other.vertices
            and self.edge_set() == other.edge_set()
        )

    def __hash__(self) -> int:
        return hash((self.vertices, self.edge_set()))

    def __repr__(self) -> str:
        return f"Hypergraph(n={self.n}, m={self.m})"


@dataclass(frozen=True)
class Bipartition:
    side_a: frozenset
    side_b: frozenset


@dataclass(frozen=True)
class NotBipartite:
    """Result of :func:`bipartition` on a graph with an odd cycle."""

    witness: tuple  # odd cycle, consecutive vertices adjacent

    def __bool__(self) -> bool:
        return False


def closed_neighborhood_hypergraph(g: Graph) -> Hypergraph:
    """Hypergraph whose minimal transversals are the minimal dominating sets of ``g``."""
    return Hypergraph(g.vertices, (g.ids(g.closed_mask(i)) for i in range(g.n)))


def open_neighborhood_hypergraph(g: Graph) -> Hypergraph:
    """Hypergraph of open neighborhoods; raises :class:`IsolatedVertex` if one is empty."""
    for i, v in enumerate(g.vertices):
        if not g.nbr_mask(i):
            raise IsolatedVertex(v)
    return Hypergraph(g.vertices, (g.ids(g.nbr_mask(i)) for i in range(g.n)))


def components(g: Graph, removed: Iterable[Vertex] = ()) -> list[frozenset]:
    rm = g.mask(removed)
    return [frozenset(g.ids(c)) for c in g.component_masks(g.full_mask & ~rm)]


def bipartition(g: Graph) -> Bipartition | NotBipartite:
    color = [-1] * g.n
    parent = [-1] * g.n
    for root in range(g.n):
        if color[root] != -1:
            continue
        color[root] = 0
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for w in iter_bits(g.nbr_mask(u)):
                if color[w] == -1:
                    color[w] = 1 - color[u]
                    parent[w] = u
                    queue.append(w)
                elif color[w] == color[u]:
                    return NotBipartite(_odd_cycle(g, parent, u, w))
    a = frozenset(v for i, v in enumerate(g.vertices) if color[i] == 0)
    return Bipartition(a, frozenset(g.vertices) - a)


def _odd_cycle(g: Graph, parent: list[int], u: int, w: int) -> tuple:
    def path_to_root(x):
        out = [x]
        while parent[x] != -1:
            x = parent[x]
            out.append(x)
        return out

    pu, pw = path_to_root(u), path_to_root(w)
    on_pw = set(pw)
    lca = next(x for x in pu if x in on_pw)
    left = pu[: pu.index(lca) + 1]
    right = pw[: pw.index(lca)]
    cycle = left + list(reversed(right))
    return tuple(g.vertices[i] for i in cycle)


def minimize_masks(masks: Iterable[int]) -> list[int]:
    """Inclusion-minimal members of a family of bitsets, first-occurrence order kept."""
    uniq = list(dict.fromkeys(masks))
    by_size = sorted(uniq, key=popcount)
    keep = set()
    kept: list[int] = []
    for e in by_size:
        if not any(k & e == k for k in kept):
            kept.append(e)
            keep.add(e)
    return [e for e in uniq if e in keep]


def sperner_minimize(h: Hypergraph) -> Hypergraph:
    masks = minimize_masks(h.edge_masks())
    return Hypergraph(h.vertices, (h.ids(e) for e in masks))


def is_transversal_mask(t: int, edges: Iterable[int]) -> bool:
    return all(t & e for e in edges)


def private_owners(t: int, edges: Iterable[int]) -> int:
    """Bitset of members of ``t`` owning at least one private edge."""
    owners = 0
    for e in edges:
        hit = t & e
        if hit and not (hit & (hit - 1)):
            owners |= hit
    return owners


def is_minimal_transversal_mask(t: int, edges: Sequence[int]) -> bool:
    """Transversal plus a private edge for every member."""
    return is_transversal_mask(t, edges) and private_owners(t, edges) == t
