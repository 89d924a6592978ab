"""Minimal a-b separators, the minimal separator family S(G), and conformality.

A minimal a-b separator is listed by close-separator expansion: the seed is
``N(C_b)`` for ``C_b`` the component of ``b`` in ``G - N[a]``, and a known
separator ``S`` spawns ``N(C_b')`` for ``C_b'`` the component of ``b`` in
``G - (S | N(x))``, one for each ``x`` in ``S`` not adjacent to ``b``.  Every
minimal separator of ``G`` is a minimal a-b separator for some pair, so
``S(G)`` is the inclusion-minimal part of the union over non-adjacent pairs.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Literal

from .errors import AdjacentPair, NotSeparator
from .graph import Graph, Hypergraph, bipartition, iter_bits, minimize_masks, popcount


@dataclass(frozen=True)
class SeparatorSet:
    separators: tuple  # frozensets of vertex ids, in discovery order
    source: Literal["a-b-family", "minimal-family"]

    def __iter__(self):
        return iter(self.separators)

    def __len__(self) -> int:
        return len(self.separators)

    def as_set(self) -> set[frozenset]:
        return set(self.separators)

    def hypergraph(self, g: Graph) -> Hypergraph:
        return Hypergraph(g.vertices, self.separators)


def _component_of(g: Graph, i: int, removed: int) -> int:
    for comp in g.component_masks(g.full_mask & ~removed):
        if comp >> i & 1:
            return comp
    return 0


def _boundary(g: Graph, comp: int) -> int:
    out = 0
    for i in iter_bits(comp):
        out |= g.nbr_mask(i)
    return out & ~comp


def ab_separator_masks(g: Graph, a: int, b: int) -> list[int]:
    """Minimal a-b separators as bitsets, breadth-first from the one closest to ``a``."""
    if a == b or g.nbr_mask(a) >> b & 1:
        raise AdjacentPair(f"{g.vertices[a]!r} and {g.vertices[b]!r} cannot be separated")
    closed_b = g.closed_mask(b)
    seed_comp = _component_of(g, b, g.closed_mask(a))
    seed = _boundary(g, seed_comp)
    found = {seed: None}
    queue = deque([seed])
    while queue:
        s = queue.popleft()
        for x in iter_bits(s & ~closed_b):
            comp = _component_of(g, b, s | g.nbr_mask(x))
            nxt = _boundary(g, comp)
            if nxt not in found:
                found[nxt] = None
                queue.append(nxt)
    return list(found)


def ab_minimal_separators(g: Graph, a, b) -> SeparatorSet:
    masks = ab_separator_masks(g, g.index(a), g.index(b))
    return SeparatorSet(tuple(frozenset(g.ids(s)) for s in masks), "a-b-family")


def minimal_separator_masks(g: Graph) -> list[int]:
    seen: dict[int, None] = {}
    for a in range(g.n):
        for b in range(a + 1, g.n):
            if g.nbr_mask(a) >> b & 1:
                continue
            for s in ab_separator_masks(g, a, b):
                seen.setdefault(s, None)
    # a-b separators of a disconnected graph include the empty set, which then wins
    return minimize_masks(list(seen))


def minimal_separators(g: Graph) -> SeparatorSet:
    masks = sorted(minimal_separator_masks(g), key=lambda s: (popcount(s), s))
    return SeparatorSet(tuple(frozenset(g.ids(s)) for s in masks), "minimal-family")


def close_component_masks(g: Graph, s: int) -> list[int]:
    comps = g.component_masks(g.full_mask & ~s)
    if len(comps) < 2:
        raise NotSeparator("removing the set leaves the graph connected")
    return [c for c in comps if all(g.nbr_mask(v) & c for v in iter_bits(s))]


def close_components(g: Graph, s: Iterable) -> list[frozenset]:
    """Components of ``G - s`` in which every vertex of ``s`` has a neighbor."""
    return [frozenset(g.ids(c)) for c in close_component_masks(g, g.mask(s))]


def check_complete_bipartite_separator(g: Graph, s: Iterable) -> bool:
    """Whether every vertex of ``s`` on one side is adjacent to every vertex of ``s`` on the other."""
    bp = bipartition(g)
    if not bp:
        return False
    sm = g.mask(s)
    side_a = sm & g.mask(bp.side_a)
    side_b = sm & ~side_a
    return all(g.nbr_mask(x) & side_b == side_b for x in iter_bits(side_a))


def close_neighbor_holds(g: Graph, s: Iterable) -> bool:
    """Each close component of ``G - s`` has a vertex seeing exactly the ``A``-part of ``s``.

    Checked for both sides of the bipartition in turn; a side missing from
    ``s`` imposes nothing.
    """
    bp = bipartition(g)
    if not bp:
        return False
    sm = g.mask(s)
    comps = close_component_masks(g, sm)
    for side in (bp.side_a, bp.side_b):
        part = sm & g.mask(side)
        if not part:
            continue
        for c in comps:
            if not any(g.nbr_mask(x) & sm == part for x in iter_bits(c)):
                return False
    return True


# -- conformality ------------------------------------------------------------


def _conformal_at(edges: list[int], c: int) -> bool:
    """The (c+1)-edge test: in any ``c + 1`` edges, the vertices lying in at least
    ``c`` of them must fit inside one edge."""
    if len(edges) <= c:
        return True
    for group in combinations(edges, c + 1):
        # vertices missing from at most one edge of the group
        common = 0
        for skip in range(c + 1):
            inter = -1
            for j, e in enumerate(group):
                if j != skip:
                    inter &= e
            common |= inter
        if not any(common & e == common for e in edges):
            return False
    return True


def conformality(h: Hypergraph, c_max: int) -> int | None:
    """Least ``c`` in ``1..c_max`` for which ``h`` is c-conformal, None above ``c_max``."""
    edges = h.edge_masks()
    for c in range(1, c_max + 1):
        if _conformal_at(edges, c):
            return c
    return None
