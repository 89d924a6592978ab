"""Weak-simplicial vertices, elimination orderings and bipartite chain checks."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .graph import Graph, bipartition, id_key, iter_bits, popcount


@dataclass(frozen=True)
class SimplicialCheck:
    ok: bool
    # (x, y, kind): kind is "adjacent" when N(v) is not independent,
    # "incomparable" when N(x) and N(y) are not nested.
    witness: tuple | None = None

    def __bool__(self) -> bool:
        return self.ok


@dataclass(frozen=True)
class EliminationOrdering:
    """``order[i]`` is weak-simplicial in the graph induced by ``order[:i + 1]``."""

    order: tuple

    def __iter__(self):
        return iter(self.order)

    def __len__(self) -> int:
        return len(self.order)


@dataclass(frozen=True)
class ChainOrders:
    x_order: tuple
    y_order: tuple


@dataclass(frozen=True)
class NotChain:
    witness: tuple  # two same-side vertices with incomparable neighborhoods

    def __bool__(self) -> bool:
        return False


def _ws_witness(g: Graph, i: int, alive: int):
    """None if vertex ``i`` is weak-simplicial in ``G[alive]``, else a violating pair."""
    nb = g.nbr_mask(i) & alive
    members = list(iter_bits(nb))
    for x in members:
        if g.nbr_mask(x) & nb:
            y = next(iter_bits(g.nbr_mask(x) & nb))
            return (x, y, "adjacent")
    chain = sorted(((popcount(g.nbr_mask(x) & alive), x) for x in members))
    for (_, x), (_, y) in zip(chain, chain[1:]):
        nx, ny = g.nbr_mask(x) & alive, g.nbr_mask(y) & alive
        if nx & ~ny:
            return (x, y, "incomparable")
    return None


def is_weak_simplicial(g: Graph, v) -> SimplicialCheck:
    w = _ws_witness(g, g.index(v), g.full_mask)
    if w is None:
        return SimplicialCheck(True)
    x, y, kind = w
    return SimplicialCheck(False, (g.vertices[x], g.vertices[y], kind))


def is_elimination_ordering(g: Graph, order: Sequence) -> bool:
    """Check every prefix literally against the definition."""
    if sorted(order, key=id_key) != list(g.vertices):
        return False
    alive = 0
    for v in order:
        i = g.index(v)
        alive |= 1 << i
        if _ws_witness(g, i, alive) is not None:
            return False
    return True


def weak_simplicial_ordering(g: Graph) -> EliminationOrdering | None:
    """Greedy elimination: repeatedly remove a weak-simplicial vertex of what is left.

    Removed vertices fill the ordering from the back.  Among the available
    weak-simplicial vertices the one with the largest id is removed, so the
    returned ordering reads in increasing id order whenever that is valid.
    """
    alive = g.full_mask
    removed = []
    while alive:
        pick = None
        for i in reversed(list(iter_bits(alive))):
            if _ws_witness(g, i, alive) is None:
                pick = i
                break
        if pick is None:
            return None
        removed.append(pick)
        alive &= ~(1 << pick)
    order = tuple(g.vertices[i] for i in reversed(removed))
    if not is_elimination_ordering(g, order):
        raise AssertionError("greedy elimination produced an invalid ordering")
    return EliminationOrdering(order)


def side_elimination_ordering(g: Graph) -> EliminationOrdering | None:
    """Eliminate one color class at a time while the other stays in place.

    Each side is ordered so that ``order[j]`` is weak-simplicial in the graph
    induced by the earlier vertices of its own side plus the whole other side.
    Along such an ordering the open neighborhoods that close at a vertex are
    nested, which keeps the open-neighborhood extensions to single vertices.
    Sides come out concatenated.  None when some side gets stuck, which does
    not happen on chordal bipartite graphs.
    """
    bp = bipartition(g)
    if not bp:
        return None
    out: list = []
    for side in (bp.side_a, bp.side_b):
        sm = g.mask(side)
        alive = g.full_mask
        removed = []
        while alive & sm:
            pick = None
            for i in reversed(list(iter_bits(alive & sm))):
                if _ws_witness(g, i, alive) is None:
                    pick = i
                    break
            if pick is None:
                return None
            removed.append(pick)
            alive &= ~(1 << pick)
        out.extend(g.vertices[i] for i in reversed(removed))
    return EliminationOrdering(tuple(out))


def is_side_elimination_ordering(g: Graph, order: Sequence) -> bool:
    """Literal check of the property :func:`side_elimination_ordering` guarantees."""
    bp = bipartition(g)
    if not bp or sorted(order, key=id_key) != list(g.vertices):
        return False
    for side in (bp.side_a, bp.side_b):
        sm = g.mask(side)
        alive = g.full_mask & ~sm
        for v in order:
            i = g.index(v)
            if not sm >> i & 1:
                continue
            alive |= 1 << i
            if _ws_witness(g, i, alive) is not None:
                return False
    return True


def is_chordal_bipartite(g: Graph) -> bool:
    return weak_simplicial_ordering(g) is not None


def chain_orders(g: Graph, x: Iterable, y: Iterable) -> ChainOrders | NotChain:
    """Order both sides of ``G[x | y]`` by neighborhood inclusion.

    X ascends (``N(x_i) <= N(x_j)`` for ``i <= j``) and Y descends.
    """
    xm, ym = g.mask(x), g.mask(y)
    if xm & ym:
        raise ValueError("sides overlap")
    if not (g.is_independent_mask(xm) and g.is_independent_mask(ym)):
        raise ValueError("sides are not independent sets")

    def side(mask, other, ascending):
        key = lambda i: (popcount(g.nbr_mask(i) & other) * (1 if ascending else -1), id_key(g.vertices[i]))
        order = sorted(iter_bits(mask), key=key)
        for a, b in zip(order, order[1:]):
            na, nb = g.nbr_mask(a) & other, g.nbr_mask(b) & other
            if (na & ~nb) if ascending else (nb & ~na):
                return None, (g.vertices[a], g.vertices[b])
        return tuple(g.vertices[i] for i in order), None

    xo, wx = side(xm, ym, True)
    if wx:
        return NotChain(wx)
    yo, wy = side(ym, xm, False)
    if wy:
        return NotChain(wy)
    return ChainOrders(xo, yo)


def chain_order_masks(nbr: Sequence[int], x: int, y: int) -> tuple[list[int], list[int]] | None:
    """Bitset variant of :func:`chain_orders` over raw neighbor masks; None if not a chain."""
    xo = sorted(iter_bits(x), key=lambda i: (popcount(nbr[i] & y), i))
    for a, b in zip(xo, xo[1:]):
        if nbr[a] & y & ~nbr[b]:
            return None
    yo = sorted(iter_bits(y), key=lambda i: (-popcount(nbr[i] & x), i))
    for a, b in zip(yo, yo[1:]):
        if nbr[b] & x & ~nbr[a]:
            return None
    return xo, yo
