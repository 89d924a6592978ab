"""Exhaustive reference implementations used as ground truth.

Every oracle here is exponential and refuses inputs above a size cap instead
of truncating.  Caps default to the values in :data:`DEFAULT_CAPS`; the
``DOMENUM_ORACLE_CAP`` environment variable overrides all of them at once.
"""

from __future__ import annotations

import os
from itertools import combinations, product
from typing import Iterable, Sequence

from .errors import SupportTooLarge, TooLarge
from .graph import Graph, Hypergraph, bipartition, iter_bits, popcount

DEFAULT_CAPS = {
    "mds": 20,
    "mcds": 14,
    "transversals": 22,
    "extension_support": 22,
    "separators": 14,
    "conformality": 15,
    "long_cycle": 14,
}


def cap(name: str) -> int:
    override = os.environ.get("DOMENUM_ORACLE_CAP")
    if override:
        return int(override)
    return DEFAULT_CAPS[name]


def _check(name: str, size: int, exc=TooLarge) -> None:
    limit = cap(name)
    if size > limit:
        raise exc(f"{name} oracle: size {size} exceeds cap {limit}")


def _subsets_by_size(bits: Sequence[int], max_size: int | None = None):
    top = len(bits) if max_size is None else min(max_size, len(bits))
    for k in range(top + 1):
        for combo in combinations(bits, k):
            m = 0
            for b in combo:
                m |= 1 << b
            yield m


def _minimal_upward(bits: Sequence[int], prop, max_size: int | None = None) -> list[int]:
    """All inclusion-minimal sets satisfying ``prop``, by increasing-size sweep.

    Any set with the property contains a minimal one of smaller or equal size,
    so a set is minimal iff it has the property and contains no set found so far.
    """
    found: list[int] = []
    for s in _subsets_by_size(bits, max_size):
        if any(f & s == f for f in found):
            continue
        if prop(s):
            found.append(s)
    return found


# -- transversals ----------------------------------------------------------


def brute_transversal_masks(edges: Sequence[int], cap_name: str = "transversals") -> list[int]:
    if any(e == 0 for e in edges):
        return []
    support = 0
    for e in edges:
        support |= e
    _check(cap_name, popcount(support), SupportTooLarge if cap_name == "extension_support" else TooLarge)
    edges = list(edges)
    return _minimal_upward(list(iter_bits(support)), lambda s: all(s & e for e in edges), max_size=len(edges))


def brute_transversals(h: Hypergraph) -> set[frozenset]:
    _check("transversals", h.n)
    return {frozenset(h.ids(t)) for t in brute_transversal_masks(h.edge_masks())}


# -- domination ------------------------------------------------------------


def _dominates(g: Graph, s: int) -> bool:
    return g.neighborhood_of_mask(s) == g.full_mask


def _totally_dominates(g: Graph, s: int) -> bool:
    cover = 0
    for i in iter_bits(s):
        cover |= g.nbr_mask(i)
    return cover == g.full_mask


def _single_removal_minimal(s: int, prop) -> bool:
    return all(not prop(s & ~(1 << i)) for i in iter_bits(s))


def brute_mds(g: Graph) -> set[frozenset]:
    _check("mds", g.n)
    prop = lambda s: _dominates(g, s)
    out = set()
    for s in _subsets_by_size(list(range(g.n))):
        if prop(s) and _single_removal_minimal(s, prop):
            out.add(frozenset(g.ids(s)))
    return out


def brute_mtds(g: Graph) -> set[frozenset]:
    """Minimal total dominating sets; empty when ``g`` has an isolated vertex."""
    _check("mds", g.n)
    if any(g.nbr_mask(i) == 0 for i in range(g.n)):
        return set()
    prop = lambda s: _totally_dominates(g, s)
    out = set()
    for s in _subsets_by_size(list(range(g.n))):
        if prop(s) and _single_removal_minimal(s, prop):
            out.add(frozenset(g.ids(s)))
    return out


def is_connected_dominating(g: Graph, s: int) -> bool:
    return bool(s or g.n == 0) and _dominates(g, s) and g.is_connected_mask(s)


def brute_mcds(g: Graph) -> set[frozenset]:
    """Minimal connected dominating sets, minimal against every proper subset."""
    _check("mcds", g.n)
    found = _minimal_upward(list(range(g.n)), lambda s: is_connected_dominating(g, s))
    return {frozenset(g.ids(s)) for s in found}


# -- separators ------------------------------------------------------------


def brute_separators(g: Graph, minimal_only: bool = True) -> set[frozenset]:
    """Sets whose removal disconnects ``g``; inclusion-minimal ones if requested."""
    _check("separators", g.n)
    full = g.full_mask
    disconnects = lambda s: not g.is_connected_mask(full & ~s)
    if minimal_only:
        found = _minimal_upward(list(range(g.n)), disconnects)
    else:
        found = [s for s in _subsets_by_size(list(range(g.n))) if disconnects(s)]
    return {frozenset(g.ids(s)) for s in found}


def brute_ab_separators(g: Graph, a, b) -> set[frozenset]:
    """Inclusion-minimal sets avoiding ``a, b`` that put them in different components."""
    _check("separators", g.n)
    ia, ib = g.index(a), g.index(b)
    full = g.full_mask
    others = [i for i in range(g.n) if i not in (ia, ib)]

    def separates(s):
        for comp in g.component_masks(full & ~s):
            if comp >> ia & 1:
                return not comp >> ib & 1
        return True

    return {frozenset(g.ids(s)) for s in _minimal_upward(others, separates)}


# -- conformality ----------------------------------------------------------


def brute_conformality(h: Hypergraph, c_max: int) -> int | None:
    """Smallest ``c`` in ``1..c_max`` under the literal definition, else None.

    ``h`` is c-conformal when every vertex set all of whose subsets of size at
    most ``c`` lie inside some edge lies inside some edge itself.  For every
    vertex set X the sweep computes the size of the smallest subset of X not
    inside any edge; X breaks c-conformality iff X is uncovered and that size
    exceeds ``c``.
    """
    _check("conformality", h.n)
    edges = h.edge_masks()
    inf = h.n + 1
    smallest_uncovered = [inf] * (1 << h.n)
    worst = 0
    for x in range(1, 1 << h.n):
        best = inf
        for i in iter_bits(x):
            sub = smallest_uncovered[x & ~(1 << i)]
            if sub < best:
                best = sub
        if best == inf and not any(x & e == x for e in edges):
            best = popcount(x)
        smallest_uncovered[x] = best
        if best != inf and best > worst:
            worst = best
    # uncovered sets with smallest uncovered subset of size `worst` force c >= worst
    for c in range(1, c_max + 1):
        if c >= worst:
            return c
    return None


# -- induced cycles --------------------------------------------------------


def has_long_induced_cycle(g: Graph, min_len: int = 6) -> tuple | None:
    """An induced cycle of length >= ``min_len`` as a vertex tuple, or None."""
    _check("long_cycle", g.n)
    nbr = [g.nbr_mask(i) for i in range(g.n)]
    for start in range(g.n):
        # cycles whose smallest vertex is `start`; grow chordless paths
        higher = g.full_mask & ~((1 << (start + 1)) - 1)
        stack = [(start, (start,), 1 << start)]
        while stack:
            last, path, used = stack.pop()
            for nxt in iter_bits(nbr[last] & higher & ~used):
                # interior vertices of the path must not touch nxt
                inner = used & ~(1 << last) & ~(1 << start)
                if nbr[nxt] & inner:
                    continue
                closes = nbr[nxt] >> start & 1
                if closes:
                    if len(path) >= 2 and len(path) + 1 >= min_len:
                        return tuple(g.vertices[i] for i in path + (nxt,))
                    if len(path) >= 2:
                        continue
                stack.append((nxt, path + (nxt,), used | 1 << nxt))
    return None


def is_chordal_bipartite_by_definition(g: Graph) -> bool:
    return bool(bipartition(g)) and has_long_induced_cycle(g, 6) is None


def multicolored_independent_sets(g: Graph, classes: Iterable[Iterable]) -> list[frozenset]:
    """Independent sets holding exactly one vertex of each class."""
    class_lists = [list(c) for c in classes]
    out = []
    for pick in product(*class_lists):
        m = g.mask(pick)
        if popcount(m) == len(class_lists) and g.is_independent_mask(m):
            out.append(frozenset(pick))
    return out
