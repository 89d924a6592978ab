"""Ordered generation of minimal transversals along a vertex ordering.

Partial solutions are pairs ``(T, i)`` with ``T`` a minimal transversal of the
hypergraph induced by the first ``i`` vertices.  Each one has a unique parent
one level up, which turns the partial solutions into a tree rooted at
``(set(), 0)``; a depth-first walk of that tree outputs its leaves, which are
exactly the minimal transversals of the whole hypergraph.  Children of a node
are found among ``T | X`` for ``X`` a minimal transversal of the edges the
next vertex brings in unhit; producing those ``X`` is delegated to an
extension oracle.

Inside the engine vertex sets are ``int`` bitsets where bit ``j`` stands for
the ``(j + 1)``-th vertex of the ordering.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, Iterator, Sequence

from .errors import BadIndex, NotMember, NotMinimalTransversal
from .graph import Hypergraph, is_minimal_transversal_mask, iter_bits, private_owners
from .oracles import brute_transversal_masks


@dataclass(frozen=True)
class PartialSolution:
    t: frozenset
    i: int


@dataclass(frozen=True)
class DeltaFamily:
    """Edges of the next prefix hypergraph left unhit by the current partial solution."""

    edges: frozenset


@dataclass
class WorkCounter:
    """Machine-independent work accounting for one enumeration stream."""

    nodes: int = 0
    validations: int = 0
    oracle_calls: int = 0
    pool_max: int = 0
    pool_total: int = 0

    @property
    def total(self) -> int:
        return self.nodes + self.validations

    def record_pool(self, size: int) -> None:
        self.oracle_calls += 1
        self.pool_total += size
        if size > self.pool_max:
            self.pool_max = size


# oracle(ctx, t_star, i, delta, counter) -> iterable of bitsets X in Tr(delta)
ExtensionOracle = Callable[["OrderedHypergraph", int, int, list, WorkCounter], Iterable[int]]


class OrderedHypergraph:
    """A hypergraph together with a vertex ordering, in ordering-position bitsets."""

    def __init__(self, h: Hypergraph, ordering: Sequence):
        order = tuple(ordering)
        if len(order) != h.n or set(order) != set(h.vertices):
            raise ValueError("ordering must be a permutation of the hypergraph's vertices")
        self.hypergraph = h
        self.order = order
        self.pos = {v: j for j, v in enumerate(order)}
        self.n = len(order)
        masks = [self.mask(e) for e in h.edges]
        self.has_empty_edge = any(e == 0 for e in masks)
        nonempty = [e for e in masks if e]
        # bucket edges by their last vertex: bucket j holds the edges that
        # first appear in the prefix of length j + 1
        self.buckets: list[list[int]] = [[] for _ in range(self.n)]
        for e in nonempty:
            self.buckets[e.bit_length() - 1].append(e)
        self._sorted = [e for b in self.buckets for e in b]
        self._prefix_count = [0] * (self.n + 1)
        for j in range(self.n):
            self._prefix_count[j + 1] = self._prefix_count[j] + len(self.buckets[j])

    def mask(self, vs: Iterable) -> int:
        out = 0
        for v in vs:
            out |= 1 << self.pos[v]
        return out

    def ids(self, mask: int) -> frozenset:
        return frozenset(self.order[j] for j in iter_bits(mask))

    def check_index(self, i: int) -> None:
        if not 0 <= i <= self.n:
            raise BadIndex(f"prefix index {i} outside 0..{self.n}")

    def prefix_edges(self, i: int) -> list[int]:
        """Edges of the hypergraph induced by the first ``i`` vertices."""
        self.check_index(i)
        return self._sorted[: self._prefix_count[i]]

    def new_edges(self, i: int) -> list[int]:
        """Edges present for the first ``i + 1`` vertices but not the first ``i``."""
        return self.buckets[i]

    def delta(self, t_star: int, i: int) -> list[int]:
        # t_star hits every edge of the i-prefix, so only the new edges can be unhit
        return [e for e in self.buckets[i] if not e & t_star]

    def parent(self, t: int, i_plus_1: int) -> int:
        """Drop, lowest position first, members without a private edge in the previous prefix."""
        edges = self.prefix_edges(i_plus_1 - 1)
        while True:
            idle = t & ~private_owners(t, edges)
            if not idle:
                return t
            t &= ~(idle & -idle)

    def is_partial_solution(self, t: int, i: int) -> bool:
        return t < (1 << i) and is_minimal_transversal_mask(t, self.prefix_edges(i))


def children_masks(ctx: OrderedHypergraph, t_star: int, i: int, oracle: ExtensionOracle,
                   counter: WorkCounter) -> Iterator[int]:
    delta = ctx.delta(t_star, i)
    if not delta:
        yield t_star
        return
    next_edges = ctx.prefix_edges(i + 1)
    for x in oracle(ctx, t_star, i, delta, counter):
        counter.validations += 1
        cand = t_star | x
        if is_minimal_transversal_mask(cand, next_edges) and ctx.parent(cand, i + 1) == t_star:
            yield cand


def enumerate_masks(ctx: OrderedHypergraph, oracle: ExtensionOracle,
                    counter: WorkCounter | None = None) -> Iterator[int]:
    """Depth-first walk with an explicit stack of per-level child iterators."""
    counter = counter if counter is not None else WorkCounter()
    if ctx.has_empty_edge:
        return
    if ctx.n == 0:
        yield 0
        return
    counter.nodes += 1
    stack = [children_masks(ctx, 0, 0, oracle, counter)]
    while stack:
        t = next(stack[-1], None)
        if t is None:
            stack.pop()
            continue
        depth = len(stack)
        if depth == ctx.n:
            yield t
        else:
            counter.nodes += 1
            stack.append(children_masks(ctx, t, depth, oracle, counter))


def brute_extension_masks(ctx: OrderedHypergraph, t_star: int, i: int, delta: list[int],
                          counter: WorkCounter | None = None) -> list[int]:
    """Reference extension oracle: exhaustive minimal transversals of ``delta``."""
    out = brute_transversal_masks(delta, cap_name="extension_support")
    if counter is not None:
        counter.record_pool(len(out))
    return out


# -- id-level API --------------------------------------------------------------


def prefix_hypergraph(h: Hypergraph, ordering: Sequence, i: int) -> Hypergraph:
    ctx = OrderedHypergraph(h, ordering)
    return Hypergraph(ctx.order[:i], (ctx.ids(e) for e in ctx.prefix_edges(i)))


def private_edges(h_i: Hypergraph, s: Iterable, v) -> set[frozenset]:
    s = frozenset(s)
    if v not in s:
        raise NotMember(f"{v!r} is not in the given set")
    return {e for e in h_i.edges if e & s == {v}}


def _require_partial(ctx: OrderedHypergraph, t: int, i: int) -> None:
    ctx.check_index(i)
    if not ctx.is_partial_solution(t, i):
        raise NotMinimalTransversal(f"not a minimal transversal of the {i}-prefix hypergraph")


def parent(t: Iterable, i_plus_1: int, h: Hypergraph, ordering: Sequence) -> PartialSolution:
    ctx = OrderedHypergraph(h, ordering)
    if i_plus_1 < 1:
        raise BadIndex("parent needs a prefix index of at least 1")
    tm = ctx.mask(t)
    _require_partial(ctx, tm, i_plus_1)
    return PartialSolution(ctx.ids(ctx.parent(tm, i_plus_1)), i_plus_1 - 1)


def delta(h: Hypergraph, ordering: Sequence, t_star: Iterable, i: int) -> DeltaFamily:
    ctx = OrderedHypergraph(h, ordering)
    if not 0 <= i < ctx.n:
        raise BadIndex(f"delta needs 0 <= i < {ctx.n}")
    tm = ctx.mask(t_star)
    return DeltaFamily(frozenset(ctx.ids(e) for e in ctx.prefix_edges(i + 1) if not e & tm))


def children(h: Hypergraph, ordering: Sequence, t_star: Iterable, i: int,
             oracle: ExtensionOracle | None = None) -> list[frozenset]:
    ctx = OrderedHypergraph(h, ordering)
    if not 0 <= i < ctx.n:
        raise BadIndex(f"children needs 0 <= i < {ctx.n}")
    tm = ctx.mask(t_star)
    _require_partial(ctx, tm, i)
    oracle = oracle or brute_extension_masks
    return [ctx.ids(t) for t in children_masks(ctx, tm, i, oracle, WorkCounter())]


def enumerate_transversals(h: Hypergraph, ordering: Sequence | None = None,
                           oracle: ExtensionOracle | None = None,
                           counter: WorkCounter | None = None) -> Iterator[frozenset]:
    ctx = OrderedHypergraph(h, ordering if ordering is not None else h.vertices)
    for t in enumerate_masks(ctx, oracle or brute_extension_masks, counter):
        yield ctx.ids(t)


def brute_extension_oracle(h: Hypergraph, ordering: Sequence, t_star: Iterable, i: int) -> list[frozenset]:
    ctx = OrderedHypergraph(h, ordering)
    if not 0 <= i < ctx.n:
        raise BadIndex(f"needs 0 <= i < {ctx.n}")
    tm = ctx.mask(t_star)
    d = [e for e in ctx.prefix_edges(i + 1) if not e & tm]
    return [ctx.ids(x) for x in brute_extension_masks(ctx, tm, i, d)]
