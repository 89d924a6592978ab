"""Polynomial extension oracles for chordal bipartite graphs and the MDS/TDS enumerators.

Along a weak-simplicial elimination ordering, the edges a partial solution
leaves unhit when vertex ``v = v_{i+1}`` arrives are neighborhoods of ``v``
and of some of its neighbors.  Their vertices induce a bipartite chain graph,
which keeps every minimal extension tiny: it is ``{v}``, the blue set, at
most two red vertices, or one vertex at distance two from ``v`` together with
blue vertices.  Each oracle call therefore lists a candidate pool of size at
most ``n**2 + n + 2`` and keeps the candidates that are minimal transversals
of the unhit edges.

The blue-plus-distance-two shape has a variant that is easy to overlook:
when every blue vertex is adjacent to the distance-two vertex ``r`` and
``N[v]`` is still unhit, ``{r, b}`` for a blue ``b`` is a minimal extension.
The default pool includes it (``complete_pool=True``).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterator, Literal, Sequence

from .errors import EmptyDelta, IsolatedVertex, NotChainError, NotChordalBipartite
from .graph import (
    Graph,
    closed_neighborhood_hypergraph,
    is_minimal_transversal_mask,
    iter_bits,
    open_neighborhood_hypergraph,
    popcount,
)
from .recognition import ChainOrders, chain_order_masks, side_elimination_ordering, weak_simplicial_ordering
from .sequential import DeltaFamily, OrderedHypergraph, WorkCounter, enumerate_masks

Mode = Literal["closed", "open"]


@dataclass(frozen=True)
class ChainInstance:
    v_next: object
    blue: frozenset
    red: frozenset
    x_side: frozenset
    y_side: frozenset
    orders: ChainOrders
    second_neighbors: frozenset
    # what the instance was built from, so the extension views can rebuild the bitset form
    source: tuple = field(default=(), compare=False, repr=False)


@dataclass(frozen=True)
class _Chain:
    """Bitset form of a chain instance in ordering positions."""

    v: int
    blue: int
    red: int
    x: int
    y: int
    n2: int
    x_order: list
    y_order: list


class DominationOracle:
    """Extension oracle over the (closed or open) neighborhood hypergraph of ``g``.

    ``g`` must be chordal bipartite and ``ordering`` a weak-simplicial
    elimination ordering of it.
    """

    def __init__(self, g: Graph, ordering: Sequence, mode: Mode = "closed", complete_pool: bool = True,
                 check_chain: bool = True):
        if mode not in ("closed", "open"):
            raise ValueError(f"unknown mode {mode!r}")
        self.g = g
        self.order = tuple(ordering)
        self.mode = mode
        self.complete_pool = complete_pool
        self.check_chain = check_chain
        pos = {v: j for j, v in enumerate(self.order)}
        nbr = []
        for v in self.order:
            m = 0
            for u in g.neighbors(v):
                m |= 1 << pos[u]
            nbr.append(m)
        self.nbr = nbr

    def edge_of(self, u: int) -> int:
        return self.nbr[u] | (1 << u) if self.mode == "closed" else self.nbr[u]

    def chain(self, i: int, delta: Sequence[int]) -> _Chain:
        v = i
        nv = self.nbr[v]
        alive = (1 << (i + 1)) - 1
        unhit = set(delta)
        # in open mode N(u) can close at v while u itself comes later
        scope = nv & alive if self.mode == "closed" else nv
        blue = 0
        for u in iter_bits(scope):
            if self.edge_of(u) in unhit:
                blue |= 1 << u
        union = 0
        for e in delta:
            union |= e
        # v lies in every unhit edge and so counts as red; it stays out of the chain
        red = union & ~blue
        near = nv & alive
        n2 = 0
        for u in iter_bits(scope):
            n2 |= self.nbr[u]
        n2 &= alive & ~near & ~(1 << v)
        x = (red | blue) & nv
        y = (red | blue) & ~nv & ~(1 << v)
        if y & ~n2:
            raise NotChainError("red vertices beyond distance two; ordering is not weak-simplicial")
        orders = chain_order_masks(self.nbr, x, y) if self.check_chain else ([], [])
        if orders is None:
            raise NotChainError(f"unhit part around position {v} is not a bipartite chain")
        return _Chain(v, blue, red, x, y, n2, orders[0], orders[1])

    def pool(self, ch: _Chain) -> list[int]:
        v = ch.v
        cands: dict[int, None] = {}
        if self.mode == "closed":
            cands[1 << v] = None
            if ch.blue:
                cands[ch.blue] = None
            reds = list(iter_bits(ch.red & ~(1 << v)))
            near_red = ch.red & self.nbr[v]
            for r in reds:
                cands[1 << r] = None
            for a, b in combinations(reds, 2):
                pair = 1 << a | 1 << b
                # at most one red neighbor of v and one distance-two vertex
                if popcount(pair & near_red) > 1 or popcount(pair & ch.n2) > 1:
                    continue
                cands[pair] = None
            for r in iter_bits(ch.n2 & ch.red):
                rest = ch.blue & ~self.nbr[r]
                cands[1 << r | rest] = None
                if self.complete_pool and not rest and popcount(ch.blue) > 1:
                    for b in iter_bits(ch.blue):
                        cands[1 << r | 1 << b] = None
        else:
            alive = (1 << (v + 1)) - 1
            ground = list(iter_bits((1 << v | self.nbr[v] | ch.n2) & alive))
            for a in ground:
                cands[1 << a] = None
            for a, b in combinations(ground, 2):
                cands[1 << a | 1 << b] = None
        return list(cands)

    def __call__(self, ctx: OrderedHypergraph, t_star: int, i: int, delta: list[int],
                 counter: WorkCounter | None = None) -> list[int]:
        if not delta:
            raise EmptyDelta("no unhit edges; the partial solution is its own child")
        ch = self.chain(i, delta)
        pool = self.pool(ch)
        if counter is not None:
            counter.record_pool(len(pool))
            counter.validations += len(pool)
        return [z for z in pool if is_minimal_transversal_mask(z, delta)]


def _prepare(g: Graph, mode: Mode):
    if mode == "open":
        h = open_neighborhood_hypergraph(g)
    else:
        h = closed_neighborhood_hypergraph(g)
    ordering = weak_simplicial_ordering(g) if mode == "closed" else side_elimination_ordering(g)
    if ordering is None:
        raise NotChordalBipartite("graph admits no weak-simplicial elimination ordering")
    ctx = OrderedHypergraph(h, ordering.order)
    return ctx, DominationOracle(g, ordering.order, mode)


def enumerate_mds(g: Graph, counter: WorkCounter | None = None) -> Iterator[frozenset]:
    """Minimal dominating sets of a chordal bipartite graph, each exactly once."""
    ctx, oracle = _prepare(g, "closed")
    for t in enumerate_masks(ctx, oracle, counter):
        yield ctx.ids(t)


def enumerate_mtds(g: Graph, counter: WorkCounter | None = None) -> Iterator[frozenset]:
    """Minimal total dominating sets of a chordal bipartite graph without isolated vertices."""
    for i, v in enumerate(g.vertices):
        if not g.nbr_mask(i):
            raise IsolatedVertex(v)
    ctx, oracle = _prepare(g, "open")
    for t in enumerate_masks(ctx, oracle, counter):
        yield ctx.ids(t)


# -- id-level views used by tests, reports and the CLI ---------------------------


def _ctx_for(g: Graph, ordering: Sequence, mode: Mode) -> OrderedHypergraph:
    h = closed_neighborhood_hypergraph(g) if mode == "closed" else open_neighborhood_hypergraph(g)
    return OrderedHypergraph(h, ordering)


def build_chain_instance(g: Graph, ordering: Sequence, t_star, i: int, mode: Mode = "closed"):
    """Chain instance around ``v_{i+1}`` and the unhit edges it was built from."""
    ctx = _ctx_for(g, ordering, mode)
    tm = ctx.mask(t_star)
    ctx.check_index(i)
    delta = ctx.delta(tm, i)
    oracle = DominationOracle(g, ordering, mode)
    ch = oracle.chain(i, delta)
    ids = ctx.ids
    inst = ChainInstance(
        v_next=ctx.order[i],
        blue=ids(ch.blue),
        red=ids(ch.red),
        x_side=ids(ch.x),
        y_side=ids(ch.y),
        orders=ChainOrders(tuple(ctx.order[j] for j in ch.x_order), tuple(ctx.order[j] for j in ch.y_order)),
        second_neighbors=ids(ch.n2),
        source=(ctx, oracle, tm, i),
    )
    return inst, DeltaFamily(frozenset(ids(e) for e in delta))


def _extensions(ci: ChainInstance, delta: DeltaFamily, mode: Mode) -> set[frozenset]:
    if not delta.edges:
        raise EmptyDelta("no unhit edges; the partial solution is its own child")
    if not ci.source:
        raise ValueError("chain instance was not produced by build_chain_instance")
    ctx, oracle, tm, i = ci.source
    if oracle.mode != mode:
        raise ValueError(f"chain instance was built for {oracle.mode} neighborhoods")
    edges = [ctx.mask(e) for e in delta.edges]
    return {ctx.ids(z) for z in oracle(ctx, tm, i, edges)}


def mds_extensions(ci: ChainInstance, delta: DeltaFamily) -> set[frozenset]:
    """Minimal transversals of the unhit closed neighborhoods, from the candidate pool."""
    return _extensions(ci, delta, "closed")


def tds_extensions(ci: ChainInstance, delta: DeltaFamily) -> set[frozenset]:
    """Minimal transversals of the unhit open neighborhoods, from the candidate pool."""
    return _extensions(ci, delta, "open")


def classify_mds_extension(z: int, ch: _Chain, nbr: Sequence[int]) -> int | None:
    """Which shape of the four-case characterization a closed-mode extension has.

    Cases split on where ``z`` lives: ``{v}`` (1), inside blue (2), inside red
    (3), meeting both (4).  Returns None when ``z`` lies in its case without
    having the shape listed for it (``z == blue``, ``|z| <= 2``,
    ``z == {r} | (blue - N(r))`` respectively).
    """
    if z == 1 << ch.v:
        return 1
    if z & ~(ch.blue | ch.red):
        return None
    if not z & ch.red:
        return 2 if z == ch.blue else None
    if not z & ch.blue:
        return 3 if popcount(z) <= 2 else None
    for r in iter_bits(z & ch.n2):
        if z == 1 << r | (ch.blue & ~nbr[r]):
            return 4
    return None


def red_part_holds(z: int, ch: _Chain, nbr: Sequence[int]) -> bool:
    """At most one red neighbor of ``v`` and at most one distance-two vertex in ``z``."""
    return popcount(z & ch.red & nbr[ch.v]) <= 1 and popcount(z & ch.n2) <= 1


def harvest_nodes(g: Graph, mode: Mode = "closed", limit: int | None = None):
    """Yield ``(ctx, oracle, t_star, i, delta)`` for every non-trivial oracle call of a real run."""
    ctx, oracle = _prepare(g, mode)
    seen = []

    def recording(c, t_star, i, delta, counter):
        seen.append((t_star, i, list(delta)))
        return oracle(c, t_star, i, delta, counter)

    count = 0
    for _ in enumerate_masks(ctx, recording):
        while seen:
            t_star, i, delta = seen.pop(0)
            yield ctx, oracle, t_star, i, delta
            count += 1
            if limit is not None and count >= limit:
                return
    for t_star, i, delta in seen:
        if limit is not None and count >= limit:
            return
        yield ctx, oracle, t_star, i, delta
        count += 1
