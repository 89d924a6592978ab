"""Instance generators for two hardness constructions, with checks of their claimed structure.

The first turns a multicolored independent set instance ``(G, V_1..V_k)``
into a bipartite graph ``H``, an ordering of ``H`` ending in ``alpha, beta``
and a partial solution ``T*`` one step before ``alpha``.  The children of
``T*`` are meant to be ``T* + {alpha}`` plus one child per multicolored
independent set of ``G``.

The second turns a Sperner hypergraph into a bipartite graph whose minimal
separators are the hyperedges (as neighborhoods of edge vertices) plus one
cut vertex, so its minimal connected dominating sets are in bijection with
the minimal transversals.

Gadget vertices are named ``<role>:<index>:<owner>``; original vertices keep
their ids.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Literal

from .errors import EmptyEdge, InvalidPartition, MissingVStar, NotSperner
from .graph import (
    Graph,
    Hypergraph,
    bipartition,
    closed_neighborhood_hypergraph,
    open_neighborhood_hypergraph,
)
from .oracles import brute_separators, multicolored_independent_sets
from .sequential import OrderedHypergraph, WorkCounter, brute_extension_masks, children_masks

ALPHA = "alpha:0:-"
BETA = "beta:0:-"
V_STAR = "vstar:0:-"
V_PRIME = "vprime:0:-"


@dataclass(frozen=True)
class MisInstance:
    g: Graph
    classes: tuple  # tuple of frozensets partitioning V(g)

    def __post_init__(self):
        seen: set = set()
        for c in self.classes:
            if not c:
                raise InvalidPartition("empty color class")
            if seen & set(c):
                raise InvalidPartition("color classes overlap")
            seen |= set(c)
            if not self.g.is_independent_mask(self.g.mask(c)):
                raise InvalidPartition("a color class is not independent")
        if seen != set(self.g.vertices):
            raise InvalidPartition("color classes do not cover the vertex set")

    @classmethod
    def build(cls, g: Graph, classes: Iterable[Iterable]) -> "MisInstance":
        try:
            return cls(g, tuple(frozenset(c) for c in classes))
        except KeyError as exc:
            raise InvalidPartition(f"unknown vertex in classes: {exc}") from exc


@dataclass(frozen=True)
class MisReduction:
    h: Graph
    ordering: tuple
    t_star: frozenset
    tagging: dict = field(compare=False)  # vertex id -> role
    instance: MisInstance | None = field(default=None, compare=False)


def build_mis_reduction(inst: MisInstance) -> MisReduction:
    g = inst.g
    verts: list = list(g.vertices)
    edges: list[tuple] = []
    tstar: list = []
    tag = {v: "original" for v in g.vertices}

    def add(name, role):
        verts.append(name)
        tag[name] = role
        return name

    c_ids = []
    for i, cls in enumerate(inst.classes, 1):
        owner = f"V{i}"
        c = add(f"c:{i}:{owner}", "colorClass")
        c_ids.append(c)
        edges.extend((c, v) for v in cls)
        xs = [add(f"x:{j}:{owner}", f"x{j}") for j in range(1, 5)]
        edges.extend(zip(xs, xs[1:]))
        edges.append((c, xs[3]))
        tstar += [xs[1], xs[2]]
    for u, v in g.edges():
        owner = f"{u}-{v}"
        y = [add(f"y:{j}:{owner}", f"y{j}") for j in range(1, 6)]
        edges += [(y[0], y[1]), (y[1], y[2]), (y[2], y[3]), (y[2], y[4]), (y[3], u), (y[4], v)]
        tstar += [y[1], y[2]]
    for v in g.vertices:
        z = [add(f"z:{j}:{v}", f"z{j}") for j in range(1, 5)]
        edges += [(z[0], z[1]), (z[1], z[2]), (z[2], z[3]), (v, z[2])]
        tstar += [z[1], z[2]]
    add(ALPHA, "alpha")
    add(BETA, "beta")
    edges.extend((ALPHA, c) for c in c_ids)
    edges.append((BETA, ALPHA))
    h = Graph(verts, edges)
    if not bipartition(h):
        raise AssertionError("reduction graph is not bipartite")
    prefix = sorted((v for v in verts if v not in (ALPHA, BETA)), key=str)
    return MisReduction(h, tuple(prefix) + (ALPHA, BETA), frozenset(tstar), tag, inst)


@dataclass(frozen=True)
class MisChildrenReport:
    mode: str
    t_star_ok: bool
    children: tuple  # child sets minus t_star, engine order
    multicolored: tuple  # multicolored independent sets of G
    alpha_child: bool

    @property
    def bodies_match(self) -> bool:
        others = {c for c in self.children if ALPHA not in c}
        return others == set(self.multicolored) and len(others) == len(self.children) - self.alpha_child

    @property
    def counts_match(self) -> bool:
        return len(self.children) == len(self.multicolored) + 1

    @property
    def ok(self) -> bool:
        return self.t_star_ok and self.alpha_child and self.counts_match and self.bodies_match


def verify_mis_children(red: MisReduction, mode: Literal["closed", "open"] = "closed") -> MisChildrenReport:
    """Run the engine, with the exhaustive extension oracle, one step before ``alpha``."""
    hyp = closed_neighborhood_hypergraph(red.h) if mode == "closed" else open_neighborhood_hypergraph(red.h)
    ctx = OrderedHypergraph(hyp, red.ordering)
    i = ctx.n - 2
    tm = ctx.mask(red.t_star)
    ok = ctx.is_partial_solution(tm, i)
    kids = []
    if ok:
        for t in children_masks(ctx, tm, i, brute_extension_masks, WorkCounter()):
            kids.append(frozenset(ctx.ids(t & ~tm)))
    inst = red.instance
    mis = tuple(multicolored_independent_sets(inst.g, inst.classes)) if inst is not None else ()
    return MisChildrenReport(mode, ok, tuple(kids), mis, frozenset([ALPHA]) in kids)


# -- transversal hypergraph to connected domination --------------------------------


@dataclass(frozen=True)
class TransversalReduction:
    graph: Graph
    roles: dict  # vertex id -> ("vertex", u) | ("edge", j) | ("vprime", None) | ("vstar", None)
    edge_vertices: tuple  # e_1..e_m in hyperedge order


def build_transversal_reduction(h: Hypergraph) -> TransversalReduction:
    edges = [frozenset(e) for e in h.edges]
    if any(not e for e in edges):
        raise EmptyEdge("hypergraph has an empty edge")
    if not h.is_sperner():
        raise NotSperner("some hyperedge contains another")
    roles: dict = {}
    vid = {}
    for i, u in enumerate(h.vertices, 1):
        vid[u] = f"v:{i}:{u}"
        roles[vid[u]] = ("vertex", u)
    eids = []
    gedges = []
    for j, e in enumerate(edges, 1):
        name = f"e:{j}:E{j}"
        eids.append(name)
        roles[name] = ("edge", j)
        gedges.extend((vid[u], name) for u in e)
    roles[V_PRIME] = ("vprime", None)
    roles[V_STAR] = ("vstar", None)
    gedges.append((V_PRIME, V_STAR))
    gedges.extend((V_STAR, vid[u]) for u in h.vertices)
    g = Graph(list(roles), gedges)
    return TransversalReduction(g, roles, tuple(eids))


@dataclass(frozen=True)
class SeparatorReport:
    expected: frozenset
    actual: frozenset

    @property
    def ok(self) -> bool:
        return self.expected == self.actual

    @property
    def missing(self) -> frozenset:
        return self.expected - self.actual

    @property
    def extra(self) -> frozenset:
        return self.actual - self.expected


def expected_separators(red: TransversalReduction) -> frozenset:
    g = red.graph
    return frozenset([frozenset([V_STAR])] + [g.neighbors(e) for e in red.edge_vertices])


def verify_separator_structure(red: TransversalReduction) -> SeparatorReport:
    """Compare the exhaustive minimal separators with the neighborhoods of edge vertices plus ``{v*}``."""
    return SeparatorReport(expected_separators(red), frozenset(brute_separators(red.graph)))


def mcds_to_transversal(t_g: Iterable, red: TransversalReduction) -> frozenset:
    t_g = frozenset(t_g)
    if V_STAR not in t_g:
        raise MissingVStar("every minimal connected dominating set here contains v*")
    return frozenset(red.roles[v][1] for v in t_g if red.roles[v][0] == "vertex")


def transversal_to_mcds(t_h: Iterable, red: TransversalReduction) -> frozenset:
    """Inverse of :func:`mcds_to_transversal`."""
    by_u = {payload: v for v, (role, payload) in red.roles.items() if role == "vertex"}
    return frozenset([V_STAR] + [by_u[u] for u in t_h])


def ordering_ok(red: MisReduction) -> bool:
    return red.ordering[-2:] == (ALPHA, BETA) and sorted(red.ordering, key=str) == sorted(red.h.vertices, key=str)


def reduction_vertex_count(n: int, m: int, k: int) -> int:
    """Original vertices, four gadget vertices per vertex, five per edge, five per class, alpha and beta."""
    return n + 4 * n + 5 * m + 5 * k + 2

