"""Random chordal bipartite instances and small named graph families."""

from __future__ import annotations

import random
from typing import Iterator

from .errors import GenerationFailed
from .graph import Graph, iter_bits, popcount
from .recognition import is_chordal_bipartite


def _attachable(nbr: list[int], s: int) -> bool:
    """``s`` independent with pairwise nested neighborhoods."""
    members = list(iter_bits(s))
    if any(nbr[x] & s for x in members):
        return False
    chain = sorted((nbr[x] for x in members), key=popcount)
    return all(a & ~b == 0 for a, b in zip(chain, chain[1:]))


def random_chordal_bipartite(n: int, density: float, seed: int, connected: bool = False,
                             retries: int = 30, prefix: str = "v") -> Graph:
    """Grow a graph vertex by vertex so that each new vertex is weak-simplicial on arrival.

    Every earlier vertex is proposed as a neighbor with probability
    ``density``; proposals failing the independence/nesting test are redrawn
    up to ``retries`` times, after which a sparser set is built greedily.
    The result is certified by recognition before it is returned.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    if not 0.0 <= density <= 1.0:
        raise ValueError("density must lie in [0, 1]")
    rng = random.Random(seed)
    nbr = [0] * n
    for i in range(1, n):
        chosen = None
        for _ in range(retries):
            cand = 0
            for j in range(i):
                if rng.random() < density:
                    cand |= 1 << j
            if _attachable(nbr, cand):
                chosen = cand
                break
        if chosen is None:
            chosen = 0
            order = list(range(i))
            rng.shuffle(order)
            for j in order:
                if rng.random() < density and _attachable(nbr, chosen | 1 << j):
                    chosen |= 1 << j
        if connected and not chosen:
            chosen = 1 << rng.randrange(i)
        nbr[i] = chosen
        for j in iter_bits(chosen):
            nbr[j] |= 1 << i
    names = [f"{prefix}{i + 1}" for i in range(n)]
    g = Graph(names, [(names[i], names[j]) for i in range(n) for j in iter_bits(nbr[i]) if j < i])
    if not is_chordal_bipartite(g):
        raise GenerationFailed(f"generated graph (n={n}, seed={seed}) failed recognition")
    return g


def path_graph(n: int, prefix: str = "v") -> Graph:
    names = [f"{prefix}{i + 1}" for i in range(n)]
    return Graph(names, zip(names, names[1:]))


def cycle_graph(n: int, prefix: str = "v") -> Graph:
    names = [f"{prefix}{i + 1}" for i in range(n)]
    return Graph(names, list(zip(names, names[1:])) + [(names[-1], names[0])])


def complete_bipartite(a: int, b: int) -> Graph:
    left = [f"a{i + 1}" for i in range(a)]
    right = [f"b{j + 1}" for j in range(b)]
    return Graph(left + right, [(u, w) for u in left for w in right])


def connected_labeled_bipartite(n: int, prefix: str = "v") -> Iterator[Graph]:
    """Every connected bipartite graph on the labeled vertex set ``v1..vn``, once each.

    A connected bipartite graph has exactly one 2-coloring with ``v1`` on the
    first side, so sweeping colorings that fix ``v1`` and then every edge set
    between the two sides meets each graph once.  Labeled graphs that are
    disconnected or not bipartite are not produced.
    """
    names = [f"{prefix}{i}" for i in range(1, n + 1)]
    if n == 1:
        yield Graph(names)
        return
    for coloring in range(1 << (n - 1)):
        side = [0] + [coloring >> (i - 1) & 1 for i in range(1, n)]
        a = [i for i in range(n) if side[i] == 0]
        b = [i for i in range(n) if side[i] == 1]
        if not b:
            continue
        pairs = [(x, y) for x in a for y in b]
        for pick in range(1 << len(pairs)):
            nbr = [0] * n
            for j in iter_bits(pick):
                x, y = pairs[j]
                nbr[x] |= 1 << y
                nbr[y] |= 1 << x
            if any(m == 0 for m in nbr):
                continue
            seen, frontier = 1, 1
            while frontier:
                grow = 0
                for v in iter_bits(frontier):
                    grow |= nbr[v]
                frontier = grow & ~seen
                seen |= grow
            if seen == (1 << n) - 1:
                yield Graph._from_masks(names, nbr)
