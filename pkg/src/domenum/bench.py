"""Delay measurements in machine-independent work units.

Work is counted as tree nodes expanded plus candidate validations (for the
dualization route, partial transversals produced).  The delay before a
solution is the work spent since the previous one; the last row entry also
accounts for the work after the final solution.
"""

from __future__ import annotations

import csv
from dataclasses import asdict, dataclass
from typing import Callable, Iterable, Iterator, TextIO

from .cdom import enumerate_mcds
from .extensions import enumerate_mds, enumerate_mtds
from .generate import complete_bipartite, path_graph, random_chordal_bipartite
from .graph import Graph
from .sequential import WorkCounter

FAMILIES = ("k2n", "generated", "path")
KINDS = ("mds", "tds", "cds")


@dataclass
class DelayRow:
    kind: str
    family: str
    size: int
    vertices: int
    solutions: int
    truncated: bool
    max_delay: int
    mean_delay: float
    max_pool: int
    pool_bound: int
    max_delay_over_n4: float
    total_work: int
    first_solution_work: int


def family_graph(family: str, size: int, seed: int = 0, density: float = 0.3) -> Graph:
    if family == "k2n":
        return complete_bipartite(2, size)
    if family == "generated":
        return random_chordal_bipartite(size, density, seed, connected=True)
    if family == "path":
        return path_graph(size)
    raise ValueError(f"unknown family {family!r}; expected one of {FAMILIES}")


def _stream(kind: str, g: Graph, counter: WorkCounter) -> Iterator[frozenset]:
    if kind == "mds":
        return enumerate_mds(g, counter)
    if kind == "tds":
        return enumerate_mtds(g, counter)
    if kind == "cds":
        return enumerate_mcds(g, counter)
    raise ValueError(f"unknown kind {kind!r}; expected one of {KINDS}")


def measure(kind: str, g: Graph, max_solutions: int | None = None,
            on_solution: Callable[[frozenset, int], None] | None = None) -> tuple[list[int], WorkCounter, bool]:
    """Per-solution delays, the final counter and whether the run was cut short."""
    counter = WorkCounter()
    delays = []
    last = 0
    truncated = False
    for sol in _stream(kind, g, counter):
        now = counter.total
        delays.append(now - last)
        last = now
        if on_solution is not None:
            on_solution(sol, now)
        if max_solutions is not None and len(delays) >= max_solutions:
            truncated = True
            break
    if not truncated and counter.total > last:
        delays.append(counter.total - last)
    return delays, counter, truncated


def delay_row(kind: str, family: str, size: int, g: Graph, max_solutions: int | None = None) -> DelayRow:
    cumulative: list[int] = []
    delays, counter, truncated = measure(kind, g, max_solutions, lambda _s, w: cumulative.append(w))
    n = g.n
    worst = max(delays, default=0)
    return DelayRow(
        kind=kind,
        family=family,
        size=size,
        vertices=n,
        solutions=len(cumulative),
        truncated=truncated,
        max_delay=worst,
        mean_delay=round(sum(delays) / len(delays), 3) if delays else 0.0,
        max_pool=counter.pool_max,
        pool_bound=n * n + n + 2,
        max_delay_over_n4=worst / n**4 if n else 0.0,
        total_work=counter.total,
        first_solution_work=cumulative[0] if cumulative else 0,
    )


def run_bench(kind: str, family: str, sizes: Iterable[int], seed: int = 0, density: float = 0.3,
              max_solutions: int | None = 2000) -> list[DelayRow]:
    return [delay_row(kind, family, s, family_graph(family, s, seed, density), max_solutions) for s in sizes]


def growth_flags(rows: list[DelayRow], factor: float = 10.0) -> list[bool]:
    """For consecutive sizes, whether max delay over n^4 grew by more than ``factor``."""
    flags = []
    for prev, cur in zip(rows, rows[1:]):
        flags.append(prev.max_delay_over_n4 > 0 and cur.max_delay_over_n4 > factor * prev.max_delay_over_n4)
    return flags


def write_csv(rows: list[DelayRow], stream: TextIO) -> None:
    fields = list(DelayRow.__dataclass_fields__)
    writer = csv.DictWriter(stream, fieldnames=fields, lineterminator="\n")
    writer.writeheader()
    for row in rows:
        d = asdict(row)
        d["max_delay_over_n4"] = f"{row.max_delay_over_n4:.6g}"
        writer.writerow(d)
