"""Acceptance criteria, one test each, each printing a single PASS/FAIL line.

Run with ``pytest tests/test_acceptance.py -v -s``; the lines are also
collected into an "acceptance criteria" section at the end of any pytest run.
"""

from __future__ import annotations

import os
import random
import subprocess
import sys
import time

import pytest

from domenum.bench import growth_flags, run_bench
from domenum.cdom import enumerate_mcds
from domenum.extensions import classify_mds_extension, enumerate_mds, enumerate_mtds, harvest_nodes, red_part_holds
from domenum.generate import complete_bipartite, connected_labeled_bipartite, random_chordal_bipartite
from domenum.graph import Graph, Hypergraph, sperner_minimize
from domenum.oracles import (
    brute_conformality,
    brute_mcds,
    brute_mds,
    brute_mtds,
    brute_separators,
    brute_transversals,
)
from domenum.recognition import is_chordal_bipartite
from domenum.reductions import (
    MisInstance,
    build_mis_reduction,
    build_transversal_reduction,
    mcds_to_transversal,
    transversal_to_mcds,
    verify_mis_children,
    verify_separator_structure,
)
from domenum.separators import (
    check_complete_bipartite_separator,
    close_components,
    close_neighbor_holds,
    conformality,
    minimal_separators,
)
from domenum.sequential import brute_extension_masks

from .conftest import ACCEPTANCE_LINES

EXHAUSTIVE_MAX_N = 7
GENERATED = 200
GENERATED_MAX_N = 14
CDS_MAX_N = 13
BENCH_SIZES = (10, 20, 40, 80)
HARVEST_PER_GRAPH = 12
MIN_HARVESTED = 500


def record(k: int, ok: bool, detail: str) -> None:
    line = f"CRITERION {k}: {'PASS' if ok else 'FAIL'} - {detail}"
    ACCEPTANCE_LINES.append(line)
    print(line)


@pytest.fixture(scope="session")
def exhaustive():
    """Every connected chordal bipartite graph on labeled vertices v1..vn, n <= 7."""
    out = []
    for n in range(1, EXHAUSTIVE_MAX_N + 1):
        out.extend(g for g in connected_labeled_bipartite(n) if is_chordal_bipartite(g))
    return out


@pytest.fixture(scope="session")
def generated():
    rng = random.Random(20240)
    out = []
    for s in range(GENERATED):
        n = rng.randint(2, GENERATED_MAX_N)
        density = rng.choice([0.15, 0.3, 0.5, 0.8])
        out.append(random_chordal_bipartite(n, density, seed=s, connected=True))
    return out


@pytest.fixture(scope="session")
def conformality_corpus():
    rng = random.Random(606)
    return [random_chordal_bipartite(rng.randint(2, 12), rng.choice([0.2, 0.4, 0.7]), seed=1000 + s, connected=True)
            for s in range(100)]


def _equivalence(graphs, enum, oracle):
    mismatches = 0
    for g in graphs:
        got = list(enum(g))
        if len(got) != len(set(got)) or set(got) != oracle(g):
            mismatches += 1
    return mismatches


def test_criterion_1_mds_oracle_equivalence(exhaustive, generated):
    start = time.perf_counter()
    bad = _equivalence(exhaustive, enumerate_mds, brute_mds) + _equivalence(generated, enumerate_mds, brute_mds)
    elapsed = time.perf_counter() - start
    ok = bad == 0 and elapsed <= 600
    record(1, ok, f"{len(exhaustive)} exhaustive + {len(generated)} generated graphs, "
                  f"{bad} mismatches, {elapsed:.0f}s")
    assert ok


def test_criterion_2_tds_oracle_equivalence(exhaustive, generated):
    corpus = [g for g in exhaustive + generated if g.n >= 2]
    bad = _equivalence(corpus, enumerate_mtds, brute_mtds)
    record(2, bad == 0, f"{len(corpus)} isolate-free graphs, {bad} mismatches")
    assert bad == 0


def test_criterion_3_cds_and_separator_identity(exhaustive, generated):
    corpus = [g for g in exhaustive + generated if g.n <= CDS_MAX_N]
    bad = _equivalence(corpus, enumerate_mcds, brute_mcds)
    identity_bad = 0
    checked = 0
    for g in corpus:
        seps = brute_separators(g)
        if not seps:
            continue  # no separator: complete graph, handled by the universal-vertex rule
        checked += 1
        if brute_mcds(g) != brute_transversals(Hypergraph(g.vertices, seps)):
            identity_bad += 1
    ok = bad == 0 and identity_bad == 0
    record(3, ok, f"{len(corpus)} connected graphs, {bad} mismatches; "
                  f"mcds = Tr(S(G)) by brute oracles on {checked}, {identity_bad} failures")
    assert ok


@pytest.mark.xfail(strict=True, reason="the four listed extension shapes miss {r, b} when r sees all blue vertices")
def test_criterion_4_extension_oracle(generated):
    nodes = {"closed": 0, "open": 0}
    inexact = 0
    unclassified = 0
    extensions = 0
    red_part_bad = 0
    for g in generated:
        for mode in ("closed", "open"):
            for ctx, oracle, t_star, i, delta in harvest_nodes(g, mode, limit=HARVEST_PER_GRAPH):
                nodes[mode] += 1
                got = set(oracle(ctx, t_star, i, delta))
                if got != set(brute_extension_masks(ctx, t_star, i, delta)):
                    inexact += 1
                if mode != "closed":
                    continue
                ch = oracle.chain(i, delta)
                for z in got:
                    extensions += 1
                    if classify_mds_extension(z, ch, oracle.nbr) is None:
                        unclassified += 1
                    if not red_part_holds(z, ch, oracle.nbr):
                        red_part_bad += 1
    total = nodes["closed"] + nodes["open"]
    ok = total >= MIN_HARVESTED and inexact == 0 and unclassified == 0 and red_part_bad == 0
    record(4, ok, f"{total} nodes ({nodes['closed']} closed, {nodes['open']} open), {inexact} inexact; "
                  f"{unclassified} of {extensions} closed extensions outside the four cases; "
                  f"{red_part_bad} red-part violations")
    assert ok


def test_criterion_5_delay_evidence():
    pool_ok = True
    flagged = []
    worst = {}
    for kind in ("mds", "tds"):
        for family in ("k2n", "generated"):
            rows = run_bench(kind, family, BENCH_SIZES)
            pool_ok &= all(r.max_pool <= r.pool_bound for r in rows)
            worst[(kind, family)] = max(r.max_pool / r.pool_bound for r in rows)
            flagged += [f"{kind}/{family}@{rows[j + 1].size}" for j, f in enumerate(growth_flags(rows)) if f]
    ratio = max(worst.values())
    record(5, pool_ok, f"pool <= n^2+n+2 at every node (largest pool/bound {ratio:.3f}); "
                       f"delay/n^4 growth flags: {', '.join(flagged) or 'none'}")
    assert pool_ok


def test_criterion_6_conformality(conformality_corpus):
    over = 0
    disagree = 0
    worst = 0
    for g in conformality_corpus:
        h = minimal_separators(g).hypergraph(g)
        c = brute_conformality(h, 6)
        if c is None or c > 5:
            over += 1
        else:
            worst = max(worst, c)
        if conformality(h, 6) != c:
            disagree += 1
    rng = random.Random(66)
    for _ in range(200):
        n = rng.randint(1, 10)
        names = [f"u{i}" for i in range(n)]
        edges = [rng.sample(names, rng.randint(1, n)) for _ in range(rng.randint(0, 7))]
        h = sperner_minimize(Hypergraph(names, edges))
        if conformality(h, 6) != brute_conformality(h, 6):
            disagree += 1
    ok = over == 0 and disagree == 0
    record(6, ok, f"{len(conformality_corpus)} graphs, largest conformality {worst}, {over} above 5; "
                  f"{disagree} disagreements over those and 200 random hypergraphs")
    assert ok


def test_criterion_7_separator_properties(exhaustive, generated, conformality_corpus):
    bench_graphs = [complete_bipartite(2, n) for n in BENCH_SIZES]
    bench_graphs += [random_chordal_bipartite(n, 0.3, 0, connected=True) for n in BENCH_SIZES]
    corpus = exhaustive + generated + conformality_corpus + bench_graphs
    separators = 0
    failures = 0
    brute_bad = 0
    for g in corpus:
        seps = minimal_separators(g)
        for s in seps:
            separators += 1
            if not (check_complete_bipartite_separator(g, s) and len(close_components(g, s)) >= 2
                    and close_neighbor_holds(g, s)):
                failures += 1
        if g.n <= 10 and seps.as_set() != brute_separators(g):
            brute_bad += 1
    ok = failures == 0 and brute_bad == 0
    record(7, ok, f"{len(corpus)} graphs, {separators} separators, {failures} property failures; "
                  f"{brute_bad} S(G) mismatches against brute for n <= 10")
    assert ok


def _mis_instance(rng: random.Random) -> MisInstance:
    n = rng.randint(1, 6)
    k = rng.randint(1, min(3, n))
    names = [f"g{i}" for i in range(n)]
    color = [i if i < k else rng.randrange(k) for i in range(n)]
    edges = [(names[i], names[j]) for i in range(n) for j in range(i + 1, n)
             if color[i] != color[j] and rng.random() < 0.4]
    return MisInstance.build(Graph(names, edges), [[names[i] for i in range(n) if color[i] == c] for c in range(k)])


@pytest.mark.xfail(strict=True, reason="open neighborhoods: N(beta) = {alpha} closes early and forces alpha into every child")
def test_criterion_8_mis_reduction_children():
    rng = random.Random(8)
    instances = [_mis_instance(rng) for _ in range(50)]
    passed = {"closed": 0, "open": 0}
    for inst in instances:
        red = build_mis_reduction(inst)
        for mode in passed:
            passed[mode] += verify_mis_children(red, mode).ok
    ok = passed["closed"] == passed["open"] == len(instances)
    record(8, ok, f"closed {passed['closed']}/{len(instances)}, open {passed['open']}/{len(instances)} "
                  f"instances with tstar certified and children = multicolored IS + alpha")
    assert ok


def test_criterion_9_transversal_reduction():
    rng = random.Random(9)
    done = 0
    structure_bad = 0
    bijection_bad = 0
    while done < 50:
        n = rng.randint(1, 7)
        names = [f"u{i}" for i in range(1, n + 1)]
        edges = [rng.sample(names, rng.randint(1, n)) for _ in range(rng.randint(1, 5))]
        h = sperner_minimize(Hypergraph(names, edges))
        covered = sorted(set().union(*h.edges))
        h = Hypergraph(covered, h.edges)
        done += 1
        red = build_transversal_reduction(h)
        if not verify_separator_structure(red).ok:
            structure_bad += 1
        mcds = list(enumerate_mcds(red.graph))
        images = [mcds_to_transversal(t, red) for t in mcds]
        if (len(set(images)) != len(mcds) or set(images) != brute_transversals(h)
                or {transversal_to_mcds(t, red) for t in images} != set(mcds)):
            bijection_bad += 1
    ok = structure_bad == 0 and bijection_bad == 0
    record(9, ok, f"{done} Sperner hypergraphs, {structure_bad} separator-family mismatches, "
                  f"{bijection_bad} bijection failures")
    assert ok


HAND_EXAMPLES = {
    ("p4", "mds"): {frozenset("bc"), frozenset("ac"), frozenset("bd"), frozenset("ad")},
    ("p4", "tds"): {frozenset("bc")},
    ("p4", "cds"): {frozenset("bc")},
    ("c4", "mds"): None,  # six sets, compared with brute_mds
    # opposite corners leave each other undominated, so only the four edges are total
    ("c4", "tds"): {frozenset(p) for p in (("v1", "v2"), ("v2", "v3"), ("v3", "v4"), ("v4", "v1"))},
    ("c4", "cds"): {frozenset(p) for p in (("v1", "v2"), ("v2", "v3"), ("v3", "v4"), ("v4", "v1"))},
}


def _cli_bytes(path: str, kind: str, seed: str) -> bytes:
    env = dict(os.environ, PYTHONHASHSEED=seed)
    return subprocess.run([sys.executable, "-m", "domenum", "enumerate", kind, "-i", path],
                          capture_output=True, check=True, env=env).stdout


def test_criterion_10_hand_examples(tmp_path):
    graphs = {
        "p4": ("a b\nb c\nc d\n", Graph("abcd", [("a", "b"), ("b", "c"), ("c", "d")])),
        "c4": ("v1 v2\nv2 v3\nv3 v4\nv4 v1\n",
               Graph(["v1", "v2", "v3", "v4"], [("v1", "v2"), ("v2", "v3"), ("v3", "v4"), ("v4", "v1")])),
    }
    enums = {"mds": enumerate_mds, "tds": enumerate_mtds, "cds": enumerate_mcds}
    wrong = []
    unstable = []
    for name, (text, g) in graphs.items():
        path = tmp_path / f"{name}.edges"
        path.write_text(text)
        for kind, enum in enums.items():
            expected = HAND_EXAMPLES[(name, kind)]
            if expected is None:
                expected = brute_mds(g)
                if len(expected) != 6:
                    wrong.append(f"{name}/{kind}")
            if set(enum(g)) != expected:
                wrong.append(f"{name}/{kind}")
            runs = {_cli_bytes(str(path), kind, seed) for seed in ("0", "1", "2")}
            parsed = {frozenset(line.split()) for line in next(iter(runs)).decode().splitlines()}
            if len(runs) != 1:
                unstable.append(f"{name}/{kind}")
            if parsed != expected:
                wrong.append(f"{name}/{kind} (cli)")
    ok = not wrong and not unstable
    record(10, ok, f"P4 and C4 for mds/tds/cds; wrong: {', '.join(wrong) or 'none'}; "
                   f"unstable across hash seeds: {', '.join(unstable) or 'none'}")
    assert ok


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-v", "-s"]))
