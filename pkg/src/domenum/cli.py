"""Command-line entry point.

Exit codes: 0 success, 1 a requested check failed, 2 recognition failure,
3 input/output problem, 4 violated precondition.
"""

from __future__ import annotations

import argparse
import sys
from typing import Sequence

from . import bench as bench_mod
from .cdom import enumerate_mcds
from .errors import DomEnumError, NotChordalBipartite, ParseError
from .extensions import enumerate_mds, enumerate_mtds
from .generate import random_chordal_bipartite
from .graph import Hypergraph, bipartition, sort_ids
from .io import (
    format_edge_list,
    format_hypergraph,
    parse_classes,
    parse_edge_list,
    parse_hypergraph,
    read_text,
    write_solution,
)
from .oracles import brute_mcds, brute_mds, brute_mtds, has_long_induced_cycle
from .recognition import side_elimination_ordering, weak_simplicial_ordering
from .reductions import (
    MisInstance,
    build_mis_reduction,
    build_transversal_reduction,
    verify_mis_children,
    verify_separator_structure,
)
from .separators import ab_minimal_separators, conformality, minimal_separators
from .sequential import WorkCounter

EXIT_OK, EXIT_CHECK, EXIT_RECOGNITION, EXIT_IO, EXIT_PRECONDITION = 0, 1, 2, 3, 4

ENUMERATORS = {"mds": enumerate_mds, "tds": enumerate_mtds, "cds": enumerate_mcds}
ORACLES = {"mds": brute_mds, "tds": brute_mtds, "cds": brute_mcds}


class RecognitionFailure(Exception):
    pass


def _graph(path: str):
    return parse_edge_list(read_text(path))


def _out(args):
    if getattr(args, "output", None) and args.output != "-":
        fh = open(args.output, "w", encoding="utf-8")
        return fh, True
    return sys.stdout, False


def cmd_recognize(args) -> int:
    g = _graph(args.input)
    order = weak_simplicial_ordering(g)
    if order is not None:
        print("chordal-bipartite")
        print(" ".join(map(str, order)))
        return EXIT_OK
    bp = bipartition(g)
    if not bp:
        print("not-bipartite odd-cycle: " + " ".join(map(str, bp.witness)))
    else:
        print("not-chordal-bipartite")
        if g.n <= 14:
            cyc = has_long_induced_cycle(g, 6)
            if cyc:
                print("induced-cycle: " + " ".join(map(str, cyc)))
    return EXIT_RECOGNITION


def cmd_order(args) -> int:
    g = _graph(args.input)
    order = weak_simplicial_ordering(g) if args.kind == "weak-simplicial" else side_elimination_ordering(g)
    if order is None:
        raise RecognitionFailure("graph is not chordal bipartite")
    print(" ".join(map(str, order)))
    return EXIT_OK


def cmd_enumerate(args) -> int:
    g = _graph(args.input)
    counter = WorkCounter()
    stream = ENUMERATORS[args.kind](g, counter)
    out, close = _out(args)
    found = []
    last = 0
    try:
        for k, sol in enumerate(stream, 1):
            found.append(sol)
            if args.count_only:
                continue
            extra = {"cumulative_work": counter.total} if args.emit_timing else None
            write_solution(out, sol, args.format, index=k, work=counter.total - last, extra=extra)
            last = counter.total
        if args.count_only:
            out.write(f"{len(found)}\n")
    finally:
        if close:
            out.close()
    if args.check_oracle:
        expected = ORACLES[args.kind](g)
        got = set(found)
        if got != expected or len(found) != len(got):
            print(f"oracle check failed: {len(got)} distinct of {len(found)} emitted, "
                  f"{len(expected)} expected", file=sys.stderr)
            return EXIT_CHECK
        print(f"oracle check passed: {len(found)} solutions", file=sys.stderr)
    return EXIT_OK


def cmd_separators(args) -> int:
    g = _graph(args.input)
    if (args.a is None) != (args.b is None):
        raise DomEnumError("--a and --b go together")
    seps = ab_minimal_separators(g, args.a, args.b) if args.a is not None else minimal_separators(g)
    sys.stdout.write(format_hypergraph(Hypergraph(g.vertices, seps.separators)))
    return EXIT_OK


def cmd_conformality(args) -> int:
    if args.hypergraph:
        h = parse_hypergraph(read_text(args.input))
    else:
        g = _graph(args.input)
        h = minimal_separators(g).hypergraph(g)
    c = conformality(h, args.max)
    print(c if c is not None else "above-max")
    return EXIT_OK


def cmd_reduce(args) -> int:
    if args.target == "mis":
        if not args.classes:
            raise DomEnumError("reduce mis needs --classes")
        g = _graph(args.input)
        inst = MisInstance.build(g, parse_classes(read_text(args.classes)))
        red = build_mis_reduction(inst)
        print("# ordering: " + " ".join(red.ordering))
        print("# tstar: " + " ".join(sort_ids(red.t_star)))
        sys.stdout.write(format_edge_list(red.h))
        if args.verify:
            ok = True
            for mode in ("closed", "open"):
                rep = verify_mis_children(red, mode)
                ok &= rep.ok
                print(f"# verify {mode}: {'pass' if rep.ok else 'FAIL'} tstar_ok={rep.t_star_ok} "
                      f"children={len(rep.children)} multicolored={len(rep.multicolored)}")
            return EXIT_OK if ok else EXIT_CHECK
        return EXIT_OK
    h = parse_hypergraph(read_text(args.input))
    red = build_transversal_reduction(h)
    sys.stdout.write(format_edge_list(red.graph))
    if args.verify:
        rep = verify_separator_structure(red)
        print(f"# verify separators: {'pass' if rep.ok else 'FAIL'} "
              f"missing={len(rep.missing)} extra={len(rep.extra)}")
        return EXIT_OK if rep.ok else EXIT_CHECK
    return EXIT_OK


def cmd_verify(args) -> int:
    g = _graph(args.input)
    ok = True
    for kind in args.kinds.split(","):
        if kind not in ENUMERATORS:
            raise DomEnumError(f"unknown kind {kind!r}")
        try:
            got = list(ENUMERATORS[kind](g))
        except DomEnumError as exc:
            print(f"{kind}: skipped ({type(exc).__name__}: {exc})")
            continue
        expected = ORACLES[kind](g)
        passed = set(got) == expected and len(got) == len(expected)
        ok &= passed
        print(f"{kind}: {'pass' if passed else 'FAIL'} ({len(got)} emitted, {len(expected)} expected)")
    return EXIT_OK if ok else EXIT_CHECK


def cmd_generate(args) -> int:
    if args.n < 1 or not 0.0 <= args.density <= 1.0:
        raise DomEnumError("need n >= 1 and density in [0, 1]")
    g = random_chordal_bipartite(args.n, args.density, args.seed, connected=args.connected)
    out, close = _out(args)
    try:
        out.write(f"# vertices: {' '.join(g.vertices)}\n")
        out.write(format_edge_list(g))
    finally:
        if close:
            out.close()
    return EXIT_OK


def cmd_bench(args) -> int:
    sizes = [int(s) for s in args.sizes.split(",")]
    rows = bench_mod.run_bench(args.kind, args.family, sizes, args.seed, args.density, args.max_solutions)
    if args.csv:
        with open(args.csv, "w", encoding="utf-8", newline="") as fh:
            bench_mod.write_csv(rows, fh)
    else:
        bench_mod.write_csv(rows, sys.stdout)
    if args.figure:
        from .plot import plot_delays

        plot_delays(rows, args.figure)
    flags = bench_mod.growth_flags(rows)
    over = [r for r in rows if r.max_pool > r.pool_bound]
    for r in over:
        print(f"pool bound exceeded at {r.vertices} vertices: {r.max_pool} > {r.pool_bound}", file=sys.stderr)
    if any(flags):
        print("delay/n^4 grew more than tenfold between consecutive sizes", file=sys.stderr)
    return EXIT_CHECK if over else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="domenum", description="Domination enumeration on chordal bipartite graphs.")
    sub = p.add_subparsers(dest="command", required=True)

    def with_input(sp, required=False):
        sp.add_argument("-i", "--input", default="-", required=required, help="edge list file, '-' for stdin")
        return sp

    sp = with_input(sub.add_parser("recognize", help="test for chordal bipartiteness"))
    sp.set_defaults(func=cmd_recognize)

    sp = with_input(sub.add_parser("order", help="print an elimination ordering"))
    sp.add_argument("--kind", choices=("weak-simplicial", "side"), default="weak-simplicial")
    sp.set_defaults(func=cmd_order)

    sp = with_input(sub.add_parser("enumerate", help="list minimal (total, connected) dominating sets"))
    sp.add_argument("kind", choices=sorted(ENUMERATORS))
    sp.add_argument("--format", choices=("text", "json"), default="text")
    sp.add_argument("--count-only", action="store_true")
    sp.add_argument("--check-oracle", action="store_true", help="compare with exhaustive search (small inputs)")
    sp.add_argument("--emit-timing", action="store_true", help="add cumulative work to JSON records")
    sp.add_argument("-o", "--output", default=None)
    sp.set_defaults(func=cmd_enumerate)

    sp = with_input(sub.add_parser("separators", help="minimal separators, or minimal a-b separators"))
    sp.add_argument("--a", default=None)
    sp.add_argument("--b", default=None)
    sp.set_defaults(func=cmd_separators)

    sp = with_input(sub.add_parser("conformality", help="conformality of the minimal separators"))
    sp.add_argument("--max", type=int, default=5)
    sp.add_argument("--hypergraph", action="store_true", help="input is a hypergraph, not a graph")
    sp.set_defaults(func=cmd_conformality)

    sp = with_input(sub.add_parser("reduce", help="build a hardness reduction instance"))
    sp.add_argument("target", choices=("mis", "trans"))
    sp.add_argument("--classes", default=None, help="color classes, one per line")
    sp.add_argument("--verify", action="store_true")
    sp.set_defaults(func=cmd_reduce)

    sp = with_input(sub.add_parser("verify", help="compare enumerators with exhaustive search"))
    sp.add_argument("--kinds", default="mds,tds,cds")
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("generate", help="random chordal bipartite graph")
    sp.add_argument("n", type=int)
    sp.add_argument("density", type=float)
    sp.add_argument("seed", type=int)
    sp.add_argument("--connected", action="store_true")
    sp.add_argument("-o", "--output", default=None)
    sp.set_defaults(func=cmd_generate)

    sp = sub.add_parser("bench", help="delay report as CSV, optionally with a figure")
    sp.add_argument("kind", choices=bench_mod.KINDS)
    sp.add_argument("--family", choices=bench_mod.FAMILIES, default="k2n")
    sp.add_argument("--sizes", default="10,20,40")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--density", type=float, default=0.3)
    sp.add_argument("--max-solutions", type=int, default=2000)
    sp.add_argument("--csv", default=None, help="write CSV here instead of stdout")
    sp.add_argument("--figure", default=None, help="write a PNG figure here")
    sp.set_defaults(func=cmd_bench)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (RecognitionFailure, NotChordalBipartite) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RECOGNITION
    except (OSError, ParseError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    except DomEnumError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
