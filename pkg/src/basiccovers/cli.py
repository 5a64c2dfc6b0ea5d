"""Command-line front end.

    basiccovers analyze cycle:6 --kmax 10
    basiccovers covers graph.txt -k 2
    basiccovers gdim cycle:10 --render
    basiccovers verify

A graph source is either a file in the `n <count>` / `e <u> <v>` format or a
generator spec such as `cycle:6`, `caterpillar:4,6,6` or `random:3,4,0.5`.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Sequence

from basiccovers import acceptance, algebra, drawing, hypergraph, lattice
from basiccovers.covers import count_basic, enumerate_basic
from basiccovers.errors import CoverError, InvalidParameters, ParseError, Unstable
from basiccovers.graph import BipartiteGraph, GraphSpec, format_graph, generate, read_graph, strip_isolated

EXIT_OK, EXIT_ANALYSIS, EXIT_USAGE, EXIT_VERIFY = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _positive(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not an integer") from None
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {v}")
    return v


def load_graph(source: str, seed: int) -> BipartiteGraph:
    if os.path.exists(source):
        return read_graph(source)
    if ":" not in source:
        raise UsageError(f"no such file and not a generator spec: {source}")
    spec = GraphSpec.parse(source)
    return generate(GraphSpec(spec.family, spec.params, seed))


def load_hypergraph(source: str, seed: int) -> hypergraph.WeightedHypergraph:
    if os.path.exists(source):
        return hypergraph.read_hypergraph(source)
    fam, _, rest = source.partition(":")
    try:
        params = [int(x) for x in rest.split(",") if x]
    except ValueError:
        raise UsageError(f"bad hypergraph spec parameters: {rest!r}") from None
    if fam == "simplex" and len(params) in (1, 2):
        return hypergraph.simplex(*params)
    if fam == "random" and len(params) == 3:
        n, nfaces, max_weight = params
        return hypergraph.random_antichain(n, nfaces, max_weight, seed)
    raise UsageError(f"no such file and not a hypergraph spec (simplex:n[,w] or random:n,faces,maxw): {source}")


def _emit(data: dict, text: str, fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(data, separators=(",", ":"), sort_keys=False))
    else:
        print(text)


def _text_lines(d: dict, indent: str = "") -> str:
    out = []
    for key, value in d.items():
        if isinstance(value, dict):
            out.append(f"{indent}{key}:")
            out.append(_text_lines(value, indent + "  "))
        else:
            out.append(f"{indent}{key}: {value}")
    return "\n".join(out)


# ------------------------------------------------------------ subcommands


def cmd_analyze(args) -> int:
    G = load_graph(args.source, args.seed)
    rep = algebra.analyze(G, kmax=args.kmax, m_max=args.m_max, workers=args.workers)
    d = rep.to_dict()
    _emit(d, _text_lines(d), args.format)
    return EXIT_OK


def cmd_covers(args) -> int:
    G = load_graph(args.source, args.seed)
    if args.count:
        n = count_basic(G, args.k, workers=args.workers)
        _emit({"k": args.k, "count": n}, str(n), args.format)
        return EXIT_OK
    cs = enumerate_basic(G, args.k, workers=args.workers)
    if args.format == "json":
        print(cs.to_json())
    else:
        print("\n".join(" ".join(map(str, c.values)) for c in cs))
        print(f"# {cs.count} basic {args.k}-covers")
    return EXIT_OK


def cmd_gdim(args) -> int:
    G = load_graph(args.source, args.seed)
    H, _ = strip_isolated(G)
    res = drawing.gdim(H, budget=args.budget)
    d = res.to_dict()
    text = f"gdim = {res.value}"
    if args.render:
        text += "\n" + res.drawing.render()
    _emit(d, text, args.format)
    return EXIT_OK


def cmd_hilbert(args) -> int:
    G = load_graph(args.source, args.seed)
    H, _ = strip_isolated(G)
    prof = algebra.hilbert_function(H, args.kmax, workers=args.workers)
    d = prof.to_dict()
    text = "\n".join(f"HF({k}) = {prof.hf(k)}" for k in prof.k_range)
    text += f"\ndim = {prof.dim}  multiplicity = {prof.multiplicity}" if prof.stable else "\nnot stable"
    _emit(d, text, args.format)
    return EXIT_OK


def cmd_lattice(args) -> int:
    G = load_graph(args.source, args.seed)
    H, _ = strip_isolated(G)
    L = lattice.build_lattice(H)
    d = lattice.lattice_to_dict(L)
    text = f"{len(L.elements)} elements, rank {L.rank}, {L.maximal_chain_count} maximal chains"
    _emit(d, text, args.format)
    return EXIT_OK


def cmd_hypergraph(args) -> int:
    H = load_hypergraph(args.source, args.seed)
    try:
        rep = hypergraph.degree_bounds_check(
            H, args.kmax, budget=args.budget, workers=args.workers, kmax_limit=args.kmax_limit
        )
        d = rep.to_dict()
    except Unstable as exc:
        counts = [hypergraph.count_basic_h(H, k, args.budget) for k in range(1, args.kmax + 1)]
        lo, hi = hypergraph.degree_bounds(H)
        d = {"counts": counts, "degree": None, "period": None, "bounds": [lo, hi], "stable": False, "note": str(exc)}
    _emit(d, _text_lines(d), args.format)
    return EXIT_OK


def cmd_gen(args) -> int:
    G = load_graph(args.spec, args.seed)
    text = format_graph(G)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_verify(args) -> int:
    ok = acceptance.run(args.only or None)
    return EXIT_OK if ok else EXIT_VERIFY


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="basiccovers", description="Basic covers of bipartite graphs and hypergraphs.")
    sub = p.add_subparsers(dest="command", required=True)
    workers_default = os.cpu_count() or 1

    def common(sp, source=True):
        if source:
            sp.add_argument("source", help="graph file or generator spec (family:p1,p2,...)")
        sp.add_argument("--format", choices=["json", "text"], default="json")
        sp.add_argument("--seed", type=int, default=0, help="seed for random generators")
        sp.add_argument("--workers", type=_positive, default=workers_default)

    sp = sub.add_parser("analyze", help="full report: WSC, Hilbert profile, gdim, bounds, lattice")
    common(sp)
    sp.add_argument("--kmax", type=_positive, default=12)
    sp.add_argument("--m-max", type=_positive, default=4, dest="m_max")
    sp.set_defaults(func=cmd_analyze)

    sp = sub.add_parser("covers", help="list or count basic k-covers")
    common(sp)
    sp.add_argument("-k", type=_positive, default=1)
    sp.add_argument("--count", action="store_true", help="only print the number of covers")
    sp.set_defaults(func=cmd_covers)

    sp = sub.add_parser("gdim", help="graphical dimension with a witness drawing")
    common(sp)
    sp.add_argument("--render", action="store_true", help="two-row drawing in text output")
    sp.add_argument("--budget", type=_positive, default=2_000_000, help="search state cap")
    sp.set_defaults(func=cmd_gdim)

    sp = sub.add_parser("hilbert", help="Hilbert function, dimension and multiplicity estimates")
    common(sp)
    sp.add_argument("--kmax", type=_positive, default=12)
    sp.set_defaults(func=cmd_hilbert)

    sp = sub.add_parser("lattice", help="lattice of basic 1-covers of an unmixed graph")
    common(sp)
    sp.set_defaults(func=cmd_lattice)

    sp = sub.add_parser("hypergraph", help="basic-cover counts and degree bounds for a weighted hypergraph")
    common(sp)
    sp.add_argument("--kmax", type=_positive, default=8)
    sp.add_argument("--kmax-limit", type=_positive, default=16, dest="kmax_limit")
    sp.add_argument("--budget", type=_positive, default=hypergraph.BOX_BUDGET, help="box volume cap")
    sp.set_defaults(func=cmd_hypergraph)

    sp = sub.add_parser("gen", help="write a generated graph in the text format")
    sp.add_argument("spec", help="generator spec, e.g. cycle:10 or tree:12")
    sp.add_argument("-o", "--output")
    sp.add_argument("--seed", type=int, default=0)
    sp.set_defaults(func=cmd_gen)

    sp = sub.add_parser("verify", help="run the acceptance suite")
    sp.add_argument("--only", type=_positive, nargs="*", help="criterion numbers to run")
    sp.set_defaults(func=cmd_verify)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, ParseError, InvalidParameters) as exc:
        print(f"usage error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"I/O error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except CoverError as exc:
        print(f"analysis error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_ANALYSIS


if __name__ == "__main__":
    sys.exit(main())
