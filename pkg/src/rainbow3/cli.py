"""Command-line tools for 3-rainbow edge colorings of graphs.

Exit codes: 0 success / PASS, 1 verification failed, 2 malformed input,
3 budget or size limit exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import __version__
from .bounds import SCHEMA, bounds_report
from .domination import (DominationError, augment_to_2dominating, greedy_connected_dominating,
                         min_k_dominating_exact)
from .graph import (FAMILIES, FamilySpec, Graph, GraphError, LimitError, complete_bipartite,
                    generate, parse_edge_list, serialize_edge_list)
from .rainbow import (DEFAULT_BUDGET, ConstructionError, EdgeColoring, RainbowError,
                      block_composite_coloring, extend_via_2dominating, is_k_rainbow, kst_coloring,
                      parse_coloring, rx3_exact, serialize_coloring)
from .structure import StructureError, structure_report

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_LIMIT = 0, 1, 2, 3


def _read(path: str | None) -> str:
    if path is None or path == "-":
        return sys.stdin.read()
    with open(path) as fh:
        return fh.read()


def _write(path: str | None, text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w") as fh:
            fh.write(text)


def _emit(args, record: dict, human: str) -> None:
    if args.json:
        sys.stdout.write(json.dumps({"schema": SCHEMA, **record}, indent=2) + "\n")
    else:
        sys.stdout.write(human)


def _graph(args) -> Graph:
    return parse_edge_list(_read(args.input))


def cmd_gen(args) -> int:
    params = {k: getattr(args, k) for k in ("n", "s", "t", "r", "b", "delta", "m")
              if getattr(args, k) is not None}
    params["seed"] = args.seed
    g = generate(FamilySpec(args.family, params))
    _write(args.output, serialize_edge_list(g))
    return EXIT_OK


def cmd_bounds(args) -> int:
    g = _graph(args)
    rep = bounds_report(g, budget=args.budget, exact_edge_limit=args.limit)
    data = rep.to_json()
    lines = [f"n={rep.n} m={rep.m} delta={rep.delta}"]
    for b in rep.bounds:
        val = b.value if b.applicable else "-"
        lines.append(f"  {b.name:<24} {val!s:>5}  {b.reason}")
    lines.append(f"steiner lower bound: {rep.steiner_lower} ({data['steiner_mode']})")
    lines.append(f"exact: {rep.exact_value} ({rep.exact_status})")
    data.pop("schema")
    _emit(args, data, "\n".join(lines) + "\n")
    return EXIT_OK


def cmd_exact(args) -> int:
    g = _graph(args)
    res = rx3_exact(g, budget=args.budget)
    if not res.proved:
        _emit(args, {"value": None, "status": "budget-limited", "lower": res.lower,
                     "nodes": res.nodes},
              f"unknown (every coloring with fewer than {res.lower} colors refuted)\n")
        return EXIT_LIMIT
    if args.output:
        _write(args.output, serialize_coloring(g, res.coloring))
    record = {"value": res.value, "status": "proved", "lower": res.lower, "nodes": res.nodes,
              "coloring": list(res.coloring.colors)}
    human = f"{res.value}\n" + ("" if args.output else serialize_coloring(g, res.coloring))
    _emit(args, record, human)
    return EXIT_OK


def _kst_for(g: Graph | None, s: int | None, t: int | None) -> tuple[Graph, EdgeColoring]:
    if g is None:
        if s is None or t is None:
            raise GraphError("kst needs --input or both --s and --t")
        s, t = sorted((s, t))
        return complete_bipartite(s, t), kst_coloring(s, t)
    parts = g.bipartition()
    if parts is None:
        raise GraphError("graph is not bipartite")
    small, big = sorted(parts, key=len)
    if g.m != len(small) * len(big):
        raise GraphError("graph is not complete bipartite")
    std = kst_coloring(len(small), len(big))
    ref = complete_bipartite(len(small), len(big))
    relabel = list(small) + list(big)
    colors = [0] * g.m
    for i, (u, v) in enumerate(ref.edges):
        colors[g.edge_id(relabel[u], relabel[v])] = std.colors[i]
    return g, EdgeColoring(tuple(colors), std.k)


def cmd_color(args) -> int:
    if args.method == "kst":
        g, col = _kst_for(_graph(args) if args.input else None, args.s, args.t)
    else:
        g = _graph(args)
        if args.method == "blocks":
            col = block_composite_coloring(g, budget=args.budget)
        else:
            if g.n <= args.limit:
                dom = min_k_dominating_exact(g, 2, require_connected=True)
            else:
                dom = augment_to_2dominating(g, greedy_connected_dominating(g).vertices)
            col = extend_via_2dominating(g, dom)
    if args.output:
        _write(args.output, serialize_coloring(g, col))
    human = f"{col.num_colors} colors, verified\n"
    if not args.output:
        human += serialize_coloring(g, col)
    _emit(args, {"method": args.method, "colors": col.num_colors, "verified": True,
                 "coloring": list(col.colors)}, human)
    return EXIT_OK


def cmd_verify(args) -> int:
    g = _graph(args)
    col = parse_coloring(_read(args.coloring), g)
    verdict = is_k_rainbow(g, col, args.k)
    _emit(args, {"k": args.k, "pass": verdict.ok, "colors": col.num_colors,
                 "failing": list(verdict.failing) if verdict.failing else None},
          "PASS\n" if verdict.ok else "FAIL\n")
    if not verdict.ok:
        sys.stderr.write(f"no rainbow tree for vertex set {list(verdict.failing)}\n")
        return EXIT_FAIL
    return EXIT_OK


def cmd_structure(args) -> int:
    g = _graph(args)
    rep = structure_report(g, limit=args.limit)
    data = rep.to_json()
    human = "".join(f"{k}: {v}\n" for k, v in data.items())
    _emit(args, data, human)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--input", "-i", help="edge-list file (default: stdin)")
    common.add_argument("--output", "-o", help="output file (default: stdout)")
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--budget", type=int, default=DEFAULT_BUDGET,
                        help="exact search node budget")
    common.add_argument("--limit", type=int, default=14, help="size limit for exact routines")

    p = argparse.ArgumentParser(prog="rainbow3", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen", parents=[common], help="generate a graph family")
    g.add_argument("--family", required=True, choices=FAMILIES)
    for name in ("n", "s", "t", "r", "b", "delta", "m"):
        g.add_argument(f"--{name}", type=int)
    g.set_defaults(func=cmd_gen)

    sub.add_parser("bounds", parents=[common], help="report all bounds").set_defaults(func=cmd_bounds)
    sub.add_parser("exact", parents=[common], help="exact 3-rainbow index").set_defaults(func=cmd_exact)

    c = sub.add_parser("color", parents=[common], help="construct and verify a coloring")
    c.add_argument("--method", required=True, choices=("dominating", "blocks", "kst"))
    c.add_argument("--s", type=int)
    c.add_argument("--t", type=int)
    c.set_defaults(func=cmd_color)

    v = sub.add_parser("verify", parents=[common], help="check a coloring file")
    v.add_argument("--coloring", "-c", required=True)
    v.add_argument("--k", type=int, default=3)
    v.set_defaults(func=cmd_verify)

    sub.add_parser("structure", parents=[common], help="induced P5/C5 report").set_defaults(
        func=cmd_structure)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except LimitError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_LIMIT
    except ConstructionError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_FAIL
    except (GraphError, RainbowError, DominationError, StructureError, OSError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
