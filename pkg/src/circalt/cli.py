"""``circalt`` command line: altitude, bounds, verify and batch.

Exit codes: 0 success, 1 property failure or skipped batch lines, 2 parse or
usage error, 3 node budget exhausted, 4 undefined quantity requested.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
import time
from pathlib import Path

from .altitude import BudgetExceeded, altitude, certify
from .formats import GraphFormatError, encode_graph6, parse_dimacs, parse_edge_list, parse_graph6
from .graph import (
    Graph,
    cartesian_product,
    complete,
    complete_bipartite,
    cycle,
    empty,
    girth,
    path,
)
from .homcore import circular_chromatic, circular_clique, clique_number
from .verify import SUITES, run_suite

SCHEMA_VERSION = 1
BATCH_COLUMNS = ["graph6", "n", "edges", "omega", "girth", "alpha", "method", "nodes", "seconds"]

EXIT_OK = 0
EXIT_PROPERTY = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3
EXIT_UNDEFINED = 4

_GENERATORS = {
    "cycle": (cycle, 1),
    "complete": (complete, 1),
    "path": (path, 1),
    "empty": (empty, 1),
    "kab": (complete_bipartite, 2),
    "circ": (circular_clique, 2),
}


def parse_gen(spec: str) -> Graph:
    """Build a graph from shorthand such as ``cycle:5``, ``kab:2,3`` or
    ``product:complete:2□path:3`` (``*`` may stand in for ``□``)."""
    name, _, args = spec.partition(":")
    if name == "product":
        factors = args.replace("*", "□").split("□")
        if len(factors) < 2:
            raise ValueError(f"product needs at least two factors: {spec!r}")
        g = parse_gen(factors[0])
        for f in factors[1:]:
            g = cartesian_product(g, parse_gen(f))
        return g
    if name not in _GENERATORS:
        raise ValueError(f"unknown generator {name!r}; known: {', '.join(sorted(_GENERATORS))}, product")
    fn, arity = _GENERATORS[name]
    try:
        values = [int(x) for x in args.split(",")] if args else []
    except ValueError:
        raise ValueError(f"generator arguments must be integers: {spec!r}") from None
    if len(values) != arity:
        raise ValueError(f"{name} takes {arity} argument(s), got {len(values)}")
    return fn(*values)


def _read_graph(args) -> Graph:
    given = [x for x in (args.g6, args.gen, args.edges, args.dimacs) if x is not None]
    if len(given) != 1:
        raise ValueError("give exactly one of --g6, --gen, --edges, --dimacs")
    if args.g6 is not None:
        return parse_graph6(args.g6)
    if args.gen is not None:
        return parse_gen(args.gen)
    if args.edges is not None:
        return parse_edge_list(Path(args.edges).read_text())
    return parse_dimacs(Path(args.dimacs).read_text())


def _fmt_girth(value) -> str:
    return "inf" if value == math.inf else str(value)


def _emit(payload: dict, fmt: str, out) -> None:
    if fmt == "json":
        out.write(json.dumps({"schema_version": SCHEMA_VERSION, **payload}, sort_keys=True) + "\n")
        return
    flat = {k: (json.dumps(v) if isinstance(v, (list, dict)) else v) for k, v in payload.items()}
    if fmt == "csv":
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(flat.keys())
        writer.writerow(flat.values())
        return
    width = max(len(k) for k in flat)
    for k, v in flat.items():
        out.write(f"{k:<{width}}  {v}\n")


# ---------------------------------------------------------------------------
# commands


def cmd_altitude(args, out) -> int:
    g = _read_graph(args)
    try:
        r = altitude(g, node_budget=args.budget, workers=args.threads)
    except BudgetExceeded as e:
        _emit(
            {
                "command": "altitude",
                "status": "budget_exceeded",
                "graph6": encode_graph6(g) if g.n <= 62 else None,
                "lower": e.lower,
                "upper": e.upper,
                "block": e.block,
                "block_vertices": list(e.block_vertices or ()),
                "nodes": e.nodes,
            },
            args.format,
            out,
        )
        return EXIT_BUDGET
    cert = certify(g, r)
    _emit(
        {
            "command": "altitude",
            "status": "ok",
            "graph6": encode_graph6(g) if g.n <= 62 else None,
            "n": g.n,
            "edges": g.num_edges,
            "value": r.value,
            "witness": list(r.witness.seq),
            "method": r.method,
            "per_block": [{"block": b.block, "vertices": list(b.vertices), "value": b.value} for b in r.per_block or []],
            "certificate": {c.name: c.status for c in cert.checks},
            "nodes": r.stats.nodes,
            "seconds": round(r.stats.seconds, 6),
        },
        args.format,
        out,
    )
    return EXIT_OK if cert.passed else EXIT_PROPERTY


def cmd_bounds(args, out) -> int:
    g = _read_graph(args)
    omega = clique_number(g)
    gi = girth(g)
    try:
        alt = altitude(g, node_budget=args.budget, workers=args.threads).value
    except BudgetExceeded as e:
        sys.stderr.write(f"circalt: {e}\n")
        return EXIT_BUDGET
    payload = {"command": "bounds", "n": g.n, "omega": omega, "girth": _fmt_girth(gi), "chi_c": None, "alpha": alt}
    if not g.num_edges:
        _emit({**payload, "sandwich": "undefined"}, args.format, out)
        sys.stderr.write("circalt: circular chromatic number is undefined for an edgeless graph\n")
        return EXIT_UNDEFINED
    chi_c = circular_chromatic(g).value
    holds = omega <= alt <= chi_c and (alt < 3 or alt >= gi)
    payload["chi_c"] = f"{chi_c.numerator}/{chi_c.denominator}"
    payload["sandwich"] = "holds" if holds else "violated"
    _emit(payload, args.format, out)
    return EXIT_OK if holds else EXIT_PROPERTY


def cmd_verify(args, out) -> int:
    reports = run_suite(args.suite, max_n=args.max_n, seed=args.seed, count=args.count,
                        workers=args.threads, pairs=args.pairs)
    if args.format == "json":
        out.write(json.dumps({"schema_version": SCHEMA_VERSION, "reports": [r.to_dict() for r in reports]},
                             sort_keys=True) + "\n")
    elif args.format == "csv":
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(["property", "passed", "instances", "skipped", "failures", "seed", "seconds"])
        for r in reports:
            writer.writerow([r.property_id, r.passed, r.instances, r.skipped, len(r.failures), r.seed,
                             f"{r.elapsed:.3f}"])
    else:
        for r in reports:
            out.write(r.to_text() + "\n")
    return EXIT_OK if all(r.passed for r in reports) else EXIT_PROPERTY


def _batch_lines(paths: list[str]):
    if not paths:
        yield from enumerate(sys.stdin, start=1)
        return
    for p in paths:
        with open(p, encoding="ascii", errors="replace") as fh:
            yield from enumerate(fh, start=1)


def cmd_batch(args, out) -> int:
    rows = []
    bad = 0
    for lineno, line in _batch_lines(args.inputs):
        text = line.strip()
        if not text:
            continue
        try:
            g = parse_graph6(text)
        except GraphFormatError as e:
            sys.stderr.write(f"circalt: line {lineno}: {e}\n")
            bad += 1
            continue
        try:
            r = altitude(g, node_budget=args.budget, workers=args.threads)
            alpha, method, nodes, seconds = r.value, r.method, r.stats.nodes, round(r.stats.seconds, 6)
        except BudgetExceeded as e:
            sys.stderr.write(f"circalt: line {lineno}: {e}\n")
            alpha, method, nodes, seconds = f"[{e.lower},{e.upper}]", "budget_exceeded", e.nodes, None
            bad += 1
        rows.append(
            {
                "graph6": text,
                "n": g.n,
                "edges": g.num_edges,
                "omega": clique_number(g),
                "girth": _fmt_girth(girth(g)),
                "alpha": alpha,
                "method": method,
                "nodes": nodes,
                "seconds": seconds,
            }
        )
    if rows:
        if args.format == "json":
            out.write(json.dumps({"schema_version": SCHEMA_VERSION, "columns": BATCH_COLUMNS, "rows": rows},
                                 sort_keys=True) + "\n")
        elif args.format == "csv":
            writer = csv.DictWriter(out, fieldnames=BATCH_COLUMNS, lineterminator="\n")
            writer.writeheader()
            writer.writerows(rows)
        else:
            for row in rows:
                out.write("  ".join(f"{row[c]}" for c in BATCH_COLUMNS) + "\n")
    return EXIT_PROPERTY if bad else EXIT_OK


# ---------------------------------------------------------------------------
# argument parsing


def _add_common(p: argparse.ArgumentParser, default_format: str) -> None:
    p.add_argument("--format", choices=["json", "csv", "text"], default=default_format)
    p.add_argument("--threads", type=_positive, default=1, help="worker processes")
    p.add_argument("--budget", type=_non_negative, default=None, help="search node limit per block")


def _add_graph_input(p: argparse.ArgumentParser) -> None:
    p.add_argument("--g6", help="graph6 string")
    p.add_argument("--gen", help="generator shorthand, e.g. cycle:5, kab:2,3, product:complete:2*path:3")
    p.add_argument("--edges", help="edge-list file ('n <count>' then 'u v' lines)")
    p.add_argument("--dimacs", help="DIMACS .col file")


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return value


def _non_negative(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError("must be >= 0")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="circalt", description="Exact circular altitude of small graphs.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("altitude", help="compute the circular altitude of one graph")
    _add_graph_input(p)
    _add_common(p, "text")
    p.set_defaults(func=cmd_altitude)

    p = sub.add_parser("bounds", help="clique number, girth, circular chromatic number and altitude")
    _add_graph_input(p)
    _add_common(p, "text")
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("verify", help="re-check structural properties on catalogs and random graphs")
    p.add_argument("suite", choices=sorted(SUITES) + ["all"])
    p.add_argument("--max-n", type=_positive, default=6, help="largest catalog graph size")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--count", type=_non_negative, default=50, help="random instances per suite")
    p.add_argument("--pairs", choices=["small", "random", "all"], default="all", help="product suite pairs")
    _add_common(p, "text")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("batch", help="altitude for every graph6 line of the inputs (stdin by default)")
    p.add_argument("inputs", nargs="*")
    _add_common(p, "csv")
    p.set_defaults(func=cmd_batch)
    return parser


def main(argv: list[str] | None = None, out=None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        return args.func(args, out)
    except (GraphFormatError, ValueError, OSError) as e:
        sys.stderr.write(f"circalt: {e}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
