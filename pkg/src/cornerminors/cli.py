"""Command-line front end.

    cornerminors analyze --input c.json
    cornerminors primes  --input c.json
    cornerminors radical --input c.json
    cornerminors hilbert --m 3 --n 3
    cornerminors betti   --input c.json
    cornerminors connect --input c.json --tables t.json
    cornerminors verify  [--only 1 5 9] [--seed 0]

Exit codes: 0 success, 2 parse/validation error, 3 resource cap, 4 precondition;
``verify`` exits 1 when some criterion fails.
"""
from __future__ import annotations

import argparse
import json
import sys

from .combinatorics import (ParseError, ValidationError, ideal_of, interval_decomposition, interval_graph,
                            enumerate_chordless_cycles, parse_collection, toric_ideal)
from .config import DEFAULT_CAPS, Caps, PreconditionError, ResourceCap
from .fibers import certify_connection, fiber_connected, load_tables, move_basis
from .hilbert import regularity_of, hilbert_formula_check
from .primes import decomposition_check, minimal_primes, obstruction_cycle, require_corner

EXIT_OK, EXIT_FAILED, EXIT_INPUT, EXIT_CAP, EXIT_PRECONDITION = 0, 1, 2, 3, 4


def _read_collection(path):
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from exc
    return parse_collection(text)


def _cells(cells):
    return [f"x{c.row}{c.col}" for c in cells]


def cmd_analyze(args, caps):
    c = _read_collection(args.input)
    vert, horiz = interval_decomposition(c)
    g = interval_graph(c)
    ring = c.ring()
    i = ideal_of(c, ring)
    j = toric_ideal(c, ring=ring, caps=caps)
    extra = [p for p in j.generators if p not in i.generators and -p not in i.generators]
    return {
        "collection": c.to_dict(),
        "vertices": _cells(c.vertices),
        "verticalIntervals": [_cells(iv.cells) for iv in vert],
        "horizontalIntervals": [_cells(iv.cells) for iv in horiz],
        "graph": {g.node_name(a): sorted(g.node_name(b) for b in nb)
                  for a, nb in sorted(g.adjacency.items())},
        "chordlessCycles": [[g.node_name(v) for v in s.nodes]
                            for s in enumerate_chordless_cycles(g, caps=caps)],
        "idealGenerators": [str(p) for p in i.generators],
        "toricGenerators": [str(p) for p in j.generators],
        "extraToricGenerators": [str(p) for p in extra],
    }


def cmd_primes(args, caps):
    c = _read_collection(args.input)
    comps = minimal_primes(c, caps)
    report = {
        "collection": c.to_dict(),
        "components": [{"name": str(p), "W": _cells(sorted(p.w)), "toric": not p.w,
                        "variablesOnly": p.is_variable_ideal,
                        "generators": [str(f) for f in p.generators]} for p in comps],
    }
    if args.max_degree is not None and c.is_corner and c.minors:
        report["identities"] = decomposition_check(c, args.max_degree, caps, elimination=False)
    return report


def cmd_radical(args, caps):
    c = _read_collection(args.input)
    require_corner(c)
    cyc = obstruction_cycle(c)
    g = interval_graph(c)
    return {"collection": c.to_dict(), "radical": cyc is None,
            "cycle": None if cyc is None else [g.node_name(v) for v in cyc.nodes]}


def cmd_hilbert(args, caps):
    if args.m is None or args.n is None:
        raise ValidationError("hilbert needs --m and --n")
    return hilbert_formula_check(args.m, args.n, caps).to_dict()


def cmd_betti(args, caps):
    c = _read_collection(args.input)
    reg = regularity_of(ideal_of(c), caps, max_deg=args.max_degree)
    return {"collection": c.to_dict(), "betti": reg.table.to_json(), "regularity": reg.value,
            "untruncated": reg.certified, "table": reg.table.render()}


def cmd_connect(args, caps):
    c = _read_collection(args.input)
    if not args.tables:
        raise ValidationError("connect needs --tables")
    u, v = load_tables(args.tables, set(c.vertices))
    res = fiber_connected(u, v, move_basis(c), caps.bfs_cap)
    report = {"collection": c.to_dict(), "u": u.to_dict(), "v": v.to_dict(), **res.to_dict()}
    report["certificate"] = certify_connection(u, v, c, caps) if c.is_corner and c.minors else None
    # the partial report is still printed, but the exit code says the cap was hit
    args.status = EXIT_CAP if res.verdict == "unknown" else EXIT_OK
    return report


def cmd_verify(args, caps):
    from .acceptance import run_all
    text = args.format == "text"
    results = run_all(args.seed, caps, only=set(args.only or ()),
                      report=(lambda r: print(r.line(), flush=True)) if text else None)
    report = {"seed": args.seed, "passed": sum(r.passed for r in results), "total": len(results),
              "criteria": [r.to_dict() for r in results]}
    args.status = EXIT_FAILED if report["passed"] < report["total"] else EXIT_OK
    if text:
        print(f"{report['passed']}/{report['total']} criteria pass")
        return None
    return report


COMMANDS = {"analyze": cmd_analyze, "primes": cmd_primes, "radical": cmd_radical,
            "hilbert": cmd_hilbert, "betti": cmd_betti, "connect": cmd_connect, "verify": cmd_verify}


def build_parser():
    p = argparse.ArgumentParser(prog="cornerminors", description=__doc__.splitlines()[0])
    p.add_argument("command", choices=sorted(COMMANDS))
    p.add_argument("--input", help="collection file (JSON)")
    p.add_argument("--tables", help='tables file {"u": {"cells": ...}, "v": ...}')
    p.add_argument("--m", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--max-degree", type=int)
    p.add_argument("--cap-degree", type=int)
    p.add_argument("--cap-pair", type=int)
    p.add_argument("--cap-bfs", type=int)
    p.add_argument("--cap-memory", type=int)
    p.add_argument("--config", help="JSON file with caps and outputFormat")
    p.add_argument("--format", choices=("text", "json"))
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--only", type=int, nargs="*", help="verify: criterion numbers to run")
    return p


def _settings(args):
    caps = DEFAULT_CAPS
    fmt = None
    if args.config:
        try:
            with open(args.config, encoding="utf-8") as fh:
                doc = json.load(fh)
        except (OSError, json.JSONDecodeError) as exc:
            raise ParseError(f"bad config {args.config}: {exc}") from exc
        if not isinstance(doc, dict):
            raise ParseError("config must be a JSON object")
        try:
            caps = Caps.from_dict(doc)
        except (TypeError, ValueError) as exc:
            raise ValidationError(str(exc)) from exc
        fmt = doc.get("outputFormat")
    try:
        caps = caps.with_(degree_cap=args.cap_degree, pair_cap=args.cap_pair,
                          bfs_cap=args.cap_bfs, memory_cap=args.cap_memory)
    except ValueError as exc:
        raise ValidationError(str(exc)) from exc
    fmt = args.format or fmt or "text"
    if fmt not in ("text", "json"):
        raise ValidationError(f"unknown output format {fmt!r}")
    args.format = fmt
    return caps


def render_text(report, indent=0) -> str:
    pad = "  " * indent
    lines = []
    for k, v in report.items():
        if isinstance(v, dict):
            lines.append(f"{pad}{k}:")
            lines.append(render_text(v, indent + 1))
        elif isinstance(v, str) and "\n" in v:
            lines.append(f"{pad}{k}:")
            lines += [pad + "  " + s for s in v.splitlines()]
        elif isinstance(v, list) and v and isinstance(v[0], dict):
            lines.append(f"{pad}{k}:")
            for item in v:
                lines.append(render_text(item, indent + 1))
                lines.append("")
        else:
            lines.append(f"{pad}{k}: {json.dumps(v) if isinstance(v, (list, bool)) or v is None else v}")
    return "\n".join(lines)


def dump_json(report) -> str:
    return json.dumps(report, indent=2, sort_keys=True)


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.command not in ("hilbert", "verify") and not args.input:
        print(f"error: {args.command} needs --input", file=sys.stderr)
        return EXIT_INPUT
    try:
        caps = _settings(args)
        report = COMMANDS[args.command](args, caps)
    except (ParseError, ValidationError) as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except ResourceCap as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_CAP
    except PreconditionError as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    if report is not None:
        print(dump_json(report) if args.format == "json" else render_text(report))
    return getattr(args, "status", EXIT_OK)


if __name__ == "__main__":
    sys.exit(main())
