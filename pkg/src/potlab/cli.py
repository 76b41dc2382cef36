"""Command-line front end.

Exit codes: 0 success, 1 negative mathematical answer, 2 usage or input error.
Every subcommand prints JSON (keys sorted) unless the answer is a plain
negative verdict such as ``unrealizable``.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from importlib import resources
from pathlib import Path

from .extremal import census_cube, lower_bound_certificate, minimal_pot_stats
from .multigraph import Multigraph, UnsupportedSize, canonical_form, catalog_cubic8, is_bipartite
from .outputs import OrderBoundError, enumerate_outputs
from .pots import Pot, pot_isomorphisms
from .realization import DisconnectedGraph, classify_scenarios, realize
from .spectrum import build_system, min_order, minimal_solutions

EXIT_OK, EXIT_NO, EXIT_INPUT = 0, 1, 2


class InputError(Exception):
    pass


def bundled(name: str) -> Path:
    return Path(str(resources.files("potlab") / "data" / name))


def _read_json(source: str):
    """Parse ``source`` as a file path, a bundled data name, or inline JSON."""
    path = Path(source)
    if not path.exists() and not source.lstrip().startswith(("[", "{")):
        candidate = bundled(source if source.endswith(".json") else source + ".json")
        if candidate.exists():
            path = candidate
    try:
        text = path.read_text() if path.exists() else source
        return json.loads(text)
    except (OSError, json.JSONDecodeError) as exc:
        raise InputError(f"cannot read JSON from {source!r}: {exc}") from exc


def load_graph(source: str) -> Multigraph:
    try:
        return Multigraph.from_json(_read_json(source))
    except ValueError as exc:
        raise InputError(str(exc)) from exc


def load_pot(source: str) -> Pot:
    try:
        return Pot.from_json(_read_json(source))
    except (ValueError, TypeError) as exc:
        raise InputError(f"malformed pot JSON: {exc}") from exc


def emit(args, payload) -> None:
    indent = 2 if args.pretty else None
    separators = None if args.pretty else (",", ":")
    print(json.dumps(payload, sort_keys=True, indent=indent, separators=separators))


def cmd_realize(args) -> int:
    g, p = load_graph(args.graph), load_pot(args.pot)
    w = realize(g, p, strict=args.strict)
    if w is None:
        print("unrealizable")
        return EXIT_NO
    emit(args, w.coloring.to_json())
    return EXIT_OK


def cmd_scenario(args) -> int:
    g, p = load_graph(args.graph), load_pot(args.pot)
    flags = classify_scenarios(g, p)
    emit(args, {"scenario": flags.scenario, **flags.to_json()})
    return EXIT_OK if flags.realized else EXIT_NO


def cmd_outputs(args) -> int:
    p = load_pot(args.pot)
    outs = enumerate_outputs(
        p, args.max_order, allow_loops=not args.no_loops, allow_multiedges=not args.no_multiedges
    )
    for o in outs:
        emit(args, o.to_json())
    return EXIT_OK if outs else EXIT_NO


def cmd_spectrum(args) -> int:
    p = load_pot(args.pot)
    system = build_system(p)
    m = min_order(p, bound=args.bound)
    emit(args, {
        "matrix": system.to_json(),
        "equations": system.equations(),
        "generators": [list(u.counts) for u in minimal_solutions(p, args.max_order)],
        "min_order": m.to_json(),
    })
    return EXIT_OK if m.status != "infeasible" else EXIT_NO


def cmd_pot_iso(args) -> int:
    p, q = load_pot(args.p), load_pot(args.q)
    isos = pot_isomorphisms(p, q)
    if not isos:
        print("non-isomorphic")
        return EXIT_NO
    emit(args, {"isomorphisms": [{str(k): v for k, v in f.as_dict().items()} for f in isos]})
    return EXIT_OK


def cmd_census(args) -> int:
    if args.graph != "cube":
        raise InputError("census is implemented for the cube only")
    report = census_cube(args.colors)
    payload = report.to_json(certificates=args.emit_certificates)
    if args.emit_certificates:
        payload["lower_bounds"] = lower_bound_certificate()
    emit(args, payload)
    return EXIT_OK


def cmd_catalog(args) -> int:
    if args.family != "cubic8":
        raise InputError("only the cubic8 catalog is available")
    cat = catalog_cubic8()
    records = [
        {"canonical": list(canonical_form(g).code), "bipartite": is_bipartite(g)[0], "graph": g.to_json()}
        for g in cat
    ]
    if args.list:
        emit(args, records)
    else:
        emit(args, {"count": len(cat), "bipartite": sum(r["bipartite"] for r in records)})
    return EXIT_OK


def cmd_minpot(args) -> int:
    g = load_graph(args.graph)
    stats = minimal_pot_stats(g, args.scenario, tile_bound=args.tiles, color_bound=args.colors)
    emit(args, stats.to_json())
    return EXIT_OK if stats.T is not None else EXIT_NO


def cmd_verify(args) -> int:
    from .verify import run_checks

    p1 = load_pot(args.p1)
    p2 = load_pot(args.p2)
    report = run_checks(p1, p2, cases=args.cases, seed=args.seed, only=args.check)
    if args.json:
        emit(args, report.to_json())
    else:
        print("\n".join(report.lines()))
    return EXIT_OK if report.passed else EXIT_NO


def _global_flags(parser: argparse.ArgumentParser, top: bool) -> None:
    """Global flags; on subcommands they default to SUPPRESS so the top-level value survives."""
    def default(value):
        return value if top else argparse.SUPPRESS

    parser.add_argument("--pretty", action="store_true", default=default(False), help="indent JSON output")
    parser.add_argument("--threads", type=int, default=default(int(os.environ.get("POTLAB_THREADS", "1"))),
                        help="worker threads (results do not depend on it)")
    parser.add_argument("--seed", type=int, default=default(0), help="seed for randomized suites")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="potlab", description="Flexible-tile pots, realizations and cube census.")
    _global_flags(parser, True)
    common = argparse.ArgumentParser(add_help=False)
    _global_flags(common, False)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("realize", parents=[common], help="find a realization of GRAPH through POT")
    p.add_argument("graph")
    p.add_argument("pot")
    p.add_argument("--strict", action="store_true", help="require every color of POT to be used")
    p.set_defaults(func=cmd_realize)

    p = sub.add_parser("scenario", parents=[common], help="largest scenario in which POT realizes GRAPH")
    p.add_argument("graph")
    p.add_argument("pot")
    p.set_defaults(func=cmd_scenario)

    p = sub.add_parser("outputs", parents=[common], help="all connected outputs of POT up to an order")
    p.add_argument("pot")
    p.add_argument("--max-order", type=int, required=True)
    p.add_argument("--no-loops", action="store_true")
    p.add_argument("--no-multiedges", action="store_true")
    p.set_defaults(func=cmd_outputs)

    p = sub.add_parser("spectrum", parents=[common], help="net-color matrix, minimal usage vectors, min order")
    p.add_argument("pot")
    p.add_argument("--max-order", type=int, default=16, help="bound for listing minimal usage vectors")
    p.add_argument("--bound", type=int, default=64, help="search bound for the minimum order")
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("pot-iso", parents=[common], help="isomorphisms between two pots")
    p.add_argument("p")
    p.add_argument("q")
    p.set_defaults(func=cmd_pot_iso)

    p = sub.add_parser("census", parents=[common], help="scenario-3 pots of the cube up to isomorphism")
    p.add_argument("graph", choices=["cube"])
    p.add_argument("--colors", type=int, default=5)
    p.add_argument("--emit-certificates", action="store_true")
    p.set_defaults(func=cmd_census)

    p = sub.add_parser("catalog", parents=[common], help="catalog of small graphs")
    p.add_argument("family", choices=["cubic8"])
    p.add_argument("--list", action="store_true", help="print every graph")
    p.set_defaults(func=cmd_catalog)

    p = sub.add_parser("minpot", parents=[common], help="smallest pots realizing GRAPH in a scenario")
    p.add_argument("graph")
    p.add_argument("--scenario", type=int, choices=[1, 2, 3], required=True)
    p.add_argument("--tiles", type=int, default=4, help="largest pot size searched")
    p.add_argument("--colors", type=int, default=3, help="largest number of colors searched")
    p.set_defaults(func=cmd_minpot)

    p = sub.add_parser("verify-paper", parents=[common], help="reproduce the cube results and report")
    p.add_argument("--json", action="store_true")
    p.add_argument("--p1", default="p1.json")
    p.add_argument("--p2", default="p2.json")
    p.add_argument("--cases", type=int, default=1000, help="randomized cases per property")
    p.add_argument("--check", action="append", help="run only this check id (repeatable)")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.threads < 1:
        parser.error("--threads must be positive")
    try:
        return args.func(args)
    except (InputError, DisconnectedGraph, OrderBoundError, UnsupportedSize, ValueError) as exc:
        print(f"potlab: error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
