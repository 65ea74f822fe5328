"""Command-line front door: build, check, realize, bench, enumerate.

Graphs, orientations, extensions and LCP instances travel as small JSON
documents; influence graphs can also be rendered as DOT and benchmark
results as CSV.  Every run prints its version and effective seed to
stderr so outputs are reproducible from the logged configuration.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from . import __version__
from .cube import Orientation, check_orientation, global_sink, is_uso
from .matousek import (
    CyclicInfluence,
    InfluenceGraph,
    NotMatousekType,
    build_matousek,
    canonicalize,
    extract_influence_graph,
)
from .matroid import extension_to_uso
from .plcp import plcp_to_uso, realization_matrix, translate_to_plcp
from .random_facet import FAMILIES, run_trials, stats_to_csv
from .realizability import find_forbidden, is_branching_closure, synthesize_extension
from .enumeration import all_dags

ENUMERATE_CAP = 5  # 29281 labeled DAGs; n=6 would be 3.7 million


def _read_json(path: str) -> object:
    if path == "-":
        return json.load(sys.stdin)
    with open(path, encoding="utf-8") as fh:
        return json.load(fh)


def _write_text(text: str, out: Optional[str]) -> None:
    if out is None or out == "-":
        sys.stdout.write(text)
        if not text.endswith("\n"):
            sys.stdout.write("\n")
        return
    with open(out, "w", encoding="utf-8") as fh:
        fh.write(text)


def _load_graph(args: argparse.Namespace, parser: argparse.ArgumentParser) -> InfluenceGraph:
    if args.graph is not None and args.family is not None:
        parser.error("give either a graph file or --family, not both")
    if args.graph is not None:
        return InfluenceGraph.from_json_obj(_read_json(args.graph))
    if args.family is not None:
        if args.family not in FAMILIES:
            parser.error(f"unknown family {args.family!r}; known: {', '.join(sorted(FAMILIES))}")
        if args.n is None:
            parser.error("--family needs --n")
        return FAMILIES[args.family](args.n)
    parser.error("need a graph file or --family")
    raise AssertionError("unreachable")


def _parse_n_list(text: str) -> list[int]:
    """Cube sizes as a single value, a comma list, or an inclusive a..b range."""
    if ".." in text:
        lo, _, hi = text.partition("..")
        values = list(range(int(lo), int(hi) + 1))
    else:
        values = [int(part) for part in text.split(",")]
    if not values or any(v < 1 for v in values):
        raise ValueError(f"bad cube size list: {text!r}")
    return values


def cmd_build(args: argparse.Namespace, parser: argparse.ArgumentParser) -> int:
    g = _load_graph(args, parser)
    o = build_matousek(g)
    witness = find_forbidden(g)
    if witness is not None:
        print(
            f"warning: not realizable; witness {json.dumps(witness.to_json_obj())}",
            file=sys.stderr,
        )
    if args.format == "dot":
        _write_text(g.to_dot(), args.out)
    else:
        _write_text(json.dumps(o.to_json_obj(), indent=2), args.out)
    return 0


def cmd_check(args: argparse.Namespace, parser: argparse.ArgumentParser) -> int:
    o = Orientation.from_json_obj(_read_json(args.orientation))
    if not check_orientation(o):
        print("orientation: inconsistent (some edge claimed by both endpoints)")
        return 1
    print(f"USO: {'yes' if is_uso(o) else 'no'}")
    try:
        g = extract_influence_graph(o)
    except CyclicInfluence:
        print("Matousek: no (influence pattern is cyclic)")
        return 0
    except NotMatousekType:
        print("Matousek: no (flip pattern varies across vertices)")
        return 0
    print("Matousek: yes")
    print(f"influence graph: {json.dumps(g.to_json_obj())}")
    witness = find_forbidden(g)
    if witness is None:
        print("realizable: yes")
    else:
        x, y, z = witness.vertices
        print(f"realizable: no ({witness.kind} at {x},{y},{z})")
        print(f"witness: {json.dumps(witness.to_json_obj())}")
    return 0


def cmd_realize(args: argparse.Namespace, parser: argparse.ArgumentParser) -> int:
    g = _load_graph(args, parser)
    branching = is_branching_closure(g)
    if branching is None:
        witness = find_forbidden(g)
        assert witness is not None
        x, y, z = witness.vertices
        print(json.dumps(witness.to_json_obj()))
        print(f"not realizable: {witness.kind} at {x},{y},{z}", file=sys.stderr)
        return 1
    ext = synthesize_extension(branching)
    inst = translate_to_plcp(realization_matrix(ext), ext)
    want = build_matousek(g)
    if canonicalize(plcp_to_uso(inst)) != want or canonicalize(extension_to_uso(ext)) != want:
        print("verification failed: pipeline disagrees; nothing written", file=sys.stderr)
        return 1
    print("round-trip: exact match")
    ext_doc = json.dumps(ext.to_json_obj(), indent=2)
    plcp_doc = json.dumps(inst.to_json_obj(), indent=2)
    if args.out is None:
        print(ext_doc)
        print(plcp_doc)
    else:
        _write_text(ext_doc, f"{args.out}.ext.json")
        _write_text(plcp_doc, f"{args.out}.plcp.json")
        print(f"wrote {args.out}.ext.json and {args.out}.plcp.json")
    return 0


def cmd_bench(args: argparse.Namespace, parser: argparse.ArgumentParser) -> int:
    if args.trials < 1:
        parser.error("--trials must be at least 1")
    if args.family not in FAMILIES:
        print(
            f"unknown family {args.family!r}; known families: {', '.join(sorted(FAMILIES))}",
            file=sys.stderr,
        )
        return 2
    try:
        n_list = _parse_n_list(args.n)
    except ValueError as exc:
        parser.error(str(exc))
    stats = run_trials(args.family, n_list, args.trials, args.seed)
    _write_text(stats_to_csv(stats), args.out)
    return 0


def cmd_enumerate(args: argparse.Namespace, parser: argparse.ArgumentParser) -> int:
    try:
        n = int(args.n)
    except (TypeError, ValueError):
        parser.error("--n must be a single integer")
    if not 1 <= n <= ENUMERATE_CAP:
        parser.error(f"--n must be between 1 and {ENUMERATE_CAP}")
    dags = uso_failures = realizable = mismatches = 0
    for g in all_dags(n):
        dags += 1
        if not is_uso(build_matousek(g)):
            uso_failures += 1
        witness_free = find_forbidden(g) is None
        branching = is_branching_closure(g) is not None
        if witness_free:
            realizable += 1
        if witness_free != branching:
            mismatches += 1
    if args.format == "csv":
        text = "n,dags,uso_failures,realizable,mismatches\n"
        text += f"{n},{dags},{uso_failures},{realizable},{mismatches}\n"
    else:
        text = json.dumps(
            {
                "n": n,
                "dags": dags,
                "uso_failures": uso_failures,
                "realizable": realizable,
                "mismatches": mismatches,
            },
            indent=2,
        )
    _write_text(text, args.out)
    return 0 if uso_failures == 0 and mismatches == 0 else 1


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="usomat",
        description="Matousek-type unique sink orientations: build, check, realize, benchmark.",
    )
    parser.add_argument("--version", action="version", version=f"usomat {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser) -> None:
        p.add_argument("--seed", type=int, default=0, help="RNG seed (default 0)")
        p.add_argument("--out", help="output path (default stdout)")

    p = sub.add_parser("build", help="construct the orientation of an influence graph")
    p.add_argument("graph", nargs="?", help="influence graph JSON file ('-' for stdin)")
    p.add_argument("--family", help=f"built-in graph family ({', '.join(sorted(FAMILIES))})")
    p.add_argument("--n", type=int, help="cube dimension for --family")
    p.add_argument("--format", choices=["json", "dot"], default="json")
    common(p)
    p.set_defaults(handler=cmd_build)

    p = sub.add_parser("check", help="inspect an orientation table")
    p.add_argument("orientation", help="orientation JSON file ('-' for stdin)")
    common(p)
    p.set_defaults(handler=cmd_check)

    p = sub.add_parser("realize", help="synthesize extension and LCP data for a graph")
    p.add_argument("graph", nargs="?", help="influence graph JSON file ('-' for stdin)")
    p.add_argument("--family", help=f"built-in graph family ({', '.join(sorted(FAMILIES))})")
    p.add_argument("--n", type=int, help="cube dimension for --family")
    common(p)
    p.set_defaults(handler=cmd_realize)

    p = sub.add_parser("bench", help="Random Facet evaluation statistics")
    p.add_argument("--family", required=True, help="graph family name")
    p.add_argument("--n", required=True, help="cube sizes: '8', '4,8,12' or '4..12'")
    p.add_argument("--trials", type=int, default=1000)
    p.add_argument("--format", choices=["csv"], default="csv")
    common(p)
    p.set_defaults(handler=cmd_bench)

    p = sub.add_parser("enumerate", help="exhaustive small-n construction/realizability sweep")
    p.add_argument("--n", required=True, help="cube dimension (at most 5)")
    p.add_argument("--format", choices=["json", "csv"], default="json")
    common(p)
    p.set_defaults(handler=cmd_enumerate)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    print(f"usomat {__version__} (seed {getattr(args, 'seed', 0)})", file=sys.stderr)
    try:
        return args.handler(args, parser)
    except (ValueError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    raise SystemExit(main())
