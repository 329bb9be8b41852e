"""Command-line front end.

Exit codes: 0 success / all checks pass, 1 a verification check failed,
2 usage error, 3 construction or runtime error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import core
from .catalog import BUILTIN_CATALOG
from .errors import BadParameter, GroupGraphsError, ParseError
from .graphs import GraphKind, build_graph, connected_components, edge_count, export
from .groupspec import make_family, parse_spec
from .theorems import CHECKS, resolve_checks, run_suite, snorm_witness_pairs

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_ERROR = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _spec(text):
    try:
        return parse_spec(text)
    except (ParseError, BadParameter) as exc:
        raise UsageError(str(exc)) from None


def _yn(flag: bool) -> str:
    return "yes" if flag else "no"


def cmd_info(args) -> int:
    G = make_family(_spec(args.spec), max_order=args.max_order)
    print(f"group: {G.name}")
    print(f"order: {G.order}")
    flags = {
        "abelian": core.is_abelian(G),
        "nilpotent": core.is_nilpotent(G),
        "dedekind": core.is_dedekind(G),
        "eppo": core.is_eppo(G),
        "simple": core.is_simple(G),
        "2-generated": core.is_2_generated(G),
    }
    for k, v in flags.items():
        print(f"{k}: {_yn(v)}")
    print(f"exponent: {core.exponent(G)}")
    for p, P in core.sylow_subgroups(G).items():
        print(f"sylow-{p}: order {P.order} abelian={_yn(core.is_abelian(G, P))} "
              f"cyclic={_yn(core.is_cyclic(G, P))} dedekind={_yn(core.is_dedekind(G, P))}")
    return EXIT_OK


def cmd_graph(args) -> int:
    G = make_family(_spec(args.spec), max_order=args.max_order)
    A = build_graph(args.graph, G)
    data = export(A, args.emit)
    counts = f"edges={edge_count(A)} components={connected_components(A)}"
    if args.out:
        Path(args.out).write_bytes(data)
        print(counts)
    else:
        sys.stdout.buffer.write(data)
        sys.stdout.flush()
        print(counts, file=sys.stderr)
    return EXIT_OK


def cmd_witness(args) -> int:
    G = make_family(_spec(args.spec), max_order=args.max_order)
    pairs = snorm_witness_pairs(G)
    if not pairs:
        print("none")
    for w in pairs:
        print(f"({G.labels[w.x]}, {G.labels[w.y]})")
    return EXIT_OK


def cmd_catalog(args) -> int:
    for spec in BUILTIN_CATALOG:
        print(f"{spec:<14} {make_family(spec).order}")
    return EXIT_OK


def _load_catalog(source: str) -> list:
    if source == "builtin":
        return list(BUILTIN_CATALOG)
    if not source.startswith("file:"):
        raise UsageError(f"--catalog must be 'builtin' or 'file:PATH', got {source!r}")
    path = Path(source[5:])
    try:
        data = json.loads(path.read_text(encoding="utf-8"))
    except OSError as exc:
        raise GroupGraphsError(f"cannot read catalog {path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise GroupGraphsError(f"catalog {path}: invalid JSON: {exc.msg}") from None
    if isinstance(data, dict):
        data = data.get("groups", [])
    if not isinstance(data, list) or not all(isinstance(s, str) for s in data):
        raise GroupGraphsError(f"catalog {path}: expected a list of group specs")
    return [_spec(s) for s in data]


def cmd_verify(args) -> int:
    try:
        checks = resolve_checks(args.checks)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    catalog = _load_catalog(args.catalog)
    report = run_suite(catalog, checks, threads=args.threads, max_order=args.max_order)
    text = report.to_json(timings=args.timings)
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    for line in report.summary_lines():
        print(line, file=sys.stderr)
    if report.errors:
        return EXIT_ERROR
    return EXIT_OK if report.passed else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--max-order", type=int, default=None,
                        help="construction cap (default: $GG_MAX_ORDER or 20000)")
    common.add_argument("--paranoid", action="store_true",
                        help="check associativity of every table regardless of size")

    parser = argparse.ArgumentParser(prog="groupgraphs", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("info", parents=[common], help="structural summary of a group")
    p.add_argument("spec")
    p.set_defaults(func=cmd_info)

    p = sub.add_parser("graph", parents=[common], help="build and export a graph")
    p.add_argument("spec")
    p.add_argument("--graph", required=True, choices=[k.value for k in GraphKind])
    p.add_argument("--emit", default="json", choices=["json", "dot"])
    p.add_argument("--out")
    p.set_defaults(func=cmd_graph)

    p = sub.add_parser("witness", parents=[common],
                       help="list non-commuting pairs adjacent in the symmetric normaliser graph")
    p.add_argument("spec")
    p.set_defaults(func=cmd_witness)

    p = sub.add_parser("verify", parents=[common], help="run the verification suite")
    p.add_argument("--checks", default="all",
                   help=f"comma-separated subset of {','.join(CHECKS)} or 'all'")
    p.add_argument("--catalog", default="builtin", help="'builtin' or file:PATH")
    p.add_argument("--out", help="report path (default: standard output)")
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--timings", action="store_true",
                   help="record wall-clock ms per check (reports are then not byte-stable)")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("catalog", parents=[common], help="list the built-in catalog")
    p.set_defaults(func=cmd_catalog)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    core.set_paranoid(args.paranoid)
    try:
        return args.func(args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (GroupGraphsError, ValueError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_ERROR
    finally:
        core.set_paranoid(False)


if __name__ == "__main__":
    sys.exit(main())
