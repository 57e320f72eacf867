"""``hubnet`` command line.

Exit codes: 0 success, 1 invalid scenario, 2 unreadable file or bad
arguments, 3 negative cycle in the cost data.
"""

from __future__ import annotations

import argparse
import math
import os
import sys
import time
from typing import Callable, Sequence

from . import scenario as scenario_io
from .errors import NegativeCycle, ValidationError
from .network import CostClass, shortest_path_matrix
from .pipeline import solve
from .report import SCHEMA_VERSION, build_report, distance_table, format_table, render_json, render_text

EXIT_OK, EXIT_INVALID, EXIT_IO, EXIT_NEGATIVE_CYCLE = 0, 1, 2, 3


class _UsageError(Exception):
    pass


def _vertex_list(text: str) -> list[int]:
    try:
        return [int(part) for part in text.split(",") if part.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated vertex ids, got {text!r}")


def _styler(stream) -> Callable[[str], str]:
    if os.environ.get("HUBNET_NO_COLOR") or not getattr(stream, "isatty", lambda: False)():
        return lambda s: s
    return lambda s: f"\033[1m{s}\033[0m"


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hubnet", description="Trading hub placement on a transport network.")
    sub = parser.add_subparsers(dest="command", required=True)

    p_solve = sub.add_parser("solve", help="run the full pipeline and print the report")
    p_solve.add_argument("scenario")
    p_solve.add_argument("--format", choices=("text", "json"), default="text")

    p_apsp = sub.add_parser("apsp", help="print shortest path weights for one cost class")
    p_apsp.add_argument("scenario")
    p_apsp.add_argument("--class", dest="cost_class", choices=[c.value for c in CostClass], default="heavy")
    p_apsp.add_argument("--from", dest="sources", type=_vertex_list)
    p_apsp.add_argument("--to", dest="targets", type=_vertex_list)
    p_apsp.add_argument("--format", choices=("text", "json"), default="text")

    p_val = sub.add_parser("validate", help="check a scenario file")
    p_val.add_argument("scenario")
    return parser


def cmd_solve(args: argparse.Namespace) -> int:
    scn = scenario_io.load(args.scenario)
    started = time.perf_counter()
    report = build_report(solve(scn))
    elapsed = time.perf_counter() - started
    if args.format == "json":
        sys.stdout.write(render_json(report))
    else:
        sys.stdout.write(render_text(report, _styler(sys.stdout)))
    print(f"solved in {elapsed * 1000:.1f} ms", file=sys.stderr)
    return EXIT_OK


def cmd_apsp(args: argparse.Namespace) -> int:
    scn = scenario_io.load(args.scenario)
    n = scn.network.vertex_count
    sources = args.sources if args.sources is not None else list(range(n))
    targets = args.targets if args.targets is not None else list(range(n))
    bad = [v for v in sources + targets if not 0 <= v < n]
    if bad:
        raise _UsageError(f"vertex {bad[0]} not in [0, {n})")
    matrix = shortest_path_matrix(scn.network, CostClass(args.cost_class))
    table = distance_table(matrix, sources, targets)
    if args.format == "json":
        doc = {"schema_version": SCHEMA_VERSION, "class": args.cost_class, **table}
        sys.stdout.write(render_json(doc))
    else:
        sys.stdout.write("\n".join(format_table(table)) + "\n")
    return EXIT_OK


def cmd_validate(args: argparse.Namespace) -> int:
    scn = scenario_io.load(args.scenario)
    profiles = math.comb(len(scn.candidate_locations), scn.actor_count)
    print(f"OK: {scn.network.vertex_count} vertices, {len(scn.network.edges)} edges, {profiles} profiles")
    return EXIT_OK


COMMANDS = {"solve": cmd_solve, "apsp": cmd_apsp, "validate": cmd_validate}


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_IO if exc.code else EXIT_OK
    try:
        return COMMANDS[args.command](args)
    except scenario_io.ScenarioFileError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    except ValidationError as exc:
        print(f"invalid scenario: {len(exc.issues)} issue(s)", file=sys.stderr)
        for issue in exc.issues:
            print(f"  {issue}", file=sys.stderr)
        return EXIT_INVALID
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except NegativeCycle as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NEGATIVE_CYCLE


if __name__ == "__main__":
    sys.exit(main())
