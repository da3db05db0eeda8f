"""Command-line interface.

    netspine <command> INPUT [options]

Commands: reduce, signature, centers, diameter, verify, report. INPUT is
an edge-list file (``-`` for stdin). Results go to stdout as a JSON
report unless ``--report`` names a file. Exit status is 0 on success, 1
on bad input or usage, 2 when ``verify`` finds a problem.

The ``NETSPINE_JOBS`` environment variable sets the number of workers
used for cycle enumeration.
"""

from __future__ import annotations

import argparse
import logging
import os
import random
import sys

from .cycles import signature
from .estimators import NetworkAnalyzer
from .io import EdgeListError, read_edge_list, write_dot, write_report
from .reduction import verification_problems

log = logging.getLogger("netspine")

COMMAND_SECTIONS = {
    "reduce": ("reduction",),
    "signature": ("reduction", "signature"),
    "centers": ("reduction", "centers"),
    "diameter": ("reduction", "diameter"),
    "verify": ("reduction",),
    "report": ("reduction", "signature", "centers", "diameter"),
}

EXIT_OK, EXIT_INPUT, EXIT_VERIFY = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _visit_order(text: str) -> tuple[str, int | None]:
    if text == "ascending":
        return "ascending", None
    if text.startswith("seed:"):
        try:
            return "random", int(text[5:])
        except ValueError:
            pass
    raise argparse.ArgumentTypeError(f"expected 'ascending' or 'seed:<int>', got {text!r}")


def _max_k(text: str) -> int:
    try:
        k = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if k < 3:
        raise argparse.ArgumentTypeError("--max-k must be at least 3")
    return k


def _highlight(text: str) -> int | None:
    if text == "none":
        return None
    kind, _, idx = text.partition(":")
    if kind == "longest" and idx.isdigit():
        return int(idx)
    raise argparse.ArgumentTypeError(f"expected 'longest:<i>' or 'none', got {text!r}")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="netspine", description="Irreducible spine analysis of undirected networks.")
    parser.add_argument("-v", "--verbose", action="count", default=0, help="log progress to stderr")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    for name in COMMAND_SECTIONS:
        p = sub.add_parser(name)
        p.add_argument("input", help="edge-list file, or - for stdin")
        p.add_argument("--max-k", type=_max_k, default=32, help="longest chordless cycle to search (default 32)")
        p.add_argument(
            "--visit-order",
            type=_visit_order,
            default=("ascending", None),
            metavar="ascending|seed:N",
            help="node visit order for the reduction",
        )
        p.add_argument("--report", metavar="PATH", help="write the JSON report here instead of stdout")
        p.add_argument("--dot", metavar="PATH", help="write the spine as DOT")
        p.add_argument(
            "--highlight",
            type=_highlight,
            default=None,
            metavar="longest:I|none",
            help="embolden the I-th longest chordless cycle in the DOT output",
        )
        p.add_argument(
            "--exact-diameter",
            action=argparse.BooleanOptionalAction,
            default=True,
            help="also compute the exact diameter by repeated BFS",
        )
        if name == "verify":
            p.add_argument(
                "--network",
                action="store_true",
                help="input is a raw network, not a claimed spine (skip its irreducibility check)",
            )
            p.add_argument(
                "--samples",
                type=int,
                default=None,
                help="check distances from this many random spine nodes (default: all)",
            )
            p.add_argument("--seed", type=int, default=0, help="seed for --samples")
    return parser


def _read_input(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _write(path: str | None, text: str) -> None:
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)


def run(args: argparse.Namespace) -> int:
    try:
        g, duplicates = read_edge_list(_read_input(args.input))
    except (OSError, UnicodeDecodeError, EdgeListError, ValueError) as exc:
        print(f"netspine: {args.input}: {exc}", file=sys.stderr)
        return EXIT_INPUT
    if duplicates:
        print(f"netspine: warning: {duplicates} duplicate edge(s) collapsed", file=sys.stderr)

    order, seed = args.visit_order
    analyzer = NetworkAnalyzer(
        max_k=args.max_k,
        visit_order=order,
        random_state=seed,
        exact_diameter=args.exact_diameter,
        sections=COMMAND_SECTIONS[args.command],
        n_jobs=int(os.environ.get("NETSPINE_JOBS", "1")),
    ).fit(g)
    r = analyzer.reduction_
    log.info("%d nodes reduced to %d in %d iterations", g.n, r.spine.n, r.iterations)
    report = analyzer.report()
    report.input["duplicate_edges"] = duplicates

    status = EXIT_OK
    if args.command == "verify":
        sources = None
        if args.samples is not None and args.samples < r.spine.n:
            sources = sorted(random.Random(args.seed).sample(list(r.survivors), args.samples))
        problems = verification_problems(r, claimed_spine=not args.network, distance_sources=sources)
        report.extra["verify"] = {
            "claimed_spine": not args.network,
            "distance_sources": "all" if sources is None else len(sources),
            "problems": problems,
            "passed": not problems,
        }
        for p in problems:
            print(f"netspine: verify: {p}", file=sys.stderr)
        if problems:
            status = EXIT_VERIFY

    if args.dot:
        cycle = None
        if args.highlight is not None:
            sig = analyzer.signature_ or signature(r.spine, max_k=args.max_k)
            major = sig.longest()
            if args.highlight >= len(major):
                print(
                    f"netspine: --highlight longest:{args.highlight} but only {len(major)} longest cycle(s)",
                    file=sys.stderr,
                )
                return EXIT_INPUT
            cycle = major[args.highlight]
        _write(args.dot, write_dot(r.spine, r, cycle))
    _write(args.report, write_report(report))
    return status


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"netspine: error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    logging.basicConfig(
        level=logging.WARNING - 10 * min(args.verbose, 2),
        format="%(name)s: %(message)s",
        stream=sys.stderr,
    )
    return run(args)


if __name__ == "__main__":
    sys.exit(main())
