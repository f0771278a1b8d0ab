"""Simplicial Lines - command-line entry point."""

from __future__ import annotations

import argparse
import logging
import sys
from typing import Optional, Sequence

from rich.console import Console
from rich.logging import RichHandler

from . import __version__
from .commands import ExitCode, run_analyze, run_gen, run_shell, run_verify
from .utils.errors import ConfigError
from .utils.graphs import FAMILIES
from .utils.indices import IndexKind
from .utils.settings import Settings, load_settings
from .utils.shelling import Method
from .utils.suites import SUITE_ALIASES, SUITES

logger = logging.getLogger("simplicial_lines")

KIND_CHOICES = [k.value for k in IndexKind]


def _common_options() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-v", "--verbose", action="count", default=0,
                        help="log progress (-v info, -vv debug) to stderr")
    common.add_argument("--format", choices=["text", "json"], default=None,
                        help="report format (default from settings: text)")
    common.add_argument("--max-facets", type=int, default=None, metavar="BOUND",
                        help="exhaustive shelling search bound (env SL_MAX_FACETS, default 20)")
    return common


def build_parser() -> argparse.ArgumentParser:
    common = _common_options()
    parser = argparse.ArgumentParser(
        prog="simplicial-lines",
        description="Line, Gallai and anti-Gallai simplicial complexes of finite simple graphs.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", parents=[common], help="write a named family graph")
    gen.add_argument("family", choices=list(FAMILIES))
    gen.add_argument("param", type=int)
    gen.add_argument("out", help="output path; .json writes JSON, anything else an edge list")

    analyze = sub.add_parser("analyze", parents=[common], help="complex invariants and theorem checks")
    analyze.add_argument("input")
    analyze.add_argument("--complex", action="append", choices=KIND_CHOICES,
                         help="complex to analyze, repeatable (default: all three)")
    analyze.add_argument("--dedupe", action="store_true", help="collapse duplicate edges instead of failing")

    shell = sub.add_parser("shell", parents=[common], help="decide shellability of one complex")
    shell.add_argument("input")
    shell.add_argument("--complex", choices=KIND_CHOICES, default=IndexKind.LINE.value)
    shell.add_argument("--mode", choices=["search", "verify"], default="search")
    shell.add_argument("--method", choices=[m.value for m in Method], default=Method.BOTH.value)
    shell.add_argument("--ordering-file", default=None,
                       help="JSON list of facet indices or facet vertex lists")
    shell.add_argument("--heuristic", action="store_true",
                       help="allow the greedy search above the facet bound")
    shell.add_argument("--dedupe", action="store_true", help="collapse duplicate edges instead of failing")

    verify = sub.add_parser("verify", parents=[common], help="run the verification suites")
    verify.add_argument("--suite", choices=["all", *SUITES, *SUITE_ALIASES], default="all")
    verify.add_argument("--max-n", type=int, default=None,
                        help="largest family parameter or corpus vertex count (suite specific default)")
    return parser


def setup_logging(verbosity: int, settings: Settings) -> None:
    if verbosity >= 2:
        level = logging.DEBUG
    elif verbosity == 1:
        level = logging.INFO
    else:
        level = logging.getLevelName(settings.log_level)
        if not isinstance(level, int):
            level = logging.WARNING
    handler = RichHandler(console=Console(stderr=True), show_time=False, show_path=False)
    logging.basicConfig(level=level, format="%(message)s", handlers=[handler], force=True)


_COMMANDS = {
    "gen": run_gen,
    "analyze": run_analyze,
    "shell": run_shell,
    "verify": run_verify,
}


def run(argv: Optional[Sequence[str]] = None) -> int:
    """Parse arguments, apply settings and dispatch; returns the exit code."""
    args = build_parser().parse_args(argv)
    try:
        settings = load_settings()
    except ConfigError as exc:
        setup_logging(args.verbose, Settings())
        logger.error("Configuration error: %s", exc)
        return ExitCode.USAGE
    setup_logging(args.verbose, settings)

    if args.max_facets is None:
        args.max_facets = settings.max_facets
    elif args.max_facets < 1:
        logger.error("--max-facets must be positive")
        return ExitCode.USAGE
    if args.format is None:
        args.format = settings.output_format
    args.corpus_limit = settings.corpus_limit

    console = Console(highlight=False)
    return int(_COMMANDS[args.command](args, console))


def main() -> None:
    """Main entry point."""
    sys.exit(run())


if __name__ == "__main__":
    main()
