"""gen: write a named family graph to an edge-list or JSON file."""

from __future__ import annotations

import logging
from argparse import Namespace

from rich.console import Console

from ..utils.errors import GraphError
from ..utils.graphs import family_graph
from ..utils.serialize import format_for, write_graph
from .common import ExitCode

logger = logging.getLogger(__name__)


def run_gen(args: Namespace, console: Console) -> int:
    try:
        graph = family_graph(args.family, args.param)
    except GraphError as exc:
        logger.error("%s", exc)
        return ExitCode.USAGE
    try:
        write_graph(graph, args.out)
    except OSError as exc:
        logger.error("Cannot write %s: %s", args.out, exc)
        return ExitCode.USAGE
    logger.info("Wrote %s %d (n=%d, m=%d) to %s", args.family, args.param, graph.n, graph.m, args.out)
    console.print(f"{args.family} {args.param}: n={graph.n} m={graph.m} → {args.out} ({format_for(args.out)})")
    return ExitCode.OK
