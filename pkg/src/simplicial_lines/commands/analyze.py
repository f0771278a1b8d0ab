"""analyze: invariants of the line, Gallai and anti-Gallai complexes of a graph file."""

from __future__ import annotations

import logging
from argparse import Namespace

from rich.console import Console

from ..utils.analysis import ALL_KINDS, analyze_graph
from ..utils.errors import GraphError, GraphFormatError
from ..utils.serialize import read_graph
from ..widgets import render_analysis
from .common import ExitCode, emit_json

logger = logging.getLogger(__name__)


def run_analyze(args: Namespace, console: Console) -> int:
    try:
        graph = read_graph(args.input, dedupe=args.dedupe)
    except (GraphError, GraphFormatError) as exc:
        logger.error("Cannot parse %s: %s", args.input, exc)
        return ExitCode.USAGE
    except OSError as exc:
        logger.error("Cannot read %s: %s", args.input, exc)
        return ExitCode.USAGE

    kinds = args.complex or list(ALL_KINDS)
    report = analyze_graph(graph, kinds)
    if graph.isolated_vertices():
        logger.warning("Isolated vertices %s are absent from every complex", graph.isolated_vertices())

    if args.format == "json":
        emit_json(report.to_dict())
    else:
        console.print(render_analysis(report))

    if report.theorems.failed:
        logger.error("A theorem verdict failed for %s", args.input)
        return ExitCode.THEOREM_FAIL
    return ExitCode.OK
