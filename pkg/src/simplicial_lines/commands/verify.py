"""verify: run the verification suites and print expected versus computed values."""

from __future__ import annotations

import logging
from argparse import Namespace

from rich.console import Console

from ..utils.errors import GraphError
from ..utils.suites import SUITES, SuiteContext, run_suites
from ..widgets import render_suites
from .common import ExitCode, emit_json

logger = logging.getLogger(__name__)


def run_verify(args: Namespace, console: Console) -> int:
    names = list(SUITES) if args.suite == "all" else [args.suite]
    ctx = SuiteContext(
        max_n=args.max_n,
        max_facets=args.max_facets,
        corpus_limit=args.corpus_limit,
    )
    try:
        results = run_suites(names, ctx)
    except GraphError as exc:
        logger.error("%s", exc)
        return ExitCode.USAGE

    if args.format == "json":
        emit_json({
            "passed": not any(r.failed for r in results),
            "suites": [r.to_dict() for r in results],
        })
    else:
        console.print(render_suites(results))
    return ExitCode.THEOREM_FAIL if any(r.failed for r in results) else ExitCode.OK
