"""shell: search for or verify a shelling order of one complex of a graph file."""

from __future__ import annotations

import json
import logging
from argparse import Namespace
from pathlib import Path

from rich.console import Console

from ..utils.complexes import complex_for
from ..utils.errors import (
    FacetBoundExceeded,
    GraphError,
    GraphFormatError,
    OrderingError,
    VoidComplexError,
)
from ..utils.serialize import read_graph
from ..utils.shelling import ShellingVerdict, find_shelling_order, verify_ordering
from ..widgets import render_certificate
from .common import ExitCode, emit_json

logger = logging.getLogger(__name__)

_VERDICT_EXIT = {
    ShellingVerdict.SHELLABLE: ExitCode.OK,
    ShellingVerdict.NOT_SHELLABLE: ExitCode.NOT_SHELLABLE,
    ShellingVerdict.INCONCLUSIVE: ExitCode.INCONCLUSIVE,
}


def load_ordering(path: str) -> list:
    """JSON list of facet indices (0-based) or of facet vertex lists."""
    data = json.loads(Path(path).read_text(encoding="utf-8"))
    if not isinstance(data, list):
        raise OrderingError("ordering file must hold a JSON list")
    return data


def run_shell(args: Namespace, console: Console) -> int:
    try:
        graph = read_graph(args.input, dedupe=args.dedupe)
    except (GraphError, GraphFormatError) as exc:
        logger.error("Cannot parse %s: %s", args.input, exc)
        return ExitCode.USAGE
    except OSError as exc:
        logger.error("Cannot read %s: %s", args.input, exc)
        return ExitCode.USAGE

    cx = complex_for(graph, args.complex)
    ordering = None
    if args.ordering_file:
        try:
            ordering = load_ordering(args.ordering_file)
        except (OSError, UnicodeDecodeError, json.JSONDecodeError, OrderingError) as exc:
            logger.error("Cannot load ordering %s: %s", args.ordering_file, exc)
            return ExitCode.USAGE

    try:
        if args.mode == "verify":
            if ordering is None:
                logger.error("--mode verify needs --ordering-file")
                return ExitCode.USAGE
            certificate = verify_ordering(cx, ordering, args.method)
        else:
            try:
                certificate = find_shelling_order(
                    cx, args.method, max_facets=args.max_facets, heuristic=args.heuristic
                )
            except FacetBoundExceeded as exc:
                if ordering is None:
                    logger.error("%s", exc)
                    return ExitCode.BOUND_EXCEEDED
                logger.info("Facet bound exceeded, verifying the supplied ordering instead")
                certificate = verify_ordering(cx, ordering, args.method)
    except VoidComplexError:
        logger.error("The %s complex of %s is void; nothing to shell", args.complex, args.input)
        return ExitCode.USAGE
    except OrderingError as exc:
        logger.error("Invalid ordering: %s", exc)
        return ExitCode.USAGE

    if certificate.disagreements:
        logger.error(
            "Definition and residual predicates disagree on %d steps; compare whole orderings",
            len(certificate.disagreements),
        )

    if args.format == "json":
        emit_json(certificate.to_dict())
    else:
        console.print(render_certificate(certificate))
    return _VERDICT_EXIT[certificate.verdict]
