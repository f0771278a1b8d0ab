"""Exit codes and output helpers shared by the sub-commands."""

from __future__ import annotations

import json
import sys
from enum import IntEnum


class ExitCode(IntEnum):
    OK = 0
    USAGE = 2
    THEOREM_FAIL = 3
    NOT_SHELLABLE = 4
    INCONCLUSIVE = 5
    BOUND_EXCEEDED = 6


def emit_json(data: dict) -> None:
    """Write a JSON document to stdout; key order is fixed by the report builders."""
    sys.stdout.write(json.dumps(data, indent=2, ensure_ascii=False) + "\n")
