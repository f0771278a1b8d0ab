"""Verification suite summary table."""

from __future__ import annotations

from rich.console import Group
from rich.table import Table
from rich.text import Text

from ..utils.suites import SuiteResult
from .theme import MUTED, PRIMARY, TEXT, verdict_markup


def render_suites(results: list[SuiteResult]) -> Group:
    parts = []
    for result in results:
        status = "FAIL" if result.failed else "PASS"
        parts.append(Text.from_markup(
            f"[{PRIMARY}]{result.name}[/]  [{MUTED}]{result.description}[/]  {verdict_markup(status)}"
        ))
        table = Table(box=None, header_style=MUTED, padding=(0, 2))
        for column in ("case", "expected", "computed", ""):
            table.add_column(column)
        for row in result.rows:
            table.add_row(f"[{TEXT}]{row.case}[/]", row.expected, row.computed, verdict_markup(row.verdict.value))
        parts.append(table)

    total = sum(len(r.rows) for r in results)
    failed = sum(1 for r in results for row in r.rows if row.verdict.value == "FAIL")
    parts.append(Text.from_markup(
        f"[{MUTED}]{len(results)} suites, {total} rows,[/] "
        + (verdict_markup("FAIL") + f" [{MUTED}]{failed} failing[/]" if failed else verdict_markup("PASS"))
    ))
    return Group(*parts)
