"""Analysis report renderer - graph summary, complex invariants, theorem verdicts."""

from __future__ import annotations

from rich.console import Group
from rich.table import Table
from rich.text import Text

from ..utils.analysis import AnalysisReport
from ..utils.indices import face_notation
from .theme import MUTED, PRIMARY, SECONDARY, SEPARATOR, TEXT, verdict_markup, yes_no

MAX_LISTED_FACETS = 12


def _facet_summary(facets: list[list[int]]) -> str:
    if not facets:
        return f"[{MUTED}]void[/]"
    shown = ", ".join(face_notation(f) for f in facets[:MAX_LISTED_FACETS])
    hidden = len(facets) - MAX_LISTED_FACETS
    if hidden > 0:
        shown += f" [{MUTED}]+{hidden} more[/]"
    return shown


def render_analysis(report: AnalysisReport) -> Group:
    data = report.to_dict()
    graph = data["graph"]

    header = Text.from_markup(
        f"[{PRIMARY}]Graph[/]  [{TEXT}]n={graph['n']}  m={graph['m']}  "
        f"triangles={graph['triangles']}[/]  [{MUTED}]connected[/] {yes_no(graph['connected'])}"
    )
    parts = [header]
    if graph["isolated_vertices"]:
        parts.append(Text.from_markup(
            f"[{MUTED}]isolated vertices (absent from every complex): "
            f"{', '.join(map(str, graph['isolated_vertices']))}[/]"
        ))

    table = Table(box=None, header_style=MUTED, padding=(0, 2), border_style=SEPARATOR)
    for column in ("complex", "f-vector", "χ", "dim", "pure", "connected", "comp", "facets"):
        table.add_column(column)
    for block in data["complexes"]:
        fv = block["f_vector"]
        table.add_row(
            f"[{SECONDARY}]{block['kind']}[/]",
            "-" if fv is None else "(" + ", ".join(map(str, fv)) + ")",
            "-" if block["euler"] is None else str(block["euler"]),
            "-" if block["dim"] is None else str(block["dim"]),
            yes_no(block["pure"]),
            yes_no(block["connected"]),
            str(block["components"]),
            _facet_summary(block["facets"]),
        )
    parts.append(table)

    theorems = data["theorems"]
    t1, t2 = theorems["t1"], theorems["t2"]
    if t1["verdict"] == "SKIPPED":
        parts.append(Text.from_markup(
            f"[{MUTED}]theorem checks[/] {verdict_markup('SKIPPED')}  [{MUTED}]{t1['reason']}[/]"
        ))
    else:
        parts.append(Text.from_markup(
            f"[{MUTED}]connectedness[/]  G {yes_no(t1['graph_connected'])}  "
            f"Δ_L {yes_no(t1['complex_connected'])}  {verdict_markup(t1['verdict'])}"
        ))
        parts.append(Text.from_markup(
            f"[{MUTED}]Euler[/]  χ(Δ_L)={t2['line_euler']}  χ(Δ_Γ)={t2['gallai_euler']}  "
            f"|Ω_Γ′|={t2['anti_gallai_count']}  {verdict_markup(t2['verdict'])}"
        ))
    return Group(*parts)
