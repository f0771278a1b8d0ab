"""Shelling certificate renderer."""

from __future__ import annotations

from rich.console import Group
from rich.table import Table
from rich.text import Text

from ..utils.indices import face_notation
from ..utils.monomials import Monomial
from ..utils.shelling import ShellingCertificate
from .theme import ERROR, MUTED, PRIMARY, SUCCESS, TEXT, verdict_markup


def _evidence(step) -> str:
    parts = []
    if step.intersections is not None:
        faces = ", ".join("{" + ",".join(map(str, f)) + "}" for f in step.intersections)
        parts.append(f"∩ {faces}")
    if step.residuals is not None:
        parts.append("Res {" + ", ".join(str(m) for m in step.residuals) + "}")
    return "  ".join(parts) or f"[{MUTED}]first facet[/]"


def render_certificate(certificate: ShellingCertificate) -> Group:
    parts = [Text.from_markup(
        f"[{PRIMARY}]Shellability[/]  {verdict_markup(certificate.verdict.value)}  "
        f"[{MUTED}]method={certificate.method.value}  search={certificate.search}  "
        f"facets={len(certificate.facets)}[/]"
    )]
    if certificate.refutation:
        parts.append(Text.from_markup(f"[{MUTED}]{certificate.refutation}[/]"))
    if certificate.failed_at is not None:
        parts.append(Text.from_markup(f"[{ERROR}]ordering fails at step {certificate.failed_at}[/]"))

    if certificate.steps:
        table = Table(box=None, header_style=MUTED, padding=(0, 2))
        for column in ("i", "facet", "ok", "evidence"):
            table.add_column(column)
        for step in certificate.steps:
            ok = f"[{SUCCESS}]✓[/]" if step.ok else f"[{ERROR}]✗[/]"
            monomial = str(Monomial.of(step.facet))
            table.add_row(
                str(step.position),
                f"[{TEXT}]{face_notation(step.facet)}[/] [{MUTED}]{monomial}[/]",
                ok,
                _evidence(step),
            )
        parts.append(table)

    for disagreement in certificate.disagreements:
        parts.append(Text.from_markup(
            f"[{ERROR}]step predicates disagree on {face_notation(disagreement.facet)}: "
            f"definition={disagreement.definition_ok} residuals={disagreement.residuals_ok}[/]"
        ))
    return Group(*parts)
