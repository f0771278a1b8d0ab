"""Tokyo Night palette shared by the text renderers."""

from __future__ import annotations

PRIMARY = "#7aa2f7"
SECONDARY = "#bb9af7"
SUCCESS = "#9ece6a"
WARNING = "#e0af68"
ERROR = "#f7768e"
TEXT = "#c0caf5"
MUTED = "#565f89"
SEPARATOR = "#414868"

_VERDICT_COLORS = {
    "PASS": SUCCESS,
    "SHELLABLE": SUCCESS,
    "FAIL": ERROR,
    "NOT_SHELLABLE": ERROR,
    "SKIPPED": MUTED,
    "INCONCLUSIVE": WARNING,
}


def verdict_markup(verdict: str) -> str:
    """Colored verdict, e.g. "[#9ece6a]PASS[/]"."""
    return f"[{_VERDICT_COLORS.get(verdict, TEXT)}]{verdict}[/]"


def yes_no(value) -> str:
    if value is None:
        return f"[{MUTED}]-[/]"
    return f"[{SUCCESS}]yes[/]" if value else f"[{WARNING}]no[/]"
