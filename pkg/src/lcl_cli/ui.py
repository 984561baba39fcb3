"""Terminal UI helpers for the lcl CLI."""

from __future__ import annotations

from typing import Iterable, Optional, Sequence

from rich.align import Align
from rich.console import Console
from rich.panel import Panel
from rich.table import Table
from rich.text import Text
from rich.tree import Tree

console = Console()

BANNER = """
 __      ______  __
/\\ \\    /\\  ___\\/\\ \\
\\ \\ \\___\\ \\ \\___\\ \\ \\____
 \\ \\_____\\ \\_____\\ \\_____\\
  \\/_____/\\/_____/\\/_____/"""

TAGLINE = "lcl - limit cones and arithmeticity of groups acting on products of hyperbolic spaces"


class StepTracker:
    """Hierarchical step list rendered as a rich tree."""

    def __init__(self, title: str):
        self.title = title
        self.steps = []  # list of dicts: {key, label, status, detail}

    def add(self, key: str, label: str):
        if key not in [s["key"] for s in self.steps]:
            self.steps.append({"key": key, "label": label, "status": "pending", "detail": ""})

    def complete(self, key: str, detail: str = ""):
        self._update(key, status="done", detail=detail)

    def error(self, key: str, detail: str = ""):
        self._update(key, status="error", detail=detail)

    def skip(self, key: str, detail: str = ""):
        self._update(key, status="skipped", detail=detail)

    def _update(self, key: str, status: str, detail: str):
        for s in self.steps:
            if s["key"] == key:
                s["status"] = status
                if detail:
                    s["detail"] = detail
                return
        self.steps.append({"key": key, "label": key, "status": status, "detail": detail})

    def render(self):
        tree = Tree(f"[cyan]{self.title}[/cyan]", guide_style="grey50")
        symbols = {
            "done": "[green]●[/green]",
            "pending": "[green dim]○[/green dim]",
            "error": "[red]●[/red]",
            "skipped": "[yellow]○[/yellow]",
        }
        for step in self.steps:
            symbol = symbols.get(step["status"], " ")
            detail = step["detail"].strip()
            if detail:
                tree.add(f"{symbol} [white]{step['label']}[/white] [bright_black]({detail})[/bright_black]")
            else:
                tree.add(f"{symbol} [white]{step['label']}[/white]")
        return tree


def show_banner():
    """Display the ASCII art banner."""
    colors = ["deep_sky_blue1", "dodger_blue1", "royal_blue1", "slate_blue1", "medium_purple1"]
    styled_banner = Text()
    for i, line in enumerate(BANNER.strip("\n").split("\n")):
        styled_banner.append(line + "\n", style=colors[i % len(colors)])
    console.print(Align.center(styled_banner))
    console.print(Align.center(Text(TAGLINE, style="italic deep_sky_blue1")))
    console.print()


VERDICT_STYLES = {
    "one-point": "green",
    "multi-point": "yellow",
    "arithmetic-consistent": "green",
    "semi-arithmetic-consistent": "yellow",
    "non-arithmetic": "red",
    "non-integral": "red",
    "indeterminate": "bright_black",
}


def verdict_panel(title: str, verdict: str, lines: Iterable[str] = ()) -> Panel:
    style = VERDICT_STYLES.get(verdict, "cyan")
    body = "\n".join([f"[bold {style}]{verdict}[/bold {style}]", *lines])
    return Panel(body, title=title, border_style=style, expand=False)


def key_value_table(title: str, rows: Iterable[tuple[str, object]]) -> Table:
    table = Table(title=title, show_header=False, title_justify="left")
    table.add_column("key", style="cyan")
    table.add_column("value")
    for key, value in rows:
        table.add_row(key, str(value))
    return table


def rows_table(title: str, columns: Sequence[str], rows: Iterable[Sequence[object]], limit: Optional[int] = None) -> Table:
    table = Table(title=title, title_justify="left")
    for column in columns:
        table.add_column(column)
    rows = list(rows)
    for row in rows[:limit]:
        table.add_row(*(str(x) for x in row))
    if limit is not None and len(rows) > limit:
        table.caption = f"{len(rows) - limit} more rows not shown"
    return table
