"""
Console output for ydhopf built on Rich.
"""

from typing import Any, Dict, List

from rich import box
from rich.console import Console
from rich.markup import escape
from rich.panel import Panel
from rich.table import Table
from rich.theme import Theme

from ..config.settings import Settings
from ..utils.report import VerificationReport


class YDHopfConsole:
    """Tables and panels for reports, classifications and screens."""

    def __init__(self, settings: Settings):
        self.settings = settings
        self._setup_styles()
        self.console = Console(
            color_system="auto" if settings.ui.use_colors else None,
            theme=self.theme,
        )

    def _setup_styles(self) -> None:
        self.styles = {
            "title": "bold blue",
            "success": "bold green",
            "warning": "bold yellow",
            "error": "bold red",
            "info": "blue",
            "muted": "dim",
            "check_name": "bold",
            "witness": "magenta",
            "count": "cyan",
        }
        self.theme = Theme(self.styles)

    def print_banner(self, subject: str) -> None:
        from .. import __version__

        banner = Panel.fit(
            f"[bold blue]ydhopf {__version__}[/bold blue]\n[dim]{subject}[/dim]",
            box=box.ROUNDED,
            style="blue",
        )
        self.console.print(banner)

    def print_report(self, report: VerificationReport) -> None:
        """One row per check with coverage and the first witness of a failure."""
        limit = self.settings.ui.max_table_rows
        table = Table(title=report.subject, box=box.SIMPLE_HEAD)
        table.add_column("Check", style="check_name")
        table.add_column("Result", width=6)
        table.add_column("Checked", justify="right", style="count")
        table.add_column("Coverage", justify="right", style="muted")
        if self.settings.ui.show_witnesses:
            table.add_column("Witness", style="witness")

        # failures first so truncation never hides them
        checks = sorted(report.checks, key=lambda c: c.ok)
        for check in checks[:limit]:
            row = [
                escape(check.name),
                "[success]pass[/success]" if check.ok else "[error]FAIL[/error]",
                f"{check.checked}/{check.total}",
                f"{check.coverage:.0%}",
            ]
            if self.settings.ui.show_witnesses:
                row.append("" if check.witness is None else ", ".join(str(w) for w in check.witness))
            table.add_row(*row)
        if len(checks) > limit:
            table.add_row("...", f"[muted]{len(checks) - limit} more[/muted]", "", "")
        self.console.print(table)

        for key, value in report.facts.items():
            self.console.print(f"  [info]{escape(str(key))}:[/info] {escape(str(value))}")
        if report.ok:
            self.print_success(f"{len(report.checks)} checks passed")
        else:
            self.print_error(f"{len(report.failures)} of {len(report.checks)} checks failed")

    def print_classification(self, title: str, result: Dict[str, Any]) -> None:
        table = Table(title=title, box=box.SIMPLE_HEAD)
        table.add_column("#", justify="right", style="muted")
        table.add_column("Representative", style="bold")
        for i, rep in enumerate(result.get("representatives", []), 1):
            table.add_row(str(i), str(rep))
        self.console.print(table)
        if "orbit_lengths" in result:
            self.console.print(f"  [info]orbit lengths:[/info] {result['orbit_lengths']}")
        self.console.print(f"[title]{result['count']} classes[/title]")

    def print_screen_table(self, table_data: Any) -> None:
        table = Table(title=f"Grouplike screen, q = {table_data.q}, p <= {table_data.pmax}", box=box.SIMPLE_HEAD)
        table.add_column("p mod q", justify="right")
        table.add_column("n_p", justify="right", style="count")
        table.add_column("Inequality")
        table.add_column("Forces a grouplike for")
        for row in table_data.rows:
            if row.always_forced:
                forced = "[warning]every p[/warning]"
            else:
                forced = ", ".join(str(p) for p in row.forced) or "[muted]none[/muted]"
            table.add_row(str(row.residue), str(row.n_p), row.inequality, forced)
        self.console.print(table)
        exceptions = ", ".join(str(p) for p in table_data.exceptions) or "none"
        self.console.print(f"[title]Commutative and cocommutative for p in:[/title] {{{exceptions}}}")

    def print_modules(self, rows: List[Dict[str, Any]]) -> None:
        table = Table(title="Simple modules", box=box.SIMPLE_HEAD)
        table.add_column("Module", style="bold")
        table.add_column("dim", justify="right", style="count")
        table.add_column("Orbit", justify="right")
        table.add_column("kappa")
        table.add_column("kappa*")
        for row in rows[: self.settings.ui.max_table_rows]:
            table.add_row(
                row["name"], str(row["dim"]), str(row["orbit"]),
                str(row["kappa"]), str(row["kappa_star"]),
            )
        self.console.print(table)

    def print_mapping(self, title: str, values: Dict[str, Any]) -> None:
        self.console.print(f"[title]{title}[/title]")
        for key, value in values.items():
            self.console.print(f"  [info]{escape(str(key))}:[/info] {escape(str(value))}")

    def show_configuration(self, settings: Settings) -> None:
        self.console.print("[bold blue]ydhopf Configuration[/bold blue]")
        self.console.print()
        self.console.print("[bold]Arithmetic:[/bold]")
        self.console.print(f"  Conductor override: {settings.arithmetic.conductor}")
        self.console.print()
        self.console.print("[bold]Verification:[/bold]")
        v = settings.verification
        self.console.print(f"  Exhaustive threshold: {v.exhaustive_threshold}")
        self.console.print(f"  Triple budget: {v.triple_budget}")
        self.console.print(f"  Sample size: {v.sample_size}")
        self.console.print(f"  Threads: {v.threads}")
        self.console.print()

    def show_progress_spinner(self, description: str):
        return self.console.status(f"[blue]{description}...[/blue]", spinner="dots")

    def print_success(self, message: str) -> None:
        self.console.print(f"[success]✓ {message}[/success]")

    def print_warning(self, message: str) -> None:
        self.console.print(f"[warning]⚠ {message}[/warning]")

    def print_error(self, message: str) -> None:
        self.console.print(f"[error]✗ {message}[/error]")

    def print_info(self, message: str) -> None:
        self.console.print(f"[info]ℹ {message}[/info]")
