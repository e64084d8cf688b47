"""
Command-line interface using Typer with Rich integration.
"""

import json
import sys
from contextlib import contextmanager
from enum import Enum
from pathlib import Path
from typing import Any, Dict, Optional

import click
import typer
from loguru import logger
from rich.console import Console
from rich.markup import escape

from .cliffrep import SplittingFieldTooSmall
from .config.settings import Settings
from .core import YDHopfEngine
from .errors import InputError, YDHopfError
from .utils.cache import build_cache

app = typer.Typer(
    name="ydhopf",
    help="Exact construction and verification of Yetter-Drinfel'd Hopf algebras over cyclic groups",
    add_completion=False,
    rich_markup_mode="rich",
    no_args_is_help=True,
)

# Global console for error handling
console = Console()


class Suite(str, Enum):
    AXIOMS = "axioms"
    INTEGRALS = "integrals"
    EXTENSIONS = "extensions"
    ADJOINTS = "adjoints"
    ALL = "all"


def setup_logging(log_level: str = "WARNING", log_file: Optional[Path] = None):
    """Setup logging configuration."""
    logger.remove()

    logger.add(
        sys.stderr,
        level=log_level,
        format="<green>{time:HH:mm:ss}</green> | <level>{level: <8}</level> | <cyan>{name}</cyan>:<cyan>{function}</cyan>:<cyan>{line}</cyan> - <level>{message}</level>",
        colorize=True,
    )

    if log_file:
        log_file.parent.mkdir(parents=True, exist_ok=True)
        logger.add(
            log_file,
            level="DEBUG",
            format="{time:YYYY-MM-DD HH:mm:ss} | {level: <8} | {name}:{function}:{line} - {message}",
            rotation="1 MB",
            retention="7 days",
        )


@app.callback(invoke_without_command=True)
def main_callback(
    ctx: typer.Context,
    conductor: Optional[int] = typer.Option(
        None, "--conductor", "-N",
        help="Work over Q(zeta_N) for this N instead of the natural conductor"
    ),
    threads: Optional[int] = typer.Option(
        None, "--threads", "-t",
        help="Worker threads for verification scans"
    ),
    config_file: Optional[Path] = typer.Option(
        None, "--config", "-c",
        help="Path to configuration file"
    ),
    verbose: bool = typer.Option(
        False, "--verbose", "-v",
        help="Enable verbose logging"
    ),
    debug: bool = typer.Option(
        False, "--debug", "-d",
        help="Enable debug logging (includes verbose)"
    ),
    version: bool = typer.Option(
        False, "--version",
        help="Show version information"
    ),
):
    """
    Build, verify and classify Yetter-Drinfel'd Hopf algebras with exact arithmetic.

    [bold blue]Examples:[/bold blue]

    [green]ydhopf build recipe.json[/green]                     # Canonical JSON dump
    [green]ydhopf verify recipe.json --suite all[/green]        # Run every verification suite
    [green]ydhopf verify dump.json[/green]                      # Hopf axioms of a saved dump
    [green]ydhopf classify --bp 5[/green]                       # Biproduct classes for p = 5
    [green]ydhopf classify --dim-p2 3[/green]                   # Dimension p^2 classes over K[Z_3]
    [green]ydhopf screen-pq --q 7 --pmax 100[/green]            # Grouplike screen in dimension pq
    [green]echo '{"family":"A_p","p":3}' | ydhopf build -[/green]  # Recipe from stdin
    """
    if version:
        from . import __version__
        console.print(f"[bold blue]ydhopf[/bold blue] version [green]{__version__}[/green]")
        raise typer.Exit()

    ctx.obj = {
        "conductor": conductor,
        "threads": threads,
        "config_file": config_file,
        "verbose": verbose,
        "debug": debug,
    }


@app.command()
def build(
    ctx: typer.Context,
    recipe: str = typer.Argument(..., help="Recipe file, inline JSON, or - for stdin"),
    json_out: Optional[Path] = typer.Option(None, "--json", "-j", help="Write the dump here instead of stdout"),
):
    """
    Build the structure a recipe describes and print its canonical JSON.

    [bold blue]Examples:[/bold blue]

    [green]ydhopf build '{"family":"A_p","p":3,"m":1,"n":0}'[/green]
    [green]ydhopf build bp.json --json bp-dump.json[/green]
    """
    _run_build(ctx.obj, recipe, json_out)


@app.command()
def verify(
    ctx: typer.Context,
    recipe: str = typer.Argument(..., help="Recipe or structure dump: file, inline JSON, or -"),
    suite: Suite = typer.Option(
        Suite.ALL, "--suite", "-s",
        help="Verification suite to run"
    ),
    json_out: Optional[Path] = typer.Option(None, "--json", "-j", help="Write the report as JSON"),
):
    """
    Run verification suites; exit 0 iff every check passes.

    A dump written by [green]build[/green] is recognized and checked against the Hopf axioms.
    """
    _run_verify(ctx.obj, recipe, suite.value, json_out)


@app.command()
def classify(
    ctx: typer.Context,
    dim_p2: Optional[int] = typer.Option(None, "--dim-p2", help="Classify dimension p^2 YD Hopf algebras over K[Z_p]"),
    bp: Optional[int] = typer.Option(None, "--bp", help="Count isomorphism classes of the biproducts B_p"),
    cross_check: bool = typer.Option(False, "--cross-check", help="Confirm the partition with explicit isomorphisms"),
    json_out: Optional[Path] = typer.Option(None, "--json", "-j", help="Write the classification as JSON"),
):
    """
    Isomorphism classification counts.

    [bold blue]Examples:[/bold blue]

    [green]ydhopf classify --dim-p2 5[/green]       # 20 classes
    [green]ydhopf classify --bp 3[/green]           # 4 classes
    """
    _run_classify(ctx.obj, dim_p2, bp, cross_check, json_out)


@app.command()
def decompose(
    ctx: typer.Context,
    recipe: str = typer.Argument(..., help="Recipe file, inline JSON, or -"),
    json_out: Optional[Path] = typer.Option(None, "--json", "-j", help="Write the decomposition as JSON"),
):
    """Recover the construction data (G, nu, alpha, beta, q) of a YD Hopf algebra over K[Z_p]."""
    _run_decompose(ctx.obj, recipe, json_out)


@app.command()
def isomorphic(
    ctx: typer.Context,
    first: str = typer.Argument(..., help="First recipe"),
    second: str = typer.Argument(..., help="Second recipe"),
):
    """Decide whether two A_p, B_p or A_pm recipes give isomorphic algebras; exit 0 iff they do."""
    _run_isomorphic(ctx.obj, first, second)


@app.command()
def clifford(
    ctx: typer.Context,
    recipe: str = typer.Argument(..., help="Recipe of a commutative semisimple A, its biproduct, or B_p"),
    json_out: Optional[Path] = typer.Option(None, "--json", "-j", help="Write the analysis as JSON"),
):
    """Simple modules of A (x) K[Z_p] with linkage and character orthogonality checks."""
    _run_clifford(ctx.obj, recipe, json_out)


@app.command("screen-pq")
def screen_pq(
    ctx: typer.Context,
    q: int = typer.Option(..., "--q", help="The prime q"),
    pmax: int = typer.Option(100, "--pmax", help="Largest prime p screened"),
    json_out: Optional[Path] = typer.Option(None, "--json", "-j", help="Write the table as JSON"),
):
    """
    Screen dimension pq for forced grouplikes, residue class by residue class.

    [green]ydhopf screen-pq --q 5 --pmax 270[/green]
    """
    _run_screen(ctx.obj, q, pmax, json_out)


@app.command()
def config(
    ctx: typer.Context,
    show: bool = typer.Option(False, "--show", "-s", help="Show current configuration"),
    save: Optional[Path] = typer.Option(None, "--save", help="Write the effective configuration to this file"),
):
    """Show or save the effective configuration."""
    _run_config(ctx.obj, show, save)


def _settings(options: Dict[str, Any]) -> Settings:
    """Settings with command-line overrides applied, logging configured."""
    config_file = options.get("config_file")
    settings = Settings.from_file(config_file) if config_file else Settings()
    if options.get("conductor") is not None:
        settings.arithmetic.conductor = options["conductor"]
    if options.get("threads") is not None:
        settings.verification.threads = options["threads"]

    # debug overrides verbose
    if options.get("debug"):
        log_level = "DEBUG"
    elif options.get("verbose"):
        log_level = "INFO"
    else:
        log_level = settings.ui.log_level
    setup_logging(log_level, settings.log_file)
    return settings


def _read_source(source: str) -> str:
    if source == "-":
        return click.get_text_stream("stdin").read()
    if source.lstrip().startswith("{"):
        return source
    path = Path(source)
    if not path.exists():
        raise InputError(f"No such recipe file: {source}")
    return path.read_text()


def _write_json(payload: Any, json_out: Optional[Path]) -> None:
    text = json.dumps(payload, sort_keys=True, indent=2)
    if json_out is None:
        return
    json_out.parent.mkdir(parents=True, exist_ok=True)
    json_out.write_text(text + "\n")
    console.print(f"[green]Wrote[/green] {json_out}")


@contextmanager
def _handle_errors():
    try:
        yield
    except typer.Exit:
        raise
    except SplittingFieldTooSmall as e:
        console.print(f"[red]Error:[/red] {escape(str(e))}")
        if e.suggested_conductor:
            console.print(f"Retry with [green]--conductor {e.suggested_conductor}[/green]")
        raise typer.Exit(e.exit_code)
    except YDHopfError as e:
        console.print(f"[red]Error:[/red] {escape(str(e))}")
        raise typer.Exit(e.exit_code)
    except KeyboardInterrupt:
        console.print("\n[yellow]Operation cancelled by user[/yellow]")
        raise typer.Exit(130)
    except Exception as e:
        logger.exception("Unexpected error occurred")
        console.print(f"[red]Unexpected error:[/red] {escape(str(e))}")
        raise typer.Exit(1)


def _run_build(options: Dict[str, Any], source: str, json_out: Optional[Path]):
    """Run build command."""
    with _handle_errors():
        engine = YDHopfEngine(_settings(options))
        recipe = engine.load_recipe(_read_source(source))
        dump = engine.dump(recipe)
        if json_out is None:
            # plain stdout so the dump can be piped
            sys.stdout.write(dump + "\n")
        else:
            json_out.parent.mkdir(parents=True, exist_ok=True)
            json_out.write_text(dump + "\n")
            console.print(f"[green]Wrote[/green] {json_out}")


def _run_verify(options: Dict[str, Any], source: str, suite: str, json_out: Optional[Path]):
    """Run verify command."""
    with _handle_errors():
        engine = YDHopfEngine(_settings(options))
        text = _read_source(source)
        if _is_dump(text):
            engine.console.print_banner("structure dump")
            report = engine.verify_dump(text)
        else:
            recipe = engine.load_recipe(text)
            engine.console.print_banner(f"{recipe.family}, suite {suite}")
            with engine.console.show_progress_spinner("Verifying"):
                report = engine.verify(recipe, suite)
        engine.console.print_report(report)
        _write_json(report.to_dict(), json_out)
        logger.debug(f"Build cache: {build_cache.get_stats()}")
        if not report.ok:
            raise typer.Exit(1)


def _is_dump(text: str) -> bool:
    try:
        data = json.loads(text)
    except json.JSONDecodeError:
        return False
    return isinstance(data, dict) and "mult" in data


def _run_classify(
    options: Dict[str, Any],
    dim_p2: Optional[int],
    bp: Optional[int],
    cross_check: bool,
    json_out: Optional[Path],
):
    """Run classify command."""
    with _handle_errors():
        if (dim_p2 is None) == (bp is None):
            raise InputError("Give exactly one of --dim-p2 P or --bp P")
        engine = YDHopfEngine(_settings(options))
        if dim_p2 is not None:
            result = engine.classify_dim_p2(dim_p2, cross_check=cross_check)
            title = f"YD Hopf algebras of dimension {dim_p2}^2 over K[Z_{dim_p2}]"
        else:
            result = engine.classify_bp(bp, cross_check=cross_check)
            title = f"Biproducts B_{bp}(a, b, q)"
        engine.console.print_classification(title, result)
        _write_json(result, json_out)


def _run_decompose(options: Dict[str, Any], source: str, json_out: Optional[Path]):
    """Run decompose command."""
    with _handle_errors():
        engine = YDHopfEngine(_settings(options))
        recipe = engine.load_recipe(_read_source(source))
        result = engine.decompose(recipe)
        summary = {key: value for key, value in result.items() if key not in ("report", "G")}
        summary["G"] = f"order {result['G']['order']}"
        engine.console.print_mapping(f"Decomposition of {recipe.family}", summary)
        _write_json(result, json_out)
        if not result["report"]["ok"] or result.get("round_trip") is False:
            raise typer.Exit(1)


def _run_isomorphic(options: Dict[str, Any], first: str, second: str):
    """Run isomorphic command."""
    with _handle_errors():
        engine = YDHopfEngine(_settings(options))
        A = engine.load_recipe(_read_source(first))
        B = engine.load_recipe(_read_source(second))
        isomorphic, witness = engine.isomorphic(A, B)
        if isomorphic:
            engine.console.print_success(f"Isomorphic via {witness}")
        else:
            engine.console.print_warning("Not isomorphic")
            raise typer.Exit(1)


def _run_clifford(options: Dict[str, Any], source: str, json_out: Optional[Path]):
    """Run clifford command."""
    with _handle_errors():
        engine = YDHopfEngine(_settings(options))
        recipe = engine.load_recipe(_read_source(source))
        with engine.console.show_progress_spinner("Splitting idempotents"):
            analysis = engine.clifford(recipe)
        engine.console.print_modules([V.to_dict() for V in analysis.modules])
        engine.console.print_report(analysis.report)
        _write_json(analysis.to_dict(), json_out)
        if not analysis.ok:
            raise typer.Exit(1)


def _run_screen(options: Dict[str, Any], q: int, pmax: int, json_out: Optional[Path]):
    """Run screen-pq command."""
    with _handle_errors():
        engine = YDHopfEngine(_settings(options))
        table = engine.screen_pq(q, pmax)
        engine.console.print_screen_table(table)
        _write_json(table.to_dict(), json_out)


def _run_config(options: Dict[str, Any], show: bool, save: Optional[Path]):
    """Run config command."""
    with _handle_errors():
        settings = _settings(options)
        if save is not None:
            settings.save_to_file(save)
            console.print(f"[green]Configuration saved to:[/green] {save}")
        if show or save is None:
            YDHopfEngine(settings).show_configuration()


def main():
    """Main entry point for the CLI."""
    try:
        app()
    except KeyboardInterrupt:
        console.print("\n[yellow]Operation cancelled by user[/yellow]")
        sys.exit(130)


if __name__ == "__main__":
    main()
