"""Command-line interface for naming-game simulations."""

import math
import os
import sys
from pathlib import Path
from typing import Any

import click
import pandas as pd
import structlog
from pydantic import ValidationError
from rich.console import Console
from rich.table import Table

from name_game import __version__
from name_game.core.config import SimulationSettings
from name_game.core.exceptions import NameGameError, ParsingError
from name_game.core.models import MutationConfig, SexFilter, StepMode, parse_proportion
from name_game.distributions.fitting import fit_powerlaw, rank_frequency
from name_game.distributions.powerlaw import powerlaw_normalize
from name_game.dynamics.closed_form import closed_form_iterate, closed_form_table
from name_game.experiment import (
    RunConfig,
    initial_from_option,
    load_table_source,
    preferences_from_option,
    run_simulation,
)
from name_game.ingestion.list_stats import name_list_stats, welch_t_test
from name_game.mutation.objective import choose_mutated_name, lambda_grid, sweep_lambda
from name_game.population.serialization import FLOAT_FORMAT

logger = structlog.get_logger()

EXIT_INVALID = 1
EXIT_IO = 2


def get_console() -> Console:
    """Get console instance with proper color detection."""
    no_color = bool(os.environ.get("NO_COLOR"))
    force_color = os.environ.get("FORCE_COLOR", "").lower() in ("1", "true", "yes")

    if no_color:
        return Console(no_color=True, force_terminal=False, force_interactive=False)
    if force_color:
        return Console(force_terminal=True, force_interactive=False)
    return Console()


class ProportionType(click.ParamType):
    """A proportion in [0, 1], given as ``0.001`` or ``0.1%``."""

    name = "proportion"

    def convert(
        self, value: Any, param: click.Parameter | None, ctx: click.Context | None
    ) -> float:
        if isinstance(value, float):
            proportion = value
        else:
            try:
                proportion = float(parse_proportion(str(value)))
            except ValueError:
                self.fail(f"{value!r} is not a proportion or percent string", param, ctx)
        if not 0.0 <= proportion <= 1.0:
            self.fail(f"{value!r} is outside [0, 1]", param, ctx)
        return proportion


PROPORTION = ProportionType()


class NameGameGroup(click.Group):
    """Click group that maps failures to the documented exit codes."""

    def invoke(self, ctx: click.Context) -> Any:
        console = get_console()
        try:
            return super().invoke(ctx)
        except click.UsageError as e:
            e.exit_code = EXIT_INVALID
            raise
        except (OSError, ParsingError) as e:
            console.print(f"[red]FAILED[/red] {e!s}")
            logger.error("Input could not be read", error=str(e))
            ctx.exit(EXIT_IO)
        except (NameGameError, ValidationError, ValueError) as e:
            console.print(f"[red]FAILED[/red] {e!s}")
            logger.error("Invalid input", error=str(e))
            ctx.exit(EXIT_INVALID)


def _split_names(text: str | None) -> list[str]:
    return [name.strip() for name in (text or "").split(",") if name.strip()]


def _write_frame(frame: pd.DataFrame, path: str | Path) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(frame.to_csv(index=False, float_format=FLOAT_FORMAT, lineterminator="\n"))
    return path


def _fmt(value: float) -> str:
    return "nan" if math.isnan(value) else f"{value:.6g}"


@click.group(cls=NameGameGroup)
@click.version_option(version=__version__, prog_name="name-game")
@click.option(
    "--config",
    "-c",
    type=click.Path(exists=True),
    help="Path to settings file (YAML or JSON)",
)
@click.option(
    "--debug/--no-debug",
    default=False,
    help="Enable debug mode",
)
@click.pass_context
def cli(ctx: click.Context, config: str | None, debug: bool) -> None:
    """name-game: myopic parents, popular names and power laws."""
    ctx.ensure_object(dict)

    if config:
        settings = SimulationSettings.from_file(config)
        if debug:
            settings = settings.model_copy(update={"debug": True})
        ctx.obj["settings"] = settings
    else:
        ctx.obj["settings"] = SimulationSettings(debug=debug)

    structlog.configure(
        processors=[
            structlog.stdlib.filter_by_level,
            structlog.stdlib.add_logger_name,
            structlog.stdlib.add_log_level,
            structlog.stdlib.PositionalArgumentsFormatter(),
            structlog.processors.TimeStamper(fmt="iso"),
            structlog.processors.StackInfoRenderer(),
            structlog.processors.format_exc_info,
            (structlog.dev.ConsoleRenderer() if debug else structlog.processors.JSONRenderer()),
        ],
        context_class=dict,
        logger_factory=structlog.stdlib.LoggerFactory(),
        cache_logger_on_first_use=True,
    )


@cli.command()
@click.option(
    "--run-config",
    type=click.Path(exists=True, dir_okay=False),
    help="RunConfig or run manifest (JSON/YAML); other flags then only override --out/--seed",
)
@click.option(
    "--initial",
    default="powerlaw:t=1,n=1000",
    show_default=True,
    help="Initial table: powerlaw:t=T,n=N or file:PATH[,sex=F|M|all]",
)
@click.option(
    "--prefs",
    help="Preferences: lognormal:mode=0.1%, powerlaw:t_prime=T,floor=E, dweezil, explicit:PATH",
)
@click.option("--steps", type=click.IntRange(min=0), default=1, show_default=True)
@click.option(
    "--mode",
    type=click.Choice(["deterministic", "monte-carlo"]),
    default="deterministic",
    show_default=True,
    help="Mass flow or sampled parents",
)
@click.option("--population", type=click.IntRange(min=1), help="Parents per Monte Carlo step")
@click.option("--seed", type=click.IntRange(min=0), help="Root seed (default 0)")
@click.option("--out", "-o", type=click.Path(file_okay=False), help="Output directory")
@click.option(
    "--strict/--lenient",
    default=True,
    help="Fail on malformed SSA lines or skip them",
)
@click.pass_context
def simulate(
    ctx: click.Context,
    run_config: str | None,
    initial: str,
    prefs: str | None,
    steps: int,
    mode: str,
    population: int | None,
    seed: int | None,
    out: str | None,
    strict: bool,
) -> None:
    """Iterate a name table under a preference model and write every output."""
    settings: SimulationSettings = ctx.obj["settings"]
    console = get_console()

    if run_config:
        config = RunConfig.from_file(run_config)
        overrides: dict[str, Any] = {}
        if seed is not None:
            overrides["seed"] = seed
        if out is not None:
            overrides["output_dir"] = Path(out)
        config = config.model_copy(update=overrides)
    else:
        if not prefs:
            raise click.UsageError("Either --prefs or --run-config is required")
        if mode == "monte-carlo" and population is None:
            raise click.UsageError("--mode monte-carlo needs --population")
        initial_options = initial_from_option(initial)
        if initial_options["kind"] == "file":
            initial_options.setdefault("strict", strict)
        step_mode = (
            StepMode.monte_carlo(population or 1, seed or 0)
            if mode == "monte-carlo"
            else StepMode.deterministic()
        )
        config = RunConfig.model_validate(
            {
                "initial": initial_options,
                "preferences": preferences_from_option(prefs),
                "steps": steps,
                "mode": step_mode,
                "output_dir": Path(out) if out else settings.output_dir,
                "seed": seed or 0,
            }
        )

    console.print(f"Simulating {config.steps} step(s) into {config.output_dir}...")
    result = run_simulation(config, settings)

    table = Table(title="Step Diagnostics")
    table.add_column("Step", style="cyan")
    table.add_column("Spearman", style="green")
    table.add_column("Top-1 share", style="green")
    table.add_column("Fitted t", style="green")
    table.add_column("R²", style="green")
    for row in result.trajectory.diagnostics:
        table.add_row(
            str(row.step),
            _fmt(row.spearman),
            _fmt(row.top1_share),
            _fmt(row.fitted_t),
            _fmt(row.r2),
        )
    console.print(table)
    console.print(f"[green]OK[/green] Wrote {len(result.files)} files to {result.output_dir}")


@cli.command("closed-form")
@click.option("--t", "t", type=float, default=1.0, show_default=True, help="Initial exponent")
@click.option("--t-prime", type=float, required=True, help="Preference exponent t'")
@click.option("--n", "n", type=click.IntRange(min=0), default=1, show_default=True, help="Steps")
@click.option("--names", type=int, default=1000, show_default=True, help="Number of ranks N")
@click.option("--out", "-o", type=click.Path(dir_okay=False), help="CSV output path")
def closed_form(t: float, t_prime: float, n: int, names: int, out: str | None) -> None:
    """Exponent, top-1 share and orientation of each closed-form iterate."""
    if names < 2:
        raise click.BadParameter("needs at least 2 ranks", param_hint="--names")
    laws = closed_form_iterate(powerlaw_normalize(t, names), t_prime, n)
    frame = pd.DataFrame(
        {
            "step": list(range(n + 1)),
            "exponent": [law.t for law in laws],
            "top1_share": [closed_form_table(law).frequencies[0] for law in laws],
            "orientation": [law.orientation.value for law in laws],
        }
    )

    console = get_console()
    table = Table(title="Closed-Form Iterates")
    for column in frame.columns:
        table.add_column(column, style="cyan" if column == "step" else "green")
    for record in frame.itertuples(index=False):
        table.add_row(
            str(record.step), _fmt(record.exponent), _fmt(record.top1_share), record.orientation
        )
    console.print(table)

    if out:
        _write_frame(frame, out)
        console.print(f"[green]OK[/green] Output saved to {out}")


@cli.command()
@click.argument("path", type=click.Path(dir_okay=False))
@click.option(
    "--sex",
    type=click.Choice([s.value for s in SexFilter]),
    default=SexFilter.ALL.value,
    help="Sex filter for SSA files",
)
@click.option("--strict/--lenient", default=True, help="Fail on malformed SSA lines")
@click.option("--min-rank", type=click.IntRange(min=1), default=1, show_default=True)
@click.option("--max-rank", type=click.IntRange(min=1), help="Last rank included in the fit")
@click.option("--out", "-o", type=click.Path(dir_okay=False), help="Rank-frequency CSV path")
def fit(
    path: str,
    sex: str,
    strict: bool,
    min_rank: int,
    max_rank: int | None,
    out: str | None,
) -> None:
    """Fit a power law to a table or SSA file's rank-frequency data."""
    name_table = load_table_source(path, sex, strict=strict)
    result = fit_powerlaw(name_table, min_rank=min_rank, max_rank=max_rank)

    console = get_console()
    table = Table(title="Power-Law Fit")
    table.add_column("Metric", style="cyan")
    table.add_column("Value", style="green")
    table.add_row("t", f"{result.t_hat:.6g}")
    table.add_row("K", f"{result.k_hat:.6g}")
    table.add_row("R²", f"{result.r2:.12g}")
    table.add_row("Points", str(result.n_points))
    console.print(table)

    if out:
        ranks, freqs = rank_frequency(name_table)
        frame = pd.DataFrame(
            {"rank": ranks.astype(int), "name": list(name_table.names), "frequency": freqs}
        )
        _write_frame(frame, out)
        console.print(f"[green]OK[/green] Rank-frequency data saved to {out}")


@cli.command()
@click.argument("table_path", type=click.Path(dir_okay=False))
@click.argument("names", nargs=-1)
@click.option("--against", help="Comma-separated second name list for a Welch t-test")
@click.option("--casefold", is_flag=True, help="Match names case-insensitively")
@click.option(
    "--sex",
    type=click.Choice([s.value for s in SexFilter]),
    default=SexFilter.ALL.value,
    help="Sex filter for SSA files",
)
@click.option("--strict/--lenient", default=True, help="Fail on malformed SSA lines")
def analyze(
    table_path: str,
    names: tuple[str, ...],
    against: str | None,
    casefold: bool,
    sex: str,
    strict: bool,
) -> None:
    """Popularity statistics of a name list, optionally compared with a second list."""
    name_table = load_table_source(table_path, sex, strict=strict)
    lists = {"names": [n for arg in names for n in _split_names(arg)]}
    if against is not None:
        lists["against"] = _split_names(against)
    stats = {
        label: name_list_stats(name_table, items, casefold=casefold)
        for label, items in lists.items()
    }

    console = get_console()
    table = Table(title="Name List Popularity")
    table.add_column("List", style="cyan")
    for column in ("Mean", "Std", "Mean %", "Std %", "N", "Missing"):
        table.add_column(column, style="green")
    for label, s in stats.items():
        table.add_row(
            label,
            f"{s.mean:.6g}",
            f"{s.std:.6g}",
            f"{s.mean_percent:.4f}",
            f"{s.std_percent:.4f}",
            str(s.n),
            str(s.missing),
        )
    console.print(table)
    missing = sum(s.missing for s in stats.values())
    if missing:
        console.print(f"[yellow]WARNING[/yellow] {missing} name(s) missing from the table")

    if "against" in stats:
        welch = welch_t_test(stats["names"], stats["against"])
        console.print(f"Welch t = {welch.t:.6g}, df = {welch.df:.6g}, p = {welch.p:.6g}")


@cli.command()
@click.argument("table_path", type=click.Path(dir_okay=False))
@click.option("--mu", type=PROPORTION, required=True, help="Desired popularity (0.02 or 2%)")
@click.option("--lambda", "lambda_", type=float, default=0.01, show_default=True)
@click.option("--max-edits", type=int, default=1, show_default=True)
@click.option("--alphabet", default=None, help="Characters used for edits (default a-z)")
@click.option("--capitalize/--no-capitalize", default=True, help="Allow capitals at position 0")
@click.option("--sweep", type=click.Path(dir_okay=False), help="Write a lambda sweep CSV")
@click.option("--sweep-low", type=float, default=1e-4, show_default=True)
@click.option("--sweep-high", type=float, default=10.0, show_default=True)
@click.option("--sweep-count", type=int, default=20, show_default=True)
def mutate(
    table_path: str,
    mu: float,
    lambda_: float,
    max_edits: int,
    alphabet: str | None,
    capitalize: bool,
    sweep: str | None,
    sweep_low: float,
    sweep_high: float,
    sweep_count: int,
) -> None:
    """Pick the base name and variant minimizing mismatch plus edit penalty."""
    options: dict[str, Any] = {
        "lambda": lambda_,
        "max_edits": max_edits,
        "capitalize_initial": capitalize,
    }
    if alphabet:
        options["alphabet"] = alphabet
    config = MutationConfig.model_validate(options)
    name_table = load_table_source(table_path)
    choice = choose_mutated_name(name_table, mu, config)

    console = get_console()
    table = Table(title="Mutation Choice")
    table.add_column("Metric", style="cyan")
    table.add_column("Value", style="green")
    table.add_row("Base", choice.base)
    table.add_row("Candidate", choice.candidate)
    table.add_row("Distance", str(choice.distance))
    table.add_row("Cost", f"{choice.cost:.6g}")
    table.add_row("Novel", "yes" if choice.novel else "no")
    console.print(table)

    if sweep:
        grid = lambda_grid(sweep_low, sweep_high, sweep_count)
        frame = sweep_lambda(name_table, mu, config, grid)
        _write_frame(frame, sweep)
        console.print(f"[green]OK[/green] Lambda sweep saved to {sweep}")


@cli.command()
def doctor() -> None:
    """Check system dependencies and configuration."""
    console = get_console()
    console.print("[bold]name-game System Check[/bold]\n")

    checks = []

    py_version = f"{sys.version_info.major}.{sys.version_info.minor}.{sys.version_info.micro}"
    checks.append(("Python Version", py_version, sys.version_info >= (3, 13)))

    packages = ["numpy", "scipy", "pandas", "pydantic", "pydantic_settings", "structlog", "yaml"]
    for package in packages:
        try:
            __import__(package)
            checks.append((f"Package: {package}", "Installed", True))
        except ImportError:
            checks.append((f"Package: {package}", "Not installed", False))

    try:
        settings = SimulationSettings()
        checks.append(("Settings", f"log_level={settings.log_level}", True))
    except ValidationError:
        checks.append(("Settings", "Invalid NAME_GAME_* environment", False))

    table = Table(title="System Check Results")
    table.add_column("Component", style="cyan")
    table.add_column("Status", style="white")
    table.add_column("Result", style="white")

    for component, status, success in checks:
        result_icon = "[green]OK[/green]" if success else "[red]FAIL[/red]"
        table.add_row(component, status, result_icon)

    console.print(table)

    if all(check[2] for check in checks):
        console.print("\n[green]OK[/green] All checks passed! name-game is ready to use.")
    else:
        console.print(
            "\n[yellow]WARNING[/yellow] Some checks failed. Run 'uv sync' to install missing dependencies."
        )


def main() -> None:
    """Main entry point for the CLI."""
    cli(obj={})


if __name__ == "__main__":
    main()
