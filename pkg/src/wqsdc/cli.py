"""Command-line interface for the controlled direct-communication simulator."""

from __future__ import annotations

import argparse
import logging
import math
import sys
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path
from typing import Any, Callable

import numpy as np

from wqsdc.cloning import (
    DEFAULT_PANELS,
    CloneMachineSpec,
    CloningError,
    Convention,
    InputQubit,
    analytic_hs_distance,
    average_hs_distance,
    da_from_matrices,
    fidelity_of_copy,
)
from wqsdc.config import CliConfig, ConfigError, load_config_file, parse_complex
from wqsdc.entanglement import EntanglementError
from wqsdc.exporters import CsvExporter, SvgExporter, get_exporter
from wqsdc.kernel import KernelError
from wqsdc.protocol import (
    AttackKind,
    ProtocolError,
    RunStats,
    WStateParams,
    attack_scenario,
    monte_carlo_estimate,
    prepare_composite,
    run_protocol,
    success_probability,
)
from wqsdc.reports import run_selfcheck
from wqsdc.tradeoff import GridSpec, SweepTable, TradeoffError, figure_series

LOGGER = logging.getLogger(__name__)

LOG_FORMAT = "%(asctime)s %(levelname)s %(name)s: %(message)s"
SWEEP_COLUMNS = (
    "alpha_sq",
    "beta_sq",
    "gamma_sq",
    "ps_analytic",
    "ps_literal",
    "ps_physical",
    "ps_monte_carlo",
    "ps_stderr",
)
CLONE_COLUMNS = ("m", "da_analytic", "da_paper_diagonal", "da_exact", "copy_fidelity")
ATTACK_CHOICES = ["receiver", "controller", "eve"] + [kind.value for kind in AttackKind]
GLOBAL_KEYS = frozenset({"log_file", "verbose", "format"})


def _add_common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--seed", type=int, default=0, help="Generator seed (default: 0)")
    parser.add_argument("--out", default="out", help="Output directory (default: out)")
    parser.add_argument(
        "--convention",
        default=Convention.PAPER_LITERAL.value,
        help="Cloner convention: paper-literal or physical (default: paper-literal)",
    )
    parser.add_argument("--svg", action="store_true", help="Also write an SVG chart")


def _add_state(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--alpha2", type=float, default=None, help="|alpha|^2")
    parser.add_argument("--beta2", type=float, default=None, help="|beta|^2")
    parser.add_argument("--gamma2", type=float, default=None, help="|gamma|^2")
    parser.add_argument(
        "--wparams",
        default=None,
        help="Complex shared-state amplitudes 're,im:re,im:re,im' (overrides the squared flags)",
    )
    parser.add_argument(
        "--secret",
        default=None,
        help="Secret amplitudes 're,im:re,im', or two reals 'a,b' (default: 0.6,0.8)",
    )


def build_parser(config_defaults: dict[str, dict[str, Any]] | None = None) -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(description="W-state controlled QSDC simulator")
    parser.add_argument("--log-file", default=None, help="Log to file in addition to stderr")
    parser.add_argument("--verbose", "-v", action="store_true", help="DEBUG logging")
    parser.add_argument("--config", default=None, help="YAML file with flag defaults")
    parser.add_argument(
        "--format",
        choices=["json", "yaml"],
        default="json",
        help="Structured output format (default: json)",
    )
    subparsers = parser.add_subparsers(dest="command", required=True)
    commands: dict[str, argparse.ArgumentParser] = {}

    run_parser = subparsers.add_parser("run", help="Run the protocol once, with retries")
    _add_state(run_parser)
    _add_common(run_parser)
    run_parser.add_argument("--max-retries", type=int, default=10, help="Retries after aborts")
    run_parser.add_argument("--dump-state", default=None, help="Write the composite state dump")
    commands["run"] = run_parser

    sweep_parser = subparsers.add_parser("sweep", help="Success probability over |alpha|^2")
    _add_common(sweep_parser)
    sweep_parser.add_argument("--beta2", type=float, default=None, help="|beta|^2 (default: 0.5)")
    sweep_parser.add_argument("--points", type=int, default=11, help="Grid points (default: 11)")
    sweep_parser.add_argument("--shots", type=int, default=10_000, help="Monte Carlo shots")
    sweep_parser.add_argument("--secret", default=None, help="Secret amplitudes")
    sweep_parser.add_argument("--workers", type=int, default=1, help="Worker threads")
    commands["sweep"] = sweep_parser

    figures_parser = subparsers.add_parser("figures", help="Figure data series")
    figures_parser.add_argument("fig", choices=["fig1", "fig2", "fig3"])
    figures_parser.add_argument("--alpha2", type=float, default=None, help="fig1 |alpha|^2")
    figures_parser.add_argument("--beta2", type=float, default=None, help="fig1/fig3 |beta|^2")
    figures_parser.add_argument("--gamma2", type=float, default=None, help="fig1 |gamma|^2")
    figures_parser.add_argument("--points", type=int, default=None, help="Grid points")
    figures_parser.add_argument("--n-max", type=int, default=10, help="fig2 largest n")
    figures_parser.add_argument("--workers", type=int, default=1, help="Worker threads")
    _add_common(figures_parser)
    commands["figures"] = figures_parser

    attack_parser = subparsers.add_parser("attack", help="Simulate an attack scenario")
    attack_parser.add_argument("kind", choices=ATTACK_CHOICES)
    _add_state(attack_parser)
    _add_common(attack_parser)
    attack_parser.add_argument("--shots", type=int, default=10_000, help="Shots (default: 10000)")
    attack_parser.add_argument("--max-retries", type=int, default=10, help="Retries per shot")
    commands["attack"] = attack_parser

    clone_parser = subparsers.add_parser("clone-analysis", help="Cloner distance analysis")
    clone_parser.add_argument("--p", default="0", help="Cloner parameter p as 're,im'")
    clone_parser.add_argument("--q", default="0", help="Cloner parameter q as 're,im'")
    clone_parser.add_argument("--points", type=int, default=101, help="Points in m")
    clone_parser.add_argument("--panels", type=int, default=DEFAULT_PANELS, help="Simpson panels")
    _add_common(clone_parser)
    commands["clone-analysis"] = clone_parser

    selfcheck_parser = subparsers.add_parser("selfcheck", help="Run every reconciliation")
    _add_common(selfcheck_parser)
    commands["selfcheck"] = selfcheck_parser

    for name, defaults in (config_defaults or {}).items():
        top = {k: v for k, v in defaults.items() if k in GLOBAL_KEYS}
        parser.set_defaults(**top)
        commands[name].set_defaults(**{k: v for k, v in defaults.items() if k not in top})
    return parser


def _output_dir(config: CliConfig) -> Path:
    config.out.mkdir(parents=True, exist_ok=True)
    return config.out


def _write_table(config: CliConfig, table: SweepTable, stem: str) -> Path:
    out = _output_dir(config)
    path = out / f"{stem}.csv"
    count = CsvExporter().export(table, path)
    print(f"Wrote {count} rows to {path}")
    if config.svg:
        svg_path = out / f"{stem}.svg"
        SvgExporter().export(table, svg_path)
        print(f"Wrote chart to {svg_path}")
    return path


def _write_structured(config: CliConfig, payload: Any, stem: str) -> Path:
    exporter = get_exporter(config.fmt)
    path = _output_dir(config) / f"{stem}.{exporter.extension}"
    exporter.export(payload, path)
    LOGGER.info("Wrote %s", path)
    return path


def _points(config: CliConfig, default: int) -> int:
    points = config.options.get("points")
    points = default if points is None else int(points)
    if points < 2:
        raise ConfigError("--points", f"must be >= 2, got {points}")
    return points


def cmd_run(config: CliConfig) -> int:
    run_config = config.run_config()
    stats = RunStats()
    transcript = run_protocol(run_config, stats)
    path = _write_structured(config, transcript, "transcript")

    dump_state = config.options.get("dump_state")
    if dump_state:
        composite = prepare_composite(run_config.secret, run_config.wparams)
        Path(dump_state).write_text(composite.dump() + "\n", encoding="utf-8")
        print(f"Wrote composite state to {dump_state}")

    outcome = transcript.outcome
    status = outcome.status if outcome is not None else "none"
    fidelity = transcript.fidelity
    fidelity_text = f"{fidelity:.12f}" if fidelity is not None else "n/a"
    print(
        f"Outcome: {status} | fidelity: {fidelity_text} | "
        f"attempts: {transcript.attempts} (retries: {transcript.attempts - 1})"
    )
    print(stats.summary())
    print(f"Wrote transcript to {path}")
    return 0


def _sweep_row(
    alpha_sq: float, config: CliConfig, beta_sq: float, shots: int
) -> tuple[float, ...]:
    gamma_sq = max(1.0 - beta_sq - alpha_sq, 0.0)
    wparams = WStateParams.from_squared(alpha_sq, beta_sq, gamma_sq)
    literal = success_probability(wparams, "enumerate", Convention.PAPER_LITERAL, config.secret)
    physical = success_probability(
        wparams, "enumerate", Convention.PHYSICAL_ISOMETRY, config.secret
    )
    estimate = monte_carlo_estimate(wparams, config.convention, shots, config.seed, config.secret)
    return (
        alpha_sq,
        beta_sq,
        gamma_sq,
        4.0 * alpha_sq * gamma_sq,
        literal,
        physical,
        estimate.mean,
        estimate.stderr,
    )


def cmd_sweep(config: CliConfig) -> int:
    beta_sq = 0.5 if config.beta2 is None else config.beta2
    points = _points(config, 11)
    workers = int(config.options.get("workers") or 1)
    if workers < 1:
        raise ConfigError("--workers", f"must be >= 1, got {workers}")
    alphas = [float(a) for a in np.linspace(0.0, 1.0 - beta_sq, points)]

    LOGGER.info("Sweep: beta^2=%.6g, %d points, %d shots each", beta_sq, points, config.shots)
    table = SweepTable("sweep", SWEEP_COLUMNS)
    with ThreadPoolExecutor(max_workers=workers) as executor:
        rows = executor.map(lambda a: _sweep_row(a, config, beta_sq, config.shots), alphas)
        for row in rows:
            table.append(row)
    _write_table(config, table, "sweep")
    return 0


def cmd_figures(config: CliConfig) -> int:
    fig = config.options["fig"]
    grid = GridSpec(
        n_max=int(config.options.get("n_max") or 10),
        workers=int(config.options.get("workers") or 1),
    )
    if fig == "fig1":
        grid.triples = [config.triple()]
        grid.points = _points(config, 101)
    elif fig == "fig3":
        grid.points = _points(config, 50)
        if config.beta2 is not None:
            grid.beta_values = [config.beta2]
    table = figure_series(fig, grid)
    for warning in table.warnings:
        print(f"Warning: {warning}")
    _write_table(config, table, fig)
    return 0


def cmd_attack(config: CliConfig) -> int:
    kind = AttackKind.parse(config.options["kind"])
    report = attack_scenario(kind, config.run_config(), config.shots, config.seed)
    path = _write_structured(config, report, f"attack_{kind.value}")
    analytic = "n/a" if report.analytic_mean is None else f"{report.analytic_mean:.6f}"
    print(f"Attack {kind.value}: mean fidelity {report.mean_fidelity:.6f} (analytic {analytic})")
    for name, value in report.baselines.items():
        print(f"  baseline {name}: {value:.6f}")
    for name, value in report.details.items():
        print(f"  {name}: {value}")
    print(report.stats.summary())
    print(f"Wrote report to {path}")
    return 0


def cmd_clone_analysis(config: CliConfig) -> int:
    p = parse_complex(config.options.get("p", "0"), "--p")
    q = parse_complex(config.options.get("q", "0"), "--q")
    panels = int(config.options.get("panels") or DEFAULT_PANELS)
    if panels < 2 or panels % 2:
        raise ConfigError("--panels", f"must be an even number >= 2, got {panels}")
    spec = CloneMachineSpec(p, q, config.convention)
    points = _points(config, 101)

    table = SweepTable("clone-analysis", CLONE_COLUMNS)
    for m in np.linspace(0.0, 1.0, points):
        m = float(m)
        x, y = math.sqrt(m), math.sqrt(1.0 - m)
        table.append(
            (
                m,
                analytic_hs_distance(m, spec),
                da_from_matrices(x, y, spec, "paper_diagonal"),
                da_from_matrices(x, y, spec, "exact"),
                fidelity_of_copy(InputQubit(x, y), spec),
            )
        )
    _write_table(config, table, "clone_analysis")

    closed = average_hs_distance(spec)
    simpson = average_hs_distance(spec, method="numeric", panels=panels)
    summary = {
        "p": [p.real, p.imag],
        "q": [q.real, q.imag],
        "convention": spec.convention.value,
        "panels": panels,
        "closed_form": closed,
        "simpson": simpson,
        "difference": abs(closed - simpson),
    }
    path = _write_structured(config, summary, "clone_analysis_summary")
    print(f"Average distance: closed form {closed:.12f}, Simpson {simpson:.12f}")
    print(f"Wrote summary to {path}")
    return 0


def cmd_selfcheck(config: CliConfig) -> int:
    report = run_selfcheck(config.seed)
    out = _output_dir(config)
    _write_structured(config, report, "errata")
    text = report.render_text()
    (out / "errata.txt").write_text(text, encoding="utf-8")
    print(text, end="")
    return 0 if report.passed else 1


COMMAND_HANDLERS: dict[str, Callable[[CliConfig], int]] = {
    "run": cmd_run,
    "sweep": cmd_sweep,
    "figures": cmd_figures,
    "attack": cmd_attack,
    "clone-analysis": cmd_clone_analysis,
    "selfcheck": cmd_selfcheck,
}


def _parse(argv: list[str] | None) -> argparse.Namespace:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.config:
        known = set(vars(args)) - {"command", "config"}
        defaults = load_config_file(Path(args.config), known)
        args = build_parser({args.command: defaults}).parse_args(argv)
    return args


def _configure_logging(args: argparse.Namespace) -> None:
    handlers: list[logging.Handler] = [logging.StreamHandler()]
    if args.log_file:
        file_handler = logging.FileHandler(args.log_file)
        file_handler.setFormatter(logging.Formatter(LOG_FORMAT))
        handlers.append(file_handler)
    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.INFO,
        format=LOG_FORMAT,
        handlers=handlers,
        force=True,
    )


def main(argv: list[str] | None = None) -> int:
    try:
        args = _parse(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    except ConfigError as exc:
        print(f"Error: {exc}", file=sys.stderr)
        return 2

    _configure_logging(args)
    try:
        config = CliConfig.from_args(args)
        return COMMAND_HANDLERS[config.command](config)
    except (
        ConfigError,
        KernelError,
        CloningError,
        ProtocolError,
        EntanglementError,
        TradeoffError,
    ) as exc:
        LOGGER.error("%s", exc)
        print(f"Error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
