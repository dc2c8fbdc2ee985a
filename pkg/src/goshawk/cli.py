"""Command-line entry point: ``goshawk {bench,ablate,wsn,run} [options]``.

Exit codes: 0 success, 1 configuration error, 2 runtime failure.
"""

from __future__ import annotations

import argparse
import logging
import sys

from .config import ExperimentConfig, config_from_dict, load_experiment_config
from .core import ConfigurationError
from .experiments import ExperimentError, ExperimentReport, run_experiment
from .output import emit_outputs

log = logging.getLogger("goshawk")

SUBCOMMAND_KIND = {"bench": "bench", "ablate": "ablation", "wsn": "wsn", "run": None}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="goshawk", description="Goshawk-optimization experiments.")
    sub = parser.add_subparsers(dest="command", required=True)
    for name, help_text in [
        ("bench", "compare optimizers on the benchmark functions"),
        ("ablate", "strategy ablation (NGO, INGO-DCMIS, INGO-BPED, INGO)"),
        ("wsn", "sensor-network coverage optimization"),
        ("run", "run the experiment kind named by --kind or the config file"),
    ]:
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--config", help="JSON experiment configuration")
        p.add_argument("--kind", choices=["ablation", "ablate", "wsn", "bench"])
        p.add_argument("--algo", action="append", dest="algorithms", metavar="NAME",
                       help="algorithm to run (repeatable)")  # fmt: skip
        p.add_argument("--function", action="append", dest="functions", metavar="ID",
                       help="benchmark function id, e.g. F11 (repeatable)")  # fmt: skip
        p.add_argument("--trials", type=int)
        p.add_argument("--iters", type=int, dest="t_max")
        p.add_argument("--pop", type=int, dest="population")
        p.add_argument("--seed", type=int)
        p.add_argument("--out", dest="output")
        p.add_argument("--jobs", type=int)
        p.add_argument("--no-plots", action="store_false", dest="plots", default=None)
        p.add_argument("-q", "--quiet", action="store_true")
    return parser


def resolve_config(args: argparse.Namespace) -> ExperimentConfig:
    overrides = {
        key: getattr(args, key)
        for key in ("algorithms", "functions", "trials", "t_max", "population", "seed", "output", "jobs", "plots")
    }
    kind = SUBCOMMAND_KIND[args.command]
    if args.kind is not None:
        requested = "ablation" if args.kind == "ablate" else args.kind
        if kind is not None and requested != kind:
            raise ConfigurationError(f"--kind {args.kind} conflicts with the '{args.command}' subcommand")
        kind = requested
    if kind is not None:
        overrides["kind"] = kind
    if args.config:
        config = load_experiment_config(args.config, overrides)
        if kind is not None and config.kind != kind:
            raise ConfigurationError(f"config file describes a {config.kind} experiment, not {kind}")
        return config
    if kind is None:
        raise ConfigurationError("'run' needs --kind or --config")
    return config_from_dict({}, overrides)


def _summary(report: ExperimentReport) -> str:
    lines = []
    if report.kind == "wsn":
        lines.append(f"{'algorithm':<12}{'best':>9}{'worst':>9}{'mean':>9}{'std':>10}{'eta(best)':>11}")
        for row in report.stats:
            eta = report.connectivity.get(row["algorithm"], {}).get("eta", float("nan"))
            lines.append(
                f"{row['algorithm']:<12}{100 * row['best']:>8.2f}%{100 * row['worst']:>8.2f}%"
                f"{100 * row['mean']:>8.2f}%{row['std']:>10.5f}{100 * eta:>10.2f}%"
            )
    else:
        lines.append(f"{'function':<9}{'algorithm':<12}{'best':>12}{'mean':>12}{'std':>12}")
        for row in report.stats:
            lines.append(
                f"{row['objective']:<9}{row['algorithm']:<12}{row['best']:>12.4g}{row['mean']:>12.4g}{row['std']:>12.4g}"
            )
    return "\n".join(lines)


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.WARNING if args.quiet else logging.INFO, format="%(message)s")
    try:
        config = resolve_config(args)
    except ConfigurationError as exc:
        print(f"configuration error: {exc}", file=sys.stderr)
        return 1

    def progress(rec):
        algo, obj, trial = (rec["algorithm"], rec["objective"], rec["trial"]) if isinstance(rec, dict) else (
            rec.algorithm, rec.objective, rec.trial)  # fmt: skip
        log.info("done %s %s trial %d", algo, obj, trial)

    try:
        report = run_experiment(config, progress)
    except ExperimentError as exc:
        print(f"run failed: {exc}", file=sys.stderr)
        try:
            emit_outputs(exc.report, config.output, plots=False)
            print(f"partial results written to {config.output}", file=sys.stderr)
        except OSError as write_exc:
            print(f"could not write partial results: {write_exc}", file=sys.stderr)
        return 2

    try:
        emit_outputs(report, config.output)
        (__import__("pathlib").Path(config.output) / "config.json").write_text(config.dumps(), encoding="utf-8")
    except OSError as exc:
        print(f"output error: {exc}", file=sys.stderr)
        return 2
    if not args.quiet:
        print(_summary(report))
        print(f"results written to {config.output}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
