"""The three experiment families (ablation, bench, wsn) and their report."""

from __future__ import annotations

import logging
from dataclasses import dataclass, field

import numpy as np

from .campaign import (
    CampaignError,
    RunRecord,
    aggregate_stats,
    resolve_algorithm,
    run_algorithm,
    run_campaign,
    trial_seed,
    _map,
)
from .config import ExperimentConfig
from .wsn import WsnScenario, connectivity_rate, coverage_objective, coverage_rate, decode_deployment

log = logging.getLogger(__name__)


@dataclass
class ExperimentReport:
    config: dict
    stats: list = field(default_factory=list)  # one dict per (algorithm, objective)
    runs: list = field(default_factory=list)  # one dict per trial
    curves: list = field(default_factory=list)  # {"algorithm", "objective", "trial", "curve"}
    deployments: dict = field(default_factory=dict)  # algorithm -> best-run deployment
    connectivity: dict = field(default_factory=dict)  # algorithm -> ConnectivityReport dict
    complete: bool = True

    @property
    def kind(self) -> str:
        return self.config["kind"]

    def values(self, algorithm: str, objective: str) -> list[float]:
        return [r["value"] for r in self.runs if r["algorithm"] == algorithm and r["objective"] == objective]

    def stat(self, algorithm: str, objective: str) -> dict:
        for row in self.stats:
            if row["algorithm"] == algorithm and row["objective"] == objective:
                return row
        raise KeyError((algorithm, objective))

    def to_dict(self) -> dict:
        return {
            "config": self.config,
            "complete": self.complete,
            "stats": self.stats,
            "runs": self.runs,
            "curves": self.curves,
            "deployments": self.deployments,
            "connectivity": self.connectivity,
        }


class ExperimentError(RuntimeError):
    """A trial failed; ``report`` holds every trial completed before the failure."""

    def __init__(self, message: str, report: ExperimentReport):
        super().__init__(message)
        self.report = report


def _stats_rows(report: ExperimentReport, maximize: bool):
    pairs: dict[tuple[str, str], None] = {}
    for r in report.runs:
        pairs.setdefault((r["algorithm"], r["objective"]), None)
    report.stats = [
        {"algorithm": a, "objective": o, **aggregate_stats(report.values(a, o), maximize=maximize).as_dict()}
        for a, o in pairs
    ]


def _benchmark_report(config: ExperimentConfig, records: list[RunRecord], complete: bool) -> ExperimentReport:
    report = ExperimentReport(config.to_dict(), complete=complete)
    for rec in records:
        report.runs.append(
            {"algorithm": rec.algorithm, "objective": rec.objective, "trial": rec.trial, "seed": rec.seed,
             "value": rec.result.best_fitness, "evaluations": rec.result.evaluations}
        )  # fmt: skip
        report.curves.append(
            {"algorithm": rec.algorithm, "objective": rec.objective, "trial": rec.trial,
             "curve": rec.result.curve.tolist()}
        )  # fmt: skip
    _stats_rows(report, maximize=False)
    return report


def run_benchmarks(config: ExperimentConfig, progress=None) -> ExperimentReport:
    """Run ``config.algorithms`` over ``config.functions`` (ablation or bench kinds)."""
    if config.kind not in ("ablation", "bench"):
        raise ValueError(f"benchmark runner cannot handle kind {config.kind!r}")
    try:
        campaign = run_campaign(
            config.algorithms, config.functions, config.trials, config.seed,
            n=config.population, t_max=config.t_max, jobs=config.jobs, progress=progress,
        )  # fmt: skip
    except CampaignError as exc:
        raise ExperimentError(str(exc), _benchmark_report(config, exc.records, complete=False)) from exc
    return _benchmark_report(config, campaign.records, complete=True)


def run_ablation(config: ExperimentConfig, progress=None) -> ExperimentReport:
    if config.kind != "ablation":
        raise ValueError("run_ablation requires an ablation config")
    return run_benchmarks(config, progress)


def run_wsn_trial(algorithm: str, scenario: dict, trial: int, base_seed: int, n: int, t_max: int) -> dict:
    scen = WsnScenario(**scenario)
    seed = trial_seed(base_seed, trial)
    result = run_algorithm(algorithm, n, t_max, seed, coverage_objective(scen), scen.space)
    nodes = decode_deployment(result.best_position, scen)
    conn = connectivity_rate(nodes, scen)
    return {
        "algorithm": resolve_algorithm(algorithm),
        "objective": "coverage",
        "trial": trial,
        "seed": seed,
        "value": coverage_rate(nodes, scen),
        "fitness": result.best_fitness,
        "eta": conn.eta,
        "evaluations": result.evaluations,
        "curve": result.curve.tolist(),
        "nodes": nodes.tolist(),
    }


def _wsn_report(config: ExperimentConfig, trials: list[dict], complete: bool) -> ExperimentReport:
    report = ExperimentReport(config.to_dict(), complete=complete)
    scen = config.wsn_scenario
    best: dict[str, dict] = {}
    for tr in trials:
        report.runs.append({k: tr[k] for k in ("algorithm", "objective", "trial", "seed", "value", "fitness", "eta", "evaluations")})
        report.curves.append({k: tr[k] for k in ("algorithm", "objective", "trial", "curve")})
        # first trial wins ties, keeping selection deterministic
        if tr["algorithm"] not in best or tr["value"] > best[tr["algorithm"]]["value"]:
            best[tr["algorithm"]] = tr
    for algo, tr in best.items():
        report.deployments[algo] = {"trial": tr["trial"], "coverage": tr["value"], "nodes": tr["nodes"]}
        report.connectivity[algo] = connectivity_rate(np.array(tr["nodes"]), scen).to_dict()
    _stats_rows(report, maximize=True)
    return report


def run_wsn_experiment(config: ExperimentConfig, progress=None) -> ExperimentReport:
    """Coverage optimization on the configured scenario, ``trials`` runs per algorithm."""
    if config.kind != "wsn":
        raise ValueError("run_wsn_experiment requires a wsn config")
    tasks = [
        (algo, config.scenario, i, config.seed, config.population, config.t_max)
        for algo in config.algorithms
        for i in range(config.trials)
    ]
    done: list[dict] = []
    try:
        for _, trial in _map(run_wsn_trial, tasks, config.jobs):
            done.append(trial)
            if progress is not None:
                progress(trial)
    except Exception as exc:
        algo, _, i = tasks[len(done)][:3]
        raise ExperimentError(f"{algo} wsn trial {i} failed: {exc}", _wsn_report(config, done, complete=False)) from exc
    return _wsn_report(config, done, complete=True)


def run_experiment(config: ExperimentConfig, progress=None) -> ExperimentReport:
    if config.kind == "wsn":
        return run_wsn_experiment(config, progress)
    return run_benchmarks(config, progress)
