"""Algorithm registry and repeated-trial campaigns over benchmark functions."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence

import numpy as np

from . import baselines, ngo
from .benchmarks import benchmark_spec, make_objective
from .core import Objective, RunResult, SearchSpace

Runner = Callable[[int, int, int, Objective, SearchSpace], RunResult]


def _ngo_runner(flags: ngo.StrategyFlags) -> Runner:
    def runner(n, t_max, seed, objective, space):
        return ngo.run(ngo.OptimizerConfig(n=n, t_max=t_max, seed=seed, flags=flags), objective, space)

    return runner


def _baseline_runner(func) -> Runner:
    def runner(n, t_max, seed, objective, space):
        return func(baselines.BaselineConfig(n=n, t_max=t_max, seed=seed), objective, space)

    return runner


ALGORITHMS: dict[str, Runner] = {name: _ngo_runner(flags) for name, flags in ngo.VARIANTS.items()}
ALGORITHMS.update(
    ABC=_baseline_runner(baselines.abc_run),
    FA=_baseline_runner(baselines.fa_run),
    RANDOM=_baseline_runner(baselines.random_search_run),
)
ABLATION_VARIANTS = ("NGO", "INGO-DCMIS", "INGO-BPED", "INGO")


def resolve_algorithm(name: str) -> str:
    key = name.upper()
    if key not in ALGORITHMS:
        raise ValueError(f"unknown algorithm {name!r}; choose from {', '.join(ALGORITHMS)}")
    return key


def run_algorithm(name: str, n: int, t_max: int, seed: int, objective: Objective, space: SearchSpace) -> RunResult:
    return ALGORITHMS[resolve_algorithm(name)](n, t_max, seed, objective, space)


@dataclass(frozen=True)
class TrialStats:
    best: float
    worst: float
    mean: float
    std: float
    runs: int

    def as_dict(self) -> dict:
        return {"best": self.best, "worst": self.worst, "mean": self.mean, "std": self.std, "runs": self.runs}


def aggregate_stats(values: Iterable[float], maximize: bool = False) -> TrialStats:
    """Best/worst/mean/sample std (n - 1 denominator; 0 for one value)."""
    v = [float(x) for x in values]
    if not v:
        raise ValueError("cannot aggregate an empty list of values")
    mean = math.fsum(v) / len(v)
    std = math.sqrt(math.fsum((x - mean) ** 2 for x in v) / (len(v) - 1)) if len(v) > 1 else 0.0
    lo, hi = min(v), max(v)
    best, worst = (hi, lo) if maximize else (lo, hi)
    # keep best <= mean <= worst exact under rounding of the mean
    mean = min(max(mean, lo), hi)
    return TrialStats(best, worst, mean, std, len(v))


def trial_seed(base_seed: int, trial: int) -> int:
    return base_seed + trial


def noise_rng(seed: int) -> np.random.Generator:
    """Independent stream for stochastic objectives (F7), decorrelated from the optimizer's."""
    return np.random.default_rng([seed, 7])


@dataclass
class RunRecord:
    algorithm: str
    objective: str
    trial: int
    seed: int
    result: RunResult


def run_benchmark_trial(algorithm: str, fid: str, trial: int, base_seed: int, n: int, t_max: int) -> RunRecord:
    spec = benchmark_spec(fid)
    seed = trial_seed(base_seed, trial)
    result = run_algorithm(algorithm, n, t_max, seed, make_objective(spec.id, noise_rng(seed)), spec.space)
    return RunRecord(resolve_algorithm(algorithm), spec.id, trial, seed, result)


class CampaignError(RuntimeError):
    def __init__(self, message: str, records: list[RunRecord]):
        super().__init__(message)
        self.records = records


@dataclass
class CampaignResult:
    records: list[RunRecord] = field(default_factory=list)

    def values(self, algorithm: str, objective: str) -> list[float]:
        return [r.result.best_fitness for r in self.records if r.algorithm == algorithm and r.objective == objective]

    def pairs(self) -> list[tuple[str, str]]:
        seen: dict[tuple[str, str], None] = {}
        for r in self.records:
            seen.setdefault((r.algorithm, r.objective), None)
        return list(seen)

    def stats(self) -> dict[tuple[str, str], TrialStats]:
        return {pair: aggregate_stats(self.values(*pair)) for pair in self.pairs()}


def _map(func, tasks: Sequence[tuple], jobs: int):
    if jobs <= 1:
        for task in tasks:
            yield task, func(*task)
        return
    from concurrent.futures import ProcessPoolExecutor

    with ProcessPoolExecutor(max_workers=jobs) as pool:
        futures = [pool.submit(func, *task) for task in tasks]
        for task, fut in zip(tasks, futures):
            yield task, fut.result()


def run_campaign(
    algorithms: Sequence[str],
    function_ids: Sequence[str],
    trials: int,
    base_seed: int = 0,
    *,
    n: int = 30,
    t_max: int = 500,
    jobs: int = 1,
    progress: Callable[[RunRecord], None] | None = None,
) -> CampaignResult:
    """Run every (algorithm, function, trial) triple; trial i uses seed base_seed + i."""
    if trials < 1:
        raise ValueError("trials must be at least 1")
    algorithms = [resolve_algorithm(a) for a in algorithms]
    function_ids = [benchmark_spec(f).id for f in function_ids]
    tasks = [(a, f, i, base_seed, n, t_max) for a in algorithms for f in function_ids for i in range(trials)]
    out = CampaignResult()
    try:
        for _, record in _map(run_benchmark_trial, tasks, jobs):
            out.records.append(record)
            if progress is not None:
                progress(record)
    except Exception as exc:
        done = len(out.records)
        a, f, i = tasks[done][:3]
        raise CampaignError(f"{a} on {f}, trial {i} failed: {exc}", out.records) from exc
    return out
