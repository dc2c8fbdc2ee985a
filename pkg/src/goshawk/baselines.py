"""Comparison optimizers: artificial bee colony, firefly algorithm and random search.

All share the run contract of :func:`goshawk.ngo.run` and return a
:class:`~goshawk.core.RunResult` with a best-so-far curve of length ``t_max``.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .chaos import uniform_init
from .core import (
    ConfigurationError,
    Objective,
    RunResult,
    SearchSpace,
    clamp_to_bounds,
    evaluate,
    evaluate_population,
    make_rng,
)


@dataclass
class BaselineConfig:
    n: int = 30
    t_max: int = 500
    seed: int = 0
    abc_limit: int | None = None  # None: n * dim / 2
    fa_alpha: float = 0.2
    fa_alpha_decay: float = 0.97
    fa_beta0: float = 1.0
    fa_gamma: float = 1.0

    def __post_init__(self):
        if self.n < 1 or self.t_max < 1:
            raise ConfigurationError("n and t_max must be positive")
        if self.abc_limit is not None and self.abc_limit <= 0:
            raise ConfigurationError("abc_limit must be positive")
        if self.fa_alpha <= 0 or self.fa_beta0 <= 0 or self.fa_gamma < 0:
            raise ConfigurationError("firefly parameters must be positive (gamma may be 0)")
        if not 0 < self.fa_alpha_decay <= 1:
            raise ConfigurationError("fa_alpha_decay must be in (0, 1]")

    def limit_for(self, dim: int) -> int:
        return self.abc_limit if self.abc_limit is not None else max(1, self.n * dim // 2)


class _Tracker:
    """Counts objective calls and keeps the best-so-far point."""

    def __init__(self, objective: Objective):
        self.objective = objective
        self.calls = 0
        self.best_x = None
        self.best_f = np.inf

    def __call__(self, x, index=None) -> float:
        self.calls += 1
        value = evaluate(self.objective, x, index)
        if value < self.best_f:
            self.best_x, self.best_f = np.array(x, dtype=float), value
        return value


def _abc_fitness(f: np.ndarray) -> np.ndarray:
    return np.where(f >= 0, 1.0 / (1.0 + np.abs(f)), 1.0 + np.abs(f))


def abc_run(config: BaselineConfig, objective: Objective, space: SearchSpace) -> RunResult:
    """Artificial bee colony with ``n`` food sources (Karaboga's formulation)."""
    rng = make_rng(config.seed)
    track = _Tracker(objective)
    pop = uniform_init(space, config.n, rng)
    evaluate_population(track, pop)
    trials = np.zeros(config.n, dtype=int)
    limit = config.limit_for(space.dim)
    curve = np.empty(config.t_max)

    def neighbour_search(i: int):
        k = int(rng.integers(0, config.n - 1)) if config.n > 1 else 0
        if config.n > 1 and k >= i:
            k += 1
        j = int(rng.integers(0, space.dim))
        phi = rng.uniform(-1.0, 1.0)
        candidate = pop.positions[i].copy()
        candidate[j] += phi * (candidate[j] - pop.positions[k, j])
        candidate = clamp_to_bounds(candidate, space)
        value = track(candidate, i)
        if value < pop.fitness[i]:
            pop.positions[i], pop.fitness[i] = candidate, value
            trials[i] = 0
        else:
            trials[i] += 1

    for t in range(config.t_max):
        for i in range(config.n):  # employed bees
            neighbour_search(i)
        fit = _abc_fitness(pop.fitness)
        prob = fit / fit.sum()
        for _ in range(config.n):  # onlookers
            neighbour_search(int(rng.choice(config.n, p=prob)))
        worn = int(np.argmax(trials))
        if trials[worn] > limit:  # scout
            pop.positions[worn] = space.lower + rng.random(space.dim) * space.width
            pop.fitness[worn] = track(pop.positions[worn], worn)
            trials[worn] = 0
        curve[t] = track.best_f

    return RunResult(track.best_x, track.best_f, curve, track.calls, algorithm="ABC", seed=config.seed)


def firefly_step(xi, xj, beta0: float, gamma: float, alpha: float, scale, noise) -> np.ndarray:
    """Move firefly ``xi`` toward brighter ``xj``; ``noise`` is uniform [0, 1) per dimension."""
    xi = np.asarray(xi, dtype=float)
    xj = np.asarray(xj, dtype=float)
    r2 = float(np.sum((xi - xj) ** 2))
    beta = beta0 * np.exp(-gamma * r2)
    return xi + beta * (xj - xi) + alpha * (np.asarray(noise) - 0.5) * scale


def fa_run(config: BaselineConfig, objective: Objective, space: SearchSpace) -> RunResult:
    """Firefly algorithm with attraction beta0 * exp(-gamma r^2) and decaying random walk."""
    rng = make_rng(config.seed)
    track = _Tracker(objective)
    pop = uniform_init(space, config.n, rng)
    evaluate_population(track, pop)
    scale = space.width
    alpha = config.fa_alpha
    curve = np.empty(config.t_max)

    for t in range(config.t_max):
        for i in range(config.n):
            moved = False
            for j in range(config.n):
                if pop.fitness[j] < pop.fitness[i]:
                    pop.positions[i] = firefly_step(
                        pop.positions[i], pop.positions[j], config.fa_beta0, config.fa_gamma,
                        alpha, scale, rng.random(space.dim),
                    )  # fmt: skip
                    moved = True
            if not moved:  # brightest firefly wanders
                pop.positions[i] = pop.positions[i] + alpha * (rng.random(space.dim) - 0.5) * scale
            pop.positions[i] = clamp_to_bounds(pop.positions[i], space)
            pop.fitness[i] = track(pop.positions[i], i)
        alpha *= config.fa_alpha_decay
        curve[t] = track.best_f

    return RunResult(track.best_x, track.best_f, curve, track.calls, algorithm="FA", seed=config.seed)


def random_search_run(config: BaselineConfig, objective: Objective, space: SearchSpace) -> RunResult:
    rng = make_rng(config.seed)
    track = _Tracker(objective)
    curve = np.empty(config.t_max)
    for t in range(config.t_max):
        for x in space.lower + rng.random((config.n, space.dim)) * space.width:
            track(x)
        curve[t] = track.best_f
    return RunResult(track.best_x, track.best_f, curve, track.calls, algorithm="RANDOM", seed=config.seed)
