"""Northern goshawk optimization with the chaotic-init and bidirectional-evolution strategies.

The four strategy-flag combinations give NGO, INGO-DCMIS, INGO-BPED and INGO.
Each phase is split into a pure candidate formula (testable with fixed draws)
and a driver that consumes random numbers, clamps and applies the acceptance rule.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .chaos import chaotic_disturbance, dcmis_init, uniform_init
from .core import (
    ConfigurationError,
    Objective,
    Population,
    PopulationStateError,
    RunResult,
    SearchSpace,
    _round_half_up,
    clamp_to_bounds,
    evaluate,
    evaluate_population,
    make_rng,
    rank_and_partition,
)

# Case-1 step of the weak-agent update: at most LOCAL_STEP_FRACTION of the box
# width, shrinking as (1 - t/t_max) ** LOCAL_STEP_POWER; the floor keeps it a ring.
LOCAL_STEP_FRACTION = 0.02
LOCAL_STEP_POWER = 3
LOCAL_STEP_FLOOR_RATIO = 0.01


@dataclass(frozen=True)
class StrategyFlags:
    use_dcmis: bool = True
    use_bped: bool = True

    @property
    def name(self) -> str:
        return VARIANT_NAMES[(self.use_dcmis, self.use_bped)]


VARIANT_NAMES = {
    (False, False): "NGO",
    (True, False): "INGO-DCMIS",
    (False, True): "INGO-BPED",
    (True, True): "INGO",
}
VARIANTS = {name: StrategyFlags(*key) for key, name in VARIANT_NAMES.items()}


@dataclass
class OptimizerConfig:
    n: int = 30
    t_max: int = 500
    seed: int = 0
    flags: StrategyFlags = field(default_factory=StrategyFlags)
    elite_frac: float = 0.2
    weak_frac: float = 0.2

    def __post_init__(self):
        if self.n < 5:
            raise ConfigurationError("population size must be at least 5")
        if self.t_max < 1:
            raise ConfigurationError("t_max must be at least 1")
        if not (0 <= self.seed < 2**64):
            raise ConfigurationError("seed must be a 64-bit unsigned integer")
        if not (self.elite_frac > 0 and self.weak_frac > 0 and self.elite_frac + self.weak_frac <= 1):
            raise ConfigurationError("elite_frac and weak_frac must be positive and sum to at most 1")


# -- candidate formulas -------------------------------------------------------


def strike_candidate(x, prey, prey_is_better: bool, r, intensity):
    """Prey-strike move: toward the prey if it is fitter, away from it otherwise."""
    x = np.asarray(x, dtype=float)
    prey = np.asarray(prey, dtype=float)
    if prey_is_better:
        return x + r * (prey - intensity * x)
    return x + r * (x - prey)


def exploitation_radius(t: float, t_max: float) -> float:
    return 0.02 * (1.0 - t / t_max)


def chase_candidate(x, radius: float, r):
    x = np.asarray(x, dtype=float)
    return x + radius * (2.0 * r - 1.0) * x


def bped_weight(t: float, t_max: float, dim: int) -> float:
    """Oscillating weight: near 0.5 early, swinging within 0.5 * (1 +- pi) late."""
    freq = 1.0 / dim
    return 0.5 * (math.sin(2.0 * math.pi * freq * t + math.pi) * math.pi * (t / t_max) + 1.0)


def switch_factor(z: float) -> int:
    """round(1 + |z|); always 1 or 2 over the disturbance range."""
    return _round_half_up(1.0 + abs(z))


def elite_candidate(x_q, x_best, x_k, w: float, factor: int):
    return np.asarray(x_q, dtype=float) + w * (np.asarray(x_best, dtype=float) - factor * np.asarray(x_k, dtype=float))


def local_step_bounds(space: SearchSpace, t: float, t_max: float) -> tuple[np.ndarray, np.ndarray]:
    """Narrowing (lb_ap, ub_ap) step magnitudes for refinement around the best agent."""
    ub_ap = space.width * LOCAL_STEP_FRACTION * (1.0 - t / t_max) ** LOCAL_STEP_POWER
    return ub_ap * LOCAL_STEP_FLOOR_RATIO, ub_ap


def weak_refine_candidate(x_best, lb_ap, ub_ap, sign, step):
    return np.asarray(x_best, dtype=float) + sign * (lb_ap + step * (ub_ap - lb_ap))


def weak_mutation_candidate(x, lower, upper, sign, step):
    return np.asarray(x, dtype=float) - 2.0 * sign * (lower + step * (upper - lower))


# -- phase drivers --------------------------------------------------------------


def _require_evaluated(pop: Population):
    if not pop.evaluated:
        raise PopulationStateError("population must be evaluated before this phase")


def _accept(pop: Population, i: int, candidate: np.ndarray, value: float) -> bool:
    if value < pop.fitness[i]:
        pop.positions[i] = candidate
        pop.fitness[i] = value
        return True
    return False


def prey_strike_phase(pop: Population, i: int, objective: Objective, space: SearchSpace, rng) -> Population:
    _require_evaluated(pop)
    n = len(pop)
    if n < 2:
        raise ConfigurationError("prey selection needs at least two agents")
    k = int(rng.integers(0, n - 1))
    if k >= i:
        k += 1
    intensity = int(rng.integers(1, 3))
    r = rng.random(space.dim)
    x = pop.positions[i]
    candidate = strike_candidate(x, pop.positions[k], pop.fitness[k] < pop.fitness[i], r, intensity)
    candidate = clamp_to_bounds(candidate, space)
    _accept(pop, i, candidate, evaluate(objective, candidate, i))
    return pop


def chase_escape_phase(
    pop: Population, i: int, objective: Objective, space: SearchSpace, rng, t: float, t_max: float
) -> Population:
    _require_evaluated(pop)
    r = rng.random(space.dim)
    candidate = clamp_to_bounds(chase_candidate(pop.positions[i], exploitation_radius(t, t_max), r), space)
    _accept(pop, i, candidate, evaluate(objective, candidate, i))
    return pop


def bped_elite_update(
    pop: Population, elite, x_best, objective: Objective, space: SearchSpace, rng, t: float, t_max: float
) -> Population:
    _require_evaluated(pop)
    elite = [int(q) for q in elite]
    if not elite:
        raise ConfigurationError("elite set is empty")
    n = len(pop)
    w = bped_weight(t, t_max, space.dim)
    for q in elite:
        partners = [k for k in elite if k != q]
        if partners:
            k = partners[int(rng.integers(0, len(partners)))]
        else:
            k = int(rng.integers(0, n - 1))
            if k >= q:
                k += 1
        factor = switch_factor(chaotic_disturbance(rng))
        candidate = clamp_to_bounds(elite_candidate(pop.positions[q], x_best, pop.positions[k], w, factor), space)
        _accept(pop, q, candidate, evaluate(objective, candidate, q))
    return pop


def bped_weak_update(
    pop: Population, weak, x_best, objective: Objective, space: SearchSpace, rng, t: float, t_max: float
) -> Population:
    weak = [int(i) for i in weak]
    if not weak:
        raise ConfigurationError("weak set is empty")
    lb_ap, ub_ap = local_step_bounds(space, t, t_max)
    for i in weak:
        sign = np.sign(rng.random(space.dim) - 0.5)
        step = rng.random(space.dim)
        if rng.random() < 0.5:
            candidate = weak_refine_candidate(x_best, lb_ap, ub_ap, sign, step)
        else:
            candidate = weak_mutation_candidate(pop.positions[i], space.lower, space.upper, sign, step)
        candidate = clamp_to_bounds(candidate, space)
        pop.positions[i] = candidate
        pop.fitness[i] = evaluate(objective, candidate, i)
    return pop


# -- full loop -----------------------------------------------------------------


def initialize(space: SearchSpace, n: int, rng, use_dcmis: bool) -> Population:
    return (dcmis_init if use_dcmis else uniform_init)(space, n, rng)


def run(config: OptimizerConfig, objective: Objective, space: SearchSpace, *, observer=None) -> RunResult:
    """Optimize ``objective`` over ``space``; returns best-so-far curve of length t_max.

    ``observer(t, pop)`` is called after every completed iteration when given.
    """
    rng = make_rng(config.seed)
    calls = 0

    def counted(x):
        nonlocal calls
        calls += 1
        return objective(x)

    pop = evaluate_population(counted, initialize(space, config.n, rng, config.flags.use_dcmis))
    b = pop.best_index
    best_x, best_f = pop.positions[b].copy(), float(pop.fitness[b])
    curve = np.empty(config.t_max)

    for t in range(1, config.t_max + 1):
        for i in range(config.n):
            prey_strike_phase(pop, i, counted, space, rng)
            chase_escape_phase(pop, i, counted, space, rng, t, config.t_max)
        b = pop.best_index
        if pop.fitness[b] < best_f:
            best_x, best_f = pop.positions[b].copy(), float(pop.fitness[b])

        if config.flags.use_bped:
            elite, _, weak = rank_and_partition(pop, config.elite_frac, config.weak_frac)
            bped_elite_update(pop, elite, best_x, counted, space, rng, t, config.t_max)
            bped_weak_update(pop, weak, best_x, counted, space, rng, t, config.t_max)
            b = pop.best_index
            if pop.fitness[b] < best_f:
                best_x, best_f = pop.positions[b].copy(), float(pop.fitness[b])

        curve[t - 1] = best_f
        if observer is not None:
            observer(t, pop)

    return RunResult(best_x, best_f, curve, calls, algorithm=config.flags.name, seed=config.seed)
