"""Search-space, population and run-result primitives shared by every optimizer."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Sequence

import numpy as np

Objective = Callable[[np.ndarray], float]


class ConfigurationError(ValueError):
    """Invalid optimizer, scenario or experiment configuration."""


class EvaluationError(RuntimeError):
    """Objective returned a non-finite value."""

    def __init__(self, message: str, index: int | None = None):
        super().__init__(message)
        self.index = index


class PopulationStateError(RuntimeError):
    """Operation requires an evaluated population."""


@dataclass(frozen=True)
class SearchSpace:
    """Axis-aligned box ``[lower, upper]``."""

    lower: np.ndarray
    upper: np.ndarray

    def __post_init__(self):
        lower = np.atleast_1d(np.asarray(self.lower, dtype=float))
        upper = np.atleast_1d(np.asarray(self.upper, dtype=float))
        if lower.ndim != 1 or lower.shape != upper.shape or lower.size < 1:
            raise ValueError("lower and upper must be 1-D vectors of equal, nonzero length")
        if not np.all(lower < upper):
            raise ValueError("every lower bound must be strictly below its upper bound")
        lower.setflags(write=False)
        upper.setflags(write=False)
        object.__setattr__(self, "lower", lower)
        object.__setattr__(self, "upper", upper)

    @classmethod
    def uniform(cls, low: float, high: float, dim: int) -> "SearchSpace":
        return cls(np.full(dim, float(low)), np.full(dim, float(high)))

    @property
    def dim(self) -> int:
        return self.lower.size

    @property
    def width(self) -> np.ndarray:
        return self.upper - self.lower

    def contains(self, position) -> bool:
        x = np.asarray(position, dtype=float)
        return bool(np.all(x >= self.lower) and np.all(x <= self.upper))


def make_rng(seed: int) -> np.random.Generator:
    """Seeded stream; equal seeds give bit-identical draw sequences."""
    return np.random.Generator(np.random.PCG64(int(seed)))


def clamp_to_bounds(position, space: SearchSpace) -> np.ndarray:
    x = np.asarray(position, dtype=float)
    if x.shape[-1] != space.dim:
        raise ValueError(f"position has length {x.shape[-1]}, search space has dim {space.dim}")
    return np.minimum(space.upper, np.maximum(space.lower, x))


@dataclass
class Population:
    """Agents stored row-wise; ``fitness`` is NaN until evaluated."""

    positions: np.ndarray
    fitness: np.ndarray = None

    def __post_init__(self):
        self.positions = np.array(self.positions, dtype=float, ndmin=2)
        if self.fitness is None:
            self.fitness = np.full(len(self.positions), np.nan)
        else:
            self.fitness = np.array(self.fitness, dtype=float)
        if self.fitness.shape != (len(self.positions),):
            raise ValueError("fitness must hold one value per agent")

    def __len__(self) -> int:
        return len(self.positions)

    @property
    def dim(self) -> int:
        return self.positions.shape[1]

    @property
    def evaluated(self) -> bool:
        return not np.isnan(self.fitness).any()

    @property
    def best_index(self) -> int:
        # argmin returns the first occurrence, i.e. lowest index on ties
        if not self.evaluated:
            raise PopulationStateError("population has unevaluated agents")
        return int(np.argmin(self.fitness))

    def copy(self) -> "Population":
        return Population(self.positions.copy(), self.fitness.copy())


def evaluate(objective: Objective, position: np.ndarray, index: int | None = None) -> float:
    value = float(objective(position))
    if not math.isfinite(value):
        where = "" if index is None else f" for agent {index}"
        raise EvaluationError(f"objective returned {value}{where}", index)
    return value


def evaluate_population(objective: Objective, pop: Population) -> Population:
    """Fill every agent's fitness in place and return the population."""
    for i, x in enumerate(pop.positions):
        pop.fitness[i] = evaluate(objective, x, i)
    return pop


def _round_half_up(value: float) -> int:
    return int(math.floor(value + 0.5))


def rank_and_partition(
    pop: Population | Sequence[float], elite_frac: float = 0.2, weak_frac: float = 0.2
) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Split agent indices into (elite, middle, weak) by fitness rank.

    Elite are the ``round(elite_frac * N)`` best agents, weak the
    ``round(weak_frac * N)`` worst. Ties are ranked by lower index.
    """
    fitness = np.asarray(pop.fitness if isinstance(pop, Population) else pop, dtype=float)
    if not (elite_frac > 0 and weak_frac > 0 and elite_frac + weak_frac <= 1):
        raise ConfigurationError("fractions must be positive and sum to at most 1")
    n = fitness.size
    n_elite = _round_half_up(elite_frac * n)
    n_weak = _round_half_up(weak_frac * n)
    if n_elite == 0 or n_weak == 0:
        raise ConfigurationError(f"population of {n} is too small to partition")
    if n_elite + n_weak > n:
        raise ConfigurationError(f"population of {n} cannot hold {n_elite} elite and {n_weak} weak agents")
    order = np.argsort(fitness, kind="stable")
    return order[:n_elite], order[n_elite : n - n_weak], order[n - n_weak :]


@dataclass
class RunResult:
    best_position: np.ndarray
    best_fitness: float
    curve: np.ndarray
    evaluations: int
    algorithm: str = ""
    seed: int | None = None
    extra: dict = field(default_factory=dict)
