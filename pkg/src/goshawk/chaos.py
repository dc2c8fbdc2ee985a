"""Coupled Logistic-Sine chaotic map and the chaotic population initializer."""

from __future__ import annotations

import numpy as np

from .core import Population, SearchSpace

# Image of coupled_map over [0, 1): the global minimum sits at s = 0.5.
MAP_MIN = float(np.sin(1.25 * np.pi))
MAP_MAX = 1.0


def coupled_map(seed_value):
    """sin(pi * (s * (1 - s) + sin(pi * s))), elementwise for s in [0, 1)."""
    s = np.asarray(seed_value, dtype=float)
    if np.any(s < 0) or np.any(s >= 1):
        raise ValueError("chaotic seed values must lie in [0, 1)")
    z = np.sin(np.pi * (s * (1.0 - s) + np.sin(np.pi * s)))
    return float(z) if z.ndim == 0 else z


def dcmis_init(space: SearchSpace, n: int, rng: np.random.Generator) -> Population:
    """Draw an n x dim seed matrix, pass it through the map and fold |z| into the box."""
    if n < 1:
        raise ValueError("population size must be positive")
    seeds = rng.random((n, space.dim))
    z = coupled_map(seeds)
    return Population(space.lower + np.abs(z) * space.width)


def uniform_init(space: SearchSpace, n: int, rng: np.random.Generator) -> Population:
    if n < 1:
        raise ValueError("population size must be positive")
    return Population(space.lower + rng.random((n, space.dim)) * space.width)


def chaotic_disturbance(rng: np.random.Generator) -> float:
    return coupled_map(rng.random())
