"""The fifteen classical benchmark functions (F1-F15) and their metadata."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np

from .core import SearchSpace


def penalty(x, a: float, k: float, m: float):
    """Boundary penalty u(x, a, k, m); zero on [-a, a]."""
    x = np.asarray(x, dtype=float)
    return np.where(x > a, k * (x - a) ** m, np.where(x < -a, k * (-x - a) ** m, 0.0))


def f1(x):
    return float(np.sum(x * x))


def f2(x):
    ax = np.abs(x)
    return float(np.sum(ax) + np.prod(ax))


def f3(x):
    return float(np.sum(np.cumsum(x) ** 2))


def f4(x):
    return float(np.max(np.abs(x)))


def f5(x):
    return float(np.sum(100.0 * (x[1:] - x[:-1] ** 2) ** 2 + (x[:-1] - 1.0) ** 2))


def f6(x):
    return float(np.sum(np.floor(x + 0.5) ** 2))


def f7_noiseless(x):
    i = np.arange(1, x.size + 1)
    return float(np.sum(i * x**4))


def f8(x):
    return float(np.sum(-x * np.sin(np.sqrt(np.abs(x)))))


def f9(x):
    return float(np.sum(x * x - 10.0 * np.cos(2.0 * np.pi * x) + 10.0))


def f10(x):
    n = x.size
    return float(
        -20.0 * np.exp(-0.2 * np.sqrt(np.sum(x * x) / n)) - np.exp(np.sum(np.cos(2.0 * np.pi * x)) / n) + 20.0 + np.e
    )


def f11(x):
    i = np.arange(1, x.size + 1)
    return float(np.sum(x * x) / 4000.0 - np.prod(np.cos(x / np.sqrt(i))) + 1.0)


def f12(x):
    n = x.size
    y = 1.0 + (x + 1.0) / 4.0
    core = (
        10.0 * np.sin(np.pi * y[0]) ** 2
        + np.sum((y[:-1] - 1.0) ** 2 * (1.0 + 10.0 * np.sin(np.pi * y[1:]) ** 2))
        + (y[-1] - 1.0) ** 2
    )
    return float(np.pi / n * core + np.sum(penalty(x, 10.0, 100.0, 4.0)))


def f13(x):
    core = (
        np.sin(3.0 * np.pi * x[0]) ** 2
        + np.sum((x[:-1] - 1.0) ** 2 * (1.0 + np.sin(3.0 * np.pi * x[1:]) ** 2))
        + (x[-1] - 1.0) ** 2 * (1.0 + np.sin(2.0 * np.pi * x[-1]) ** 2)
    )
    return float(0.1 * core + np.sum(penalty(x, 5.0, 100.0, 4.0)))


_FOXHOLE_GRID = np.array([-32.0, -16.0, 0.0, 16.0, 32.0])
FOXHOLES = np.vstack([np.tile(_FOXHOLE_GRID, 5), np.repeat(_FOXHOLE_GRID, 5)])


def f14(x):
    j = np.arange(1, 26)
    inner = j + np.sum((x[:, None] - FOXHOLES) ** 6, axis=0)
    return float(1.0 / (1.0 / 500.0 + np.sum(1.0 / inner)))


KOWALIK_A = np.array([0.1957, 0.1947, 0.1735, 0.16, 0.0844, 0.0627, 0.0456, 0.0342, 0.0323, 0.0235, 0.0246])
KOWALIK_B = 1.0 / np.array([0.25, 0.5, 1.0, 2.0, 4.0, 6.0, 8.0, 10.0, 12.0, 14.0, 16.0])


def f15(x):
    b = KOWALIK_B
    model = x[0] * (b * b + b * x[1]) / (b * b + b * x[2] + x[3])
    return float(np.sum((KOWALIK_A - model) ** 2))


@dataclass(frozen=True)
class BenchmarkSpec:
    id: str
    name: str
    dim: int
    low: float
    high: float
    known_optimum_value: float | None = None
    known_optimizer: tuple | None = None
    noisy: bool = False

    @property
    def space(self) -> SearchSpace:
        return SearchSpace.uniform(self.low, self.high, self.dim)

    def optimizer_array(self) -> np.ndarray | None:
        if self.known_optimizer is None:
            return None
        return np.array(self.known_optimizer, dtype=float)


def _at(value: float, dim: int) -> tuple:
    return (value,) * dim


# F14 and F15 optimizers have no closed form; these points were refined with a
# local Nelder-Mead polish to full double precision and frozen here.
F14_OPTIMIZER = (-31.978330712590456, -31.97833157692572)
F14_OPTIMUM = 0.99800383779445
F15_OPTIMIZER = (0.19283345304274813, 0.19083624027597035, 0.12311729907598006, 0.13576599033984466)
F15_OPTIMUM = 3.0748598780560487e-04

SPECS: dict[str, BenchmarkSpec] = {
    s.id: s
    for s in [
        BenchmarkSpec("F1", "sphere", 30, -30, 30, 0.0, _at(0.0, 30)),
        BenchmarkSpec("F2", "schwefel_2_22", 30, -10, 10, 0.0, _at(0.0, 30)),
        BenchmarkSpec("F3", "schwefel_1_2", 30, -100, 100, 0.0, _at(0.0, 30)),
        BenchmarkSpec("F4", "schwefel_2_21", 30, -100, 100, 0.0, _at(0.0, 30)),
        BenchmarkSpec("F5", "rosenbrock", 30, -30, 30, 0.0, _at(1.0, 30)),
        BenchmarkSpec("F6", "step", 30, -100, 100, 0.0, _at(0.0, 30)),
        BenchmarkSpec("F7", "quartic_noise", 30, -1.28, 1.28, 0.0, _at(0.0, 30), noisy=True),
        BenchmarkSpec("F8", "schwefel_2_26", 30, -500, 500, -12569.487, _at(420.9687, 30)),
        BenchmarkSpec("F9", "rastrigin", 30, -5.12, 5.12, 0.0, _at(0.0, 30)),
        BenchmarkSpec("F10", "ackley", 30, -32, 32, 0.0, _at(0.0, 30)),
        BenchmarkSpec("F11", "griewank", 30, -600, 600, 0.0, _at(0.0, 30)),
        BenchmarkSpec("F12", "penalized_1", 30, -50, 50, 0.0, _at(-1.0, 30)),
        BenchmarkSpec("F13", "penalized_2", 30, -50, 50, 0.0, _at(1.0, 30)),
        BenchmarkSpec("F14", "shekel_foxholes", 2, -65, 65, F14_OPTIMUM, F14_OPTIMIZER),
        BenchmarkSpec("F15", "kowalik", 4, -5, 5, F15_OPTIMUM, F15_OPTIMIZER),
    ]
}

_FUNCTIONS: dict[str, Callable[[np.ndarray], float]] = {
    "F1": f1, "F2": f2, "F3": f3, "F4": f4, "F5": f5, "F6": f6, "F7": f7_noiseless, "F8": f8,
    "F9": f9, "F10": f10, "F11": f11, "F12": f12, "F13": f13, "F14": f14, "F15": f15,
}  # fmt: skip

FUNCTION_IDS = tuple(SPECS)


def _normalize_id(fid) -> str:
    key = f"F{fid}" if isinstance(fid, int) else str(fid).upper()
    if key not in SPECS:
        raise ValueError(f"unknown benchmark function {fid!r}")
    return key


def benchmark_spec(fid) -> BenchmarkSpec:
    return SPECS[_normalize_id(fid)]


def evaluate_benchmark(fid, x, rng: np.random.Generator | None = None) -> float:
    """Evaluate benchmark ``fid`` at ``x``.

    F7 adds uniform [0, 1) noise drawn from ``rng`` (a fresh default
    generator is used when none is given).
    """
    key = _normalize_id(fid)
    x = np.asarray(x, dtype=float)
    if x.shape != (SPECS[key].dim,):
        raise ValueError(f"{key} expects a vector of length {SPECS[key].dim}, got shape {x.shape}")
    value = _FUNCTIONS[key](x)
    if key == "F7":
        value += float((rng or np.random.default_rng()).random())
    return value


def make_objective(fid, rng: np.random.Generator | None = None) -> Callable[[np.ndarray], float]:
    """Objective closure for the optimizers; binds the noise stream for F7."""
    key = _normalize_id(fid)
    func = _FUNCTIONS[key]
    if key != "F7":
        return func
    noise = rng if rng is not None else np.random.default_rng()
    return lambda x: func(x) + float(noise.random())
