"""Wireless sensor network coverage and connectivity model.

Nodes use a Boolean disc sensing model over a grid of monitoring points placed
at the centers of square cells. A deployment of N nodes is encoded as the
interleaved vector ``[x0, y0, x1, y1, ...]`` so any box-bounded optimizer can
search it directly.
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass

import numpy as np

from .core import ConfigurationError, SearchSpace


@dataclass(frozen=True)
class WsnScenario:
    length: float = 50.0
    width: float = 50.0
    node_count: int = 35
    sensing_radius: float = 5.0
    comm_radius: float = 10.0
    grid_step: float = 0.8

    def __post_init__(self):
        for name in ("length", "width", "sensing_radius", "comm_radius", "grid_step"):
            if not getattr(self, name) > 0:
                raise ConfigurationError(f"{name} must be positive")
        if self.node_count < 1:
            raise ConfigurationError("node_count must be at least 1")
        if self.comm_radius < 2 * self.sensing_radius:
            raise ConfigurationError(
                f"comm_radius ({self.comm_radius}) must be at least 2 * sensing_radius ({2 * self.sensing_radius})"
            )

    def to_dict(self) -> dict:
        return asdict(self)

    @property
    def dim(self) -> int:
        return 2 * self.node_count

    @property
    def space(self) -> SearchSpace:
        lower = np.zeros(self.dim)
        upper = np.tile([self.length, self.width], self.node_count)
        return SearchSpace(lower, upper)


def _cell_count(extent: float, step: float) -> int:
    # tolerate representation error, e.g. 50 / 0.8
    return int(math.floor(extent / step + 1e-9))


def grid_axes(scenario: WsnScenario) -> tuple[np.ndarray, np.ndarray]:
    nx = _cell_count(scenario.length, scenario.grid_step)
    ny = _cell_count(scenario.width, scenario.grid_step)
    if nx == 0 or ny == 0:
        raise ConfigurationError("grid_step exceeds the monitoring area; the grid is empty")
    half = scenario.grid_step / 2.0
    return half + scenario.grid_step * np.arange(nx), half + scenario.grid_step * np.arange(ny)


def grid_points(scenario: WsnScenario) -> np.ndarray:
    """Monitoring points as an (nx * ny, 2) array, x-major."""
    gx, gy = grid_axes(scenario)
    xx, yy = np.meshgrid(gx, gy, indexing="ij")
    return np.column_stack([xx.ravel(), yy.ravel()])


def distance(a, b) -> float:
    dx = float(a[0]) - float(b[0])
    dy = float(a[1]) - float(b[1])
    return math.sqrt(dx * dx + dy * dy)


def sensing_indicator(node, target, radius: float) -> int:
    return int(distance(node, target) <= radius)


def joint_detection(nodes, target, radius: float) -> int:
    missed = 1
    for node in nodes:
        missed *= 1 - sensing_indicator(node, target, radius)
    return 1 - missed


def decode_deployment(x, scenario: WsnScenario) -> np.ndarray:
    x = np.asarray(x, dtype=float)
    if x.shape != (scenario.dim,):
        raise ValueError(f"expected a vector of length {scenario.dim}, got shape {x.shape}")
    return x.reshape(scenario.node_count, 2)


def encode_deployment(nodes) -> np.ndarray:
    return np.asarray(nodes, dtype=float).reshape(-1)


def coverage_mask(nodes, scenario: WsnScenario) -> np.ndarray:
    """Boolean (nx, ny) array of covered monitoring points."""
    nodes = np.asarray(nodes, dtype=float).reshape(-1, 2)
    gx, gy = grid_axes(scenario)
    dx = nodes[:, 0, None] - gx
    dy = nodes[:, 1, None] - gy
    d = np.sqrt(dx[:, :, None] ** 2 + dy[:, None, :] ** 2)
    return np.any(d <= scenario.sensing_radius, axis=0)


def coverage_rate(nodes, scenario: WsnScenario) -> float:
    return float(coverage_mask(nodes, scenario).mean())


class CoverageObjective:
    """1 - coverage rate of the decoded deployment (minimization form).

    The grid is cached; each call costs one (N, nx, ny) distance sweep.
    """

    def __init__(self, scenario: WsnScenario):
        self.scenario = scenario
        self._gx, self._gy = grid_axes(scenario)
        self._r2 = scenario.sensing_radius**2

    def __call__(self, x) -> float:
        nodes = decode_deployment(x, self.scenario)
        dx2 = (nodes[:, 0, None] - self._gx) ** 2
        dy2 = (nodes[:, 1, None] - self._gy) ** 2
        nearest = np.min(dx2[:, :, None] + dy2[:, None, :], axis=0)
        return 1.0 - float(np.count_nonzero(nearest <= self._r2)) / nearest.size


def coverage_objective(scenario: WsnScenario) -> CoverageObjective:
    return CoverageObjective(scenario)


@dataclass(frozen=True)
class ConnectivityReport:
    component_sizes: tuple
    largest: int
    eta: float
    labels: tuple = ()
    edges: tuple = ()

    def to_dict(self) -> dict:
        return {
            "component_sizes": list(self.component_sizes),
            "largest": self.largest,
            "eta": self.eta,
            "labels": list(self.labels),
            "edges": [list(e) for e in self.edges],
        }


def communication_edges(nodes, comm_radius: float) -> list[tuple[int, int]]:
    nodes = np.asarray(nodes, dtype=float).reshape(-1, 2)
    diff = nodes[:, None, :] - nodes[None, :, :]
    d = np.sqrt(np.sum(diff * diff, axis=-1))
    i, j = np.nonzero(np.triu(d < comm_radius, k=1))
    return list(zip(i.tolist(), j.tolist()))


def _find(parent: list[int], i: int) -> int:
    while parent[i] != i:
        parent[i] = parent[parent[i]]
        i = parent[i]
    return i


def connectivity_rate(nodes, scenario: WsnScenario | float) -> ConnectivityReport:
    """Largest communication component as a fraction of all nodes.

    Links exist for pairs strictly closer than the communication radius.
    ``scenario`` may also be the radius itself.
    """
    rc = scenario.comm_radius if isinstance(scenario, WsnScenario) else float(scenario)
    nodes = np.asarray(nodes, dtype=float).reshape(-1, 2)
    n = len(nodes)
    if n < 1:
        raise ValueError("connectivity needs at least one node")
    edges = communication_edges(nodes, rc)
    parent = list(range(n))
    for i, j in edges:
        ri, rj = _find(parent, i), _find(parent, j)
        if ri != rj:
            parent[max(ri, rj)] = min(ri, rj)
    roots = [_find(parent, i) for i in range(n)]
    # relabel components 0..m-1 in order of first appearance
    relabel: dict[int, int] = {}
    labels = tuple(relabel.setdefault(r, len(relabel)) for r in roots)
    sizes = tuple(int(c) for c in np.bincount(labels))
    largest = max(sizes)
    return ConnectivityReport(sizes, largest, largest / n, labels, tuple(edges))
