"""Static SVG figures for experiment reports (matplotlib, Agg backend)."""

from __future__ import annotations

import logging
import math
from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402
import numpy as np  # noqa: E402
from matplotlib.patches import Circle, Rectangle  # noqa: E402

from .experiments import ExperimentReport  # noqa: E402

log = logging.getLogger(__name__)

STYLE = {
    "font.size": 9,
    "axes.labelsize": 9,
    "legend.fontsize": 8,
    "xtick.labelsize": 8,
    "ytick.labelsize": 8,
    "svg.hashsalt": "goshawk",  # stable element ids across runs
    "svg.fonttype": "none",
}


def _size(scale: float = 1.0, ratio: float | None = None):
    width = 6.0 * scale
    ratio = (math.sqrt(5.0) - 1.0) / 2.0 if ratio is None else ratio
    return width, width * ratio


def _save(fig, path: Path) -> Path:
    fig.savefig(path, format="svg", metadata={"Date": None})
    plt.close(fig)
    return path


def _mean_curves(report: ExperimentReport):
    grouped: dict[tuple[str, str], list] = {}
    for c in report.curves:
        grouped.setdefault((c["algorithm"], c["objective"]), []).append(c["curve"])
    return {k: np.mean(np.array(v), axis=0) for k, v in grouped.items()}


def plot_convergence(report: ExperimentReport, path: Path, objective: str | None = None) -> Path:
    """Mean best-so-far curve per algorithm; coverage (%) for wsn, log fitness otherwise."""
    wsn = report.kind == "wsn"
    with plt.rc_context(STYLE):
        fig, ax = plt.subplots(figsize=_size())
        for (algo, obj), curve in _mean_curves(report).items():
            if objective is not None and obj != objective:
                continue
            it = np.arange(1, curve.size + 1)
            if wsn:
                ax.plot(it, 100.0 * (1.0 - curve), label=algo, lw=1.2)
            else:
                ax.semilogy(it, np.maximum(curve - min(curve.min(), 0.0), 1e-300), label=algo, lw=1.2)
        ax.set_xlabel("Iteration")
        ax.set_ylabel("Coverage rate (%)" if wsn else "Best fitness")
        if objective:
            ax.set_title(objective)
        ax.legend(frameon=False)
        fig.tight_layout()
        return _save(fig, path)


def plot_deployment(nodes, scenario: dict, path: Path, title: str = "") -> Path:
    nodes = np.asarray(nodes, dtype=float)
    L, M, R = scenario["length"], scenario["width"], scenario["sensing_radius"]
    with plt.rc_context(STYLE):
        fig, ax = plt.subplots(figsize=(4.5, 4.5))
        ax.add_patch(Rectangle((0, 0), L, M, fill=False, lw=1.0, color="k"))
        for x, y in nodes:
            ax.add_patch(Circle((x, y), R, color="tab:blue", alpha=0.25, lw=0))
        ax.plot(nodes[:, 0], nodes[:, 1], "k.", ms=4)
        ax.set_xlim(-R, L + R)
        ax.set_ylim(-R, M + R)
        ax.set_aspect("equal")
        ax.set_xlabel("x (m)")
        ax.set_ylabel("y (m)")
        ax.set_title(title)
        fig.tight_layout()
        return _save(fig, path)


def plot_connectivity(nodes, connectivity: dict, scenario: dict, path: Path, title: str = "") -> Path:
    nodes = np.asarray(nodes, dtype=float)
    labels = np.asarray(connectivity["labels"])
    largest = int(np.argmax(np.bincount(labels)))
    with plt.rc_context(STYLE):
        fig, ax = plt.subplots(figsize=(4.5, 4.5))
        for i, j in connectivity["edges"]:
            ax.plot(nodes[[i, j], 0], nodes[[i, j], 1], color="0.6", lw=0.7)
        main = labels == largest
        ax.plot(nodes[main, 0], nodes[main, 1], "o", color="tab:blue", ms=4, label="largest component")
        if (~main).any():
            ax.plot(nodes[~main, 0], nodes[~main, 1], "o", color="tab:red", ms=4, label="disconnected")
        ax.set_xlim(0, scenario["length"])
        ax.set_ylim(0, scenario["width"])
        ax.set_aspect("equal")
        ax.set_title(f"{title}  eta = {100 * connectivity['eta']:.2f}%")
        ax.legend(frameon=False, loc="upper right")
        fig.tight_layout()
        return _save(fig, path)


def plot_boxplots(report: ExperimentReport, path: Path, objective: str) -> Path:
    algos = [row["algorithm"] for row in report.stats if row["objective"] == objective]
    data = [report.values(a, objective) for a in algos]
    with plt.rc_context(STYLE):
        fig, ax = plt.subplots(figsize=_size(0.8))
        ax.boxplot(data)
        ax.set_xticks(range(1, len(algos) + 1), algos)
        if all(v > 0 for d in data for v in d):
            ax.set_yscale("log")
        ax.set_ylabel("Final fitness")
        ax.set_title(objective)
        fig.tight_layout()
        return _save(fig, path)


def _safe(name: str) -> str:
    return "".join(ch if ch.isalnum() or ch in "-_" else "_" for ch in name)


def render_figures(report: ExperimentReport, directory) -> list[Path]:
    """Render every applicable figure into ``directory/figures``; failures are logged and skipped."""
    out = Path(directory) / "figures"
    out.mkdir(parents=True, exist_ok=True)
    jobs = []
    if report.kind == "wsn":
        scen = report.config["scenario"]
        jobs.append((plot_convergence, (report, out / "convergence.svg")))
        for algo, dep in report.deployments.items():
            jobs.append((plot_deployment, (dep["nodes"], scen, out / f"deployment_{_safe(algo)}.svg", algo)))
            conn = report.connectivity[algo]
            jobs.append((plot_connectivity, (dep["nodes"], conn, scen, out / f"connectivity_{_safe(algo)}.svg", algo)))
    else:
        for obj in dict.fromkeys(row["objective"] for row in report.stats):
            jobs.append((plot_convergence, (report, out / f"convergence_{obj}.svg", obj)))
            jobs.append((plot_boxplots, (report, out / f"boxplot_{obj}.svg", obj)))
    written = []
    for func, args in jobs:
        try:
            written.append(func(*args))
        except Exception:  # figures are best-effort
            log.exception("failed to render %s", args[-2] if func is not plot_convergence else args[1])
            plt.close("all")
    return written
