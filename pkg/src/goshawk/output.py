"""Write an experiment report as CSV/JSON files plus optional SVG figures."""

from __future__ import annotations

import csv
import json
from pathlib import Path

from .experiments import ExperimentReport

STATS_COLUMNS = ["algorithm", "objective", "best", "worst", "mean", "std", "runs"]


class OutputError(OSError):
    pass


def _fmt(value):
    # repr round-trips floats exactly and ignores locale
    return repr(float(value)) if isinstance(value, float) else value


def _write_csv(path: Path, header: list[str], rows) -> Path:
    try:
        with path.open("w", newline="", encoding="utf-8") as fh:
            writer = csv.writer(fh, lineterminator="\n")
            writer.writerow(header)
            for row in rows:
                writer.writerow([_fmt(v) for v in row])
    except OSError as exc:
        raise OutputError(f"cannot write {path}: {exc}") from exc
    return path


def raw_columns(report: ExperimentReport) -> list[str]:
    base = ["algorithm", "objective", "trial", "seed", "value"]
    return base + (["fitness", "eta"] if report.kind == "wsn" else [])


def emit_outputs(report: ExperimentReport, directory, plots: bool | None = None) -> list[Path]:
    """Write stats.csv, raw.csv, curves.csv, report.json (and deployment.csv for wsn).

    Figures are rendered when ``plots`` is true (default: the config's setting);
    a plotting failure is logged, never fatal.
    """
    out = Path(directory)
    try:
        out.mkdir(parents=True, exist_ok=True)
    except OSError as exc:
        raise OutputError(f"cannot create output directory {out}: {exc}") from exc

    written = [
        _write_csv(out / "stats.csv", STATS_COLUMNS, ([row[c] for c in STATS_COLUMNS] for row in report.stats)),
        _write_csv(out / "raw.csv", raw_columns(report), ([r[c] for c in raw_columns(report)] for r in report.runs)),
    ]

    wsn = report.kind == "wsn"
    header = ["algorithm", "objective", "trial", "iteration", "fitness"] + (["coverage"] if wsn else [])

    def curve_rows():
        for c in report.curves:
            for it, f in enumerate(c["curve"], start=1):
                row = [c["algorithm"], c["objective"], c["trial"], it, f]
                if wsn:
                    row.append(1.0 - f)
                yield row

    written.append(_write_csv(out / "curves.csv", header, curve_rows()))

    if wsn:
        written.append(
            _write_csv(
                out / "deployment.csv",
                ["algorithm", "trial", "node", "x", "y"],
                (
                    [algo, dep["trial"], k, float(x), float(y)]
                    for algo, dep in report.deployments.items()
                    for k, (x, y) in enumerate(dep["nodes"])
                ),
            )
        )

    path = out / "report.json"
    try:
        path.write_text(json.dumps(report.to_dict(), indent=1) + "\n", encoding="utf-8")
    except OSError as exc:
        raise OutputError(f"cannot write {path}: {exc}") from exc
    written.append(path)

    if plots if plots is not None else report.config.get("plots", True):
        from .plotting import render_figures

        written.extend(render_figures(report, out))
    return written
