"""Render benchmark reports as figures, written next to the delimited
output when the CLI is given --plots.

One PNG per statistic: a proportion-of-optimal bar chart, raw plus
smoothed relative-difference series per metric, finder timings across
the corpus, and (for solve sweeps) the solve-time relative-difference
series.
"""

from __future__ import annotations

from collections import defaultdict
from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .bench import BenchReport

_COLORS = {"RCM++": "tab:blue", "GL_RCM": "tab:orange",
           "MIND_RCM": "tab:green", "none": "tab:gray"}


def _save(fig, outdir: Path, name: str, written: list[Path]) -> None:
    path = Path(outdir) / name
    fig.savefig(path, dpi=150, bbox_inches="tight")
    plt.close(fig)
    written.append(path)


def _plot_proportion_optimal(report: BenchReport, outdir: Path, written: list[Path]) -> None:
    if not report.proportion_optimal:
        return
    fig, ax = plt.subplots(figsize=(6, 3.5))
    labels = []
    heights = []
    colors = []
    for row in report.proportion_optimal:
        suffix = "BW" if row["metric"] == "bandwidth" else "P"
        labels.append(f"{row['algorithm']}_{suffix}")
        heights.append(row["proportion"])
        colors.append(_COLORS.get(row["algorithm"], "tab:gray"))
    ax.bar(range(len(labels)), heights, color=colors)
    ax.set_xticks(range(len(labels)), labels, rotation=30, ha="right")
    ax.set_ylabel("proportion of optimal results")
    ax.set_ylim(0, 1)
    _save(fig, outdir, "proportion_optimal.png", written)


def _plot_relative_difference(report: BenchReport, outdir: Path, written: list[Path]) -> None:
    by_metric = defaultdict(lambda: defaultdict(list))
    for row in report.relative_difference:
        by_metric[row["metric"]][row["algorithm"]].append(row)
    for metric, per_algo in by_metric.items():
        fig, ax = plt.subplots(figsize=(7, 3.5))
        for algo, rows in per_algo.items():
            color = _COLORS.get(algo, "tab:gray")
            xs = [r["matrix_index"] for r in rows if r["raw"] is not None]
            raw = [r["raw"] for r in rows if r["raw"] is not None]
            smooth = [r["smoothed"] for r in rows if r["smoothed"] is not None]
            ax.plot(xs, raw, color=color, alpha=0.25, linewidth=0.8)
            ax.plot(xs, smooth, color=color, linewidth=1.8, label=algo)
        ax.axhline(0.0, color="black", linewidth=0.6)
        ax.set_xlabel("matrix index (ascending size)")
        ax.set_ylabel(f"relative difference vs MIND_RCM ({metric})")
        ax.legend()
        _save(fig, outdir, f"relative_difference_{metric}.png", written)


def _plot_finder_times(report: BenchReport, outdir: Path, written: list[Path]) -> None:
    per_algo = defaultdict(list)
    for row in report.rows:
        if row["algorithm"] != "none":
            per_algo[row["algorithm"]].append(row["finder_time_ns"])
    if not per_algo:
        return
    fig, ax = plt.subplots(figsize=(7, 3.5))
    for algo, times in per_algo.items():
        ax.plot(range(len(times)), [t / 1e9 for t in times],
                color=_COLORS.get(algo, "tab:gray"), label=algo)
    ax.set_yscale("log")
    ax.set_xlabel("matrix index (ascending size)")
    ax.set_ylabel("median finder time (s)")
    ax.legend()
    _save(fig, outdir, "finder_times.png", written)


def render_report_plots(report: BenchReport, outdir: Path) -> list[Path]:
    """Write every figure the report supports; returns the paths."""
    outdir = Path(outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    written: list[Path] = []
    if report.kind == "bench":
        _plot_proportion_optimal(report, outdir, written)
        _plot_relative_difference(report, outdir, written)
        _plot_finder_times(report, outdir, written)
    else:
        _plot_relative_difference(report, outdir, written)
    return written
