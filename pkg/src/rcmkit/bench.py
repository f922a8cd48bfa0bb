"""Corpus benchmark harness behind the CLI.

A sweep parses every ``*.mtx`` file in a directory (unparseable files
are skipped with a warning, never aborting the run), reorders each
matrix with the configured algorithms, and emits one row per
(matrix, algorithm) plus summary statistics: proportion-of-optimal per
metric, and relative-difference series of each algorithm against the
MIND_RCM baseline, raw and exponentially smoothed.  Matrices are
ordered by ascending n, ties by nnz, then by name; the series index is
that position.

Reports are written as CSV (sections separated by ``# name`` marker
lines, each section a header row plus data rows) or as JSON with the
same field names one-to-one.  ``read_report`` parses both back,
reproducing every numeric field exactly.
"""

from __future__ import annotations

import json
import logging
import statistics
import time
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from . import metrics
from .envelope import NotPositiveDefiniteError, envelope_cholesky, solve
from .finders import StartPolicy
from .graph import build_graph, connected_components
from .matrix_io import MatrixFormatError, SparseSymMatrix, read_matrix_market_file
from .reorder import apply_permutation, find_starts, rcm_pipeline

log = logging.getLogger(__name__)

_ALGO_TO_FINDER = {"RCM++": "BNF", "GL_RCM": "GL", "MIND_RCM": "MIND", "none": "none"}

BENCH_COLUMNS = ("matrix", "n", "nnz", "algorithm", "start_nodes",
                 "bandwidth_before", "bandwidth_after",
                 "profile_before", "profile_after",
                 "finder_time_ns", "ordering_time_ns")
SOLVE_COLUMNS = ("matrix", "n", "nnz", "algorithm", "profile_after",
                 "factor_entries", "factor_time_ns", "solve_time_ns",
                 "total_time_ns", "residual")
TIMING_COLUMNS = ("finder_time_ns", "ordering_time_ns",
                  "factor_time_ns", "solve_time_ns", "total_time_ns")

# columns that must never be coerced to numbers when reading back
_STRING_COLUMNS = {"matrix", "algorithm", "metric", "file", "reason", "start_nodes"}


@dataclass
class BenchConfig:
    corpus_dir: Path
    output_path: Path
    algorithms: tuple[str, ...] = ("RCM++", "GL_RCM", "MIND_RCM")
    start_policy: StartPolicy = StartPolicy()
    smoothing_span: int = 100
    finder_repeats: int = 100
    solve: bool = False
    output_format: str = "csv"
    symmetrize: bool = False

    def __post_init__(self):
        if self.finder_repeats < 1:
            raise ValueError("finder_repeats must be >= 1")
        if self.smoothing_span < 1:
            raise ValueError("smoothing_span must be >= 1")
        if self.output_format not in ("csv", "json"):
            raise ValueError(f"unknown output format {self.output_format!r}")
        for a in self.algorithms:
            if a not in _ALGO_TO_FINDER:
                raise ValueError(f"unknown algorithm {a!r}")


@dataclass
class BenchReport:
    kind: str
    rows: list[dict] = field(default_factory=list)
    proportion_optimal: list[dict] = field(default_factory=list)
    relative_difference: list[dict] = field(default_factory=list)
    skipped: list[dict] = field(default_factory=list)


def load_corpus(corpus_dir: Path, symmetrize: bool = False
                ) -> tuple[list[tuple[str, SparseSymMatrix]], list[dict]]:
    """Parse every .mtx file; returns (name, matrix) pairs sorted by
    ascending (n, nnz, name) and the skipped-file records."""
    entries = []
    skipped = []
    for path in sorted(Path(corpus_dir).glob("*.mtx")):
        try:
            m = read_matrix_market_file(path, symmetrize=symmetrize)
        except (MatrixFormatError, OSError, ValueError) as exc:
            log.warning("skipping %s: %s", path.name, exc)
            skipped.append({"file": path.name, "reason": str(exc)})
            continue
        entries.append((path.stem, m))
    entries.sort(key=lambda e: (e[1].n, e[1].nnz, e[0]))
    return entries, skipped


def _median_finder_time_ns(m: SparseSymMatrix, finder: str,
                           policy: StartPolicy, repeats: int) -> int:
    g = build_graph(m)
    comps = connected_components(g)
    times = []
    for _ in range(repeats):
        t0 = time.perf_counter_ns()
        find_starts(g, comps, finder, policy)
        times.append(time.perf_counter_ns() - t0)
    return int(statistics.median(times))


def _relative_difference_rows(names: list[str], metric: str,
                              values: dict[str, dict[str, float]],
                              algorithms: tuple[str, ...],
                              span: int) -> list[dict]:
    """Series of (A - B)/A with A = the MIND_RCM value, per algorithm.

    A zero baseline yields an explicit absent value (None); smoothing
    runs over the defined points only, indices preserved.
    """
    rows = []
    for algo in algorithms:
        if algo in ("MIND_RCM", "none"):
            continue
        raw: list[float | None] = []
        for name in names:
            a = values[name]["MIND_RCM"]
            b = values[name][algo]
            raw.append(None if a == 0 else metrics.relative_difference(a, b))
        defined = [metrics.SeriesPoint(i, r) for i, r in enumerate(raw) if r is not None]
        smooth_by_index = {}
        if defined:
            for pt in metrics.exponential_smoothing(defined, span):
                smooth_by_index[pt.index] = pt.value
        for i, name in enumerate(names):
            rows.append({"metric": metric, "matrix_index": i, "matrix": name,
                         "algorithm": algo, "raw": raw[i],
                         "smoothed": smooth_by_index.get(i)})
    return rows


def run_bench(config: BenchConfig) -> BenchReport:
    """Reordering sweep: metrics and timings per (matrix, algorithm)."""
    entries, skipped = load_corpus(config.corpus_dir, config.symmetrize)
    if not entries:
        raise RuntimeError(f"no parseable matrices in {config.corpus_dir}")
    report = BenchReport(kind="bench", skipped=skipped)
    after = {"bandwidth": {}, "profile": {}}
    names = [name for name, _ in entries]

    for name, m in entries:
        after["bandwidth"][name] = {}
        after["profile"][name] = {}
        for algo in config.algorithms:
            finder = _ALGO_TO_FINDER[algo]
            _, rep = rcm_pipeline(m, finder, config.start_policy)
            finder_ns = 0
            if finder != "none":
                finder_ns = _median_finder_time_ns(
                    m, finder, config.start_policy, config.finder_repeats)
            report.rows.append({
                "matrix": name, "n": m.n, "nnz": m.nnz, "algorithm": algo,
                "start_nodes": ";".join(str(s) for s in rep.start_nodes),
                "bandwidth_before": rep.bandwidth_before,
                "bandwidth_after": rep.bandwidth_after,
                "profile_before": rep.profile_before,
                "profile_after": rep.profile_after,
                "finder_time_ns": finder_ns,
                "ordering_time_ns": rep.ordering_time_ns,
            })
            after["bandwidth"][name][algo] = rep.bandwidth_after
            after["profile"][name][algo] = rep.profile_after

    for metric in ("bandwidth", "profile"):
        proportions = metrics.proportion_optimal(after[metric])
        for algo in config.algorithms:
            report.proportion_optimal.append(
                {"metric": metric, "algorithm": algo,
                 "proportion": proportions[algo]})
        if "MIND_RCM" in config.algorithms:
            report.relative_difference.extend(_relative_difference_rows(
                names, metric, after[metric], config.algorithms,
                config.smoothing_span))
    return report


def run_solve_bench(config: BenchConfig) -> BenchReport:
    """Cholesky sweep over the SPD subset of the corpus.

    A matrix is skipped (with a reason) when it has no values or its
    factorization hits a non-positive pivot; b = A·1 is the solved
    right-hand side; solve time is the median of the configured repeat
    count and total time is factorization plus one solve.
    """
    entries, skipped = load_corpus(config.corpus_dir, config.symmetrize)
    if not entries:
        raise RuntimeError(f"no parseable matrices in {config.corpus_dir}")
    report = BenchReport(kind="solve", skipped=skipped)
    totals: dict[str, dict[str, float]] = {}
    names: list[str] = []

    for name, m in entries:
        matrix_rows = []
        per_algo_total = {}
        try:
            for algo in config.algorithms:
                finder = _ALGO_TO_FINDER[algo]
                perm, rep = rcm_pipeline(m, finder, config.start_policy)
                pm = apply_permutation(m, perm)
                t0 = time.perf_counter_ns()
                factor = envelope_cholesky(pm)
                factor_ns = time.perf_counter_ns() - t0
                b = pm.matvec(np.ones(pm.n))
                solve_times = []
                for _ in range(config.finder_repeats):
                    t1 = time.perf_counter_ns()
                    x = solve(factor, b)
                    solve_times.append(time.perf_counter_ns() - t1)
                solve_ns = int(statistics.median(solve_times))
                residual = float(np.linalg.norm(pm.matvec(x) - b)
                                 / np.linalg.norm(b))
                total_ns = factor_ns + solve_ns
                per_algo_total[algo] = total_ns
                matrix_rows.append({
                    "matrix": name, "n": m.n, "nnz": m.nnz, "algorithm": algo,
                    "profile_after": rep.profile_after,
                    "factor_entries": factor.entry_count,
                    "factor_time_ns": factor_ns,
                    "solve_time_ns": solve_ns,
                    "total_time_ns": total_ns,
                    "residual": residual,
                })
        except (NotPositiveDefiniteError, ValueError) as exc:
            log.warning("skipping %s: %s", name, exc)
            report.skipped.append({"file": name, "reason": str(exc)})
            continue
        report.rows.extend(matrix_rows)
        totals[name] = per_algo_total
        names.append(name)

    if names and "MIND_RCM" in config.algorithms:
        report.relative_difference.extend(_relative_difference_rows(
            names, "total_time", totals, config.algorithms,
            config.smoothing_span))
    return report


def _format_cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, float):
        return repr(value)
    return str(value)


def _parse_cell(column: str, text: str):
    if column in _STRING_COLUMNS:
        return text
    if text == "":
        return None
    try:
        return int(text)
    except ValueError:
        pass
    try:
        return float(text)
    except ValueError:
        return text


def _sections(report: BenchReport) -> list[tuple[str, tuple[str, ...], list[dict]]]:
    row_columns = SOLVE_COLUMNS if report.kind == "solve" else BENCH_COLUMNS
    out = [("rows", row_columns, report.rows)]
    if report.kind != "solve":
        out.append(("proportion_optimal",
                    ("metric", "algorithm", "proportion"),
                    report.proportion_optimal))
    out.append(("relative_difference",
                ("metric", "matrix_index", "matrix", "algorithm", "raw", "smoothed"),
                report.relative_difference))
    out.append(("skipped", ("file", "reason"), report.skipped))
    return out


def write_report(report: BenchReport, path: Path, output_format: str) -> None:
    """Write CSV (LF endings, sectioned) or JSON with identical fields."""
    path = Path(path)
    if output_format == "json":
        doc = {"kind": report.kind}
        for name, _, rows in _sections(report):
            doc[name] = rows
        path.write_text(json.dumps(doc, indent=2) + "\n", encoding="utf-8")
        return
    import csv

    with open(path, "w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        fh.write(f"# rcmkit {report.kind} report\n")
        for name, columns, rows in _sections(report):
            fh.write(f"# {name}\n")
            writer.writerow(columns)
            for row in rows:
                writer.writerow([_format_cell(row[c]) for c in columns])


def read_report(path: Path) -> dict:
    """Parse a report written by write_report (either format) back into
    a dict of section-name -> list of row dicts."""
    import csv

    text = Path(path).read_text(encoding="utf-8")
    if text.lstrip().startswith("{"):
        return json.loads(text)
    doc: dict = {}
    section = None
    header: list[str] | None = None
    for record in csv.reader(text.splitlines(), lineterminator="\n"):
        if not record:
            continue
        if record[0].startswith("# "):
            tag = record[0][2:].strip()
            if tag.endswith("report"):
                doc["kind"] = tag.split()[1]
                continue
            section = tag
            doc[section] = []
            header = None
            continue
        if header is None:
            header = record
            continue
        doc[section].append({col: _parse_cell(col, cell)
                             for col, cell in zip(header, record)})
    return doc
