"""Bandwidth, profile, relative difference, exponential smoothing, and
the proportion-of-optimal corpus statistic.

bandwidth(A) = max |i - j| over stored entries.
profile(A)   = sum over rows i of (i - first stored column of row i),
               counting only rows whose first stored column is <= i.

``bandwidth_under`` / ``profile_under`` evaluate the same metrics for a
symmetrically permuted matrix directly from the permutation, without
materializing the permuted matrix; they exist as an independent code
path for cross-checking reorder reports.
"""

from __future__ import annotations

from typing import Mapping, NamedTuple, Sequence

import numpy as np

from .matrix_io import SparseSymMatrix


class SeriesPoint(NamedTuple):
    index: int
    value: float


def bandwidth(m: SparseSymMatrix) -> int:
    if m.nnz == 0:
        return 0
    rows, cols = m.coordinates()
    return int(np.max(np.abs(rows - cols)))


def profile(m: SparseSymMatrix) -> int:
    """Rows whose first stored entry lies above the diagonal contribute 0."""
    total = 0
    for i in range(m.n):
        s = m.row_start[i]
        if s == m.row_start[i + 1]:
            continue
        first = int(m.col_index[s])
        if first <= i:
            total += i - first
    return total


def bandwidth_under(m: SparseSymMatrix, new_of_old: np.ndarray) -> int:
    """Bandwidth of P·A·Pᵀ computed from the permutation alone."""
    if m.nnz == 0:
        return 0
    rows, cols = m.coordinates()
    p = np.asarray(new_of_old, dtype=np.int64)
    return int(np.max(np.abs(p[rows] - p[cols])))


def profile_under(m: SparseSymMatrix, new_of_old: np.ndarray) -> int:
    """Profile of P·A·Pᵀ computed from the permutation alone."""
    rows, cols = m.coordinates()
    p = np.asarray(new_of_old, dtype=np.int64)
    new_rows = p[rows]
    new_cols = p[cols]
    first = np.full(m.n, m.n, dtype=np.int64)
    np.minimum.at(first, new_rows, new_cols)
    idx = np.arange(m.n, dtype=np.int64)
    contrib = idx - first
    return int(contrib[(first < m.n) & (contrib > 0)].sum())


def relative_difference(a: float, b: float) -> float:
    """(a - b) / a; positive when b improves on the baseline a."""
    if a == 0:
        raise ValueError("relative difference is undefined for a zero baseline")
    return (a - b) / a


def exponential_smoothing(series: Sequence[SeriesPoint], span: int) -> list[SeriesPoint]:
    """Recursive smoothing with factor alpha = 2 / (span + 1).

    s_0 = x_0 and s_t = alpha * x_t + (1 - alpha) * s_{t-1}; point
    indices are preserved.
    """
    if span < 1:
        raise ValueError("span must be >= 1")
    if not series:
        raise ValueError("empty series")
    alpha = 2.0 / (span + 1)
    out = [SeriesPoint(series[0].index, float(series[0].value))]
    s = float(series[0].value)
    for pt in series[1:]:
        s = alpha * float(pt.value) + (1.0 - alpha) * s
        out.append(SeriesPoint(pt.index, s))
    return out


def proportion_optimal(results: Mapping[str, Mapping[str, float]]) -> dict[str, float]:
    """Proportion of matrices on which each algorithm achieves the
    minimum metric value; ties credit every tied algorithm.

    ``results`` maps matrix name -> (algorithm -> value); every matrix
    must cover the same algorithm set.
    """
    if not results:
        raise ValueError("no results")
    algos: tuple[str, ...] | None = None
    wins = {}
    for name, per_algo in results.items():
        keys = tuple(sorted(per_algo))
        if algos is None:
            algos = keys
            wins = {a: 0 for a in algos}
        elif keys != algos:
            raise ValueError(f"matrix {name!r} has algorithm set {keys}, expected {algos}")
        best = min(per_algo.values())
        for a, v in per_algo.items():
            if v == best:
                wins[a] += 1
    count = len(results)
    return {a: wins[a] / count for a in wins}
