"""Envelope (skyline) Cholesky factorization and triangular solves.

The factor of an SPD matrix fills only inside the envelope: row i of L
holds exactly the columns from first_col[i] (the first structurally
reachable column of row i, clamped to the diagonal) through i.  The
stored entry count is therefore profile(A) + n, which ties the solve
cost directly to the profile metric a reordering minimizes.

No pivoting is performed; pivots <= 1e-13 times the largest diagonal of
A are rejected as not positive definite.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .matrix_io import SparseSymMatrix

PIVOT_RTOL = 1e-13


class NotPositiveDefiniteError(ValueError):
    """Factorization hit a non-positive pivot; ``row`` names the culprit."""

    def __init__(self, row: int, pivot: float):
        super().__init__(f"non-positive pivot {pivot:.6g} at row {row}")
        self.row = row
        self.pivot = pivot


@dataclass
class EnvelopeFactor:
    """Lower-triangular factor stored row-packed inside the envelope.

    Row i occupies data[row_offset[i]:row_offset[i+1]], covering columns
    first_col[i] .. i; the diagonal entry sits at the end of the row.
    """

    n: int
    first_col: np.ndarray
    row_offset: np.ndarray
    data: np.ndarray

    def __post_init__(self):
        self._scalar_form = None

    def scalar_form(self) -> tuple[list[int], list[int], list[float]]:
        """(first_col, row_offset, data) as plain lists, cached; the
        substitution loops run on these."""
        if self._scalar_form is None:
            self._scalar_form = (self.first_col.tolist(),
                                 self.row_offset.tolist(),
                                 self.data.tolist())
        return self._scalar_form

    @property
    def entry_count(self) -> int:
        return len(self.data)

    @property
    def packed_rows(self) -> list[np.ndarray]:
        """Per-row dense segments (views into the flat storage)."""
        return [self.data[self.row_offset[i]:self.row_offset[i + 1]]
                for i in range(self.n)]

    def diagonal(self) -> np.ndarray:
        return self.data[self.row_offset[1:] - 1]


def envelope_cholesky(m: SparseSymMatrix) -> EnvelopeFactor:
    """Factor A = L·Lᵀ within the envelope of A.

    Requires stored values and a symmetric positive definite matrix.
    Raises NotPositiveDefiniteError identifying the failing row when a
    pivot falls at or below the tolerance.
    """
    if m.values is None:
        raise ValueError("matrix has no values; cannot factorize a pattern")
    n = m.n
    first = np.empty(n, dtype=np.int64)
    for i in range(n):
        cols = m.row(i)
        first[i] = min(int(cols[0]), i) if len(cols) else i

    lengths = np.arange(n, dtype=np.int64) - first + 1
    offset = np.zeros(n + 1, dtype=np.int64)
    np.cumsum(lengths, out=offset[1:])
    data = np.zeros(offset[n], dtype=np.float64)

    # scatter the lower triangle of A into the packed envelope
    max_diag = 0.0
    for i in range(n):
        cols = m.row(i)
        vals = m.row_values(i)
        base = offset[i] - first[i]
        for k in range(len(cols)):
            j = int(cols[k])
            if j > i:
                break
            data[base + j] = vals[k]
            if j == i:
                max_diag = max(max_diag, vals[k])
    tol = PIVOT_RTOL * max_diag

    for i in range(n):
        fi = first[i]
        row_i = data[offset[i]:offset[i + 1]]
        for j in range(fi, i):
            fj = first[j]
            s = max(fi, fj)
            acc = row_i[j - fi]
            if s < j:
                acc -= np.dot(data[offset[i] + s - fi:offset[i] + j - fi],
                              data[offset[j] + s - fj:offset[j] + j - fj])
            row_i[j - fi] = acc / data[offset[j + 1] - 1]
        head = row_i[:i - fi]
        pivot = row_i[i - fi] - np.dot(head, head)
        if pivot <= tol:
            raise NotPositiveDefiniteError(row=i, pivot=float(pivot))
        row_i[i - fi] = math.sqrt(pivot)

    return EnvelopeFactor(n=n, first_col=first, row_offset=offset, data=data)


def solve(f: EnvelopeFactor, b: np.ndarray) -> np.ndarray:
    """Solve L·Lᵀ·x = b by forward then backward substitution.

    The substitution runs as scalar loops over the packed rows, so its
    cost is proportional to the stored entry count (profile + n): a
    reordering that shrinks the envelope shrinks the solve time.
    """
    b = np.asarray(b, dtype=np.float64)
    if b.shape != (f.n,):
        raise ValueError(f"right-hand side has shape {b.shape}, expected ({f.n},)")
    first, offset, data = f.scalar_form()

    y = b.tolist()
    for i in range(f.n):
        acc = y[i]
        k = offset[i]
        for j in range(first[i], i):
            acc -= data[k] * y[j]
            k += 1
        y[i] = acc / data[k]

    for i in range(f.n - 1, -1, -1):
        k = offset[i + 1] - 1
        xi = y[i] / data[k]
        y[i] = xi
        k = offset[i]
        for j in range(first[i], i):
            y[j] -= data[k] * xi
            k += 1
    return np.asarray(y)
