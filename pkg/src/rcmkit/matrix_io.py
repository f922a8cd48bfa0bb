"""Matrix Market I/O and the canonical sparse symmetric matrix type.

Matrices are stored in compressed sparse row form with a structurally
symmetric pattern: entry (i, j) is stored iff (j, i) is stored.  Stored
entries are structural nonzeros regardless of numeric value; explicit
zeros are kept.  Values are optional (absent for pattern matrices).
"""

from __future__ import annotations

import io
from dataclasses import dataclass
from typing import Iterable, TextIO

import numpy as np


class MatrixFormatError(ValueError):
    """Raised for malformed or unsupported Matrix Market input."""


@dataclass
class SparseSymMatrix:
    """Square matrix with a symmetric sparsity pattern, CSR storage.

    row_start has length n+1; col_index holds the column of every stored
    entry, strictly ascending within each row.  values, when present,
    runs parallel to col_index.
    """

    n: int
    row_start: np.ndarray
    col_index: np.ndarray
    values: np.ndarray | None = None

    @property
    def nnz(self) -> int:
        return len(self.col_index)

    def row(self, i: int) -> np.ndarray:
        """Column indices stored in row i (ascending)."""
        return self.col_index[self.row_start[i]:self.row_start[i + 1]]

    def row_values(self, i: int) -> np.ndarray:
        if self.values is None:
            raise ValueError("matrix has no values")
        return self.values[self.row_start[i]:self.row_start[i + 1]]

    def coordinates(self) -> tuple[np.ndarray, np.ndarray]:
        """All stored entries as parallel (row, col) arrays."""
        rows = np.repeat(np.arange(self.n, dtype=np.int64),
                         np.diff(self.row_start))
        return rows, self.col_index

    def matvec(self, x: np.ndarray) -> np.ndarray:
        """Product A @ x using the stored values."""
        if self.values is None:
            raise ValueError("matrix has no values")
        x = np.asarray(x, dtype=np.float64)
        if x.shape != (self.n,):
            raise ValueError(f"vector length {x.shape} does not match n={self.n}")
        rows, cols = self.coordinates()
        return np.bincount(rows, weights=self.values * x[cols],
                           minlength=self.n)

    def diagonal(self) -> np.ndarray:
        """Dense diagonal (zeros where no diagonal entry is stored)."""
        d = np.zeros(self.n)
        for i in range(self.n):
            cols = self.row(i)
            k = np.searchsorted(cols, i)
            if k < len(cols) and cols[k] == i:
                d[i] = 1.0 if self.values is None else self.values[self.row_start[i] + k]
        return d

    def validate(self) -> None:
        """Check all structural invariants; raises ValueError on violation."""
        rs, ci = self.row_start, self.col_index
        if len(rs) != self.n + 1 or rs[0] != 0 or rs[-1] != len(ci):
            raise ValueError("row_start is inconsistent with col_index")
        if np.any(np.diff(rs) < 0):
            raise ValueError("row_start is not nondecreasing")
        if len(ci) and (ci.min() < 0 or ci.max() >= self.n):
            raise ValueError("column index out of range")
        for i in range(self.n):
            r = self.row(i)
            if len(r) > 1 and np.any(np.diff(r) <= 0):
                raise ValueError(f"row {i} columns not strictly ascending")
        rows, cols = self.coordinates()
        fwd = set(zip(rows.tolist(), cols.tolist()))
        for i, j in fwd:
            if (j, i) not in fwd:
                raise ValueError(f"pattern not symmetric: ({i},{j}) stored without ({j},{i})")
        if self.values is not None and len(self.values) != len(ci):
            raise ValueError("values length does not match entry count")


def from_coordinates(n: int,
                     rows: Iterable[int],
                     cols: Iterable[int],
                     values: Iterable[float] | None = None) -> SparseSymMatrix:
    """Assemble a matrix from coordinate triples.

    Entries are sorted into CSR order; duplicate coordinates are merged
    with their values summed.  The caller is responsible for providing a
    symmetric pattern.
    """
    rows = np.asarray(list(rows), dtype=np.int64)
    cols = np.asarray(list(cols), dtype=np.int64)
    vals = None if values is None else np.asarray(list(values), dtype=np.float64)
    if len(rows) != len(cols) or (vals is not None and len(vals) != len(rows)):
        raise ValueError("coordinate arrays have mismatched lengths")
    if len(rows) and (rows.min() < 0 or rows.max() >= n or cols.min() < 0 or cols.max() >= n):
        raise ValueError("coordinate index out of range")

    order = np.lexsort((cols, rows))
    rows, cols = rows[order], cols[order]
    if vals is not None:
        vals = vals[order]
    if len(rows):
        keep = np.ones(len(rows), dtype=bool)
        keep[1:] = (rows[1:] != rows[:-1]) | (cols[1:] != cols[:-1])
        if vals is not None:
            group = np.cumsum(keep) - 1
            vals = np.bincount(group, weights=vals)
        rows, cols = rows[keep], cols[keep]

    row_start = np.zeros(n + 1, dtype=np.int64)
    np.add.at(row_start, rows + 1, 1)
    row_start = np.cumsum(row_start)
    return SparseSymMatrix(n=n, row_start=row_start, col_index=cols, values=vals)


_FIELDS = ("real", "integer", "pattern")
_SYMMETRIES = ("symmetric", "general")


def parse_matrix_market(source: TextIO | str, symmetrize: bool = False) -> SparseSymMatrix:
    """Parse a Matrix Market coordinate file into a SparseSymMatrix.

    Accepts real, integer, and pattern fields with `symmetric` or
    `general` symmetry.  Symmetric-storage files are expanded to the
    full pattern.  `general` files must be structurally symmetric unless
    ``symmetrize`` is set, in which case the pattern becomes that of
    A plus its transpose (values mirror-filled from the stored side).
    Indices are converted from 1-based to 0-based; duplicate entries are
    merged with values summed.
    """
    if isinstance(source, str):
        source = io.StringIO(source)
    lines = iter(source)

    try:
        header = next(lines)
    except StopIteration:
        raise MatrixFormatError("empty input: missing Matrix Market header")
    tokens = header.strip().lower().split()
    if len(tokens) != 5 or tokens[0] != "%%matrixmarket" or tokens[1] != "matrix":
        raise MatrixFormatError(f"malformed Matrix Market header: {header.strip()!r}")
    _, _, layout, fld, sym = tokens
    if layout != "coordinate":
        raise MatrixFormatError(f"unsupported layout {layout!r} (only coordinate)")
    if fld == "complex":
        raise MatrixFormatError("complex field is not supported")
    if fld not in _FIELDS:
        raise MatrixFormatError(f"unsupported field {fld!r}")
    if sym not in _SYMMETRIES:
        raise MatrixFormatError(f"unsupported symmetry {sym!r}")
    pattern = fld == "pattern"

    size_line = None
    for line in lines:
        stripped = line.strip()
        if not stripped or stripped.startswith("%"):
            continue
        size_line = stripped
        break
    if size_line is None:
        raise MatrixFormatError("missing size line")
    parts = size_line.split()
    if len(parts) != 3:
        raise MatrixFormatError(f"malformed size line: {size_line!r}")
    try:
        nrows, ncols, count = (int(p) for p in parts)
    except ValueError:
        raise MatrixFormatError(f"malformed size line: {size_line!r}")
    if nrows != ncols:
        raise MatrixFormatError(f"non-square matrix: {nrows} rows, {ncols} columns")
    n = nrows

    # entry accumulator keyed by (i, j); duplicates merge by summation
    entries: dict[tuple[int, int], float] = {}
    seen = 0
    for line in lines:
        stripped = line.strip()
        if not stripped or stripped.startswith("%"):
            continue
        parts = stripped.split()
        if pattern:
            if len(parts) < 2:
                raise MatrixFormatError(f"malformed entry line: {stripped!r}")
            v = 1.0
        else:
            if len(parts) < 3:
                raise MatrixFormatError(f"malformed entry line: {stripped!r}")
            try:
                v = float(parts[2])
            except ValueError:
                raise MatrixFormatError(f"malformed value in line: {stripped!r}")
        try:
            i, j = int(parts[0]) - 1, int(parts[1]) - 1
        except ValueError:
            raise MatrixFormatError(f"malformed indices in line: {stripped!r}")
        if not (0 <= i < n and 0 <= j < n):
            raise MatrixFormatError(
                f"index ({i + 1},{j + 1}) out of range for {n}x{n} matrix")
        if sym == "symmetric" and i < j:
            # symmetric storage names unordered pairs; normalize to lower
            i, j = j, i
        key = (i, j)
        entries[key] = entries.get(key, 0.0) + v
        seen += 1
    if seen != count:
        raise MatrixFormatError(f"size line declared {count} entries, found {seen}")

    if sym == "symmetric":
        full = dict(entries)
        for (i, j), v in entries.items():
            if i != j:
                full[(j, i)] = v
        entries = full
    else:
        missing = [(i, j) for (i, j) in entries if (j, i) not in entries]
        if missing:
            if not symmetrize:
                i, j = missing[0]
                raise MatrixFormatError(
                    f"general matrix is not structurally symmetric "
                    f"(entry ({i + 1},{j + 1}) has no transpose); "
                    f"pass symmetrize to take the pattern of A plus its transpose")
            for i, j in missing:
                entries[(j, i)] = entries[(i, j)]

    keys = sorted(entries)
    rows = [k[0] for k in keys]
    cols = [k[1] for k in keys]
    vals = None if pattern else [entries[k] for k in keys]
    return from_coordinates(n, rows, cols, vals)


def write_matrix_market(m: SparseSymMatrix, sink: TextIO) -> None:
    """Write coordinate format, symmetric storage (lower triangle plus
    diagonal), 1-based.  Field is real if values are present, else
    pattern.  parse(write(m)) reproduces m exactly.
    """
    fld = "pattern" if m.values is None else "real"
    body: list[str] = []
    for i in range(m.n):
        cols = m.row(i)
        vals = None if m.values is None else m.row_values(i)
        for k, j in enumerate(cols):
            if j > i:
                break
            if fld == "pattern":
                body.append(f"{i + 1} {j + 1}\n")
            else:
                body.append(f"{i + 1} {j + 1} {float(vals[k])!r}\n")
    sink.write(f"%%MatrixMarket matrix coordinate {fld} symmetric\n")
    sink.write(f"{m.n} {m.n} {len(body)}\n")
    sink.writelines(body)


def read_matrix_market_file(path, symmetrize: bool = False) -> SparseSymMatrix:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_matrix_market(fh, symmetrize=symmetrize)


def write_matrix_market_file(m: SparseSymMatrix, path) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        write_matrix_market(m, fh)
