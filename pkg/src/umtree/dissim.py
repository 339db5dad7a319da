"""Pairwise dissimilarities: Euclidean distances and the set-valued
simple-matching dissimilarity on boolean attribute tables.

The set-valued rule scores each attribute position of a pair of rows:
0 when both rows have the attribute present (1), and 1 otherwise --
so co-absence counts toward the distance set.  The distance between two
objects is then the *set* of attributes scored 1.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass

import numpy as np

from .dendrogram import DistanceMatrix

__all__ = [
    "Table",
    "euclidean_matrix",
    "simple_matching_setvalued",
    "setvalued_table",
    "SetValuedDistanceTable",
    "load_csv",
]


@dataclass(frozen=True)
class Table:
    """Rectangular numeric table with optional row/column labels."""

    values: np.ndarray
    row_labels: tuple = None
    col_labels: tuple = None

    def __post_init__(self):
        v = np.asarray(self.values, dtype=float)
        if v.ndim != 2:
            raise ValueError("table must be 2-dimensional")
        if not np.isfinite(v).all():
            raise ValueError("table values must be finite")
        object.__setattr__(self, "values", v)
        if self.row_labels is not None and len(self.row_labels) != v.shape[0]:
            raise ValueError("row_labels length mismatch")
        if self.col_labels is not None and len(self.col_labels) != v.shape[1]:
            raise ValueError("col_labels length mismatch")

    @property
    def n(self) -> int:
        return self.values.shape[0]

    @property
    def m(self) -> int:
        return self.values.shape[1]

    def is_boolean(self) -> bool:
        return bool(np.isin(self.values, (0.0, 1.0)).all())


def load_csv(text_or_path, columns=None) -> Table:
    """Read a CSV table: first row headers, first column row labels if
    its header cell is empty or non-numeric data appears there.

    columns optionally selects a subset of column names.
    """
    if hasattr(text_or_path, "read"):
        text = text_or_path.read()
    else:
        try:
            with open(text_or_path, "r", newline="") as fh:
                text = fh.read()
        except (OSError, ValueError):
            text = str(text_or_path)
    rows = [r for r in csv.reader(io.StringIO(text)) if r]
    if len(rows) < 2:
        raise ValueError("CSV needs a header row and at least one data row")
    header = rows[0]
    body = rows[1:]

    def numeric(s):
        try:
            float(s)
            return True
        except ValueError:
            return False

    has_row_labels = header[0].strip() == "" or not all(
        numeric(r[0]) for r in body
    )
    col_labels = tuple(h.strip() for h in header[1:] if has_row_labels) or tuple(
        h.strip() for h in header
    )
    if has_row_labels:
        row_labels = tuple(r[0].strip() for r in body)
        data = [r[1:] for r in body]
    else:
        row_labels = None
        data = body
    values = np.array([[float(x) for x in r] for r in data])
    table = Table(values, row_labels, col_labels)
    if columns:
        idx = [col_labels.index(c) for c in columns]
        table = Table(values[:, idx], row_labels, tuple(columns))
    return table


def euclidean_matrix(data) -> DistanceMatrix:
    """Pairwise Euclidean distance matrix of the table rows."""
    x = data.values if isinstance(data, Table) else np.asarray(data, float)
    sq = np.sum(x**2, axis=1)
    d2 = sq[:, None] + sq[None, :] - 2.0 * (x @ x.T)
    np.maximum(d2, 0.0, out=d2)
    d = np.sqrt(d2)
    np.fill_diagonal(d, 0.0)
    return DistanceMatrix(np.minimum(d, d.T))


@dataclass(frozen=True)
class SetValuedDistanceTable:
    """Map from unordered object pairs to subsets of the attribute set J."""

    n: int
    n_attributes: int
    dist: dict
    object_labels: tuple = None
    attribute_labels: tuple = None

    def __getitem__(self, ij) -> frozenset:
        i, j = ij
        return self.dist[(min(i, j), max(i, j))]

    def pairs(self):
        return sorted(self.dist)


def _bool_values(data) -> np.ndarray:
    x = data.values if isinstance(data, Table) else np.asarray(data, float)
    if not np.isin(x, (0.0, 1.0)).all():
        raise ValueError("boolean table must contain only 0 and 1")
    return x.astype(int)


def simple_matching_setvalued(data, i: int, j: int) -> frozenset:
    """Attributes NOT present in both rows: {j in J : not(x_ij and x_jj)}."""
    x = _bool_values(data)
    both = (x[i] == 1) & (x[j] == 1)
    return frozenset(np.flatnonzero(~both).tolist())


def setvalued_table(data) -> SetValuedDistanceTable:
    """All pairwise set-valued distances (distinct pairs only)."""
    x = _bool_values(data)
    n, m = x.shape
    dist = {}
    for i in range(n):
        for j in range(i + 1, n):
            both = (x[i] == 1) & (x[j] == 1)
            dist[(i, j)] = frozenset(np.flatnonzero(~both).tolist())
    row_labels = data.row_labels if isinstance(data, Table) else None
    col_labels = data.col_labels if isinstance(data, Table) else None
    return SetValuedDistanceTable(n, m, dist, row_labels, col_labels)
