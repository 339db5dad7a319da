"""Hierarchical agglomerative clustering.

Two drivers produce identical dendrograms for reducible criteria:

* naive_cluster -- O(n^3): repeatedly merge the globally closest pair.
* nn_chain_cluster -- O(n^2): follow nearest-neighbor chains and merge
  reciprocal nearest neighbors; valid only for reducible criteria
  (single, complete, average, ward).

Cluster-update arithmetic is the Lance-Williams recurrence.  Ward and
median operate on squared input distances and report merge levels as
the square root of the merge cost, so levels stay commensurate with the
input distances.  Median is not reducible and is rejected by the chain
driver; it can also invert levels, which is repaired by propagating the
running maximum (raw levels are kept on the dendrogram).

Determinism: among equally close pairs the lexicographically smallest
(min id, max id) merges first, and each merge lists the smaller cluster
id as the left child.
"""

from __future__ import annotations

import warnings
from enum import Enum

import numpy as np

from .dendrogram import Dendrogram, DistanceMatrix

__all__ = [
    "MergeCriterion",
    "lance_williams_update",
    "naive_cluster",
    "nn_chain_cluster",
]


class MergeCriterion(Enum):
    SINGLE = "single"
    COMPLETE = "complete"
    AVERAGE = "average"
    WARD = "ward"
    MEDIAN = "median"

    @property
    def reducible(self) -> bool:
        return self is not MergeCriterion.MEDIAN

    @property
    def squared(self) -> bool:
        """Whether the recurrence runs on squared input distances."""
        return self in (MergeCriterion.WARD, MergeCriterion.MEDIAN)


def _coerce(crit) -> MergeCriterion:
    if isinstance(crit, MergeCriterion):
        return crit
    return MergeCriterion(str(crit).lower())


def lance_williams_update(d_ki, d_kj, d_ij, sizes, crit) -> float:
    """Dissimilarity from cluster k to the merge of i and j.

    sizes = (n_i, n_j, n_k).  For ward and median the three inputs are
    squared distances and the result is a squared distance.
    """
    crit = _coerce(crit)
    n_i, n_j, n_k = sizes if sizes is not None else (1, 1, 1)
    if crit is MergeCriterion.SINGLE:
        return min(d_ki, d_kj)
    if crit is MergeCriterion.COMPLETE:
        return max(d_ki, d_kj)
    if crit is MergeCriterion.AVERAGE:
        return (n_i * d_ki + n_j * d_kj) / (n_i + n_j)
    if crit is MergeCriterion.WARD:
        tot = n_i + n_j + n_k
        return ((n_i + n_k) * d_ki + (n_j + n_k) * d_kj - n_k * d_ij) / tot
    # median (Gower): midpoint of the two centroids
    out = 0.5 * d_ki + 0.5 * d_kj - 0.25 * d_ij
    if out < 0:
        warnings.warn("median update went negative (non-Euclidean input); clamped")
        out = 0.0
    return float(out)


def _lw_row(d_i, d_j, d_ij, sizes_all, n_i, n_j, crit):
    """Vectorized Lance-Williams update against all other clusters."""
    if crit is MergeCriterion.SINGLE:
        return np.minimum(d_i, d_j)
    if crit is MergeCriterion.COMPLETE:
        return np.maximum(d_i, d_j)
    if crit is MergeCriterion.AVERAGE:
        return (n_i * d_i + n_j * d_j) / (n_i + n_j)
    if crit is MergeCriterion.WARD:
        tot = n_i + n_j + sizes_all
        return ((n_i + sizes_all) * d_i + (n_j + sizes_all) * d_j - sizes_all * d_ij) / tot
    row = 0.5 * d_i + 0.5 * d_j - 0.25 * d_ij
    if (row < 0).any():
        warnings.warn("median update went negative (non-Euclidean input); clamped")
        np.maximum(row, 0.0, out=row)
    return row


def _prepare(m, crit):
    d = m.values if isinstance(m, DistanceMatrix) else DistanceMatrix(np.asarray(m, float)).values
    n = d.shape[0]
    if n < 2:
        raise ValueError("need at least 2 observations")
    d = d.copy()
    if crit.squared:
        d = d**2
    return d, n


def _finish(n, raw_merges, crit, labels=None, reorder=False):
    """Renumber cluster ids and repair level inversions.

    reorder sorts merges by cost first: needed for NN-chain output (it
    merges out of cost order) and safe there because reducibility keeps
    every child's cost at or below its parent's.  The naive driver
    already merges in cost order for reducible criteria, and for median
    the creation order is the dendrogram order (costs may invert).
    """
    if reorder:
        order = sorted(range(len(raw_merges)), key=lambda k: (raw_merges[k][2], k))
    else:
        order = list(range(len(raw_merges)))
    newid = {t: t for t in range(n)}
    for pos, k in enumerate(order):
        newid[n + k] = n + pos
    merges = []
    raw_levels = []
    prev = 0.0
    for k in order:
        a, b, cost = raw_merges[k]
        a, b = sorted((newid[a], newid[b]))
        level = float(np.sqrt(cost)) if crit.squared else float(cost)
        raw_levels.append(level)
        prev = max(prev, level)
        merges.append((a, b, prev))
    repaired = any(abs(r - m[2]) > 0 for r, m in zip(raw_levels, merges))
    return Dendrogram(
        n,
        tuple(merges),
        raw_levels=tuple(raw_levels) if repaired else None,
        labels=tuple(labels) if labels else None,
    )


def naive_cluster(m, crit, labels=None) -> Dendrogram:
    """O(n^3) oracle: merge the globally closest pair, n-1 times."""
    crit = _coerce(crit)
    d, n = _prepare(m, crit)
    big = np.full((2 * n - 1, 2 * n - 1), np.inf)
    big[:n, :n] = d
    np.fill_diagonal(big, np.inf)
    active = np.zeros(2 * n - 1, dtype=bool)
    active[:n] = True
    sizes = np.ones(2 * n - 1, dtype=int)
    raw = []
    for step in range(n - 1):
        ids = np.flatnonzero(active)
        sub = big[np.ix_(ids, ids)]
        iu = np.triu_indices(len(ids), k=1)
        vals = sub[iu]
        best = vals.min()
        # lexicographically smallest (min id, max id) among ties
        hits = np.flatnonzero(vals == best)
        i_loc, j_loc = iu[0][hits[0]], iu[1][hits[0]]
        a, b = int(ids[i_loc]), int(ids[j_loc])
        new = n + step
        others = ids[(ids != a) & (ids != b)]
        if len(others):
            row = _lw_row(
                big[a, others], big[b, others], best, sizes[others],
                sizes[a], sizes[b], crit,
            )
            big[new, others] = row
            big[others, new] = row
        active[a] = active[b] = False
        active[new] = True
        sizes[new] = sizes[a] + sizes[b]
        raw.append((a, b, float(best)))
    return _finish(n, raw, crit, labels, reorder=False)


def nn_chain_cluster(m, crit, labels=None) -> Dendrogram:
    """O(n^2) reciprocal-nearest-neighbor chain clustering."""
    crit = _coerce(crit)
    if not crit.reducible:
        raise ValueError(
            f"criterion {crit.value!r} is not reducible; use naive_cluster"
        )
    d, n = _prepare(m, crit)
    big = np.full((2 * n - 1, 2 * n - 1), np.inf)
    big[:n, :n] = d
    np.fill_diagonal(big, np.inf)
    active = np.zeros(2 * n - 1, dtype=bool)
    active[:n] = True
    sizes = np.ones(2 * n - 1, dtype=int)
    raw = []
    chain = []
    next_id = n
    while len(raw) < n - 1:
        if not chain:
            chain.append(int(np.flatnonzero(active)[0]))
        x = chain[-1]
        row = np.where(active, big[x], np.inf)
        row[x] = np.inf
        y = int(np.argmin(row))  # first occurrence = smallest id on ties
        if len(chain) >= 2 and y == chain[-2]:
            chain.pop()
            chain.pop()
            a, b = min(x, y), max(x, y)
            cost = float(big[a, b])
            others = np.flatnonzero(active)
            others = others[(others != a) & (others != b)]
            if len(others):
                upd = _lw_row(
                    big[a, others], big[b, others], cost, sizes[others],
                    sizes[a], sizes[b], crit,
                )
                big[next_id, others] = upd
                big[others, next_id] = upd
            active[a] = active[b] = False
            active[next_id] = True
            sizes[next_id] = sizes[a] + sizes[b]
            raw.append((a, b, cost))
            next_id += 1
        else:
            chain.append(y)
    return _finish(n, raw, crit, labels, reorder=True)
