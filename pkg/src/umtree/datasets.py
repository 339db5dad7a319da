"""Small embedded datasets used by the self-test and the demos."""

from __future__ import annotations

import numpy as np

from .dendrogram import Dendrogram
from .dissim import Table

__all__ = ["iris8", "bool5", "ranked_demo_tree"]


def iris8() -> Table:
    """First 8 observations of Fisher's iris data (4 attributes)."""
    return Table(
        np.array(
            [
                [5.1, 3.5, 1.4, 0.2],
                [4.9, 3.0, 1.4, 0.2],
                [4.7, 3.2, 1.3, 0.2],
                [4.6, 3.1, 1.5, 0.2],
                [5.0, 3.6, 1.4, 0.2],
                [5.4, 3.9, 1.7, 0.4],
                [4.6, 3.4, 1.4, 0.3],
                [5.0, 3.4, 1.5, 0.2],
            ]
        ),
        row_labels=tuple(f"x{i}" for i in range(1, 9)),
        col_labels=("Sepal.L", "Sepal.W", "Petal.L", "Petal.W"),
    )


def bool5() -> Table:
    """5 objects a, b, c, e, f with 3 boolean attributes v1..v3."""
    return Table(
        np.array(
            [
                [1, 0, 1],
                [0, 1, 1],
                [1, 0, 1],
                [1, 0, 0],
                [0, 0, 1],
            ]
        ),
        row_labels=("a", "b", "c", "e", "f"),
        col_labels=("v1", "v2", "v3"),
    )


def ranked_demo_tree() -> Dendrogram:
    """Ranked dendrogram on 8 terminals x1..x8, levels = ranks 1..7.

    Clusters by rank: {x1,x2}, {x1,x2,x3}, {x4,x5}, {x4,x5,x6},
    {x1..x6}, {x7,x8}, {x1..x8}; first-listed children sit left (+1).
    Terminal ids are 0-based (x1 -> 0).
    """
    merges = (
        (0, 1, 1.0),   # rank 1: {x1,x2}            -> node 8
        (8, 2, 2.0),   # rank 2: {x1,x2,x3}         -> node 9
        (3, 4, 3.0),   # rank 3: {x4,x5}            -> node 10
        (10, 5, 4.0),  # rank 4: {x4,x5,x6}         -> node 11
        (9, 11, 5.0),  # rank 5: {x1..x6}           -> node 12
        (6, 7, 6.0),   # rank 6: {x7,x8}            -> node 13
        (12, 13, 7.0),  # rank 7: root              -> node 14
    )
    return Dendrogram(
        8, merges, labels=tuple(f"x{i}" for i in range(1, 9))
    )
