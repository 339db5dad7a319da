import numpy as np
import pytest

from umtree import Dendrogram


def random_dendrogram(rng, n, rank_levels=False):
    """Random binary tree over n terminals with strictly increasing levels."""
    roots = list(range(n))
    merges = []
    levels = np.cumsum(rng.uniform(0.1, 1.0, size=n - 1))
    for r in range(n - 1):
        i, j = rng.choice(len(roots), size=2, replace=False)
        a, b = roots[i], roots[j]
        merges.append((min(a, b), max(a, b), float(r + 1 if rank_levels else levels[r])))
        roots = [x for x in roots if x not in (a, b)] + [n + r]
    return Dendrogram(n, tuple(merges))


def random_points(rng, n, m, scale=1.0):
    return rng.normal(size=(n, m)) * scale


@pytest.fixture
def rng():
    return np.random.default_rng(20240817)
