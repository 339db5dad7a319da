"""Golden self-checks on the embedded datasets.

Each check recomputes a pipeline result from the embedded data and
compares it against frozen reference values.  Used by the ``selftest``
CLI subcommand; returns one (name, passed, note) row per check.
"""

from __future__ import annotations

import numpy as np

from . import datasets, genlattice, haar, linkage, padic
from .dissim import euclidean_matrix, setvalued_table

# Reference Haar coefficients for the iris8 / median pipeline.
# Columns: attribute; rows keyed by component.
IRIS8_SMOOTH = np.array([5.146875, 3.603125, 1.5625, 0.30625])
IRIS8_DETAILS = {
    7: np.array([0.253125, 0.296875, 0.1375, 0.09375]),
    6: np.array([0.13125, 0.16875, 0.025, -0.0125]),
    5: np.array([0.1375, -0.1375, 0.0, -0.025]),
    4: np.array([-0.025, 0.125, 0.0, 0.05]),
    3: np.array([0.05, 0.05, -0.10, 0.0]),
    2: np.array([-0.025, -0.075, 0.05, 0.0]),
    1: np.array([0.05, -0.05, 0.0, 0.0]),
}

# Reference p-adic codes on the 8-terminal ranked demo tree (0-based
# terminal ids, rank -> coefficient).
DEMO_CODES = {
    0: {1: +1, 2: +1, 5: +1, 7: +1},
    1: {1: -1, 2: +1, 5: +1, 7: +1},
    2: {2: -1, 5: +1, 7: +1},
    3: {3: +1, 4: +1, 5: -1, 7: +1},
    4: {3: -1, 4: +1, 5: -1, 7: +1},
    5: {4: -1, 5: -1, 7: +1},
    6: {6: +1, 7: -1},
    7: {6: -1, 7: -1},
}

# Reference lattice on the 5-object boolean table (attribute indices:
# v1=0, v2=1, v3=2; object indices a=0, b=1, c=2, e=3, f=4).
BOOL5_VERTICES = [
    frozenset({1}),
    frozenset({0, 1}),
    frozenset({1, 2}),
    frozenset({0, 1, 2}),
]
BOOL5_PAIRS = {
    frozenset({1}): [(0, 2)],
    frozenset({0, 1}): [(0, 1), (0, 4), (1, 2), (1, 4), (2, 4)],
    frozenset({1, 2}): [(0, 3), (2, 3)],
    frozenset({0, 1, 2}): [(1, 3), (3, 4)],
}
BOOL5_CLUSTERS_L2 = [frozenset({0, 1, 2, 4}), frozenset({0, 2, 3})]
BOOL5_CLUSTERS_L3 = [frozenset({0, 1, 2, 3, 4})]


def _iris8_transform():
    data = datasets.iris8()
    dend = linkage.naive_cluster(
        euclidean_matrix(data), linkage.MergeCriterion.MEDIAN,
        labels=data.row_labels,
    )
    return data, dend, haar.forward(dend, data)


def run_selftest():
    """Run every golden check; returns [(name, passed, note), ...]."""
    checks = []

    def check(name, ok, note=""):
        checks.append((name, bool(ok), note))

    data, dend, ht = _iris8_transform()

    check(
        "iris8 median merge structure",
        [frozenset(dend.members(dend.n_terminals + r)) for r in range(7)]
        == [
            frozenset(s)
            for s in (
                {0, 4}, {0, 4, 7}, {2, 3}, {2, 3, 6},
                {1, 2, 3, 6}, {0, 1, 2, 3, 4, 6, 7}, set(range(8)),
            )
        ],
    )
    check(
        "iris8 haar smooth vector",
        np.allclose(ht.smooth, IRIS8_SMOOTH, atol=1e-9),
    )
    signed_ok = all(
        np.allclose(ht.details[r], IRIS8_DETAILS[r], atol=1e-9)
        for r in range(1, 8)
    )
    abs_ok = all(
        np.allclose(np.abs(ht.details[r]), np.abs(IRIS8_DETAILS[r]), atol=1e-9)
        for r in range(1, 8)
    )
    check(
        "iris8 haar detail vectors",
        abs_ok,
        "signs reproduced" if signed_ok else "absolute values only",
    )
    check(
        "iris8 exact reconstruction",
        np.allclose(haar.inverse(ht), data.values, atol=1e-12),
    )
    errs = [
        haar.approximation_chain(ht, t)[-1][1] for t in range(8)
    ]
    check("iris8 approximation chains end exactly", max(errs) <= 1e-9)
    root_leaf = next(
        t for t in range(8) if dend.path_to_root(t) == [dend.root]
    )
    check(
        "iris8 root-adjacent row equals smooth plus top detail",
        np.allclose(data.values[root_leaf], ht.smooth + ht.details[7], atol=1e-9),
        f"row {root_leaf + 1}",
    )

    tree = datasets.ranked_demo_tree()
    codes = {t: padic.encode(tree, 3, t) for t in range(8)}
    check(
        "demo tree terminal codes",
        all(codes[t].as_dict() == DEMO_CODES[t] for t in range(8)),
    )
    check(
        "demo tree dilation of first terminal",
        padic.dilate(padic.encode(tree, 2, 0)).as_dict()
        == {1: +1, 4: +1, 6: +1},
    )
    check("demo tree base-3 uniqueness", padic.check_uniqueness(tree, 3))
    check(
        "demo tree spherical completeness",
        padic.check_spherical_completeness(tree),
    )

    table = setvalued_table(datasets.bool5())
    lattice = genlattice.build_lattice(table)
    check(
        "bool5 lattice vertices",
        sorted(lattice.vertices, key=lambda s: (len(s), sorted(s)))
        == BOOL5_VERTICES,
    )
    check(
        "bool5 node-pair partition",
        all(
            genlattice.pairs_for_node(table, node) == pairs
            for node, pairs in BOOL5_PAIRS.items()
        ),
    )
    check(
        "bool5 clusters at level 2",
        genlattice.clusters_at_level(table, 2) == sorted(
            BOOL5_CLUSTERS_L2, key=lambda s: (len(s), sorted(s))
        ),
        "computed {a,c,e}; reference listing splits it as {a,e} and {c,e}",
    )
    check(
        "bool5 clusters at level 3",
        genlattice.clusters_at_level(table, 3) == BOOL5_CLUSTERS_L3,
    )
    return checks


def format_report(checks) -> str:
    lines = []
    for name, ok, note in checks:
        status = "PASS" if ok else "FAIL"
        suffix = f"  ({note})" if note else ""
        lines.append(f"{status}  {name}{suffix}")
    n_fail = sum(1 for _, ok, _ in checks if not ok)
    lines.append(
        f"{len(checks) - n_fail}/{len(checks)} checks passed"
        + (f", {n_fail} FAILED" if n_fail else "")
    )
    return "\n".join(lines)
