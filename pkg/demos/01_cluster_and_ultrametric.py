"""From a data table to a dendrogram and its ultrametric.

Clusters the 8-row iris sample, prints the merge history, and shows that
the cophenetic distances form an ultrametric while the raw Euclidean
distances only form a metric.
"""

import numpy as np

from umtree import (
    cophenetic_matrix,
    euclidean_matrix,
    naive_cluster,
    verify_metric,
    verify_ultrametric,
)
from umtree.datasets import iris8

data = iris8()
dist = euclidean_matrix(data)

dend = naive_cluster(dist, "median", labels=data.row_labels)
print("merge history (median criterion):")
for r, (a, b, level) in enumerate(dend.merges, start=1):
    members = sorted(data.row_labels[t] for t in dend.members(7 + r))
    print(f"  rank {r}: nodes {a}+{b} at level {level:.4f} -> {{{', '.join(members)}}}")

print("\nNewick:", dend.to_newick())

coph = cophenetic_matrix(dend)
print("\ncophenetic matrix:")
print(np.round(coph.values, 3))

print("\nEuclidean input:  metric violations:", len(verify_metric(dist, 1e-12)),
      " ultrametric violations:", len(verify_ultrametric(dist, 1e-12)))
print("cophenetic output: metric violations:", len(verify_metric(coph)),
      " ultrametric violations:", len(verify_ultrametric(coph)))
print("\nevery cophenetic triangle is isosceles with its two largest sides equal")
