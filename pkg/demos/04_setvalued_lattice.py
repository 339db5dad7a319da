"""Set-valued distances on a boolean table and their join semilattice.

The distance between two objects is the set of attributes not present
in both.  The distinct observed sets, closed under union, form a
semilattice whose levels (set cardinalities) induce clusters.
"""

from umtree import build_lattice, clusters_at_level, pairs_for_node, setvalued_table
from umtree.datasets import bool5

data = bool5()
obj, attr = data.row_labels, data.col_labels
table = setvalued_table(data)


def name(s):
    return "{" + ",".join(attr[j] for j in sorted(s)) + "}"


print("pairwise set-valued distances:")
for (i, j), s in sorted(table.dist.items()):
    print(f"  d({obj[i]},{obj[j]}) = {name(s)}")

lattice = build_lattice(table)
print("\nlattice vertices by level:")
for lev in range(len(attr), 0, -1):
    row = [name(v) for v in lattice.vertices if len(v) == lev]
    if row:
        print(f"  level {lev}: " + "   ".join(row))

print("\npairs attached to each vertex (exact equality):")
for v in lattice.vertices:
    pairs = pairs_for_node(table, v)
    if pairs:
        print(f"  {name(v)}: " + ", ".join(f"({obj[i]},{obj[j]})" for i, j in pairs))

for k in (2, 3):
    clusters = clusters_at_level(table, k)
    rendered = ["{" + ",".join(obj[i] for i in sorted(c)) + "}" for c in clusters]
    print(f"\nclusters with all pairwise linkage at level <= {k}: " + " ".join(rendered))
