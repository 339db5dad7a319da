"""p-adic codes of dendrogram terminals and the dilation operator.

Uses the 8-terminal ranked demo tree: prints each terminal's code and
decimal value, shows that base 3 separates all terminals, and applies
dilation (multiplication by 1/p) to climb the hierarchy level by level.
"""

from umtree import (
    check_spherical_completeness,
    check_uniqueness,
    cluster_chain,
    decimal_value,
    dilate,
    encode,
)
from umtree.datasets import ranked_demo_tree

tree = ranked_demo_tree()

for p in (2, 3):
    print(f"base p = {p}:")
    for t in range(8):
        code = encode(tree, p, t)
        terms = " + ".join(
            f"{c:+d}*{p}^{j}" for j, c in sorted(code.as_dict().items())
        )
        print(f"  {tree.labels[t]}: {terms:<40} = {decimal_value(code)}")
    print("  all decimal values distinct:", check_uniqueness(tree, p))
    print()

code = encode(tree, 2, 0)
print("dilating x1 (each step drops the bottom level and shifts down):")
while code.as_dict():
    print("  ", code.as_dict())
    code = dilate(code)
print("   {} (exhausted)")

print("\ncluster chain of x1 up to the full set:")
for q in cluster_chain(tree, 0):
    print("  ", sorted(tree.labels[t] for t in q))

print("\nevery descending chain has nonempty intersection:",
      check_spherical_completeness(tree))
