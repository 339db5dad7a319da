"""Join semilattice of set-valued distances and its level clusters.

The distinct pair-distance sets, closed under union, form a join
semilattice ordered by inclusion and leveled by cardinality.  Level
clusters at level k are the maximal object sets whose internal pair
distances all fit inside a single maximal lattice node of level <= k.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

import networkx as nx

from .dissim import SetValuedDistanceTable

__all__ = [
    "Semilattice",
    "build_lattice",
    "pairs_for_node",
    "clusters_at_level",
    "triangle_violations",
]


def _vertex_key(s: frozenset):
    return (len(s), tuple(sorted(s)))


@dataclass(frozen=True)
class Semilattice:
    """Union-closed family of attribute subsets, ordered by inclusion."""

    vertices: tuple  # frozensets, sorted by (level, members)
    edges: tuple  # covering pairs (lower, upper), both vertices

    def level(self, node: frozenset) -> int:
        return len(node)

    def __contains__(self, node) -> bool:
        return frozenset(node) in set(self.vertices)

    def join(self, a, b) -> frozenset:
        u = frozenset(a) | frozenset(b)
        if u not in self:
            raise KeyError(f"{sorted(u)} not a lattice vertex")
        return u


def _union_closure(sets):
    family = set(map(frozenset, sets))
    frontier = set(family)
    while frontier:
        new = set()
        for a in frontier:
            for b in family:
                u = a | b
                if u not in family and u not in new:
                    new.add(u)
        family |= new
        frontier = new
    return family


def build_lattice(t: SetValuedDistanceTable) -> Semilattice:
    """Union-closure of the observed distance sets, with cover edges."""
    observed = set(t.dist.values())
    family = _union_closure(observed)
    vertices = tuple(sorted(family, key=_vertex_key))
    edges = []
    for lo, hi in combinations(vertices, 2):
        if lo < hi and not any(
            lo < mid < hi for mid in vertices if mid not in (lo, hi)
        ):
            edges.append((lo, hi))
    return Semilattice(vertices, tuple(edges))


def pairs_for_node(t: SetValuedDistanceTable, node) -> list:
    """Pairs whose distance set equals the node exactly."""
    node = frozenset(node)
    lattice = build_lattice(t)
    if node not in lattice:
        raise KeyError(f"{sorted(node)} is not a lattice vertex")
    return sorted(p for p, s in t.dist.items() if s == node)


def clusters_at_level(t: SetValuedDistanceTable, k: int) -> list:
    """Maximal object sets linked entirely within some maximal lattice
    node of level <= k; dominated sets (including singletons) removed."""
    if not 0 <= k <= t.n_attributes:
        raise ValueError(f"level {k} out of range 0..{t.n_attributes}")
    lattice = build_lattice(t)
    eligible = [v for v in lattice.vertices if len(v) <= k]
    maximal = [v for v in eligible if not any(v < w for w in eligible)]
    clusters = {frozenset([i]) for i in range(t.n)}
    for node in maximal:
        g = nx.Graph()
        g.add_nodes_from(range(t.n))
        g.add_edges_from(p for p, s in t.dist.items() if s <= node)
        clusters.update(map(frozenset, nx.find_cliques(g)))
    keep = [c for c in clusters if not any(c < d for d in clusters)]
    return sorted(keep, key=_vertex_key)


def triangle_violations(t: SetValuedDistanceTable) -> list:
    """Triples breaking the set-valued strong triangle inequality
    d(x,z) <= d(x,y) | d(y,z); empty for simple-matching tables."""
    out = []
    for x, y, z in combinations(range(t.n), 3):
        for a, b, c in ((x, z, y), (x, y, z), (y, z, x)):
            if not t[a, b] <= (t[a, c] | t[c, b]):
                out.append((a, c, b))
    return out
