"""p-adic encoding of dendrogram terminals.

A terminal's code collects, for each internal node on its root path, the
branch label (+1/-1) of the edge the path takes out of that node, indexed
by the node's agglomeration rank.  Multiplying by 1/p (the dilation
operator) shifts every rank down by one and drops the bottom rank:
the whole configuration rises one level in the hierarchy.
"""

from __future__ import annotations

from dataclasses import dataclass
from types import MappingProxyType

from .dendrogram import Dendrogram

__all__ = [
    "PadicCode",
    "encode",
    "decimal_value",
    "check_uniqueness",
    "dilate",
    "cluster_chain",
    "check_spherical_completeness",
]


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    f = 2
    while f * f <= p:
        if p % f == 0:
            return False
        f += 1
    return True


@dataclass(frozen=True)
class PadicCode:
    """Sparse coefficients in {-1, +1} on powers p^rank."""

    p: int
    coeffs: MappingProxyType

    def __post_init__(self):
        if not _is_prime(self.p):
            raise ValueError(f"base {self.p} is not prime")
        cleaned = {
            int(k): int(v) for k, v in dict(self.coeffs).items() if v != 0
        }
        if any(v not in (-1, 1) for v in cleaned.values()):
            raise ValueError("coefficients must be in {-1, 0, +1}")
        if any(k < 1 for k in cleaned):
            raise ValueError("ranks start at 1")
        object.__setattr__(self, "coeffs", MappingProxyType(cleaned))

    def __eq__(self, other):
        return self.p == other.p and dict(self.coeffs) == dict(other.coeffs)

    def as_dict(self) -> dict:
        return dict(sorted(self.coeffs.items()))


def encode(dend: Dendrogram, p: int, terminal: int) -> PadicCode:
    """Code of a terminal: branch labels along its root path, by rank."""
    coeffs = {}
    node = terminal
    for parent in dend.path_to_root(terminal):
        coeffs[dend.rank(parent)] = dend.branch_label(parent, node)
        node = parent
    return PadicCode(p, MappingProxyType(coeffs))


def decimal_value(code: PadicCode) -> int:
    """Exact integer value sum(c_j * p^j)."""
    return sum(c * code.p**j for j, c in code.coeffs.items())


def check_uniqueness(dend: Dendrogram, p: int) -> bool:
    """True iff all terminals' decimal values are distinct."""
    vals = [
        decimal_value(encode(dend, p, t)) for t in range(dend.n_terminals)
    ]
    return len(set(vals)) == len(vals)


def dilate(code: PadicCode) -> PadicCode:
    """Multiply by 1/p: each rank drops by one, rank 0 is discarded."""
    return PadicCode(
        code.p,
        MappingProxyType({j - 1: c for j, c in code.coeffs.items() if j > 1}),
    )


def cluster_chain(dend: Dendrogram, terminal: int):
    """Strictly increasing chain of member sets from {terminal} to I."""
    chain = [frozenset([terminal])]
    chain.extend(dend.members(node) for node in dend.path_to_root(terminal))
    return chain


def check_spherical_completeness(dend: Dendrogram) -> bool:
    """Executable witness: every maximal descending chain of clusters has
    nonempty intersection.  Chains are enumerated by walking every
    root-to-terminal path top-down."""
    for t in range(dend.n_terminals):
        chain = list(reversed(cluster_chain(dend, t)))
        common = chain[0]
        for q in chain[1:]:
            if not q < common:
                return False
            common = common & q
        if not common:
            return False
    return True


def dilation_cluster_map(dend: Dendrogram):
    """Clusters at each rank before and after one dilation.

    Returns, per rank level l, the partition of terminals induced by the
    codes truncated below l; consecutive levels show each cluster either
    unchanged or merged with exactly one other.
    """
    n = dend.n_terminals
    codes = [encode(dend, 3, t) for t in range(n)]
    out = []
    for cut in range(dend.n_terminals):
        groups = {}
        for t, code in enumerate(codes):
            key = tuple(sorted((j, c) for j, c in code.coeffs.items() if j > cut))
            groups.setdefault(key, set()).add(t)
        out.append(sorted(map(frozenset, groups.values()), key=sorted))
    return out
