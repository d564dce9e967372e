"""Exact vertex connectivity, minimum separators, and the brute-force oracle."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

import numpy as np

from ._kernels import brute_force_kappa_bits, kappa_from_matrix
from .graphs import Graph, bit_indices

#: default vertex cap for the subset-enumeration oracle
BRUTE_FORCE_CAP = 12


@dataclass(frozen=True)
class CutWitness:
    """A vertex cut together with what its removal does to the graph.

    residual_verdict is "disconnected" (>= 2 components remain) or "trivial"
    (a single vertex remains). branch is only set for product witness cuts.
    """

    vertices: frozenset[int]
    residual_verdict: str
    branch: str | None = None

    def __len__(self) -> int:
        return len(self.vertices)


def kappa(g: Graph) -> int:
    """Vertex connectivity. 0 for disconnected graphs and for K1, n-1 for Kn."""
    if g.vertex_count == 0:
        raise ValueError("connectivity undefined for the empty graph")
    return int(kappa_from_matrix(g.adjacency_matrix()))


def is_separator(g: Graph, vertices) -> bool:
    """True iff removing ``vertices`` leaves a disconnected or single-vertex graph.

    Removing all vertices, or starting from a disconnected graph and removing
    nothing, follows the same rule: the residual must be disconnected or a
    lone vertex, so the empty residual returns False.
    """
    n = g.vertex_count
    removed = 0
    for v in vertices:
        if not 0 <= v < n:
            raise ValueError(f"vertex {v} out of range for vertex count {n}")
        removed |= 1 << v
    rest = ((1 << n) - 1) & ~removed
    if rest == 0:
        return False
    if rest & (rest - 1) == 0:
        return True
    reach = rest & -rest
    frontier = reach
    while frontier:
        grown = 0
        for v in bit_indices(frontier):
            grown |= g.adjacency_mask(v)
        frontier = grown & rest & ~reach
        reach |= frontier
    return reach != rest


def min_vertex_cut(g: Graph) -> CutWitness:
    """A minimum vertex cut, lexicographically smallest among minimum cuts.

    For complete graphs (where no removal disconnects) the convention is all
    vertices but the last, leaving a single vertex.
    """
    n = g.vertex_count
    if n == 0:
        raise ValueError("minimum cut undefined for the empty graph")
    k = kappa(g)
    if k == n - 1:
        # kappa == n-1 happens exactly for complete graphs (K1 included)
        return CutWitness(frozenset(range(n - 1)), "trivial")
    for candidate in combinations(range(n), k):
        if is_separator(g, candidate):
            left = n - k
            verdict = "trivial" if left == 1 else "disconnected"
            return CutWitness(frozenset(candidate), verdict)
    raise AssertionError("no separator of size kappa found; kappa is wrong")


def brute_force_kappa(g: Graph, cap: int = BRUTE_FORCE_CAP) -> int:
    """Connectivity by enumerating deletion subsets in increasing size.

    Independent of the flow routine; meant as a cross-check oracle, hence the
    vertex cap.
    """
    n = g.vertex_count
    if n == 0:
        raise ValueError("connectivity undefined for the empty graph")
    if n > cap:
        raise ValueError(f"graph has {n} vertices, above the oracle cap {cap}")
    if n > 62:
        raise ValueError("subset oracle needs adjacency masks in int64, so at most 62 vertices")
    bits = np.array([g.adjacency_mask(v) for v in range(n)], dtype=np.int64)
    return int(brute_force_kappa_bits(bits, n))
