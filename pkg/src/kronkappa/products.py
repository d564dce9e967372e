"""Complete graphs and direct products.

The direct product G x H joins (u1, v1) to (u2, v2) exactly when u1u2 is an
edge of G and v1v2 is an edge of H. Product vertices use the row-major
labelling (i, j) -> i * |V(H)| + j, which is part of the public contract: layer
i of G x H is the contiguous block i*n .. i*n + n - 1.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

from .graphs import Graph, connected_components, min_degree, odd_cycle_status
from .graphio import write_graph6
from .reports import VerificationReport, elapsed_ms_since, verdict_of


@dataclass(frozen=True)
class ProductGraph:
    """A direct product together with its factor dimensions."""

    graph: Graph
    left_count: int
    right_count: int

    def index_of(self, i: int, j: int) -> int:
        """Product label of the pair (i, j)."""
        if not (0 <= i < self.left_count and 0 <= j < self.right_count):
            raise ValueError(f"pair ({i}, {j}) out of range for a "
                             f"{self.left_count} x {self.right_count} product")
        return i * self.right_count + j

    def pair_of(self, index: int) -> tuple[int, int]:
        if not 0 <= index < self.graph.vertex_count:
            raise ValueError(f"product vertex {index} out of range")
        return divmod(index, self.right_count)


@dataclass(frozen=True)
class Layer:
    """The copy of V(H) sitting above one vertex of the left factor."""

    left_index: int
    vertices: frozenset[int]


def complete_graph(n: int) -> Graph:
    if n < 1:
        raise ValueError("complete graph needs at least one vertex")
    full = (1 << n) - 1
    return Graph.from_adjacency([full ^ (1 << v) for v in range(n)])


def direct_product(g: Graph, h: Graph) -> ProductGraph:
    if g.vertex_count == 0 or h.vertex_count == 0:
        raise ValueError("direct product needs nonempty factors")
    hn = h.vertex_count
    h_edges = h.edge_list()
    adj = [0] * (g.vertex_count * hn)
    for u1, u2 in g.edge_list():
        base1 = u1 * hn
        base2 = u2 * hn
        for v1, v2 in h_edges:
            a, b = base1 + v1, base2 + v2
            adj[a] |= 1 << b
            adj[b] |= 1 << a
            a, b = base1 + v2, base2 + v1
            adj[a] |= 1 << b
            adj[b] |= 1 << a
    return ProductGraph(Graph.from_adjacency(adj), g.vertex_count, hn)


def layer(product: ProductGraph, i: int) -> Layer:
    if not 0 <= i < product.left_count:
        raise ValueError(f"layer {i} out of range for left factor of size {product.left_count}")
    start = i * product.right_count
    return Layer(i, frozenset(range(start, start + product.right_count)))


def check_weichsel(g: Graph, h: Graph) -> VerificationReport:
    """Connectedness criterion for direct products, checked both ways.

    The product of two nontrivial factors is connected iff both factors are
    connected and at least one contains an odd cycle; this recomputes each side
    independently and compares.
    """
    if g.vertex_count < 2 or h.vertex_count < 2:
        raise ValueError("criterion needs nontrivial factors (two or more vertices each)")
    t0 = time.perf_counter()
    product_connected = len(connected_components(direct_product(g, h).graph)) == 1
    factors_connected = (len(connected_components(g)) == 1
                         and len(connected_components(h)) == 1)
    some_odd_cycle = (not odd_cycle_status(g).is_bipartite
                      or not odd_cycle_status(h).is_bipartite)
    predicted = factors_connected and some_odd_cycle
    computed = {
        "product_connected": product_connected,
        "factors_connected": factors_connected,
        "odd_cycle_in_some_factor": some_odd_cycle,
        "predicted_connected": predicted,
        "agree": predicted == product_connected,
    }
    return VerificationReport(
        check_name="weichsel_iff",
        inputs={"graph6": write_graph6(g), "graph6_h": write_graph6(h)},
        computed=computed,
        verdict=verdict_of(computed["agree"]),
        elapsed_ms=elapsed_ms_since(t0),
    )


def check_degree_product(g: Graph, h: Graph) -> VerificationReport:
    """Minimum degree of the product vs the product of minimum degrees."""
    if g.vertex_count == 0 or h.vertex_count == 0:
        raise ValueError("minimum degree undefined for empty factors")
    t0 = time.perf_counter()
    delta_g = min_degree(g)
    delta_h = min_degree(h)
    delta_product = min_degree(direct_product(g, h).graph)
    computed = {
        "delta_product": delta_product,
        "delta_g": delta_g,
        "delta_h": delta_h,
        "agree": delta_product == delta_g * delta_h,
    }
    return VerificationReport(
        check_name="degree_product",
        inputs={"graph6": write_graph6(g), "graph6_h": write_graph6(h)},
        computed=computed,
        verdict=verdict_of(computed["agree"]),
        elapsed_ms=elapsed_ms_since(t0),
    )
