"""The closed form for kappa(G x K_n) and the machinery around it.

For n >= 3 and connected G,

    kappa(G x K_n) = min(n * kappa(G), (n - 1) * delta(G)),

and each side of the minimum comes with an explicit separator: a minimum cut
of G blown up through every layer, or the open neighbourhood of a product
vertex sitting over a minimum-degree vertex of G. n = 2 is excluded because
K_2 products of bipartite factors fall apart.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from random import Random

from .connectivity import CutWitness, is_separator, kappa, min_vertex_cut
from .graphs import Graph, connected_components, induced_subgraph, min_degree
from .graphio import write_graph6
from .products import complete_graph, direct_product
from .reports import VerificationReport, elapsed_ms_since, verdict_of


class FormulaInapplicable(ValueError):
    """The closed form is only established for complete factors K_n with n >= 3."""


def _require_applicable(n: int) -> None:
    if n < 3:
        raise FormulaInapplicable(
            f"n={n}: the closed form needs n >= 3 (at n=2 a bipartite factor "
            "already makes the product disconnected; compute kappa directly instead)")


@dataclass(frozen=True)
class FormulaResult:
    """Value of the closed form plus which side of the minimum binds.

    binding_branch is "copy" (n * kappa smaller), "neighborhood"
    ((n - 1) * delta smaller), or "tie".
    """

    n: int
    kappa_g: int
    delta_g: int
    value: int
    binding_branch: str


def formula_kappa_product(kappa_g: int, delta_g: int, n: int) -> FormulaResult:
    _require_applicable(n)
    if kappa_g < 0 or delta_g < 0:
        raise ValueError("kappa and delta must be nonnegative")
    copy_side = n * kappa_g
    neighborhood_side = (n - 1) * delta_g
    if copy_side < neighborhood_side:
        branch = "copy"
    elif neighborhood_side < copy_side:
        branch = "neighborhood"
    else:
        branch = "tie"
    return FormulaResult(n=n, kappa_g=kappa_g, delta_g=delta_g,
                         value=min(copy_side, neighborhood_side),
                         binding_branch=branch)


def kappa_product_fast(g: Graph, n: int) -> int:
    """kappa(G x K_n) by the closed form, without building the product."""
    _require_applicable(n)
    if g.vertex_count == 0:
        raise ValueError("connectivity undefined for the empty factor")
    return formula_kappa_product(kappa(g), min_degree(g), n).value


def witness_cut(g: Graph, n: int) -> CutWitness:
    """An explicit minimum separator of G x K_n matching the closed form.

    Copy branch: C x V(K_n) for a minimum cut C of G. Neighborhood branch
    (also taken on ties): all neighbours of (u, 0) where u is the smallest
    minimum-degree vertex of G. The constructed set is re-checked against the
    actual product before being returned.
    """
    _require_applicable(n)
    if g.vertex_count < 2:
        raise ValueError("witness needs a factor with at least two vertices")
    if len(connected_components(g)) != 1:
        raise ValueError("witness needs a connected factor")
    result = formula_kappa_product(kappa(g), min_degree(g), n)
    if result.binding_branch == "copy":
        factor_cut = min_vertex_cut(g).vertices
        chosen = frozenset(c * n + j for c in factor_cut for j in range(n))
        branch = "copy"
    else:
        u = min(v for v in range(g.vertex_count) if g.degree(v) == result.delta_g)
        # neighbours of (u, 0) in G x K_n: every (w, j) with w ~ u and j != 0
        chosen = frozenset(w * n + j for w in g.neighbors(u) for j in range(1, n))
        branch = "neighborhood"
    if len(chosen) != result.value:
        raise AssertionError("witness size does not match the closed form")
    product = direct_product(g, complete_graph(n)).graph
    if not is_separator(product, chosen):
        raise AssertionError("constructed witness does not separate the product")
    left = product.vertex_count - len(chosen)
    return CutWitness(chosen, "trivial" if left == 1 else "disconnected", branch)


@dataclass(frozen=True)
class QuotientGraph:
    """Layer-contraction of G x K_n after deleting a candidate separator S.

    remainders[i] is layer i minus S; the quotient keeps an edge ij of G when
    some product edge still runs between the two remainders, which fails only
    when both remainders are single vertices in the same column.
    """

    factor: Graph
    n: int
    removed: frozenset[int]
    remainders: tuple[frozenset[int], ...]
    graph: Graph


def _remainders_joined(rem_i: frozenset[int], rem_j: frozenset[int], n: int) -> bool:
    cols_i = {v % n for v in rem_i}
    if len(cols_i) > 1:
        return True
    cols_j = {v % n for v in rem_j}
    return cols_j != cols_i


def build_quotient(g: Graph, n: int, removed) -> QuotientGraph:
    """Validates that S is small enough (|S| < min(n*kappa, (n-1)*delta)) and
    leaves every layer nonempty, then contracts layers."""
    _require_applicable(n)
    kappa_g = kappa(g)
    if kappa_g == 0:
        raise ValueError("quotient needs a connected factor with kappa >= 1")
    bound = min(n * kappa_g, (n - 1) * min_degree(g))
    m = g.vertex_count
    removed = frozenset(removed)
    for v in removed:
        if not 0 <= v < m * n:
            raise ValueError(f"product vertex {v} out of range")
    if len(removed) >= bound:
        raise ValueError(
            f"candidate separator has {len(removed)} vertices; "
            f"must stay below min(n*kappa, (n-1)*delta) = {bound}")
    remainders = []
    for i in range(m):
        rem = frozenset(range(i * n, (i + 1) * n)) - removed
        if not rem:
            raise ValueError(f"candidate separator empties layer {i}")
        remainders.append(rem)
    masks = [0] * m
    for i, j in g.edge_list():
        if _remainders_joined(remainders[i], remainders[j], n):
            masks[i] |= 1 << j
            masks[j] |= 1 << i
    return QuotientGraph(factor=g, n=n, removed=removed,
                         remainders=tuple(remainders),
                         graph=Graph.from_adjacency(masks))


def check_quotient_connected(g: Graph, n: int, removed) -> VerificationReport:
    """Below the closed-form bound, the layer quotient must stay connected."""
    t0 = time.perf_counter()
    quotient = build_quotient(g, n, removed)
    components = len(connected_components(quotient.graph))
    computed = {"quotient_components": components, "connected": components == 1}
    return VerificationReport(
        check_name="quotient_connected",
        inputs={"graph6": write_graph6(g), "n": n, "S": sorted(quotient.removed)},
        computed=computed,
        verdict=verdict_of(computed["connected"]),
        elapsed_ms=elapsed_ms_since(t0),
    )


def check_layer_in_component(g: Graph, n: int, removed) -> VerificationReport:
    """Below the bound, each layer remainder must land in one component of
    the punctured product (so S cannot split any single layer across parts)."""
    t0 = time.perf_counter()
    quotient = build_quotient(g, n, removed)
    product = direct_product(g, complete_graph(n)).graph
    kept = [v for v in range(product.vertex_count) if v not in quotient.removed]
    sub = induced_subgraph(product, kept)
    component_of = {}
    for comp_id, comp in enumerate(connected_components(sub)):
        for v in comp:
            component_of[kept[v]] = comp_id
    all_within = True
    for rem in quotient.remainders:
        ids = {component_of[v] for v in rem}
        if len(ids) > 1:
            all_within = False
            break
    computed = {"layers": g.vertex_count, "all_in_one_component": all_within}
    return VerificationReport(
        check_name="layer_in_component",
        inputs={"graph6": write_graph6(g), "n": n, "S": sorted(quotient.removed)},
        computed=computed,
        verdict=verdict_of(all_within),
        elapsed_ms=elapsed_ms_since(t0),
    )


def check_complete_product(m: int, n: int) -> VerificationReport:
    """kappa(K_m x K_n) against (m-1)(n-1), measured and closed-form."""
    if not 2 <= m <= n:
        raise ValueError("complete-product check needs 2 <= m <= n")
    _require_applicable(n)
    t0 = time.perf_counter()
    product = direct_product(complete_graph(m), complete_graph(n)).graph
    measured = kappa(product)
    expected = (m - 1) * (n - 1)
    formula_value = formula_kappa_product(m - 1, m - 1, n).value
    computed = {
        "kappa_product": measured,
        "closed_form": expected,
        "formula_value": formula_value,
        "agree": measured == expected == formula_value,
    }
    return VerificationReport(
        check_name="complete_product",
        inputs={"m": m, "n": n},
        computed=computed,
        verdict=verdict_of(computed["agree"]),
        elapsed_ms=elapsed_ms_since(t0),
    )


def sample_separator(g: Graph, n: int, rng: Random, size_draws: int = 1000) -> frozenset[int]:
    """Random candidate separator for the quotient checks.

    Draws |S| uniformly from 0 .. bound-1 and S uniformly among product vertex
    sets of that size, rejecting draws that empty a layer (after 100 rejections
    the size is redrawn).
    """
    _require_applicable(n)
    kappa_g = kappa(g)
    if kappa_g == 0:
        raise ValueError("no candidate separators exist for a factor with kappa = 0")
    bound = min(n * kappa_g, (n - 1) * min_degree(g))
    total = g.vertex_count * n
    for _ in range(size_draws):
        size = rng.randrange(bound)
        for _attempt in range(100):
            chosen = frozenset(rng.sample(range(total), size))
            if all(sum(1 for v in chosen if v // n == i) < n
                   for i in range(g.vertex_count)):
                return chosen
        # this size keeps emptying some layer; try another
    raise RuntimeError("could not sample a layer-respecting candidate separator")
