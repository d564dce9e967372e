import pytest
from hypothesis import given, settings, strategies as st

from kronkappa import (
    brute_force_kappa,
    build_graph,
    complete_graph,
    direct_product,
    is_separator,
    kappa,
    min_vertex_cut,
    parse_graph6,
)

from conftest import graph_strategy, ref_is_separator, ref_kappa

PETERSEN = "IheA@GUAo"


def cycle(n):
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


@pytest.mark.parametrize("g,expected", [
    (build_graph(1, []), 0),
    (build_graph(2, []), 0),
    (build_graph(2, [(0, 1)]), 1),
    (build_graph(3, [(0, 1), (1, 2)]), 1),
    (cycle(5), 2),
    (complete_graph(5), 4),
    (build_graph(4, [(0, 1), (2, 3)]), 0),
])
def test_kappa_known_values(g, expected):
    assert kappa(g) == expected
    assert brute_force_kappa(g) == expected


def test_kappa_petersen():
    assert kappa(parse_graph6(PETERSEN)) == 3


def test_kappa_empty_graph_rejected():
    with pytest.raises(ValueError):
        kappa(build_graph(0, []))
    with pytest.raises(ValueError):
        brute_force_kappa(build_graph(0, []))


def test_kappa_of_small_products():
    # values frozen from an independent subset-deletion oracle
    p3 = build_graph(3, [(0, 1), (1, 2)])
    prod = direct_product(p3, complete_graph(3)).graph
    assert kappa(prod) == 2
    k23 = build_graph(5, [(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)])
    prod = direct_product(k23, complete_graph(3)).graph
    assert kappa(prod) == 4


def test_brute_force_cap():
    g = complete_graph(13)
    with pytest.raises(ValueError, match="cap"):
        brute_force_kappa(g)
    assert brute_force_kappa(g, cap=13) == 12


@given(graph_strategy(min_vertices=1, max_vertices=6))
def test_flow_matches_subset_reference(g):
    assert kappa(g) == ref_kappa(g)


@given(graph_strategy(min_vertices=1, max_vertices=9))
def test_flow_matches_brute_force(g):
    assert kappa(g) == brute_force_kappa(g)


def test_is_separator_cases():
    c6 = cycle(6)
    assert is_separator(c6, [0, 3])
    assert not is_separator(c6, [0])
    assert not is_separator(c6, [])
    assert is_separator(c6, range(5))  # one vertex left
    assert not is_separator(c6, range(6))  # nothing left
    assert is_separator(build_graph(2, []), [])
    with pytest.raises(ValueError):
        is_separator(c6, [6])


def test_is_separator_accepts_any_iterable():
    c4 = cycle(4)
    assert is_separator(c4, {0, 2})
    assert is_separator(c4, iter([0, 2]))


@given(graph_strategy(min_vertices=1, max_vertices=7), st.data())
def test_is_separator_matches_reference(g, data):
    subset = data.draw(st.lists(
        st.integers(0, g.vertex_count - 1), unique=True))
    assert is_separator(g, subset) == ref_is_separator(g, subset)


def test_min_cut_four_cycle_prefers_lex_smallest():
    assert min_vertex_cut(cycle(4)).vertices == frozenset({0, 2})


def test_min_cut_path_center():
    cut = min_vertex_cut(build_graph(3, [(0, 1), (1, 2)]))
    assert cut.vertices == frozenset({1})
    assert cut.residual_verdict == "disconnected"


def test_min_cut_complete_graph_leaves_last_vertex():
    cut = min_vertex_cut(complete_graph(4))
    assert cut.vertices == frozenset({0, 1, 2})
    assert cut.residual_verdict == "trivial"


def test_min_cut_single_vertex():
    cut = min_vertex_cut(build_graph(1, []))
    assert cut.vertices == frozenset()
    assert cut.residual_verdict == "trivial"


def test_min_cut_disconnected_is_empty():
    cut = min_vertex_cut(build_graph(4, [(0, 1), (2, 3)]))
    assert cut.vertices == frozenset()
    assert cut.residual_verdict == "disconnected"


def test_min_cut_empty_graph_rejected():
    with pytest.raises(ValueError):
        min_vertex_cut(build_graph(0, []))


@settings(max_examples=60)
@given(graph_strategy(min_vertices=1, max_vertices=7))
def test_min_cut_is_valid_minimum_and_lex_first(g):
    from itertools import combinations

    cut = min_vertex_cut(g)
    k = kappa(g)
    assert len(cut.vertices) == k
    n = g.vertex_count
    if k == n - 1:
        # complete-graph convention
        assert cut.vertices == frozenset(range(n - 1))
        return
    assert is_separator(g, cut.vertices)
    # lexicographically first among all minimum separators, per the
    # independent reference separator test
    for candidate in combinations(range(n), k):
        if ref_is_separator(g, candidate):
            assert frozenset(candidate) == cut.vertices
            break
