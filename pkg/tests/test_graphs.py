from __future__ import annotations

import pytest

from antimagic.errors import CapacityError, InvalidAddressError
from antimagic.graphs import (
    TreeAddress,
    build_family,
    complete_bipartite,
    complete_binary_tree,
    complete_graph,
    double_star,
    hypercube,
    ladder,
    perfect_binary_tree,
    tree_address,
    tree_vertex_id,
    wheel,
)

SMALL_GRAPHS = [
    perfect_binary_tree(3),
    complete_binary_tree(3, 5),
    complete_graph(6),
    complete_bipartite(2, 3),
    ladder(4),
    wheel(7),
    hypercube(3),
    double_star(2, 2),
]


@pytest.mark.parametrize(
    "level, vertices, edges", [(0, 1, 0), (1, 3, 2), (2, 7, 6), (3, 15, 14)]
)
def test_perfect_tree_counts(level, vertices, edges):
    g = perfect_binary_tree(level)
    assert g.vertex_count == vertices
    assert g.edge_count == edges


def test_perfect_tree_canonical_order():
    # Deepest level first, left to right, edges as (parent, child).
    g = perfect_binary_tree(2)
    assert g.edges == ((1, 3), (1, 4), (2, 5), (2, 6), (0, 1), (0, 2))


def test_perfect_tree_structure():
    for level in range(13):
        g = perfect_binary_tree(level)
        children: dict[int, int] = {}
        for parent, child in g.edges:
            assert parent == (child - 1) // 2
            children[parent] = children.get(parent, 0) + 1
        internal = 2**level - 1
        assert all(children.get(v, 0) == 2 for v in range(internal))
        leaves = range(internal, g.vertex_count)
        assert all(v not in children for v in leaves)
        assert all((v + 1).bit_length() - 1 == level for v in leaves)


@pytest.mark.parametrize("n, edges", [(2, 1), (4, 6), (5, 10)])
def test_complete_counts(n, edges):
    g = complete_graph(n)
    assert g.vertex_count == n
    assert g.edge_count == edges


def test_complete_lexicographic_order():
    assert complete_graph(4).edges == ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3))


def test_complete_rejects_single_vertex():
    with pytest.raises(ValueError):
        complete_graph(1)


@pytest.mark.parametrize("a, b, edges", [(2, 3, 6), (3, 3, 9), (1, 1, 1)])
def test_bipartite_counts(a, b, edges):
    g = complete_bipartite(a, b)
    assert g.vertex_count == a + b
    assert g.edge_count == edges


def test_bipartite_order():
    assert complete_bipartite(2, 3).edges == ((0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4))


@pytest.mark.parametrize("n, vertices, edges", [(1, 2, 1), (2, 4, 4), (3, 6, 7)])
def test_ladder_counts(n, vertices, edges):
    g = ladder(n)
    assert g.vertex_count == vertices
    assert g.edge_count == edges


def test_ladder_order():
    # Bottom rail, top rail, then rungs.
    assert ladder(2).edges == ((0, 1), (2, 3), (0, 2), (1, 3))


@pytest.mark.parametrize("n, vertices, edges", [(3, 4, 6), (4, 5, 8), (7, 8, 14)])
def test_wheel_counts(n, vertices, edges):
    g = wheel(n)
    assert g.vertex_count == vertices
    assert g.edge_count == edges


def test_wheel_order():
    assert wheel(3).edges == ((0, 1), (1, 2), (2, 0), (3, 0), (3, 1), (3, 2))


def test_wheel_rejects_small_rim():
    with pytest.raises(ValueError):
        wheel(2)


@pytest.mark.parametrize("d, vertices, edges", [(1, 2, 1), (2, 4, 4), (3, 8, 12)])
def test_hypercube_counts(d, vertices, edges):
    g = hypercube(d)
    assert g.vertex_count == vertices
    assert g.edge_count == edges


def test_hypercube_two_is_four_cycle():
    g = hypercube(2)
    assert g.edges == ((0, 1), (0, 2), (1, 3), (2, 3))
    assert all(g.degree(v) == 2 for v in range(4))


def test_cbt_full_last_level_matches_perfect_tree():
    full = complete_binary_tree(3, 8)
    perfect = perfect_binary_tree(3)
    assert full.vertex_count == perfect.vertex_count
    assert full.edges == perfect.edges


def test_cbt_counts():
    g = complete_binary_tree(3, 1)
    assert (g.vertex_count, g.edge_count) == (8, 7)
    g = complete_binary_tree(2, 2)
    assert (g.vertex_count, g.edge_count) == (5, 4)
    assert g.edges == ((1, 3), (1, 4), (0, 1), (0, 2))


def test_cbt_bounds():
    with pytest.raises(ValueError):
        complete_binary_tree(2, 0)
    with pytest.raises(ValueError):
        complete_binary_tree(2, 5)
    with pytest.raises(ValueError):
        complete_binary_tree(0, 1)


def test_double_star_shape():
    g = double_star(2, 2)
    assert (g.vertex_count, g.edge_count) == (6, 5)
    assert g.edges == ((0, 2), (0, 3), (0, 1), (1, 4), (1, 5))
    assert g.degree(0) == g.degree(1) == 3


@pytest.mark.parametrize("graph", SMALL_GRAPHS, ids=lambda g: g.family)
def test_handshake(graph):
    assert sum(graph.degree(v) for v in range(graph.vertex_count)) == 2 * graph.edge_count


@pytest.mark.parametrize("graph", SMALL_GRAPHS, ids=lambda g: g.family)
def test_adjacency_consistent_with_edges(graph):
    seen = [0] * graph.edge_count
    for v, incident in enumerate(graph.adjacency):
        for e in incident:
            assert v in graph.edges[e]
            seen[e] += 1
    assert all(count == 2 for count in seen)


@pytest.mark.parametrize("graph", SMALL_GRAPHS, ids=lambda g: g.family)
def test_no_self_loops_or_duplicates(graph):
    assert all(u != v for u, v in graph.edges)
    normalized = {frozenset(e) for e in graph.edges}
    assert len(normalized) == graph.edge_count


def test_generators_deterministic():
    for graph in SMALL_GRAPHS:
        again = build_family(graph.family, **graph.params)
        assert again == graph


def test_capacity_cap():
    with pytest.raises(CapacityError):
        complete_graph(100, cap=100)
    with pytest.raises(CapacityError):
        perfect_binary_tree(18)  # 524286 edges exceeds the default cap


def test_build_family_unknown():
    with pytest.raises(ValueError):
        build_family("moebius", n=4)


def test_tree_address_validation():
    TreeAddress(3, 0, 8)
    TreeAddress(3, 3, 1)
    with pytest.raises(InvalidAddressError):
        TreeAddress(3, 4, 1)
    with pytest.raises(InvalidAddressError):
        TreeAddress(3, 0, 9)
    with pytest.raises(InvalidAddressError):
        TreeAddress(3, 1, 0)
    with pytest.raises(InvalidAddressError):
        TreeAddress(-1, 0, 1)


def test_tree_address_id_round_trip():
    for level in range(7):
        for v in range(2 ** (level + 1) - 1):
            addr = tree_address(level, v)
            assert tree_vertex_id(addr) == v
    assert tree_vertex_id(TreeAddress(3, 2, 1)) == 1
    assert tree_vertex_id(TreeAddress(3, 0, 1)) == 7
    with pytest.raises(InvalidAddressError):
        tree_address(2, 7)


def test_vertex_labels():
    assert complete_graph(4).vertex_label(0) == "1"
    assert complete_bipartite(2, 3).vertex_label(2) == "v1"
    assert wheel(3).vertex_label(3) == "hub"
    assert hypercube(3).vertex_label(5) == "101"
    assert ladder(2).vertex_label(2) == "t1"
    assert perfect_binary_tree(1).vertex_label(2) == "2"
