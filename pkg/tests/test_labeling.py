from __future__ import annotations

import pytest

from antimagic.errors import (
    DuplicateLabelError,
    InsufficientPrimesError,
    LabelLengthError,
    NonPrimeLabelError,
    UnlabelableGraphError,
)
from antimagic.graphs import (
    complete_bipartite,
    complete_graph,
    double_star,
    hypercube,
    ladder,
    perfect_binary_tree,
    wheel,
)
from antimagic.labeling import EXPLICIT, label_arbitrary, label_explicit, label_ordered
from antimagic.primes import first_m_primes

from conftest import oracle_primes


def test_ordered_tree_level_one():
    assert label_ordered(perfect_binary_tree(1)).labels == (2, 3)


def test_ordered_tree_level_two():
    assert label_ordered(perfect_binary_tree(2)).labels == (2, 3, 5, 7, 11, 13)


def test_ordered_complete_four():
    labeling = label_ordered(complete_graph(4))
    assert labeling.labels == (2, 3, 5, 7, 11, 13)
    assert labeling.mode == "ordered"


def test_ordered_rejects_edgeless_graph():
    with pytest.raises(UnlabelableGraphError):
        label_ordered(perfect_binary_tree(0))
    with pytest.raises(UnlabelableGraphError):
        label_arbitrary(perfect_binary_tree(0), seed=1)


def test_ordered_is_pure():
    g = wheel(5)
    assert label_ordered(g) == label_ordered(g)


def test_arbitrary_deterministic_per_seed():
    g = complete_bipartite(2, 3)
    assert label_arbitrary(g, 42) == label_arbitrary(g, 42)


def test_arbitrary_is_permutation_of_first_primes():
    g = complete_graph(3)
    for seed in range(6):
        labels = label_arbitrary(g, seed).labels
        assert sorted(labels) == [2, 3, 5]


def test_arbitrary_tree_level_one():
    labels = label_arbitrary(perfect_binary_tree(1), 7).labels
    assert sorted(labels) == [2, 3]


@pytest.mark.parametrize(
    "graph",
    [perfect_binary_tree(3), complete_graph(5), ladder(4), hypercube(3), wheel(6)],
    ids=lambda g: g.family,
)
def test_multiset_invariance(graph):
    expected = oracle_primes(graph.edge_count)
    assert sorted(label_ordered(graph).labels) == expected
    assert sorted(label_arbitrary(graph, 3).labels) == expected


def test_explicit_collision_instance_accepted():
    labeling = label_explicit(double_star(2, 2), [11, 5, 2, 13, 3])
    assert labeling.labels == (11, 5, 2, 13, 3)
    assert labeling.mode == EXPLICIT


def test_explicit_duplicate_rejected():
    with pytest.raises(DuplicateLabelError):
        label_explicit(double_star(2, 2), [11, 5, 2, 13, 5])


def test_explicit_non_prime_rejected():
    with pytest.raises(NonPrimeLabelError):
        label_explicit(double_star(2, 2), [11, 5, 2, 13, 9])


def test_explicit_length_mismatch_rejected():
    with pytest.raises(LabelLengthError):
        label_explicit(double_star(2, 2), [11, 5, 2, 13])


def test_precomputed_table_reuse():
    table = first_m_primes(100)
    g = complete_graph(5)
    assert label_ordered(g, table) == label_ordered(g)
    with pytest.raises(InsufficientPrimesError):
        label_ordered(complete_graph(20), first_m_primes(10))
