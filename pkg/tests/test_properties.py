from __future__ import annotations

from hypothesis import given, settings
from hypothesis import strategies as st

from antimagic.explore import SAMPLED, permutation_census
from antimagic.graphs import build_family
from antimagic.labeling import label_arbitrary, label_ordered
from antimagic.primes import first_m_primes
from antimagic.verify import vertex_weights

from conftest import oracle_primes


@st.composite
def family_instances(draw):
    family = draw(
        st.sampled_from(
            ["pbt", "cbt", "complete", "bipartite", "ladder", "wheel", "hypercube", "double-star"]
        )
    )
    if family == "pbt":
        params = {"level": draw(st.integers(1, 8))}
    elif family == "cbt":
        levels = draw(st.integers(1, 6))
        params = {"levels": levels, "last_level_count": draw(st.integers(1, 2**levels))}
    elif family == "complete":
        params = {"n": draw(st.integers(2, 24))}
    elif family == "bipartite":
        params = {"a": draw(st.integers(1, 9)), "b": draw(st.integers(1, 9))}
    elif family == "ladder":
        params = {"n": draw(st.integers(1, 40))}
    elif family == "wheel":
        params = {"n": draw(st.integers(3, 40))}
    elif family == "hypercube":
        params = {"d": draw(st.integers(1, 6))}
    else:
        params = {"a": draw(st.integers(1, 8)), "b": draw(st.integers(1, 8))}
    return build_family(family, **params)


@settings(max_examples=40, deadline=None)
@given(graph=family_instances(), seed=st.integers(0, 2**32))
def test_handshake_and_multiset_invariants(graph, seed):
    labeling = label_arbitrary(graph, seed)
    report = vertex_weights(graph, labeling)
    assert sum(report.weights) == 2 * sum(labeling.labels)
    assert sorted(labeling.labels) == oracle_primes(graph.edge_count)
    assert report.antimagic == (report.collision_group_count == 0)


@settings(max_examples=20, deadline=None)
@given(graph=family_instances())
def test_generators_deterministic(graph):
    assert build_family(graph.family, **graph.params) == graph
    assert label_ordered(graph) == label_ordered(graph)


@settings(max_examples=15, deadline=None)
@given(seed=st.integers(0, 2**32), size=st.integers(1, 60))
def test_sampled_census_reproducible(seed, size):
    graph = build_family("wheel", n=4)
    first = permutation_census(graph, SAMPLED, seed=seed, sample_size=size)
    second = permutation_census(graph, SAMPLED, seed=seed, sample_size=size)
    assert first == second
    assert first.antimagic_count <= first.total_tested == size


@settings(max_examples=30, deadline=None)
@given(st.integers(1, 5000), st.integers(1, 5000))
def test_nth_prime_strictly_monotone(i, j):
    table = first_m_primes(5000)
    if i != j:
        lo, hi = sorted((i, j))
        assert table.nth(lo) < table.nth(hi)
