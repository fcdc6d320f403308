"""Empirical probes: ordered-labeling sweeps and permutation censuses."""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import permutations
from typing import Iterable

from .errors import AntimagicError, CensusTooLargeError
from .graphs import FAMILY_SWEEP_PARAM, Graph, build_family
from .labeling import label_ordered
from .primes import first_m_primes
from .verify import vertex_weights

EXHAUSTIVE = "exhaustive"
SAMPLED = "sampled"

# 8! = 40320 assignments; beyond that only seeded sampling is offered.
MAX_EXHAUSTIVE_EDGES = 8
DEFAULT_MAX_STORED = 10


@dataclass(frozen=True)
class SweepEntry:
    family: str
    params: dict[str, int]
    vertex_count: int | None
    edge_count: int | None
    antimagic: bool | None
    collision_group_count: int
    error: str | None


@dataclass(frozen=True)
class Counterexample:
    labels: tuple[int, ...]
    collisions: tuple[tuple[int, tuple[int, ...]], ...]


@dataclass(frozen=True)
class CensusResult:
    graph: Graph
    mode: str
    seed: int | None
    sample_size: int | None
    total_tested: int
    antimagic_count: int
    counterexamples: tuple[Counterexample, ...]
    counterexample_total: int  # exact, even when storage is capped


def sweep_ordered(
    family: str, values: Iterable[int], fixed: dict[str, int] | None = None
) -> list[SweepEntry]:
    """Build, label, and verify the family at each parameter value.

    Per-parameter failures (unlabelable graphs, cap overruns) are recorded
    as entries and the sweep continues.
    """
    param = FAMILY_SWEEP_PARAM[family]
    entries = []
    for value in values:
        params = {**(fixed or {}), param: value}
        try:
            graph = build_family(family, **params)
            report = vertex_weights(graph, label_ordered(graph))
        except (AntimagicError, ValueError) as exc:
            entries.append(
                SweepEntry(family, params, None, None, None, 0, f"{type(exc).__name__}: {exc}")
            )
            continue
        entries.append(
            SweepEntry(
                family,
                params,
                graph.vertex_count,
                graph.edge_count,
                report.antimagic,
                report.collision_group_count,
                None,
            )
        )
    return entries


def _weights_distinct(graph: Graph, labels: tuple[int, ...]) -> tuple[bool, list[int]]:
    weights = [0] * graph.vertex_count
    for (u, v), label in zip(graph.edges, labels):
        weights[u] += label
        weights[v] += label
    return len(set(weights)) == graph.vertex_count, weights


def _collision_groups(weights: list[int]) -> tuple[tuple[int, tuple[int, ...]], ...]:
    by_weight: dict[int, list[int]] = {}
    for v, w in enumerate(weights):
        by_weight.setdefault(w, []).append(v)
    return tuple(
        (w, tuple(vs)) for w, vs in sorted(by_weight.items()) if len(vs) > 1
    )


def permutation_census(
    graph: Graph,
    mode: str,
    *,
    seed: int | None = None,
    sample_size: int | None = None,
    max_stored: int = DEFAULT_MAX_STORED,
) -> CensusResult:
    """Count antimagic assignments among permutations of the first e primes.

    Exhaustive mode enumerates all e! assignments (identity first) and is
    limited to e <= 8 edges; sampled mode draws `sample_size` seeded shuffles.
    """
    if mode == EXHAUSTIVE and graph.edge_count > MAX_EXHAUSTIVE_EDGES:
        raise CensusTooLargeError(
            f"{graph.edge_count} edges exceeds the exhaustive limit of "
            f"{MAX_EXHAUSTIVE_EDGES}"
        )
    base = list(first_m_primes(graph.edge_count).first(graph.edge_count))

    if mode == EXHAUSTIVE:
        assignments: Iterable[tuple[int, ...]] = permutations(base)
    elif mode == SAMPLED:
        if seed is None or sample_size is None:
            raise ValueError("sampled mode requires both seed and sample_size")

        def _draws() -> Iterable[tuple[int, ...]]:
            rng = random.Random(seed)
            for _ in range(sample_size):
                draw = base[:]
                rng.shuffle(draw)
                yield tuple(draw)

        assignments = _draws()
    else:
        raise ValueError(f"unknown census mode {mode!r}")

    total = good = bad = 0
    stored: list[Counterexample] = []
    for labels in assignments:
        total += 1
        ok, weights = _weights_distinct(graph, labels)
        if ok:
            good += 1
        else:
            bad += 1
            if len(stored) < max_stored:
                stored.append(Counterexample(tuple(labels), _collision_groups(weights)))

    return CensusResult(
        graph=graph,
        mode=mode,
        seed=seed if mode == SAMPLED else None,
        sample_size=sample_size if mode == SAMPLED else None,
        total_tested=total,
        antimagic_count=good,
        counterexamples=tuple(stored),
        counterexample_total=bad,
    )
