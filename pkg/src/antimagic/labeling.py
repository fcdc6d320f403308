"""Assign distinct prime labels to a graph's canonical edge sequence."""

from __future__ import annotations

import random
from dataclasses import dataclass

from .errors import (
    DuplicateLabelError,
    InsufficientPrimesError,
    LabelLengthError,
    NonPrimeLabelError,
    UnlabelableGraphError,
)
from .graphs import Graph
from .primes import PrimeTable, first_m_primes, is_prime

ORDERED = "ordered"
ARBITRARY = "arbitrary"
EXPLICIT = "explicit"


@dataclass(frozen=True)
class EdgeLabeling:
    """Bijection from canonical edges to distinct primes; labels[i] belongs to edge i."""

    graph: Graph
    labels: tuple[int, ...]
    mode: str
    seed: int | None = None


def _base_labels(graph: Graph, primes: PrimeTable | None) -> list[int]:
    if graph.edge_count == 0:
        raise UnlabelableGraphError(f"{graph.family} graph has no edges to label")
    e = graph.edge_count
    if primes is None:
        primes = first_m_primes(e)
    elif primes.count < e:
        raise InsufficientPrimesError(f"table holds {primes.count} primes, need {e}")
    return list(primes.first(e))


def label_ordered(graph: Graph, primes: PrimeTable | None = None) -> EdgeLabeling:
    """Give the i-th canonical edge the i-th prime (2 to the edge count's prime)."""
    return EdgeLabeling(graph, tuple(_base_labels(graph, primes)), ORDERED)


def label_arbitrary(graph: Graph, seed: int, primes: PrimeTable | None = None) -> EdgeLabeling:
    """Seeded Fisher-Yates shuffle (Mersenne Twister) of the first e primes.

    Reproducible for a fixed (graph, seed) on any platform.
    """
    labels = _base_labels(graph, primes)
    random.Random(seed).shuffle(labels)
    return EdgeLabeling(graph, tuple(labels), ARBITRARY, seed=seed)


def label_explicit(graph: Graph, assignment: list[int] | tuple[int, ...]) -> EdgeLabeling:
    """Adopt a caller-supplied sequence of distinct primes verbatim."""
    if graph.edge_count == 0:
        raise UnlabelableGraphError(f"{graph.family} graph has no edges to label")
    labels = tuple(int(x) for x in assignment)
    if len(labels) != graph.edge_count:
        raise LabelLengthError(
            f"assignment has {len(labels)} labels, graph has {graph.edge_count} edges"
        )
    seen: set[int] = set()
    for pos, value in enumerate(labels, start=1):
        if value in seen:
            raise DuplicateLabelError(f"label {value} repeated at position {pos}")
        seen.add(value)
        if not is_prime(value):
            raise NonPrimeLabelError(f"label {value} at position {pos} is not prime")
    return EdgeLabeling(graph, labels, EXPLICIT)
