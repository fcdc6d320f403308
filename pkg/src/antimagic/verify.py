"""Exact vertex weights, antimagic verdicts, and collision diagnostics."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .errors import GraphLabelingMismatchError, WeightOverflowError
from .graphs import Graph, perfect_binary_tree, tree_address
from .labeling import ORDERED, EdgeLabeling, label_ordered
from .primes import PrimeTable, first_m_primes, is_prime

_UINT64_LIMIT = 2**64

# Pathological inputs can produce huge numbers of collision groups; the
# report stores at most this many while keeping the exact total.
DEFAULT_MAX_COLLISION_GROUPS = 100


@dataclass(frozen=True)
class WeightReport:
    """Per-vertex weights plus the distinctness verdict."""

    weights: tuple[int, ...]
    antimagic: bool
    collisions: tuple[tuple[int, tuple[int, ...]], ...]  # (weight, vertex ids)
    collision_group_count: int  # exact, even when `collisions` is capped
    max_weight: int


@dataclass(frozen=True)
class Verdict:
    antimagic: bool
    collisions: tuple[tuple[int, tuple[int, ...]], ...]


@dataclass(frozen=True)
class Violation:
    kind: str  # "length" | "duplicate" | "non-prime" | "non-consecutive"
    position: int | None  # 1-based label position, None for whole-labeling issues
    message: str


@dataclass(frozen=True)
class ValidityReport:
    valid: bool
    violations: tuple[Violation, ...]


def vertex_weights(
    graph: Graph,
    labeling: EdgeLabeling,
    *,
    max_collision_groups: int = DEFAULT_MAX_COLLISION_GROUPS,
) -> WeightReport:
    """Sum incident labels per vertex, exactly, and group any repeated weights.

    Collision groups are sorted by weight, vertex ids ascending within a group.
    """
    if max_collision_groups < 1:
        raise ValueError("max_collision_groups must be at least 1")
    if labeling.graph != graph:
        raise GraphLabelingMismatchError("labeling belongs to a different graph")
    if sum(labeling.labels) >= _UINT64_LIMIT:
        raise WeightOverflowError("label sum exceeds the 64-bit unsigned weight range")

    weights = [0] * graph.vertex_count
    for (u, v), label in zip(graph.edges, labeling.labels):
        weights[u] += label
        weights[v] += label

    # Sort-based duplicate detection: deterministic and O(V log V).
    order = sorted(range(graph.vertex_count), key=weights.__getitem__)
    groups: list[tuple[int, tuple[int, ...]]] = []
    group_count = 0
    i = 0
    while i < len(order):
        j = i + 1
        w = weights[order[i]]
        while j < len(order) and weights[order[j]] == w:
            j += 1
        if j - i > 1:
            group_count += 1
            if len(groups) < max_collision_groups:
                groups.append((w, tuple(sorted(order[i:j]))))
        i = j

    return WeightReport(
        weights=tuple(weights),
        antimagic=group_count == 0,
        collisions=tuple(groups),
        collision_group_count=group_count,
        max_weight=max(weights),
    )


def check_antimagic(report: WeightReport) -> Verdict:
    """Project a weight report onto its verdict."""
    return Verdict(antimagic=report.antimagic, collisions=report.collisions)


def validate_labeling(graph: Graph, labeling: EdgeLabeling) -> ValidityReport:
    """Audit a labeling: length, distinctness, primality, and (ordered mode)
    that the labels are exactly the consecutive primes from 2.

    Violations are reported as data; nothing raises.
    """
    violations: list[Violation] = []
    labels = labeling.labels
    if len(labels) != graph.edge_count:
        violations.append(
            Violation(
                "length",
                None,
                f"{len(labels)} labels for {graph.edge_count} edges",
            )
        )
    seen: set[int] = set()
    for pos, value in enumerate(labels, start=1):
        if value in seen:
            violations.append(Violation("duplicate", pos, f"label {value} repeated"))
        seen.add(value)
        if not is_prime(value):
            violations.append(Violation("non-prime", pos, f"label {value} is not prime"))
    if labeling.mode == ORDERED and not any(v.kind == "length" for v in violations):
        expected = first_m_primes(len(labels)).first(len(labels))
        for pos, (got, want) in enumerate(zip(labels, expected), start=1):
            if got != want:
                violations.append(
                    Violation(
                        "non-consecutive",
                        pos,
                        f"expected prime {want} at position {pos}, found {got}",
                    )
                )
    return ValidityReport(valid=not violations, violations=tuple(violations))


@dataclass(frozen=True)
class TripleOverlapReport:
    """Pairwise audit of internal non-root vertices of an ordered-labeled perfect tree.

    Each such vertex has exactly three incident labels. For every pair, the pair
    is oriented so the first vertex has the smaller maximum label; the
    smaller-pair-sum check then asks whether the first vertex's two smallest
    labels sum strictly below the second's.
    """

    tree_level: int
    internal_vertex_count: int
    pair_count: int
    shared_label_violations: int  # pairs sharing 2+ labels
    duplicate_weight_pairs: int
    smaller_pair_sum_violations: int

    @property
    def smaller_pair_sum_holds(self) -> bool:
        return self.smaller_pair_sum_violations == 0


def tree_triple_report(
    tree_level: int, primes: PrimeTable | None = None
) -> TripleOverlapReport:
    """Exhaustive pairwise check over internal non-root vertices of an
    ordered-labeled perfect binary tree of the given level."""
    graph = perfect_binary_tree(tree_level)
    labeling = label_ordered(graph, primes) if graph.edge_count else None

    vertices = [
        v
        for v in range(graph.vertex_count)
        if 1 <= tree_address(tree_level, v).level_from_bottom < tree_level
    ]
    triples = []
    for v in vertices:
        labels = sorted(labeling.labels[e] for e in graph.adjacency[v])
        triples.append((frozenset(labels), sum(labels), labels[-1], labels[0] + labels[1]))

    shared = dupes = sum_violations = pairs = 0
    for a, b in combinations(triples, 2):
        pairs += 1
        if len(a[0] & b[0]) > 1:
            shared += 1
        if a[1] == b[1]:
            dupes += 1
        lo, hi = (a, b) if a[2] < b[2] else (b, a)
        if lo[3] >= hi[3]:
            sum_violations += 1

    return TripleOverlapReport(
        tree_level=tree_level,
        internal_vertex_count=len(vertices),
        pair_count=pairs,
        shared_label_violations=shared,
        duplicate_weight_pairs=dupes,
        smaller_pair_sum_violations=sum_violations,
    )
