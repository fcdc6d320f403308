"""Closed-form vertex values for ordered-labeled perfect binary trees.

With edges labeled bottom-to-top, left-to-right by consecutive primes, every
vertex weight is a short sum of primes at computable 1-based edge indices:

- leaf at position n: the n-th prime itself;
- root of a level-l tree: primes at indices e-1 and e, where e = 2^(l+1) - 2;
- internal vertex (level k from bottom, position n): children edges at
  (2n-1) + S and 2n + S with S = sum(2^(l-i) for i in 0..k-2) (S = 0 when
  k = 1), parent edge at sum(2^(l-i) for i in 0..k-1) + n.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import CapacityError, InsufficientPrimesError, UnlabelableGraphError
from .graphs import TreeAddress
from .primes import PrimeTable

# Counts are kept within uint64 so they serialize alongside weights.
_MAX_TREE_LEVEL = 62


def num_vertices(tree_level: int) -> int:
    """Vertex count of a perfect binary tree: 2^(l+1) - 1."""
    _check_level(tree_level)
    return 2 ** (tree_level + 1) - 1


def num_edges(tree_level: int) -> int:
    """Edge count of a perfect binary tree: 2^(l+1) - 2."""
    _check_level(tree_level)
    return 2 ** (tree_level + 1) - 2


def _check_level(tree_level: int) -> None:
    if tree_level < 0:
        raise ValueError("tree level must be nonnegative")
    if tree_level > _MAX_TREE_LEVEL:
        raise CapacityError(f"tree level {tree_level} exceeds cap of {_MAX_TREE_LEVEL}")


@dataclass(frozen=True)
class TreeFormulaContext:
    """A tree level paired with a prime table long enough to cover its edges."""

    tree_level: int
    primes: PrimeTable

    def __post_init__(self) -> None:
        if self.tree_level < 1:
            raise UnlabelableGraphError("a level-0 tree has no edges, so no labeled values")
        needed = num_edges(self.tree_level)
        if self.primes.count < needed:
            raise InsufficientPrimesError(
                f"table holds {self.primes.count} primes, level {self.tree_level} needs {needed}"
            )


def incident_edge_indices(
    tree_level: int, level_from_bottom: int, position: int
) -> tuple[int, ...]:
    """1-based edge indices incident to the addressed vertex (internal or root only)."""
    addr = TreeAddress(tree_level, level_from_bottom, position)  # validates ranges
    l, k, n = addr.tree_level, addr.level_from_bottom, addr.position
    if k < 1:
        raise ValueError("leaves have a single incident edge; use node_value for their value")
    if k == l:
        e = num_edges(l)
        return (e - 1, e)
    below = sum(2 ** (l - i) for i in range(k - 1))
    parent = sum(2 ** (l - i) for i in range(k)) + n
    return (2 * n - 1 + below, 2 * n + below, parent)


def node_value(ctx: TreeFormulaContext, address: TreeAddress) -> int:
    """Closed-form weight of the addressed vertex under ordered labeling."""
    if address.tree_level != ctx.tree_level:
        raise ValueError(
            f"address is for level {address.tree_level}, context is level {ctx.tree_level}"
        )
    if address.level_from_bottom == 0:
        return ctx.primes.nth(address.position)
    indices = incident_edge_indices(
        address.tree_level, address.level_from_bottom, address.position
    )
    return sum(ctx.primes.nth(i) for i in indices)
