"""Immutable graphs for every supported family, each with a fixed canonical edge order.

Canonical orders (1-based edge index = position in `Graph.edges` + 1):

- pbt / cbt: deepest level first, left-to-right within a level, each edge
  identified by its child endpoint and stored as (parent, child).
- complete: lexicographic (i, j) with i < j over internal 0-based ids.
- bipartite: u ascending within the first part, then v ascending.
- ladder: bottom-rail edges left-to-right, top-rail edges, then rungs.
- wheel: rim cycle edges in cycle order, then spokes in rim order.
- hypercube: lexicographic on (min, max) of the endpoints' binary labels.
- double-star: first center's leaf edges, the bridge, second center's leaf edges.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .errors import CapacityError, InvalidAddressError

# Caps are expressed in edges; --high-memory raises the default.
DEFAULT_EDGE_CAP = 2**18
HIGH_MEMORY_EDGE_CAP = 2**26


@dataclass(frozen=True)
class TreeAddress:
    """Position of a vertex inside a perfect binary tree.

    tree_level: depth of the tree (root to leaf).
    level_from_bottom: 0 for leaves, tree_level for the root.
    position: 1-based left-to-right index within that level.
    """

    tree_level: int
    level_from_bottom: int
    position: int

    def __post_init__(self) -> None:
        l, k, n = self.tree_level, self.level_from_bottom, self.position
        if l < 0:
            raise InvalidAddressError(f"negative tree level {l}")
        if not 0 <= k <= l:
            raise InvalidAddressError(f"level_from_bottom {k} outside 0..{l}")
        if not 1 <= n <= 2 ** (l - k):
            raise InvalidAddressError(
                f"position {n} outside 1..{2 ** (l - k)} at level_from_bottom {k}"
            )


@dataclass(frozen=True)
class Graph:
    """Immutable vertex/edge structure; edge order is the family's canonical one."""

    family: str
    params: dict[str, int]
    vertex_count: int
    edges: tuple[tuple[int, int], ...]

    @cached_property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        """Per-vertex tuple of incident edge indices (0-based into `edges`)."""
        inc: list[list[int]] = [[] for _ in range(self.vertex_count)]
        for i, (u, v) in enumerate(self.edges):
            inc[u].append(i)
            inc[v].append(i)
        return tuple(tuple(lst) for lst in inc)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def vertex_label(self, v: int) -> str:
        """Family-specific display name (1-based for complete graphs, etc.)."""
        if not 0 <= v < self.vertex_count:
            raise IndexError(f"vertex {v} out of range")
        if self.family == "complete":
            return str(v + 1)
        if self.family == "bipartite":
            a = self.params["a"]
            return f"u{v + 1}" if v < a else f"v{v - a + 1}"
        if self.family == "ladder":
            n = self.params["n"]
            return f"b{v + 1}" if v < n else f"t{v - n + 1}"
        if self.family == "wheel":
            return "hub" if v == self.params["n"] else f"r{v + 1}"
        if self.family == "hypercube":
            return format(v, f"0{self.params['d']}b")
        return str(v)


def _check_cap(edge_count: int, cap: int | None) -> None:
    if cap is not None and edge_count > cap:
        raise CapacityError(f"{edge_count} edges exceeds cap of {cap}")


def perfect_binary_tree(level: int, *, cap: int | None = DEFAULT_EDGE_CAP) -> Graph:
    """Perfect binary tree with all leaves at depth `level`.

    Vertices are heap-numbered (root 0, children of i at 2i+1, 2i+2).
    """
    if level < 0:
        raise ValueError("level must be nonnegative")
    _check_cap(2 ** (level + 1) - 2, cap)
    vertex_count = 2 ** (level + 1) - 1
    edges = []
    for depth in range(level, 0, -1):
        for child in range(2**depth - 1, 2 ** (depth + 1) - 1):
            edges.append(((child - 1) // 2, child))
    return Graph("pbt", {"level": level}, vertex_count, tuple(edges))


def complete_binary_tree(
    levels: int, last_level_count: int, *, cap: int | None = DEFAULT_EDGE_CAP
) -> Graph:
    """Perfect tree of depth levels-1 plus `last_level_count` deepest leaves packed left-to-right."""
    if levels < 1:
        raise ValueError("levels must be positive")
    if not 1 <= last_level_count <= 2**levels:
        raise ValueError(f"last_level_count {last_level_count} outside 1..{2 ** levels}")
    full = 2**levels - 1
    _check_cap(full - 1 + last_level_count, cap)
    vertex_count = full + last_level_count
    edges = []
    for child in range(full, full + last_level_count):
        edges.append(((child - 1) // 2, child))
    for depth in range(levels - 1, 0, -1):
        for child in range(2**depth - 1, 2 ** (depth + 1) - 1):
            edges.append(((child - 1) // 2, child))
    params = {"levels": levels, "last_level_count": last_level_count}
    return Graph("cbt", params, vertex_count, tuple(edges))


def complete_graph(n: int, *, cap: int | None = DEFAULT_EDGE_CAP) -> Graph:
    if n < 2:
        raise ValueError("complete graph needs n >= 2")
    _check_cap(n * (n - 1) // 2, cap)
    edges = tuple((i, j) for i in range(n) for j in range(i + 1, n))
    return Graph("complete", {"n": n}, n, edges)


def complete_bipartite(a: int, b: int, *, cap: int | None = DEFAULT_EDGE_CAP) -> Graph:
    if a < 1 or b < 1:
        raise ValueError("both parts must be nonempty")
    _check_cap(a * b, cap)
    edges = tuple((u, a + v) for u in range(a) for v in range(b))
    return Graph("bipartite", {"a": a, "b": b}, a + b, edges)


def ladder(n: int, *, cap: int | None = DEFAULT_EDGE_CAP) -> Graph:
    """Two parallel paths of n vertices joined by n rungs (3n-2 edges)."""
    if n < 1:
        raise ValueError("ladder needs n >= 1")
    _check_cap(3 * n - 2, cap)
    bottom = [(i, i + 1) for i in range(n - 1)]
    top = [(n + i, n + i + 1) for i in range(n - 1)]
    rungs = [(i, n + i) for i in range(n)]
    return Graph("ladder", {"n": n}, 2 * n, tuple(bottom + top + rungs))


def wheel(n: int, *, cap: int | None = DEFAULT_EDGE_CAP) -> Graph:
    """Cycle of n rim vertices (ids 0..n-1) plus a hub (id n) joined to every rim vertex."""
    if n < 3:
        raise ValueError("wheel needs at least 3 rim vertices")
    _check_cap(2 * n, cap)
    rim = [(i, (i + 1) % n) for i in range(n)]
    spokes = [(n, i) for i in range(n)]
    return Graph("wheel", {"n": n}, n + 1, tuple(rim + spokes))


def hypercube(d: int, *, cap: int | None = DEFAULT_EDGE_CAP) -> Graph:
    if d < 1:
        raise ValueError("hypercube needs d >= 1")
    _check_cap(d * 2 ** (d - 1), cap)
    edges = []
    for u in range(2**d):
        for bit in range(d):
            v = u | (1 << bit)
            if v != u:
                edges.append((u, v))
    return Graph("hypercube", {"d": d}, 2**d, tuple(edges))


def double_star(a: int, b: int, *, cap: int | None = DEFAULT_EDGE_CAP) -> Graph:
    """Two adjacent centers (ids 0, 1) with a and b pendant leaves respectively."""
    if a < 1 or b < 1:
        raise ValueError("each center needs at least one leaf")
    _check_cap(a + b + 1, cap)
    first = [(0, 2 + i) for i in range(a)]
    second = [(1, 2 + a + i) for i in range(b)]
    edges = tuple(first + [(0, 1)] + second)
    return Graph("double-star", {"a": a, "b": b}, a + b + 2, edges)


FAMILY_GENERATORS = {
    "pbt": perfect_binary_tree,
    "cbt": complete_binary_tree,
    "complete": complete_graph,
    "bipartite": complete_bipartite,
    "ladder": ladder,
    "wheel": wheel,
    "hypercube": hypercube,
    "double-star": double_star,
}

# Parameter swept by the explorer / CLI range mode, per family.
FAMILY_SWEEP_PARAM = {
    "pbt": "level",
    "cbt": "last_level_count",
    "complete": "n",
    "bipartite": "b",
    "ladder": "n",
    "wheel": "n",
    "hypercube": "d",
    "double-star": "b",
}


def build_family(family: str, *, cap: int | None = DEFAULT_EDGE_CAP, **params: int) -> Graph:
    """Construct a graph by family name and keyword parameters."""
    try:
        generator = FAMILY_GENERATORS[family]
    except KeyError:
        raise ValueError(f"unknown family {family!r}") from None
    return generator(**params, cap=cap)


def tree_vertex_id(address: TreeAddress) -> int:
    """Heap id of the addressed vertex in perfect_binary_tree(address.tree_level)."""
    depth = address.tree_level - address.level_from_bottom
    return 2**depth - 1 + address.position - 1


def tree_address(tree_level: int, vertex_id: int) -> TreeAddress:
    """Inverse of tree_vertex_id for perfect_binary_tree(tree_level)."""
    if not 0 <= vertex_id < 2 ** (tree_level + 1) - 1:
        raise InvalidAddressError(f"vertex {vertex_id} outside tree of level {tree_level}")
    depth = (vertex_id + 1).bit_length() - 1
    position = vertex_id - (2**depth - 1) + 1
    return TreeAddress(tree_level, tree_level - depth, position)
