"""Reproduce and audit the published table of perfect-binary-tree vertex weights.

Every cell is recomputed from the closed forms (cross-checked against direct
summation for small levels) and compared against the embedded published
values. Disagreements are surfaced as suspected errata; the published value
is never silently "corrected" away and the recomputed value never replaced.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import CapacityError
from .formulas import TreeFormulaContext, node_value, num_edges, num_vertices
from .graphs import TreeAddress, perfect_binary_tree, tree_vertex_id
from .labeling import label_ordered
from .primes import PrimeTable, first_m_primes
from .verify import vertex_weights

DEFAULT_MAX_LEVEL = 20
HIGH_MEMORY_MAX_LEVEL = 24

# Direct-summation cross-check of the closed forms runs up to this level.
ORACLE_CHECK_LEVEL = 12

# Weight columns: (levels below the root, position within that level).
WEIGHT_COLUMNS = (
    ("w1,l-1", 1, 1),
    ("w2,l-1", 1, 2),
    ("w3,l-1", 1, 3),
    ("w1,l-2", 2, 1),
    ("w2,l-2", 2, 2),
    ("w3,l-2", 2, 3),
    ("w1,l-3", 3, 1),
)
COLUMNS = tuple(name for name, _, _ in WEIGHT_COLUMNS) + ("Root value", "No. of Nodes")

# Published rows, level 0..24; None marks a blank or "-" cell.
PUBLISHED_TABLE: dict[int, tuple[int | None, ...]] = {
    0: (None, None, None, None, None, None, None, 2, 1),
    1: (None, None, None, None, None, None, None, 5, 3),
    2: (16, 25, None, None, None, None, None, 24, 7),
    3: (28, 41, 55, 93, 111, None, None, 84, 15),
    4: (64, 73, 91, 217, 239, 255, 307, 222, 31),
    5: (142, 151, 173, 503, 529, 553, 725, 576, 63),
    6: (318, 329, 355, 1139, 1189, 1219, 1647, 1392, 127),
    7: (732, 745, 763, 2631, 2663, 2695, 3779, 3216, 255),
    8: (1626, 1639, 1661, 5907, 5957, 6001, 8491, 7280, 511),
    9: (3678, 3689, 3715, 13201, 13245, 13271, 18685, 16240, 1023),
    10: (8172, 8183, 8203, 29249, 29287, 29347, 41177, 35676, 2047),
    11: (17886, 17903, 17927, 63955, 64013, 64043, 89871, 77712, 4095),
    12: (38896, 38915, 38941, 138755, 138839, 138863, 194431, 267970, 8191),
    13: (84052, 84065, 84083, 299643, 299681, 299737, 418823, 360964, 16383),
    14: (180516, 180545, 180563, 642763, 642817, 642857, 896883, 772098, 32767),
    15: (386122, 386131, 386153, 1372939, 1372987, 1373043, 1911961, 1643124, 65535),
    16: (821652, 821663, 821687, 2919047, 2919091, 2919267, 4058611, 3485014, 131071),
    17: (1742544, 1742575, 1742603, 6184563, 6184641, 6184689, 8586745, 7362108, 262143),
    18: (3681154, 3681163, 3681215, 13056451, 13056553, 13056643, 18107685, 15508020, 524287),
    19: (7754086, 7754125, 7754143, 27481693, 27481769, 27481885, 38069135, 32580032, 1048575),
    20: (16290078, 16290101, 16290143, 57697399, 57697481, 57697523, 79843061, 68272008, 2097151),
    21: (34136064, 34136089, 34136107, 120840189, 120840259, 120840355, 167071827, 142757070, 4194303),
    22: (71378608, 71378633, 71378665, 252538565, 252538645, 252538709, 348849659, 297896236, 8388607),
    23: (148948146, 148948169, 148948195, 526748179, 526748251, 526748303, 727091047, 620496456, 16777215),
    24: (310248256, 310248355, 310248371, 1096697093, 1096697219, 1096697297, 1512761729, 1290310356, 33554431),
}


@dataclass(frozen=True)
class TableRow:
    level: int
    computed: tuple[int | None, ...]  # aligned with COLUMNS
    published: tuple[int | None, ...]

    def match(self, column: str) -> bool | None:
        """True/False where comparable; None when both sides are absent."""
        i = COLUMNS.index(column)
        c, p = self.computed[i], self.published[i]
        if c is None and p is None:
            return None
        return c == p

    @property
    def matches(self) -> tuple[bool | None, ...]:
        return tuple(self.match(col) for col in COLUMNS)


@dataclass(frozen=True)
class Erratum:
    level: int
    column: str
    published: int | None
    computed: int | None


def _row_addresses(level: int) -> list[TreeAddress | None]:
    """Addresses behind the weight and root columns; None where a cell is absent.

    A weight column j levels below the root addresses bottom-to-top level j;
    the cell exists only if that level sits strictly below the root (the root
    column covers it otherwise) and is wide enough for the position. A level-0
    tree has no edges, so even its root has no labeled value.
    """
    addresses: list[TreeAddress | None] = []
    for _, below_root, position in WEIGHT_COLUMNS:
        depth = level - below_root
        if depth >= 1 and 2**depth >= position:
            addresses.append(TreeAddress(level, below_root, position))
        else:
            addresses.append(None)
    addresses.append(TreeAddress(level, level, 1) if level >= 1 else None)
    return addresses


def _computed_row(level: int, primes: PrimeTable) -> tuple[int | None, ...]:
    ctx = TreeFormulaContext(level, primes) if level >= 1 else None
    cells = [None if a is None else node_value(ctx, a) for a in _row_addresses(level)]
    cells.append(num_vertices(level))
    return tuple(cells)


def _oracle_check(level: int, row: tuple[int | None, ...], primes: PrimeTable) -> None:
    """Assert each defined weight cell equals the direct-summation vertex weight."""
    graph = perfect_binary_tree(level)
    report = vertex_weights(graph, label_ordered(graph, primes))
    for cell, address, name in zip(row, _row_addresses(level), COLUMNS):
        if address is None:
            continue
        direct = report.weights[tree_vertex_id(address)]
        if cell != direct:
            raise RuntimeError(
                f"closed form disagrees with direct summation at level {level}, "
                f"{name}: {cell} != {direct}"
            )


def reproduce_table(
    max_level: int,
    *,
    high_memory: bool = False,
    primes: PrimeTable | None = None,
) -> list[TableRow]:
    """Recompute rows 0..max_level and pair them with the published values."""
    cap = HIGH_MEMORY_MAX_LEVEL if high_memory else DEFAULT_MAX_LEVEL
    if not 0 <= max_level <= cap:
        raise CapacityError(
            f"max_level {max_level} outside 0..{cap}"
            + ("" if high_memory else " (pass high_memory to go to 24)")
        )
    needed = num_edges(max_level)
    if primes is None or primes.count < needed:
        primes = first_m_primes(max(needed, 1), cap=2**26)

    rows = []
    for level in range(max_level + 1):
        computed = _computed_row(level, primes)
        if 1 <= level <= ORACLE_CHECK_LEVEL:
            _oracle_check(level, computed, primes)
        published = PUBLISHED_TABLE.get(level, (None,) * len(COLUMNS))
        rows.append(TableRow(level=level, computed=computed, published=published))
    return rows


def errata(rows: list[TableRow]) -> list[Erratum]:
    """Cells whose recomputed value disagrees with a published value."""
    found = []
    for row in rows:
        for column, computed, published in zip(COLUMNS, row.computed, row.published):
            if published is not None and computed != published:
                found.append(Erratum(row.level, column, published, computed))
    return found
