"""Prime-number antimagic edge labelings: generators, verification, audit."""

from .errors import (
    AntimagicError,
    CapacityError,
    CensusTooLargeError,
    DuplicateLabelError,
    GraphLabelingMismatchError,
    InsufficientPrimesError,
    InvalidAddressError,
    LabelingError,
    LabelLengthError,
    NonPrimeLabelError,
    UnlabelableGraphError,
    UnsupportedFormatError,
    WeightOverflowError,
)
from .explore import CensusResult, Counterexample, SweepEntry, permutation_census, sweep_ordered
from .formulas import (
    TreeFormulaContext,
    incident_edge_indices,
    node_value,
    num_edges,
    num_vertices,
)
from .graphs import (
    Graph,
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
from .labeling import EdgeLabeling, label_arbitrary, label_explicit, label_ordered
from .primes import PrimeTable, first_m_primes, is_prime, sieve_upper_bound
from .serialize import export, graph_from_json, labeling_from_json
from .table import Erratum, TableRow, errata, reproduce_table
from .verify import (
    ValidityReport,
    Verdict,
    WeightReport,
    check_antimagic,
    tree_triple_report,
    validate_labeling,
    vertex_weights,
)

__version__ = "0.1.0"
