"""Exact invariants of edge ideals of perfect binary trees and other small graphs."""
from .covers import (
    CoverCensus,
    census,
    count_maximal_independent_sets_tree,
    enumerate_minimal_covers,
    maximum_matching_size,
    min_maximal_independent_set_size,
    vertex_cover_number,
)
from .errors import (
    HeightTooLarge,
    NotATree,
    NotBipartite,
    ParseError,
    SelfLoop,
    TooLargeForEnumeration,
    TooLargeForHochster,
    TooManyVertices,
    TreeIdealsError,
)
from .formulas import (
    InvariantRecord,
    alpha_closed,
    beta_closed,
    depth_closed,
    m_recursive,
    pd_closed,
    record,
)
from .graph import (
    Graph,
    TreeShape,
    VertexSet,
    induced_subgraph,
    is_tree,
    parse_edge_list,
    perfect_binary_tree,
    random_tree,
    serialize_edge_list,
)
from .hochster import (
    BettiTable,
    SimplicialComplex,
    finely_graded_betti_values,
    graded_betti,
    independence_complex,
    reduced_homology_ranks,
)
from .ideal import (
    MonomialIdeal,
    PrimeComponent,
    edge_ideal,
    krull_dimension,
    num_associated_primes,
    primary_decomposition,
)
from .linalg import Field

__version__ = "0.1.0"
